//! Exact matching counts for regular bipartite graphs and multigraphs.
//!
//! The crate computes matching generating polynomials exactly, enumerates
//! small regular bipartite graphs and path/cycle unions up to isomorphism,
//! evaluates the expected matching counts of two random models as exact
//! rationals, and evaluates log-scale lower bounds and growth rates.

pub mod asymptotics;
pub mod canon;
pub mod enumerate;
pub mod expectations;
pub mod families;
pub mod graph;
pub mod matchpoly;
pub mod smallm;

pub use canon::CanonicalCode;
pub use graph::{GraphError, Multigraph};
pub use matchpoly::{MatchingPolynomial, OrderRelation, SignedPolynomial};
