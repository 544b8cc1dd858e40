//! Matching generating polynomials.
//!
//! [`MatchingPolynomial`] holds the counts `φ(m, G)` of `m`-matchings, lowest
//! degree first. [`SignedPolynomial`] is the integer-coefficient ring used to
//! state differences of such polynomials exactly, and [`compare`] implements
//! the coefficientwise partial order.

mod engine;
mod permanent;
mod poly;

pub use engine::{
    matching_polynomial, matching_polynomial_bruteforce, MatchingEngine, DEFAULT_SLOT_CAP,
};
pub use permanent::{biadjacency, perm_m};
pub use poly::{
    binomial, compare, compare_signed, cycle_poly, path_poly, MatchingPolynomial, OrderRelation,
    SignedPolynomial,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("cycle length {0} is below 2")]
    CycleTooShort(usize),
    #[error("graph has {slots} edge slots, above the brute-force cap of {cap}")]
    SlotCapExceeded { slots: u64, cap: u64 },
    #[error("matching size {m} outside 1..={max}")]
    MatchingSizeOutOfRange { m: usize, max: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("polynomial has a negative coefficient at degree {0}")]
    NegativeCoefficient(usize),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
