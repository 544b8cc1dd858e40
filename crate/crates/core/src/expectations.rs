//! Expected `m`-matching counts of random `r`-regular bipartite multigraphs.
//!
//! Two models on `n + n` vertices are covered: the sum of `r` independent
//! uniform permutation matrices (expectation `E_1`), and the configuration
//! model pairing `nr` left stubs with `nr` right stubs uniformly (`E_2`).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Multigraph;
use crate::matchpoly::{binomial, matching_polynomial};

pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpectationError {
    #[error("{0}")]
    Domain(String),
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn ratio(num: BigUint, den: BigUint) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn check(m: u64, n: u64, r: u64) -> Result<(), ExpectationError> {
    if m == 0 || m > n || r == 0 {
        return Err(ExpectationError::Domain(format!(
            "(m, n, r) = ({m}, {n}, {r}): need 1 <= m <= n and r >= 1"
        )));
    }
    Ok(())
}

/// The most even split of `m` into `r` parts: `k` parts equal to `⌊m/r⌋`
/// first, the remaining `r − k` equal to `⌊m/r⌋ + 1`, where
/// `k = r⌈m/r⌉ − m` (zero when `r` divides `m`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalancedComposition {
    pub parts: Vec<u64>,
    pub split: u64,
}

impl BalancedComposition {
    pub fn new(m: u64, r: u64) -> Self {
        assert!(r >= 1, "at least one part");
        let q = m / r;
        if m.is_multiple_of(r) {
            return BalancedComposition {
                parts: vec![q; r as usize],
                split: 0,
            };
        }
        let split = r * m.div_ceil(r) - m;
        let parts = (0..r).map(|i| if i < split { q } else { q + 1 }).collect();
        BalancedComposition { parts, split }
    }
}

/// Composition weight `m! · Π (n − m_i)! / m_i!`: the number of ways, up to the
/// common factor, to realize an `m`-matching whose edges come from the
/// permutations in the amounts `m_1, …, m_r`.
pub fn composition_weight(parts: &[u64], n: u64) -> BigUint {
    let m: u64 = parts.iter().sum();
    let mut num = factorial(m);
    let mut den = BigUint::one();
    for &p in parts {
        num *= factorial(n - p);
        den *= factorial(p);
    }
    num / den
}

/// Partitions of `m` into at most `r` parts, nonincreasing.
fn partitions_at_most(m: u64, r: u64) -> Vec<Vec<u64>> {
    fn go(left: u64, max: u64, slots: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            go(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, r, &mut Vec::new(), &mut out);
    out
}

/// Number of distinct orderings of `parts` padded with zeros to length `r`.
fn arrangements(parts: &[u64], r: u64) -> BigUint {
    let mut counts = std::collections::BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0u64) += 1;
    }
    let zeros = r - parts.len() as u64;
    let mut den = factorial(zeros);
    for &c in counts.values() {
        den *= factorial(c);
    }
    factorial(r) / den
}

/// `E_1(m, n, r)`, the expected number of `m`-matchings of the sum of `r`
/// uniform `n × n` permutation matrices:
/// `C(n,m)² · Σ_{m_1+…+m_r=m} m!/(m_1!⋯m_r!) · Π (n − m_i)! · m! / (n!)^r`.
pub fn expected_e1(m: u64, n: u64, r: u64) -> Result<ExactRational, ExpectationError> {
    check(m, n, r)?;
    let nf = factorial(n);
    let fact: Vec<BigUint> = (0..=n)
        .scan(BigUint::one(), |acc, i| {
            if i > 0 {
                *acc *= i;
            }
            Some(acc.clone())
        })
        .collect();
    let sum = partitions_at_most(m, r)
        .into_par_iter()
        .map(|parts| {
            let mut w = arrangements(&parts, r) * &fact[m as usize];
            for i in 0..r as usize {
                let p = parts.get(i).copied().unwrap_or(0) as usize;
                w *= &fact[n as usize - p];
                w /= &fact[p];
            }
            w
        })
        .reduce(BigUint::zero, |a, b| a + b);
    let c = binomial(n, m);
    Ok(ratio(&c * &c * sum * &fact[m as usize], nf.pow(r as u32)))
}

/// Bounds on `E_1` for `2 ≤ r ≤ m ≤ n`: the lower bound is the term of the
/// balanced composition, the upper bound multiplies it by the number
/// `C(m + r − 1, r − 1)` of compositions.
pub fn e1_bounds(
    m: u64,
    n: u64,
    r: u64,
) -> Result<(ExactRational, ExactRational), ExpectationError> {
    if r < 2 || r > m || m > n {
        return Err(ExpectationError::Domain(format!(
            "(m, n, r) = ({m}, {n}, {r}): need 2 <= r <= m <= n"
        )));
    }
    let mu = BalancedComposition::new(m, r);
    let mut num = BigUint::one();
    let mut den = factorial(n).pow(r as u32 - 2) * factorial(n - m).pow(2);
    for &p in &mu.parts {
        num *= factorial(n - p);
        den *= factorial(p);
    }
    let lower = ratio(num, den);
    let count = BigInt::from(binomial(m + r - 1, r - 1));
    let upper = &lower * BigRational::from_integer(count);
    Ok((lower, upper))
}

/// `E_2(m, n, r) = C(n,m)² · r^{2m} · m! · (rn − m)! / (rn)!`, the expected
/// number of `m`-matchings in the configuration model.
pub fn expected_e2(m: u64, n: u64, r: u64) -> Result<ExactRational, ExpectationError> {
    check(m, n, r)?;
    let c = binomial(n, m);
    let rn = r * n;
    let num = &c * &c * BigUint::from(r).pow(2 * m as u32) * factorial(m);
    // (rn − m)! / (rn)! = 1 / ((rn − m + 1) ⋯ rn)
    let den = ((rn - m + 1)..=rn).fold(BigUint::one(), |acc, i| acc * i);
    Ok(ratio(num, den))
}

/// Generator for sample `stream` under `seed`; distinct streams are independent.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn bipartite(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Multigraph {
    let colors = (0..2 * n).map(|v| v >= n).collect();
    Multigraph::new(2 * n, edges.map(|(u, v)| (u, n + v, 1)))
        .and_then(|g| g.with_bipartition(colors))
        .expect("left-right edges form a bipartite multigraph")
}

/// Overlay of `r` uniform perfect matchings between `0..n` and `n..2n`.
pub fn permutation_model<R: Rng>(n: usize, r: usize, rng: &mut R) -> Multigraph {
    let mut edges = Vec::with_capacity(n * r);
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..r {
        perm.shuffle(rng);
        edges.extend(perm.iter().enumerate().map(|(i, &j)| (i, j)));
    }
    bipartite(n, edges.into_iter())
}

/// Uniform pairing of the `nr` left stubs with the `nr` right stubs; stub `i`
/// belongs to vertex `⌊i / r⌋` on its side.
pub fn configuration_model<R: Rng>(n: usize, r: usize, rng: &mut R) -> Multigraph {
    let mut mu: Vec<usize> = (0..n * r).collect();
    mu.shuffle(rng);
    bipartite(n, mu.iter().enumerate().map(|(i, &j)| (i / r, j / r)))
}

pub fn sample_permutation_model(n: usize, r: usize, seed: u64) -> Multigraph {
    permutation_model(n, r, &mut stream_rng(seed, 0))
}

pub fn sample_configuration_model(n: usize, r: usize, seed: u64) -> Multigraph {
    configuration_model(n, r, &mut stream_rng(seed, 0))
}

/// Which random model to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    Permutation,
    Configuration,
}

impl Model {
    pub fn sample<R: Rng>(self, n: usize, r: usize, rng: &mut R) -> Multigraph {
        match self {
            Model::Permutation => permutation_model(n, r, rng),
            Model::Configuration => configuration_model(n, r, rng),
        }
    }
}

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarlo {
    pub samples: u64,
    pub mean: f64,
    pub std_error: f64,
}

impl MonteCarlo {
    pub fn from_values(values: &[f64]) -> Self {
        let k = values.len() as f64;
        let mean = values.iter().sum::<f64>() / k;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0).max(1.0);
        MonteCarlo {
            samples: values.len() as u64,
            mean,
            std_error: (var / k).sqrt(),
        }
    }
}

const CHUNK: u64 = 1024;

/// Monte Carlo mean of `φ(m, G)` under `model`. Samples are drawn in fixed
/// chunks of 1024, chunk `c` using stream `c`, so the estimate depends on the
/// seed only.
pub fn monte_carlo_matchings(
    model: Model,
    m: usize,
    n: usize,
    r: usize,
    samples: u64,
    seed: u64,
) -> MonteCarlo {
    let chunks = samples.div_ceil(CHUNK);
    let values: Vec<f64> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = stream_rng(seed, c);
            let take = CHUNK.min(samples - c * CHUNK);
            (0..take)
                .map(|_| {
                    let g = model.sample(n, r, &mut rng);
                    let v = matching_polynomial(&g).coeff(m);
                    v.to_string().parse::<f64>().unwrap_or(f64::INFINITY)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    MonteCarlo::from_values(&values)
}
