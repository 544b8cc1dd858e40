//! Closed formulas for the number of `m`-matchings, `m ≤ 4`, of an
//! `r`-regular bipartite graph on `2n` vertices, and the largest possible
//! number of 4-cycles.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::expectations::{configuration_model, stream_rng, MonteCarlo};
use crate::matchpoly::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmallMError {
    #[error("{0}")]
    Domain(String),
    #[error("matching size {0} outside 1..=4")]
    MOutOfRange(u64),
    #[error("the 4-cycle count is required for m = 4")]
    MissingA4,
    #[error("a4 = {a4} exceeds the maximum {max}")]
    A4TooLarge { a4: u64, max: BigUint },
    #[error("no graph has these parameters (count would be {0})")]
    Infeasible(BigInt),
}

/// Parameters of an `r`-regular bipartite graph on `n + n` vertices with
/// `a4` four-cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SmallMInput {
    pub n: u64,
    pub r: u64,
    pub a4: Option<u64>,
}

impl SmallMInput {
    pub fn new(n: u64, r: u64, a4: Option<u64>) -> Result<Self, SmallMError> {
        if r < 2 || n < r {
            return Err(SmallMError::Domain(format!(
                "(n, r) = ({n}, {r}): need r >= 2 and n >= r"
            )));
        }
        if let Some(a4) = a4 {
            let max = a4_max(n, r).value;
            if BigUint::from(a4) > max {
                return Err(SmallMError::A4TooLarge { a4, max });
            }
        }
        Ok(SmallMInput { n, r, a4 })
    }
}

fn int(x: u64) -> BigInt {
    BigInt::from(x)
}

/// The `a4`-free part of the 4-matching count:
/// `n⁴r⁴/24 + n³r³(1−2r)/4 + n²r²(19−60r+52r²)/24 + nr(5/4 − 5r + 7r² − 7r³/2)`.
pub fn p1(n: u64, r: u64) -> BigInt {
    let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let nr = BigRational::from_integer(int(n * r));
    let r = BigRational::from_integer(int(r));
    let one = q(1, 1);
    let total = nr.pow(4) * q(1, 24)
        + nr.pow(3) * (&one - &r * q(2, 1)) * q(1, 4)
        + nr.pow(2) * (q(19, 1) - &r * q(60, 1) + r.pow(2) * q(52, 1)) * q(1, 24)
        + &nr * (q(5, 4) - &r * q(5, 1) + r.pow(2) * q(7, 1) - r.pow(3) * q(7, 2));
    assert!(total.is_integer(), "p1({nr}, {r}) is not an integer");
    total.to_integer()
}

/// `φ(G, m)` for `m ∈ {1, 2, 3, 4}` from `n`, `r` and, for `m = 4`, the number
/// of 4-cycles.
pub fn phi_closed(input: &SmallMInput, m: u64) -> Result<BigUint, SmallMError> {
    let (n, r) = (input.n, input.r);
    let nr = int(n * r);
    let value: BigInt = match m {
        1 => nr,
        2 => &nr * (&nr - int(2 * r - 1)) / 2,
        3 => {
            let b = |a: u64, k: u64| BigInt::from(binomial(a, k));
            b(n * r, 3)
                - int(2 * n) * b(r, 3)
                - &nr * int((r - 1) * (r - 1))
                - int(2 * n) * b(r, 2) * (nr - int(2 * r) - int(r - 2))
        }
        4 => p1(n, r) + int(input.a4.ok_or(SmallMError::MissingA4)?),
        _ => return Err(SmallMError::MOutOfRange(m)),
    };
    if value.is_negative() {
        return Err(SmallMError::Infeasible(value));
    }
    Ok(value.magnitude().clone())
}

/// Largest number of 4-cycles, `nr(r−1)²/4`, rounded down when not an
/// integer (`exact` is then false).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct A4Max {
    #[serde(serialize_with = "as_decimal")]
    pub value: BigUint,
    pub exact: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

pub fn a4_max(n: u64, r: u64) -> A4Max {
    let t = BigUint::from(n) * r * (r.saturating_sub(1)) * (r.saturating_sub(1));
    let rem = &t % 4u32;
    A4Max {
        value: t / 4u32,
        exact: rem.is_zero(),
    }
}

/// Monte Carlo estimate of the mean number of 4-cycles of a configuration
/// model sample conditioned on being simple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourCycleEstimate {
    pub estimate: MonteCarlo,
    /// samples drawn, including rejected non-simple ones
    pub drawn: u64,
}

/// Draws configuration model samples on `n + n` vertices, rejecting those with
/// a repeated edge, until `accepted` simple graphs were seen. Batches of 256
/// draws use one generator stream each and are consumed in stream order, so
/// the result depends only on the seed.
pub fn four_cycle_monte_carlo(n: usize, r: usize, accepted: u64, seed: u64) -> FourCycleEstimate {
    const BATCH: u64 = 256;
    let workers = rayon::current_num_threads().max(1) as u64;
    let mut values: Vec<f64> = Vec::with_capacity(accepted as usize);
    let mut drawn = 0;
    let mut next_stream = 0u64;
    while (values.len() as u64) < accepted {
        let batches: Vec<Vec<Option<u64>>> = (next_stream..next_stream + workers)
            .into_par_iter()
            .map(|stream| {
                let mut rng = stream_rng(seed, stream);
                (0..BATCH)
                    .map(|_| {
                        let g = configuration_model(n, r, &mut rng);
                        g.count_4cycles().ok()
                    })
                    .collect()
            })
            .collect();
        next_stream += workers;
        for v in batches.into_iter().flatten() {
            if values.len() as u64 == accepted {
                break;
            }
            drawn += 1;
            if let Some(c) = v {
                values.push(c as f64);
            }
        }
    }
    FourCycleEstimate {
        estimate: MonteCarlo::from_values(&values),
        drawn,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(n: u64, r: u64, a4: Option<u64>, m: u64) -> u64 {
        let v = phi_closed(&SmallMInput::new(n, r, a4).unwrap(), m).unwrap();
        v.to_string().parse().unwrap()
    }

    #[test]
    fn k33_and_q3() {
        assert_eq!(phi(3, 3, None, 1), 9);
        assert_eq!(phi(3, 3, None, 2), 18);
        assert_eq!(phi(3, 3, None, 3), 6);
        assert_eq!(p1(4, 3), BigInt::from(3));
        assert_eq!(phi(4, 3, Some(6), 4), 9);
    }

    #[test]
    fn p1_can_be_negative() {
        assert_eq!(p1(3, 3), BigInt::from(-9));
        assert_eq!(p1(2, 2), BigInt::from(-1));
        assert_eq!(p1(4, 2), BigInt::from(2));
        // C4 has one 4-cycle; without it the count would be negative
        assert_eq!(phi(2, 2, Some(1), 4), 0);
        assert!(matches!(
            phi_closed(&SmallMInput::new(2, 2, Some(0)).unwrap(), 4),
            Err(SmallMError::Infeasible(_))
        ));
    }

    #[test]
    fn p1_is_integral_on_a_grid() {
        for n in 1..60 {
            for r in 1..12 {
                p1(n, r);
            }
        }
    }

    #[test]
    fn a4_bounds() {
        assert_eq!(
            a4_max(3, 3),
            A4Max {
                value: 9u32.into(),
                exact: true
            }
        );
        assert_eq!(a4_max(4, 2).value, 2u32.into());
        let c6 = a4_max(3, 2);
        assert_eq!((c6.value, c6.exact), (1u32.into(), false));
    }

    #[test]
    fn monte_carlo_is_reproducible() {
        let a = four_cycle_monte_carlo(20, 3, 300, 1);
        assert_eq!(a, four_cycle_monte_carlo(20, 3, 300, 1));
        assert_eq!(a.estimate.samples, 300);
        assert!(a.drawn >= 300);
    }

    #[test]
    fn errors() {
        assert!(SmallMInput::new(2, 3, None).is_err());
        assert!(SmallMInput::new(3, 1, None).is_err());
        assert!(matches!(
            SmallMInput::new(3, 3, Some(10)),
            Err(SmallMError::A4TooLarge { .. })
        ));
        let input = SmallMInput::new(3, 3, None).unwrap();
        assert_eq!(phi_closed(&input, 4), Err(SmallMError::MissingA4));
        assert_eq!(phi_closed(&input, 5), Err(SmallMError::MOutOfRange(5)));
    }
}
