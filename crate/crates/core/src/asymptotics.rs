//! Log-scale evaluators for the matching growth rate `gh_r(p)` and for the
//! finite lower bounds on matching counts of regular bipartite graphs.
//!
//! Every quantity is a natural logarithm. Terms of the form `0 · log 0` are
//! taken to be zero.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::matchpoly::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptoticError {
    #[error("{0}")]
    Domain(String),
}

fn domain<T>(msg: String) -> Result<T, AsymptoticError> {
    Err(AsymptoticError::Domain(msg))
}

/// Natural logarithm of a nonnegative quantity; `zero` marks `log 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogValue {
    pub ln: f64,
    pub zero: bool,
}

impl LogValue {
    pub fn new(ln: f64) -> Self {
        LogValue { ln, zero: false }
    }

    pub fn of_zero() -> Self {
        LogValue {
            ln: f64::NEG_INFINITY,
            zero: true,
        }
    }

    pub fn exp(self) -> f64 {
        if self.zero {
            0.0
        } else {
            self.ln.exp()
        }
    }
}

/// Whether a per-graph logarithm is divided by the vertex count `2n` or by
/// the side size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    #[default]
    PerVertex,
    PerHalf,
}

impl Normalization {
    pub fn divisor(self, n: u64) -> f64 {
        match self {
            Normalization::PerVertex => 2.0 * n as f64,
            Normalization::PerHalf => n as f64,
        }
    }
}

/// `x · ln x` with `0 · ln 0 = 0`.
fn xlnx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `a · ln b` with the term dropped when `a = 0`.
fn xlny(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        0.0
    } else {
        a * b.ln()
    }
}

/// Natural log of a big integer (`-inf` for zero).
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.iter_u64_digits().next().unwrap_or(0) as f64).ln();
    }
    let shift = bits - 64;
    let top: BigUint = x >> shift;
    (top.iter_u64_digits().next().unwrap() as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive rational.
pub fn ln_rational(x: &BigRational) -> Result<f64, AsymptoticError> {
    if !x.is_positive() {
        return domain(format!("log of nonpositive {x}"));
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    Ok(ln_biguint(num) - ln_biguint(den))
}

/// `ln C(n, k)`. Exact big-integer evaluation up to `n = 1000`, summed logs
/// beyond.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    if n <= 1000 {
        return ln_biguint(&binomial(n, k));
    }
    (1..=k).map(|i| ((n - k + i) as f64 / i as f64).ln()).sum()
}

fn check_p(p: f64) -> Result<(), AsymptoticError> {
    if !(0.0..=1.0).contains(&p) {
        return domain(format!("p = {p} outside [0, 1]"));
    }
    Ok(())
}

/// `gh_r(p) = ½(p ln r − p ln p − 2(1−p) ln(1−p) + (r−p) ln(1 − p/r))`.
pub fn gh(r: u64, p: f64) -> Result<LogValue, AsymptoticError> {
    if r < 2 {
        return domain(format!("r = {r}: need r >= 2"));
    }
    check_p(p)?;
    let r = r as f64;
    let v = 0.5 * (p * r.ln() - xlnx(p) - 2.0 * xlnx(1.0 - p) + (r - p) * (-p / r).ln_1p());
    Ok(LogValue::new(v))
}

fn check_mnr(n: u64, r: u64, m: u64) -> Result<(), AsymptoticError> {
    if m == 0 || m > n || r == 0 {
        return domain(format!(
            "(n, r, m) = ({n}, {r}, {m}): need 1 <= m <= n, r >= 1"
        ));
    }
    Ok(())
}

/// Log of `(1 + 1/rn)^{rn−1} (1 − m/rn)^{rn−m} (mr/n)^m C(n,m)²`.
pub fn lmc_bound(n: u64, r: u64, m: u64) -> Result<LogValue, AsymptoticError> {
    check_mnr(n, r, m)?;
    let rn = (r * n) as f64;
    let first = (rn - 1.0) * (1.0 / rn).ln_1p();
    Ok(LogValue::new(first + conj_terms(n, r, m)))
}

fn conj_terms(n: u64, r: u64, m: u64) -> f64 {
    let rn = (r * n) as f64;
    let m_f = m as f64;
    let second = if r * n == m {
        0.0
    } else {
        (rn - m_f) * (-m_f / rn).ln_1p()
    };
    second + m_f * (m_f * r as f64 / n as f64).ln() + 2.0 * ln_binomial(n, m)
}

/// Log of `C(n,m)² ((nr − m)/nr)^{rn−m} (mr/n)^m`.
pub fn conjectured_lower_bound(n: u64, r: u64, m: u64) -> Result<LogValue, AsymptoticError> {
    check_mnr(n, r, m)?;
    Ok(LogValue::new(conj_terms(n, r, m)))
}

/// Perfect-matching lower bounds for `r`-regular bipartite graphs on `2n`
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerfectBounds {
    /// `n ln((r−1)^{r−1} / r^{r−2})`
    pub schrijver: LogValue,
    /// `ln(r!/r^r) + r(r−1) ln(r/(r−1))` plus the above
    pub gurvits: LogValue,
    /// set for `r = 2`, below the range where the first bound is usually quoted
    pub below_schrijver_range: bool,
}

pub fn perfect_matching_lower_bounds(n: u64, r: u64) -> Result<PerfectBounds, AsymptoticError> {
    if r < 2 || n == 0 {
        return domain(format!("(n, r) = ({n}, {r}): need n >= 1, r >= 2"));
    }
    let rf = r as f64;
    let schrijver = n as f64 * (xlnx(rf - 1.0) - (rf - 2.0) * rf.ln());
    let ln_fact: f64 = (2..=r).map(|i| (i as f64).ln()).sum();
    let gurvits = ln_fact - rf * rf.ln() + rf * (rf - 1.0) * (rf / (rf - 1.0)).ln() + schrijver;
    Ok(PerfectBounds {
        schrijver: LogValue::new(schrijver),
        gurvits: LogValue::new(gurvits),
        below_schrijver_range: r < 3,
    })
}

/// Right-hand side of the partial-matching bound for doubly stochastic
/// limits of `r`-regular matrices with `s` extra zero-one columns:
/// `½(−p ln p − 2(1−p) ln(1−p)) + ½((r+s−1) ln(1 − 1/(r+s)) − (s−1+p) ln(1 − (1−p)/s))`.
pub fn fg_bound(r: u64, s: u64, p: f64) -> Result<LogValue, AsymptoticError> {
    if r < 3 {
        return domain(format!("r = {r}: need r >= 3"));
    }
    if !(p > 0.0 && p <= 1.0) {
        return domain(format!("p = {p} outside (0, 1]"));
    }
    let first = 0.5 * (-xlnx(p) - 2.0 * xlnx(1.0 - p));
    let rs = (r + s) as f64;
    let sf = s as f64;
    let last = if s == 0 {
        if p != 1.0 {
            return domain(format!("s = 0 requires p = 1, got {p}"));
        }
        0.0
    } else {
        xlny(sf - 1.0 + p, 1.0 - (1.0 - p) / sf)
    };
    let second = 0.5 * ((rs - 1.0) * (-1.0 / rs).ln_1p() - last);
    Ok(LogValue::new(first + second))
}

/// Normalized log of the number of `m`-matchings of the cycle `C_{2n}`,
/// `ln(C(2n−m, m) + C(2n−m−1, m−1))`, the minimum over 2-regular bipartite
/// graphs on `2n` vertices.
pub fn entropy_proxy_cycle(
    n: u64,
    m: u64,
    norm: Normalization,
) -> Result<LogValue, AsymptoticError> {
    if m == 0 || m > n {
        return domain(format!("(n, m) = ({n}, {m}): need 1 <= m <= n"));
    }
    let two_n = 2 * n;
    let v = ln_binomial(two_n - m, m) + (two_n as f64 / (two_n - m) as f64).ln();
    Ok(LogValue::new(v / norm.divisor(n)))
}

/// Normalized log of an exact positive quantity attached to a graph on `2n`
/// vertices.
pub fn normalized_ln(x: &BigRational, n: u64, norm: Normalization) -> Result<f64, AsymptoticError> {
    Ok(ln_rational(x)? / norm.divisor(n))
}

/// `m! e^{m−1} / m^m`, the limit of `φ(G, m)` over the finite lower bound as
/// `n → ∞` for fixed `m`.
pub fn small_m_ratio_limit(m: u64) -> f64 {
    let ln_fact: f64 = (2..=m).map(|i| (i as f64).ln()).sum();
    (ln_fact + (m as f64 - 1.0) - m as f64 * (m as f64).ln()).exp()
}
