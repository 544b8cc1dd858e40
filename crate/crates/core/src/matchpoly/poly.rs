use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::PolyError;

/// Polynomial with nonnegative arbitrary-precision coefficients, lowest degree
/// first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MatchingPolynomial {
    coeffs: Vec<BigUint>,
}

/// Polynomial with signed arbitrary-precision coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedPolynomial {
    coeffs: Vec<BigInt>,
}

/// Outcome of the coefficientwise comparison of `f` against `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrderRelation {
    Equal,
    /// `f ≺ g`: every coefficient of `g - f` is nonnegative and `f ≠ g`.
    StrictlyLess,
    StrictlyGreater,
    Incomparable,
}

impl OrderRelation {
    pub fn reverse(self) -> Self {
        match self {
            OrderRelation::StrictlyLess => OrderRelation::StrictlyGreater,
            OrderRelation::StrictlyGreater => OrderRelation::StrictlyLess,
            other => other,
        }
    }

    /// `f ⪯ g`.
    pub fn is_le(self) -> bool {
        matches!(self, OrderRelation::Equal | OrderRelation::StrictlyLess)
    }

    /// `f ⪰ g`.
    pub fn is_ge(self) -> bool {
        matches!(self, OrderRelation::Equal | OrderRelation::StrictlyGreater)
    }
}

impl fmt::Display for OrderRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderRelation::Equal => "Equal",
            OrderRelation::StrictlyLess => "StrictlyLess",
            OrderRelation::StrictlyGreater => "StrictlyGreater",
            OrderRelation::Incomparable => "Incomparable",
        })
    }
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl MatchingPolynomial {
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        trim(&mut coeffs);
        MatchingPolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero() -> Self {
        MatchingPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        MatchingPolynomial {
            coeffs: vec![BigUint::one()],
        }
    }

    /// `1 + c·x`.
    pub fn edge(c: u32) -> Self {
        Self::new(vec![BigUint::one(), BigUint::from(c)])
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigUint> {
        self.coeffs
    }

    /// Coefficient of `x^m` (zero past the degree).
    pub fn coeff(&self, m: usize) -> BigUint {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        MatchingPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigUint) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn to_signed(&self) -> SignedPolynomial {
        SignedPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
                .collect(),
        }
    }
}

impl SignedPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        SignedPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        SignedPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        SignedPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `c·x^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(BigInt::from(c));
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        SignedPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl TryFrom<&SignedPolynomial> for MatchingPolynomial {
    type Error = PolyError;
    fn try_from(p: &SignedPolynomial) -> Result<Self, PolyError> {
        p.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_biguint().ok_or(PolyError::NegativeCoefficient(i)))
            .collect::<Result<Vec<_>, _>>()
            .map(MatchingPolynomial::new)
    }
}

impl From<&MatchingPolynomial> for SignedPolynomial {
    fn from(p: &MatchingPolynomial) -> Self {
        p.to_signed()
    }
}

fn add_coeffs<T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T>>(a: &[T], b: &[T]) -> Vec<T> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn mul_coeffs<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

impl Add for &MatchingPolynomial {
    type Output = MatchingPolynomial;
    fn add(self, rhs: &MatchingPolynomial) -> MatchingPolynomial {
        MatchingPolynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul for &MatchingPolynomial {
    type Output = MatchingPolynomial;
    fn mul(self, rhs: &MatchingPolynomial) -> MatchingPolynomial {
        MatchingPolynomial::new(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Add for &SignedPolynomial {
    type Output = SignedPolynomial;
    fn add(self, rhs: &SignedPolynomial) -> SignedPolynomial {
        SignedPolynomial::new(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &SignedPolynomial {
    type Output = SignedPolynomial;
    fn neg(self) -> SignedPolynomial {
        SignedPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &SignedPolynomial {
    type Output = SignedPolynomial;
    fn sub(self, rhs: &SignedPolynomial) -> SignedPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SignedPolynomial {
    type Output = SignedPolynomial;
    fn mul(self, rhs: &SignedPolynomial) -> SignedPolynomial {
        SignedPolynomial::new(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(MatchingPolynomial, Add, add);
forward_owned!(MatchingPolynomial, Mul, mul);
forward_owned!(SignedPolynomial, Add, add);
forward_owned!(SignedPolynomial, Sub, sub);
forward_owned!(SignedPolynomial, Mul, mul);

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, coeffs: &[T]) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

impl fmt::Display for MatchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.coeffs)
    }
}

impl fmt::Debug for MatchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write_list(f, &self.coeffs)?;
        write!(f, "]")
    }
}

impl fmt::Display for SignedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.coeffs)
    }
}

impl fmt::Debug for SignedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write_list(f, &self.coeffs)?;
        write!(f, "]")
    }
}

impl FromStr for MatchingPolynomial {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<BigUint>()
                    .map_err(|_| PolyError::Parse(format!("`{t}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(MatchingPolynomial::new)
    }
}

impl Serialize for MatchingPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn relation(any_less: bool, any_greater: bool) -> OrderRelation {
    match (any_less, any_greater) {
        (false, false) => OrderRelation::Equal,
        (true, false) => OrderRelation::StrictlyLess,
        (false, true) => OrderRelation::StrictlyGreater,
        (true, true) => OrderRelation::Incomparable,
    }
}

/// Coefficientwise comparison after zero padding.
pub fn compare(f: &MatchingPolynomial, g: &MatchingPolynomial) -> OrderRelation {
    let zero = BigUint::zero();
    let len = f.coeffs.len().max(g.coeffs.len());
    let (mut less, mut greater) = (false, false);
    for m in 0..len {
        let a = f.coeffs.get(m).unwrap_or(&zero);
        let b = g.coeffs.get(m).unwrap_or(&zero);
        less |= a < b;
        greater |= a > b;
    }
    relation(less, greater)
}

pub fn compare_signed(f: &SignedPolynomial, g: &SignedPolynomial) -> OrderRelation {
    let zero = BigInt::zero();
    let len = f.coeffs.len().max(g.coeffs.len());
    let (mut less, mut greater) = (false, false);
    for m in 0..len {
        let a = f.coeffs.get(m).unwrap_or(&zero);
        let b = g.coeffs.get(m).unwrap_or(&zero);
        less |= a < b;
        greater |= a > b;
    }
    relation(less, greater)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `p_k`, the matching polynomial of the path on `k` vertices:
/// coefficient `m` is `C(k - m, m)`.
pub fn path_poly(k: usize) -> MatchingPolynomial {
    let k = k as u64;
    MatchingPolynomial::new((0..=k / 2).map(|m| binomial(k - m, m)).collect())
}

/// `q_k`, the matching polynomial of the cycle on `k ≥ 2` vertices (`q_2` is
/// the double edge): coefficient `m ≥ 1` is `C(k - m, m) + C(k - m - 1, m - 1)`.
pub fn cycle_poly(k: usize) -> Result<MatchingPolynomial, PolyError> {
    if k < 2 {
        return Err(PolyError::CycleTooShort(k));
    }
    let k = k as u64;
    let coeffs = (0..=k / 2)
        .map(|m| {
            if m == 0 {
                BigUint::one()
            } else {
                binomial(k - m, m) + binomial(k - m - 1, m - 1)
            }
        })
        .collect();
    Ok(MatchingPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(c: &[u64]) -> MatchingPolynomial {
        MatchingPolynomial::from_u64s(c)
    }

    #[test]
    fn path_examples() {
        assert_eq!(path_poly(0), mp(&[1]));
        assert_eq!(path_poly(1), mp(&[1]));
        assert_eq!(path_poly(5), mp(&[1, 4, 3]));
        assert_eq!(path_poly(7), &path_poly(3) * &cycle_poly(4).unwrap());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle_poly(2).unwrap(), mp(&[1, 2]));
        assert_eq!(cycle_poly(6).unwrap(), mp(&[1, 6, 9, 2]));
        assert_eq!(cycle_poly(1), Err(PolyError::CycleTooShort(1)));
        assert_eq!(cycle_poly(0), Err(PolyError::CycleTooShort(0)));
    }

    #[test]
    fn ring_examples() {
        let one_plus_x = SignedPolynomial::from_i64s(&[1, 1]);
        assert_eq!(
            &one_plus_x * &one_plus_x,
            SignedPolynomial::from_i64s(&[1, 2, 1])
        );
        let f = SignedPolynomial::from_i64s(&[3, -1, 4]);
        assert_eq!(&f * &SignedPolynomial::one(), f);
        assert_eq!(&f - &f, SignedPolynomial::zero());
        // p_5 = p_2 p_3 + x p_1 p_2
        let p = |k| path_poly(k).to_signed();
        let rhs = &(&p(2) * &p(3)) + &(&p(1) * &p(2)).shift(1);
        assert_eq!(rhs, p(5));
    }

    #[test]
    fn compare_examples() {
        let q3 = cycle_poly(3).unwrap();
        let q6 = cycle_poly(6).unwrap();
        assert_eq!(compare(&(&q3 * &q3), &q6), OrderRelation::StrictlyLess);
        assert_eq!(compare(&q6, &q6), OrderRelation::Equal);
        assert_eq!(compare(&q6, &(&q3 * &q3)), OrderRelation::StrictlyGreater);
        let p = path_poly;
        let a = &(&p(8) * &p(6)) * &p(3);
        let b = &(&p(7) * &p(5)) * &p(5);
        assert_eq!(compare(&a, &b), OrderRelation::Incomparable);
        let a = &(&(&p(4) * &p(4)) * &p(16)) * &p(28);
        let b = &(&(&p(6) * &p(6)) * &p(6)) * &p(34);
        assert_eq!(compare(&a, &b), OrderRelation::Incomparable);
    }

    #[test]
    fn compare_pads_with_zeros() {
        assert_eq!(
            compare(&mp(&[1, 2]), &mp(&[1, 2, 1])),
            OrderRelation::StrictlyLess
        );
        assert_eq!(
            compare(&MatchingPolynomial::zero(), &mp(&[0])),
            OrderRelation::Equal
        );
    }

    #[test]
    fn display_and_parse() {
        let p = mp(&[1, 15, 75, 145, 96, 12]);
        assert_eq!(p.to_string(), "1,15,75,145,96,12");
        assert_eq!(
            "1, 15,75,145,96,12".parse::<MatchingPolynomial>().unwrap(),
            p
        );
        assert_eq!(MatchingPolynomial::zero().to_string(), "0");
        assert_eq!(
            "1,2,0,0".parse::<MatchingPolynomial>().unwrap(),
            mp(&[1, 2])
        );
        assert!("1,-2".parse::<MatchingPolynomial>().is_err());
        assert!("".parse::<MatchingPolynomial>().is_err());
        let big = binomial(200, 100);
        assert_eq!(
            MatchingPolynomial::new(vec![big.clone()]).to_string(),
            big.to_str_radix(10)
        );
    }

    #[test]
    fn signed_to_matching() {
        let s = SignedPolynomial::from_i64s(&[1, 0, 3]);
        assert_eq!(MatchingPolynomial::try_from(&s).unwrap(), mp(&[1, 0, 3]));
        let neg = SignedPolynomial::from_i64s(&[1, -1]);
        assert_eq!(
            MatchingPolynomial::try_from(&neg),
            Err(PolyError::NegativeCoefficient(1))
        );
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
