//! Exact degree-sequence statistics and symmetric-polynomial tools.
//!
//! The quadratic mean degree `sqrt(Σd²/n)` is irrational in general, so
//! nothing here takes square roots: callers work with its square or with
//! cross-multiplied integer inequalities.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("statistic undefined for an empty sequence")]
    Empty,
    #[error("degree {degree} is impossible in a simple graph on {n} vertices")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("degree s={s} outside 1..={len}")]
    OrderOutOfRange { s: usize, len: usize },
    #[error("entry {0} is negative")]
    Negative(usize),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// A rational number kept in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, DegreeError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(DegreeError::ZeroDenominator);
        }
        Ok(ExactRatio(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        ExactRatio(BigRational::from_integer(value.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Lossy, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for ExactRatio {
    fn from(r: BigRational) -> Self {
        ExactRatio(r)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Degree sequence with its exact first and second power sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    degrees: Vec<usize>,
    sum_d: BigUint,
    sum_d2: BigUint,
}

impl DegreeStats {
    pub fn from_degrees(degrees: Vec<usize>) -> Self {
        let mut sum_d = BigUint::zero();
        let mut sum_d2 = BigUint::zero();
        for &d in &degrees {
            let d = BigUint::from(d);
            sum_d2 += &d * &d;
            sum_d += d;
        }
        DegreeStats {
            degrees,
            sum_d,
            sum_d2,
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self::from_degrees(g.degrees())
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn sum_d(&self) -> &BigUint {
        &self.sum_d
    }

    pub fn sum_d2(&self) -> &BigUint {
        &self.sum_d2
    }

    /// Rejects sequences that cannot come from a simple graph on `n`
    /// vertices (some degree ≥ n). Parity is not checked.
    pub fn check_simple(&self) -> Result<(), DegreeError> {
        let n = self.n();
        match self.degrees.iter().find(|&&d| d >= n) {
            Some(&degree) => Err(DegreeError::DegreeOutOfRange { degree, n }),
            None => Ok(()),
        }
    }
}

/// Arithmetic mean degree Σd/n.
pub fn mean_degree(s: &DegreeStats) -> Result<ExactRatio, DegreeError> {
    if s.n() == 0 {
        return Err(DegreeError::Empty);
    }
    ExactRatio::new(BigInt::from(s.sum_d.clone()), s.n())
}

/// Square of the quadratic mean degree, Σd²/n.
pub fn quadratic_mean_squared(s: &DegreeStats) -> Result<ExactRatio, DegreeError> {
    if s.n() == 0 {
        return Err(DegreeError::Empty);
    }
    ExactRatio::new(BigInt::from(s.sum_d2.clone()), s.n())
}

/// `e[k] = σ_k(xs)` for `k = 0..=up_to`, by the one-pass update
/// `e[k] += x * e[k-1]`. Orders above `xs.len()` come out as zero.
fn symmetric_table<T>(xs: &[T], up_to: usize) -> Vec<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    let mut e = vec![T::zero(); up_to + 1];
    e[0] = T::one();
    for (seen, x) in xs.iter().enumerate() {
        for k in (1..=up_to.min(seen + 1)).rev() {
            let term = x * &e[k - 1];
            e[k] = e[k].clone() + term;
        }
    }
    e
}

/// σ_s(xs), the elementary symmetric polynomial of order `s`.
pub fn elementary_symmetric(xs: &[u64], s: usize) -> Result<BigUint, DegreeError> {
    if s == 0 || s > xs.len() {
        return Err(DegreeError::OrderOutOfRange { s, len: xs.len() });
    }
    Ok(symmetric_or_zero(xs, s))
}

/// σ_s(xs) with the empty-sum convention: zero when `s > xs.len()`.
pub fn symmetric_or_zero(xs: &[u64], s: usize) -> BigUint {
    let big: Vec<BigUint> = xs.iter().map(|&x| BigUint::from(x)).collect();
    symmetric_table(&big, s)
        .pop()
        .expect("table has s+1 entries")
}

/// Checks Σx² = σ1² − 2σ2 and Σx³ = σ1³ − 3σ1σ2 + 3σ3 exactly.
pub fn power_sum_identity_check(xs: &[u64]) -> Result<bool, DegreeError> {
    if xs.is_empty() {
        return Err(DegreeError::Empty);
    }
    let big: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(x)).collect();
    let e = symmetric_table(&big, 3);
    let (s1, s2, s3) = (&e[1], &e[2], &e[3]);
    let p2: BigInt = big.iter().map(|x| x * x).sum();
    let p3: BigInt = big.iter().map(|x| x * x * x).sum();
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let square_ok = p2 == s1 * s1 - &two * s2;
    let cube_ok = p3 == s1 * s1 * s1 - &three * s1 * s2 + &three * s3;
    Ok(square_ok && cube_ok)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaclaurinOutcome {
    /// σ_s / C(n,s) ≤ (σ1/n)^s.
    pub holds: bool,
    /// Both sides equal.
    pub equality: bool,
    pub all_equal: bool,
}

fn binomial(n: usize, k: usize) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Compares σ_s/C(n,s) with (σ1/n)^s exactly, as σ_s·n^s against
/// C(n,s)·σ1^s, so no root is taken.
pub fn maclaurin_check(xs: &[ExactRatio], s: usize) -> Result<MaclaurinOutcome, DegreeError> {
    let n = xs.len();
    if s == 0 || s > n {
        return Err(DegreeError::OrderOutOfRange { s, len: n });
    }
    if let Some(i) = xs.iter().position(ExactRatio::is_negative) {
        return Err(DegreeError::Negative(i));
    }
    let rationals: Vec<BigRational> = xs.iter().map(|x| x.0.clone()).collect();
    let e = symmetric_table(&rationals, s);
    let lhs = &e[s] * BigRational::from_integer(BigInt::from(n).pow(s as u32));
    let rhs = BigRational::from_integer(BigInt::from(binomial(n, s))) * Pow::pow(&e[1], s as u32);
    Ok(MaclaurinOutcome {
        holds: lhs <= rhs,
        equality: lhs == rhs,
        all_equal: xs.windows(2).all(|w| w[0] == w[1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<ExactRatio> {
        xs.iter().map(|&x| ExactRatio::from_integer(x)).collect()
    }

    fn ratio(a: i64, b: i64) -> ExactRatio {
        ExactRatio::new(a, b).unwrap()
    }

    #[test]
    fn means() {
        let c5 = DegreeStats::from_degrees(vec![2; 5]);
        assert_eq!(mean_degree(&c5).unwrap(), ratio(2, 1));
        assert_eq!(quadratic_mean_squared(&c5).unwrap(), ratio(4, 1));

        let star = DegreeStats::from_degrees(vec![3, 1, 1, 1]);
        assert_eq!(mean_degree(&star).unwrap(), ratio(3, 2));
        assert_eq!(quadratic_mean_squared(&star).unwrap(), ratio(3, 1));

        let k4 = DegreeStats::from_degrees(vec![3; 4]);
        assert_eq!(quadratic_mean_squared(&k4).unwrap(), ratio(9, 1));

        let empty7 = DegreeStats::from_degrees(vec![0; 7]);
        assert_eq!(mean_degree(&empty7).unwrap(), ratio(0, 1));
        assert_eq!(mean_degree(&empty7).unwrap().to_string(), "0/1");
    }

    #[test]
    fn means_need_vertices() {
        let none = DegreeStats::from_degrees(vec![]);
        assert_eq!(mean_degree(&none), Err(DegreeError::Empty));
        assert_eq!(quadratic_mean_squared(&none), Err(DegreeError::Empty));
    }

    #[test]
    fn ratio_lowest_terms() {
        let r = ratio(6, 4);
        assert_eq!(r.numer(), &BigInt::from(3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let neg = ratio(1, -2);
        assert_eq!(neg.denom(), &BigInt::from(2));
        assert!(ExactRatio::new(1, 0).is_err());
    }

    #[test]
    fn symmetric_values() {
        assert_eq!(
            elementary_symmetric(&[1, 2, 3], 2).unwrap(),
            BigUint::from(11u32)
        );
        assert_eq!(
            elementary_symmetric(&[2, 2, 2], 3).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            elementary_symmetric(&[4, 5, 9], 1).unwrap(),
            BigUint::from(18u32)
        );
        assert!(elementary_symmetric(&[1, 2], 3).is_err());
        assert!(elementary_symmetric(&[1, 2], 0).is_err());
        assert_eq!(symmetric_or_zero(&[1, 2], 3), BigUint::zero());
    }

    #[test]
    fn symmetric_beyond_u64() {
        // σ_3 of three copies of 2^40 is 2^120
        let x = 1u64 << 40;
        assert_eq!(
            elementary_symmetric(&[x, x, x], 3).unwrap(),
            BigUint::one() << 120usize
        );
    }

    #[test]
    fn power_sums() {
        assert!(power_sum_identity_check(&[1, 2, 3]).unwrap());
        assert!(power_sum_identity_check(&[5]).unwrap());
        assert!(power_sum_identity_check(&[2, 2]).unwrap());
        assert_eq!(power_sum_identity_check(&[]), Err(DegreeError::Empty));
    }

    #[test]
    fn maclaurin_examples() {
        let all_eq = maclaurin_check(&ints(&[2, 2, 2]), 2).unwrap();
        assert!(all_eq.holds && all_eq.equality);

        let strict = maclaurin_check(&ints(&[1, 2, 3]), 2).unwrap();
        assert!(strict.holds && !strict.equality);

        let zero = maclaurin_check(&ints(&[0, 0, 6]), 3).unwrap();
        assert!(zero.holds && !zero.equality);

        let halves = maclaurin_check(&[ratio(1, 2), ratio(1, 2)], 2).unwrap();
        assert!(halves.equality && halves.all_equal);
    }

    #[test]
    fn maclaurin_errors() {
        assert!(matches!(
            maclaurin_check(&ints(&[1, 2]), 3),
            Err(DegreeError::OrderOutOfRange { .. })
        ));
        assert_eq!(
            maclaurin_check(&ints(&[1, -2]), 1),
            Err(DegreeError::Negative(1))
        );
    }

    #[test]
    fn simple_graph_degree_check() {
        assert!(DegreeStats::from_degrees(vec![3, 3, 3, 3])
            .check_simple()
            .is_ok());
        assert_eq!(
            DegreeStats::from_degrees(vec![2, 1]).check_simple(),
            Err(DegreeError::DegreeOutOfRange { degree: 2, n: 2 })
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(10, 10), BigUint::one());
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
    }
}
