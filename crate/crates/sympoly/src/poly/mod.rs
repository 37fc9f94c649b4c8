//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, plus the binomial-basis and gamma-basis conversions used
//! throughout the crate.
//!
//! Coefficients are stored in ascending degree order: `coeffs[i]` is the
//! coefficient of t^i. The representation is canonical: the vector is empty
//! for the zero polynomial and the last entry is nonzero otherwise.

pub mod roots;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Binomial-coefficient conventions used by the closed-form summations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomialConvention {
    /// C(n, k) = 0 whenever k < 0, n < 0 or k > n.
    Standard,
    /// Like `Standard` except C(k, -1) = 1 when k = -1 (and 0 otherwise).
    /// This is the convention the directed-tree summations rely on to pick
    /// up the degenerate all-up / all-down trees.
    KroneckerAtMinusOne,
}

/// C(n, k) under the chosen convention.
pub fn binomial_in(mode: BinomialConvention, n: i64, k: i64) -> BigInt {
    if mode == BinomialConvention::KroneckerAtMinusOne && k == -1 {
        return if n == -1 { BigInt::one() } else { BigInt::zero() };
    }
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// C(n, k) with the standard convention.
pub fn binomial(n: i64, k: i64) -> BigInt {
    binomial_in(BinomialConvention::Standard, n, k)
}

/// A dense univariate polynomial over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    fn normalized(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::normalized(vec![c])
    }

    /// Construct from coefficients in ascending degree order.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Polynomial::normalized(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::normalized(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// c * t^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::normalized(coeffs)
    }

    /// (1 + t)^k, expanded.
    pub fn one_plus_t_pow(k: usize) -> Self {
        let coeffs = (0..=k as i64).map(|i| binomial(k as i64, i)).collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of t^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Polynomial::normalized(coeffs)
    }

    /// Multiply by t^k.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        Polynomial::normalized(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at t = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True iff the coefficient list of length d+1 reads the same reversed,
    /// i.e. coeff(i) = coeff(d - i) for all 0 <= i <= d.
    pub fn is_palindromic(&self, d: usize) -> bool {
        if self.degree().map_or(false, |deg| deg > d) {
            return false;
        }
        (0..=d / 2).all(|i| self.coeff(i) == self.coeff(d - i))
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() && i > 0 {
                // coefficient 1 is implicit in front of t
            } else {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::normalized(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::normalized(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::normalized(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::normalized(coeffs)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        Repr {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

/// Solve the triangular binomial-basis system for the h*-coefficients.
///
/// Given counts[n] = E(n) for n = 0..d, the system
/// E(n) = sum_i h_i * C(n + d - i, d) is unit lower triangular in the h_i,
/// so forward substitution stays in the integers.
pub fn hstar_from_counts(counts: &[BigInt], d: usize) -> Result<Polynomial> {
    if counts.len() != d + 1 {
        return Err(Error::InvalidArgument(format!(
            "need {} dilation counts for dimension {}, got {}",
            d + 1,
            d,
            counts.len()
        )));
    }
    let mut h = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut acc = counts[n].clone();
        for (i, hi) in h.iter().enumerate().take(n) {
            acc -= hi * binomial((n + d - i) as i64, d as i64);
        }
        h.push(acc);
    }
    Ok(Polynomial::from_coeffs(h))
}

/// Evaluate E(n) = sum_i h_i * C(n + d - i, d) from an h*-polynomial.
/// Exact inverse of [`hstar_from_counts`].
pub fn ehrhart_value(hstar: &Polynomial, d: usize, n: u64) -> BigInt {
    (0..=d)
        .map(|i| hstar.coeff(i) * binomial(n as i64 + d as i64 - i as i64, d as i64))
        .sum()
}

/// Expand sum_i gamma_i t^i (1+t)^(d-2i).
pub fn gamma_reassemble(gamma: &Polynomial, d: usize) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (i, g) in gamma.coeffs().iter().enumerate() {
        if g.is_zero() || 2 * i > d {
            continue;
        }
        let term = Polynomial::one_plus_t_pow(d - 2 * i).shift_up(i).scale(g);
        acc = &acc + &term;
    }
    acc
}

/// Extract the unique gamma with p = sum gamma_i t^i (1+t)^(d-2i).
///
/// Peels leading coefficients: after subtracting the terms for indices < i,
/// the t^i coefficient of the remainder is gamma_i. Errors if p is not
/// palindromic at length d+1 or its degree exceeds d; gamma-positivity is a
/// separate predicate ([`is_gamma_positive`]).
pub fn gamma_extract(p: &Polynomial, d: usize) -> Result<Polynomial> {
    if p.degree().map_or(false, |deg| deg > d) {
        return Err(Error::Domain(format!(
            "degree {} exceeds palindrome length parameter d = {}",
            p.degree().unwrap(),
            d
        )));
    }
    if !p.is_palindromic(d) {
        return Err(Error::Domain(
            "gamma extraction requires a palindromic polynomial".into(),
        ));
    }
    let mut remainder = p.clone();
    let mut gamma = Vec::new();
    for i in 0..=d / 2 {
        let gi = remainder.coeff(i);
        if !gi.is_zero() {
            let term = Polynomial::one_plus_t_pow(d - 2 * i).shift_up(i).scale(&gi);
            remainder = &remainder - &term;
        }
        gamma.push(gi);
    }
    debug_assert!(remainder.is_zero(), "palindromic peeling must terminate");
    Ok(Polynomial::from_coeffs(gamma))
}

/// True iff every gamma-coefficient of the palindromic polynomial p is >= 0.
pub fn is_gamma_positive(p: &Polynomial, d: usize) -> Result<bool> {
    Ok(gamma_extract(p, d)?.is_nonnegative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(cs)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(-3, 2), BigInt::zero());
    }

    #[test]
    fn binomial_kronecker_convention() {
        let m = BinomialConvention::KroneckerAtMinusOne;
        assert_eq!(binomial_in(m, -1, -1), BigInt::one());
        assert_eq!(binomial_in(m, 3, -1), BigInt::zero());
        assert_eq!(binomial_in(m, 0, -1), BigInt::zero());
        assert_eq!(binomial_in(m, 5, 2), BigInt::from(10));
    }

    #[test]
    fn arithmetic_is_canonical() {
        let a = p(&[1, 2, 1]);
        let b = p(&[-1, -2, -1]);
        assert!((&a + &b).is_zero());
        assert_eq!((&a - &a).degree(), None);
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn display_matches_cli_rendering() {
        assert_eq!(p(&[1, 5, 5, 1]).to_string(), "1 + 5t + 5t^2 + t^3");
        assert_eq!(p(&[1, -2]).to_string(), "1 - 2t");
        assert_eq!(p(&[0, 1]).to_string(), "t");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + t");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, 0, 3]).to_string(), "3t^2");
    }

    #[test]
    fn hstar_from_counts_segment() {
        // Segment [-1, 1]: E(n) = 2n + 1, counts (1, 3) in dimension 1.
        let counts = vec![BigInt::from(1), BigInt::from(3)];
        assert_eq!(hstar_from_counts(&counts, 1).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn hstar_from_counts_k22() {
        // Lattice point counts of P_{K_{2,2}}; cross-checked by the counting
        // oracles in the ehrhart module.
        let counts = [1i64, 9, 35, 91].map(BigInt::from).to_vec();
        assert_eq!(hstar_from_counts(&counts, 3).unwrap(), p(&[1, 5, 5, 1]));
    }

    #[test]
    fn hstar_from_counts_standard_simplex() {
        // Standard simplex in dimension d: E(n) = C(n + d, d), h* = 1.
        for d in 1..=6usize {
            let counts: Vec<BigInt> = (0..=d)
                .map(|n| binomial((n + d) as i64, d as i64))
                .collect();
            assert_eq!(hstar_from_counts(&counts, d).unwrap(), Polynomial::one());
        }
    }

    #[test]
    fn hstar_from_counts_wrong_length() {
        assert!(matches!(
            hstar_from_counts(&[BigInt::one()], 3),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn hstar_round_trips_through_ehrhart_values() {
        let h = p(&[1, 5, 5, 1]);
        let counts: Vec<BigInt> = (0..=3).map(|n| ehrhart_value(&h, 3, n)).collect();
        assert_eq!(hstar_from_counts(&counts, 3).unwrap(), h);
        assert_eq!(counts, [1i64, 9, 35, 91].map(BigInt::from).to_vec());
    }

    #[test]
    fn palindromic_checks() {
        assert!(p(&[1, 5, 5, 1]).is_palindromic(3));
        assert!(!p(&[1, 2]).is_palindromic(2));
        assert!(Polynomial::one().is_palindromic(0));
        // 1 + t^2 is palindromic at length 3 even with a zero middle term.
        assert!(p(&[1, 0, 1]).is_palindromic(2));
        // Degree above d can never be palindromic at length d+1.
        assert!(!p(&[1, 1, 1, 1]).is_palindromic(2));
    }

    #[test]
    fn gamma_extract_k22() {
        // (1+t)^3 + 2t(1+t) = 1 + 5t + 5t^2 + t^3.
        let g = gamma_extract(&p(&[1, 5, 5, 1]), 3).unwrap();
        assert_eq!(g, p(&[1, 2]));
        assert_eq!(gamma_reassemble(&g, 3), p(&[1, 5, 5, 1]));
    }

    #[test]
    fn gamma_extract_binomial_power() {
        for d in 0..=8usize {
            let g = gamma_extract(&Polynomial::one_plus_t_pow(d), d).unwrap();
            assert_eq!(g, Polynomial::one());
        }
    }

    #[test]
    fn gamma_extract_negative_coefficient() {
        // 1 + t^2 = (1+t)^2 - 2t, so gamma = 1 - 2t: palindromic but not
        // gamma-positive. (Reassembly below is the oracle for the value.)
        let g = gamma_extract(&p(&[1, 0, 1]), 2).unwrap();
        assert_eq!(g, p(&[1, -2]));
        assert_eq!(gamma_reassemble(&g, 2), p(&[1, 0, 1]));
        assert!(!is_gamma_positive(&p(&[1, 0, 1]), 2).unwrap());
    }

    #[test]
    fn gamma_extract_rejects_non_palindromic() {
        assert!(matches!(
            gamma_extract(&p(&[1, 2]), 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let h = p(&[1, 5, 5, 1]);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","5","5","1"]}"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
    }
}
