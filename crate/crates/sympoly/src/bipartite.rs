//! Closed forms for the h*- and gamma-polynomials of P_{K_{a+1,b+1}}, the
//! good-coloring pipeline, and the recursion between neighbouring
//! parameters. Indices follow the shifted convention throughout: (a, b)
//! refers to the complete bipartite graph with parts of sizes a+1 and b+1.

use crate::error::{Error, Result};
use crate::poly::{binomial, gamma_reassemble, Polynomial};
use num_bigint::BigInt;
use num_traits::Zero;

/// Guard for the brute-force coloring enumeration (4^(a+b) colorings).
pub const COLORING_GUARD: usize = 16;

/// h*_{a,b}(t) = sum_i C(2i,i) C(a,i) C(b,i) t^i (1+t)^(a+b+1-2i).
pub fn hstar_closed(a: usize, b: usize) -> Polynomial {
    gamma_reassemble(&gamma_closed(a, b), a + b + 1)
}

/// gamma_{a,b}(t) = sum_i C(a,i) C(b,i) C(2i,i) t^i, degree min(a, b).
pub fn gamma_closed(a: usize, b: usize) -> Polynomial {
    let m = a.min(b) as i64;
    let (a, b) = (a as i64, b as i64);
    let coeffs = (0..=m)
        .map(|i| binomial(a, i) * binomial(b, i) * binomial(2 * i, i))
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// The double-sum expression
/// (1+t) sum_{i,j} C(a,i) C(b,j) C(a-i+j, j) C(b+i-j, i) t^(i+j),
/// expanded exactly. Standard binomial convention; no index ever goes
/// negative here.
pub fn hstar_double_sum(a: usize, b: usize) -> Polynomial {
    let (ai, bi) = (a as i64, b as i64);
    let mut coeffs = vec![BigInt::zero(); a + b + 1];
    for i in 0..=ai {
        for j in 0..=bi {
            let term = binomial(ai, i)
                * binomial(bi, j)
                * binomial(ai - i + j, j)
                * binomial(bi + i - j, i);
            coeffs[(i + j) as usize] += term;
        }
    }
    &Polynomial::from_i64s(&[1, 1]) * &Polynomial::from_coeffs(coeffs)
}

// Colors of the four-coloring pipeline.
const RED: u8 = 0;
const GREEN: u8 = 1;
const WHITE: u8 = 2;
const BLACK: u8 = 3;

/// h* by brute force over all 4-colorings of A and B with |A| = a and
/// |B| = b: keep the good ones (reds in A match greens in B and greens in
/// A match reds in B), accumulate t^(greens + whites), multiply by (1+t).
pub fn hstar_via_colorings(a: usize, b: usize) -> Result<Polynomial> {
    if a + b > COLORING_GUARD {
        return Err(Error::Resource(format!(
            "coloring enumeration is 4^{}, guard is 4^{}",
            a + b,
            COLORING_GUARD
        )));
    }
    let n = a + b;
    let mut counts = vec![BigInt::zero(); n + 1];
    let mut coloring = vec![RED; n];
    loop {
        let mut red_a = 0usize;
        let mut green_a = 0usize;
        let mut red_b = 0usize;
        let mut green_b = 0usize;
        let mut greens = 0usize;
        let mut whites = 0usize;
        for (k, &c) in coloring.iter().enumerate() {
            match c {
                RED => {
                    if k < a {
                        red_a += 1;
                    } else {
                        red_b += 1;
                    }
                }
                GREEN => {
                    greens += 1;
                    if k < a {
                        green_a += 1;
                    } else {
                        green_b += 1;
                    }
                }
                WHITE => whites += 1,
                _ => {}
            }
        }
        if red_a == green_b && green_a == red_b {
            counts[greens + whites] += 1;
        }
        // Odometer over the 4 colors.
        let mut k = 0;
        loop {
            if k == n {
                let good = Polynomial::from_coeffs(counts);
                return Ok(&Polynomial::from_i64s(&[1, 1]) * &good);
            }
            if coloring[k] < BLACK {
                coloring[k] += 1;
                break;
            }
            coloring[k] = RED;
            k += 1;
        }
    }
}

/// Exact polynomial identity
/// (b - a) h*_{a,b} = (1+t) (b h*_{a,b-1} - a h*_{a-1,b}), for a, b >= 1.
pub fn check_recursion(a: usize, b: usize) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "the recursion needs a, b >= 1".into(),
        ));
    }
    let lhs = hstar_closed(a, b).scale(&(BigInt::from(b as i64) - BigInt::from(a as i64)));
    let inner = &hstar_closed(a, b - 1).scale(&BigInt::from(b))
        - &hstar_closed(a - 1, b).scale(&BigInt::from(a));
    let rhs = &Polynomial::from_i64s(&[1, 1]) * &inner;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{gamma_extract, is_gamma_positive};

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(cs)
    }

    #[test]
    fn closed_form_small_values() {
        assert_eq!(hstar_closed(0, 0), p(&[1, 1]));
        assert_eq!(hstar_closed(1, 1), p(&[1, 5, 5, 1]));
        assert_eq!(hstar_closed(1, 2), p(&[1, 8, 14, 8, 1]));
    }

    #[test]
    fn gamma_small_values() {
        assert_eq!(gamma_closed(0, 5), Polynomial::one());
        assert_eq!(gamma_closed(1, 1), p(&[1, 2]));
        assert_eq!(gamma_closed(2, 2), p(&[1, 8, 6]));
    }

    #[test]
    fn double_sum_agrees_with_closed_form() {
        assert_eq!(hstar_double_sum(0, 0), p(&[1, 1]));
        for a in 0..=4usize {
            for b in 0..=4usize {
                assert_eq!(hstar_double_sum(a, b), hstar_closed(a, b), "({}, {})", a, b);
            }
        }
        assert_eq!(hstar_double_sum(2, 3), hstar_closed(2, 3));
    }

    #[test]
    fn colorings_agree_with_closed_form() {
        assert_eq!(hstar_via_colorings(0, 0).unwrap(), p(&[1, 1]));
        assert_eq!(hstar_via_colorings(1, 1).unwrap(), p(&[1, 5, 5, 1]));
        assert_eq!(hstar_via_colorings(2, 2).unwrap(), hstar_closed(2, 2));
        assert_eq!(hstar_via_colorings(2, 3).unwrap(), hstar_closed(2, 3));
    }

    #[test]
    fn coloring_guard_trips() {
        assert!(matches!(
            hstar_via_colorings(10, 10),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn recursion_examples() {
        // (1,2): both sides expand to (1+t)(2 h*_{1,1} - h*_{0,2}).
        assert!(check_recursion(1, 2).unwrap());
        // Symmetric case: both sides vanish.
        assert!(check_recursion(2, 2).unwrap());
        assert!(check_recursion(3, 5).unwrap());
        assert!(check_recursion(0, 1).is_err());
    }

    #[test]
    fn symmetry_and_palindromicity() {
        for a in 0..=6usize {
            for b in 0..=6usize {
                assert_eq!(hstar_closed(a, b), hstar_closed(b, a));
                assert!(hstar_closed(a, b).is_palindromic(a + b + 1));
            }
        }
    }

    #[test]
    fn gamma_extraction_inverts_closed_form() {
        for a in 0..=5usize {
            for b in 0..=5usize {
                let h = hstar_closed(a, b);
                assert_eq!(gamma_extract(&h, a + b + 1).unwrap(), gamma_closed(a, b));
                assert!(is_gamma_positive(&h, a + b + 1).unwrap());
            }
        }
    }
}
