//! Ground-truth lattice-point counting for dilates of P_G, and the
//! h*-polynomial obtained by interpolating those counts. This is the
//! independent oracle the closed forms are tested against.

use crate::error::{Error, Result};
use crate::facets::{enumerate_facets, FacetFunction};
use crate::graph::Graph;
use crate::poly::{ehrhart_value, hstar_from_counts, Polynomial};
use num_bigint::BigInt;
use num_traits::Zero;

/// Largest vertex count accepted by the generic box-scan counter.
pub const GENERIC_COUNT_MAX_VERTICES: usize = 7;

/// Exact number of lattice points of the n-th dilate of P_G, by scanning
/// sum-zero integer vectors in the box [-n, n]^V (one coordinate is
/// eliminated by the zero-sum constraint) and testing facet membership.
pub fn count_lattice_points(g: &Graph, n: u64) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n_vertices() > GENERIC_COUNT_MAX_VERTICES {
        return Err(Error::Resource(format!(
            "box scan limited to {} vertices; use the bipartite counter",
            GENERIC_COUNT_MAX_VERTICES
        )));
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let facets = enumerate_facets(&g)?;
    let nv = g.n_vertices();
    let n = n as i64;
    let mut x = vec![-n; nv - 1];
    let mut count = BigInt::zero();
    loop {
        let rest: i64 = x.iter().sum();
        if rest.abs() <= n {
            let point: Vec<i64> = std::iter::once(-rest).chain(x.iter().copied()).collect();
            if in_dilate(&facets, &point, n) {
                count += 1;
            }
        }
        // Odometer step over the free coordinates.
        let mut i = 0;
        loop {
            if i == x.len() {
                return Ok(count);
            }
            if x[i] < n {
                x[i] += 1;
                break;
            }
            x[i] = -n;
            i += 1;
        }
    }
}

fn in_dilate(facets: &[FacetFunction], point: &[i64], n: i64) -> bool {
    facets.iter().all(|f| {
        f.values()
            .iter()
            .zip(point)
            .map(|(&a, &b)| a * b)
            .sum::<i64>()
            <= n
    })
}

/// Exact lattice-point count of the n-th dilate of P_{K_{a,b}} by dynamic
/// programming. The dilate is cut out by sum |x_top| <= n, sum |x_bottom|
/// <= n and total sum zero, so the count is a convolution of the per-side
/// tables A_k(n, s) = #{v in Z^k : sum |v_i| <= n, sum v_i = s}.
pub fn count_lattice_points_bipartite(a: usize, b: usize, n: u64) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "bipartite parts must be nonempty".into(),
        ));
    }
    let top = side_table(a, n as i64);
    let bottom = side_table(b, n as i64);
    let n = n as i64;
    let mut total = BigInt::zero();
    for s in -(a as i64) * n..=(a as i64) * n {
        let t = -s;
        if t.abs() > (b as i64) * n {
            continue;
        }
        total += side_lookup(&top, a, n, s) * side_lookup(&bottom, b, n, t);
    }
    Ok(total)
}

// table[s + k*n] = #{v in Z^k : sum |v_i| <= n, sum v_i = s}.
fn side_table(k: usize, n: i64) -> Vec<BigInt> {
    let width = (2 * k as i64 * n + 1) as usize;
    let offset = k as i64 * n;
    // dp over (coordinates used, |v|-budget spent, coordinate sum).
    // Collapse the budget axis by tracking, per sum s, a table indexed by
    // spent budget.
    let budget = (n + 1) as usize;
    let mut dp = vec![vec![BigInt::zero(); budget]; width];
    dp[offset as usize][0] = BigInt::from(1);
    for _ in 0..k {
        let mut next = vec![vec![BigInt::zero(); budget]; width];
        for (si, row) in dp.iter().enumerate() {
            let s = si as i64 - offset;
            for (spent, ways) in row.iter().enumerate() {
                if ways.is_zero() {
                    continue;
                }
                for v in -(n - spent as i64)..=(n - spent as i64) {
                    let ns = s + v;
                    if ns.abs() > offset {
                        continue;
                    }
                    let nspent = spent + v.unsigned_abs() as usize;
                    next[(ns + offset) as usize][nspent] += ways;
                }
            }
        }
        dp = next;
    }
    dp.into_iter()
        .map(|row| row.into_iter().sum::<BigInt>())
        .collect()
}

fn side_lookup(table: &[BigInt], k: usize, n: i64, s: i64) -> BigInt {
    let offset = k as i64 * n;
    if s.abs() > offset {
        return BigInt::zero();
    }
    table[(s + offset) as usize].clone()
}

/// h*-polynomial of P_G by interpolating lattice-point counts for the
/// dilations 0..d, d = |V| - 1 (P_G spans the sum-zero lattice of a
/// connected graph). Stanley nonnegativity is asserted on the result.
pub fn hstar_via_interpolation(g: &Graph) -> Result<Polynomial> {
    hstar_from_dilate_counts(g, |n| count_lattice_points(g, n))
}

/// Same interpolation but through the bipartite dynamic-programming
/// counter, for K_{a,b}.
pub fn hstar_via_interpolation_bipartite(a: usize, b: usize) -> Result<Polynomial> {
    let (g, _) = Graph::complete_bipartite(a, b)?;
    hstar_from_dilate_counts(&g, |n| count_lattice_points_bipartite(a, b, n))
}

fn hstar_from_dilate_counts<F>(g: &Graph, counter: F) -> Result<Polynomial>
where
    F: Fn(u64) -> Result<BigInt>,
{
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = g.n_vertices() - 1;
    let counts: Vec<BigInt> = (0..=d as u64).map(&counter).collect::<Result<_>>()?;
    let hstar = hstar_from_counts(&counts, d)?;
    if !hstar.is_nonnegative() {
        return Err(Error::Inconsistent(format!(
            "interpolated h* has a negative coefficient: {}",
            hstar
        )));
    }
    // Over-determination check: the interpolation already fixes h*, so the
    // next dilate must agree with a directly counted value.
    let predicted = ehrhart_value(&hstar, d, d as u64 + 1);
    let counted = counter(d as u64 + 1)?;
    if predicted != counted {
        return Err(Error::Inconsistent(format!(
            "dilate {} count {} disagrees with interpolation {}",
            d + 1,
            counted,
            predicted
        )));
    }
    Ok(hstar)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k22_counts() {
        let (g, _) = Graph::complete_bipartite(2, 2).unwrap();
        // Terminal reflexive: dilate 1 holds only the 8 vertices + origin.
        assert_eq!(count_lattice_points(&g, 1).unwrap(), BigInt::from(9));
        assert_eq!(count_lattice_points(&g, 2).unwrap(), BigInt::from(35));
        assert_eq!(count_lattice_points(&g, 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn bipartite_dp_matches_box_scan() {
        for (a, b) in [(1usize, 1usize), (2, 2), (2, 3), (3, 3)] {
            let (g, _) = Graph::complete_bipartite(a, b).unwrap();
            for n in 0..=3u64 {
                assert_eq!(
                    count_lattice_points_bipartite(a, b, n).unwrap(),
                    count_lattice_points(&g, n).unwrap(),
                    "K_{{{},{}}} at dilation {}",
                    a,
                    b,
                    n
                );
            }
        }
    }

    #[test]
    fn segment_counts() {
        // K_{1,1}: the segment [-1, 1] inside the sum-zero line.
        for n in 0..6u64 {
            assert_eq!(
                count_lattice_points_bipartite(1, 1, n).unwrap(),
                BigInt::from(2 * n + 1)
            );
        }
    }

    #[test]
    fn interpolation_examples() {
        let (g, _) = Graph::complete_bipartite(1, 1).unwrap();
        assert_eq!(
            hstar_via_interpolation(&g).unwrap(),
            Polynomial::from_i64s(&[1, 1])
        );
        let (g, _) = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(
            hstar_via_interpolation(&g).unwrap(),
            Polynomial::from_i64s(&[1, 5, 5, 1])
        );
        assert_eq!(
            hstar_via_interpolation_bipartite(2, 3).unwrap(),
            Polynomial::from_i64s(&[1, 8, 14, 8, 1])
        );
    }

    #[test]
    fn interpolated_hstar_is_palindromic() {
        // P_G is reflexive for every connected G here, so h* must be
        // palindromic (K_3 and the 4-wheel-ish multipartite case).
        let k3 = Graph::complete(3).unwrap();
        let h = hstar_via_interpolation(&k3).unwrap();
        assert!(h.is_palindromic(k3.n_vertices() - 1));
        let g = Graph::complete_multipartite(&[2, 1, 1]).unwrap();
        let h = hstar_via_interpolation(&g).unwrap();
        assert!(h.is_palindromic(g.n_vertices() - 1));
    }

    #[test]
    fn size_guard() {
        let (g, _) = Graph::complete_bipartite(4, 4).unwrap();
        assert!(matches!(
            count_lattice_points(&g, 1),
            Err(Error::Resource(_))
        ));
    }
}
