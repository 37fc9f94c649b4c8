//! Exact rational Fourier-Motzkin elimination, used as an independent
//! V-description oracle: starting from the vertices of P_G, eliminate the
//! convex-combination multipliers symbolically and keep the resulting
//! inequalities in the ambient coordinates. Lattice points counted against
//! that system cross-check the facet-based membership test without sharing
//! any code path with it.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

type Rat = BigRational;

/// Row cap during elimination.
pub const FM_ROW_GUARD: usize = 200_000;

/// System a.x <= rhs (rows) plus a.x = rhs (equalities) over the ambient
/// coordinates, with integer data normalized to content one.
#[derive(Clone, Debug)]
pub struct HRepresentation {
    pub dim: usize,
    pub rows: Vec<(Vec<BigInt>, BigInt)>,
    pub equalities: Vec<(Vec<BigInt>, BigInt)>,
}

impl HRepresentation {
    /// Membership of an integer point in the n-th dilate: the right-hand
    /// sides scale with n, the homogeneous equalities do not.
    pub fn contains_dilated(&self, point: &[i64], n: i64) -> bool {
        let eval = |coeffs: &[BigInt]| -> BigInt {
            coeffs
                .iter()
                .zip(point)
                .map(|(c, &x)| c * BigInt::from(x))
                .sum()
        };
        self.equalities
            .iter()
            .all(|(c, rhs)| eval(c) == rhs * BigInt::from(n))
            && self
                .rows
                .iter()
                .all(|(c, rhs)| eval(c) <= rhs * BigInt::from(n))
    }
}

// One inequality sum coeffs[i] * var_i <= rhs over the working variable
// list (multipliers first, then ambient coordinates).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    coeffs: Vec<BigInt>,
    rhs: BigInt,
}

impl Row {
    fn normalized(mut self) -> Option<Row> {
        let mut g = self.rhs.abs();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g > BigInt::one() {
            for c in &mut self.coeffs {
                *c = &*c / &g;
            }
            self.rhs = &self.rhs / &g;
        }
        if self.coeffs.iter().all(|c| c.is_zero()) {
            // Trivially true rows vanish; a violated constant row would
            // mean an empty polytope, which our inputs never produce.
            assert!(!self.rhs.is_negative(), "inconsistent constant row");
            return None;
        }
        Some(self)
    }
}

/// Project the convex hull of the given integer points onto the ambient
/// coordinates: eliminate the simplex multipliers from
/// { x = sum l_i V_i, sum l_i = 1, l_i >= 0 } by exact Gaussian
/// substitution on the equalities followed by Fourier-Motzkin on the
/// remaining multipliers.
pub fn project_convex_hull(points: &[Vec<i64>]) -> Result<HRepresentation> {
    let m = points.len();
    if m == 0 {
        return Err(Error::InvalidArgument("no points to project".into()));
    }
    if m > 64 {
        return Err(Error::Resource(
            "projection oracle is limited to 64 input points".into(),
        ));
    }
    let dim = points[0].len();
    // Working equalities over columns [l_0..l_{m-1} | x_0..x_{dim-1} | 1]:
    // for each coordinate c: sum_i l_i V_i[c] - x_c = 0; plus sum l_i = 1.
    let cols = m + dim + 1;
    let mut eqs: Vec<Vec<Rat>> = Vec::new();
    for c in 0..dim {
        let mut row = vec![Rat::zero(); cols];
        for (i, p) in points.iter().enumerate() {
            row[i] = Rat::from_integer(BigInt::from(p[c]));
        }
        row[m + c] = -Rat::one();
        eqs.push(row);
    }
    // Rows encode "expression = 0" with the last column holding the
    // constant term, so sum l_i = 1 carries a constant of -1.
    let mut sum_row = vec![Rat::zero(); cols];
    for cell in sum_row.iter_mut().take(m) {
        *cell = Rat::one();
    }
    sum_row[cols - 1] = -Rat::one();
    eqs.push(sum_row);

    // Gaussian elimination, pivoting on multiplier columns only.
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, multiplier col)
    let mut used_rows = vec![false; eqs.len()];
    for col in 0..m {
        let Some(r) = (0..eqs.len())
            .find(|&r| !used_rows[r] && !eqs[r][col].is_zero())
        else {
            continue;
        };
        used_rows[r] = true;
        pivots.push((r, col));
        let pivot = eqs[r][col].clone();
        for k in 0..cols {
            eqs[r][k] = &eqs[r][k] / &pivot;
        }
        for r2 in 0..eqs.len() {
            if r2 != r && !eqs[r2][col].is_zero() {
                let factor = eqs[r2][col].clone();
                for k in 0..cols {
                    let delta = &factor * &eqs[r][k];
                    eqs[r2][k] -= delta;
                }
            }
        }
    }

    // Rows without a multiplier pivot are pure ambient constraints.
    let mut equalities = Vec::new();
    for (r, eq) in eqs.iter().enumerate() {
        if used_rows[r] {
            continue;
        }
        if eq[..m].iter().any(|c| !c.is_zero()) {
            return Err(Error::Inconsistent(
                "unpivoted multiplier column survived elimination".into(),
            ));
        }
        if eq[m..].iter().all(|c| c.is_zero()) {
            continue;
        }
        // sum coeff_x x + konst = 0  ->  coeff_x . x = -konst.
        let (coeffs, rhs) = clear_denominators(&eq[m..m + dim], &eq[cols - 1]);
        equalities.push((coeffs, rhs));
    }

    // Substitute the pivots into the nonnegativity constraints l_i >= 0,
    // i.e. -l_i <= 0, expressed over [free multipliers | x | 1].
    let free_cols: Vec<usize> = (0..m)
        .filter(|col| !pivots.iter().any(|&(_, c)| c == *col))
        .collect();
    let col_pos: BTreeMap<usize, usize> = free_cols
        .iter()
        .enumerate()
        .map(|(k, &c)| (c, k))
        .collect();
    let nfree = free_cols.len();
    let mut rows: Vec<Row> = Vec::new();
    for i in 0..m {
        // Express l_i as a linear form over free columns, x and 1.
        let mut form = vec![Rat::zero(); nfree + dim + 1];
        if let Some(&(prow, _)) = pivots.iter().find(|&&(_, c)| c == i) {
            // l_i = -(other terms of its pivot row).
            for (k, &fc) in free_cols.iter().enumerate() {
                form[k] = -eqs[prow][fc].clone();
            }
            for d in 0..dim {
                form[nfree + d] = -eqs[prow][m + d].clone();
            }
            form[nfree + dim] = -eqs[prow][cols - 1].clone();
        } else {
            form[col_pos[&i]] = Rat::one();
        }
        // l_i >= 0 becomes -(form) <= constant part.
        let coeffs: Vec<Rat> = form[..nfree + dim].iter().map(|c| -c.clone()).collect();
        let rhs = form[nfree + dim].clone();
        if let Some(row) = rational_row(&coeffs, &rhs).normalized() {
            rows.push(row);
        }
    }

    // Images of the simplex vertices in the working coordinates
    // [free multipliers | ambient], maintained alongside the rows: the
    // working system always defines exactly their convex hull, so rows
    // can be pruned against them after every elimination step.
    let mut images: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            let mut img = Vec::with_capacity(nfree + dim);
            for &fc in &free_cols {
                img.push(BigInt::from((fc == i) as i64));
            }
            for &x in &points[i] {
                img.push(BigInt::from(x));
            }
            img
        })
        .collect();

    rows = prune_to_facets(rows, &images);

    // Eliminate the free multiplier columns (the leading nfree columns).
    let mut active = nfree;
    while active > 0 {
        // Pick the column with the cheapest positive * negative pairing.
        let col = (0..active)
            .min_by_key(|&c| {
                let pos = rows.iter().filter(|r| r.coeffs[c].is_positive()).count();
                let neg = rows.iter().filter(|r| r.coeffs[c].is_negative()).count();
                pos * neg
            })
            .unwrap();
        rows = eliminate_column(rows, col)?;
        for img in &mut images {
            img.remove(col);
        }
        rows = prune_to_facets(rows, &images);
        active -= 1;
    }

    debug_assert!(rows.iter().all(|r| r.coeffs.len() == dim));
    Ok(HRepresentation {
        dim,
        rows: rows.into_iter().map(|r| (r.coeffs, r.rhs)).collect(),
        equalities,
    })
}

// The working system defines conv(images). A polytope is cut out by its
// affine hull together with its facet inequalities, and a valid inequality
// tight on an affinely (d-1)-dimensional subset of the vertex images is a
// facet inequality (or, when tight on everything, an affine-hull
// inequality). Everything else is redundant and dropped.
fn prune_to_facets(rows: Vec<Row>, images: &[Vec<BigInt>]) -> Vec<Row> {
    let hull_dim = affine_rank(images);
    let mut keep_cache: BTreeMap<u64, bool> = BTreeMap::new();
    let mut out = Vec::new();
    for row in rows {
        let evals: Vec<BigInt> = images
            .iter()
            .map(|p| {
                row.coeffs
                    .iter()
                    .zip(p)
                    .map(|(c, x)| c * x)
                    .sum::<BigInt>()
            })
            .collect();
        let max = evals.iter().max().expect("nonempty point set").clone();
        assert!(max <= row.rhs, "projection produced a violated inequality");
        if max < row.rhs {
            continue;
        }
        let mut mask = 0u64;
        let mut tight: Vec<&Vec<BigInt>> = Vec::new();
        for (i, e) in evals.iter().enumerate() {
            if *e == row.rhs {
                mask |= 1 << i;
                tight.push(&images[i]);
            }
        }
        let keep = *keep_cache.entry(mask).or_insert_with(|| {
            let tight_owned: Vec<Vec<BigInt>> = tight.iter().map(|p| (*p).clone()).collect();
            affine_rank(&tight_owned) + 1 >= hull_dim
        });
        if keep {
            out.push(row);
        }
    }
    out
}

// Dimension of the affine hull of the given integer points.
fn affine_rank(points: &[Vec<BigInt>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(a, b)| Rat::from_integer(a - b))
                .collect()
        })
        .collect();
    rational_rank(rows)
}

fn rational_rank(mut m: Vec<Vec<Rat>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for r in (rank + 1)..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..cols {
                let delta = &f * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn rational_row(coeffs: &[Rat], rhs: &Rat) -> Row {
    let mut lcm = BigInt::one();
    for c in coeffs.iter().chain(std::iter::once(rhs)) {
        lcm = lcm.lcm(c.denom());
    }
    Row {
        coeffs: coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect(),
        rhs: rhs.numer() * (&lcm / rhs.denom()),
    }
}

fn clear_denominators(coeffs: &[Rat], konst: &Rat) -> (Vec<BigInt>, BigInt) {
    let row = rational_row(coeffs, &-konst.clone());
    (row.coeffs, row.rhs)
}

// One Fourier-Motzkin step: combine positive and negative rows on the
// column, keep the rest, drop the column.
fn eliminate_column(rows: Vec<Row>, col: usize) -> Result<Vec<Row>> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut keep = Vec::new();
    for row in rows {
        match row.coeffs[col].sign() {
            num_bigint::Sign::Plus => pos.push(row),
            num_bigint::Sign::Minus => neg.push(row),
            num_bigint::Sign::NoSign => keep.push(row),
        }
    }
    let mut out: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
    fn push(out: &mut BTreeMap<Vec<BigInt>, BigInt>, row: Row) {
        if let Some(r) = row.normalized() {
            match out.get_mut(&r.coeffs) {
                Some(rhs) => {
                    if r.rhs < *rhs {
                        *rhs = r.rhs;
                    }
                }
                None => {
                    out.insert(r.coeffs, r.rhs);
                }
            }
        }
    }
    for row in keep {
        push(&mut out, drop_col(row, col));
    }
    for p in &pos {
        for n in &neg {
            let a = p.coeffs[col].clone();
            let b = -n.coeffs[col].clone();
            // b * p + a * n has a zero in the eliminated column.
            let coeffs: Vec<BigInt> = p
                .coeffs
                .iter()
                .zip(&n.coeffs)
                .map(|(pc, nc)| pc * &b + nc * &a)
                .collect();
            let rhs = &p.rhs * &b + &n.rhs * &a;
            push(&mut out, drop_col(Row { coeffs, rhs }, col));
            if out.len() > FM_ROW_GUARD {
                return Err(Error::Resource(format!(
                    "elimination exceeded {} rows",
                    FM_ROW_GUARD
                )));
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|(coeffs, rhs)| Row { coeffs, rhs })
        .collect())
}

fn drop_col(row: Row, col: usize) -> Row {
    let mut coeffs = row.coeffs;
    coeffs.remove(col);
    Row {
        coeffs,
        rhs: row.rhs,
    }
}

/// H-representation of P_G obtained purely from its vertex description.
pub fn h_representation_from_vertices(g: &Graph) -> Result<HRepresentation> {
    let n = g.n_vertices();
    let mut points = Vec::with_capacity(2 * g.n_edges());
    for &(u, v) in g.edges() {
        let mut p = vec![0i64; n];
        p[u] = 1;
        p[v] = -1;
        points.push(p.clone());
        p[u] = -1;
        p[v] = 1;
        points.push(p);
    }
    project_convex_hull(&points)
}

/// Count lattice points of the n-th dilate of P_G against the projected
/// H-representation, scanning the same sum-zero box as the facet-based
/// counter but sharing none of its machinery.
pub fn count_lattice_points_via_fm(g: &Graph, n: u64) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let h = h_representation_from_vertices(g)?;
    let nv = g.n_vertices();
    let n = n as i64;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut x = vec![-n; nv - 1];
    let mut count = BigInt::zero();
    loop {
        let rest: i64 = x.iter().sum();
        if rest.abs() <= n {
            let point: Vec<i64> = std::iter::once(-rest).chain(x.iter().copied()).collect();
            if h.contains_dilated(&point, n) {
                count += 1;
            }
        }
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_projection() {
        // conv{(1,-1), (-1,1)}: expect x_0 + x_1 = 0 with |x_0| <= 1.
        let h = project_convex_hull(&[vec![1, -1], vec![-1, 1]]).unwrap();
        assert!(!h.equalities.is_empty());
        assert!(h.contains_dilated(&[1, -1], 1));
        assert!(h.contains_dilated(&[0, 0], 1));
        assert!(!h.contains_dilated(&[2, -2], 1));
        assert!(h.contains_dilated(&[2, -2], 2));
        assert!(!h.contains_dilated(&[1, 0], 1));
    }

    #[test]
    fn triangle_dilates() {
        let g = Graph::complete(3).unwrap();
        // P_{K_3} is a hexagon: 7 points at n = 1, 19 at n = 2
        // (centered hexagonal numbers).
        assert_eq!(count_lattice_points_via_fm(&g, 1).unwrap(), BigInt::from(7));
        assert_eq!(
            count_lattice_points_via_fm(&g, 2).unwrap(),
            BigInt::from(19)
        );
    }

    #[test]
    fn square_dilates() {
        let (g, _) = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(count_lattice_points_via_fm(&g, 1).unwrap(), BigInt::from(9));
        assert_eq!(
            count_lattice_points_via_fm(&g, 2).unwrap(),
            BigInt::from(35)
        );
    }
}
