//! Facet enumeration and counting for symmetric edge polytopes.
//!
//! A vertex labeling f defines a facet of P_G exactly when consecutive
//! labels differ by at most one across every edge and the edges where they
//! differ by exactly one span the graph. Everything here works with that
//! characterization; the lattice-point side lives in [`crate::ehrhart`].

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::binomial;
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

/// An integer vertex labeling representing a facet-defining functional,
/// normalized so its minimum value is 0. The functional lives in the dual
/// lattice (labelings modulo a common constant), so any representative
/// gives the same pairing against sum-zero lattice points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FacetFunction {
    values: Vec<i64>,
}

impl FacetFunction {
    /// Normalize an arbitrary representative to minimum value 0.
    pub fn from_values(values: Vec<i64>) -> FacetFunction {
        let min = values.iter().copied().min().unwrap_or(0);
        FacetFunction {
            values: values.into_iter().map(|v| v - min).collect(),
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The negated functional (the antipodal facet), renormalized.
    pub fn negated(&self) -> FacetFunction {
        FacetFunction::from_values(self.values.iter().map(|&v| -v).collect())
    }

    /// Pairing sum f(v) x_v. Constant shifts of f do not change the value
    /// on sum-zero points.
    pub fn pair(&self, x: &LatticePoint) -> i64 {
        self.values
            .iter()
            .zip(x.coords())
            .map(|(&f, &c)| f * c)
            .sum()
    }

    /// Check the two facet conditions directly against a graph: labels
    /// change by at most one across each edge, and the edges with a change
    /// of exactly one span the graph.
    pub fn is_facet_defining(&self, g: &Graph) -> bool {
        let mut dsu = crate::graph::Dsu::new(g.n_vertices());
        for &(u, v) in g.edges() {
            let d = (self.values[u] - self.values[v]).abs();
            if d > 1 {
                return false;
            }
            if d == 1 {
                dsu.union(u, v);
            }
        }
        dsu.components() == 1
    }
}

/// A point of the sum-zero lattice spanned by P_G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<LatticePoint> {
        if coords.iter().sum::<i64>() != 0 {
            return Err(Error::Domain(
                "lattice point coordinates must sum to zero".into(),
            ));
        }
        Ok(LatticePoint { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

/// All facet-defining functions of P_G, normalized to minimum value 0,
/// deduplicated and sorted lexicographically.
///
/// Search: assign values in breadth-first order from vertex 0 with
/// f(vertex 0) = 0; a new vertex may only take values within distance one
/// of every already-assigned neighbour. Assignments are then filtered by
/// the spanning condition. Values stay within the graph diameter, so the
/// search terminates without an artificial box.
pub fn enumerate_facets(g: &Graph) -> Result<Vec<FacetFunction>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n_edges() == 0 {
        return Err(Error::Domain(
            "facet enumeration needs at least one edge".into(),
        ));
    }
    let order = g.bfs_order();
    let adj = g.adjacency();
    let n = g.n_vertices();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    let mut out = Vec::new();
    let mut values = vec![0i64; n];
    // Depth-first over (depth in BFS order, candidate value).
    let mut pending: Vec<Vec<i64>> = vec![Vec::new(); n + 1];
    pending[0] = vec![0];
    let mut depth = 0usize;
    loop {
        if let Some(val) = pending[depth].pop() {
            values[order[depth]] = val;
            if depth + 1 == n {
                let f = FacetFunction::from_values(values.clone());
                if f.is_facet_defining(g) {
                    out.push(f);
                }
                continue;
            }
            depth += 1;
            let v = order[depth];
            let mut lo = i64::MIN;
            let mut hi = i64::MAX;
            for &u in &adj[v] {
                if position[u] < depth {
                    lo = lo.max(values[u] - 1);
                    hi = hi.min(values[u] + 1);
                }
            }
            debug_assert!(lo > i64::MIN, "BFS order guarantees a seen neighbour");
            pending[depth] = (lo..=hi).collect();
        } else {
            if depth == 0 {
                break;
            }
            depth -= 1;
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// 2^a + 2^b - 2, the facet count of P_{K_{a,b}}.
pub fn count_facets_bipartite(a: usize, b: usize) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "bipartite parts must be nonempty".into(),
        ));
    }
    Ok((BigInt::one() << a) + (BigInt::one() << b) - 2)
}

/// 2^(sum a_i) - sum (2^(a_i) - 2) - 2, the facet count for a complete
/// k-partite graph with k >= 3 parts.
pub fn count_facets_multipartite(parts: &[usize]) -> Result<BigInt> {
    if parts.len() < 3 {
        return Err(Error::Domain(
            "the k-partite count needs at least 3 parts; use the bipartite formula".into(),
        ));
    }
    if parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidArgument("empty part".into()));
    }
    let total: usize = parts.iter().sum();
    let mut count = (BigInt::one() << total) - 2;
    for &p in parts {
        count -= (BigInt::one() << p) - 2;
    }
    Ok(count)
}

/// True iff x lies in the n-th dilate: pairing with every facet functional
/// is at most n. Any representative of each functional works because the
/// coordinates sum to zero.
pub fn membership(x: &LatticePoint, n: i64, facets: &[FacetFunction]) -> Result<bool> {
    if x.coords.iter().sum::<i64>() != 0 {
        return Err(Error::Domain(
            "membership is defined on the sum-zero lattice".into(),
        ));
    }
    Ok(facets.iter().all(|f| f.pair(x) <= n))
}

/// Positional classification of a facet of a complete multipartite graph,
/// relative to a given partition of the vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FacetClass {
    /// One part takes both extreme values, all other parts sit in between.
    SplitPart,
    /// Two values, each part constant.
    ConstantParts,
    /// Two values, at least two parts non-constant.
    MixedParts,
}

/// Classify a facet function against a partition of the vertex set.
/// The class names are positional; the families carry no canonical names.
pub fn classify_facet(parts: &[Vec<usize>], f: &FacetFunction) -> Result<FacetClass> {
    let spread = f.values().iter().max().unwrap() - f.values().iter().min().unwrap();
    if spread == 2 {
        return Ok(FacetClass::SplitPart);
    }
    if spread != 1 {
        return Err(Error::Domain("not a normalized facet function".into()));
    }
    let nonconstant = parts
        .iter()
        .filter(|p| {
            let v0 = f.values()[p[0]];
            p.iter().any(|&v| f.values()[v] != v0)
        })
        .count();
    Ok(match nonconstant {
        0 => FacetClass::ConstantParts,
        _ => FacetClass::MixedParts,
    })
}

/// Normalized volume of the facet of P_{K_{a+1,b+1}} whose functional
/// vanishes on the top side and takes value +1 on b1 + 1 bottom vertices
/// and -1 on the remaining b2 = b - b1 (so b1 + b2 = b).
///
/// For b2 >= 1 this is sum_i C(b1+i, b1) C(b2+a-i-1, b2-1) C(a, i); the
/// all-plus facet (b2 = 0) is a product of two simplices with volume
/// C(a + b, a).
pub fn facet_volume_bipartite(a: usize, b1: usize, b2: usize) -> BigInt {
    let (a, b1, b2) = (a as i64, b1 as i64, b2 as i64);
    if b2 == 0 {
        return binomial(a + b1, a);
    }
    let mut acc = BigInt::from(0);
    for i in 0..=a {
        acc += binomial(b1 + i, b1) * binomial(b2 + a - i - 1, b2 - 1) * binomial(a, i);
    }
    acc
}

/// Volume of an arbitrary facet of P_{K_{a+1,b+1}} given as a normalized
/// facet function; permuting vertices inside a side is a graph automorphism,
/// so only the sign counts matter.
pub fn facet_volume_from_function(a: usize, b: usize, f: &FacetFunction) -> Result<BigInt> {
    let top = &f.values()[..a + 1];
    let bottom = &f.values()[a + 1..];
    let constant = |s: &[i64]| s.iter().all(|&v| v == s[0]);
    let (side_len, other, plus) = if constant(top) && !constant(bottom) {
        (b, a, count_value(bottom, top[0] + 1))
    } else if constant(bottom) && !constant(top) {
        (a, b, count_value(top, bottom[0] + 1))
    } else if constant(top) && constant(bottom) {
        // All-plus (or all-minus) facet: both sides constant, one apart.
        return Ok(binomial((a + b) as i64, a as i64));
    } else {
        return Err(Error::Domain(
            "not a facet function of a complete bipartite graph".into(),
        ));
    };
    // plus values sit one above the constant side, the rest one below.
    let b1 = plus.checked_sub(1).ok_or_else(|| {
        Error::Domain("facet function has no +1 values on the split side".into())
    })?;
    let b2 = side_len - b1;
    Ok(facet_volume_bipartite(other, b1, b2))
}

fn count_value(s: &[i64], v: i64) -> usize {
    s.iter().filter(|&&x| x == v).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_has_two_facets() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let facets = enumerate_facets(&g).unwrap();
        assert_eq!(
            facets,
            vec![
                FacetFunction::from_values(vec![0, 1]),
                FacetFunction::from_values(vec![1, 0])
            ]
        );
    }

    #[test]
    fn k22_has_six_facets() {
        let (g, _) = Graph::complete_bipartite(2, 2).unwrap();
        let facets = enumerate_facets(&g).unwrap();
        assert_eq!(facets.len(), 6);
        for f in &facets {
            assert!(f.is_facet_defining(&g));
            assert_eq!(*f.values().iter().min().unwrap(), 0);
        }
    }

    #[test]
    fn k3_is_a_hexagon() {
        let g = Graph::complete(3).unwrap();
        assert_eq!(enumerate_facets(&g).unwrap().len(), 6);
    }

    #[test]
    fn disconnected_and_edgeless_inputs_fail() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(enumerate_facets(&g), Err(Error::Disconnected)));
        let point = Graph::from_edges(1, &[]).unwrap();
        assert!(matches!(enumerate_facets(&point), Err(Error::Domain(_))));
    }

    #[test]
    fn bipartite_count_formula() {
        assert_eq!(count_facets_bipartite(2, 3).unwrap(), BigInt::from(10));
        assert_eq!(count_facets_bipartite(1, 1).unwrap(), BigInt::from(2));
        assert_eq!(count_facets_bipartite(5, 5).unwrap(), BigInt::from(62));
    }

    #[test]
    fn multipartite_count_formula() {
        assert_eq!(
            count_facets_multipartite(&[1, 1, 1]).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            count_facets_multipartite(&[2, 1, 1]).unwrap(),
            BigInt::from(12)
        );
        assert_eq!(
            count_facets_multipartite(&[1, 1, 1, 1]).unwrap(),
            BigInt::from(14)
        );
        assert!(count_facets_multipartite(&[2, 2]).is_err());
    }

    #[test]
    fn membership_examples() {
        let (g, _) = Graph::complete_bipartite(2, 2).unwrap();
        let facets = enumerate_facets(&g).unwrap();
        // A vertex of P_G lies in the first dilate.
        let vertex = LatticePoint::new(vec![1, 0, -1, 0]).unwrap();
        assert!(membership(&vertex, 1, &facets).unwrap());
        // (1, 1, -1, -1) enters only at the second dilate.
        let x = LatticePoint::new(vec![1, 1, -1, -1]).unwrap();
        assert!(!membership(&x, 1, &facets).unwrap());
        assert!(membership(&x, 2, &facets).unwrap());
        // The origin is in every dilate.
        let origin = LatticePoint::new(vec![0, 0, 0, 0]).unwrap();
        assert!(membership(&origin, 0, &facets).unwrap());
        assert!(LatticePoint::new(vec![1, 0, 0, 0]).is_err());
    }

    #[test]
    fn antipodal_symmetry() {
        let g = Graph::complete_multipartite(&[2, 1, 1]).unwrap();
        let facets = enumerate_facets(&g).unwrap();
        for f in &facets {
            assert!(facets.binary_search(&f.negated()).is_ok());
        }
    }

    #[test]
    fn facet_volume_examples() {
        // Evaluate the sum by hand: a=1, b1=0, b2=1 gives 1 + 1 = 2.
        assert_eq!(facet_volume_bipartite(1, 0, 1), BigInt::from(2));
        // Product of simplices: C(2, 1) = 2.
        assert_eq!(facet_volume_bipartite(1, 1, 0), BigInt::from(2));
    }

    #[test]
    fn facet_volumes_of_k22_sum_to_normalized_volume() {
        let (g, _) = Graph::complete_bipartite(2, 2).unwrap();
        let facets = enumerate_facets(&g).unwrap();
        let total: BigInt = facets
            .iter()
            .map(|f| facet_volume_from_function(1, 1, f).unwrap())
            .sum();
        // h*_{1,1}(1) = 1 + 5 + 5 + 1 = 12.
        assert_eq!(total, BigInt::from(12));
    }
}
