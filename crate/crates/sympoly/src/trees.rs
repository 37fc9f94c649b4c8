//! Directed spanning trees of K_{a+1,b+1} that index the maximal cells of
//! the Groebner triangulation, the ingoing-edge statistic of the half-open
//! decomposition, and the h*-polynomial as its histogram.
//!
//! Vertex encoding: top vertices v_0..v_a are 0..=a, bottom vertices
//! w_0..w_b are a+1..=a+1+b, both in left-to-right drawing order.

use crate::error::{Error, Result};
use crate::graph::{Dsu, Graph};
use crate::poly::{binomial, Polynomial};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::BTreeSet;

/// Guard for the tree histogram enumeration.
pub const TREE_ENUMERATION_GUARD: u64 = 10_000_000;

/// An orientation-labeled spanning tree of K_{a+1,b+1}. Edges are stored as
/// (tail, head) pairs sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DirectedSpanningTree {
    a: usize,
    b: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedSpanningTree {
    pub fn new(a: usize, b: usize, mut edges: Vec<(usize, usize)>) -> DirectedSpanningTree {
        edges.sort_unstable();
        DirectedSpanningTree { a, b, edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn shifted_parts(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    fn w0(&self) -> usize {
        self.a + 1
    }

    fn is_top(&self, v: usize) -> bool {
        v <= self.a
    }

    /// Edges oriented from the bottom line to the top line.
    pub fn up_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied().filter(|&(tail, _)| tail > self.a)
    }

    /// Edges oriented from the top line to the bottom line.
    pub fn down_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied().filter(|&(tail, _)| tail <= self.a)
    }

    /// Vertex set of the upward subtree; {w_0} when no edge points up.
    pub fn up_vertex_set(&self) -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        for (tail, head) in self.up_edges() {
            set.insert(tail);
            set.insert(head);
        }
        if set.is_empty() {
            set.insert(self.w0());
        }
        set
    }

    /// Vertex set of the downward subtree; {v_0} when no edge points down.
    pub fn down_vertex_set(&self) -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        for (tail, head) in self.down_edges() {
            set.insert(tail);
            set.insert(head);
        }
        if set.is_empty() {
            set.insert(0);
        }
        set
    }

    /// |A_down|: top vertices of the downward subtree.
    pub fn a_down(&self) -> usize {
        self.down_vertex_set()
            .iter()
            .filter(|&&v| self.is_top(v))
            .count()
    }

    /// |B_up|: bottom vertices of the upward subtree.
    pub fn b_up(&self) -> usize {
        self.up_vertex_set()
            .iter()
            .filter(|&&v| !self.is_top(v))
            .count()
    }

    /// |A_up|: top vertices of the upward subtree.
    pub fn a_up(&self) -> usize {
        self.up_vertex_set()
            .iter()
            .filter(|&&v| self.is_top(v))
            .count()
    }

    pub fn vertex_name(&self, v: usize) -> String {
        if self.is_top(v) {
            format!("v{}", v)
        } else {
            format!("w{}", v - self.a - 1)
        }
    }

    /// Render as an arrow list, e.g. `w0->v0, v0->w1`.
    pub fn arrow_list(&self) -> String {
        self.edges
            .iter()
            .map(|&(t, h)| format!("{}->{}", self.vertex_name(t), self.vertex_name(h)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

// Crossing test in the two-line drawing: edges (v_i, w_j) and (v_k, w_l)
// cross iff (i - k)(j - l) < 0.
fn crosses(e1: (usize, usize), e2: (usize, usize)) -> bool {
    let (i, j) = e1;
    let (k, l) = e2;
    (i as i64 - k as i64) * (j as i64 - l as i64) < 0
}

// Top/bottom position pair of an edge regardless of orientation.
fn positions(a: usize, edge: (usize, usize)) -> (usize, usize) {
    let (x, y) = edge;
    if x <= a {
        (x, y - a - 1)
    } else {
        (y, x - a - 1)
    }
}

/// All planar spanning trees of the complete bipartite graph on the given
/// top and bottom positions, as (top, bottom) position pairs.
///
/// In the two-line drawing a spanning tree is non-crossing exactly when the
/// i-th top vertex covers a contiguous interval of bottoms and consecutive
/// intervals share exactly their endpoint, so the trees are in bijection
/// with weakly increasing cut sequences.
fn planar_trees_on(tops: &[usize], bottoms: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let p = tops.len();
    let q = bottoms.len();
    debug_assert!(p >= 1 && q >= 1);
    let mut out = Vec::new();
    let mut cuts = vec![0usize; p + 1];
    cuts[p] = q - 1;
    fn rec(
        i: usize,
        p: usize,
        q: usize,
        cuts: &mut Vec<usize>,
        tops: &[usize],
        bottoms: &[usize],
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == p {
            let mut edges = Vec::with_capacity(p + q - 1);
            for t in 0..p {
                for s in cuts[t]..=cuts[t + 1] {
                    edges.push((tops[t], bottoms[s]));
                }
            }
            out.push(edges);
            return;
        }
        for c in cuts[i - 1]..q {
            cuts[i] = c;
            rec(i + 1, p, q, cuts, tops, bottoms, out);
        }
    }
    if p == 1 {
        out.push((0..q).map(|s| (tops[0], bottoms[s])).collect());
    } else {
        rec(1, p, q, &mut cuts, tops, bottoms, &mut out);
    }
    out
}

/// Number of planar (undirected) spanning trees of K_{a+1,b+1}, by direct
/// enumeration of the staircase structures.
pub fn planar_spanning_tree_count(a: usize, b: usize) -> BigInt {
    let tops: Vec<usize> = (0..=a).collect();
    let bottoms: Vec<usize> = (0..=b).collect();
    BigInt::from(planar_trees_on(&tops, &bottoms).len())
}

/// Predicted size of the tree family, used only as an enumeration guard.
fn expected_tree_count(a: usize, b: usize) -> BigInt {
    let d = (a + b + 1) as i64;
    let (a, b) = (a as i64, b as i64);
    let mut total = BigInt::from(0);
    for i in 0..=a.min(b) {
        total += binomial(2 * i, i)
            * binomial(a, i)
            * binomial(b, i)
            * (BigInt::from(1) << (d - 2 * i) as usize);
    }
    total
}

/// Enumerate the directed spanning trees of K_{a+1,b+1} that correspond to
/// maximal cells of the Groebner triangulation: an edge between v_0 and
/// w_0 is present, the up and down subtrees are planar, and they meet in
/// exactly {v_0} or exactly {w_0}.
///
/// Construction glues one planar upward tree and one planar downward tree
/// at the shared vertex; the v_0-w_0 edge then comes for free because a
/// planar spanning tree on leftmost vertices always contains their edge.
pub fn enumerate_t(a: usize, b: usize) -> Vec<DirectedSpanningTree> {
    let mut out = Vec::new();
    let top_rest: Vec<usize> = (1..=a).collect();
    let bottom_all: Vec<usize> = (0..=b).collect();

    // Glue at v_0: the bottom line is split between the two subtrees.
    for s_a in subsets(&top_rest) {
        let a_up: Vec<usize> = std::iter::once(0).chain(s_a.iter().copied()).collect();
        let a_down: Vec<usize> = std::iter::once(0)
            .chain(top_rest.iter().copied().filter(|v| !s_a.contains(v)))
            .collect();
        for b_up in subsets(&bottom_all) {
            let b_down: Vec<usize> = bottom_all
                .iter()
                .copied()
                .filter(|w| !b_up.contains(w))
                .collect();
            if b_up.contains(&0) {
                // w_0 joins the upward subtree.
                if b_down.is_empty() {
                    if a_down.len() == 1 {
                        // All edges point up.
                        for up in planar_trees_on(&a_up, &b_up) {
                            out.push(build_tree(a, b, &up, &[]));
                        }
                    }
                    continue;
                }
                for up in planar_trees_on(&a_up, &b_up) {
                    for down in planar_trees_on(&a_down, &b_down) {
                        out.push(build_tree(a, b, &up, &down));
                    }
                }
            } else {
                // w_0 joins the downward subtree; an empty upward side
                // would glue at w_0 instead and is handled below.
                if b_up.is_empty() {
                    continue;
                }
                for up in planar_trees_on(&a_up, &b_up) {
                    for down in planar_trees_on(&a_down, &b_down) {
                        out.push(build_tree(a, b, &up, &down));
                    }
                }
            }
        }
    }

    // Glue at w_0: the top line is split between the two subtrees.
    let bottom_rest: Vec<usize> = (1..=b).collect();
    let top_all: Vec<usize> = (0..=a).collect();
    for s_b in subsets(&bottom_rest) {
        let b_up: Vec<usize> = std::iter::once(0).chain(s_b.iter().copied()).collect();
        let b_down: Vec<usize> = std::iter::once(0)
            .chain(bottom_rest.iter().copied().filter(|w| !s_b.contains(w)))
            .collect();
        for a_up in subsets(&top_all) {
            let a_down: Vec<usize> = top_all
                .iter()
                .copied()
                .filter(|v| !a_up.contains(v))
                .collect();
            if a_up.is_empty() {
                // All edges point down.
                if s_b.is_empty() {
                    for down in planar_trees_on(&a_down, &b_down) {
                        out.push(build_tree(a, b, &[], &down));
                    }
                }
                continue;
            }
            if a_down.is_empty() {
                // All edges point up: already produced by the v_0 glue.
                continue;
            }
            for up in planar_trees_on(&a_up, &b_up) {
                for down in planar_trees_on(&a_down, &b_down) {
                    out.push(build_tree(a, b, &up, &down));
                }
            }
        }
    }

    out.sort();
    out
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << items.len());
    for mask in 0u32..(1 << items.len()) {
        out.push(
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect(),
        );
    }
    out
}

fn build_tree(
    a: usize,
    b: usize,
    up: &[(usize, usize)],
    down: &[(usize, usize)],
) -> DirectedSpanningTree {
    let mut edges = Vec::with_capacity(up.len() + down.len());
    for &(i, j) in up {
        edges.push((a + 1 + j, i));
    }
    for &(i, j) in down {
        edges.push((i, a + 1 + j));
    }
    DirectedSpanningTree::new(a, b, edges)
}

/// Cross-validation fallback: every directed spanning tree of K_{a+1,b+1},
/// filtered by the forbidden configurations (same-direction crossings, and
/// a vertex other than v_0 / w_0 meeting both an up and a down edge).
pub fn enumerate_t_by_filter(a: usize, b: usize) -> Result<Vec<DirectedSpanningTree>> {
    let (g, _) = Graph::complete_bipartite(a + 1, b + 1)?;
    let mut out = Vec::new();
    for tree in g.spanning_trees_vec()? {
        let m = tree.len();
        for mask in 0u32..(1 << m) {
            let edges: Vec<(usize, usize)> = tree
                .iter()
                .enumerate()
                .map(|(k, &(u, v))| {
                    // u < v, so u is the top vertex; bit set = directed up.
                    if mask >> k & 1 == 1 {
                        (v, u)
                    } else {
                        (u, v)
                    }
                })
                .collect();
            if avoids_forbidden(a, &edges) {
                out.push(DirectedSpanningTree::new(a, b, edges));
            }
        }
    }
    out.sort();
    Ok(out)
}

fn avoids_forbidden(a: usize, edges: &[(usize, usize)]) -> bool {
    let ups: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(t, _)| t > a)
        .map(|e| positions(a, e))
        .collect();
    let downs: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(t, _)| t <= a)
        .map(|e| positions(a, e))
        .collect();
    for set in [&ups, &downs] {
        for x in 0..set.len() {
            for y in (x + 1)..set.len() {
                if crosses(set[x], set[y]) {
                    return false;
                }
            }
        }
    }
    // A vertex other than v_0, w_0 may not meet both subtrees.
    let w0 = a + 1;
    let mut in_up = BTreeSet::new();
    let mut in_down = BTreeSet::new();
    for &(t, h) in edges {
        if t > a {
            in_up.insert(t);
            in_up.insert(h);
        } else {
            in_down.insert(t);
            in_down.insert(h);
        }
    }
    in_up
        .intersection(&in_down)
        .all(|&v| v == 0 || v == w0)
}

/// Number of tree edges oriented into the component of w_0 after their
/// removal; reads off the half-open decomposition statistic directly.
pub fn ingoing_count(t: &DirectedSpanningTree) -> usize {
    let nv = t.a + t.b + 2;
    let w0 = t.w0();
    let mut count = 0;
    for skip in 0..t.edges.len() {
        let mut dsu = Dsu::new(nv);
        for (k, &(x, y)) in t.edges.iter().enumerate() {
            if k != skip {
                dsu.union(x, y);
            }
        }
        let (_, head) = t.edges[skip];
        if dsu.find(head) == dsu.find(w0) {
            count += 1;
        }
    }
    count
}

/// The case-split closed form for the ingoing count: with the up and down
/// subtrees meeting in {v_0}, the answer is |A_down| + |B_up| - 2 when w_0
/// sits upstairs and |A_down| + |B_up| when it sits downstairs; meeting in
/// {w_0} gives |A_down| + |B_up| - 1.
pub fn ingoing_count_closed(t: &DirectedSpanningTree) -> Result<usize> {
    let up = t.up_vertex_set();
    let down = t.down_vertex_set();
    let inter: Vec<usize> = up.intersection(&down).copied().collect();
    let w0 = t.w0();
    let base = t.a_down() + t.b_up();
    if inter == [0] {
        if up.contains(&w0) {
            Ok(base - 2)
        } else if down.contains(&w0) {
            Ok(base)
        } else {
            Err(Error::Inconsistent(
                "w_0 missing from both subtrees".into(),
            ))
        }
    } else if inter == [w0] {
        Ok(base - 1)
    } else {
        Err(Error::Inconsistent(format!(
            "subtree intersection {:?} is not a single distinguished vertex",
            inter
        )))
    }
}

/// h*-polynomial of P_{K_{a+1,b+1}} as the histogram of the ingoing-edge
/// statistic over the tree family.
pub fn hstar_via_trees(a: usize, b: usize) -> Result<Polynomial> {
    let expected = expected_tree_count(a, b);
    if expected.to_u64().map_or(true, |n| n > TREE_ENUMERATION_GUARD) {
        return Err(Error::Resource(format!(
            "tree family has {} members, guard is {}",
            expected, TREE_ENUMERATION_GUARD
        )));
    }
    let trees = enumerate_t(a, b);
    let mut histogram = vec![BigInt::from(0); a + b + 2];
    for t in &trees {
        histogram[ingoing_count(t)] += 1;
    }
    Ok(Polynomial::from_coeffs(histogram))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_family_has_both_orientations() {
        let trees = enumerate_t(0, 0);
        assert_eq!(trees.len(), 2);
        // v_0 -> w_0 has one ingoing edge, w_0 -> v_0 has none.
        let down = DirectedSpanningTree::new(0, 0, vec![(0, 1)]);
        let up = DirectedSpanningTree::new(0, 0, vec![(1, 0)]);
        assert!(trees.contains(&down) && trees.contains(&up));
        assert_eq!(ingoing_count(&down), 1);
        assert_eq!(ingoing_count(&up), 0);
        // Case split: down is the {w_0} glue, up is the {v_0} glue.
        assert_eq!(ingoing_count_closed(&down).unwrap(), 1);
        assert_eq!(ingoing_count_closed(&up).unwrap(), 0);
    }

    #[test]
    fn family_sizes_match_normalized_volumes() {
        // h*_{1,1}(1) = 12 and h*_{1,2}(1) = 1+8+14+8+1 = 32.
        assert_eq!(enumerate_t(1, 1).len(), 12);
        assert_eq!(enumerate_t(1, 2).len(), 32);
    }

    #[test]
    fn histograms_reproduce_hstar() {
        assert_eq!(hstar_via_trees(0, 0).unwrap(), Polynomial::from_i64s(&[1, 1]));
        assert_eq!(
            hstar_via_trees(1, 1).unwrap(),
            Polynomial::from_i64s(&[1, 5, 5, 1])
        );
        assert_eq!(
            hstar_via_trees(1, 2).unwrap(),
            Polynomial::from_i64s(&[1, 8, 14, 8, 1])
        );
    }

    #[test]
    fn constructive_equals_filtered() {
        for (a, b) in [(0usize, 0usize), (0, 2), (1, 1), (1, 2), (2, 2)] {
            let built = enumerate_t(a, b);
            let filtered = enumerate_t_by_filter(a, b).unwrap();
            assert_eq!(built, filtered, "mismatch at ({}, {})", a, b);
        }
    }

    #[test]
    fn closed_ingoing_matches_direct() {
        for (a, b) in [(1usize, 1usize), (1, 2), (2, 2)] {
            for t in enumerate_t(a, b) {
                assert_eq!(
                    ingoing_count(&t),
                    ingoing_count_closed(&t).unwrap(),
                    "tree {:?}",
                    t
                );
            }
        }
    }

    #[test]
    fn planar_tree_counts() {
        for a in 0..=4usize {
            for b in 0..=4usize {
                assert_eq!(
                    planar_spanning_tree_count(a, b),
                    binomial((a + b) as i64, b as i64),
                    "({}, {})",
                    a,
                    b
                );
            }
        }
    }

    #[test]
    fn planar_enumeration_matches_crossing_filter() {
        // Independent check of the staircase structure: enumerate all
        // spanning trees and keep the non-crossing ones.
        for (a, b) in [(1usize, 1usize), (1, 2), (2, 2), (2, 3)] {
            let (g, _) = Graph::complete_bipartite(a + 1, b + 1).unwrap();
            let brute = g
                .spanning_trees_vec()
                .unwrap()
                .into_iter()
                .filter(|tree| {
                    let pos: Vec<(usize, usize)> =
                        tree.iter().map(|&e| positions(a, e)).collect();
                    pos.iter()
                        .enumerate()
                        .all(|(x, &e1)| pos[x + 1..].iter().all(|&e2| !crosses(e1, e2)))
                })
                .count();
            let tops: Vec<usize> = (0..=a).collect();
            let bottoms: Vec<usize> = (0..=b).collect();
            assert_eq!(brute, planar_trees_on(&tops, &bottoms).len());
        }
    }

    #[test]
    fn all_up_members_count_planar_trees() {
        for (a, b) in [(1usize, 1usize), (2, 2), (2, 3)] {
            let all_up = enumerate_t(a, b)
                .into_iter()
                .filter(|t| t.down_edges().count() == 0)
                .count();
            assert_eq!(BigInt::from(all_up), planar_spanning_tree_count(a, b));
        }
    }

    #[test]
    fn arrow_list_rendering() {
        let t = DirectedSpanningTree::new(1, 0, vec![(2, 0), (1, 2)]);
        assert_eq!(t.arrow_list(), "v1->w0, w0->v0");
    }
}
