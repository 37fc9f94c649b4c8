//! Flag simplicial complexes given by their minimal non-faces (all pairs),
//! the balanced complex whose f-polynomial realizes gamma_{a,b}, and the
//! face/coloring bijection behind that identity.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use num_bigint::BigInt;
use std::collections::BTreeSet;

/// Guard on the number of faces enumerated from one complex.
pub const FACE_ENUMERATION_GUARD: usize = 10_000_000;

/// A flag simplicial complex on vertices 0..n: the faces are exactly the
/// vertex subsets containing none of the listed non-face pairs.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    n_vertices: usize,
    labels: Vec<String>,
    minimal_nonfaces: Vec<(usize, usize)>,
    colors: Option<Vec<usize>>,
    // compatible[v] has bit u set iff {u, v} is not a non-face.
    compatible: Vec<u128>,
}

impl SimplicialComplex {
    pub fn new(
        n_vertices: usize,
        nonfaces: &[(usize, usize)],
        labels: Option<Vec<String>>,
        colors: Option<Vec<usize>>,
    ) -> Result<SimplicialComplex> {
        if n_vertices > 128 {
            return Err(Error::Resource(
                "flag complexes are limited to 128 vertices".into(),
            ));
        }
        let mut minimal_nonfaces = Vec::with_capacity(nonfaces.len());
        for &(u, v) in nonfaces {
            if u == v || u >= n_vertices || v >= n_vertices {
                return Err(Error::InvalidArgument(format!(
                    "bad non-face pair ({}, {})",
                    u, v
                )));
            }
            minimal_nonfaces.push((u.min(v), u.max(v)));
        }
        minimal_nonfaces.sort_unstable();
        minimal_nonfaces.dedup();
        let all = if n_vertices == 128 {
            u128::MAX
        } else {
            (1u128 << n_vertices) - 1
        };
        let mut compatible = vec![all; n_vertices];
        for &(u, v) in &minimal_nonfaces {
            compatible[u] &= !(1u128 << v);
            compatible[v] &= !(1u128 << u);
        }
        let labels =
            labels.unwrap_or_else(|| (0..n_vertices).map(|v| v.to_string()).collect());
        Ok(SimplicialComplex {
            n_vertices,
            labels,
            minimal_nonfaces,
            colors,
            compatible,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn minimal_nonfaces(&self) -> &[(usize, usize)] {
        &self.minimal_nonfaces
    }

    pub fn colors(&self) -> Option<&[usize]> {
        self.colors.as_deref()
    }

    pub fn is_face(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(k, &u)| {
            vertices[k + 1..]
                .iter()
                .all(|&v| self.compatible[u] >> v & 1 == 1)
        })
    }

    /// All faces (including the empty face), each as a sorted vertex list,
    /// in lexicographic order.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>> {
        let mut out = vec![Vec::new()];
        let mut current = Vec::new();
        self.extend_faces(&mut current, 0, u128::MAX, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn extend_faces(
        &self,
        current: &mut Vec<usize>,
        from: usize,
        allowed: u128,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        for v in from..self.n_vertices {
            if allowed >> v & 1 == 0 {
                continue;
            }
            current.push(v);
            if out.len() >= FACE_ENUMERATION_GUARD {
                return Err(Error::Resource(format!(
                    "face enumeration exceeded {} faces",
                    FACE_ENUMERATION_GUARD
                )));
            }
            out.push(current.clone());
            self.extend_faces(current, v + 1, allowed & self.compatible[v], out)?;
            current.pop();
        }
        Ok(())
    }

    /// Faces that admit no extension by another compatible vertex.
    pub fn maximal_faces(&self) -> Result<Vec<Vec<usize>>> {
        let all = if self.n_vertices == 128 {
            u128::MAX
        } else {
            (1u128 << self.n_vertices) - 1
        };
        let faces = self.faces()?;
        Ok(faces
            .into_iter()
            .filter(|face| {
                let mut allowed = all;
                let mut mask = 0u128;
                for &v in face {
                    allowed &= self.compatible[v];
                    mask |= 1 << v;
                }
                allowed & !mask == 0
            })
            .collect())
    }

    /// Largest face cardinality minus one; the empty complex has dimension
    /// -1, reported as None.
    pub fn dimension(&self) -> Result<Option<usize>> {
        let faces = self.faces()?;
        Ok(faces.iter().map(|f| f.len()).max().and_then(|m| m.checked_sub(1)))
    }
}

/// Face-count generating polynomial sum_k (#faces with k vertices) t^k,
/// the grading under which the balanced complex below realizes gamma.
pub fn f_polynomial(complex: &SimplicialComplex) -> Result<Polynomial> {
    let faces = complex.faces()?;
    let mut counts = vec![BigInt::from(0); complex.n_vertices() + 1];
    for face in &faces {
        counts[face.len()] += 1;
    }
    Ok(Polynomial::from_coeffs(counts))
}

/// True iff every maximal face has pairwise distinct colors. Errors when
/// the complex carries no coloring.
pub fn check_balanced(complex: &SimplicialComplex) -> Result<bool> {
    let colors = complex
        .colors()
        .ok_or_else(|| Error::Domain("complex has no vertex coloring".into()))?;
    for face in complex.maximal_faces()? {
        let mut seen = BTreeSet::new();
        for &v in &face {
            if !seen.insert(colors[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// Vertex indexing of the balanced complex: x(i,j) then y(i,j), both blocks
// in row-major order with 1-based (i, j).
fn x_vertex(i: usize, j: usize, b: usize) -> usize {
    (i - 1) * b + (j - 1)
}

fn y_vertex(i: usize, j: usize, a: usize, b: usize) -> usize {
    a * b + (i - 1) * b + (j - 1)
}

/// The flag balanced simplicial complex whose f-polynomial is
/// gamma_{a,b}. Vertices are x(i,j) and y(i,j) for 1 <= i <= min(a,b),
/// 1 <= j <= max(a,b); the sides are swapped internally so the first index
/// range is the smaller one. Non-faces: two x's (or two y's) where one
/// index weakly increases while the other weakly decreases, and any x, y
/// pair sharing a row or a column. Both vertices of a pair (i, j) receive
/// color i.
pub fn build_nevo_complex(a: usize, b: usize) -> Result<SimplicialComplex> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "the balanced complex needs a, b >= 1".into(),
        ));
    }
    let (a, b) = (a.min(b), a.max(b));
    let n = 2 * a * b;
    let mut nonfaces = Vec::new();
    // Same-letter pairs: {x(i,j), x(i',j')} with i <= i', j >= j' and the
    // two vertices distinct; likewise for y.
    for i in 1..=a {
        for j in 1..=b {
            for i2 in i..=a {
                for j2 in 1..=j {
                    if (i, j) == (i2, j2) {
                        continue;
                    }
                    nonfaces.push((x_vertex(i, j, b), x_vertex(i2, j2, b)));
                    nonfaces.push((y_vertex(i, j, a, b), y_vertex(i2, j2, a, b)));
                }
            }
        }
    }
    // Mixed pairs sharing a row or a column.
    for i in 1..=a {
        for j in 1..=b {
            for i2 in 1..=a {
                nonfaces.push((x_vertex(i, j, b), y_vertex(i2, j, a, b)));
            }
            for j2 in 1..=b {
                nonfaces.push((x_vertex(i, j, b), y_vertex(i, j2, a, b)));
            }
        }
    }
    let mut labels = vec![String::new(); n];
    let mut colors = vec![0usize; n];
    for i in 1..=a {
        for j in 1..=b {
            labels[x_vertex(i, j, b)] = format!("x[{},{}]", i, j);
            labels[y_vertex(i, j, a, b)] = format!("y[{},{}]", i, j);
            colors[x_vertex(i, j, b)] = i;
            colors[y_vertex(i, j, a, b)] = i;
        }
    }
    SimplicialComplex::new(n, &nonfaces, Some(labels), Some(colors))
}

// A partial red/green coloring of [a] and [b]: everything else uncolored.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PartialColoring {
    green_a: Vec<usize>,
    red_a: Vec<usize>,
    green_b: Vec<usize>,
    red_b: Vec<usize>,
}

impl PartialColoring {
    fn is_good(&self) -> bool {
        self.green_a.len() == self.red_b.len() && self.green_b.len() == self.red_a.len()
    }

    fn greens(&self) -> usize {
        self.green_a.len() + self.green_b.len()
    }
}

// Face -> coloring: x-rows of the face are the greens of A and x-columns
// the reds of B; y-rows are the reds of A and y-columns the greens of B.
fn face_to_coloring(face: &[usize], a: usize, b: usize) -> PartialColoring {
    let mut c = PartialColoring {
        green_a: Vec::new(),
        red_a: Vec::new(),
        green_b: Vec::new(),
        red_b: Vec::new(),
    };
    for &v in face {
        if v < a * b {
            c.green_a.push(v / b + 1);
            c.red_b.push(v % b + 1);
        } else {
            let w = v - a * b;
            c.red_a.push(w / b + 1);
            c.green_b.push(w % b + 1);
        }
    }
    for list in [&mut c.green_a, &mut c.red_a, &mut c.green_b, &mut c.red_b] {
        list.sort_unstable();
    }
    c
}

// Coloring -> face: pair sorted green rows with sorted red columns into
// x-vertices, and sorted red rows with sorted green columns into
// y-vertices.
fn coloring_to_face(c: &PartialColoring, a: usize, b: usize) -> Option<Vec<usize>> {
    if !c.is_good() {
        return None;
    }
    let mut face = Vec::with_capacity(c.greens());
    for (i, j) in c.green_a.iter().zip(c.red_b.iter()) {
        face.push(x_vertex(*i, *j, b));
    }
    for (i, j) in c.red_a.iter().zip(c.green_b.iter()) {
        face.push(y_vertex(*i, *j, a, b));
    }
    face.sort_unstable();
    Some(face)
}

/// Explicitly verify the bijection between k-vertex faces of the balanced
/// complex and good partial red/green colorings with k green elements:
/// both composites are the identity and the gradings match.
pub fn coloring_bijection_check(a: usize, b: usize) -> Result<bool> {
    let (a, b) = (a.min(b), a.max(b));
    let complex = build_nevo_complex(a, b)?;
    let faces = complex.faces()?;

    // Forward then back on every face.
    for face in &faces {
        let coloring = face_to_coloring(face, a, b);
        if !coloring.is_good() || coloring.greens() != face.len() {
            return Ok(false);
        }
        match coloring_to_face(&coloring, a, b) {
            Some(back) if &back == face => {}
            _ => return Ok(false),
        }
    }

    // Back then forward on every good coloring, counting as we go.
    let mut good_count = 0usize;
    let mut assignment = vec![0u8; a + b]; // 0 none, 1 green, 2 red
    loop {
        let mut c = PartialColoring {
            green_a: Vec::new(),
            red_a: Vec::new(),
            green_b: Vec::new(),
            red_b: Vec::new(),
        };
        for (k, &v) in assignment.iter().enumerate() {
            match (k < a, v) {
                (true, 1) => c.green_a.push(k + 1),
                (true, 2) => c.red_a.push(k + 1),
                (false, 1) => c.green_b.push(k - a + 1),
                (false, 2) => c.red_b.push(k - a + 1),
                _ => {}
            }
        }
        if c.is_good() {
            good_count += 1;
            let Some(face) = coloring_to_face(&c, a, b) else {
                return Ok(false);
            };
            if !complex.is_face(&face) || face_to_coloring(&face, a, b) != c {
                return Ok(false);
            }
        }
        let mut k = 0;
        loop {
            if k == a + b {
                return Ok(good_count == faces.len());
            }
            if assignment[k] < 2 {
                assignment[k] += 1;
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::gamma_closed;

    #[test]
    fn smallest_complex() {
        let c = build_nevo_complex(1, 1).unwrap();
        assert_eq!(c.n_vertices(), 2);
        assert_eq!(c.minimal_nonfaces(), &[(0, 1)]);
        // Two isolated points: f = 1 + 2t = gamma_{1,1}.
        assert_eq!(f_polynomial(&c).unwrap(), Polynomial::from_i64s(&[1, 2]));
    }

    #[test]
    fn one_row_complexes_have_dimension_zero() {
        for b in 1..=4usize {
            let c = build_nevo_complex(1, b).unwrap();
            assert_eq!(c.dimension().unwrap(), Some(0));
            assert_eq!(f_polynomial(&c).unwrap(), gamma_closed(1, b));
        }
    }

    #[test]
    fn two_by_two_matches_gamma() {
        let c = build_nevo_complex(2, 2).unwrap();
        assert_eq!(c.n_vertices(), 8);
        // 1 + 8t + 6t^2, and the x-diagonal chain is a maximal face.
        assert_eq!(f_polynomial(&c).unwrap(), Polynomial::from_i64s(&[1, 8, 6]));
        let diag = vec![x_vertex(1, 1, 2), x_vertex(2, 2, 2)];
        assert!(c.is_face(&diag));
        assert!(check_balanced(&c).unwrap());
    }

    #[test]
    fn f_polynomial_matches_gamma_up_to_four() {
        for a in 1..=4usize {
            for b in 1..=4usize {
                let c = build_nevo_complex(a, b).unwrap();
                assert_eq!(
                    f_polynomial(&c).unwrap(),
                    gamma_closed(a, b),
                    "({}, {})",
                    a,
                    b
                );
                assert!(check_balanced(&c).unwrap(), "({}, {})", a, b);
            }
        }
    }

    #[test]
    fn dimension_matches_gamma_degree() {
        for (a, b) in [(2usize, 3usize), (3, 3), (2, 5)] {
            let c = build_nevo_complex(a, b).unwrap();
            assert_eq!(c.dimension().unwrap(), Some(a.min(b) - 1));
        }
    }

    #[test]
    fn improper_coloring_is_detected() {
        let c = SimplicialComplex::new(2, &[], None, Some(vec![1, 1])).unwrap();
        assert!(!check_balanced(&c).unwrap());
        let single = SimplicialComplex::new(1, &[], None, Some(vec![1])).unwrap();
        assert!(check_balanced(&single).unwrap());
        let uncolored = SimplicialComplex::new(2, &[], None, None).unwrap();
        assert!(check_balanced(&uncolored).is_err());
    }

    #[test]
    fn empty_nonfaces_give_full_simplex() {
        let c = SimplicialComplex::new(3, &[], None, None).unwrap();
        assert_eq!(f_polynomial(&c).unwrap(), Polynomial::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(c.maximal_faces().unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn bijection_examples() {
        // (1,1): 3 faces vs 3 good colorings; (2,2): 15 = gamma_{2,2}(1).
        assert!(coloring_bijection_check(1, 1).unwrap());
        assert!(coloring_bijection_check(2, 2).unwrap());
        assert!(coloring_bijection_check(1, 3).unwrap());
        assert!(coloring_bijection_check(3, 2).unwrap());
    }
}
