//! Simple undirected graphs with dense 0-based vertex indices, family
//! constructors, and streaming spanning-tree enumeration.

use crate::error::{Error, Result};
use serde::Deserialize;
use std::collections::VecDeque;

/// A finite simple graph. Edges are stored sorted as (u, v) with u < v;
/// construction rejects loops and duplicate edges. Values are immutable
/// after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

/// Two-line drawing order for a complete bipartite graph: `top` lists
/// v_0..v_{a-1} left to right, `bottom` lists w_0..w_{b-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteLayout {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl Graph {
    /// Build a graph from an edge list, validating simplicity.
    pub fn from_edges(n: usize, raw: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut edges = Vec::with_capacity(raw.len());
        for &(u, v) in raw {
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {}", u)));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({}, {}) out of range for {} vertices",
                    u, v, n
                )));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate edge".into()));
        }
        Ok(Graph {
            n,
            edges,
            labels: None,
        })
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "complete graph needs at least one vertex".into(),
            ));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite graph K_{a,b} with the two-line drawing order:
    /// vertices 0..a on the top line, a..a+b on the bottom line.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<(Graph, BipartiteLayout)> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidArgument(
                "bipartite parts must be nonempty".into(),
            ));
        }
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        let mut g = Graph::from_edges(a + b, &edges)?;
        let mut labels = Vec::with_capacity(a + b);
        for i in 0..a {
            labels.push(format!("v{}", i));
        }
        for j in 0..b {
            labels.push(format!("w{}", j));
        }
        g.labels = Some(labels);
        let layout = BipartiteLayout {
            top: (0..a).collect(),
            bottom: (a..a + b).collect(),
        };
        Ok((g, layout))
    }

    /// Complete multipartite graph: edges exactly between distinct parts.
    /// Vertices are numbered part by part.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("no parts given".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("empty part".into()));
        }
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (k, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(k).take(p));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// True iff the graph has exactly one connected component.
    pub fn is_connected(&self) -> bool {
        let idxs: Vec<usize> = (0..self.edges.len()).collect();
        connected_on(self.n, &self.edges, &idxs)
    }

    /// Vertices in breadth-first order from vertex 0; every vertex after the
    /// first has at least one earlier neighbour when the graph is connected.
    pub fn bfs_order(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::new();
        queue.push_back(0);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// Stream all spanning trees as sorted edge-index lists, in
    /// lexicographic order, each tree exactly once.
    pub fn spanning_trees(&self) -> Result<SpanningTreeIter> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(SpanningTreeIter::new(self))
    }

    /// Convenience: collect all spanning trees as edge lists.
    pub fn spanning_trees_vec(&self) -> Result<Vec<Vec<(usize, usize)>>> {
        let iter = self.spanning_trees()?;
        let edges = self.edges.clone();
        Ok(iter
            .map(|idxs| idxs.iter().map(|&i| edges[i]).collect())
            .collect())
    }

    /// Parse the edge-list text format: first line `n m`, then m lines `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut nums = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(e.to_string())));
        let n = nums
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))??;
        let m = nums
            .next()
            .ok_or_else(|| Error::Parse("missing edge count".into()))??;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = nums
                .next()
                .ok_or_else(|| Error::Parse("truncated edge list".into()))??;
            let v = nums
                .next()
                .ok_or_else(|| Error::Parse("truncated edge list".into()))??;
            edges.push((u, v));
        }
        if nums.next().is_some() {
            return Err(Error::Parse("trailing tokens after edge list".into()));
        }
        Graph::from_edges(n, &edges)
    }

    /// Parse the JSON alternative `{"n": ..., "edges": [[u, v], ...]}`.
    pub fn parse_json(text: &str) -> Result<Graph> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let repr: Repr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::from_edges(repr.n, &repr.edges)
    }
}

// Connectivity of the subgraph spanned by the listed edge indices, over all
// n vertices.
fn connected_on(n: usize, edges: &[(usize, usize)], idxs: &[usize]) -> bool {
    let mut dsu = Dsu::new(n);
    for &i in idxs {
        dsu.union(edges[i].0, edges[i].1);
    }
    dsu.components() == 1
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    pub(crate) fn components(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&v| self.find(v) == v)
            .count()
    }
}

/// Backtracking spanning-tree enumerator. Edges are decided in index order,
/// include-branch first, which yields lexicographic emission order on the
/// sorted edge-index lists. The exclude branch is pruned when the remaining
/// edges no longer connect the graph.
pub struct SpanningTreeIter {
    n: usize,
    edges: Vec<(usize, usize)>,
    stack: Vec<Frame>,
}

struct Frame {
    next: usize,
    chosen: Vec<usize>,
    excluded: Vec<bool>,
}

impl SpanningTreeIter {
    fn new(g: &Graph) -> SpanningTreeIter {
        SpanningTreeIter {
            n: g.n,
            edges: g.edges.clone(),
            stack: vec![Frame {
                next: 0,
                chosen: Vec::new(),
                excluded: vec![false; g.edges.len()],
            }],
        }
    }

    fn acyclic_with(&self, chosen: &[usize], extra: usize) -> bool {
        let mut dsu = Dsu::new(self.n);
        for &i in chosen {
            dsu.union(self.edges[i].0, self.edges[i].1);
        }
        dsu.union(self.edges[extra].0, self.edges[extra].1)
    }

    fn still_connectable(&self, excluded: &[bool]) -> bool {
        let idxs: Vec<usize> = (0..self.edges.len()).filter(|&i| !excluded[i]).collect();
        connected_on(self.n, &self.edges, &idxs)
    }
}

impl Iterator for SpanningTreeIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while let Some(frame) = self.stack.pop() {
            if frame.chosen.len() == self.n - 1 {
                return Some(frame.chosen);
            }
            if frame.next >= self.edges.len() {
                continue;
            }
            // Push the exclude branch first so the include branch is
            // explored first (LIFO), giving lexicographic emission.
            let mut excluded = frame.excluded.clone();
            excluded[frame.next] = true;
            if self.still_connectable(&excluded) {
                self.stack.push(Frame {
                    next: frame.next + 1,
                    chosen: frame.chosen.clone(),
                    excluded,
                });
            }
            if self.acyclic_with(&frame.chosen, frame.next) {
                let mut chosen = frame.chosen;
                chosen.push(frame.next);
                self.stack.push(Frame {
                    next: frame.next + 1,
                    chosen,
                    excluded: frame.excluded,
                });
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_shapes() {
        let (g, layout) = Graph::complete_bipartite(1, 1).unwrap();
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(g.n_edges(), 1);
        assert_eq!(layout.top, vec![0]);
        let (g, _) = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (4, 4));
        let (g, layout34) = Graph::complete_bipartite(3, 4).unwrap();
        assert_eq!(g.n_edges(), 12);
        assert_eq!(layout34.top, vec![0, 1, 2]);
        assert_eq!(layout34.bottom, vec![3, 4, 5, 6]);
        assert!(Graph::complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn complete_multipartite_shapes() {
        let g = Graph::complete_multipartite(&[1, 1, 1]).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        let g = Graph::complete_multipartite(&[2, 2]).unwrap();
        let (kab, _) = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(g.edges(), kab.edges());
        // [2,1,1]: count pairs across parts by hand: 2*1 + 2*1 + 1*1 = 5.
        let g = Graph::complete_multipartite(&[2, 1, 1]).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (4, 5));
        assert!(Graph::complete_multipartite(&[]).is_err());
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn simplicity_is_enforced() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn connectivity() {
        let (g, _) = Graph::complete_bipartite(2, 2).unwrap();
        assert!(g.is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        let single = Graph::from_edges(1, &[]).unwrap();
        assert!(single.is_connected());
    }

    #[test]
    fn spanning_tree_counts() {
        let (k22, _) = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(k22.spanning_trees_vec().unwrap().len(), 4);
        let single = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(single.spanning_trees_vec().unwrap().len(), 1);
        // Cayley: K_3 has 3^(3-2) = 3 spanning trees.
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.spanning_trees_vec().unwrap().len(), 3);
        let disconnected = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            disconnected.spanning_trees(),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn spanning_trees_bipartite_closed_form() {
        // K_{a,b} has a^(b-1) b^(a-1) spanning trees.
        for (a, b) in [(2usize, 3usize), (3, 3), (2, 4)] {
            let (g, _) = Graph::complete_bipartite(a, b).unwrap();
            let expect = a.pow(b as u32 - 1) * b.pow(a as u32 - 1);
            assert_eq!(g.spanning_trees_vec().unwrap().len(), expect);
        }
    }

    #[test]
    fn spanning_trees_are_valid_and_ordered() {
        let (g, _) = Graph::complete_bipartite(2, 3).unwrap();
        let trees: Vec<Vec<usize>> = g.spanning_trees().unwrap().collect();
        let mut sorted = trees.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(trees, sorted, "lexicographic order, no repeats");
        for t in &trees {
            assert_eq!(t.len(), g.n_vertices() - 1);
            // Independent acyclicity + connectivity check.
            let mut dsu = Dsu::new(g.n_vertices());
            for &i in t {
                assert!(dsu.union(g.edges()[i].0, g.edges()[i].1), "cycle");
            }
            assert_eq!(dsu.components(), 1, "not spanning");
        }
    }

    #[test]
    fn parse_formats() {
        let g = Graph::parse_edge_list("4 4\n0 2\n0 3\n1 2\n1 3\n").unwrap();
        let (k22, _) = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(g.edges(), k22.edges());
        let g = Graph::parse_json(r#"{"n":4,"edges":[[0,2],[0,3],[1,2],[1,3]]}"#).unwrap();
        assert_eq!(g.edges(), k22.edges());
        assert!(Graph::parse_edge_list("2 1\n0").is_err());
    }
}
