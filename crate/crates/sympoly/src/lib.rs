//! Exact arithmetic for symmetric edge polytopes of simple graphs.
//!
//! For a simple graph G the symmetric edge polytope is the convex hull of
//! +-(e_v - e_w) over the edges vw. This crate computes its facets, Ehrhart
//! and h*-polynomials, gamma-polynomials, toric Groebner generators, the
//! directed-tree triangulation for complete bipartite graphs, and exact
//! real-rootedness / interlacing certificates, with several independent
//! pipelines per quantity so every closed form can be cross-validated.

pub mod bipartite;
pub mod complex;
pub mod ehrhart;
pub mod error;
pub mod facets;
pub mod fm;
pub mod graph;
pub mod groebner;
pub mod poly;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BipartiteLayout, Graph};
pub use poly::Polynomial;
