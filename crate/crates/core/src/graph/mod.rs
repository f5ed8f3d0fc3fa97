//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex so that the hot
//! operation of the colouring code, counting red vertices in a
//! neighbourhood, is a handful of `popcount`s.

mod edgelist;
mod family;
mod graph6;
mod metrics;
mod ops;

use std::fmt;

use thiserror::Error;

use crate::bitset::{intersection_len, words_for, Ones, VertexSet, WORD_BITS};

pub use edgelist::{parse_edge_list, to_edge_list, EdgeListError};
pub use family::{CirculantSpec, FamilySpec, PetersenSpec};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use metrics::{bfs_distances, connected_components, metrics, Diameter, Metrics};
pub use ops::{complement, disjoint_union, induced_subgraph, join, product, relabel, ProductKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    degrees: Vec<usize>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Open neighbourhood of `v` as raw bitset words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::over(self.row(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.row(u)[v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// `Some(r)` if every vertex has degree `r`. The null graph is not regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = *self.degrees.first()?;
        self.degrees.iter().all(|&d| d == first).then_some(first)
    }

    /// `|N(v) ∩ s|` where `s` is given as bitset words of the same stride.
    #[inline]
    pub fn count_in(&self, v: usize, s: &[u64]) -> usize {
        intersection_len(self.row(v), s)
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn assert_invariants(&self) {
        for v in 0..self.n {
            assert!(!self.has_edge(v, v), "self-loop at {v}");
            for u in self.neighbors(v) {
                assert!(u < self.n, "bit {u} beyond n = {}", self.n);
                assert!(self.has_edge(u, v), "asymmetric adjacency {v} -> {u}");
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable staging area; the only way to produce a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        GraphBuilder {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v);
        self.set(v, u);
        Ok(self)
    }

    /// Panics on out-of-range vertices or loops; for builders with
    /// arithmetic that guarantees validity.
    pub fn add_edge(&mut self, u: usize, v: usize) -> &mut Self {
        self.try_add_edge(u, v).expect("invalid edge");
        self
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u * self.stride + v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn build(self) -> Graph {
        let GraphBuilder { n, stride, rows } = self;
        let degrees: Vec<usize> = (0..n)
            .map(|v| {
                rows[v * stride..(v + 1) * stride]
                    .iter()
                    .map(|w| w.count_ones() as usize)
                    .sum()
            })
            .collect();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        let g = Graph {
            n,
            stride,
            rows,
            degrees,
            edge_count,
        };
        if cfg!(debug_assertions) {
            g.assert_invariants();
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert_eq!(
            Graph::from_edges(3, [(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn parallel_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degrees(), &[1, 1]);
    }

    #[test]
    fn wide_rows() {
        let g = Graph::from_edges(150, [(0, 149), (64, 65), (63, 64)]).unwrap();
        assert!(g.has_edge(149, 0));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_eq!(g.edges().count(), 3);
    }

    #[test]
    fn regular_degree() {
        assert_eq!(Graph::empty(0).regular_degree(), None);
        assert_eq!(Graph::empty(3).regular_degree(), Some(0));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.regular_degree(), None);
    }
}
