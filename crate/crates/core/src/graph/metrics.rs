use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;
use crate::bitset::VertexSet;

/// Diameter, with disconnected graphs reported as `Infinite` rather than an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub diameter: Diameter,
    pub is_tree: bool,
    pub is_connected: bool,
    pub components: usize,
}

/// BFS distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let n = g.n();
    let mut dist = vec![None; n];
    let mut seen = VertexSet::new(n);
    let mut frontier = VertexSet::new(n);
    seen.insert(source);
    frontier.insert(source);
    let mut d = 0;
    while !frontier.is_empty() {
        let mut next = VertexSet::new(n);
        for v in frontier.iter() {
            dist[v] = Some(d);
            for (acc, w) in next.words_mut().iter_mut().zip(g.row(v)) {
                *acc |= w;
            }
        }
        next.difference_with(&seen);
        seen.union_with(&next);
        frontier = next;
        d += 1;
    }
    dist
}

/// Vertex sets of the connected components, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut unseen = VertexSet::full(n);
    let mut out = Vec::new();
    while let Some(start) = unseen.first() {
        let mut comp = VertexSet::new(n);
        for (v, d) in bfs_distances(g, start).into_iter().enumerate() {
            if d.is_some() {
                comp.insert(v);
            }
        }
        unseen.difference_with(&comp);
        out.push(comp);
    }
    out
}

pub fn metrics(g: &Graph) -> Metrics {
    let n = g.n();
    let components = connected_components(g).len();
    let is_connected = components <= 1;
    let diameter = if !is_connected {
        Diameter::Infinite
    } else {
        let ecc = (0..n)
            .map(|v| bfs_distances(g, v).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        Diameter::Finite(ecc)
    };
    Metrics {
        degrees: g.degrees().to_vec(),
        max_degree: g.max_degree(),
        diameter,
        is_tree: n > 0 && is_connected && g.edge_count() == n - 1,
        is_connected,
        components,
    }
}
