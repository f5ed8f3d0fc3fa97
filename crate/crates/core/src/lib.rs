//! Balanced red/blue vertex colourings of graphs.
//!
//! A colouring is *CNB* when every closed neighbourhood `N[v]` has as
//! many red as blue vertices and *NB* when every open neighbourhood
//! `N(v)` does. The crate provides graph construction and graph6 I/O,
//! verification and counting identities, an exact search, constructive
//! colourings for structured families, and the tree decomposition.

pub mod bitset;
pub mod coloring;
pub mod constructions;
pub mod graph;
pub mod solver;
pub mod trees;

pub use coloring::{Color, Coloring, ColoringError, Mode};
pub use graph::{FamilySpec, Graph, GraphBuilder, GraphError};
