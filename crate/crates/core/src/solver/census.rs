use rayon::prelude::*;

use super::{solve, SolveOutcome, SolverConfig};
use crate::coloring::Mode;
use crate::graph::Graph;

/// Solves every graph, in input order, on the global rayon pool.
pub fn census(graphs: &[Graph], mode: Mode, config: &SolverConfig) -> Vec<SolveOutcome> {
    graphs.par_iter().map(|g| solve(g, mode, config)).collect()
}

/// Like [`census`] on a dedicated pool of `workers` threads (0 = rayon default).
pub fn census_with(graphs: &[Graph], mode: Mode, config: &SolverConfig, workers: usize) -> Vec<SolveOutcome> {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| census(graphs, mode, config)),
        Err(_) => graphs.iter().map(|g| solve(g, mode, config)).collect(),
    }
}
