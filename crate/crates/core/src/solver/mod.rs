//! Exact search for CNB and NB colourings.
//!
//! Decision runs fix vertex 0 red (swapping colours preserves validity,
//! so this loses nothing); enumeration runs do not, and report raw counts
//! in lexicographic order of the `R`/`B` string. Search itself is
//! sequential and deterministic; [`census`] spreads independent graphs
//! over a worker pool and keeps input order.

mod census;
mod search;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{leaf_force, require_valid, Coloring, Mode};
use crate::graph::Graph;

pub use census::{census, census_with};

use search::{Counters, Problem, SearchState, Setup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: Budget,
    /// Reject early on necessary conditions: degree parity and order
    /// parity, the leaf bound, and the edge-count/order congruence.
    pub prefilters: bool,
    /// Merge twins and leaf/neighbour pairs into parity classes.
    pub forcing: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: Budget::default(),
            prefilters: true,
            forcing: true,
        }
    }
}

impl SolverConfig {
    /// Plain propagation search with no structural shortcuts.
    pub fn bare() -> Self {
        SolverConfig {
            prefilters: false,
            forcing: false,
            ..SolverConfig::default()
        }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Sat,
    Unsat,
    Timeout,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Sat => "sat",
            SolveStatus::Unsat => "unsat",
            SolveStatus::Timeout => "timeout",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub witness: Option<Coloring>,
    pub nodes: u64,
    pub propagations: u64,
    pub millis: u64,
}

impl SolveOutcome {
    pub fn is_sat(&self) -> bool {
        self.status == SolveStatus::Sat
    }
}

/// Why a graph was rejected before any search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prefilter {
    OddOrder,
    DegreeParity(usize),
    LeafBound(usize),
    EdgeOrderCongruence,
}

/// Necessary conditions checked before search. `None` means the graph
/// passes every test.
pub fn prefilter(g: &Graph, mode: Mode) -> Option<Prefilter> {
    match mode {
        Mode::Cnb => {
            if g.n() % 2 == 1 {
                return Some(Prefilter::OddOrder);
            }
            if let Some(v) = (0..g.n()).find(|&v| g.degree(v) % 2 == 0) {
                return Some(Prefilter::DegreeParity(v));
            }
            if let Some(crate::coloring::Infeasibility::TooManyLeaves { vertex, .. }) = leaf_force(g, mode).infeasible {
                return Some(Prefilter::LeafBound(vertex));
            }
            let want = if g.edge_count() % 2 == 0 { 0 } else { 2 };
            if g.n() % 4 != want {
                return Some(Prefilter::EdgeOrderCongruence);
            }
            None
        }
        Mode::Nb => (0..g.n()).find(|&v| g.degree(v) % 2 == 1).map(Prefilter::DegreeParity),
    }
}

fn millis_since(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

/// Decides whether `g` has a valid colouring in `mode`.
pub fn solve(g: &Graph, mode: Mode, config: &SolverConfig) -> SolveOutcome {
    let started = Instant::now();
    let finish = |status, witness, nodes, propagations| SolveOutcome {
        status,
        witness,
        nodes,
        propagations,
        millis: millis_since(started),
    };
    if config.prefilters && prefilter(g, mode).is_some() {
        return finish(SolveStatus::Unsat, None, 0, 0);
    }
    let (problem, setup) = Problem::new(g, mode, config.forcing);
    if setup == Setup::Contradiction {
        return finish(SolveStatus::Unsat, None, 0, 0);
    }
    let mut st = SearchState::new(&problem, config.budget, started);
    if !st.initially_consistent() {
        return finish(SolveStatus::Unsat, None, 0, 0);
    }
    let result = if g.n() == 0 {
        Ok(Some(Coloring::all_blue(0)))
    } else {
        let mark = st.mark();
        if st.tick().is_err() {
            Err(search::Stop::Budget)
        } else if st.decide(0, 1) {
            search::decide(&mut st)
        } else {
            st.undo(mark);
            Ok(None)
        }
    };
    let Counters { nodes, propagations } = st.counters;
    match result {
        Ok(Some(c)) => {
            require_valid(g, &c, mode).expect("search produced an invalid witness");
            finish(SolveStatus::Sat, Some(c), nodes, propagations)
        }
        Ok(None) => finish(SolveStatus::Unsat, None, nodes, propagations),
        Err(stop) => finish(search::status_of(stop), None, nodes, propagations),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    /// `sat`/`unsat` when the search finished or hit the cap, `timeout` otherwise.
    pub status: SolveStatus,
    pub colorings: Vec<Coloring>,
    /// More colourings exist beyond `cap`.
    pub cap_exceeded: bool,
    pub nodes: u64,
    pub propagations: u64,
    pub millis: u64,
}

/// All valid colourings (both members of every swap pair), up to `cap`,
/// in lexicographic order of the `R`/`B` string.
pub fn enumerate(g: &Graph, mode: Mode, cap: usize, config: &SolverConfig) -> Enumeration {
    let started = Instant::now();
    let mut out = Vec::new();
    let mut status = SolveStatus::Unsat;
    let mut cap_exceeded = false;
    let mut counters = Counters::default();
    let filtered = config.prefilters && prefilter(g, mode).is_some();
    let (problem, setup) = Problem::new(g, mode, config.forcing);
    if !filtered && setup == Setup::Ready && cap > 0 {
        let mut st = SearchState::new(&problem, config.budget, started);
        if st.initially_consistent() {
            match search::enumerate(&mut st, cap.saturating_add(1), &mut out) {
                Ok(()) => {}
                Err(search::Stop::Enough) => {}
                Err(search::Stop::Budget) => status = SolveStatus::Timeout,
            }
        }
        counters = st.counters;
    }
    if out.len() > cap {
        out.truncate(cap);
        cap_exceeded = true;
    }
    if status != SolveStatus::Timeout && !out.is_empty() {
        status = SolveStatus::Sat;
    }
    for c in &out {
        require_valid(g, c, mode).expect("enumeration produced an invalid colouring");
    }
    Enumeration {
        status,
        colorings: out,
        cap_exceeded,
        nodes: counters.nodes,
        propagations: counters.propagations,
        millis: millis_since(started),
    }
}
