//! The propagation engine shared by decision and enumeration.
//!
//! Every vertex `c` owns one constraint: the signed sum of colours over
//! its scope (`N[c]` or `N(c)`) must end at zero. The engine keeps, per
//! constraint, the sum over assigned members and the number of free
//! members, so the achievable final residual lies in
//! `[sum - free, sum + free]`. A constraint is dead when that interval
//! excludes zero and forcing when zero is an endpoint.

use std::time::Instant;

use crate::coloring::{leaf_force, Coloring, Mode, PairConstraint};
use crate::graph::Graph;

use super::{Budget, SolveStatus};

/// Scopes in compressed-row form plus the parity classes that are
/// assigned as one unit.
pub(crate) struct Problem {
    n: usize,
    scope_start: Vec<u32>,
    scope: Vec<u32>,
    class_of: Vec<u32>,
    /// `+1` if the vertex takes its class representative's colour, `-1` otherwise.
    parity: Vec<i8>,
    class_start: Vec<u32>,
    class_members: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Setup {
    Ready,
    /// The forced relations contradict each other.
    Contradiction,
}

struct UnionFind {
    parent: Vec<u32>,
    /// Parity relative to parent.
    rel: Vec<i8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            rel: vec![1; n],
        }
    }

    fn find(&mut self, v: usize) -> (usize, i8) {
        let mut path = Vec::new();
        let mut cur = v;
        while self.parent[cur] as usize != cur {
            path.push(cur);
            cur = self.parent[cur] as usize;
        }
        let root = cur;
        // compress from the top down so each rel becomes relative to root
        for &p in path.iter().rev() {
            let par = self.parent[p] as usize;
            if par != root {
                self.rel[p] *= self.rel[par];
            }
            self.parent[p] = root as u32;
        }
        (root, self.rel[v])
    }

    /// Records `color(u) = sign * color(v)`; false on contradiction.
    fn union(&mut self, u: usize, v: usize, sign: i8) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            return pu * pv == sign;
        }
        let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
        self.parent[hi] = lo as u32;
        // color(hi) = rel * color(lo) with color(u) = pu*color(ru), color(v) = pv*color(rv)
        self.rel[hi] = pu * pv * sign;
        true
    }
}

impl Problem {
    pub(crate) fn new(g: &Graph, mode: Mode, forcing: bool) -> (Problem, Setup) {
        let n = g.n();
        let mut scope_start = Vec::with_capacity(n + 1);
        let mut scope = Vec::with_capacity(2 * g.edge_count() + n);
        scope_start.push(0);
        for v in 0..n {
            if mode == Mode::Cnb {
                let mut inserted = false;
                for w in g.neighbors(v) {
                    if !inserted && w > v {
                        scope.push(v as u32);
                        inserted = true;
                    }
                    scope.push(w as u32);
                }
                if !inserted {
                    scope.push(v as u32);
                }
            } else {
                scope.extend(g.neighbors(v).map(|w| w as u32));
            }
            scope_start.push(scope.len() as u32);
        }

        let mut uf = UnionFind::new(n);
        let mut setup = Setup::Ready;
        if forcing {
            for c in leaf_force(g, mode).constraints {
                let ok = match c {
                    PairConstraint::Same { u, v } => uf.union(u, v, 1),
                    PairConstraint::Opposite { u, v } => uf.union(u, v, -1),
                };
                if !ok {
                    setup = Setup::Contradiction;
                }
            }
        }
        let mut class_of = vec![0u32; n];
        let mut parity = vec![1i8; n];
        let mut counts = vec![0u32; n + 1];
        for v in 0..n {
            let (r, p) = uf.find(v);
            class_of[v] = r as u32;
            parity[v] = p;
            counts[r + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let class_start = counts.clone();
        let mut fill = counts;
        let mut class_members = vec![0u32; n];
        for v in 0..n {
            let r = class_of[v] as usize;
            class_members[fill[r] as usize] = v as u32;
            fill[r] += 1;
        }
        (
            Problem {
                n,
                scope_start,
                scope,
                class_of,
                parity,
                class_start,
                class_members,
            },
            setup,
        )
    }

    #[inline]
    fn scope(&self, c: usize) -> &[u32] {
        &self.scope[self.scope_start[c] as usize..self.scope_start[c + 1] as usize]
    }

    #[inline]
    fn class(&self, root: usize) -> &[u32] {
        &self.class_members[self.class_start[root] as usize..self.class_start[root + 1] as usize]
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Counters {
    pub nodes: u64,
    pub propagations: u64,
}

pub(crate) enum Stop {
    Budget,
    /// Enumeration collected enough colourings.
    Enough,
}

/// The mutable side of the search: partial colouring and per-constraint bounds.
pub(crate) struct SearchState<'p> {
    p: &'p Problem,
    color: Vec<i8>,
    sum: Vec<i32>,
    free: Vec<i32>,
    trail: Vec<u32>,
    pending: Vec<u32>,
    assigned: usize,
    pub(crate) counters: Counters,
    budget: Budget,
    started: Instant,
}

impl<'p> SearchState<'p> {
    pub(crate) fn new(p: &'p Problem, budget: Budget, started: Instant) -> Self {
        let free = (0..p.n).map(|c| p.scope(c).len() as i32).collect();
        SearchState {
            p,
            color: vec![0; p.n],
            sum: vec![0; p.n],
            free,
            trail: Vec::with_capacity(p.n),
            pending: Vec::new(),
            assigned: 0,
            counters: Counters::default(),
            budget,
            started,
        }
    }

    /// False if some constraint is already unsatisfiable (odd or empty-with-bias scope).
    pub(crate) fn initially_consistent(&self) -> bool {
        (0..self.p.n).all(|c| self.free[c] % 2 == 0)
    }

    /// Assigns `v` (and its class) to `s`, then propagates to a fixpoint.
    /// On `false` the caller must `undo` to its mark.
    pub(crate) fn decide(&mut self, v: usize, s: i8) -> bool {
        self.pending.clear();
        self.assign_class(v, s) && self.propagate()
    }

    fn assign_class(&mut self, v: usize, s: i8) -> bool {
        let p = self.p;
        let root = p.class_of[v] as usize;
        let root_color = s * p.parity[v];
        for &m in p.class(root) {
            let m = m as usize;
            let want = root_color * p.parity[m];
            match self.color[m] {
                0 => {
                    if !self.set(m, want) {
                        return false;
                    }
                }
                c if c != want => return false,
                _ => {}
            }
        }
        true
    }

    #[inline]
    fn set(&mut self, v: usize, s: i8) -> bool {
        let p = self.p;
        self.color[v] = s;
        self.trail.push(v as u32);
        self.assigned += 1;
        let mut ok = true;
        // `v` lies in the scope of `c` exactly when `c` lies in the scope of `v`
        for &c in p.scope_of_member(v) {
            let c = c as usize;
            self.sum[c] += s as i32;
            self.free[c] -= 1;
            let (sum, free) = (self.sum[c], self.free[c]);
            if sum.abs() > free {
                ok = false;
            } else if free > 0 && sum.abs() == free {
                self.pending.push(c as u32);
            }
        }
        ok
    }

    fn propagate(&mut self) -> bool {
        while let Some(c) = self.pending.pop() {
            let c = c as usize;
            let (sum, free) = (self.sum[c], self.free[c]);
            if free == 0 || sum.abs() != free {
                continue;
            }
            let want = -(sum.signum() as i8);
            let p = self.p;
            for &m in p.scope(c) {
                let m = m as usize;
                if self.color[m] == 0 {
                    self.counters.propagations += 1;
                    if !self.assign_class(m, want) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[inline]
    pub(crate) fn mark(&self) -> usize {
        self.trail.len()
    }

    pub(crate) fn undo(&mut self, mark: usize) {
        let p = self.p;
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap() as usize;
            let s = self.color[v] as i32;
            for &c in p.scope_of_member(v) {
                let c = c as usize;
                self.sum[c] -= s;
                self.free[c] += 1;
            }
            self.color[v] = 0;
            self.assigned -= 1;
        }
    }

    #[inline]
    pub(crate) fn complete(&self) -> bool {
        self.assigned == self.p.n
    }

    pub(crate) fn coloring(&self) -> Coloring {
        Coloring::from_reds(self.p.n, (0..self.p.n).filter(|&v| self.color[v] > 0))
    }

    /// Counts a node and reports whether the budget is exhausted.
    pub(crate) fn tick(&mut self) -> Result<(), Stop> {
        self.counters.nodes += 1;
        if self.counters.nodes > self.budget.max_nodes {
            return Err(Stop::Budget);
        }
        if self.counters.nodes % 256 == 0 && self.started.elapsed() >= self.budget.max_time {
            return Err(Stop::Budget);
        }
        Ok(())
    }

    /// Most constrained unassigned vertex: fewest free slots in its own
    /// constraint, then most assigned scope members, then lowest id.
    pub(crate) fn pick_constrained(&self) -> Option<usize> {
        let mut best: Option<(i32, i32, usize)> = None;
        for v in 0..self.p.n {
            if self.color[v] != 0 {
                continue;
            }
            let width = 2 * self.free[v];
            let done = self.p.scope(v).len() as i32 - self.free[v];
            let key = (width, -done, v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }

    pub(crate) fn pick_lowest(&self) -> Option<usize> {
        self.color.iter().position(|&c| c == 0)
    }
}

impl Problem {
    #[inline]
    fn scope_of_member(&self, v: usize) -> &[u32] {
        self.scope(v)
    }
}

/// Depth-first decision search; returns the first complete assignment.
pub(crate) fn decide(st: &mut SearchState<'_>) -> Result<Option<Coloring>, Stop> {
    if st.complete() {
        return Ok(Some(st.coloring()));
    }
    let v = st.pick_constrained().expect("incomplete state has a free vertex");
    for s in [1i8, -1] {
        st.tick()?;
        let mark = st.mark();
        if st.decide(v, s) {
            if let Some(c) = decide(st)? {
                return Ok(Some(c));
            }
        }
        st.undo(mark);
    }
    Ok(None)
}

/// Lexicographic enumeration (`B < R`), stopping once `limit` are found.
pub(crate) fn enumerate(st: &mut SearchState<'_>, limit: usize, out: &mut Vec<Coloring>) -> Result<(), Stop> {
    if st.complete() {
        out.push(st.coloring());
        return if out.len() >= limit { Err(Stop::Enough) } else { Ok(()) };
    }
    let v = st.pick_lowest().expect("incomplete state has a free vertex");
    for s in [-1i8, 1] {
        st.tick()?;
        let mark = st.mark();
        if st.decide(v, s) {
            enumerate(st, limit, out)?;
        }
        st.undo(mark);
    }
    Ok(())
}

pub(crate) fn status_of(stop: Stop) -> SolveStatus {
    match stop {
        Stop::Budget => SolveStatus::Timeout,
        Stop::Enough => SolveStatus::Sat,
    }
}
