//! Independent oracles for tests: everything here works from edge lists
//! and machine-word masks, never from the library's verification code.
#![allow(dead_code)]

use balanced_coloring::{Coloring, Graph, Mode};

/// Neighbourhood masks (`n <= 64`), closed when `closed` is set.
pub fn masks(g: &Graph, closed: bool) -> Vec<u64> {
    let n = g.n();
    assert!(n <= 64);
    let mut m: Vec<u64> = (0..n).map(|v| if closed { 1 << v } else { 0 }).collect();
    for (u, v) in g.edges() {
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }
    m
}

pub fn mask_of(c: &Coloring) -> u64 {
    (0..c.n()).filter(|&v| c.is_red(v)).fold(0, |acc, v| acc | 1 << v)
}

/// Whether the red set `reds` balances every neighbourhood in `nbhd`.
#[inline]
pub fn balanced(nbhd: &[u64], reds: u64) -> bool {
    nbhd.iter().all(|&m| 2 * (m & reds).count_ones() == m.count_ones())
}

/// All valid colourings as red masks, by exhaustive enumeration.
pub fn brute_force(g: &Graph, mode: Mode) -> Vec<u64> {
    let nb = masks(g, mode == Mode::Cnb);
    let n = g.n();
    assert!(n <= 30, "brute force is exponential");
    (0..1u64 << n).filter(|&r| balanced(&nb, r)).collect()
}

pub fn brute_force_sat(g: &Graph, mode: Mode) -> bool {
    let nb = masks(g, mode == Mode::Cnb);
    (0..1u64 << g.n()).any(|r| balanced(&nb, r))
}

/// Residual-based validity from an adjacency list built from `edges()`.
pub fn oracle_valid(g: &Graph, c: &Coloring, mode: Mode) -> bool {
    if g.n() != c.n() {
        return false;
    }
    let mut sum: Vec<i64> = (0..g.n())
        .map(|v| match mode {
            Mode::Cnb => sign(c, v),
            Mode::Nb => 0,
        })
        .collect();
    for (u, v) in g.edges() {
        sum[u] += sign(c, v);
        sum[v] += sign(c, u);
    }
    sum.iter().all(|&s| s == 0)
}

fn sign(c: &Coloring, v: usize) -> i64 {
    if c.is_red(v) {
        1
    } else {
        -1
    }
}

/// Every labelled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
            .unwrap()
    })
}

pub fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

/// Products written straight from their definitions, index `a * h.n + b`.
pub fn product_by_definition(kind: &str, g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.n(), h.n());
    let adj = |x: &Graph, a: usize, b: usize| a != b && x.has_edge(a, b);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..m {
            for c in 0..n {
                for d in 0..m {
                    let (i, j) = (a * m + b, c * m + d);
                    if i >= j {
                        continue;
                    }
                    let yes = match kind {
                        "cartesian" => (a == c && adj(h, b, d)) || (b == d && adj(g, a, c)),
                        "strong" => {
                            (a == c && adj(h, b, d)) || (b == d && adj(g, a, c)) || (adj(g, a, c) && adj(h, b, d))
                        }
                        "lexicographic" => adj(g, a, c) || (a == c && adj(h, b, d)),
                        "direct" => adj(g, a, c) && adj(h, b, d),
                        _ => panic!("unknown product {kind}"),
                    };
                    if yes {
                        edges.push((i, j));
                    }
                }
            }
        }
    }
    Graph::from_edges(n * m, edges).unwrap()
}

pub fn join_by_definition(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    let mut edges = edges_of(g);
    edges.extend(h.edges().map(|(u, v)| (u + n, v + n)));
    for u in 0..n {
        for v in 0..h.n() {
            edges.push((u, n + v));
        }
    }
    Graph::from_edges(n + h.n(), edges).unwrap()
}

/// Whether `a` and `b` are isomorphic, by trying every permutation (small `n` only).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.degrees().to_vec();
    let mut db: Vec<usize> = b.degrees().to_vec();
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Edge-class and degree statistics computed directly from the edge list.
#[derive(Debug, Default)]
pub struct Counts {
    pub red: usize,
    pub blue: usize,
    pub rr: usize,
    pub bb: usize,
    pub rb: usize,
    pub red_deg: usize,
    pub blue_deg: usize,
}

pub fn counts(g: &Graph, c: &Coloring) -> Counts {
    let mut k = Counts::default();
    let mut deg = vec![0usize; g.n()];
    for (u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
        match (c.is_red(u), c.is_red(v)) {
            (true, true) => k.rr += 1,
            (false, false) => k.bb += 1,
            _ => k.rb += 1,
        }
    }
    for v in 0..g.n() {
        if c.is_red(v) {
            k.red += 1;
            k.red_deg += deg[v];
        } else {
            k.blue += 1;
            k.blue_deg += deg[v];
        }
    }
    k
}
