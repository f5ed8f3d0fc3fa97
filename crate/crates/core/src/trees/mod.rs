//! Vertex additions and the CNB tree decomposition.
//!
//! A 4-vertex addition at `z` adds `v` and `x` adjacent to `z` and two
//! leaves `w1`, `w2` on `v`; `v` copies the colour of `z`, the other three
//! take the opposite colour. Starting from `K2` these produce exactly the
//! trees with a CNB colouring. [`decompose_cnbc_tree`] runs the reverse
//! direction by peeling such structures off the end of a longest path.

mod prufer;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{require_valid, Color, Coloring, ColoringError, Mode};
use crate::graph::{connected_components, Graph, GraphBuilder, GraphError};

pub use prufer::{labeled_trees, prufer_decode, random_tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("input graph is not a tree")]
    NotATree,
    #[error("step {step}: {reason}")]
    MalformedScript { step: usize, reason: String },
    #[error("{0}")]
    ColorPattern(String),
}

fn extend(g: &Graph, extra: usize, edges: &[(usize, usize)]) -> Graph {
    let mut b = GraphBuilder::new(g.n() + extra);
    for (u, v) in g.edges().chain(edges.iter().copied()) {
        b.add_edge(u, v);
    }
    b.build()
}

/// Appends `v = n, x = n+1, w1 = n+2, w2 = n+3` at anchor `z`.
pub fn four_vertex_addition(g: &Graph, c: &Coloring, z: usize) -> Result<(Graph, Coloring), TreeError> {
    require_valid(g, c, Mode::Cnb)?;
    let n = g.n();
    if z >= n {
        return Err(GraphError::VertexOutOfRange { vertex: z, n }.into());
    }
    let (v, x, w1, w2) = (n, n + 1, n + 2, n + 3);
    let h = extend(g, 4, &[(z, v), (z, x), (v, w1), (v, w2)]);
    let zc = c.color(z);
    let tail = Coloring::from_fn(4, |i| if i == 0 { zc } else { zc.opposite() });
    let hc = c.concat(&tail);
    require_valid(&h, &hc, Mode::Cnb)?;
    Ok((h, hc))
}

/// Appends `u = n, a1 = n+1, a2 = n+2` with `u ~ w, x, y, z`, `a1 ~ w, y`
/// and `a2 ~ x, z`. `w, x` must share a colour and `y, z` take the other;
/// `u` gets `u_color` and `a1, a2` the opposite.
pub fn three_vertex_addition(
    g: &Graph,
    c: &Coloring,
    [w, x, y, z]: [usize; 4],
    u_color: Color,
) -> Result<(Graph, Coloring), TreeError> {
    require_valid(g, c, Mode::Nb)?;
    let n = g.n();
    for q in [w, x, y, z] {
        if q >= n {
            return Err(GraphError::VertexOutOfRange { vertex: q, n }.into());
        }
    }
    if c.color(w) != c.color(x) || c.color(y) != c.color(z) || c.color(w) == c.color(y) {
        return Err(TreeError::ColorPattern(format!(
            "need w, x one colour and y, z the other; got {}{}{}{}",
            c.color(w).as_char(),
            c.color(x).as_char(),
            c.color(y).as_char(),
            c.color(z).as_char()
        )));
    }
    let (u, a1, a2) = (n, n + 1, n + 2);
    let h = extend(g, 3, &[(u, w), (u, x), (u, y), (u, z), (a1, w), (a1, y), (a2, x), (a2, z)]);
    let tail = Coloring::from_fn(3, |i| if i == 0 { u_color } else { u_color.opposite() });
    let hc = c.concat(&tail);
    require_valid(&h, &hc, Mode::Nb)?;
    Ok((h, hc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeStep {
    pub z: usize,
    pub v: usize,
    pub x: usize,
    pub w1: usize,
    pub w2: usize,
}

/// A sequence of 4-vertex additions applied to `K2` (vertex 0 red, 1 blue).
/// Step `i` adds vertices `2 + 4i .. 2 + 4i + 4` as `v, x, w1, w2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeBuildScript {
    pub steps: Vec<TreeStep>,
}

impl TreeBuildScript {
    /// Appends an addition at `z`, numbering the new vertices next in line.
    pub fn push(&mut self, z: usize) {
        let n = 2 + 4 * self.steps.len();
        self.steps.push(TreeStep {
            z,
            v: n,
            x: n + 1,
            w1: n + 2,
            w2: n + 3,
        });
    }

    pub fn order(&self) -> usize {
        2 + 4 * self.steps.len()
    }
}

pub fn replay(script: &TreeBuildScript) -> Result<(Graph, Coloring), TreeError> {
    let mut g = Graph::from_edges(2, [(0, 1)])?;
    let mut c = Coloring::from_reds(2, [0]);
    for (i, s) in script.steps.iter().enumerate() {
        let n = g.n();
        if s.z >= n {
            return Err(TreeError::MalformedScript {
                step: i,
                reason: format!("anchor {} does not exist yet ({n} vertices)", s.z),
            });
        }
        if (s.v, s.x, s.w1, s.w2) != (n, n + 1, n + 2, n + 3) {
            return Err(TreeError::MalformedScript {
                step: i,
                reason: format!("new vertices must be {n}..{}", n + 4),
            });
        }
        (g, c) = four_vertex_addition(&g, &c, s.z)?;
    }
    Ok((g, c))
}

/// Why a tree has no CNB colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Rejection {
    /// Order not `≡ 2 (mod 4)`.
    Order { n: usize },
    /// `vertex` carries more than `(deg + 1) / 2` leaves.
    LeafBound { vertex: usize },
    /// A longest path has fewer than four vertices.
    ShortPath,
    /// The second vertex of a longest path is not of degree 3 with two leaves.
    SecondVertex { vertex: usize },
    /// The third vertex of a longest path has no leaf.
    ThirdVertex { vertex: usize },
    /// No peelable structure remains (greedy variant).
    Stuck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Decomposition {
    /// `replay(script)` relabelled by `labels` (replay vertex `i` is input
    /// vertex `labels[i]`) is the input tree.
    Cnbc { script: TreeBuildScript, labels: Vec<usize> },
    NotCnbc { rejection: Rejection },
}

impl Decomposition {
    pub fn is_cnbc(&self) -> bool {
        matches!(self, Decomposition::Cnbc { .. })
    }
}

/// Peeling order: a structure at the end of a longest path, or any eligible one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeelRule {
    LongestPath,
    Greedy,
}

struct Forest {
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
    deg: Vec<usize>,
    count: usize,
}

impl Forest {
    fn new(t: &Graph) -> Self {
        Forest {
            adj: (0..t.n()).map(|v| t.neighbors(v).collect()).collect(),
            alive: vec![true; t.n()],
            deg: t.degrees().to_vec(),
            count: t.n(),
        }
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied().filter(|&w| self.alive[w])
    }

    fn is_leaf(&self, v: usize) -> bool {
        self.deg[v] == 1
    }

    fn lowest_leaf_of(&self, v: usize) -> Option<usize> {
        self.neighbors(v).filter(|&w| self.is_leaf(w)).min()
    }

    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        self.count -= 1;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.alive[w] {
                self.deg[w] -= 1;
            }
        }
    }

    /// Farthest vertex from `s` (lowest id on ties) and BFS parents.
    fn farthest(&self, s: usize) -> (usize, Vec<usize>) {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([s]);
        dist[s] = 0;
        let mut best = s;
        while let Some(v) = queue.pop_front() {
            if dist[v] > dist[best] || (dist[v] == dist[best] && v < best) {
                best = v;
            }
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (best, parent)
    }

    /// A longest path `v1, v2, ...` found by two BFS sweeps.
    fn longest_path(&self) -> Vec<usize> {
        let start = self.alive.iter().position(|&a| a).expect("forest is non-empty");
        let (a, _) = self.farthest(start);
        let (b, parent) = self.farthest(a);
        let mut path = vec![b];
        while *path.last().unwrap() != a {
            path.push(parent[*path.last().unwrap()]);
        }
        path
    }

    /// `(v2, [v1, u])` if `v2` has degree 3 and exactly two leaf neighbours.
    fn pendant_pair(&self, v2: usize) -> Option<[usize; 2]> {
        if self.deg[v2] != 3 {
            return None;
        }
        let leaves: Vec<usize> = self.neighbors(v2).filter(|&w| self.is_leaf(w)).collect();
        (leaves.len() == 2).then(|| [leaves[0], leaves[1]])
    }
}

/// Peels one structure; `Ok(step)` in input labels `(z, v, x, w1, w2)`.
fn peel_longest(f: &Forest) -> Result<TreeStep, Rejection> {
    let path = f.longest_path();
    if path.len() < 4 {
        return Err(Rejection::ShortPath);
    }
    let (v1, v2, v3) = (path[0], path[1], path[2]);
    let leaves = f.pendant_pair(v2).ok_or(Rejection::SecondVertex { vertex: v2 })?;
    let u = if leaves[0] == v1 { leaves[1] } else { leaves[0] };
    let x = f.lowest_leaf_of(v3).ok_or(Rejection::ThirdVertex { vertex: v3 })?;
    Ok(TreeStep { z: v3, v: v2, x, w1: v1, w2: u })
}

fn peel_greedy(f: &Forest) -> Result<TreeStep, Rejection> {
    for v2 in 0..f.adj.len() {
        if !f.alive[v2] {
            continue;
        }
        let Some([w1, w2]) = f.pendant_pair(v2) else { continue };
        let z = f.neighbors(v2).find(|&w| w != w1 && w != w2).expect("degree 3");
        if let Some(x) = f.lowest_leaf_of(z) {
            return Ok(TreeStep { z, v: v2, x, w1, w2 });
        }
    }
    Err(Rejection::Stuck)
}

/// Decides whether the tree `t` has a CNB colouring by peeling 4-vertex
/// additions off the end of a longest path, and returns a build script
/// when it does.
pub fn decompose_cnbc_tree(t: &Graph) -> Result<Decomposition, TreeError> {
    decompose_with(t, PeelRule::LongestPath)
}

pub fn decompose_with(t: &Graph, rule: PeelRule) -> Result<Decomposition, TreeError> {
    if t.n() == 0 || t.edge_count() != t.n() - 1 || connected_components(t).len() != 1 {
        return Err(TreeError::NotATree);
    }
    let reject = |rejection| Ok(Decomposition::NotCnbc { rejection });
    let n = t.n();
    if n % 4 != 2 {
        return reject(Rejection::Order { n });
    }
    let mut leaves = vec![0usize; n];
    for v in (0..n).filter(|&v| t.degree(v) == 1) {
        leaves[t.neighbors(v).next().expect("leaf")] += 1;
    }
    if let Some(vertex) = (0..n).find(|&v| 2 * leaves[v] > t.degree(v) + 1) {
        return reject(Rejection::LeafBound { vertex });
    }

    let mut f = Forest::new(t);
    let mut peeled = Vec::new();
    while f.count > 2 {
        let step = match rule {
            PeelRule::LongestPath => peel_longest(&f),
            PeelRule::Greedy => peel_greedy(&f),
        };
        let step = match step {
            Ok(s) => s,
            Err(r) => return reject(r),
        };
        for v in [step.v, step.x, step.w1, step.w2] {
            f.remove(v);
        }
        peeled.push(step);
    }

    // rebuild in replay numbering, innermost addition first
    let mut labels: Vec<usize> = (0..n).filter(|&v| f.alive[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in labels.iter().enumerate() {
        index[v] = i;
    }
    let mut script = TreeBuildScript::default();
    for s in peeled.iter().rev() {
        script.push(index[s.z]);
        for v in [s.v, s.x, s.w1, s.w2] {
            index[v] = labels.len();
            labels.push(v);
        }
    }
    Ok(Decomposition::Cnbc { script, labels })
}

/// `K2` followed by `k` additions anchored at blue vertices: `|R| - |B| = 2k`.
pub fn imbalanced_cnbc_tree(k: usize) -> (Graph, Coloring) {
    let mut g = Graph::from_edges(2, [(0, 1)]).expect("K2");
    let mut c = Coloring::from_reds(2, [0]);
    for _ in 0..k {
        let z = (0..g.n()).find(|&v| !c.is_red(v)).expect("a blue vertex exists");
        (g, c) = four_vertex_addition(&g, &c, z).expect("valid input stays valid");
    }
    (g, c)
}

/// Four isolated vertices `RRBB` followed by `k` additions with blue `u`
/// on the same quadruple: `|R| - |B| = k`.
pub fn imbalanced_nbc_graph(k: usize) -> (Graph, Coloring) {
    let mut g = Graph::empty(4);
    let mut c = Coloring::from_reds(4, [0, 1]);
    for _ in 0..k {
        (g, c) = three_vertex_addition(&g, &c, [0, 1, 2, 3], Color::Blue).expect("valid input stays valid");
    }
    (g, c)
}
