use serde::{Deserialize, Serialize};

use super::{Graph, GraphBuilder, GraphError};

/// `u ~ v` in the result iff `u != v` and `u !~ v` in `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// `G + H`: vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut b = GraphBuilder::new(g.n() + h.n());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(u + off, v + off);
    }
    b.build()
}

/// `G ∨ H`: the disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut b = GraphBuilder::new(g.n() + h.n());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(u + off, v + off);
    }
    for u in 0..g.n() {
        for v in 0..h.n() {
            b.add_edge(u, v + off);
        }
    }
    b.build()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lexicographic,
    Direct,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Lexicographic,
        ProductKind::Direct,
    ];

    fn adjacent(self, g: &Graph, h: &Graph, (g1, h1): (usize, usize), (g2, h2): (usize, usize)) -> bool {
        let ge = g1 == g2;
        let he = h1 == h2;
        let ga = g.has_edge(g1, g2);
        let ha = h.has_edge(h1, h2);
        match self {
            ProductKind::Cartesian => (ge && ha) || (he && ga),
            ProductKind::Strong => (ge && ha) || (he && ga) || (ga && ha),
            ProductKind::Lexicographic => ga || (ge && ha),
            ProductKind::Direct => ga && ha,
        }
    }
}

/// Graph product with vertex `(g_i, h_j)` encoded as `g_i * h.n() + h_j`.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.n(), h.n());
    let mut b = GraphBuilder::new(gn * hn);
    for x in 0..gn * hn {
        let a = (x / hn, x % hn);
        for y in x + 1..gn * hn {
            let c = (y / hn, y % hn);
            if kind.adjacent(g, h, a, c) {
                b.add_edge(x, y);
            }
        }
    }
    b.build()
}

/// The subgraph induced on `vertices`, renumbered in the given order.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph, GraphError> {
    for &v in vertices {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let mut b = GraphBuilder::new(vertices.len());
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if u == v {
                return Err(GraphError::InvalidParameter(format!("vertex {u} listed twice")));
            }
            if g.has_edge(u, v) {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

/// Renames vertex `v` to `perm[v]`; `perm` must be a permutation of `0..n`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Result<Graph, GraphError> {
    let n = g.n();
    if perm.len() != n {
        return Err(GraphError::InvalidParameter(format!(
            "permutation has length {}, graph has {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(GraphError::InvalidParameter("not a permutation".into()));
        }
    }
    let mut b = GraphBuilder::new(n);
    for (u, v) in g.edges() {
        b.add_edge(perm[u], perm[v]);
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn k(n: usize) -> Graph {
        FamilySpec::Complete(n).build().unwrap()
    }

    fn c(n: usize) -> Graph {
        FamilySpec::Cycle(n).build().unwrap()
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(complement(&k(4)), Graph::empty(4));
    }

    #[test]
    fn union_counts() {
        assert_eq!(disjoint_union(&k(1), &k(1)), Graph::empty(2));
        let u = disjoint_union(&c(4), &c(4));
        assert_eq!((u.n(), u.edge_count()), (8, 8));
    }

    #[test]
    fn join_k1_cycle_is_wheel() {
        for n in 3..9 {
            assert_eq!(join(&k(1), &c(n)), FamilySpec::Wheel(n).build().unwrap());
        }
    }

    #[test]
    fn join_k2_h6_edge_count() {
        let j = join(&k(2), &FamilySpec::H6.build().unwrap());
        assert_eq!(j.edge_count(), 1 + 5 + 12);
    }

    #[test]
    fn small_products() {
        // (0,0) (0,1) (1,1) (1,0) is the cycle order
        let c4 = relabel(&c(4), &[0, 1, 3, 2]).unwrap();
        assert_eq!(product(ProductKind::Cartesian, &k(2), &k(2)), c4);
        assert_eq!(product(ProductKind::Strong, &k(2), &k(2)), k(4));
        // lexicographic(K2, 2K1) is K_{2,2} = C4 with numbering 0,1 | 2,3
        let lex = product(ProductKind::Lexicographic, &k(2), &Graph::empty(2));
        assert_eq!(lex, FamilySpec::CompleteBipartite(2, 2).build().unwrap());
        assert_eq!(product(ProductKind::Direct, &k(2), &k(2)).edge_count(), 2);
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = c(4);
        assert!(relabel(&g, &[0, 1, 1, 2]).is_err());
        assert!(relabel(&g, &[0, 1, 2]).is_err());
        assert_eq!(relabel(&g, &[0, 1, 2, 3]).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_of_path() {
        let p = FamilySpec::Path(5).build().unwrap();
        let s = induced_subgraph(&p, &[1, 2, 4]).unwrap();
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
