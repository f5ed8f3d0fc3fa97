//! Embeddings, complements, joins and lexicographic products.

use serde::{Deserialize, Serialize};

use super::ConstructionError;
use crate::coloring::{require_valid, Coloring, Mode};
use crate::graph::{complement, join, product, Graph, GraphBuilder, ProductKind};

fn doubled(g: &Graph, matching: bool) -> (Graph, Coloring) {
    let n = g.n();
    let mut b = GraphBuilder::new(2 * n);
    for (i, j) in g.edges() {
        b.add_edge(i, j);
        b.add_edge(n + i, n + j);
        b.add_edge(i, n + j);
        b.add_edge(j, n + i);
    }
    if matching {
        for i in 0..n {
            b.add_edge(i, n + i);
        }
    }
    (b.build(), Coloring::from_reds(2 * n, 0..n))
}

/// An NB graph on `2n` vertices whose first `n` vertices (red) induce `g`;
/// vertex `n + i` is the blue twin of `i`.
pub fn embed_in_nbc(g: &Graph) -> (Graph, Coloring) {
    let (h, c) = doubled(g, false);
    require_valid(&h, &c, Mode::Nb).expect("embedding is NB");
    (h, c)
}

/// As [`embed_in_nbc`] with each vertex also joined to its twin, giving a CNB graph.
pub fn embed_in_cnbc(g: &Graph) -> (Graph, Coloring) {
    let (h, c) = doubled(g, true);
    require_valid(&h, &c, Mode::Cnb).expect("embedding is CNB");
    (h, c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BridgeDirection {
    NbToCnb,
    CnbToNb,
}

fn require_balanced(c: &Coloring) -> Result<(), ConstructionError> {
    if c.is_balanced() {
        Ok(())
    } else {
        Err(ConstructionError::Unbalanced {
            red: c.red_count(),
            blue: c.blue_count(),
        })
    }
}

/// With equally many red and blue vertices, an NB colouring of `g` is a CNB
/// colouring of its complement and vice versa.
pub fn color_complement_bridge(
    g: &Graph,
    c: &Coloring,
    direction: BridgeDirection,
) -> Result<(Graph, Coloring), ConstructionError> {
    require_balanced(c)?;
    let (from, to) = match direction {
        BridgeDirection::NbToCnb => (Mode::Nb, Mode::Cnb),
        BridgeDirection::CnbToNb => (Mode::Cnb, Mode::Nb),
    };
    require_valid(g, c, from)?;
    let gc = complement(g);
    require_valid(&gc, c, to)?;
    Ok((gc, c.clone()))
}

/// Colouring of `g ∨ h` from balanced colourings of both sides.
pub fn color_join(
    g: &Graph,
    cg: &Coloring,
    h: &Graph,
    ch: &Coloring,
    mode: Mode,
) -> Result<Coloring, ConstructionError> {
    require_valid(g, cg, mode)?;
    require_valid(h, ch, mode)?;
    require_balanced(cg)?;
    require_balanced(ch)?;
    let c = cg.concat(ch);
    require_valid(&join(g, h), &c, mode)?;
    Ok(c)
}

/// CNB colouring of `g ∘ h`: every copy of `h` takes the balanced CNB colouring `ch`.
pub fn color_lexicographic(g: &Graph, h: &Graph, ch: &Coloring) -> Result<Coloring, ConstructionError> {
    require_valid(h, ch, Mode::Cnb)?;
    require_balanced(ch)?;
    let m = h.n();
    let c = Coloring::from_fn(g.n() * m, |i| ch.color(i % m));
    require_valid(&product(ProductKind::Lexicographic, g, h), &c, Mode::Cnb)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_subgraph, FamilySpec};

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn embeddings() {
        let (h, c) = embed_in_cnbc(&Graph::empty(1));
        assert_eq!(h, fam("K2"));
        assert_eq!(c.to_string(), "RB");
        let star = fam("star 4");
        let (h, _) = embed_in_nbc(&star);
        assert_eq!(h.n(), 10);
        assert_eq!(induced_subgraph(&h, &[0, 1, 2, 3, 4]).unwrap(), star);
        let (h, _) = embed_in_cnbc(&fam("C3"));
        assert_eq!(h.n(), 6);
    }

    #[test]
    fn bridge() {
        let c: Coloring = "RRBB".parse().unwrap();
        let (gc, _) = color_complement_bridge(&fam("C4"), &c, BridgeDirection::NbToCnb).unwrap();
        assert_eq!(gc.edge_count(), 2);
        let h7 = fam("h7");
        let c7: Coloring = "RRBBBRR".parse().unwrap();
        assert!(matches!(
            color_complement_bridge(&h7, &c7, BridgeDirection::NbToCnb),
            Err(ConstructionError::Unbalanced { .. })
        ));
    }

    #[test]
    fn joins() {
        let rb: Coloring = "RB".parse().unwrap();
        let c = color_join(&fam("K2"), &rb, &fam("K2"), &rb, Mode::Cnb).unwrap();
        assert_eq!(c.to_string(), "RBRB");
        let h6c: Coloring = "BRBRRR".parse().unwrap();
        assert!(matches!(
            color_join(&fam("K2"), &rb, &fam("h6"), &h6c, Mode::Cnb),
            Err(ConstructionError::Unbalanced { red: 4, blue: 2 })
        ));
    }

    #[test]
    fn lexicographic() {
        let c = color_lexicographic(&fam("P3"), &fam("K2"), &"RB".parse().unwrap()).unwrap();
        assert_eq!(c.n(), 6);
    }
}
