//! Colourings of product graphs, hypercubes and prisms.

use super::ConstructionError;
use crate::coloring::{require_valid, Color, Coloring, Mode};
use crate::graph::{product, FamilySpec, Graph, ProductKind};

fn k2() -> Graph {
    Graph::from_edges(2, [(0, 1)]).expect("K2")
}

fn rb() -> Coloring {
    Coloring::from_reds(2, [0])
}

/// Colouring of `g □ h` from a CNB colouring of `g` and an NB colouring
/// of `h`: `(a, b)` is blue exactly when `cg(a)` and `ch(b)` agree.
pub fn color_cartesian(g: &Graph, cg: &Coloring, h: &Graph, ch: &Coloring) -> Result<Coloring, ConstructionError> {
    require_valid(g, cg, Mode::Cnb)?;
    require_valid(h, ch, Mode::Nb)?;
    let m = h.n();
    let c = Coloring::from_fn(g.n() * m, |i| {
        if cg.is_red(i / m) == ch.is_red(i % m) {
            Color::Blue
        } else {
            Color::Red
        }
    });
    require_valid(&product(ProductKind::Cartesian, g, h), &c, Mode::Cnb)?;
    Ok(c)
}

/// NB colouring of `g □ K2`: both copies of `a` take `cg(a)`.
pub fn color_box_k2(g: &Graph, cg: &Coloring) -> Result<Coloring, ConstructionError> {
    require_valid(g, cg, Mode::Cnb)?;
    let c = Coloring::from_fn(2 * g.n(), |i| cg.color(i / 2));
    require_valid(&product(ProductKind::Cartesian, g, &k2()), &c, Mode::Nb)?;
    Ok(c)
}

/// CNB colouring of `g ⊠ h`: every layer `{a} × V(h)` takes `cg(a)`.
pub fn color_strong(g: &Graph, cg: &Coloring, h: &Graph) -> Result<Coloring, ConstructionError> {
    require_valid(g, cg, Mode::Cnb)?;
    let m = h.n();
    let c = Coloring::from_fn(g.n() * m, |i| cg.color(i / m));
    require_valid(&product(ProductKind::Strong, g, h), &c, Mode::Cnb)?;
    Ok(c)
}

/// Colouring of `Q_k` (NB for even `k`, CNB for odd `k`) built by
/// alternating `Q □ K2` and `K2 □ Q` from `Q1 = K2`.
pub fn hypercube_coloring(k: u32) -> Result<(Mode, Coloring), ConstructionError> {
    if k == 0 {
        return Ok((Mode::Nb, Coloring::all_red(1)));
    }
    let mut q = k2();
    let mut c = rb();
    for dim in 1..k {
        if dim % 2 == 1 {
            c = color_box_k2(&q, &c)?;
            q = product(ProductKind::Cartesian, &q, &k2());
        } else {
            c = color_cartesian(&k2(), &rb(), &q, &c)?;
            q = product(ProductKind::Cartesian, &k2(), &q);
        }
    }
    let mode = if k % 2 == 1 { Mode::Cnb } else { Mode::Nb };
    debug_assert_eq!(q, FamilySpec::Hypercube(k).build().expect("hypercube"));
    Ok((mode, c))
}

/// The two constructive families of CNB colourings of the prism `K2 □ C_n`
/// (vertex `k*n + i`): alternating cycles joined monochromatically for even
/// `n`, and `RRBB` rotations against their opposite for `n ≡ 0 (mod 4)`.
/// Sorted lexicographically.
pub fn prism_colorings(n: usize) -> Vec<Coloring> {
    let mut out = Vec::new();
    if n < 3 || n % 2 == 1 {
        return out;
    }
    for first_red in [false, true] {
        out.push(Coloring::from_fn(2 * n, |v| {
            if ((v % n) % 2 == 0) == first_red {
                Color::Red
            } else {
                Color::Blue
            }
        }));
    }
    if n % 4 == 0 {
        for r in 0..4 {
            out.push(Coloring::from_fn(2 * n, |v| {
                let red = (v % n + r) % 4 < 2;
                if red != (v >= n) {
                    Color::Red
                } else {
                    Color::Blue
                }
            }));
        }
    }
    let y = FamilySpec::Prism(n).build().expect("prism");
    for c in &out {
        require_valid(&y, c, Mode::Cnb).expect("prism construction is valid");
    }
    out.sort();
    out
}
