//! Colour relations forced by local structure, used to seed the search.

use serde::Serialize;

use super::Mode;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PairConstraint {
    Same { u: usize, v: usize },
    Opposite { u: usize, v: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Infeasibility {
    /// More than `(deg + 1) / 2` leaves hang off `vertex`.
    TooManyLeaves { vertex: usize, leaves: usize, degree: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ForcedConstraints {
    pub constraints: Vec<PairConstraint>,
    pub infeasible: Option<Infeasibility>,
}

/// Equal-neighbourhood classes: open neighbourhoods for CNB, closed for NB.
/// Each class is returned sorted, classes ordered by their first member;
/// singletons are omitted.
pub fn twin_classes(g: &Graph, mode: Mode) -> Vec<Vec<usize>> {
    let key = |v: usize| -> Vec<u64> {
        let mut row = g.row(v).to_vec();
        if mode == Mode::Nb {
            row[v / 64] |= 1 << (v % 64);
        }
        row
    };
    let mut keyed: Vec<(Vec<u64>, usize)> = (0..g.n()).map(|v| (key(v), v)).collect();
    keyed.sort();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for group in keyed.chunk_by(|a, b| a.0 == b.0) {
        if group.len() > 1 {
            classes.push(group.iter().map(|(_, v)| *v).collect());
        }
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort();
    classes
}

/// Binary colour constraints implied by twins and, for CNB, leaves.
pub fn leaf_force(g: &Graph, mode: Mode) -> ForcedConstraints {
    let mut out = ForcedConstraints::default();
    for class in twin_classes(g, mode) {
        for &v in &class[1..] {
            out.constraints.push(PairConstraint::Same { u: class[0], v });
        }
    }
    if mode == Mode::Cnb {
        let mut leaves = vec![0usize; g.n()];
        for v in 0..g.n() {
            if g.degree(v) != 1 {
                continue;
            }
            let w = g.neighbors(v).next().expect("leaf has a neighbour");
            leaves[w] += 1;
            // K2 components: emit the pair once
            if g.degree(w) != 1 || v < w {
                out.constraints.push(PairConstraint::Opposite { u: v, v: w });
            }
        }
        out.infeasible = (0..g.n())
            .find(|&v| 2 * leaves[v] > g.degree(v) + 1)
            .map(|v| Infeasibility::TooManyLeaves {
                vertex: v,
                leaves: leaves[v],
                degree: g.degree(v),
            });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn star_is_infeasible() {
        let f = leaf_force(&fam("star 3"), Mode::Cnb);
        assert_eq!(
            f.infeasible,
            Some(Infeasibility::TooManyLeaves { vertex: 0, leaves: 3, degree: 3 })
        );
    }

    #[test]
    fn complete_bipartite_sides() {
        let g = fam("kmn 2 3");
        assert_eq!(twin_classes(&g, Mode::Cnb), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(leaf_force(&g, Mode::Cnb).infeasible.is_none());
    }

    #[test]
    fn path3() {
        let f = leaf_force(&fam("P3"), Mode::Cnb);
        assert!(f.constraints.contains(&PairConstraint::Same { u: 0, v: 2 }));
        assert!(f.constraints.contains(&PairConstraint::Opposite { u: 0, v: 1 }));
        assert!(f.constraints.contains(&PairConstraint::Opposite { u: 2, v: 1 }));
        assert!(f.infeasible.is_some());
    }

    #[test]
    fn k2_once() {
        let f = leaf_force(&fam("K2"), Mode::Cnb);
        assert_eq!(f.constraints, vec![PairConstraint::Opposite { u: 0, v: 1 }]);
        assert!(f.infeasible.is_none());
    }

    #[test]
    fn nb_uses_closed_twins() {
        // in K4 every closed neighbourhood is the whole vertex set
        assert_eq!(twin_classes(&fam("K4"), Mode::Nb), vec![vec![0, 1, 2, 3]]);
        assert!(twin_classes(&fam("K4"), Mode::Cnb).is_empty());
    }
}
