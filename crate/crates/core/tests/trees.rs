mod common;

use balanced_coloring::graph::relabel;
use balanced_coloring::solver::{enumerate, SolverConfig};
use balanced_coloring::trees::{
    decompose_cnbc_tree, imbalanced_cnbc_tree, imbalanced_nbc_graph, labeled_trees, replay, Decomposition,
    TreeBuildScript, TreeError,
};
use balanced_coloring::{Color, Coloring, Graph, Mode};

use common::*;

fn check_two_colorings(t: &Graph) {
    let n = t.n();
    let e = enumerate(t, Mode::Cnb, usize::MAX, &SolverConfig::default());
    let d = decompose_cnbc_tree(t).unwrap();
    assert_eq!(e.colorings.len(), if d.is_cnbc() { 2 } else { 0 });
    if let Decomposition::Cnbc { script, labels } = d {
        let (g, c) = replay(&script).unwrap();
        assert_eq!(relabel(&g, &labels).unwrap(), *t);
        let mut moved = vec![Color::Blue; n];
        for (i, &l) in labels.iter().enumerate() {
            moved[l] = c.color(i);
        }
        let moved = Coloring::from_fn(n, |v| moved[v]);
        assert!(e.colorings.contains(&moved) && e.colorings.contains(&moved.flipped()));
    }
}

#[test]
fn cnbc_trees_have_exactly_two_colorings() {
    // a leaf is opposite its neighbour, which propagates through the whole tree
    for n in 1..=8 {
        labeled_trees(n).for_each(|t| check_two_colorings(&t));
    }
    // every CNBC tree on at most 10 vertices replays from a script of at most two steps
    for z1 in 0..2 {
        for z2 in 0..6 {
            let mut script = TreeBuildScript::default();
            script.push(z1);
            check_two_colorings(&replay(&script).unwrap().0);
            script.push(z2);
            check_two_colorings(&replay(&script).unwrap().0);
        }
    }
}

#[test]
fn scripts_replay_to_valid_trees() {
    let mut script = TreeBuildScript::default();
    for z in [0, 1, 3, 2, 5, 8, 13, 0] {
        script.push(z);
        let (g, c) = replay(&script).unwrap();
        assert_eq!(g.edge_count() + 1, g.n());
        assert!(oracle_valid(&g, &c, Mode::Cnb));
        assert!(decompose_cnbc_tree(&g).unwrap().is_cnbc());
    }
}

#[test]
fn non_trees_are_rejected() {
    let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(matches!(decompose_cnbc_tree(&c4), Err(TreeError::NotATree)));
    let forest = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert!(matches!(decompose_cnbc_tree(&forest), Err(TreeError::NotATree)));
}

#[test]
fn imbalanced_families() {
    for k in 0..6 {
        let (t, c) = imbalanced_cnbc_tree(k);
        assert!(oracle_valid(&t, &c, Mode::Cnb));
        assert_eq!(c.red_count() - c.blue_count(), 2 * k);
        let (g, c) = imbalanced_nbc_graph(k);
        assert!(oracle_valid(&g, &c, Mode::Nb));
        assert_eq!(c.red_count() - c.blue_count(), k);
    }
}
