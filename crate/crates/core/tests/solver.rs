mod common;

use balanced_coloring::graph::complement;
use balanced_coloring::solver::{census, census_with, enumerate, solve, SolverConfig};
use balanced_coloring::{Graph, Mode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn exhaustive_small_graphs_match_brute_force() {
    for n in 0..=5 {
        for g in labeled_graphs(n) {
            for mode in [Mode::Cnb, Mode::Nb] {
                let want = brute_force_sat(&g, mode);
                for cfg in [SolverConfig::default(), SolverConfig::bare()] {
                    let s = solve(&g, mode, &cfg);
                    assert_eq!(s.is_sat(), want, "{g:?} {mode}");
                    if let Some(w) = &s.witness {
                        assert!(oracle_valid(&g, w, mode));
                    }
                }
            }
        }
    }
}

#[test]
fn random_graphs_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..600 {
        let n = rng.random_range(6..=16);
        let p = [0.2, 0.4, 0.6, 0.8][rng.random_range(0..4)];
        let g = random_graph(n, p, &mut rng);
        for mode in [Mode::Cnb, Mode::Nb] {
            let want = brute_force(&g, mode);
            let s = solve(&g, mode, &SolverConfig::default());
            assert_eq!(s.is_sat(), !want.is_empty());
            if n <= 12 {
                let e = enumerate(&g, mode, usize::MAX, &SolverConfig::default());
                let mut got: Vec<u64> = e.colorings.iter().map(mask_of).collect();
                got.sort();
                assert_eq!(got, want);
            }
        }
    }
}

#[test]
fn enumeration_counts_are_even() {
    // colour swapping is a fixed-point-free involution on valid colourings
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let g = random_graph(rng.random_range(1..=12), 0.5, &mut rng);
        for mode in [Mode::Cnb, Mode::Nb] {
            let e = enumerate(&g, mode, usize::MAX, &SolverConfig::default());
            assert_eq!(e.colorings.len() % 2, 0);
        }
    }
}

#[test]
fn solve_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let g = random_graph(20, 0.5, &mut rng);
        let a = solve(&g, Mode::Nb, &SolverConfig::default());
        let b = solve(&g, Mode::Nb, &SolverConfig::default());
        assert_eq!((a.status, a.witness, a.nodes), (b.status, b.witness, b.nodes));
    }
}

#[test]
fn census_is_independent_of_worker_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let graphs: Vec<Graph> = (0..120).map(|_| random_graph(rng.random_range(2..=14), 0.5, &mut rng)).collect();
    let key = |v: Vec<balanced_coloring::solver::SolveOutcome>| {
        v.into_iter().map(|o| (o.status, o.witness)).collect::<Vec<_>>()
    };
    let base = key(census(&graphs, Mode::Cnb, &SolverConfig::default()));
    for workers in [1, 2, 4] {
        assert_eq!(key(census_with(&graphs, Mode::Cnb, &SolverConfig::default(), workers)), base);
    }
}

#[test]
fn complement_duality_through_the_solver() {
    // a balanced NB colouring of g is a CNB colouring of its complement
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let g = random_graph(2 * rng.random_range(1..=6), 0.5, &mut rng);
        let e = enumerate(&g, Mode::Nb, usize::MAX, &SolverConfig::default());
        let gc = complement(&g);
        for c in e.colorings.iter().filter(|c| c.is_balanced()) {
            assert!(oracle_valid(&gc, c, Mode::Cnb));
        }
    }
}
