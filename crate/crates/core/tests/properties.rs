mod common;

use balanced_coloring::coloring::verify;
use balanced_coloring::graph::{
    complement, connected_components, decode_graph6, disjoint_union, encode_graph6, induced_subgraph, product,
    CirculantSpec, ProductKind,
};
use balanced_coloring::{Coloring, Graph, Mode};
use proptest::prelude::*;

use common::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_and_coloring(max_n: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |reds| {
            let c = Coloring::from_reds(n, (0..n).filter(|&v| reds[v]));
            (g.clone(), c)
        })
    })
}

fn balanced_pair(max_n: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    graph(max_n).prop_filter("even order", |g| g.n() % 2 == 0).prop_flat_map(|g| {
        let n = g.n();
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(move |order| {
            (g.clone(), Coloring::from_reds(n, order[..n / 2].iter().copied()))
        })
    })
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Cnb), Just(Mode::Nb)]
}

proptest! {
    #[test]
    fn verification_matches_oracle((g, c) in graph_and_coloring(14), m in mode()) {
        prop_assert_eq!(verify(&g, &c, m).unwrap().valid, oracle_valid(&g, &c, m));
    }

    #[test]
    fn color_swap_symmetry((g, c) in graph_and_coloring(14), m in mode()) {
        prop_assert_eq!(verify(&g, &c, m).unwrap().valid, verify(&g, &c.flipped(), m).unwrap().valid);
    }

    #[test]
    fn valid_iff_valid_on_every_component((g, c) in graph_and_coloring(12), m in mode()) {
        let whole = verify(&g, &c, m).unwrap().valid;
        let per = connected_components(&g).iter().all(|comp| {
            let vs: Vec<usize> = comp.iter().collect();
            let sub = induced_subgraph(&g, &vs).unwrap();
            let sc = Coloring::from_reds(vs.len(), (0..vs.len()).filter(|&i| c.is_red(vs[i])));
            verify(&sub, &sc, m).unwrap().valid
        });
        prop_assert_eq!(whole, per);
    }

    #[test]
    fn disjoint_union_concatenates((g, cg) in graph_and_coloring(8), (h, ch) in graph_and_coloring(8), m in mode()) {
        let u = disjoint_union(&g, &h);
        let both = verify(&g, &cg, m).unwrap().valid && verify(&h, &ch, m).unwrap().valid;
        prop_assert_eq!(verify(&u, &cg.concat(&ch), m).unwrap().valid, both);
    }

    #[test]
    fn handshake(g in graph(20)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn complement_is_an_involution(g in graph(20)) {
        let c = complement(&g);
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(complement(&c), g);
    }

    #[test]
    fn product_degrees(g in graph(6), h in graph(6)) {
        let m = h.n();
        for (kind, f) in [
            (ProductKind::Cartesian, (|a: usize, b: usize, _: usize, _: usize| a + b) as fn(usize, usize, usize, usize) -> usize),
            (ProductKind::Strong, |a, b, _, _| a + b + a * b),
            (ProductKind::Lexicographic, |a, b, _, hn| a * hn + b),
            (ProductKind::Direct, |a, b, _, _| a * b),
        ] {
            let p = product(kind, &g, &h);
            for v in 0..p.n() {
                prop_assert_eq!(p.degree(v), f(g.degree(v / m), h.degree(v % m), g.n(), m), "{:?}", kind);
            }
        }
    }

    #[test]
    fn complement_duality_balanced((g, c) in balanced_pair(16)) {
        prop_assert_eq!(
            verify(&g, &c, Mode::Nb).unwrap().valid,
            verify(&complement(&g), &c, Mode::Cnb).unwrap().valid
        );
    }

    #[test]
    fn circulant_degree(n in 2usize..40, raw in proptest::collection::vec(1usize..20, 1..4)) {
        let mut lengths: Vec<usize> = raw.into_iter().map(|d| 1 + (d - 1) % (n / 2)).collect();
        lengths.sort();
        lengths.dedup();
        let spec = CirculantSpec::new(n, lengths.clone()).unwrap();
        let g = spec.build();
        prop_assert_eq!(g.regular_degree(), Some(spec.degree()));
        for (u, v) in g.edges() {
            let d = (v - u).min(n - (v - u));
            prop_assert!(lengths.contains(&d));
        }
    }
}

#[test]
fn graph6_round_trip_per_order() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(30);
    for n in 1..30 {
        for _ in 0..1000 {
            let p: f64 = rng.random();
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.random_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let s = encode_graph6(&g);
            assert_eq!(decode_graph6(s.as_bytes()).unwrap(), g, "{s}");
        }
    }
}
