//! Labelled trees via Prüfer sequences.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use rand::Rng;

use crate::graph::{Graph, GraphBuilder};

/// The tree on `seq.len() + 2` vertices encoded by `seq`.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        assert!(s < n, "Prüfer entry {s} out of range for {n} vertices");
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut b = GraphBuilder::new(n);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        b.add_edge(leaf, s);
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    b.add_edge(u, v);
    b.build()
}

/// Every labelled tree on `n` vertices (`n^(n-2)` of them), in Prüfer order.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total: u64 = if n <= 1 { 1 } else { (n as u64).pow(len as u32) };
    (0..total).map(move |mut idx| {
        if n <= 1 {
            return Graph::empty(n);
        }
        let mut seq = vec![0; len];
        for s in seq.iter_mut().rev() {
            *s = (idx % n as u64) as usize;
            idx /= n as u64;
        }
        prufer_decode(&seq)
    })
}

/// A uniformly random labelled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(&seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::metrics;

    #[test]
    fn cayley_counts() {
        assert_eq!(labeled_trees(1).count(), 1);
        assert_eq!(labeled_trees(2).count(), 1);
        assert_eq!(labeled_trees(3).count(), 3);
        assert_eq!(labeled_trees(4).count(), 16);
        let six: Vec<Graph> = labeled_trees(6).collect();
        assert_eq!(six.len(), 1296);
        let mut distinct = six.clone();
        distinct.sort_by_key(|g| g.edges().collect::<Vec<_>>());
        distinct.dedup();
        assert_eq!(distinct.len(), 1296);
        assert!(six.iter().all(|g| metrics(g).is_tree));
    }

    #[test]
    fn known_decode() {
        // sequence (3,3,3) is the star centred at 3
        let g = prufer_decode(&[3, 3, 3]);
        assert_eq!(g.degree(3), 4);
    }
}
