#![allow(dead_code)]

use mis_extremal_core::Graph;
use proptest::prelude::*;
use rand::Rng;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Graphs of order `0..=max_n` with arbitrary edge sets.
pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}
