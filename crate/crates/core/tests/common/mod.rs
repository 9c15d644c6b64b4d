#![allow(dead_code)]

use monopos::Graph;
use proptest::prelude::*;

/// Arbitrary simple graph on 1..=max_n vertices.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

/// Connected graph: a random spanning tree plus random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        (parents, proptest::collection::vec(0.0f64..1.0, n * (n - 1) / 2), 0.0f64..0.8).prop_map(
            move |(parents, coins, p)| {
                let mut it = coins.into_iter();
                Graph::from_fn(n, |u, v| {
                    let c = it.next().unwrap();
                    parents[v - 1] == u || c < p
                })
                .unwrap()
            },
        )
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
