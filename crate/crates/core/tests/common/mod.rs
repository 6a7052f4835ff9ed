#![allow(dead_code)]

use burning::graph::{verify_schedule, BurningSchedule, ExplicitGraph};
use proptest::prelude::*;

/// Connected graph on `1..=max_n` vertices: a random tree plus extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = ExplicitGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = prop::collection::vec((0..n, 0..n), 0..=n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (i + 1, p))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            ExplicitGraph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Whether any schedule of exactly `length` sources covers `g`, by trying
/// all `n^length` schedules.
pub fn brute_force_covers(g: &ExplicitGraph, length: usize) -> bool {
    let n = g.vertex_count();
    let mut sources = vec![0usize; length];
    loop {
        let s = BurningSchedule::new(sources.clone()).unwrap();
        if verify_schedule(g, &s).unwrap().covers() {
            return true;
        }
        let mut i = 0;
        loop {
            if i == length {
                return false;
            }
            sources[i] += 1;
            if sources[i] < n {
                break;
            }
            sources[i] = 0;
            i += 1;
        }
    }
}

/// Smallest covering length by brute force.
pub fn brute_force_burning_number(g: &ExplicitGraph) -> usize {
    (1..).find(|&len| brute_force_covers(g, len)).unwrap()
}

pub fn isqrt_ceil(n: usize) -> usize {
    (0..).find(|r| r * r >= n).unwrap()
}
