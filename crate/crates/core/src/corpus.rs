//! Seeded random graphs for oracle cross-checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::Multigraph;
use crate::relpoly::{rel_bruteforce, spanning_tree_count, Factoring};

/// A random spanning tree on `n` vertices plus `m - n + 1` uniformly random
/// non-loop edges, parallel edges allowed.
pub fn random_connected_multigraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Multigraph {
    assert!(n >= 2 || m == 0, "a single vertex has no non-loop edges");
    assert!(n >= 1 && m + 1 >= n, "need n >= 1 and m >= n - 1");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    Multigraph::new(n, edges).expect("endpoints are in range")
}

/// A random simple graph on `n` vertices, each pair present with probability `density`.
pub fn random_simple_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Multigraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Multigraph::new(n, edges).expect("endpoints are in range")
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OracleSummary {
    pub seed: u64,
    pub graphs: usize,
    /// Indices of graphs where factoring disagreed with enumeration or the tree count.
    pub mismatches: Vec<usize>,
}

/// Compares factoring with subset enumeration and the matrix-tree count on
/// `count` seeded random connected multigraphs with at most `max_edges` edges.
pub fn oracle_check(engine: &Factoring, seed: u64, count: usize, max_edges: usize) -> OracleSummary {
    let max_edges = max_edges.clamp(1, crate::relpoly::BRUTE_FORCE_EDGE_LIMIT);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Multigraph> = (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_edges.min(9) + 1);
            let m = rng.gen_range(n - 1..=max_edges.max(n - 1));
            random_connected_multigraph(&mut rng, n, m)
        })
        .collect();
    let mismatches = graphs
        .par_iter()
        .enumerate()
        .filter(|(_, g)| {
            let fast = engine.compute(g);
            let slow = rel_bruteforce(g).expect("edge count is capped");
            fast != slow || *fast.count(g.vertex_count() - 1) != spanning_tree_count(g)
        })
        .map(|(i, _)| i)
        .collect();
    OracleSummary {
        seed,
        graphs: count,
        mismatches,
    }
}
