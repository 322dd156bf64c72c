//! Shared helpers for the integration tests.

use std::collections::BTreeMap;

use hamrel::{canonical_form, CanonicalCode, Multigraph};
use itertools::Itertools;
use rayon::prelude::*;

/// All connected simple graphs with `n` vertices and `m` edges, up to
/// isomorphism.
///
/// Every connected graph has a vertex whose removal leaves it connected, and
/// removing it never raises `m - n`; so the graphs grow one vertex at a time
/// from smaller connected graphs with no larger excess.
pub fn connected_graphs(n: usize, m: usize) -> Vec<Multigraph> {
    assert!(n >= 1 && m + 1 >= n);
    let excess = m + 1 - n;
    // level[e] holds the connected graphs on the current vertex count with e edges
    let mut level: BTreeMap<usize, Vec<Multigraph>> = BTreeMap::new();
    level.insert(0, vec![Multigraph::empty(1).unwrap()]);
    for v in 2..=n {
        let mut next: BTreeMap<usize, BTreeMap<CanonicalCode, Multigraph>> = BTreeMap::new();
        for (&e, graphs) in &level {
            for d in 1..=(v - 1).min(excess + 1) {
                let e2 = e + d;
                if e2 + 1 < v || e2 + 1 - v > excess || e2 + (n - v) > m {
                    continue;
                }
                let found: Vec<(CanonicalCode, Multigraph)> = graphs
                    .par_iter()
                    .flat_map_iter(|g| {
                        (0..v - 1).combinations(d).map(move |nb| {
                            let h = Multigraph::new(v, g.edges().iter().copied().chain(nb.into_iter().map(|u| (u, v - 1))))
                                .unwrap();
                            (canonical_form(&h).unwrap(), h)
                        })
                    })
                    .collect();
                let slot = next.entry(e2).or_default();
                for (code, h) in found {
                    slot.entry(code).or_insert(h);
                }
            }
        }
        level = next.into_iter().map(|(e, map)| (e, map.into_values().collect())).collect();
    }
    level.remove(&m).unwrap_or_default()
}
