//! Hamiltonian graphs as the cycle `0..n` plus chords, up to isomorphism.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{invalid, Result};
use crate::graph::Multigraph;

fn cyclic_length(n: usize, (u, v): (usize, usize)) -> usize {
    let d = u.abs_diff(v);
    d.min(n - d)
}

/// Every pair of cycle vertices that is not a cycle edge, sorted.
pub fn chord_candidates(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&e| cyclic_length(n, e) >= 2)
        .collect()
}

/// All non-isomorphic graphs on `n` vertices made of the cycle `0..n` and
/// `c` chords, ordered by canonical code.
///
/// Rotating the shortest chord onto `(0, d)` loses no isomorphism class, so
/// only chord sets containing such a chord are generated.
pub fn enumerate_hamiltonian(n: usize, c: usize) -> Result<Vec<Multigraph>> {
    if n < 4 {
        return Err(invalid(format!("need n >= 4, got {n}")));
    }
    let chords = chord_candidates(n);
    if c > chords.len() {
        return Err(invalid(format!("at most {} chords fit on {n} vertices, asked for {c}", chords.len())));
    }
    let cycle = Multigraph::cycle(n)?;
    if c == 0 {
        return Ok(vec![cycle]);
    }
    let seeds: Vec<usize> = (2..=n / 2).collect();
    let found: Vec<BTreeMap<CanonicalCode, Multigraph>> = seeds
        .par_iter()
        .map(|&d| {
            let others: Vec<(usize, usize)> = chords
                .iter()
                .copied()
                .filter(|&e| e != (0, d) && cyclic_length(n, e) >= d)
                .collect();
            let mut local = BTreeMap::new();
            for rest in others.into_iter().combinations(c - 1) {
                let g = cycle.with_edges(rest.into_iter().chain([(0, d)])).expect("chords are in range");
                keep_smallest(&mut local, g);
            }
            local
        })
        .collect();
    Ok(merge(found))
}

/// Cycle plus the diametrical chord `(0, floor(n/2))` plus two chords
/// crossing it, up to isomorphism. The crossing chords join the arcs
/// `1..floor(n/2)` and `floor(n/2)+1..n`, avoiding both diametrical ends.
pub fn enumerate_hd(n: usize) -> Result<Vec<Multigraph>> {
    if n < 6 {
        return Err(invalid(format!("need n >= 6, got {n}")));
    }
    let half = n / 2;
    let crossing: Vec<(usize, usize)> = (1..half).cartesian_product(half + 1..n).collect();
    let base = Multigraph::cycle(n)?.with_edges([(0, half)])?;
    let found: Vec<BTreeMap<CanonicalCode, Multigraph>> = (0..crossing.len())
        .into_par_iter()
        .map(|i| {
            let mut local = BTreeMap::new();
            for &second in &crossing[i + 1..] {
                let g = base.with_edges([crossing[i], second]).expect("chords are in range");
                keep_smallest(&mut local, g);
            }
            local
        })
        .collect();
    Ok(merge(found))
}

fn keep_smallest(map: &mut BTreeMap<CanonicalCode, Multigraph>, g: Multigraph) {
    let code = canonical_form(&g).expect("chord sets are simple");
    match map.get(&code) {
        Some(old) if old.edges() <= g.edges() => {}
        _ => {
            map.insert(code, g);
        }
    }
}

// Union keeping the smallest edge list per class, so the representative
// does not depend on how work was split.
fn merge(parts: Vec<BTreeMap<CanonicalCode, Multigraph>>) -> Vec<Multigraph> {
    let mut all: BTreeMap<CanonicalCode, Multigraph> = BTreeMap::new();
    for part in parts {
        for (code, g) in part {
            match all.get(&code) {
                Some(old) if old.edges() <= g.edges() => {}
                _ => {
                    all.insert(code, g);
                }
            }
        }
    }
    all.into_values().collect()
}

/// One graph per isomorphism class, in first-seen order.
pub fn dedupe_isomorphic(graphs: &[Multigraph]) -> Result<Vec<Multigraph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if seen.insert(canonical_form(g)?) {
            out.push(g.clone());
        }
    }
    Ok(out)
}
