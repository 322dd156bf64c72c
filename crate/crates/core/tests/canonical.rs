//! Canonical codes against the all-permutations minimum.

use std::collections::HashMap;

use hamrel::corpus::random_simple_graph;
use hamrel::{canonical_form, CanonicalCode, Multigraph};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Smallest upper-triangle bit string over all vertex orders.
fn brute_code(g: &Multigraph) -> (usize, u64) {
    let n = g.vertex_count();
    let adj = g.simple_adjacency();
    let mut matrix = [[false; 8]; 8];
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            matrix[u][v] = true;
        }
    }
    let best = (0..n)
        .permutations(n)
        .map(|p| {
            let mut bits = 0u64;
            for j in 1..n {
                for i in 0..j {
                    bits = (bits << 1) | u64::from(matrix[p[i]][p[j]]);
                }
            }
            bits
        })
        .min()
        .unwrap_or(0);
    (n, best)
}

#[test]
fn agrees_with_all_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut graphs = Vec::new();
    for _ in 0..2200 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.2..0.8);
        let g = random_simple_graph(&mut rng, n, density);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        graphs.push(g.relabel(&perm).unwrap());
        graphs.push(g);
    }
    let mut forward: HashMap<CanonicalCode, (usize, u64)> = HashMap::new();
    let mut backward: HashMap<(usize, u64), CanonicalCode> = HashMap::new();
    for g in &graphs {
        let code = canonical_form(g).unwrap();
        let brute = brute_code(g);
        assert_eq!(*forward.entry(code.clone()).or_insert(brute), brute, "{g}");
        assert_eq!(*backward.entry(brute).or_insert(code.clone()), code, "{g}");
    }
    assert!(forward.len() > 500);
}

#[test]
fn regular_graphs_are_separated() {
    // 3-regular graphs on 8 vertices share degree sequences but not classes
    let cube = Multigraph::new(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap();
    let wagner = hamrel::constructions::named_graph("wagner").unwrap();
    assert_eq!(brute_code(&cube) == brute_code(&wagner), canonical_form(&cube).unwrap() == canonical_form(&wagner).unwrap());
    assert_ne!(canonical_form(&cube).unwrap(), canonical_form(&wagner).unwrap());
}

#[test]
fn petersen_is_not_wagner_plus_three() {
    let petersen = hamrel::constructions::named_graph("petersen").unwrap();
    let wagner = hamrel::constructions::named_graph("wagner").unwrap();
    let padded = Multigraph::new(10, wagner.edges().iter().copied().chain([(7, 8), (8, 9), (9, 0)])).unwrap();
    assert_eq!(padded.edge_count(), 15);
    assert_ne!(canonical_form(&petersen).unwrap(), canonical_form(&padded).unwrap());
}

#[test]
fn multigraphs_are_rejected() {
    let g = Multigraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
    assert!(canonical_form(&g).is_err());
}
