//! Subdivided base graphs against exhaustive search over all connected graphs.

mod common;

use hamrel::analysis::{search_umr, UmrOutcome};
use hamrel::constructions::umr_subdivision;
use hamrel::hamiltonian::find_hamiltonian_cycle;
use hamrel::rel_factoring;

#[test]
fn small_connected_counts() {
    let counts: Vec<usize> = [(4, 4), (5, 6), (6, 8), (7, 7), (8, 10)]
        .iter()
        .map(|&(n, m)| common::connected_graphs(n, m).len())
        .collect();
    // known counts of connected graphs, e.g. 33 unicyclic graphs on 7 vertices
    assert_eq!(counts, [2, 5, 22, 33, 486]);
}

#[test]
fn subdivisions_are_the_exhaustive_optimum() {
    for n in 6..=9 {
        for extra in 1..=3 {
            let graphs = common::connected_graphs(n, n + extra);
            let report = search_umr(&graphs).unwrap();
            assert_ne!(report.outcome, UmrOutcome::NoDominant, "n={n} m={}", n + extra);
            let ours = rel_factoring(&umr_subdivision(n, n + extra).unwrap());
            assert_eq!(report.dominant[0].poly, ours, "n={n} m={}", n + extra);
        }
    }
}

#[test]
fn hamiltonicity_boundaries() {
    for n in 5..=12 {
        assert!(find_hamiltonian_cycle(&umr_subdivision(n, n + 1).unwrap()).is_none(), "n={n}");
    }
    for n in 6..=14 {
        assert_eq!(find_hamiltonian_cycle(&umr_subdivision(n, n + 2).unwrap()).is_some(), n <= 8, "n={n}");
        assert_eq!(find_hamiltonian_cycle(&umr_subdivision(n, n + 3).unwrap()).is_some(), n <= 12, "n={n}");
    }
}
