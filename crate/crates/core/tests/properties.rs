//! Algebraic invariants over generated graphs.

use hamrel::{
    canonical_form, compare_on_unit_interval, dominates, rel_factoring, CoefficientOrder, EdgeRef, Multigraph,
};
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| {
            Multigraph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).expect("in range")
        })
    })
}

fn connected(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| (n - 1..=max_m.max(n - 1)).prop_flat_map(move |m| connected_nm(n, m)))
}

/// A random spanning tree plus random extra edges, exactly `m` edges.
fn connected_nm(n: usize, m: usize) -> impl Strategy<Value = Multigraph> {
    let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
    let extra = proptest::collection::vec((0..n, 1..n), m + 1 - n);
    (tree, extra).prop_map(move |(tree, extra)| {
        let mut edges: Vec<(usize, usize)> = tree.iter().enumerate().map(|(i, ix)| (ix.index(i + 1), i + 1)).collect();
        // shifting by a nonzero offset never produces a loop
        edges.extend(extra.into_iter().map(|(u, d)| (u, (u + d) % n)));
        Multigraph::new(n, edges).expect("in range")
    })
}

fn same_size_pair() -> impl Strategy<Value = (Multigraph, Multigraph)> {
    (3usize..=6).prop_flat_map(|n| (n..=10).prop_flat_map(move |m| (connected_nm(n, m), connected_nm(n, m))))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn simple_with_permutation() -> impl Strategy<Value = (Multigraph, Vec<usize>)> {
    multigraph(8, 16).prop_flat_map(|g| {
        let g = g.simple_support();
        let n = g.vertex_count();
        (Just(g), permutation(n))
    })
}

fn binom(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn deletion_contraction(g in multigraph(7, 13), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let e = EdgeRef(pick.index(g.edge_count()));
        let (u, v) = g.edges()[e.0];
        let copies = g.multiplicity(u, v);
        let whole = rel_factoring(&g);
        let deleted = rel_factoring(&g.delete_edge(e).unwrap());
        let contracted = rel_factoring(&g.contract_edge(e).unwrap());
        // the other copies of e become free loops after contraction
        for i in 0..=g.edge_count() {
            let mut expected = if i < g.edge_count() { deleted.count(i).clone() } else { BigUint::from(0u32) };
            for j in 0..copies {
                if i >= 1 + j && i - 1 - j < contracted.counts().len() {
                    expected += binom(copies - 1, j) * contracted.count(i - 1 - j);
                }
            }
            prop_assert_eq!(whole.count(i), &expected, "i = {}", i);
        }
    }

    #[test]
    fn connectivity_fixes_top_coefficients(g in connected(7, 14)) {
        let poly = rel_factoring(&g);
        let m = g.edge_count();
        let lambda = g.edge_connectivity();
        prop_assert!(lambda >= 1);
        for i in m + 1 - lambda..=m {
            prop_assert_eq!(poly.count(i), &binom(m, i));
        }
        prop_assert!(poly.count(m - lambda) < &binom(m, m - lambda));
        prop_assert_eq!(poly.evaluate(&BigRational::from_integer(1.into())).unwrap(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn comparison_is_antisymmetric((a, b) in same_size_pair()) {
        let (pa, pb) = (rel_factoring(&a), rel_factoring(&b));
        let forward = compare_on_unit_interval(&pa, &pb).unwrap();
        prop_assert_eq!(compare_on_unit_interval(&pb, &pa).unwrap(), forward.swapped());
        let both = dominates(&pa, &pb).unwrap() == CoefficientOrder::Dominates
            && dominates(&pb, &pa).unwrap() == CoefficientOrder::Dominates;
        prop_assert_eq!(both, pa == pb);
    }

    #[test]
    fn power_form_evaluates_the_same(g in connected(6, 10), num in 0u32..=64) {
        let poly = rel_factoring(&g);
        let p = BigRational::new(num.into(), 64.into());
        prop_assert_eq!(poly.evaluate(&p).unwrap(), poly.to_power().evaluate(&p));
    }

    #[test]
    fn relabeling_keeps_invariants((g, perm) in simple_with_permutation()) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(rel_factoring(&g), rel_factoring(&h));
        prop_assert_eq!(Multigraph::from_graph6(&g.to_graph6().unwrap()).unwrap(), g.clone());
        prop_assert_eq!(Multigraph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
