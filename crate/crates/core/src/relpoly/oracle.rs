//! Definitional routes to pathset counts, independent of the factoring engine.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::RelPoly;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const BRUTE_FORCE_EDGE_LIMIT: usize = 24;

/// Counts connected spanning edge subsets of every cardinality by visiting
/// all `2^m` subsets.
pub fn rel_bruteforce(g: &Multigraph) -> Result<RelPoly> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::TooManyEdges {
            m,
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let mut counts = vec![0u64; m + 1];
    let mut parent = vec![0usize; n];
    for mask in 0u32..(1u32 << m) {
        let size = mask.count_ones() as usize;
        if size + 1 < n {
            continue;
        }
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut merged = 0;
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (a, b) = (root(&mut parent, edges[e].0), root(&mut parent, edges[e].1));
            if a != b {
                parent[a] = b;
                merged += 1;
            }
        }
        if merged + 1 == n {
            counts[size] += 1;
        }
    }
    RelPoly::from_u64s(&counts)
}

fn root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// the Laplacian with row and column 0 removed, computed by fraction-free
/// elimination. Parallel edges count with multiplicity.
pub fn spanning_tree_count(g: &Multigraph) -> BigUint {
    let n = g.vertex_count();
    if n == 1 {
        return BigUint::from(1u32);
    }
    let size = n - 1;
    let mut lap = vec![vec![BigInt::zero(); size]; size];
    for &(u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            if a > 0 {
                lap[a - 1][a - 1] += 1;
                if b > 0 {
                    lap[a - 1][b - 1] -= 1;
                }
            }
        }
    }
    let det = bareiss_determinant(lap);
    debug_assert!(!det.is_negative());
    det.to_biguint().unwrap_or_default()
}

fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let size = a.len();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let value = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = value / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: &BigUint) -> u64 {
        x.try_into().unwrap()
    }

    #[test]
    fn triangle_brute_force() {
        let c3 = Multigraph::cycle(3).unwrap();
        let r = rel_bruteforce(&c3).unwrap();
        assert_eq!(r.counts().iter().map(u).collect::<Vec<_>>(), vec![0, 0, 3, 1]);
    }

    #[test]
    fn k4_tree_count() {
        let k4 = Multigraph::complete(4).unwrap();
        // Cayley: 4^(4-2)
        assert_eq!(u(&spanning_tree_count(&k4)), 16);
        assert_eq!(u(rel_bruteforce(&k4).unwrap().count(3)), 16);
    }

    #[test]
    fn cycles_and_chords() {
        for n in 3..10 {
            assert_eq!(u(&spanning_tree_count(&Multigraph::cycle(n).unwrap())), n as u64);
        }
        let g = Multigraph::cycle(6).unwrap().with_edges([(0, 3)]).unwrap();
        // brute-force tree enumeration: every 5-subset that connects
        assert_eq!(u(rel_bruteforce(&g).unwrap().count(5)), 15);
        assert_eq!(u(&spanning_tree_count(&g)), 15);
    }

    #[test]
    fn multigraph_and_disconnected() {
        let doubled = Multigraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(u(&spanning_tree_count(&doubled)), 2);
        assert_eq!(u(&spanning_tree_count(&Multigraph::empty(3).unwrap())), 0);
        assert_eq!(u(&spanning_tree_count(&Multigraph::empty(1).unwrap())), 1);
        // zero pivot forces a row swap
        let p = Multigraph::new(4, [(0, 2), (2, 1), (1, 3)]).unwrap();
        assert_eq!(u(&spanning_tree_count(&p)), 1);
    }

    #[test]
    fn refuses_large_inputs() {
        let k8 = Multigraph::complete(8).unwrap();
        assert!(matches!(rel_bruteforce(&k8), Err(Error::TooManyEdges { m: 28, limit: 24 })));
    }
}
