//! Named graphs and graph families, with closed-form coefficients where
//! they are known.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::graph::Multigraph;
use crate::hamiltonian::ChordKind;

/// Lengths `(x1, x2, x3, x4)` of the four cycle paths between the endpoints
/// of two chords, in cyclic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CPathVector([usize; 4]);

impl CPathVector {
    pub fn new(x: [usize; 4]) -> Self {
        CPathVector(x)
    }

    pub fn components(&self) -> [usize; 4] {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    fn rotated(&self, by: usize) -> CPathVector {
        CPathVector(std::array::from_fn(|i| self.0[(i + by) % 4]))
    }

    /// Lexicographically smallest equivalent rotation. Crossing chords allow
    /// all four rotations; for non-crossing chords only the half turn keeps
    /// `x2` and `x4` as the cut-off paths.
    pub fn normalized(&self, kind: ChordKind) -> CPathVector {
        let step = if kind == ChordKind::B { 2 } else { 1 };
        (0..4).step_by(step).map(|r| self.rotated(r)).min().expect("non-empty")
    }
}

impl fmt::Display for CPathVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

impl Serialize for CPathVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `sum_i |x_i - k|` with `k = floor(n / 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DMeasure(pub usize);

/// `C_n` plus the chord `(0, x1)`.
pub fn cycle_with_one_chord(n: usize, x1: usize) -> Result<Multigraph> {
    check_one_chord(n, x1)?;
    Multigraph::cycle(n)?.with_edges([(0, x1)])
}

fn check_one_chord(n: usize, x1: usize) -> Result<()> {
    if n < 4 || x1 < 2 || x1 > n / 2 {
        return Err(invalid(format!("one chord needs n >= 4 and 2 <= x1 <= n/2, got n = {n}, x1 = {x1}")));
    }
    Ok(())
}

/// Spanning trees of [`cycle_with_one_chord`]: drop the chord and one cycle
/// edge, or keep it and drop one edge on each side.
pub fn tau_one_chord(n: usize, x1: usize) -> Result<u64> {
    check_one_chord(n, x1)?;
    let (n, x1) = (n as u64, x1 as u64);
    Ok(n + x1 * (n - x1))
}

/// `C_n` with two chords whose paths have lengths `v` in cyclic order.
///
/// Kind `A` draws crossing chords and needs every component positive;
/// `AHat` needs exactly one zero component (the shared endpoint); `B` draws
/// chords cutting off `x2` and `x4`, which must be at least 2, with `x1`
/// and `x3` positive.
pub fn graph_from_cpath_vector(v: CPathVector, kind: ChordKind) -> Result<Multigraph> {
    let x = v.components();
    let n = v.n();
    if n < 4 {
        return Err(invalid(format!("path lengths {v} sum to {n} < 4")));
    }
    let zeros = x.iter().filter(|&&c| c == 0).count();
    let chords = match kind {
        ChordKind::A | ChordKind::AHat => {
            let want = usize::from(kind == ChordKind::AHat);
            if zeros != want {
                return Err(invalid(format!("type {kind} needs {want} zero path lengths, got {v}")));
            }
            let p = [0, x[0], x[0] + x[1], x[0] + x[1] + x[2]];
            [(p[0], p[2]), (p[1], p[3])]
        }
        ChordKind::B => {
            if x[0] == 0 || x[2] == 0 || x[1] < 2 || x[3] < 2 {
                return Err(invalid(format!("type B needs x1, x3 >= 1 and x2, x4 >= 2, got {v}")));
            }
            let start2 = x[1] + x[2];
            [(0, x[1]), (start2, start2 + x[3])]
        }
    };
    let chords = chords.map(|(a, b)| (a % n, b % n));
    for (a, b) in chords {
        let d = a.abs_diff(b);
        if d < 2 || d > n - 2 {
            return Err(invalid(format!("{v} puts a chord on a cycle edge")));
        }
    }
    if chords[0].0.min(chords[0].1) == chords[1].0.min(chords[1].1)
        && chords[0].0.max(chords[0].1) == chords[1].0.max(chords[1].1)
    {
        return Err(invalid(format!("{v} repeats a chord")));
    }
    Multigraph::cycle(n)?.with_edges(chords)
}

fn pair_sum(x: &[u64; 4]) -> u64 {
    (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).map(|(i, j)| x[i] * x[j]).sum()
}

fn triple_sum(x: &[u64; 4]) -> u64 {
    let total: u64 = x.iter().product();
    // sum of products of three = sum over the omitted component
    if total != 0 {
        return x.iter().map(|&c| total / c).sum();
    }
    let mut s = 0;
    for skip in 0..4 {
        s += (0..4).filter(|&i| i != skip).map(|i| x[i]).product::<u64>();
    }
    s
}

fn as_u64(v: CPathVector) -> [u64; 4] {
    v.components().map(|c| c as u64)
}

/// `(N_{m-2}, tau)` of the crossing-chord graph with path lengths `v`.
pub fn coeffs_type_a(v: CPathVector) -> (u64, u64) {
    let x = as_u64(v);
    let n: u64 = x.iter().sum();
    let g = 1 + 2 * n + pair_sum(&x);
    let f = n + (x[0] + x[1]) * (x[2] + x[3]) + (x[0] + x[3]) * (x[1] + x[2]) + triple_sum(&x);
    (g, f)
}

/// `(N_{m-2}, tau)` of the non-crossing graph whose chords cut off `x2`, `x4`.
pub fn coeffs_type_b(v: CPathVector) -> (u64, u64) {
    let x = as_u64(v);
    let n: u64 = x.iter().sum();
    let g = 1 + 2 * n + pair_sum(&x) - x[0] * x[2];
    // drop one chord and one edge of its cycle, or keep both chords and
    // drop an edge in each cut-off part plus one in the middle
    let f = n + x[1] * (n - x[1]) + x[3] * (n - x[3]) + x[1] * x[3] * (x[0] + x[2]);
    (g, f)
}

/// The balanced vector maximizing both coefficients for `n = 4k + alpha`.
pub fn optimal_cpath_vector(n: usize) -> Result<CPathVector> {
    if n < 4 {
        return Err(invalid(format!("need n >= 4, got {n}")));
    }
    let k = n / 4;
    Ok(CPathVector(match n % 4 {
        0 => [k, k, k, k],
        1 => [k + 1, k, k, k],
        2 => [k + 1, k, k + 1, k],
        _ => [k + 1, k + 1, k + 1, k],
    }))
}

/// `(x1, x2 + 1, x3 - 1, x4)`.
pub fn sigma_move(v: CPathVector) -> Result<CPathVector> {
    let [a, b, c, d] = v.0;
    let c = c.checked_sub(1).ok_or_else(|| invalid(format!("sigma needs x3 >= 1 in {v}")))?;
    Ok(CPathVector([a, b + 1, c, d]))
}

/// `(x1, x2 + 1, x3, x4 - 1)`.
pub fn omega_move(v: CPathVector) -> Result<CPathVector> {
    let [a, b, c, d] = v.0;
    let d = d.checked_sub(1).ok_or_else(|| invalid(format!("omega needs x4 >= 1 in {v}")))?;
    Ok(CPathVector([a, b + 1, c, d]))
}

pub fn d_measure(v: CPathVector) -> DMeasure {
    let k = v.n() / 4;
    DMeasure(v.0.iter().map(|&x| x.abs_diff(k)).sum())
}

/// Positive vectors summing to `n`, one per rotation class.
pub fn cpath_vectors(n: usize) -> Vec<CPathVector> {
    let mut out = Vec::new();
    for a in 1..n {
        for b in 1..n - a {
            for c in 1..n - a - b {
                let v = CPathVector([a, b, c, n - a - b - c]);
                if v.normalized(ChordKind::A) == v {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Chords placed at the exact positions `i * n / (2c)`, `i = 1..=c`, each
/// joining vertex `floor(p) - 1` to the opposite vertex.
pub fn fcg_positions(n: usize, c: usize) -> Result<Vec<((usize, usize), (usize, usize))>> {
    if n % 2 == 1 {
        return Err(invalid(format!("diametrical chords need an even cycle, got n = {n}")));
    }
    if c == 0 || n < 4 || 2 * c > n {
        return Err(invalid(format!("need 1 <= c and 2c <= n for n >= 4, got n = {n}, c = {c}")));
    }
    let sep = Ratio::new(n, 2 * c);
    Ok((1..=c)
        .map(|i| {
            let p = (sep * i).to_integer();
            let q = p + n / 2;
            ((p, q), (p - 1, q - 1))
        })
        .collect())
}

/// Fair cake-cutting graph: `C_n` plus `c` evenly spread diametrical chords.
pub fn fcg(n: usize, c: usize) -> Result<Multigraph> {
    let chords: Vec<(usize, usize)> = fcg_positions(n, c)?.into_iter().map(|(_, e)| e).collect();
    let g = Multigraph::cycle(n)?.with_edges(chords)?;
    if !g.is_simple() {
        return Err(invalid(format!("fcg({n}, {c}) repeats a chord")));
    }
    Ok(g)
}

pub const NAMED_GRAPHS: &str = "wagner, petersen, k4, k33, monma-base, k<n>, c<n>";

/// Looks up a graph by catalog name (case-insensitive).
pub fn named_graph(name: &str) -> Result<Multigraph> {
    let lower = name.to_ascii_lowercase();
    let unknown = || Error::UnknownName {
        name: name.to_string(),
        catalog: NAMED_GRAPHS.to_string(),
    };
    match lower.as_str() {
        // circulant C8(1, 4): each vertex also joined to its opposite
        "wagner" => Multigraph::new(8, (0..8).map(|i| (i, (i + 1) % 8)).chain((0..4).map(|i| (i, i + 4)))),
        "petersen" => Multigraph::new(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        ),
        "k4" => Multigraph::complete(4),
        "k33" => k33(),
        "monma-base" => k23(),
        _ => {
            let (prefix, digits) = lower.split_at(1.min(lower.len()));
            let size: usize = digits.parse().map_err(|_| unknown())?;
            match prefix {
                "k" if size >= 1 => Multigraph::complete(size),
                "c" if size >= 3 => Multigraph::cycle(size),
                _ => Err(unknown()),
            }
        }
    }
}

fn k33() -> Result<Multigraph> {
    Multigraph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))))
}

fn k23() -> Result<Multigraph> {
    Multigraph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
}

// Labeled edge sequences. Each extra vertex subdivides the next label in turn.
// K_{2,3}: hubs 0 and 1, one label per hub-to-middle edge at hub 0.
const MONMA_LABELS: [(usize, usize); 3] = [(0, 2), (0, 3), (0, 4)];
// K4: two disjoint edges first, then the other two edges of the 4-cycle
// 0-1-2-3, then the diagonals.
const K4_LABELS: [(usize, usize); 6] = [(0, 1), (2, 3), (1, 2), (0, 3), (0, 2), (1, 3)];
// K33 with the spanning cycle 0-3-1-4-2-5-0 labeled A, D, B, E, C, F around it,
// then the three remaining edges G, H, I.
const K33_LABELS: [(usize, usize); 9] = [(0, 3), (1, 4), (2, 5), (1, 3), (2, 4), (0, 5), (0, 4), (1, 5), (2, 3)];

/// Subdivision of the named base for `m - n` in `{1, 2, 3}`: `K_{2,3}`,
/// `K4` and `K_{3,3}`, with the `n - n_base` extra vertices placed one per
/// labeled edge in round-robin order.
pub fn umr_subdivision(n: usize, m: usize) -> Result<Multigraph> {
    let (base, labels): (Multigraph, &[(usize, usize)]) = match m.checked_sub(n) {
        Some(1) => (k23()?, &MONMA_LABELS),
        Some(2) => (Multigraph::complete(4)?, &K4_LABELS),
        Some(3) => (k33()?, &K33_LABELS),
        _ => return Err(invalid(format!("no subdivision family for (n, m) = ({n}, {m})"))),
    };
    let n_base = base.vertex_count();
    if n < n_base {
        return Err(invalid(format!("m = n + {} needs n >= {n_base}, got {n}", m - n)));
    }
    let extra = n - n_base;
    let mut lengths: Vec<((usize, usize), usize)> = base.edges().iter().map(|&e| (e, 0)).collect();
    for i in 0..extra {
        let label = labels[i % labels.len()];
        let slot = lengths.iter_mut().find(|(e, _)| *e == label).expect("label is a base edge");
        slot.1 += 1;
    }
    subdivide(n_base, &lengths)
}

/// Replaces each edge `(u, v)` by a path with `k` new internal vertices.
fn subdivide(n_base: usize, edges: &[((usize, usize), usize)]) -> Result<Multigraph> {
    let mut next = n_base;
    let mut out = Vec::new();
    for &((u, v), k) in edges {
        let mut prev = u;
        for _ in 0..k {
            out.push((prev, next));
            prev = next;
            next += 1;
        }
        out.push((prev, v));
    }
    Multigraph::new(next, out)
}

pub const COMPLEMENT_FAMILIES: &str = "g1, g2, g3, g4, matching-complement";

/// Complements of small forests padded with independent edges.
///
/// `g1` = co-(2P3 + K2s), `g2` = co-(P4 + K2 + K2s) for even `n >= 6`;
/// `g3` = co-(C3 + P4 + K2s), `g4` = co-(C5 + K2 + K2s) for odd `n >= 7`;
/// `matching-complement` = `K_n` minus a perfect matching (even `n`).
pub fn complement_family(name: &str, n: usize) -> Result<Multigraph> {
    let lower = name.to_ascii_lowercase();
    let (removed, used): (Vec<(usize, usize)>, usize) = match lower.as_str() {
        "g1" | "g2" => {
            if n < 6 || n % 2 == 1 {
                return Err(invalid(format!("{name} needs even n >= 6, got {n}")));
            }
            if lower == "g1" {
                (vec![(0, 1), (1, 2), (3, 4), (4, 5)], 6)
            } else {
                (vec![(0, 1), (1, 2), (2, 3), (4, 5)], 6)
            }
        }
        "g3" | "g4" => {
            if n < 7 || n % 2 == 0 {
                return Err(invalid(format!("{name} needs odd n >= 7, got {n}")));
            }
            if lower == "g3" {
                (vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6)], 7)
            } else {
                (vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 6)], 7)
            }
        }
        "matching-complement" => {
            if n < 2 || n % 2 == 1 {
                return Err(invalid(format!("a perfect matching needs even n >= 2, got {n}")));
            }
            return matching_complement(n, n / 2);
        }
        _ => {
            return Err(Error::UnknownName {
                name: name.to_string(),
                catalog: COMPLEMENT_FAMILIES.to_string(),
            })
        }
    };
    let pad = (used..n).step_by(2).map(|v| (v, v + 1));
    Ok(Multigraph::new(n, removed.into_iter().chain(pad))?.complement())
}

/// `K_n` minus `k` independent edges `(0,1), (2,3), ...`.
pub fn matching_complement(n: usize, k: usize) -> Result<Multigraph> {
    if 2 * k > n {
        return Err(invalid(format!("{k} independent edges do not fit in {n} vertices")));
    }
    Ok(Multigraph::new(n, (0..k).map(|i| (2 * i, 2 * i + 1)))?.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{classify_two_chord, degree_obstruction, find_hamiltonian_cycle, HamCycle};
    use crate::relpoly::{rel_bruteforce, rel_factoring, spanning_tree_count};

    fn tau(g: &Multigraph) -> u64 {
        (&spanning_tree_count(g)).try_into().unwrap()
    }

    fn top_two(g: &Multigraph) -> (u64, u64) {
        let r = rel_factoring(g);
        let m = g.edge_count();
        let n = g.vertex_count();
        ((r.count(m - 2)).try_into().unwrap(), (r.count(n - 1)).try_into().unwrap())
    }

    #[test]
    fn one_chord() {
        assert_eq!(tau_one_chord(6, 3).unwrap(), 15);
        assert_eq!(tau_one_chord(6, 2).unwrap(), 14);
        assert_eq!(tau(&cycle_with_one_chord(6, 3).unwrap()), 15);
        assert_eq!(cycle_with_one_chord(4, 2).unwrap().edge_count(), 5);
        assert!(cycle_with_one_chord(6, 4).is_err());
        assert!(cycle_with_one_chord(6, 1).is_err());
    }

    #[test]
    fn cpath_graphs() {
        let k4 = graph_from_cpath_vector(CPathVector([1, 1, 1, 1]), ChordKind::A).unwrap();
        assert_eq!(k4, Multigraph::complete(4).unwrap());
        let g = graph_from_cpath_vector(CPathVector([3, 3, 3, 2]), ChordKind::A).unwrap();
        assert_eq!(top_two(&g), (68, 152));
        assert_eq!(coeffs_type_a(CPathVector([3, 3, 3, 2])), (68, 152));
        assert_eq!(coeffs_type_a(CPathVector([1, 1, 1, 1])), (15, 16));
        assert!(graph_from_cpath_vector(CPathVector([0, 3, 3, 2]), ChordKind::A).is_err());
        assert!(graph_from_cpath_vector(CPathVector([1, 1, 3, 3]), ChordKind::B).is_err());
    }

    #[test]
    fn type_b_closed_form_matches_brute_force() {
        for v in [[1, 2, 1, 2], [2, 2, 2, 2], [3, 3, 3, 2], [1, 4, 2, 3], [2, 3, 1, 5]] {
            let v = CPathVector(v);
            let g = graph_from_cpath_vector(v, ChordKind::B).unwrap();
            let r = rel_bruteforce(&g).unwrap();
            let (m, n) = (g.edge_count(), g.vertex_count());
            let got: (u64, u64) = (r.count(m - 2).try_into().unwrap(), r.count(n - 1).try_into().unwrap());
            assert_eq!(coeffs_type_b(v), got, "{v}");
        }
        assert_eq!(coeffs_type_b(CPathVector([3, 3, 3, 2])), (59, 89));
    }

    #[test]
    fn classify_round_trip() {
        for v in cpath_vectors(9) {
            let g = graph_from_cpath_vector(v, ChordKind::A).unwrap();
            let class = classify_two_chord(&g, &HamCycle::new(&g, (0..9).collect()).unwrap()).unwrap();
            assert_eq!((class.kind, class.vector), (ChordKind::A, v.normalized(ChordKind::A)));
        }
        let v = CPathVector([1, 3, 2, 4]);
        let g = graph_from_cpath_vector(v, ChordKind::B).unwrap();
        let class = classify_two_chord(&g, &HamCycle::new(&g, (0..10).collect()).unwrap()).unwrap();
        assert_eq!((class.kind, class.vector), (ChordKind::B, v.normalized(ChordKind::B)));
        let v = CPathVector([0, 3, 2, 4]);
        let g = graph_from_cpath_vector(v, ChordKind::AHat).unwrap();
        let class = classify_two_chord(&g, &HamCycle::new(&g, (0..9).collect()).unwrap()).unwrap();
        assert_eq!((class.kind, class.vector), (ChordKind::AHat, v));
        assert_eq!(top_two(&g), coeffs_type_a(v));
    }

    #[test]
    fn optimal_vectors_and_moves() {
        assert_eq!(optimal_cpath_vector(8).unwrap(), CPathVector([2, 2, 2, 2]));
        assert_eq!(optimal_cpath_vector(11).unwrap(), CPathVector([3, 3, 3, 2]));
        assert_eq!(optimal_cpath_vector(10).unwrap(), CPathVector([3, 2, 3, 2]));
        assert_eq!(sigma_move(CPathVector([3, 2, 2, 2])).unwrap(), CPathVector([3, 3, 1, 2]));
        assert_eq!(omega_move(CPathVector([2, 3, 2, 2])).unwrap(), CPathVector([2, 4, 2, 1]));
        assert!(sigma_move(CPathVector([3, 2, 0, 2])).is_err());
        assert_eq!(d_measure(CPathVector([3, 3, 3, 2])), DMeasure(3));
        assert_eq!(d_measure(CPathVector([2, 1, 1, 1])).0 % 2, 1);
    }

    #[test]
    fn fair_cake() {
        let g = fcg(16, 3).unwrap();
        for chord in [(1, 9), (4, 12), (7, 15)] {
            assert!(g.has_edge(chord.0, chord.1));
        }
        assert_eq!(g.edge_count(), 19);
        assert_eq!(fcg(10, 1).unwrap(), cycle_with_one_chord(10, 5).unwrap().relabel(&[9, 0, 1, 2, 3, 4, 5, 6, 7, 8]).unwrap());
        let g = fcg(8, 2).unwrap();
        let class = classify_two_chord(&g, &HamCycle::new(&g, (0..8).collect()).unwrap()).unwrap();
        assert_eq!((class.kind, class.vector), (ChordKind::A, CPathVector([2, 2, 2, 2])));
        assert!(fcg(9, 2).is_err());
        assert!(fcg(8, 5).is_err());
    }

    #[test]
    fn named() {
        let w = named_graph("Wagner").unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (8, 12));
        assert!(w.degrees().iter().all(|&d| d == 3));
        let p = named_graph("petersen").unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(find_hamiltonian_cycle(&p).is_none());
        assert!(find_hamiltonian_cycle(&w).is_some());
        let d: Vec<u64> = rel_factoring(&named_graph("k33").unwrap())
            .descending(6)
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![1, 9, 36, 78, 81]);
        assert_eq!(named_graph("k5").unwrap().edge_count(), 10);
        assert_eq!(named_graph("C7").unwrap().edge_count(), 7);
        assert!(matches!(named_graph("heawood"), Err(Error::UnknownName { .. })));
        assert!(named_graph("c2").is_err());
    }

    #[test]
    fn subdivisions() {
        let g = umr_subdivision(11, 13).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (11, 13));
        assert_eq!(top_two(&g), (70, 160));
        assert!(find_hamiltonian_cycle(&umr_subdivision(8, 10).unwrap()).is_some());
        let g9 = umr_subdivision(9, 11).unwrap();
        assert!(degree_obstruction(&g9));
        assert!(find_hamiltonian_cycle(&g9).is_none());
        for n in 5..=12 {
            assert!(find_hamiltonian_cycle(&umr_subdivision(n, n + 1).unwrap()).is_none());
        }
        assert!(umr_subdivision(5, 9).is_err());
        assert!(umr_subdivision(5, 8).is_err());
    }

    #[test]
    fn complements() {
        let g1 = complement_family("g1", 6).unwrap();
        assert_eq!(g1.edge_count(), 11);
        let g2 = complement_family("G2", 6).unwrap();
        assert_eq!(g2.edge_count(), 11);
        assert_eq!(complement_family("g1", 8).unwrap().edge_count(), 28 - 5);
        assert_eq!(complement_family("g3", 7).unwrap().edge_count(), 21 - 6);
        assert_eq!(complement_family("g4", 9).unwrap().edge_count(), 36 - 7);
        assert!(complement_family("g1", 7).is_err());
        assert!(complement_family("g4", 8).is_err());
        assert_eq!(matching_complement(6, 2).unwrap().edge_count(), 13);
        assert_eq!(complement_family("matching-complement", 6).unwrap().edge_count(), 12);
    }
}
