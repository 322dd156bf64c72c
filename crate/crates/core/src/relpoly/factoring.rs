//! Factoring (deletion/contraction) over generalized edges.
//!
//! Counts are kept as counting polynomials in `t`: coefficient `i` is the
//! number of connected spanning edge subsets of size `i`. Every edge of the
//! working graph stands for a subgraph of the input hanging between its two
//! endpoints `u` and `v`, summarized by two polynomials over its own edges:
//!
//! * `C(t)`: subsets joining `u` to `v` with every inner vertex attached;
//! * `S(t)`: subsets that leave `u` and `v` apart but attach every inner
//!   vertex to one of them.
//!
//! A plain edge has `C = t`, `S = 1`. Parallel and series pairs merge into
//! one generalized edge:
//!
//! ```text
//! parallel: C = C1 C2 + C1 S2 + S1 C2    S = S1 S2
//! series:   C = C1 C2                    S = C1 S2 + S1 C2
//! ```
//!
//! A pendant edge contributes its `C`. What remains (minimum degree 3) is
//! split into blocks, whose counts multiply, and each block is factored on
//! a pivot edge `e`:
//!
//! ```text
//! N(G) = C_e N(G / e) + S_e N(G - e)
//! ```
//!
//! The reductions never drop edges of the input, so the result is in the
//! basis of the original edge count. Bundles, multitrees, cycles and cycles
//! glued at a vertex all reduce to a single vertex without any pivot.

use std::collections::{HashMap, VecDeque};
use std::ops::{AddAssign, Mul};
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::RelPoly;
use crate::canon::{canonical_weighted_code, CanonicalCode};
use crate::graph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotPolicy {
    /// An edge on a shortest cycle of the block.
    #[default]
    ShortestCycle,
    /// The first edge in edge order.
    FirstEdge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactoringConfig {
    pub pivot: PivotPolicy,
    /// Blocks standing for at most this many input edges are not memoized.
    pub memo_min_edges: usize,
    /// Maximum number of memo entries; 0 disables memoization.
    pub memo_limit: usize,
}

impl Default for FactoringConfig {
    fn default() -> Self {
        FactoringConfig {
            pivot: PivotPolicy::ShortestCycle,
            memo_min_edges: 12,
            memo_limit: 1 << 18,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FactoringStats {
    pub pivots: u64,
    pub memo_hits: u64,
}

/// Factoring engine. The memo table is shared by every call on the same
/// engine; entries are exact, so concurrent duplicate inserts are harmless.
#[derive(Debug, Default)]
pub struct Factoring {
    config: FactoringConfig,
    small: Tables<u128>,
    big: Tables<BigUint>,
    stats: Mutex<FactoringStats>,
}

#[derive(Debug)]
struct Tables<T> {
    memo: Mutex<HashMap<CanonicalCode, Vec<T>>>,
    // generalized edges are colored by their (C, S) pair for memo keys
    colors: Mutex<HashMap<(Vec<T>, Vec<T>), u32>>,
}

impl<T> Default for Tables<T> {
    fn default() -> Self {
        Tables {
            memo: Mutex::new(HashMap::new()),
            colors: Mutex::new(HashMap::new()),
        }
    }
}

/// Reliability polynomial by factoring with the default configuration.
pub fn rel_factoring(g: &Multigraph) -> RelPoly {
    Factoring::default().compute(g)
}

impl Factoring {
    pub fn new(config: FactoringConfig) -> Self {
        Factoring {
            config,
            ..Default::default()
        }
    }

    pub fn config(&self) -> FactoringConfig {
        self.config
    }

    pub fn stats(&self) -> FactoringStats {
        *self.stats.lock().expect("stats lock")
    }

    pub fn memo_len(&self) -> usize {
        self.small.memo.lock().expect("memo lock").len() + self.big.memo.lock().expect("memo lock").len()
    }

    pub fn compute(&self, g: &Multigraph) -> RelPoly {
        let m = g.edge_count();
        let mut stats = FactoringStats::default();
        // every coefficient is at most 2^m
        let counts: Vec<BigUint> = if m < 127 {
            let run = Run { engine: self, tables: &self.small, stats: &mut stats };
            run.start(g).into_iter().map(BigUint::from).collect()
        } else {
            let run = Run { engine: self, tables: &self.big, stats: &mut stats };
            run.start(g)
        };
        let mut total = self.stats.lock().expect("stats lock");
        total.pivots += stats.pivots;
        total.memo_hits += stats.memo_hits;
        RelPoly::from_counting_poly(m, counts)
    }
}

trait Coeff: Clone + Eq + std::hash::Hash + Zero + One + for<'a> AddAssign<&'a Self>
where
    for<'a> &'a Self: Mul<&'a Self, Output = Self>,
{
}

impl Coeff for u128 {}
impl Coeff for BigUint {}

type Poly<T> = Vec<T>;

fn trim<T: Coeff>(mut p: Poly<T>) -> Poly<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn add<T: Coeff>(a: &[T], b: &[T]) -> Poly<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn mul<T: Coeff>(a: &[T], b: &[T]) -> Poly<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return vec![T::zero()];
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    trim(out)
}

#[derive(Debug, Clone)]
struct Edge<T> {
    u: usize,
    v: usize,
    /// input edges represented
    size: usize,
    c: Poly<T>,
    s: Poly<T>,
}

#[derive(Debug, Clone)]
struct Kernel<T> {
    n: usize,
    edges: Vec<Edge<T>>,
}

struct Run<'a, T> {
    engine: &'a Factoring,
    tables: &'a Tables<T>,
    stats: &'a mut FactoringStats,
}

impl<T: Coeff> Run<'_, T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    fn start(mut self, g: &Multigraph) -> Poly<T> {
        let edges = g
            .edges()
            .iter()
            .map(|&(u, v)| Edge {
                u,
                v,
                size: 1,
                c: vec![T::zero(), T::one()],
                s: vec![T::one()],
            })
            .collect();
        self.count(Kernel { n: g.vertex_count(), edges })
    }

    fn count(&mut self, mut k: Kernel<T>) -> Poly<T> {
        let Some(factor) = k.reduce() else {
            return vec![T::zero()];
        };
        if k.n == 1 {
            return factor;
        }
        let Some(blocks) = k.blocks() else {
            return vec![T::zero()];
        };
        let mut product = factor;
        for block in blocks {
            let part = self.count_block(block);
            if part.iter().all(Zero::is_zero) {
                return vec![T::zero()];
            }
            product = mul(&product, &part);
        }
        product
    }

    fn count_block(&mut self, mut b: Kernel<T>) -> Poly<T> {
        let factor = b.reduce().expect("blocks are connected");
        if b.n == 1 {
            return factor;
        }
        let config = self.engine.config;
        let size: usize = b.edges.iter().map(|e| e.size).sum();
        let key = (config.memo_limit > 0 && size > config.memo_min_edges).then(|| self.memo_key(&b));
        if let Some(key) = &key {
            if let Some(hit) = self.tables.memo.lock().expect("memo lock").get(key) {
                self.stats.memo_hits += 1;
                return mul(&factor, hit);
            }
        }
        self.stats.pivots += 1;
        let pivot = match config.pivot {
            PivotPolicy::ShortestCycle => b.shortest_cycle_edge(),
            PivotPolicy::FirstEdge => 0,
        };
        let (c, s) = (b.edges[pivot].c.clone(), b.edges[pivot].s.clone());
        let contracted = self.count(b.contract(pivot));
        let deleted = self.count(b.delete(pivot));
        let result = add(&mul(&c, &contracted), &mul(&s, &deleted));
        if let Some(key) = key {
            let mut memo = self.tables.memo.lock().expect("memo lock");
            if memo.len() < config.memo_limit {
                memo.entry(key).or_insert_with(|| result.clone());
            }
        }
        mul(&factor, &result)
    }

    fn memo_key(&self, b: &Kernel<T>) -> CanonicalCode {
        let mut colors = self.tables.colors.lock().expect("color lock");
        let weighted: Vec<(usize, usize, u32)> = b
            .edges
            .iter()
            .map(|e| {
                let next = colors.len() as u32 + 1;
                let color = *colors.entry((e.c.clone(), e.s.clone())).or_insert(next);
                (e.u, e.v, color)
            })
            .collect();
        canonical_weighted_code(b.n, &weighted)
    }
}

impl<T: Coeff> Kernel<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    fn merge_parallel(&mut self) {
        for e in &mut self.edges {
            if e.u > e.v {
                std::mem::swap(&mut e.u, &mut e.v);
            }
        }
        self.edges.sort_by_key(|e| (e.u, e.v));
        let mut merged: Vec<Edge<T>> = Vec::with_capacity(self.edges.len());
        for e in self.edges.drain(..) {
            match merged.last_mut() {
                Some(last) if (last.u, last.v) == (e.u, e.v) => {
                    let c = add(&add(&mul(&last.c, &e.c), &mul(&last.c, &e.s)), &mul(&last.s, &e.c));
                    last.s = mul(&last.s, &e.s);
                    last.c = c;
                    last.size += e.size;
                }
                _ => merged.push(e),
            }
        }
        self.edges = merged;
    }

    fn remove_vertex(&mut self, w: usize) {
        for e in &mut self.edges {
            debug_assert!(e.u != w && e.v != w);
            if e.u > w {
                e.u -= 1;
            }
            if e.v > w {
                e.v -= 1;
            }
        }
        self.n -= 1;
    }

    /// Applies parallel, series and pendant reductions until none applies.
    /// Returns the product of the pendant factors, or `None` if some vertex
    /// is isolated.
    fn reduce(&mut self) -> Option<Poly<T>> {
        let mut factor = vec![T::one()];
        loop {
            self.merge_parallel();
            if self.n == 1 {
                return Some(factor);
            }
            let deg = self.degrees();
            if deg.contains(&0) {
                return None;
            }
            if let Some(w) = deg.iter().position(|&d| d == 1) {
                let i = self.edges.iter().position(|e| e.u == w || e.v == w).expect("degree 1");
                let e = self.edges.swap_remove(i);
                factor = mul(&factor, &e.c);
                self.remove_vertex(w);
                continue;
            }
            if let Some(w) = deg.iter().position(|&d| d == 2) {
                let mut ends = self.edges.iter().enumerate().filter(|(_, e)| e.u == w || e.v == w).map(|(i, _)| i);
                let (i, j) = (ends.next().expect("degree 2"), ends.next().expect("degree 2"));
                let b = self.edges.swap_remove(j.max(i));
                let a = self.edges.swap_remove(j.min(i));
                let x = if a.u == w { a.v } else { a.u };
                let y = if b.u == w { b.v } else { b.u };
                self.edges.push(Edge {
                    u: x,
                    v: y,
                    size: a.size + b.size,
                    c: mul(&a.c, &b.c),
                    s: add(&mul(&a.c, &b.s), &mul(&a.s, &b.c)),
                });
                self.remove_vertex(w);
                continue;
            }
            return Some(factor);
        }
    }

    fn delete(&self, i: usize) -> Kernel<T> {
        let mut edges = self.edges.clone();
        edges.remove(i);
        Kernel { n: self.n, edges }
    }

    fn contract(&self, i: usize) -> Kernel<T> {
        let (u, v) = (self.edges[i].u, self.edges[i].v);
        let relabel = |w: usize| match w.cmp(&v) {
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Greater => w - 1,
            std::cmp::Ordering::Less => w,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| Edge {
                u: relabel(e.u),
                v: relabel(e.v),
                ..e.clone()
            })
            .collect();
        Kernel { n: self.n - 1, edges }
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        adj
    }

    /// Splits a connected kernel into blocks, each relabeled onto
    /// `0..size`. Returns `None` when the kernel is disconnected.
    fn blocks(&self) -> Option<Vec<Kernel<T>>> {
        let adj = self.adjacency();
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 1;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        // iterative DFS frames: (vertex, edge used to enter, next neighbor)
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = 0;
        while let Some(&mut (x, via, ref mut next)) = stack.last_mut() {
            if *next < adj[x].len() {
                let (y, e) = adj[x][*next];
                *next += 1;
                if e == via {
                    continue;
                }
                if disc[y] == usize::MAX {
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    edge_stack.push(e);
                    stack.push((y, e, 0));
                } else if disc[y] < disc[x] {
                    low[x] = low[x].min(disc[y]);
                    edge_stack.push(e);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[x]);
                    if low[x] >= disc[parent] {
                        let mut group = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            group.push(e);
                            if e == via {
                                break;
                            }
                        }
                        groups.push(group);
                    }
                }
            }
        }
        if disc.contains(&usize::MAX) {
            return None;
        }
        if groups.len() == 1 {
            return Some(vec![self.clone()]);
        }
        let mut label = vec![usize::MAX; n];
        let blocks = groups
            .into_iter()
            .map(|mut group| {
                group.sort_unstable();
                let mut verts: Vec<usize> = group.iter().flat_map(|&e| [self.edges[e].u, self.edges[e].v]).collect();
                verts.sort_unstable();
                verts.dedup();
                for (i, &w) in verts.iter().enumerate() {
                    label[w] = i;
                }
                let edges = group
                    .iter()
                    .map(|&e| {
                        let edge = &self.edges[e];
                        Edge {
                            u: label[edge.u],
                            v: label[edge.v],
                            ..edge.clone()
                        }
                    })
                    .collect();
                Kernel { n: verts.len(), edges }
            })
            .collect();
        Some(blocks)
    }

    /// Index of the first edge lying on a shortest cycle. Every edge of a
    /// block with at least two edges lies on some cycle.
    fn shortest_cycle_edge(&self) -> usize {
        let adj = self.adjacency();
        let mut best = (usize::MAX, 0);
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for (i, e) in self.edges.iter().enumerate() {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[e.u] = 0;
            queue.clear();
            queue.push_back(e.u);
            'bfs: while let Some(x) = queue.pop_front() {
                if dist[x] + 2 >= best.0 {
                    break;
                }
                for &(y, f) in &adj[x] {
                    if f == i || dist[y] != usize::MAX {
                        continue;
                    }
                    dist[y] = dist[x] + 1;
                    if y == e.v {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
            if dist[e.v] != usize::MAX && dist[e.v] + 1 < best.0 {
                best = (dist[e.v] + 1, i);
                if best.0 == 3 {
                    break;
                }
            }
        }
        best.1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relpoly::rel_bruteforce;

    fn counts(r: &RelPoly) -> Vec<u64> {
        r.counts().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn cycles() {
        for n in 3..12 {
            let r = rel_factoring(&Multigraph::cycle(n).unwrap());
            let mut expected = vec![0; n + 1];
            expected[n] = 1;
            expected[n - 1] = n as u64;
            assert_eq!(counts(&r), expected);
        }
    }

    #[test]
    fn trees_and_trivial_graphs() {
        let path = Multigraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(counts(&rel_factoring(&path)), vec![0, 0, 0, 0, 1]);
        let star = Multigraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(counts(&rel_factoring(&star)), vec![0, 0, 0, 1]);
        assert_eq!(counts(&rel_factoring(&Multigraph::empty(1).unwrap())), vec![1]);
        assert_eq!(counts(&rel_factoring(&Multigraph::empty(3).unwrap())), vec![0]);
        let split = Multigraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(counts(&rel_factoring(&split)), vec![0, 0, 0]);
    }

    #[test]
    fn k4_and_k33() {
        assert_eq!(counts(&rel_factoring(&Multigraph::complete(4).unwrap())), vec![0, 0, 0, 16, 15, 6, 1]);
        let k33 = Multigraph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let d: Vec<u64> = rel_factoring(&k33).descending(6).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 9, 36, 78, 81]);
    }

    #[test]
    fn reductions_match_brute_force() {
        let graphs = [
            // multitree: bundles of 2 and 3 on a path
            Multigraph::new(3, [(0, 1), (0, 1), (1, 2), (1, 2), (1, 2)]).unwrap(),
            // cycle of bundles
            Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (2, 3), (3, 0)]).unwrap(),
            // two triangles glued at vertex 0
            Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap(),
            // theta with a pendant bundle
            Multigraph::new(6, [(0, 1), (1, 2), (0, 3), (3, 2), (0, 4), (4, 2), (2, 5), (2, 5)]).unwrap(),
            // K4 with a doubled edge and a subdivided edge
            Multigraph::new(5, [(0, 1), (0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (4, 3), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(rel_factoring(g), rel_bruteforce(g).unwrap(), "{g}");
        }
    }

    #[test]
    fn pivot_policies_agree() {
        let g = Multigraph::complete(5).unwrap().with_edges([(0, 1), (2, 3)]).unwrap();
        let a = Factoring::new(FactoringConfig {
            pivot: PivotPolicy::ShortestCycle,
            ..Default::default()
        })
        .compute(&g);
        let b = Factoring::new(FactoringConfig {
            pivot: PivotPolicy::FirstEdge,
            memo_limit: 0,
            ..Default::default()
        })
        .compute(&g);
        assert_eq!(a, b);
        assert_eq!(a, rel_bruteforce(&g).unwrap());
    }

    #[test]
    fn memo_is_reused() {
        let engine = Factoring::new(FactoringConfig {
            memo_min_edges: 0,
            ..Default::default()
        });
        let g = Multigraph::complete(6).unwrap();
        let first = engine.compute(&g);
        let before = engine.stats();
        assert!(engine.memo_len() > 0);
        let second = engine.compute(&g.relabel(&[5, 4, 3, 2, 1, 0]).unwrap());
        assert_eq!(first, second);
        assert!(engine.stats().memo_hits > before.memo_hits);
        assert_eq!(before.pivots, engine.stats().pivots);
    }

    #[test]
    fn large_edge_counts_use_big_integers() {
        // 130 parallel edges: N_i = C(130, i) for i >= 1
        let g = Multigraph::new(2, std::iter::repeat((0, 1)).take(130)).unwrap();
        let r = rel_factoring(&g);
        assert!(r.count(0).is_zero());
        let mut binom = BigUint::one();
        for j in 0..65u32 {
            binom = binom * BigUint::from(130 - j) / BigUint::from(j + 1);
        }
        assert_eq!(r.count(65), &binom);
    }
}
