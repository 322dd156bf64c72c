//! Hamiltonian cycles, sufficient and obstructing degree conditions, and
//! the shape of two-chord hamiltonian graphs.

use std::fmt;

use serde::Serialize;

use crate::constructions::CPathVector;
use crate::error::{invalid, Error, Result};
use crate::graph::Multigraph;

/// A spanning cycle `v_0, ..., v_{n-1}`, closed implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamCycle(Vec<usize>);

impl HamCycle {
    /// Checks that `order` is a hamiltonian cycle of `g`.
    pub fn new(g: &Multigraph, order: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        if order.len() != n || n < 3 {
            return Err(Error::InvalidCycle(format!("expected {n} vertices, got {}", order.len())));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidCycle(format!("vertex {v} repeated or out of range")));
            }
        }
        for i in 0..n {
            let (u, v) = (order[i], order[(i + 1) % n]);
            if !g.has_edge(u, v) {
                return Err(Error::InvalidCycle(format!("{u}-{v} is not an edge")));
            }
        }
        Ok(HamCycle(order))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position of each vertex along the cycle.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

impl fmt::Display for HamCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}-")?;
        }
        write!(f, "{}", self.0.first().copied().unwrap_or(0))
    }
}

/// Backtracking search. Parallel edges are ignored. Returns `None` for
/// graphs on fewer than three vertices.
pub fn find_hamiltonian_cycle(g: &Multigraph) -> Option<HamCycle> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let adj = g.simple_adjacency();
    if adj.iter().any(|a| a.len() < 2) || !g.is_connected() {
        return None;
    }
    let mut search = Search {
        adj: &adj,
        on_path: vec![false; n],
        path: Vec::with_capacity(n),
    };
    // start at a vertex of minimum degree: fewest first-step branches
    let start = (0..n).min_by_key(|&v| (adj[v].len(), v)).expect("n >= 3");
    search.on_path[start] = true;
    search.path.push(start);
    if search.extend() {
        let order = search.path;
        debug_assert!(HamCycle::new(g, order.clone()).is_ok());
        Some(HamCycle(order))
    } else {
        None
    }
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    on_path: Vec<bool>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let n = self.adj.len();
        let start = self.path[0];
        let end = *self.path.last().expect("non-empty path");
        if self.path.len() == n {
            return self.adj[end].contains(&start);
        }
        if !self.feasible(start, end) {
            return false;
        }
        // a free vertex with only two usable neighbors must sit between them,
        // so if one of them is `end` it has to come next
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for &w in &self.adj[end] {
            if self.on_path[w] {
                continue;
            }
            let free = self.usable_degree(w, start, end);
            if free <= 2 && self.path.len() + 1 < n {
                candidates.clear();
                candidates.push((free, w));
                break;
            }
            candidates.push((free, w));
        }
        candidates.sort_unstable();
        for (_, w) in candidates {
            self.on_path[w] = true;
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.on_path[w] = false;
        }
        false
    }

    /// Neighbors of a free vertex `w` that can still be its cycle neighbors.
    fn usable_degree(&self, w: usize, start: usize, end: usize) -> usize {
        self.adj[w]
            .iter()
            .filter(|&&x| !self.on_path[x] || x == start || x == end)
            .count()
    }

    fn feasible(&self, start: usize, end: usize) -> bool {
        let n = self.adj.len();
        let remaining = n - self.path.len();
        for w in 0..n {
            if self.on_path[w] {
                continue;
            }
            let usable = self.usable_degree(w, start, end);
            // the last free vertex may use start and end as its two neighbors
            if usable < 2 || (remaining == 1 && !(self.adj[w].contains(&start) && self.adj[w].contains(&end))) {
                return false;
            }
        }
        // free vertices plus the path end must stay connected
        let mut seen = vec![false; n];
        let mut stack = vec![end];
        seen[end] = true;
        let mut reached = 0;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if !seen[y] && !self.on_path[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached == remaining
    }
}

/// Ore's condition: `d(u) + d(v) >= n` for every non-adjacent pair.
/// Sufficient for a hamiltonian cycle when `n >= 3`.
pub fn ore_condition(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    if n < 3 {
        return false;
    }
    let adj = g.simple_adjacency();
    (0..n).all(|u| {
        (u + 1..n).all(|v| adj[u].binary_search(&v).is_ok() || adj[u].len() + adj[v].len() >= n)
    })
}

/// A vertex of degree at least 3 with three neighbors of degree 2. Every
/// hamiltonian cycle would have to use three edges at that vertex.
pub fn degree_obstruction(g: &Multigraph) -> bool {
    let adj = g.simple_adjacency();
    adj.iter()
        .any(|nb| nb.len() >= 3 && nb.iter().filter(|&&w| adj[w].len() == 2).count() >= 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ChordKind {
    /// The two chords cross (their endpoints alternate around the cycle).
    A,
    /// The chords share an endpoint: type A with one zero-length path.
    AHat,
    /// The chords do not cross; each cuts off the paths `x2` and `x4`.
    B,
}

impl fmt::Display for ChordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChordKind::A => "A",
            ChordKind::AHat => "A-hat",
            ChordKind::B => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ChordClass {
    pub kind: ChordKind,
    pub vector: CPathVector,
}

/// Splits `g` (a cycle plus two chords) along `cycle` into its four paths.
pub fn classify_two_chord(g: &Multigraph, cycle: &HamCycle) -> Result<ChordClass> {
    g.require_simple()?;
    let n = g.vertex_count();
    if g.edge_count() != n + 2 {
        return Err(invalid(format!("expected m = n + 2 = {}, got {}", n + 2, g.edge_count())));
    }
    let cycle = HamCycle::new(g, cycle.0.clone())?;
    let pos = cycle.positions();
    let chords: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
        .collect();
    let [(a, b), (c, d)] = chords[..] else {
        unreachable!("a simple graph with n + 2 edges has two chords off a hamiltonian cycle");
    };
    let mut ends = vec![a, b, c, d];
    ends.sort_unstable();
    let gaps = |e: &[usize]| [e[1] - e[0], e[2] - e[1], e[3] - e[2], n - e[3] + e[0]];
    if a == c || a == d || b == c || b == d {
        // rotate so the shared endpoint comes twice first
        let shared = if a == c || a == d { a } else { b };
        let mut e: Vec<usize> = ends.iter().map(|&x| (x + n - shared) % n).collect();
        e.sort_unstable();
        let v = CPathVector::new(gaps(&e));
        return Ok(ChordClass {
            kind: ChordKind::AHat,
            vector: v.normalized(ChordKind::AHat),
        });
    }
    let crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
    let g4 = gaps(&ends);
    if crossing {
        return Ok(ChordClass {
            kind: ChordKind::A,
            vector: CPathVector::new(g4).normalized(ChordKind::A),
        });
    }
    // chords on consecutive endpoints cut off g0 and g2, otherwise g1 and g3
    let consecutive = (a, b) == (ends[0], ends[1]) || (c, d) == (ends[0], ends[1]);
    let v = if consecutive {
        [g4[3], g4[0], g4[1], g4[2]]
    } else {
        g4
    };
    Ok(ChordClass {
        kind: ChordKind::B,
        vector: CPathVector::new(v).normalized(ChordKind::B),
    })
}
