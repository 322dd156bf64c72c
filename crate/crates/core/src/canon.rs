//! Canonical labeling by partition refinement and individualization.
//!
//! The search refines an ordered vertex partition until it is equitable,
//! individualizes each vertex of the first smallest non-singleton cell in
//! turn, and keeps the labeling whose adjacency encoding is lexicographically
//! smallest. Leaves that reproduce an already-seen encoding yield
//! automorphisms, which prune sibling branches lying in the same orbit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Multigraph;

/// Byte string identifying a graph up to isomorphism. Equal codes mean
/// isomorphic graphs; the comparison is exact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

const SIMPLE_TAG: u8 = 0;
const MULTI_TAG: u8 = 1;

/// Canonical code of a simple graph.
pub fn canonical_form(g: &Multigraph) -> Result<CanonicalCode> {
    g.require_simple()?;
    Ok(Canonizer::new(g).run().0)
}

/// Canonical code that also records parallel-edge multiplicities.
pub fn canonical_multigraph_code(g: &Multigraph) -> CanonicalCode {
    Canonizer::new(g).run().0
}

/// Canonical code of a graph whose edges carry positive integer weights,
/// given as `(u, v, w)` with at most one entry per vertex pair.
pub(crate) fn canonical_weighted_code(n: usize, edges: &[(usize, usize, u32)]) -> CanonicalCode {
    let mut mult = vec![0u32; n * n];
    for &(u, v, w) in edges {
        mult[u * n + v] = w;
        mult[v * n + u] = w;
    }
    Canonizer::from_matrix(n, false, mult).run().0
}

/// A canonical relabeling: `perm[v]` is the new label of vertex `v`.
/// Applying it to any two isomorphic graphs yields equal graphs.
pub fn canonical_labeling(g: &Multigraph) -> Vec<usize> {
    Canonizer::new(g).run().1
}

struct Canonizer {
    n: usize,
    simple: bool,
    adj: Vec<Vec<(usize, u32)>>,
    mult: Vec<u32>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

type Partition = Vec<Vec<usize>>;

impl Canonizer {
    fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![0u32; n * n];
        for &(u, v) in g.edges() {
            mult[u * n + v] += 1;
            mult[v * n + u] += 1;
        }
        Canonizer::from_matrix(n, g.is_simple(), mult)
    }

    fn from_matrix(n: usize, simple: bool, mult: Vec<u32>) -> Self {
        let adj = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| mult[u * n + v] > 0)
                    .map(|v| (v, mult[u * n + v]))
                    .collect()
            })
            .collect();
        Canonizer {
            n,
            simple,
            adj,
            mult,
            best: None,
            first: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(mut self) -> (CanonicalCode, Vec<usize>) {
        let initial = vec![(0..self.n).collect::<Vec<_>>()];
        let mut prefix = Vec::new();
        self.search(initial, &mut prefix);
        let (payload, labeling) = self.best.take().expect("search visits at least one leaf");
        let mut code = Vec::with_capacity(payload.len() + 5);
        code.push(if self.simple { SIMPLE_TAG } else { MULTI_TAG });
        code.extend_from_slice(&(self.n as u32).to_be_bytes());
        code.extend(payload);
        (CanonicalCode(code), labeling)
    }

    fn refine(&self, mut cells: Partition) -> Partition {
        let mut cell_of = vec![0usize; self.n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let mut changed = false;
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(Vec<(usize, u32)>, usize)> = cell
                    .into_iter()
                    .map(|v| {
                        let mut sig: Vec<(usize, u32)> =
                            self.adj[v].iter().map(|&(w, k)| (cell_of[w], k)).collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut group = vec![keyed[0].1];
                for pair in keyed.windows(2) {
                    if pair[0].0 == pair[1].0 {
                        group.push(pair[1].1);
                    } else {
                        changed = true;
                        next.push(std::mem::take(&mut group));
                        group.push(pair[1].1);
                    }
                }
                next.push(group);
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn search(&mut self, cells: Partition, prefix: &mut Vec<usize>) {
        let cells = self.refine(cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if !explored.is_empty() && self.same_orbit(prefix, v, &explored) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..t].iter().cloned());
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&w| w != v).collect());
            child.extend(cells[t + 1..].iter().cloned());
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, cells: &Partition) {
        let mut labeling = vec![0usize; self.n];
        for (i, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = i;
        }
        let payload = self.encode(&labeling);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == payload {
                let inverse = invert(&reference.1);
                let gamma: Vec<usize> = labeling.iter().map(|&l| inverse[l]).collect();
                if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((payload.clone(), labeling.clone()));
        }
        match &self.best {
            Some((b, _)) if *b <= payload => {}
            _ => self.best = Some((payload, labeling)),
        }
    }

    fn encode(&self, labeling: &[usize]) -> Vec<u8> {
        let n = self.n;
        let inverse = invert(labeling);
        if self.simple {
            let mut bytes = Vec::with_capacity(n * n / 16 + 1);
            let mut acc = 0u8;
            let mut filled = 0;
            for i in 0..n {
                let row = inverse[i] * n;
                for j in i + 1..n {
                    acc = (acc << 1) | u8::from(self.mult[row + inverse[j]] > 0);
                    filled += 1;
                    if filled == 8 {
                        bytes.push(acc);
                        acc = 0;
                        filled = 0;
                    }
                }
            }
            if filled > 0 {
                bytes.push(acc << (8 - filled));
            }
            bytes
        } else {
            let mut bytes = Vec::with_capacity(n * n / 2);
            for i in 0..n {
                let row = inverse[i] * n;
                for j in i + 1..n {
                    let mut k = self.mult[row + inverse[j]];
                    // LEB128
                    loop {
                        let low = (k & 0x7f) as u8;
                        k >>= 7;
                        if k == 0 {
                            bytes.push(low);
                            break;
                        }
                        bytes.push(low | 0x80);
                    }
                }
            }
            bytes
        }
    }
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}
