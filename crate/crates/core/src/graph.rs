//! Undirected multigraph values and the deletion/contraction algebra.
//!
//! A [`Multigraph`] is immutable: every operation returns a new value. Edges
//! are kept in a canonical order (lexicographic by endpoint pair) so that the
//! edge multiset order given at construction never affects equality, and an
//! [`EdgeRef`] always names the same edge of the same value.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Index into the sorted edge list of a [`Multigraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Builds a multigraph on vertices `0..n`. Parallel edges are kept; loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut out = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop { u });
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Multigraph { n, edges: out })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in `EdgeRef` order, each as `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeRef) -> Result<(usize, usize)> {
        self.edges.get(e.0).copied().ok_or(Error::InvalidEdgeRef {
            index: e.0,
            m: self.edges.len(),
        })
    }

    /// Finds the first copy of edge `{u, v}`.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeRef> {
        let key = (u.min(v), u.max(v));
        let idx = self.edges.partition_point(|&e| e < key);
        (self.edges.get(idx) == Some(&key)).then_some(EdgeRef(idx))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.find_edge(u, v).is_some()
    }

    /// Number of parallel copies of `{u, v}`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        let lo = self.edges.partition_point(|&e| e < key);
        let hi = self.edges.partition_point(|&e| e <= key);
        hi - lo
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Adjacency lists with one entry per edge copy.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Adjacency lists of the simple support (parallel copies collapsed).
    pub fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = self.adjacency();
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn require_simple(&self) -> Result<()> {
        match self.edges.windows(2).find(|w| w[0] == w[1]) {
            Some(w) => Err(Error::ParallelEdges { u: w[0].0, v: w[0].1 }),
            None => Ok(()),
        }
    }

    /// The graph with parallel copies collapsed to a single edge.
    pub fn simple_support(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.dedup();
        Multigraph { n: self.n, edges }
    }

    /// Removes one copy of `e`.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Multigraph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e.0);
        Ok(Multigraph { n: self.n, edges })
    }

    /// Merges the endpoints of `e`. The merged vertex keeps the smaller label,
    /// labels above the larger endpoint shift down by one, and every copy of
    /// `e` (which would become a loop) is dropped.
    pub fn contract_edge(&self, e: EdgeRef) -> Result<Multigraph> {
        let (u, v) = self.edge(e)?;
        let relabel = |w: usize| match w.cmp(&v) {
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Greater => w - 1,
            std::cmp::Ordering::Less => w,
        };
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&pair| pair != (u, v))
            .map(|&(a, b)| {
                let (a, b) = (relabel(a), relabel(b));
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Ok(Multigraph { n: self.n - 1, edges })
    }

    /// Component id per vertex, numbered in order of first appearance.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn component_count(&self) -> usize {
        self.components().0
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// True iff deleting `e` increases the number of components. A copy of
    /// a parallel edge is never a bridge.
    pub fn is_bridge(&self, e: EdgeRef) -> Result<bool> {
        let (u, v) = self.edge(e)?;
        if self.multiplicity(u, v) > 1 {
            return Ok(false);
        }
        let before = self.component_count();
        Ok(self.delete_edge(e)?.component_count() > before)
    }

    /// Minimum number of edges whose removal disconnects the graph; 0 for a
    /// disconnected graph and for a single vertex.
    pub fn edge_connectivity(&self) -> usize {
        if self.n == 1 || !self.is_connected() {
            return 0;
        }
        (1..self.n).map(|t| self.max_flow(0, t)).min().unwrap_or(0)
    }

    // Unit-capacity max-flow (each edge copy is an undirected unit arc).
    fn max_flow(&self, s: usize, t: usize) -> usize {
        let n = self.n;
        let mut cap = vec![vec![0i64; n]; n];
        for &(u, v) in &self.edges {
            cap[u][v] += 1;
            cap[v][u] += 1;
        }
        let mut flow = 0;
        loop {
            let mut prev = vec![usize::MAX; n];
            prev[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for y in 0..n {
                    if cap[x][y] > 0 && prev[y] == usize::MAX {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[t] == usize::MAX {
                return flow;
            }
            let mut y = t;
            while y != s {
                let x = prev[y];
                cap[x][y] -= 1;
                cap[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
    }

    /// Applies `perm` (old label -> new label) to every vertex.
    pub fn relabel(&self, perm: &[usize]) -> Result<Multigraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {} but graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
            }
        }
        Multigraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Complement of the simple support.
    pub fn complement(&self) -> Multigraph {
        let adj = self.simple_adjacency();
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if adj[u].binary_search(&v).is_err() {
                    edges.push((u, v));
                }
            }
        }
        Multigraph { n: self.n, edges }
    }

    /// Adds edges to a copy of this graph.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Multigraph> {
        Multigraph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Parses the `n m` header plus one `u v` pair per line.
    pub fn from_edge_list(text: &str) -> Result<Multigraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::EdgeList {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(header, line)?;
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            edges.push(parse_pair(text, line)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeList {
                line: 1,
                message: format!("header declares {m} edges but {} were listed", edges.len()),
            });
        }
        Multigraph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// graph6 encoding of a simple graph (no trailing newline).
    pub fn to_graph6(&self) -> Result<String> {
        self.require_simple()?;
        let n = self.n;
        let mut bytes = Vec::new();
        if n <= 62 {
            bytes.push(n as u8 + 63);
        } else if n <= 258_047 {
            bytes.push(126);
            for shift in [12, 6, 0] {
                bytes.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            return Err(Error::InvalidParameter(format!("graph6 cannot encode n = {n}")));
        }
        let adj = self.simple_adjacency();
        let mut chunk = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                chunk = (chunk << 1) | u8::from(adj[i].binary_search(&j).is_ok());
                filled += 1;
                if filled == 6 {
                    bytes.push(chunk + 63);
                    chunk = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push((chunk << (6 - filled)) + 63);
        }
        Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ASCII"))
    }

    pub fn from_graph6(text: &str) -> Result<Multigraph> {
        let text = text.trim_end_matches(['\n', '\r']);
        let (body, base) = match text.strip_prefix(">>graph6<<") {
            Some(rest) => (rest.as_bytes(), 10),
            None => (text.as_bytes(), 0),
        };
        let err = |offset: usize, message: &str| Error::Graph6 {
            offset: base + offset,
            message: message.to_string(),
        };
        for (i, &b) in body.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(err(i, "byte outside the printable range 63..=126"));
            }
        }
        let first = *body.first().ok_or_else(|| err(0, "empty input"))?;
        let (n, mut pos) = if first < 126 {
            ((first - 63) as usize, 1)
        } else {
            if body.len() < 4 {
                return Err(err(body.len(), "truncated vertex count"));
            }
            if body[1] == 126 {
                return Err(err(1, "8-byte vertex counts are not supported"));
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        };
        let bits = n * n.saturating_sub(1) / 2;
        let expected = pos + bits.div_ceil(6);
        if body.len() != expected {
            return Err(err(
                body.len().min(expected),
                &format!("expected {expected} bytes for n = {n}, found {}", body.len()),
            ));
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[pos + k / 6] - 63;
                if (byte >> (5 - k % 6)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        pos += bits.div_ceil(6);
        debug_assert_eq!(pos, body.len());
        if n == 0 {
            return Err(err(0, "graph has no vertices"));
        }
        Multigraph::new(n, edges)
    }
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize)> {
    let bad = || Error::EdgeList {
        line,
        message: format!("expected two non-negative integers, found `{text}`"),
    };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Multigraph {
        Multigraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn k4() -> Multigraph {
        Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(c3().edge_count(), 3);
        assert_eq!(k4().edge_count(), 6);
        let doubled = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(doubled.edge_count(), 2);
        assert_eq!(doubled.multiplicity(1, 0), 2);
        assert_eq!(
            Multigraph::new(3, [(0, 3)]),
            Err(Error::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Multigraph::new(3, [(1, 1)]), Err(Error::Loop { u: 1 }));
        assert_eq!(Multigraph::new(0, []), Err(Error::NoVertices));
        // edge order is irrelevant
        assert_eq!(Multigraph::new(3, [(2, 1), (0, 2), (1, 0)]).unwrap(), c3());
    }

    #[test]
    fn deletion() {
        let g = c3();
        for i in 0..3 {
            let p = g.delete_edge(EdgeRef(i)).unwrap();
            assert_eq!(p.edge_count(), 2);
            assert!(p.is_connected());
            let mut d = p.degrees();
            d.sort();
            assert_eq!(d, vec![1, 1, 2]);
        }
        let doubled = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(
            doubled.delete_edge(EdgeRef(0)).unwrap(),
            Multigraph::new(2, [(0, 1)]).unwrap()
        );
        let k4 = k4();
        let e = k4.find_edge(0, 2).unwrap();
        assert_eq!(
            k4.delete_edge(e).unwrap(),
            Multigraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap()
        );
        assert!(matches!(
            k4.delete_edge(EdgeRef(6)),
            Err(Error::InvalidEdgeRef { index: 6, m: 6 })
        ));
    }

    #[test]
    fn contraction() {
        let g = c3().contract_edge(EdgeRef(0)).unwrap();
        assert_eq!(g, Multigraph::new(2, [(0, 1), (0, 1)]).unwrap());
        let k2 = Multigraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.contract_edge(EdgeRef(0)).unwrap(), Multigraph::empty(1).unwrap());
        let doubled = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(doubled.contract_edge(EdgeRef(1)).unwrap(), Multigraph::empty(1).unwrap());
        assert!(k4().contract_edge(EdgeRef(9)).is_err());
        // merged vertex keeps the smaller label, labels above shift down
        let p = Multigraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let e = p.find_edge(1, 2).unwrap();
        assert_eq!(p.contract_edge(e).unwrap(), Multigraph::new(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn connectivity_and_bridges() {
        assert!(c3().is_connected());
        assert!(!Multigraph::empty(2).unwrap().is_connected());
        assert!(Multigraph::empty(1).unwrap().is_connected());
        let p3 = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p3.is_bridge(EdgeRef(0)).unwrap());
        let c4 = Multigraph::cycle(4).unwrap();
        for i in 0..4 {
            assert!(!c4.is_bridge(EdgeRef(i)).unwrap());
        }
        let doubled = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert!(!doubled.is_bridge(EdgeRef(0)).unwrap());
        assert!(c4.is_bridge(EdgeRef(4)).is_err());
    }

    #[test]
    fn edge_connectivity_small() {
        assert_eq!(k4().edge_connectivity(), 3);
        assert_eq!(Multigraph::cycle(5).unwrap().edge_connectivity(), 2);
        assert_eq!(Multigraph::new(3, [(0, 1), (1, 2)]).unwrap().edge_connectivity(), 1);
        assert_eq!(Multigraph::new(2, [(0, 1); 3]).unwrap().edge_connectivity(), 3);
        assert_eq!(Multigraph::empty(3).unwrap().edge_connectivity(), 0);
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(k4().to_graph6().unwrap(), "C~");
        assert_eq!(Multigraph::cycle(4).unwrap().to_graph6().unwrap(), "Cl");
        assert_eq!(Multigraph::from_graph6("C~\n").unwrap(), k4());
        assert_eq!(Multigraph::from_graph6(">>graph6<<Cl").unwrap(), Multigraph::cycle(4).unwrap());
        let doubled = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert!(matches!(doubled.to_graph6(), Err(Error::ParallelEdges { u: 0, v: 1 })));
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert!(matches!(Multigraph::from_graph6("C~~"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(Multigraph::from_graph6("C "), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(Multigraph::from_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn graph6_long_form() {
        let g = Multigraph::cycle(70).unwrap();
        let text = g.to_graph6().unwrap();
        assert!(text.starts_with('~'));
        assert_eq!(Multigraph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let doubled = Multigraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let text = doubled.to_edge_list();
        assert_eq!(text, "3 3\n0 1\n0 1\n1 2\n");
        assert_eq!(Multigraph::from_edge_list(&text).unwrap(), doubled);
        assert!(matches!(
            Multigraph::from_edge_list("3 2\n0 1\n"),
            Err(Error::EdgeList { .. })
        ));
        assert!(matches!(
            Multigraph::from_edge_list("3 1\n0 x\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
    }

    #[test]
    fn complement_and_relabel() {
        let c4 = Multigraph::cycle(4).unwrap();
        assert_eq!(c4.complement(), Multigraph::new(4, [(0, 2), (1, 3)]).unwrap());
        let r = c4.relabel(&[1, 2, 3, 0]).unwrap();
        assert_eq!(r, c4);
        assert!(c4.relabel(&[0, 0, 1, 2]).is_err());
    }
}
