//! Simple undirected graphs over dense vertex indices, the canonical
//! edge-list text format, and the elementary stable-set predicates that the
//! rest of the crate builds on.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Errors raised while building a [`Graph`] from an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency lists disagree on edge {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("cannot delete every vertex of the graph")]
    DeleteAll,
}

/// A parse failure in the edge-list format, tagged with its 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("malformed header `{0}`, expected `n m`")]
    BadHeader(String),
    #[error("malformed edge `{0}`, expected `u v`")]
    BadEdge(String),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Sorted set of distinct vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary indices, sorting and dropping repeats.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(items: I) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(items: [usize; N]) -> Self {
        VertexSet::from_unsorted(items)
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoints may come in either order;
    /// duplicates and self-loops are rejected rather than merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Builds a graph from per-vertex neighbor lists, which must describe
    /// each edge from both ends. Lists need not be sorted.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut twice = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(&x) = list.iter().find(|&&x| x >= n) {
                return Err(GraphError::OutOfRange { vertex: x, n });
            }
            if list.binary_search(&u).is_ok() {
                return Err(GraphError::SelfLoop(u));
            }
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
            twice += list.len();
        }
        // Scanning u upwards consumes every list in sorted order, so each
        // reverse entry must sit exactly at its list's cursor.
        let mut cursor = vec![0usize; n];
        for (u, list) in adj.iter().enumerate() {
            for &v in list {
                if adj[v].get(cursor[v]) != Some(&u) {
                    return Err(GraphError::Asymmetric(u.min(v), u.max(v)));
                }
                cursor[v] += 1;
            }
        }
        Ok(Graph { adj, m: twice / 2 })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph::from_edges(n, &[]).expect("n >= 1")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("n >= 1")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("n >= 1")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("n >= 3")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Parses the canonical edge-list format: `#` comment lines, a header
    /// `n m`, then exactly `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            last_line = line_no;
            let err = |kind| ParseError {
                line: line_no,
                kind,
            };
            let Some((n, m)) = header else {
                let pair = parse_pair(line)
                    .ok_or_else(|| err(ParseErrorKind::BadHeader(line.to_string())))?;
                if pair.0 == 0 {
                    return Err(err(GraphError::Empty.into()));
                }
                header = Some(pair);
                continue;
            };
            let (u, v) =
                parse_pair(line).ok_or_else(|| err(ParseErrorKind::BadEdge(line.to_string())))?;
            if edges.len() == m {
                return Err(err(ParseErrorKind::EdgeCount {
                    expected: m,
                    found: m + 1,
                }));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(err(GraphError::OutOfRange { vertex: x, n }.into()));
                }
            }
            if u == v {
                return Err(err(GraphError::SelfLoop(u).into()));
            }
            edges.push((u, v, line_no));
        }
        let Some((n, m)) = header else {
            return Err(ParseError {
                line: last_line.max(1),
                kind: ParseErrorKind::MissingHeader,
            });
        };
        if edges.len() != m {
            return Err(ParseError {
                line: last_line.max(1),
                kind: ParseErrorKind::EdgeCount {
                    expected: m,
                    found: edges.len(),
                },
            });
        }

        // Duplicates are reported at the line of their second occurrence.
        let mut keyed: Vec<_> = edges
            .iter()
            .map(|&(u, v, l)| (u.min(v), u.max(v), l))
            .collect();
        keyed.sort_unstable();
        if let Some(w) = keyed
            .windows(2)
            .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        {
            return Err(ParseError {
                line: w[0].2.max(w[1].2),
                kind: GraphError::DuplicateEdge(w[0].0, w[0].1).into(),
            });
        }
        let pairs: Vec<_> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        Graph::from_edges(n, &pairs).map_err(|e| ParseError {
            line: last_line,
            kind: e.into(),
        })
    }

    /// Canonical serialization: header, then edges sorted lexicographically,
    /// LF-terminated.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }

    /// Deterministic greedy maximal stable set: scan `start` first (if any),
    /// then all vertices in ascending order, taking every vertex that has no
    /// neighbor taken so far.
    pub fn greedy_maximal_stable_set(&self, start: Option<usize>) -> VertexSet {
        let n = self.n();
        let mut blocked = vec![false; n];
        let mut chosen = Vec::new();
        let mut take = |v: usize, blocked: &mut Vec<bool>| {
            if !blocked[v] {
                chosen.push(v);
                blocked[v] = true;
                for &u in &self.adj[v] {
                    blocked[u] = true;
                }
            }
        };
        if let Some(s) = start {
            assert!(s < n, "start vertex {s} out of range");
            take(s, &mut blocked);
        }
        for v in 0..n {
            take(v, &mut blocked);
        }
        VertexSet::from_unsorted(chosen)
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| self.adj[v].iter().all(|&u| !s.contains(u)))
    }

    pub fn is_maximal_stable(&self, s: &VertexSet) -> bool {
        if !self.is_stable(s) {
            return false;
        }
        let mut dominated = vec![false; self.n()];
        for v in s.iter() {
            dominated[v] = true;
            for &u in &self.adj[v] {
                dominated[u] = true;
            }
        }
        dominated.into_iter().all(|d| d)
    }

    /// Induced subgraph on the complement of `victims`. Survivors keep their
    /// relative order; the returned map sends each old index to its new index
    /// or `None` if deleted.
    pub fn delete_vertices(
        &self,
        victims: &VertexSet,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        let n = self.n();
        if let Some(v) = victims.iter().find(|&v| v >= n) {
            return Err(GraphError::OutOfRange { vertex: v, n });
        }
        if victims.len() == n {
            return Err(GraphError::DeleteAll);
        }
        let mut mapping = vec![None; n];
        let mut next = 0;
        for (v, slot) in mapping.iter_mut().enumerate() {
            if !victims.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut adj = Vec::with_capacity(next);
        let mut m2 = 0;
        for v in 0..n {
            if mapping[v].is_none() {
                continue;
            }
            let list: Vec<usize> = self.adj[v].iter().filter_map(|&u| mapping[u]).collect();
            m2 += list.len();
            adj.push(list);
        }
        Ok((Graph { adj, m: m2 / 2 }, mapping))
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.m)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}
