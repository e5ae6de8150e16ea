//! Labeled simple undirected graphs.
//!
//! Vertices are dense labels `0..n`. Graph values are immutable: every
//! edit returns a new graph and leaves the receiver untouched, so a chain
//! of rewiring steps can be audited one graph at a time.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0}, {1}}} already present")]
    EdgeExists(usize, usize),
    #[error("edge {{{0}, {1}}} not present")]
    EdgeMissing(usize, usize),
    #[error("no path between {0} and {1}")]
    NoPath(usize, usize),
    #[error("two-swap blocked: {0}")]
    SwapBlocked(String),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("malformed edge list: {0}")]
    Parse(String),
}

/// An undirected edge with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub lo: usize,
    pub hi: usize,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Result<Self, GraphError> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge { lo: u, hi: v }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: v, hi: u }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(u)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lo, self.hi)
    }
}

/// A simple path: consecutive vertices adjacent, no vertex repeated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPath(Vec<usize>);

impl VertexPath {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Number of edges on the path.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    /// Star with center 0 and leaves `1..n`.
    pub fn star(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert(0, v);
        }
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            let e = Edge::new(u, v)?;
            if g.has_edge(e.lo, e.hi) {
                return Err(GraphError::EdgeExists(e.lo, e.hi));
            }
            g.insert(e.lo, e.hi);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.range(u + 1..).map(move |&v| Edge { lo: u, hi: v })
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degrees())
            .expect("graph with at least one vertex")
    }

    /// Vertices ordered by degree (descending), ties by ascending label.
    /// Entry `r` is the vertex holding rank `r` of the degree sequence.
    pub fn rank_table(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        order
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0).len() == self.n
    }

    /// Component label for every vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            for v in self.component_of(s) {
                label[v] = next;
            }
            next += 1;
        }
        label
    }

    fn component_of(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([s]);
        let mut out = Vec::new();
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            out.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// Breadth-first shortest path, scanning neighbors in ascending order.
    pub fn find_path(&self, i: usize, j: usize) -> Result<VertexPath, GraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Ok(VertexPath(vec![i]));
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[i] = i;
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    if w == j {
                        let mut path = vec![j];
                        let mut cur = j;
                        while cur != i {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Ok(VertexPath(path));
                    }
                    queue.push_back(w);
                }
            }
        }
        Err(GraphError::NoPath(i, j))
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = Edge::new(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(e.lo, e.hi));
        }
        let mut g = self.clone();
        g.insert(u, v);
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = Edge::new(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeMissing(e.lo, e.hi));
        }
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        Ok(g)
    }

    /// Replaces `{a,b}` and `{c,d}` by `{a,c}` and `{b,d}`.
    pub fn two_swap(&self, e1: (usize, usize), e2: (usize, usize)) -> Result<Self, GraphError> {
        let (a, b) = e1;
        let (c, d) = e2;
        let distinct = [a, b, c, d]
            .iter()
            .collect::<BTreeSet<_>>()
            .len()
            == 4;
        if !distinct {
            return Err(GraphError::SwapBlocked(format!(
                "vertices of {{{a},{b}}} and {{{c},{d}}} are not distinct"
            )));
        }
        for (u, v) in [(a, b), (c, d)] {
            if !self.has_edge(u, v) {
                return Err(GraphError::EdgeMissing(u.min(v), u.max(v)));
            }
        }
        for (u, v) in [(a, c), (b, d)] {
            if self.has_edge(u, v) {
                return Err(GraphError::SwapBlocked(format!(
                    "replacement edge {{{u},{v}}} already present"
                )));
            }
        }
        let mut g = self.clone();
        g.adj[a].remove(&b);
        g.adj[b].remove(&a);
        g.adj[c].remove(&d);
        g.adj[d].remove(&c);
        g.insert(a, c);
        g.insert(b, d);
        Ok(g)
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut g = Self::empty(self.n);
        for e in self.edges() {
            g.insert(perm[e.lo], perm[e.hi]);
        }
        g
    }

    /// Edge-list text: `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for e in self.edges() {
            out.push_str(&format!("{e}\n"));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for e in self.edges() {
            out.push_str(&format!("  {} -- {};\n", e.lo, e.hi));
        }
        out.push_str("}\n");
        out
    }

    fn insert(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

impl FromStr for SimpleGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("missing header".into()))?;
        let [n, m] = parse_pair(header)?;
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let edges = lines.map(|l| parse_pair(l).map(|[u, v]| (u, v))).collect::<Result<Vec<_>, _>>()?;
        if edges.len() != m {
            return Err(GraphError::Parse(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        SimpleGraph::from_edges(n, edges)
    }
}

fn parse_pair(line: &str) -> Result<[usize; 2], GraphError> {
    let nums: Vec<usize> = line
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| GraphError::Parse(format!("bad integer {t:?}"))))
        .collect::<Result<_, _>>()?;
    nums.try_into()
        .map_err(|_| GraphError::Parse(format!("expected two integers in {line:?}")))
}
