//! Simple undirected graphs on vertex set {0, …, n−1}.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} not allowed")]
    SelfLoop { v: usize },
    #[error("no edge between {u} and {v}")]
    MissingEdge { u: usize, v: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph must be connected")]
    Disconnected,
    #[error("operation requires order at least {min}, got {n}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("endpoints must be distinct")]
    IdenticalEndpoints,
    #[error("cut set must not contain either endpoint")]
    CutTouchesEndpoint,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    BadLine { line: usize, msg: String },
    #[error("line {line}: duplicate order header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: vertex {v} exceeds declared order {n}")]
    HeaderTooSmall { line: usize, v: usize, n: usize },
    #[error("input describes no vertices")]
    NoVertices,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{0}")]
    Structure(#[from] GraphError),
}

/// Undirected simple graph, adjacency stored as sorted neighbor sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

/// Result of deleting vertices: the smaller graph plus the label maps
/// between old and new vertex ids.
#[derive(Debug, Clone)]
pub struct VertexDeletion {
    pub graph: Graph,
    /// `new_to_old[i]` is the original id of new vertex `i`.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[v]` is `Some(i)` if old vertex `v` survives as `i`.
    pub old_to_new: Vec<Option<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph { adj: vec![BTreeSet::new(); n], m: 0 })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { v: u });
        }
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * (n - 1) / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n() })
        }
    }

    /// Vertices reachable from `from`, ignoring `blocked` vertices and the
    /// optional edge `skip` (in either direction).
    pub(crate) fn reachable_avoiding(
        &self,
        from: usize,
        blocked: &[bool],
        skip: Option<(usize, usize)>,
    ) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        if blocked[from] {
            return seen;
        }
        let mut queue = std::collections::VecDeque::new();
        seen[from] = true;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if let Some((a, b)) = skip {
                    if (u == a && v == b) || (u == b && v == a) {
                        continue;
                    }
                }
                if !seen[v] && !blocked[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    pub fn connected(&self) -> bool {
        let blocked = vec![false; self.n()];
        self.reachable_avoiding(0, &blocked, None).iter().all(|&s| s)
    }

    /// Connected components, ordered by smallest member, vertices ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.delete_edges(&[(u, v)])
    }

    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.adj[u].remove(&v) {
                return Err(GraphError::MissingEdge { u, v });
            }
            g.adj[v].remove(&u);
            g.m -= 1;
        }
        Ok(g)
    }

    /// Delete a vertex set; survivors are relabeled in ascending order of
    /// their old ids.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<VertexDeletion, GraphError> {
        let n = self.n();
        let mut drop = vec![false; n];
        for &v in s {
            self.check_vertex(v)?;
            drop[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `keep` (must be distinct, in range; order of
    /// `keep` fixes the new labels).
    pub fn induced(&self, keep: &[usize]) -> Result<VertexDeletion, GraphError> {
        if keep.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut old_to_new = vec![None; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            old_to_new[v] = Some(i);
        }
        let mut g = Graph::empty(keep.len())?;
        for (i, &v) in keep.iter().enumerate() {
            for w in self.neighbors(v) {
                if let Some(j) = old_to_new[w] {
                    if i < j {
                        g.add_edge(i, j)?;
                    }
                }
            }
        }
        Ok(VertexDeletion { graph: g, new_to_old: keep.to_vec(), old_to_new })
    }

    /// Common neighborhood N(x) ∩ N(y), ascending.
    pub fn common_neighbors(&self, x: usize, y: usize) -> Vec<usize> {
        debug_assert!(x != y, "common_neighbors expects distinct vertices");
        self.adj[x].intersection(&self.adj[y]).copied().collect()
    }

    /// Parse the plain edge-list format: one `u v` pair per line, `#`
    /// comments, blank lines ignored, optional `n <count>` header declaring
    /// the order (required for isolated vertices).
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut declared: Option<(usize, usize)> = None; // (n, line)
        let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
        let mut max_seen: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let item = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if item.is_empty() {
                continue;
            }
            let fields: Vec<&str> = item.split_whitespace().collect();
            match fields.as_slice() {
                ["n", count] => {
                    if declared.is_some() {
                        return Err(ParseError::DuplicateHeader { line });
                    }
                    let n: usize = count.parse().map_err(|_| ParseError::BadLine {
                        line,
                        msg: format!("bad vertex count {count:?}"),
                    })?;
                    if n == 0 {
                        return Err(ParseError::NoVertices);
                    }
                    declared = Some((n, line));
                }
                [a, b] => {
                    let mut pair = [0usize; 2];
                    for (slot, tok) in pair.iter_mut().zip([a, b]) {
                        *slot = tok.parse().map_err(|_| ParseError::BadLine {
                            line,
                            msg: format!("bad vertex id {tok:?}"),
                        })?;
                    }
                    max_seen = Some(max_seen.unwrap_or(0).max(pair[0]).max(pair[1]));
                    edges.push((pair[0], pair[1], line));
                }
                _ => {
                    return Err(ParseError::BadLine {
                        line,
                        msg: format!("expected `u v` or `n <count>`, got {item:?}"),
                    });
                }
            }
        }
        let n = match (declared, max_seen) {
            (Some((n, _)), Some(mx)) => {
                if mx >= n {
                    let line = edges.iter().find(|&&(u, v, _)| u >= n || v >= n).unwrap().2;
                    return Err(ParseError::HeaderTooSmall { line, v: mx, n });
                }
                n
            }
            (Some((n, _)), None) => n,
            (None, Some(mx)) => mx + 1,
            (None, None) => return Err(ParseError::NoVertices),
        };
        let mut g = Graph::empty(n).map_err(GraphError::from)?;
        for (u, v, line) in edges {
            g.add_edge(u, v).map_err(|e| ParseError::BadLine { line, msg: e.to_string() })?;
        }
        Ok(g)
    }

    /// Inverse of [`Graph::parse_edge_list`]: header plus sorted edge lines.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Input formats understood by [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => Graph::parse_edge_list(text),
        GraphFormat::Graph6 => crate::graph6::decode(text.trim()),
    }
}
