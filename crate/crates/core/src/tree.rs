//! Labeled trees and simple graphs.
//!
//! Vertices are labeled 1..=n at every interface. Edges are stored
//! normalized as (min, max) pairs in lexicographic order, so two values
//! compare equal exactly when their edge sets connect the same label pairs.

use crate::error::{Error, Result};

/// A tree on vertices labeled 1..=n, stored as a normalized edge set.
///
/// Construction goes through [`LabeledTree::new`], which validates the tree
/// invariants (exactly n-1 edges, connected, no self-loops or duplicates),
/// so every value of this type is a valid tree. `n = 1` is the degenerate
/// tree with no edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// An undirected simple graph on vertices labeled 1..=n; connectivity is
/// not required. Substrate for the spanning-tree counters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Range/loop/duplicate checks plus (min, max) normalization and sorting,
/// shared by both constructors.
fn normalize_edges(
    n: usize,
    edges: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Vec<(usize, usize)>> {
    let mut normalized = Vec::new();
    for (u, v) in edges {
        if u < 1 || u > n || v < 1 || v > n {
            return Err(Error::EdgeOutOfRange { u, v, n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        normalized.push((u.min(v), u.max(v)));
    }
    normalized.sort_unstable();
    for pair in normalized.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::DuplicateEdge {
                u: pair[0].0,
                v: pair[0].1,
            });
        }
    }
    Ok(normalized)
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// First vertex unreachable from vertex 1, if any.
fn unreachable_vertex(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let adj = adjacency(n, edges);
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (1..=n).find(|&v| !seen[v])
}

impl LabeledTree {
    /// Validates and normalizes an edge list into a tree on {1..=n}.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidVertexCount { got: n, min: 1 });
        }
        let edges = normalize_edges(n, edges)?;
        if edges.len() != n - 1 {
            return Err(Error::WrongEdgeCount {
                n,
                expected: n - 1,
                got: edges.len(),
            });
        }
        if let Some(v) = unreachable_vertex(n, &edges) {
            return Err(Error::Disconnected(v));
        }
        // connected with n-1 edges, hence acyclic
        Ok(LabeledTree { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges normalized min-first and sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        adjacency(self.n, &self.edges)
    }

    /// The unique simple path from `u` to `v`, inclusive of both endpoints.
    /// `path_between(u, u)` is `[u]`.
    pub fn path_between(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(vec![u]);
        }
        let adj = self.adjacency();
        let mut parent = vec![0usize; self.n + 1];
        let mut stack = vec![u];
        parent[u] = u;
        while let Some(w) = stack.pop() {
            if w == v {
                break;
            }
            for &x in &adj[w] {
                if parent[x] == 0 {
                    parent[x] = w;
                    stack.push(x);
                }
            }
        }
        let mut path = vec![v];
        let mut w = v;
        while w != u {
            w = parent[w];
            path.push(w);
        }
        path.reverse();
        Ok(path)
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }
}

impl SimpleGraph {
    /// Validates and normalizes an edge list; any simple graph is accepted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidVertexCount { got: n, min: 1 });
        }
        let edges = normalize_edges(n, edges)?;
        Ok(SimpleGraph { n, edges })
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        adjacency(self.n, &self.edges)
    }
}

impl From<LabeledTree> for SimpleGraph {
    fn from(t: LabeledTree) -> Self {
        SimpleGraph {
            n: t.n,
            edges: t.edges,
        }
    }
}
