//! Immutable simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored twice: as strictly increasing neighbor lists and as
//! bitset rows, so that both iteration and `O(n/64)` adjacency tests are cheap.
//! Graphs never change after construction; deleting vertices is expressed by
//! taking the induced subgraph on the complement.

mod codec;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use codec::{decode_graph6, encode_graph6, parse_edge_list, read_graphs, write_edge_list};
pub use vertex_set::{Iter as VertexSetIter, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    m: usize,
}

/// Result of [`Graph::diameter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// An induced subgraph together with the map from its labels back to the host.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `map[new] = old`, ascending.
    pub map: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::IndexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    /// Builds a graph from symmetric, loop-free bitset rows.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let adj: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, rows, m };
        g.debug_check();
        g
    }

    /// Builds a graph of order `n <= 64` from `u64` adjacency masks.
    pub fn from_masks(masks: &[u64]) -> Graph {
        let n = masks.len();
        assert!(n <= 64);
        let rows = masks
            .iter()
            .map(|&mask| {
                VertexSet::from_vertices(n, MaskIter(mask)).expect("mask bit beyond order")
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Adjacency masks; only meaningful for `n <= 64`.
    pub fn to_masks(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "graph too large for u64 masks");
        self.rows.iter().map(|r| r.words().first().copied().unwrap_or(0)).collect()
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_rows(vec![VertexSet::empty(n); n])
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            for (v, nb) in self.adj.iter().enumerate() {
                assert!(nb.windows(2).all(|w| w[0] < w[1]));
                assert!(!self.rows[v].contains(v), "self-loop at {v}");
                for &u in nb {
                    assert!(self.rows[u].contains(v), "asymmetric edge {u}-{v}");
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// `N(X) = ⋃ N(x) − X`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.order());
        for v in s {
            out.union_with(&self.rows[v]);
        }
        out.difference_with(s);
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(GraphError::IndexOutOfRange { vertex: u.max(v), order: n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut rows = self.rows.clone();
        rows[u].insert(v);
        rows[v].insert(u);
        Ok(Self::from_rows(rows))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut rows = self.rows.clone();
        rows[u].remove(v);
        rows[v].remove(u);
        Self::from_rows(rows)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].complement();
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Graph on `|s|` vertices keeping exactly the edges inside `s`, relabeled
    /// in ascending order of the original labels.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        if s.host_order() != self.order() {
            return Err(GraphError::IndexOutOfRange { vertex: s.host_order(), order: self.order() });
        }
        let map = s.to_vec();
        let mut new_label = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            new_label[v] = i;
        }
        let k = map.len();
        let rows = map
            .iter()
            .map(|&v| {
                let mut r = VertexSet::empty(k);
                for u in self.rows[v].intersection(s).iter() {
                    r.insert(new_label[u]);
                }
                r
            })
            .collect();
        Ok(InducedSubgraph { graph: Self::from_rows(rows), map })
    }

    /// Convenience wrapper over [`Graph::induced_subgraph`] taking a vertex list.
    pub fn induced_on(&self, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
        let s = VertexSet::from_vertices(self.order(), vertices.iter().copied()).ok_or_else(|| {
            GraphError::IndexOutOfRange {
                vertex: vertices.iter().copied().max().unwrap_or(0),
                order: self.order(),
            }
        })?;
        self.induced_subgraph(&s)
    }

    /// Distances from `root`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Layer `i` holds exactly the vertices at distance `i` from `root`.
    pub fn bfs_layers(&self, root: usize) -> Result<Vec<VertexSet>, GraphError> {
        if root >= self.order() {
            return Err(GraphError::IndexOutOfRange { vertex: root, order: self.order() });
        }
        let dist = self.distances_from(root);
        let depth = dist.iter().filter(|&&d| d != usize::MAX).max().copied().unwrap_or(0);
        let mut layers = vec![VertexSet::empty(self.order()); depth + 1];
        for (v, &d) in dist.iter().enumerate() {
            if d != usize::MAX {
                layers[d].insert(v);
            }
        }
        Ok(layers)
    }

    pub fn eccentricity(&self, v: usize) -> Diameter {
        let dist = self.distances_from(v);
        if dist.contains(&usize::MAX) {
            Diameter::Infinite
        } else {
            Diameter::Finite(dist.into_iter().max().unwrap_or(0))
        }
    }

    pub fn diameter(&self) -> Diameter {
        (0..self.order())
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(Diameter::Finite(0))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Components of the subgraph induced by `alive`.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.order());
        let mut out = Vec::new();
        for start in alive {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.order());
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for u in self.rows[v].intersection(alive).iter() {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Whether the subgraph induced by `alive` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, alive: &VertexSet) -> bool {
        let Some(start) = alive.first() else {
            return true;
        };
        let mut seen = VertexSet::empty(self.order());
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.rows[v].intersection(alive).iter() {
                if seen.insert(u) {
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == alive.len()
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.rows[v].intersects(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let k = s.len();
        s.iter().all(|v| self.rows[v].intersection_len(s) == k - 1)
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

pub(crate) struct MaskIter(pub u64);

impl Iterator for MaskIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Small fixed graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// `K_{1,n}` with center 0.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
        Graph::from_edges(n + 1, &edges).unwrap()
    }

    pub fn complete_bipartite(s: usize, t: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..s {
            for v in 0..t {
                edges.push((u, s + v));
            }
        }
        Graph::from_edges(s + t, &edges).unwrap()
    }
}
