//! Maximum cardinality matching, deficiency, and a Tutte–Berge brute-force oracle.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, MaskIter, VertexSet};

/// Largest order accepted by [`tutte_berge_brute`].
pub const TUTTE_BERGE_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph of order {order} exceeds the brute-force cap of {cap}")]
    TooLarge { order: usize, cap: usize },
}

/// A set of pairwise vertex-disjoint edges, stored as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Normalizes the edge list; does not check it against any graph (see [`verify_matching`]).
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { order, edges }
    }

    pub fn empty(order: usize) -> Self {
        Matching { order, edges: Vec::new() }
    }

    pub fn from_mates(mate: &[Option<usize>]) -> Self {
        Self::new(
            mate.len(),
            mate.iter()
                .enumerate()
                .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v))),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by some edge. Panics if an endpoint is outside the host order.
    pub fn saturated(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.order);
        for &(u, v) in &self.edges {
            s.insert(u);
            s.insert(v);
        }
        s
    }

    pub fn missed(&self) -> VertexSet {
        self.saturated().complement()
    }

    /// Merges edge sets; the result is not re-validated.
    pub fn union(&self, other: &Matching) -> Matching {
        Matching::new(self.order, self.edges.iter().chain(&other.edges).copied())
    }

    /// `"u v"` per line.
    pub fn to_lines(&self) -> String {
        self.edges.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
    }
}

/// True iff every edge of `m` is an edge of `g` and the edges are pairwise disjoint.
pub fn verify_matching(g: &Graph, m: &Matching) -> bool {
    if m.order != g.order() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &(u, v) in &m.edges {
        if u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v) {
            return false;
        }
        if seen[u] || seen[v] {
            return false;
        }
        seen[u] = true;
        seen[v] = true;
    }
    true
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an alternating tree from the exposed vertex `root`; returns the
    /// exposed endpoint of an augmenting path, if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Maximum cardinality matching by Edmonds' blossom contraction, seeded with a
/// greedy maximal matching. Vertices and neighbors are scanned in ascending
/// label order, so the result is a deterministic function of the labeled graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate = vec![NONE; n];
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut b = Blossom {
        g,
        mate,
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for root in 0..n {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    let mates: Vec<Option<usize>> =
        b.mate.iter().map(|&m| (m != NONE).then_some(m)).collect();
    Matching::from_mates(&mates)
}

/// `|V| − 2ν(G)`.
pub fn deficiency(g: &Graph) -> usize {
    g.order() - 2 * maximum_matching(g).len()
}

/// A set `S` witnessing the Berge value `odd(G − S) − |S|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteBergeCertificate {
    pub witness: Vec<usize>,
    pub value: i64,
}

impl TutteBergeCertificate {
    /// Recomputes `odd(G − S) − |S|` for the stored witness.
    pub fn recompute(&self, g: &Graph) -> i64 {
        let s = VertexSet::from_vertices(g.order(), self.witness.iter().copied())
            .expect("witness inside the graph");
        berge_value(g, &s)
    }
}

/// `odd(G − S) − |S|` for an arbitrary graph.
pub fn berge_value(g: &Graph, s: &VertexSet) -> i64 {
    let rest = s.complement();
    let odd = g.components_within(&rest).iter().filter(|c| c.len() % 2 == 1).count();
    odd as i64 - s.len() as i64
}

fn odd_components(masks: &[u32], mut alive: u32) -> u32 {
    let mut odd = 0;
    while alive != 0 {
        let mut comp = alive & alive.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in MaskIter(frontier as u64) {
                next |= masks[v];
            }
            next &= alive & !comp;
            comp |= next;
            frontier = next;
        }
        alive &= !comp;
        odd += comp.count_ones() & 1;
    }
    odd
}

/// Maximizes `odd(G − S) − |S|` over every subset `S`; the first maximizer in
/// ascending bitmask order is reported.
pub fn tutte_berge_brute(g: &Graph) -> Result<TutteBergeCertificate, MatchingError> {
    let n = g.order();
    if n > TUTTE_BERGE_CAP {
        return Err(MatchingError::TooLarge { order: n, cap: TUTTE_BERGE_CAP });
    }
    let masks: Vec<u32> = g.to_masks().into_iter().map(|m| m as u32).collect();
    let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = (i64::MIN, 0u32);
    for s in 0..=all {
        let value = odd_components(&masks, all & !s) as i64 - s.count_ones() as i64;
        if value > best.0 {
            best = (value, s);
        }
    }
    Ok(TutteBergeCertificate {
        witness: MaskIter(best.1 as u64).collect(),
        value: best.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn maximum_matching_examples() {
        assert_eq!(maximum_matching(&path(4)).len(), 2);
        assert_eq!(maximum_matching(&star(4)).len(), 1);
        assert_eq!(maximum_matching(&cycle(9)).len(), 4);
        assert_eq!(maximum_matching(&Graph::empty(0)).len(), 0);
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(deficiency(&star(4)), 3);
        assert_eq!(deficiency(&path(2)), 0);
        assert_eq!(deficiency(&Graph::empty(3)), 3);
    }

    #[test]
    fn blossom_is_needed_here() {
        // Greedy takes 0-1 and 2-3; the only augmenting path 5-0-1-2-3-4 crosses the triangle.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 5)],
        )
        .unwrap();
        let m = maximum_matching(&g);
        assert!(verify_matching(&g, &m));
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn petersen_has_a_perfect_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(maximum_matching(&g).len(), 5);
    }

    #[test]
    fn tutte_berge_examples() {
        let c = tutte_berge_brute(&star(3)).unwrap();
        assert_eq!((c.value, c.witness.clone()), (2, vec![0]));
        assert_eq!(c.recompute(&star(3)), 2);
        let c = tutte_berge_brute(&complete(4)).unwrap();
        assert_eq!((c.value, c.witness), (0, vec![]));
        let c = tutte_berge_brute(&cycle(5)).unwrap();
        assert_eq!((c.value, c.witness), (1, vec![]));
        assert_eq!(
            tutte_berge_brute(&path(25)),
            Err(MatchingError::TooLarge { order: 25, cap: 24 })
        );
    }

    #[test]
    fn verify_matching_examples() {
        let p4 = path(4);
        assert!(verify_matching(&p4, &Matching::new(4, [(0, 1), (2, 3)])));
        assert!(!verify_matching(&p4, &Matching::new(4, [(0, 1), (1, 2)])));
        assert!(!verify_matching(&p4, &Matching::new(4, [(0, 2)])));
        assert!(!verify_matching(&p4, &Matching::new(5, [(0, 1)])));
    }

    #[test]
    fn matching_serializes_as_lines() {
        assert_eq!(Matching::new(4, [(3, 2), (0, 1)]).to_lines(), "0 1\n2 3\n");
    }
}
