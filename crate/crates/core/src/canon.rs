//! Canonical labeling of small graphs by individualization and refinement.
//!
//! The canonical code is the minimum, over all leaves of the search tree, of the
//! upper-triangle adjacency string read in graph6 column order. Refinement is
//! label-invariant, so the leaf set of isomorphic graphs maps onto itself and
//! the minimum is an isomorphism invariant that also determines the graph.
//! Exchangeable twins and root-level automorphism orbits are pruned.

use crate::graph::{Graph, MaskIter};

/// Largest order the canonical code can hold (`16 * 15 / 2 = 120` bits).
pub const MAX_CANON_ORDER: usize = 16;

/// Canonical form of a graph: equal codes exactly for isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Adjacency masks of the canonically labeled graph.
    pub fn to_masks(&self) -> Vec<u64> {
        let n = self.order();
        let mut masks = vec![0u64; n];
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.bits >> (total - 1 - k)) & 1 == 1 {
                    masks[i] |= 1 << j;
                    masks[j] |= 1 << i;
                }
                k += 1;
            }
        }
        masks
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_masks(&self.to_masks())
    }
}

#[derive(Debug, Clone)]
pub struct Canonical {
    pub code: CanonicalCode,
    /// `labeling[k]` is the original vertex placed at canonical position `k`.
    pub labeling: Vec<usize>,
}

fn code_of(masks: &[u64], lab: &[usize]) -> u128 {
    let n = lab.len();
    let mut bits = 0u128;
    for j in 1..n {
        let row = masks[lab[j]];
        for &li in &lab[..j] {
            bits = (bits << 1) | ((row >> li) & 1) as u128;
        }
    }
    bits
}

fn refine(masks: &[u64], cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(16);
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell & (cell - 1) == 0 {
                    continue;
                }
                scratch.clear();
                for v in MaskIter(cell) {
                    scratch.push(((masks[v] & splitter).count_ones(), v));
                }
                let first = scratch[0].0;
                if scratch.iter().all(|&(k, _)| k == first) {
                    continue;
                }
                scratch.sort_unstable();
                let mut pieces: Vec<u64> = Vec::new();
                let mut cur_key = u32::MAX;
                for &(k, v) in &scratch {
                    if k != cur_key {
                        pieces.push(0);
                        cur_key = k;
                    }
                    *pieces.last_mut().unwrap() |= 1 << v;
                }
                cells.splice(c..=c, pieces);
                continue 'restart;
            }
        }
        return;
    }
}

struct Search<'a> {
    masks: &'a [u64],
    best: Option<(u128, Vec<usize>)>,
    orbit: Vec<usize>,
}

impl Search<'_> {
    fn find(&mut self, mut v: usize) -> usize {
        while self.orbit[v] != v {
            self.orbit[v] = self.orbit[self.orbit[v]];
            v = self.orbit[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.orbit[ra.max(rb)] = ra.min(rb);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        (self.masks[u] & !(1 << v)) == (self.masks[v] & !(1 << u))
    }

    fn run(&mut self, mut cells: Vec<u64>, depth: usize) {
        refine(self.masks, &mut cells);
        let Some(target) = cells.iter().position(|&c| c & (c - 1) != 0) else {
            let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = code_of(self.masks, &lab);
            match &self.best {
                Some((b, _)) if code > *b => {}
                Some((b, best_lab)) if code == *b => {
                    let pairs: Vec<(usize, usize)> =
                        best_lab.iter().copied().zip(lab.iter().copied()).collect();
                    for (a, b) in pairs {
                        self.union(a, b);
                    }
                }
                _ => self.best = Some((code, lab)),
            }
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in MaskIter(cell) {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if depth == 0 {
                let rv = self.find(v);
                if tried.iter().any(|&u| self.find(u) == rv) {
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1u64 << v);
            next.push(cell & !(1u64 << v));
            next.extend_from_slice(&cells[target + 1..]);
            self.run(next, depth + 1);
            tried.push(v);
        }
    }
}

/// Canonical form of the graph given by adjacency masks (`n <= 16`).
pub fn canonical_masks(masks: &[u64]) -> Canonical {
    let n = masks.len();
    assert!(n <= MAX_CANON_ORDER, "canonical form supports at most {MAX_CANON_ORDER} vertices");
    if n == 0 {
        return Canonical { code: CanonicalCode { n: 0, bits: 0 }, labeling: Vec::new() };
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search { masks, best: None, orbit: (0..n).collect() };
    search.run(vec![all], 0);
    let (bits, labeling) = search.best.expect("search visits at least one leaf");
    Canonical { code: CanonicalCode { n: n as u8, bits }, labeling }
}

/// Canonical form of `g`, or `None` if `g` has more than [`MAX_CANON_ORDER`] vertices.
pub fn canonical_form(g: &Graph) -> Option<Canonical> {
    (g.order() <= MAX_CANON_ORDER).then(|| canonical_masks(&g.to_masks()))
}

pub fn canonical_code(g: &Graph) -> Option<CanonicalCode> {
    canonical_form(g).map(|c| c.code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.order(), &edges).unwrap()
    }

    #[test]
    fn code_is_invariant_under_relabeling() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (2, 6)])
            .unwrap();
        let base = canonical_code(&g).unwrap();
        for perm in [[6, 5, 4, 3, 2, 1, 0], [1, 0, 3, 2, 5, 4, 6], [3, 6, 0, 5, 1, 2, 4]] {
            assert_eq!(canonical_code(&relabel(&g, &perm)).unwrap(), base);
        }
        assert_eq!(base.to_graph().order(), 7);
        assert_eq!(canonical_code(&base.to_graph()).unwrap(), base);
    }

    #[test]
    fn labeling_maps_onto_the_canonical_graph() {
        let g = cycle(6).with_edge(0, 3).unwrap();
        let c = canonical_form(&g).unwrap();
        let canon = c.code.to_graph();
        for (i, &a) in c.labeling.iter().enumerate() {
            for (j, &b) in c.labeling.iter().enumerate() {
                if i != j {
                    assert_eq!(canon.has_edge(i, j), g.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn distinguishes_cospectral_style_pairs() {
        // C6 versus two disjoint triangles: same degree sequence.
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&cycle(6)), canonical_code(&two_triangles));
        // C6 is K_{3,3} minus a perfect matching.
        let k33 = complete_bipartite(3, 3).without_edge(0, 3).without_edge(1, 4).without_edge(2, 5);
        assert_eq!(canonical_code(&cycle(6)), canonical_code(&k33));
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [10, 14, 16] {
            assert_eq!(canonical_code(&complete(n)).unwrap().to_graph(), complete(n));
            assert_eq!(canonical_code(&Graph::empty(n)).unwrap().to_graph().size(), 0);
            let c = canonical_code(&cycle(n)).unwrap();
            assert_eq!(c.to_graph().degree_sequence(), vec![2; n]);
        }
        let cocktail = {
            let mut g = complete(12);
            for i in 0..6 {
                g = g.without_edge(2 * i, 2 * i + 1);
            }
            g
        };
        assert!(canonical_code(&cocktail).is_some());
        assert!(canonical_code(&path(17)).is_none());
    }
}
