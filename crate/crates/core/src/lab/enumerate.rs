//! Connected graphs up to isomorphism by canonical augmentation.
//!
//! A child is a parent plus one new vertex joined to a non-empty subset. Its
//! canonical parent is obtained by deleting a distinguished non-cut vertex:
//! among non-cut vertices of least invariant, the one placed last by the
//! canonical labeling. A child is kept iff its canonical parent is the parent
//! it was built from, and children of one parent are deduplicated by code.
//! The same scheme works for any hereditary property, which is how the
//! claw-free level 10 is reached.

use std::collections::HashSet;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::LabError;
use crate::canon::{canonical_masks, CanonicalCode};
use crate::graph::{Graph, MaskIter};

/// Largest order of the full connected enumeration.
pub const MAX_ENUM_ORDER: usize = 9;
/// Largest order of the claw-free enumeration.
pub const MAX_CLAW_FREE_ORDER: usize = 10;

fn cut_vertices(masks: &[u64]) -> u64 {
    let n = masks.len();
    let all = (1u64 << n) - 1;
    let mut cuts = 0;
    for v in 0..n {
        let rest = all & !(1 << v);
        if rest == 0 {
            continue;
        }
        let start = rest.trailing_zeros();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = masks[u] & rest & !seen;
            seen |= new;
            frontier |= new;
        }
        if seen != rest {
            cuts |= 1 << v;
        }
    }
    cuts
}

fn invariant(masks: &[u64], v: usize) -> (u32, u64) {
    let mut nd: Vec<u32> = MaskIter(masks[v]).map(|u| masks[u].count_ones()).collect();
    nd.sort_unstable();
    let packed = nd.iter().fold(0u64, |acc, &d| (acc << 4) | d as u64);
    (masks[v].count_ones(), packed)
}

fn delete_vertex(masks: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    masks
        .iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

/// Canonical code of the child's canonical parent, if the new vertex `w` can
/// be the distinguished one.
fn canonical_parent(masks: &[u64], w: usize) -> Option<CanonicalCode> {
    let cuts = cut_vertices(masks);
    let n = masks.len();
    let best = (0..n).filter(|&v| cuts & (1 << v) == 0).map(|v| invariant(masks, v)).min()?;
    if invariant(masks, w) != best {
        return None;
    }
    let canon = canonical_masks(masks);
    let chosen = *canon
        .labeling
        .iter()
        .rev()
        .find(|&&v| cuts & (1 << v) == 0 && invariant(masks, v) == best)
        .expect("some vertex has the least invariant");
    Some(canonical_masks(&delete_vertex(masks, chosen)).code)
}

fn children(parent: &CanonicalCode, keep: fn(&[u64]) -> bool) -> Vec<CanonicalCode> {
    let base = parent.to_masks();
    let k = base.len();
    let w = k;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut masks = base.clone();
    masks.push(0);
    for subset in 1u64..(1 << k) {
        for u in 0..k {
            masks[u] = base[u] | (((subset >> u) & 1) << w);
        }
        masks[w] = subset;
        if !keep(&masks) {
            continue;
        }
        if canonical_parent(&masks, w) != Some(*parent) {
            continue;
        }
        let code = canonical_masks(&masks).code;
        if seen.insert(code) {
            out.push(code);
        }
    }
    out
}

/// Cached levels of one hereditary class.
pub(super) struct Levels {
    keep: fn(&[u64]) -> bool,
    max: usize,
    levels: Mutex<Vec<Arc<Vec<CanonicalCode>>>>,
}

impl Levels {
    const fn new(keep: fn(&[u64]) -> bool, max: usize) -> Self {
        Levels { keep, max, levels: Mutex::new(Vec::new()) }
    }

    pub(super) fn level(&self, n: usize) -> Result<Arc<Vec<CanonicalCode>>, LabError> {
        if n == 0 || n > self.max {
            return Err(LabError::TooLarge { order: n, cap: self.max });
        }
        let mut levels = self.levels.lock().expect("enumeration cache poisoned");
        if levels.is_empty() {
            levels.push(Arc::new(vec![canonical_masks(&[0]).code]));
        }
        while levels.len() < n {
            let prev = levels.last().unwrap().clone();
            let keep = self.keep;
            let next: Vec<CanonicalCode> =
                prev.par_iter().flat_map_iter(|p| children(p, keep)).collect();
            levels.push(Arc::new(next));
        }
        Ok(levels[n - 1].clone())
    }
}

fn any_graph(_: &[u64]) -> bool {
    true
}

fn claw_free_masks(masks: &[u64]) -> bool {
    // Only the last vertex can create a new claw: as center or as a leaf.
    let w = masks.len() - 1;
    let is_center = |c: usize| {
        let nb: Vec<usize> = MaskIter(masks[c]).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if masks[a] >> b & 1 == 1 {
                    continue;
                }
                if nb[j + 1..].iter().any(|&d| masks[a] >> d & 1 == 0 && masks[b] >> d & 1 == 0) {
                    return true;
                }
            }
        }
        false
    };
    !is_center(w) && MaskIter(masks[w]).all(|c| !is_center(c))
}

static CONNECTED: OnceLock<Levels> = OnceLock::new();
static CLAW_FREE: OnceLock<Levels> = OnceLock::new();

pub(super) fn connected_levels() -> &'static Levels {
    CONNECTED.get_or_init(|| Levels::new(any_graph, MAX_ENUM_ORDER))
}

pub(super) fn claw_free_levels() -> &'static Levels {
    CLAW_FREE.get_or_init(|| Levels::new(claw_free_masks, MAX_CLAW_FREE_ORDER))
}

/// Iterator over the graphs of one level, in canonical labeling.
#[derive(Clone)]
pub struct EnumerationStream {
    order: usize,
    codes: Arc<Vec<CanonicalCode>>,
    next: usize,
}

impl EnumerationStream {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn codes(&self) -> &[CanonicalCode] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

impl Iterator for EnumerationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let code = self.codes.get(self.next)?;
        self.next += 1;
        Some(code.to_graph())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.codes.len() - self.next;
        (left, Some(left))
    }
}

/// Every connected graph on `n` vertices, once per isomorphism class.
pub fn enumerate_connected(n: usize) -> Result<EnumerationStream, LabError> {
    Ok(EnumerationStream { order: n, codes: connected_levels().level(n)?, next: 0 })
}

/// Every connected claw-free graph on `n` vertices, once per isomorphism class.
pub fn enumerate_claw_free(n: usize) -> Result<EnumerationStream, LabError> {
    Ok(EnumerationStream { order: n, codes: claw_free_levels().level(n)?, next: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::subgraph::is_claw_free;

    /// Connected isomorphism classes on `n` vertices by scanning every labeled graph.
    fn brute(n: usize, claw_free_only: bool) -> usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut classes = HashSet::new();
        for bits in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() && (!claw_free_only || is_claw_free(&g)) {
                classes.insert(canonical_code(&g).unwrap());
            }
        }
        classes.len()
    }

    #[test]
    fn small_counts_match_brute_force() {
        for n in 1..=6 {
            assert_eq!(enumerate_connected(n).unwrap().len(), brute(n, false), "n={n}");
            assert_eq!(enumerate_claw_free(n).unwrap().len(), brute(n, true), "n={n}");
        }
    }

    #[test]
    fn known_counts() {
        let expect = [1, 1, 2, 6, 21, 112, 853, 11117];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(enumerate_connected(i + 1).unwrap().len(), c);
        }
        let claw = [1, 1, 2, 5, 14, 50, 191, 881];
        for (i, &c) in claw.iter().enumerate() {
            assert_eq!(enumerate_claw_free(i + 1).unwrap().len(), c);
        }
    }

    #[test]
    fn emitted_graphs_are_connected_and_distinct() {
        let graphs: Vec<Graph> = enumerate_connected(6).unwrap().collect();
        assert!(graphs.iter().all(Graph::is_connected));
        let codes: HashSet<_> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        assert_eq!(codes.len(), graphs.len());
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(10).is_err());
        assert!(enumerate_claw_free(11).is_err());
    }

    #[test]
    fn deletion_keeps_labels_in_order() {
        // Path 0-1-2-3 minus vertex 1 leaves 0 isolated and 1-2 joined.
        let masks = [0b0010, 0b0101, 0b1010, 0b0100];
        assert_eq!(delete_vertex(&masks, 1), vec![0, 0b100, 0b010]);
        assert_eq!(cut_vertices(&masks), 0b0110);
    }
}
