//! Induced embeddings, isomorphism, family freeness and the family preorder.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_code, MAX_CANON_ORDER};
use crate::families::{generate, FamilyError, FamilySpec};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`longest_induced_path`].
pub const LONGEST_PATH_CAP: usize = 30;

/// Order of the bone `B_i`.
pub fn bone_order(i: usize) -> usize {
    i + 6
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgraphError {
    #[error("graph of order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("open-ended family on the right-hand side of the preorder")]
    OpenEndedUnsupported,
    #[error("cannot parse family {0:?}")]
    Parse(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `map[h] = g`: an injective map from `H` into `G` witnessing `H ≺ G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    /// Checks the induced condition from scratch.
    pub fn is_induced(&self, h: &Graph, g: &Graph) -> bool {
        let m = &self.0;
        if m.len() != h.order() || m.iter().any(|&v| v >= g.order()) {
            return false;
        }
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if m[a] == m[b] || h.has_edge(a, b) != g.has_edge(m[a], m[b]) {
                    return false;
                }
            }
        }
        true
    }
}

struct EmbedSearch<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<u64>,
}

impl EmbedSearch<'_> {
    fn candidates(&self, depth: usize) -> Vec<usize> {
        let hv = self.order[depth];
        let mut cand: Vec<u64> = self.used.iter().map(|w| !w).collect();
        for &prev in &self.order[..depth] {
            let row = self.g.row(self.map[prev]).words();
            let adjacent = self.h.has_edge(hv, prev);
            for (c, &r) in cand.iter_mut().zip(row) {
                *c &= if adjacent { r } else { !r };
            }
        }
        let need = self.h.degree(hv);
        let mut out = Vec::new();
        for (wi, &word) in cand.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let v = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                if v < self.g.order() && self.g.degree(v) >= need {
                    out.push(v);
                }
            }
        }
        out.sort_by_key(|&v| (self.g.degree(v) - need, v));
        out
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let hv = self.order[depth];
        for v in self.candidates(depth) {
            self.map[hv] = v;
            self.used[v / 64] |= 1 << (v % 64);
            if self.run(depth + 1) {
                return true;
            }
            self.used[v / 64] &= !(1 << (v % 64));
        }
        false
    }
}

/// Search order on `H`: highest degree first, then always the vertex with the
/// most already-placed neighbors.
fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &u in h.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}

/// Finds an induced copy of `h` in `g`, if any.
pub fn induced_embedding(h: &Graph, g: &Graph) -> Option<Embedding> {
    if h.order() > g.order() || h.size() > g.size() || h.max_degree() > g.max_degree() {
        return None;
    }
    let words = g.order().div_ceil(64);
    let mut used = vec![0u64; words];
    if !g.order().is_multiple_of(64) {
        // Pad bits beyond the order so they never become candidates.
        used[words - 1] = !0u64 << (g.order() % 64);
    }
    let mut s = EmbedSearch { h, g, order: search_order(h), map: vec![0; h.order()], used };
    if s.run(0) { Some(Embedding(s.map)) } else { None }
}

/// A set of forbidden graphs, optionally together with every bone `B_i`.
#[derive(Debug, Clone)]
pub struct Family {
    members: Vec<Graph>,
    labels: Vec<String>,
    bones: bool,
}

impl Family {
    pub fn new() -> Self {
        Family { members: Vec::new(), labels: Vec::new(), bones: false }
    }

    pub fn from_graphs(graphs: impl IntoIterator<Item = Graph>) -> Self {
        let mut f = Family::new();
        for g in graphs {
            let label = g.to_graph6();
            f.push(label, g);
        }
        f
    }

    pub fn from_specs(specs: &[FamilySpec]) -> Self {
        let mut f = Family::new();
        for s in specs {
            f.push(s.to_string(), generate(s).graph);
        }
        f
    }

    pub fn push(&mut self, label: impl Into<String>, g: Graph) {
        self.labels.push(label.into());
        self.members.push(g);
    }

    /// Adds the open-ended set `{B_i : i ≥ 0}`.
    pub fn with_bones(mut self) -> Self {
        self.bones = true;
        self
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_bones(&self) -> bool {
        self.bones
    }

    /// Finite members plus every bone small enough to fit in a graph of order `max_order`.
    pub fn materialize(&self, max_order: usize) -> Vec<(String, Graph)> {
        let mut out: Vec<(String, Graph)> =
            self.labels.iter().cloned().zip(self.members.iter().cloned()).collect();
        if self.bones {
            let mut i = 0;
            while bone_order(i) <= max_order {
                let spec = FamilySpec::b(i);
                out.push((spec.to_string(), generate(&spec).graph));
                i += 1;
            }
        }
        out
    }
}

impl Default for Family {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = self.labels.clone();
        if self.bones {
            parts.push("bones".into());
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Splits on commas that are not inside parentheses.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|t| !t.is_empty());
    out
}

/// `star(4), T(3)` or `{star(4), bones}`; `B*` is a synonym for `bones`.
impl FromStr for Family {
    type Err = SubgraphError;

    fn from_str(s: &str) -> Result<Self, SubgraphError> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut fam = Family::new();
        for token in split_top_level(body) {
            if token.eq_ignore_ascii_case("bones") || token.eq_ignore_ascii_case("b*") {
                fam.bones = true;
            } else {
                let spec: FamilySpec = token.parse()?;
                fam.push(spec.to_string(), generate(&spec).graph);
            }
        }
        if fam.members.is_empty() && !fam.bones {
            return Err(SubgraphError::Parse(s.to_string()));
        }
        Ok(fam)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeVerdict {
    Free,
    Contains { member: String, embedding: Embedding },
}

impl FreeVerdict {
    pub fn is_free(&self) -> bool {
        matches!(self, FreeVerdict::Free)
    }
}

/// Whether no member of `fam` is an induced subgraph of `g`, with a witness otherwise.
pub fn is_free(g: &Graph, fam: &Family) -> FreeVerdict {
    for (label, h) in fam.materialize(g.order()) {
        if let Some(embedding) = induced_embedding(&h, g) {
            return FreeVerdict::Contains { member: label, embedding };
        }
    }
    FreeVerdict::Free
}

/// `f1 ≤ f2`: every member of `f2` contains some member of `f1`.
pub fn family_leq(f1: &Family, f2: &Family) -> Result<bool, SubgraphError> {
    if f2.bones {
        return Err(SubgraphError::OpenEndedUnsupported);
    }
    Ok(f2.members.iter().all(|h2| !is_free(h2, f1).is_free()))
}

/// Vertices whose neighborhood holds three pairwise nonadjacent vertices.
pub fn claw_centers(g: &Graph) -> VertexSet {
    let mut out = VertexSet::empty(g.order());
    'v: for v in 0..g.order() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                if nb[j + 1..].iter().any(|&c| !g.has_edge(a, c) && !g.has_edge(b, c)) {
                    out.insert(v);
                    continue 'v;
                }
            }
        }
    }
    out
}

pub fn is_claw_free(g: &Graph) -> bool {
    claw_centers(g).is_empty()
}

struct PathSearch {
    adj: Vec<u64>,
    best: Vec<usize>,
    path: Vec<usize>,
}

impl PathSearch {
    /// Vertices reachable from `from` inside `allowed`, counting `from`.
    fn reach(&self, from: usize, allowed: u64) -> usize {
        let mut seen = 1u64 << from;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & allowed;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize
    }

    /// `blocked` holds the path and the neighbors of every path vertex but the last.
    fn grow(&mut self, blocked: u64) {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        let last = *self.path.last().unwrap();
        let allowed = !blocked & !(1u64 << last);
        if self.path.len() - 1 + self.reach(last, allowed | (1 << last)) <= self.best.len() {
            return;
        }
        let mut cands = self.adj[last] & !blocked;
        let next_blocked = blocked | self.adj[last];
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            self.path.push(v);
            self.grow(next_blocked | (1 << v));
            self.path.pop();
        }
    }
}

/// A longest induced path, lexicographically smallest among the longest.
pub fn longest_induced_path(g: &Graph) -> Result<Vec<usize>, SubgraphError> {
    let n = g.order();
    if n > LONGEST_PATH_CAP {
        return Err(SubgraphError::TooLarge { order: n, cap: LONGEST_PATH_CAP });
    }
    let mut s = PathSearch { adj: g.to_masks(), best: Vec::new(), path: Vec::new() };
    for start in 0..n {
        s.path.push(start);
        s.grow(1 << start);
        s.path.pop();
    }
    Ok(s.best)
}

/// Isomorphism test through canonical codes.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, SubgraphError> {
    for x in [g, h] {
        if x.order() > MAX_CANON_ORDER {
            return Err(SubgraphError::TooLarge { order: x.order(), cap: MAX_CANON_ORDER });
        }
    }
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_code(g) == canonical_code(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn fam(specs: &str) -> Family {
        specs.parse().unwrap()
    }

    #[test]
    fn embedding_examples() {
        let e = induced_embedding(&star(3), &star(4)).unwrap();
        assert!(e.is_induced(&star(3), &star(4)));
        assert!(induced_embedding(&star(3), &cycle(6)).is_none());
        assert!(induced_embedding(&path(4), &cycle(5)).is_some());
        assert!(induced_embedding(&path(4), &cycle(4)).is_none());
        let b0 = generate(&FamilySpec::b(0)).graph;
        assert!(induced_embedding(&b0, &generate(&FamilySpec::f1(5)).graph).is_none());
        assert!(induced_embedding(&Graph::empty(0), &path(2)).is_some());
    }

    #[test]
    fn embedding_works_past_one_word() {
        let g = path(70);
        let e = induced_embedding(&path(66), &g).unwrap();
        assert!(e.is_induced(&path(66), &g));
        assert!(induced_embedding(&path(71), &g).is_none());
        assert!(induced_embedding(&star(3), &g).is_none());
    }

    #[test]
    fn freeness_examples() {
        assert!(is_free(&cycle(7), &fam("star(3)")).is_free());
        match is_free(&star(4), &fam("star(3)")) {
            FreeVerdict::Contains { member, embedding } => {
                assert_eq!(member, "star(3)");
                assert!(embedding.is_induced(&star(3), &star(4)));
            }
            FreeVerdict::Free => panic!("claw not found"),
        }
        let f14 = generate(&FamilySpec::f1(4)).graph;
        assert!(is_free(&f14, &fam("bones")).is_free());
        assert!(!is_free(&generate(&FamilySpec::b(2)).graph, &fam("B*")).is_free());
    }

    #[test]
    fn preorder_examples() {
        let bones3 = Family::from_specs(&[
            FamilySpec::star(4),
            FamilySpec::b(0),
            FamilySpec::b(1),
            FamilySpec::b(2),
            FamilySpec::b(3),
        ]);
        assert!(family_leq(&fam("star(4), T(3)"), &bones3).unwrap());
        assert!(family_leq(&fam("star(4), path(4)"), &bones3).unwrap());
        let a4 = Family::from_specs(&crate::families::characterization_family(
            crate::families::Variant::A,
            4,
        )
        .unwrap());
        assert!(family_leq(&a4, &fam("star(4), F1(4), frakK(4,1)")).unwrap());
        let p2 = fam("path(2)");
        let p23 = fam("path(2), path(3)");
        assert!(family_leq(&p2, &p23).unwrap());
        assert!(family_leq(&p23, &p2).unwrap());
        assert_eq!(
            family_leq(&p2, &fam("star(3), bones")),
            Err(SubgraphError::OpenEndedUnsupported)
        );
    }

    #[test]
    fn family_parsing() {
        let f = fam("{frakK(4,2), H3(2,5), bones}");
        assert_eq!(f.members().len(), 2);
        assert!(f.has_bones());
        assert_eq!(f.to_string(), "{frakK(4,2), H3(2,5), bones}");
        assert!("".parse::<Family>().is_err());
        assert!("star(".parse::<Family>().is_err());
    }

    #[test]
    fn claw_center_examples() {
        assert_eq!(claw_centers(&star(3)).to_vec(), vec![0]);
        for n in 3..9 {
            assert!(claw_centers(&cycle(n)).is_empty());
        }
        let t3 = generate(&FamilySpec::t(3));
        assert_eq!(claw_centers(&t3.graph).to_vec(), vec![t3.landmarks["branch"]]);
        assert!(claw_centers(&complete(6)).is_empty());
    }

    #[test]
    fn longest_induced_path_examples() {
        assert_eq!(longest_induced_path(&path(6)).unwrap(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(longest_induced_path(&cycle(6)).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(longest_induced_path(&complete(4)).unwrap(), vec![0, 1]);
        assert_eq!(longest_induced_path(&Graph::empty(3)).unwrap(), vec![0]);
        assert!(longest_induced_path(&Graph::empty(0)).unwrap().is_empty());
        assert!(matches!(
            longest_induced_path(&path(31)),
            Err(SubgraphError::TooLarge { .. })
        ));
        let p30 = longest_induced_path(&path(30)).unwrap();
        assert_eq!(p30.len(), 30);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(is_isomorphic(&generate(&FamilySpec::t(1)).graph, &path(3)).unwrap());
        assert!(!is_isomorphic(&star(3), &path(4)).unwrap());
        let k33 = complete_bipartite(3, 3).without_edge(0, 3).without_edge(1, 4).without_edge(2, 5);
        assert!(is_isomorphic(&cycle(6), &k33).unwrap());
        let f1 = generate(&FamilySpec::f1(1)).graph;
        assert!(is_isomorphic(&f1, &star(3)).unwrap());
        assert!(is_isomorphic(&path(17), &path(17)).is_err());
    }
}
