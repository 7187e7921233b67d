//! Generators for the named constructions, with closed-form deficiencies.
//!
//! Attaching a path `P_k` at a vertex `v` identifies one end of a fresh `P_k`
//! with `v` and so adds `k − 1` vertices. Attaching `T_p` at `v` identifies
//! the end of `T_p` with `v`. Labels follow one contract everywhere: spine
//! vertices first in path order, then attachments in definition order; every
//! interesting vertex is also recorded as a named landmark.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Generators refuse to build anything larger than this many vertices.
pub const MAX_GENERATED_ORDER: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameters for {kind}: {reason}")]
    BadParams { kind: String, reason: String },
    #[error("cannot parse family spec {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Empty,
    CompleteBipartite,
    Star,
    F1,
    F2,
    F3,
    F4,
    T,
    B,
    FrakK,
    FrakF,
    H1,
    H3,
    H4,
    FrakH,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 18] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::Empty,
        FamilyKind::CompleteBipartite,
        FamilyKind::Star,
        FamilyKind::F1,
        FamilyKind::F2,
        FamilyKind::F3,
        FamilyKind::F4,
        FamilyKind::T,
        FamilyKind::B,
        FamilyKind::FrakK,
        FamilyKind::FrakF,
        FamilyKind::H1,
        FamilyKind::H3,
        FamilyKind::H4,
        FamilyKind::FrakH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::Empty => "empty",
            FamilyKind::CompleteBipartite => "bipartite",
            FamilyKind::Star => "star",
            FamilyKind::F1 => "F1",
            FamilyKind::F2 => "F2",
            FamilyKind::F3 => "F3",
            FamilyKind::F4 => "F4",
            FamilyKind::T => "T",
            FamilyKind::B => "B",
            FamilyKind::FrakK => "frakK",
            FamilyKind::FrakF => "frakF",
            FamilyKind::H1 => "H1",
            FamilyKind::H3 => "H3",
            FamilyKind::H4 => "H4",
            FamilyKind::FrakH => "frakH",
        }
    }

    fn from_name(s: &str) -> Option<FamilyKind> {
        let lower = s.to_ascii_lowercase();
        let kind = match lower.as_str() {
            "path" | "p" => FamilyKind::Path,
            "cycle" | "c" => FamilyKind::Cycle,
            "complete" | "k" => FamilyKind::Complete,
            "empty" | "e" => FamilyKind::Empty,
            "bipartite" | "completebipartite" | "kst" => FamilyKind::CompleteBipartite,
            "star" => FamilyKind::Star,
            "f1" => FamilyKind::F1,
            "f2" => FamilyKind::F2,
            "f3" => FamilyKind::F3,
            "f4" => FamilyKind::F4,
            "t" => FamilyKind::T,
            "b" => FamilyKind::B,
            "frakk" => FamilyKind::FrakK,
            "frakf" => FamilyKind::FrakF,
            "h1" => FamilyKind::H1,
            "h3" => FamilyKind::H3,
            "h4" => FamilyKind::H4,
            "frakh" => FamilyKind::FrakH,
            _ => return None,
        };
        Some(kind)
    }

    fn arity(self) -> usize {
        match self {
            FamilyKind::CompleteBipartite
            | FamilyKind::FrakK
            | FamilyKind::FrakF
            | FamilyKind::H1
            | FamilyKind::H3
            | FamilyKind::H4 => 2,
            FamilyKind::FrakH => 3,
            _ => 1,
        }
    }

    /// Smallest admissible value of each parameter.
    fn minimums(self) -> &'static [usize] {
        match self {
            FamilyKind::Cycle => &[3],
            FamilyKind::B => &[0],
            FamilyKind::CompleteBipartite | FamilyKind::FrakK | FamilyKind::FrakF => &[1, 1],
            FamilyKind::H1 | FamilyKind::H3 | FamilyKind::H4 => &[0, 1],
            FamilyKind::FrakH => &[0, 1, 1],
            _ => &[1],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named generator with its integer parameters, e.g. `frakK(4,2)` or `H3(2,5)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    kind: FamilyKind,
    params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Result<Self, FamilyError> {
        let bad = |reason: String| FamilyError::BadParams { kind: kind.name().into(), reason };
        if params.len() != kind.arity() {
            return Err(bad(format!("expected {} parameters, got {}", kind.arity(), params.len())));
        }
        for (i, (&p, &min)) in params.iter().zip(kind.minimums()).enumerate() {
            if p < min {
                return Err(bad(format!("parameter {} must be at least {min}, got {p}", i + 1)));
            }
        }
        let spec = FamilySpec { kind, params };
        match spec.checked_order() {
            Some(n) if n <= MAX_GENERATED_ORDER => Ok(spec),
            _ => Err(bad(format!("more than {MAX_GENERATED_ORDER} vertices"))),
        }
    }

    fn of(kind: FamilyKind, params: &[usize]) -> Self {
        Self::new(kind, params.to_vec()).expect("valid family parameters")
    }

    pub fn path(n: usize) -> Self {
        Self::of(FamilyKind::Path, &[n])
    }
    pub fn cycle(n: usize) -> Self {
        Self::of(FamilyKind::Cycle, &[n])
    }
    pub fn complete(n: usize) -> Self {
        Self::of(FamilyKind::Complete, &[n])
    }
    pub fn empty(n: usize) -> Self {
        Self::of(FamilyKind::Empty, &[n])
    }
    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        Self::of(FamilyKind::CompleteBipartite, &[s, t])
    }
    /// `K_{1,n}`.
    pub fn star(n: usize) -> Self {
        Self::of(FamilyKind::Star, &[n])
    }
    pub fn f1(n: usize) -> Self {
        Self::of(FamilyKind::F1, &[n])
    }
    pub fn f2(n: usize) -> Self {
        Self::of(FamilyKind::F2, &[n])
    }
    pub fn f3(n: usize) -> Self {
        Self::of(FamilyKind::F3, &[n])
    }
    pub fn f4(n: usize) -> Self {
        Self::of(FamilyKind::F4, &[n])
    }
    pub fn t(n: usize) -> Self {
        Self::of(FamilyKind::T, &[n])
    }
    pub fn b(i: usize) -> Self {
        Self::of(FamilyKind::B, &[i])
    }
    pub fn frak_k(n: usize, p: usize) -> Self {
        Self::of(FamilyKind::FrakK, &[n, p])
    }
    pub fn frak_f(n: usize, p: usize) -> Self {
        Self::of(FamilyKind::FrakF, &[n, p])
    }
    pub fn h1(s: usize, t: usize) -> Self {
        Self::of(FamilyKind::H1, &[s, t])
    }
    pub fn h3(s: usize, t: usize) -> Self {
        Self::of(FamilyKind::H3, &[s, t])
    }
    pub fn h4(s: usize, t: usize) -> Self {
        Self::of(FamilyKind::H4, &[s, t])
    }
    pub fn frak_h(s: usize, t: usize, p: usize) -> Self {
        Self::of(FamilyKind::FrakH, &[s, t, p])
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    fn checked_order(&self) -> Option<usize> {
        let p = &self.params;
        let add = |a: usize, b: usize| a.checked_add(b);
        let mul = |a: usize, b: usize| a.checked_mul(b);
        match self.kind {
            FamilyKind::Path
            | FamilyKind::Cycle
            | FamilyKind::Complete
            | FamilyKind::Empty => Some(p[0]),
            FamilyKind::CompleteBipartite => add(p[0], p[1]),
            FamilyKind::Star => add(p[0], 1),
            FamilyKind::F1 | FamilyKind::F3 | FamilyKind::F4 => add(mul(p[0], 2)?, 2),
            FamilyKind::F2 => mul(p[0], 3),
            FamilyKind::T => add(p[0], 2),
            FamilyKind::B => add(p[0], 6),
            FamilyKind::FrakK => mul(p[0], add(p[1], 2)?),
            FamilyKind::FrakF => add(add(mul(p[0], 2)?, p[1])?, 2),
            FamilyKind::H1 => add(mul(add(p[0], 1)?, p[1])?, mul(p[0], 2)?),
            FamilyKind::H3 | FamilyKind::H4 => add(add(mul(add(p[0], 1)?, p[1])?, mul(p[0], 2)?)?, 2),
            FamilyKind::FrakH => add(mul(add(p[0], 1)?, p[1])?, mul(p[0], add(p[2], 2)?)?),
        }
    }

    /// Closed-form vertex count of the generated graph.
    pub fn order(&self) -> usize {
        self.checked_order().expect("validated at construction")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(usize::to_string).collect();
        write!(f, "{}({})", self.kind.name(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let s = s.trim();
        let parse_err = || FamilyError::Parse(s.to_string());
        let open = s.find('(').ok_or_else(parse_err)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(parse_err)?;
        let kind = FamilyKind::from_name(s[..open].trim()).ok_or_else(parse_err)?;
        let params = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| parse_err()))
            .collect::<Result<Vec<_>, _>>()?;
        FamilySpec::new(kind, params)
    }
}

/// A generated graph plus named vertices of interest.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratedGraph {
    pub spec: FamilySpec,
    #[serde(skip)]
    pub graph: Graph,
    pub landmarks: BTreeMap<String, usize>,
}

#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    landmarks: BTreeMap<String, usize>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn mark(&mut self, name: impl Into<String>, v: usize) {
        self.landmarks.insert(name.into(), v);
    }

    /// A fresh path on `len` vertices.
    fn path(&mut self, len: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..len).map(|_| self.vertex()).collect();
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
        vs
    }

    /// Attaches `P_len` at `at`; returns the whole path starting at `at`.
    fn attach_path(&mut self, at: usize, len: usize) -> Vec<usize> {
        let mut vs = vec![at];
        for _ in 1..len {
            let v = self.vertex();
            self.edge(*vs.last().unwrap(), v);
            vs.push(v);
        }
        vs
    }

    /// Attaches `T_p` with its end at `at`; returns the branch vertex.
    fn attach_t(&mut self, at: usize, p: usize) -> usize {
        let spine = self.attach_path(at, p);
        let branch = *spine.last().unwrap();
        for _ in 0..2 {
            let leaf = self.vertex();
            self.edge(branch, leaf);
        }
        branch
    }

    fn finish(self, spec: &FamilySpec) -> GeneratedGraph {
        let graph = Graph::from_edges(self.n, &self.edges).expect("generator emits valid edges");
        GeneratedGraph { spec: spec.clone(), graph, landmarks: self.landmarks }
    }
}

/// Builds the graph described by `spec`.
pub fn generate(spec: &FamilySpec) -> GeneratedGraph {
    let mut b = Builder::default();
    let p = spec.params();
    match spec.kind() {
        FamilyKind::Path => {
            let vs = b.path(p[0]);
            b.mark("end[1]", vs[0]);
            b.mark("end[2]", *vs.last().unwrap());
        }
        FamilyKind::Cycle => {
            let vs = b.path(p[0]);
            b.edge(*vs.last().unwrap(), vs[0]);
        }
        FamilyKind::Complete => {
            let vs: Vec<usize> = (0..p[0]).map(|_| b.vertex()).collect();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    b.edge(u, v);
                }
            }
        }
        FamilyKind::Empty => {
            for _ in 0..p[0] {
                b.vertex();
            }
        }
        FamilyKind::CompleteBipartite => {
            let left: Vec<usize> = (0..p[0]).map(|_| b.vertex()).collect();
            let right: Vec<usize> = (0..p[1]).map(|_| b.vertex()).collect();
            for &u in &left {
                for &v in &right {
                    b.edge(u, v);
                }
            }
        }
        FamilyKind::Star => {
            let c = b.vertex();
            b.mark("center", c);
            for _ in 0..p[0] {
                let leaf = b.vertex();
                b.edge(c, leaf);
            }
        }
        FamilyKind::F1 => {
            let spine = b.path(2 * p[0] + 1);
            let center = spine[p[0]];
            let pendant = b.vertex();
            b.edge(center, pendant);
            b.mark("center", center);
            b.mark("pendant", pendant);
        }
        FamilyKind::F2 => {
            let tri = [b.vertex(), b.vertex(), b.vertex()];
            b.edge(tri[0], tri[1]);
            b.edge(tri[1], tri[2]);
            b.edge(tri[0], tri[2]);
            for (i, &v) in tri.iter().enumerate() {
                b.mark(format!("triangle[{}]", i + 1), v);
                let path = b.attach_path(v, p[0]);
                b.mark(format!("end[{}]", i + 1), *path.last().unwrap());
            }
        }
        FamilyKind::F3 | FamilyKind::F4 => {
            let c = b.path(4);
            b.edge(c[3], c[0]);
            if spec.kind() == FamilyKind::F4 {
                b.edge(c[0], c[2]);
            }
            for (i, &v) in c.iter().enumerate() {
                b.mark(format!("cycle[{}]", i + 1), v);
            }
            for (i, v) in [c[0], c[2]].into_iter().enumerate() {
                let path = b.attach_path(v, p[0]);
                b.mark(format!("end[{}]", i + 1), *path.last().unwrap());
            }
        }
        FamilyKind::T => {
            let end = b.vertex();
            let branch = b.attach_t(end, p[0]);
            b.mark("end", end);
            b.mark("branch", branch);
        }
        FamilyKind::B => {
            let end = b.vertex();
            let branch = b.attach_t(end, p[0] + 2);
            for _ in 0..2 {
                let leaf = b.vertex();
                b.edge(end, leaf);
            }
            b.mark("end", end);
            b.mark("branch", branch);
        }
        FamilyKind::FrakK => {
            let clique: Vec<usize> = (0..p[0]).map(|_| b.vertex()).collect();
            for (i, &u) in clique.iter().enumerate() {
                for &v in &clique[i + 1..] {
                    b.edge(u, v);
                }
            }
            for (i, &v) in clique.iter().enumerate() {
                b.mark(format!("clique[{}]", i + 1), v);
                let branch = b.attach_t(v, p[1]);
                b.mark(format!("branch[{}]", i + 1), branch);
            }
        }
        FamilyKind::FrakF => {
            let tri = [b.vertex(), b.vertex(), b.vertex()];
            b.edge(tri[0], tri[1]);
            b.edge(tri[1], tri[2]);
            b.edge(tri[0], tri[2]);
            for (i, &v) in tri.iter().enumerate() {
                b.mark(format!("triangle[{}]", i + 1), v);
            }
            let branch = b.attach_t(tri[0], p[1]);
            b.mark("branch", branch);
            for (i, &v) in tri[1..].iter().enumerate() {
                let path = b.attach_path(v, p[0]);
                b.mark(format!("end[{}]", i + 1), *path.last().unwrap());
            }
        }
        FamilyKind::H1 | FamilyKind::H3 | FamilyKind::H4 | FamilyKind::FrakH => {
            build_chain(&mut b, spec);
        }
    }
    b.finish(spec)
}

/// The `s + 1` paths `Q_i = u_i^1 … u_i^t` joined by gadgets between `u_i^t` and `u_{i+1}^1`.
fn build_chain(b: &mut Builder, spec: &FamilySpec) {
    let (s, t) = (spec.params()[0], spec.params()[1]);
    let q: Vec<Vec<usize>> = (0..=s).map(|_| b.path(t)).collect();
    for (i, path) in q.iter().enumerate() {
        for (j, &v) in path.iter().enumerate() {
            b.mark(format!("u[{}][{}]", i + 1, j + 1), v);
        }
    }
    let last = |i: usize| *q[i].last().unwrap();
    let first = |i: usize| q[i][0];
    match spec.kind() {
        FamilyKind::H1 => {
            for i in 0..s {
                let (v, w) = (b.vertex(), b.vertex());
                b.edge(v, w);
                b.edge(v, last(i));
                b.edge(v, first(i + 1));
                b.mark(format!("v[{}]", i + 1), v);
                b.mark(format!("w[{}]", i + 1), w);
            }
        }
        FamilyKind::H3 | FamilyKind::H4 => {
            let (x, y) = (b.vertex(), b.vertex());
            b.edge(x, first(0));
            b.edge(last(s), y);
            b.mark("x", x);
            b.mark("y", y);
            for i in 0..s {
                let (v, w) = (b.vertex(), b.vertex());
                for z in [v, w] {
                    b.edge(z, last(i));
                    b.edge(z, first(i + 1));
                }
                if spec.kind() == FamilyKind::H4 {
                    b.edge(last(i), first(i + 1));
                }
                b.mark(format!("v[{}]", i + 1), v);
                b.mark(format!("w[{}]", i + 1), w);
            }
        }
        FamilyKind::FrakH => {
            let p = spec.params()[2];
            for i in 0..s {
                let v = b.vertex();
                let branch = b.attach_t(v, p);
                b.edge(last(i), first(i + 1));
                b.edge(last(i), v);
                b.edge(first(i + 1), v);
                b.mark(format!("v[{}]", i + 1), v);
                b.mark(format!("branch[{}]", i + 1), branch);
            }
        }
        _ => unreachable!(),
    }
}

/// Deficiency given by a closed formula, or `None` for kinds without one.
///
/// `None` is deliberate for `F1`–`F4`, `T`, `B` and `frakF`: their deficiency
/// is computed on demand and never treated as ground truth.
pub fn predicted_deficiency(spec: &FamilySpec) -> Option<usize> {
    let p = spec.params();
    let parity = |x: usize| x % 2;
    match spec.kind() {
        FamilyKind::Path | FamilyKind::Cycle | FamilyKind::Complete => Some(parity(p[0])),
        FamilyKind::Empty => Some(p[0]),
        FamilyKind::CompleteBipartite => Some(p[0].abs_diff(p[1])),
        FamilyKind::Star => Some(p[0] - 1),
        FamilyKind::FrakK => {
            let (n, q) = (p[0], p[1]);
            Some(if (n * (q + 1)) % 2 == 0 { n } else { n + 1 })
        }
        FamilyKind::FrakH => {
            let (s, t, q) = (p[0], p[1], p[2]);
            // The value lies in {s, s + 1} and has the parity of the order
            // t(s+1) + s(q+2), so it is s exactly when t(s+1) + s(q+1) is even.
            Some(if (t * (s + 1) + s * (q + 1)) % 2 == 0 { s } else { s + 1 })
        }
        FamilyKind::H1 | FamilyKind::H3 | FamilyKind::H4 => {
            let (s, t) = (p[0], p[1]);
            Some(if t % 2 == 1 { s + 1 } else { 0 })
        }
        FamilyKind::F1
        | FamilyKind::F2
        | FamilyKind::F3
        | FamilyKind::F4
        | FamilyKind::T
        | FamilyKind::B
        | FamilyKind::FrakF => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// `{K_{1,n}, T_n, 𝔉K_n^p : 1 ≤ p ≤ n/2 − 1}`
    A,
    /// `{K_{1,n}, F_n^1..F_n^4, 𝔉F_n^p, 𝔉K_n^p : 1 ≤ p ≤ n − 2}`
    B,
}

impl FromStr for Variant {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s.trim() {
            "A" | "a" => Ok(Variant::A),
            "B" | "b" => Ok(Variant::B),
            other => Err(FamilyError::Parse(other.to_string())),
        }
    }
}

/// One of the two bounded-deficiency obstruction families, for even `n ≥ 4`.
pub fn characterization_family(variant: Variant, n: usize) -> Result<Vec<FamilySpec>, FamilyError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(FamilyError::BadParams {
            kind: format!("family {variant:?}"),
            reason: format!("n must be an even integer at least 4, got {n}"),
        });
    }
    let mut out = vec![FamilySpec::star(n)];
    match variant {
        Variant::A => {
            out.push(FamilySpec::t(n));
            out.extend((1..n / 2).map(|p| FamilySpec::frak_k(n, p)));
        }
        Variant::B => {
            out.extend([FamilySpec::f1(n), FamilySpec::f2(n), FamilySpec::f3(n), FamilySpec::f4(n)]);
            out.extend((1..=n - 2).map(|p| FamilySpec::frak_f(n, p)));
            out.extend((1..=n - 2).map(|p| FamilySpec::frak_k(n, p)));
        }
    }
    Ok(out)
}

/// Graphs of deficiency above `c` that every bounded-deficiency family must hit,
/// instantiated with `s = c + 1`, `p = h + 1` and the smallest odd `t > h`.
pub fn witness_graphs(c: usize, h: usize) -> Vec<FamilySpec> {
    let s = c + 1;
    let p = h + 1;
    let t = if h.is_multiple_of(2) { h + 1 } else { h + 2 };
    vec![
        FamilySpec::frak_h(s, t, p),
        FamilySpec::h1(s, t),
        FamilySpec::h3(s, t),
        FamilySpec::h4(s, t),
    ]
}

/// Every valid spec of order at most `max_order` whose parameters stay below
/// `max_param`, ordered by order and then by spec.
pub fn catalog(max_order: usize, max_param: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for kind in FamilyKind::ALL {
        let mins = kind.minimums();
        let mut params = mins.to_vec();
        loop {
            if let Ok(spec) = FamilySpec::new(kind, params.clone()) {
                if spec.order() <= max_order {
                    out.push(spec);
                }
            }
            let mut i = 0;
            loop {
                if i == params.len() {
                    break;
                }
                params[i] += 1;
                if params[i] <= max_param {
                    break;
                }
                params[i] = mins[i];
                i += 1;
            }
            if i == params.len() {
                break;
            }
        }
    }
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_members_are_the_expected_graphs() {
        assert_eq!(generate(&FamilySpec::t(1)).graph, named::star(2));
        assert_eq!(generate(&FamilySpec::h1(0, 5)).graph, named::path(5));
        assert_eq!(generate(&FamilySpec::h3(0, 4)).graph.order(), 6);
        assert_eq!(generate(&FamilySpec::star(4)).graph, named::star(4));
        // F1(1): P3 with a pendant at its center is the claw.
        let f1 = generate(&FamilySpec::f1(1)).graph;
        assert_eq!(f1.degree_sequence(), vec![3, 1, 1, 1]);
        assert_eq!(f1.size(), 3);
        // frakK(1,p) is T_p.
        for p in 1..5 {
            assert_eq!(generate(&FamilySpec::frak_k(1, p)).graph, generate(&FamilySpec::t(p)).graph);
        }
    }

    #[test]
    fn t_labeling_contract() {
        let t = generate(&FamilySpec::t(4));
        assert_eq!(t.landmarks["end"], 0);
        assert_eq!(t.landmarks["branch"], 3);
        assert_eq!(t.graph.degree(3), 3);
        assert_eq!(t.graph.neighbors(3), &[2, 4, 5]);
    }

    #[test]
    fn bone_b0_has_two_degree_three_vertices() {
        let b0 = generate(&FamilySpec::b(0)).graph;
        assert_eq!(b0.order(), 6);
        assert_eq!(b0.degree_sequence(), vec![3, 3, 1, 1, 1, 1]);
        assert!(b0.has_edge(0, 1));
    }

    #[test]
    fn chain_landmarks_follow_the_definition() {
        let h = generate(&FamilySpec::h3(2, 3));
        let l = &h.landmarks;
        let g = &h.graph;
        assert!(g.has_edge(l["x"], l["u[1][1]"]));
        assert!(g.has_edge(l["y"], l["u[3][3]"]));
        for i in 1..=2 {
            for z in ["v", "w"] {
                let zi = l[&format!("{z}[{i}]")];
                assert!(g.has_edge(zi, l[&format!("u[{i}][3]")]));
                assert!(g.has_edge(zi, l[&format!("u[{}][1]", i + 1)]));
                assert_eq!(g.degree(zi), 2);
            }
            assert!(!g.has_edge(l[&format!("u[{i}][3]")], l[&format!("u[{}][1]", i + 1)]));
        }
        let h4 = generate(&FamilySpec::h4(2, 3));
        assert!(h4.graph.has_edge(h4.landmarks["u[1][3]"], h4.landmarks["u[2][1]"]));
        assert_eq!(h4.graph.size(), h.graph.size() + 2);
    }

    #[test]
    fn frak_h_gadget() {
        let h = generate(&FamilySpec::frak_h(1, 2, 1));
        let l = &h.landmarks;
        let v = l["v[1]"];
        assert!(h.graph.has_edge(l["u[1][2]"], l["u[2][1]"]));
        assert!(h.graph.has_edge(v, l["u[1][2]"]));
        assert!(h.graph.has_edge(v, l["u[2][1]"]));
        // T_1 attached at v: its end and branch coincide, two leaves hang off v.
        assert_eq!(l["branch[1]"], v);
        assert_eq!(h.graph.degree(v), 4);
    }

    #[test]
    fn bad_params_are_rejected() {
        assert!(matches!(
            FamilySpec::new(FamilyKind::Cycle, vec![2]),
            Err(FamilyError::BadParams { .. })
        ));
        assert!(FamilySpec::new(FamilyKind::FrakK, vec![3, 0]).is_err());
        assert!(FamilySpec::new(FamilyKind::H1, vec![1]).is_err());
        assert!(FamilySpec::new(FamilyKind::Path, vec![usize::MAX]).is_err());
        assert!(FamilySpec::new(FamilyKind::B, vec![0]).is_ok());
    }

    #[test]
    fn predicted_deficiency_examples() {
        assert_eq!(predicted_deficiency(&FamilySpec::frak_k(3, 1)), Some(3));
        assert_eq!(predicted_deficiency(&FamilySpec::frak_k(3, 2)), Some(4));
        assert_eq!(predicted_deficiency(&FamilySpec::h1(2, 3)), Some(3));
        assert_eq!(predicted_deficiency(&FamilySpec::h4(2, 4)), Some(0));
        assert_eq!(predicted_deficiency(&FamilySpec::star(4)), Some(3));
        assert_eq!(predicted_deficiency(&FamilySpec::f2(3)), None);
        assert_eq!(predicted_deficiency(&FamilySpec::b(1)), None);
    }

    #[test]
    fn characterization_family_examples() {
        let a = characterization_family(Variant::A, 4).unwrap();
        assert_eq!(a, vec![FamilySpec::star(4), FamilySpec::t(4), FamilySpec::frak_k(4, 1)]);
        let b = characterization_family(Variant::B, 4).unwrap();
        assert_eq!(b.len(), 9);
        assert!(b.contains(&FamilySpec::frak_f(4, 2)));
        assert!(b.contains(&FamilySpec::frak_k(4, 2)));
        assert!(characterization_family(Variant::A, 5).is_err());
        assert!(characterization_family(Variant::B, 2).is_err());
    }

    #[test]
    fn witness_graph_examples() {
        let w = witness_graphs(2, 3);
        assert_eq!(w[0], FamilySpec::frak_h(3, 5, 4));
        assert_eq!(predicted_deficiency(&FamilySpec::h1(3, 5)), Some(4));
        let w = witness_graphs(0, 1);
        assert_eq!(w[3], FamilySpec::h4(1, 3));
        assert_eq!(predicted_deficiency(&w[3]), Some(2));
        for c in 0..4 {
            for h in 1..6 {
                for spec in witness_graphs(c, h) {
                    assert!(predicted_deficiency(&spec).unwrap() > c, "{spec}");
                }
            }
        }
    }

    #[test]
    fn spec_grammar() {
        assert_eq!("frakK(4,2)".parse::<FamilySpec>().unwrap(), FamilySpec::frak_k(4, 2));
        assert_eq!("h3( 2, 5 )".parse::<FamilySpec>().unwrap(), FamilySpec::h3(2, 5));
        assert_eq!("STAR(6)".parse::<FamilySpec>().unwrap(), FamilySpec::star(6));
        assert_eq!(FamilySpec::frak_h(1, 3, 2).to_string(), "frakH(1,3,2)");
        assert!(matches!("nope(3)".parse::<FamilySpec>(), Err(FamilyError::Parse(_))));
        assert!(matches!("star(x)".parse::<FamilySpec>(), Err(FamilyError::Parse(_))));
        assert!(matches!("cycle(2)".parse::<FamilySpec>(), Err(FamilyError::BadParams { .. })));
    }

    #[test]
    fn catalog_is_sorted_and_bounded() {
        let c = catalog(12, 6);
        assert!(c.windows(2).all(|w| w[0].order() <= w[1].order()));
        assert!(c.iter().all(|s| s.order() <= 12));
        assert!(c.contains(&FamilySpec::frak_k(3, 1)));
        assert!(c.contains(&FamilySpec::b(0)));
    }
}
