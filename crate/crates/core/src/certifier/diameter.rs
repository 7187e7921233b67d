//! Level-by-level matching for connected `{K_{1,n}, 𝔉K_n^p}`-free graphs of bounded diameter.
//!
//! Levels are distance classes from vertex 0. From the deepest level up, each
//! round matches inside the level, then greedily into the level above while the
//! remaining graph stays connected, then pairs each vertex of the boundary `B`
//! with one of its private neighbors in the leftover set `Z`. Whatever is left
//! of `Z` is dropped and counted against the bound.

use num_bigint::BigUint;

use super::ramsey::{betas, f_bound, Bound, RamseyBounder};
use super::{
    frak_k_members, matching_within, require_connected, require_even_at_least_four, require_free,
    CertError, CertReport, Precondition,
};
use crate::families::FamilySpec;
use crate::graph::{Diameter, Graph, VertexSet};
use crate::matching::Matching;
use crate::subgraph::Family;

/// `{K_{1,n}} ∪ {𝔉K_n^p : p ≥ 1}`, cut off at `max_order` vertices.
pub fn diameter_family(n: usize, max_order: usize) -> Family {
    let mut specs = vec![FamilySpec::star(n)];
    specs.extend(frak_k_members(n, max_order));
    Family::from_specs(&specs)
}

pub fn bounded_diameter_matching(g: &Graph, n: usize) -> Result<CertReport, CertError> {
    bounded_diameter_matching_with(g, n, Precondition::Enforce)
}

pub fn bounded_diameter_matching_with(
    g: &Graph,
    n: usize,
    policy: Precondition,
) -> Result<CertReport, CertError> {
    require_even_at_least_four(n, false)?;
    require_connected(g)?;
    let mut report = CertReport::new("bounded-diameter", g.order());
    require_free(g, &diameter_family(n, g.order()), policy, &mut report)?;
    let diam = match g.diameter() {
        Diameter::Finite(d) => d,
        Diameter::Infinite => return Err(CertError::Disconnected),
    };
    let bounder = RamseyBounder::default();
    report.claimed_bound = f_bound(n, diam.max(1), &bounder)?;
    report.notes.push(format!("root 0, diameter {diam}"));
    report.notes.push(
        "edges into the level above are added greedily while the rest stays connected; \
         the result is maximal, not necessarily maximum"
            .into(),
    );
    let edges = run_levels(g, n, &bounder, &mut report, "");
    report.finish(Matching::new(g.order(), edges));
    let missed = report.missed.len();
    let bound_ok = report.within_bound();
    report.check(format!("missed {missed} within claimed bound"), bound_ok, report.missed.to_vec());
    Ok(report)
}

struct Level<'a> {
    g: &'a Graph,
    alive: VertexSet,
    edges: Vec<(usize, usize)>,
}

impl Level<'_> {
    fn take(&mut self, u: usize, v: usize) {
        self.alive.remove(u);
        self.alive.remove(v);
        self.edges.push((u.min(v), u.max(v)));
    }

    fn alive_neighbors(&self, v: usize) -> VertexSet {
        self.g.row(v).intersection(&self.alive)
    }

    /// Whether deleting `u` and `v` leaves the alive graph connected.
    fn removable(&self, u: usize, v: usize) -> bool {
        let mut rest = self.alive.clone();
        rest.remove(u);
        rest.remove(v);
        self.g.is_connected_within(&rest)
    }
}

/// Runs the procedure on `g` and returns the matching edges. Assertion names get `prefix`.
pub(super) fn run_levels(
    g: &Graph,
    n: usize,
    bounder: &RamseyBounder,
    report: &mut CertReport,
    prefix: &str,
) -> Vec<(usize, usize)> {
    let layers = g.bfs_layers(0).expect("non-empty graph");
    let depth = layers.len() - 1;
    let beta = betas(n, depth.saturating_sub(1), bounder);
    let mut st = Level { g, alive: g.vertex_set(), edges: Vec::new() };

    for i in (2..=depth).rev() {
        let tag = |claim: &str| format!("{prefix}level {i}: {claim}");
        let layer = layers[i].intersection(&st.alive);
        for (u, v) in matching_within(g, &layer) {
            st.take(u, v);
        }
        let leftover = layers[i].intersection(&st.alive);
        report.check(tag("unmatched part of the level is stable"), g.is_independent(&leftover), leftover.to_vec());

        // Maximal matching into level i-1 that keeps the alive graph connected.
        // Removing vertices can make a rejected edge acceptable again, so
        // repeat until a full pass adds nothing.
        let upper = &layers[i - 1];
        loop {
            let mut grew = false;
            for z in layers[i].intersection(&st.alive).iter() {
                let cands = st.alive_neighbors(z).intersection(upper);
                if let Some(u) = cands.iter().find(|&u| st.removable(z, u)) {
                    st.take(z, u);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        let z_set = layers[i].intersection(&st.alive);
        let boundary = g.neighborhood_of_set(&z_set).intersection(&st.alive);

        let private = |st: &Level, u: usize| -> Vec<usize> {
            st.g.row(u)
                .intersection(&z_set)
                .iter()
                .filter(|&z| st.alive_neighbors(z).to_vec() == [u])
                .collect()
        };
        let short: Vec<usize> = boundary.iter().filter(|&u| private(&st, u).len() < 2).collect();
        report.check(tag("every boundary vertex has two private neighbors"), short.is_empty(), short);
        let heavy: Vec<usize> = boundary
            .iter()
            .filter(|&u| g.row(u).intersection_len(&z_set) > n - 2)
            .collect();
        report.check(tag("boundary degree into Z at most n-2"), heavy.is_empty(), heavy);
        let beta_prev = &beta[i - 2];
        report.check(
            tag("|Z| at most (n-2)(beta-1)"),
            level_bound(beta_prev, n - 2).admits(z_set.len()),
            z_set.to_vec(),
        );

        let mut paired = Vec::new();
        for u in boundary.iter() {
            if let Some(&z) = private(&st, u).first() {
                paired.push((u, z));
            }
        }
        for &(u, z) in &paired {
            st.take(u, z);
        }
        let dropped = layers[i].intersection(&st.alive);
        report.check(
            tag("|Z'| at most (n-3)(beta-1)"),
            level_bound(beta_prev, n - 3).admits(dropped.len()),
            dropped.to_vec(),
        );
        st.alive.difference_with(&dropped);
        report.check(tag("remaining graph connected"), g.is_connected_within(&st.alive), st.alive.to_vec());
    }

    if depth >= 1 {
        let layer = layers[1].intersection(&st.alive);
        for (u, v) in matching_within(g, &layer) {
            st.take(u, v);
        }
        let rest = layers[1].intersection(&st.alive);
        report.check(format!("{prefix}level 1: leftover at most n-1"), rest.len() < n, rest.to_vec());
        if let Some(y) = rest.first() {
            st.take(0, y);
        }
    }
    st.edges
}

/// `(β − 1) · factor`, kept huge when `β` is.
fn level_bound(beta: &Bound, factor: usize) -> Bound {
    match beta {
        Bound::Exact(b) => Bound::Exact((b - BigUint::from(1u32)) * factor),
        huge => huge.clone(),
    }
}
