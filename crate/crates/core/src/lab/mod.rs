//! Exhaustive and randomized experiments over small connected graphs.

mod enumerate;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use enumerate::{
    enumerate_claw_free, enumerate_connected, EnumerationStream, MAX_CLAW_FREE_ORDER,
    MAX_ENUM_ORDER,
};

use crate::families::{catalog, generate};
use crate::graph::Graph;
use crate::matching::deficiency;
use crate::subgraph::{is_free, Family, FreeVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("order {order} exceeds the enumeration cap of {cap}")]
    TooLarge { order: usize, cap: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub predicate: String,
    pub instances_checked: usize,
    /// graph6 strings, ordered by order and then text.
    pub failures: Vec<String>,
    pub wall_time_ms: u128,
}

impl ExperimentReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Scans every connected graph with at most `max_n` vertices and reports the
/// `fam`-free ones whose deficiency exceeds `bound`.
pub fn exhaustive_check(fam: &Family, bound: usize, max_n: usize) -> Result<ExperimentReport, LabError> {
    if max_n > MAX_ENUM_ORDER {
        return Err(LabError::TooLarge { order: max_n, cap: MAX_ENUM_ORDER });
    }
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let level = enumerate_connected(n)?;
        checked += level.len();
        let mut bad: Vec<String> = level
            .codes()
            .par_iter()
            .filter_map(|code| {
                let g = code.to_graph();
                // Deficiency first: it is far cheaper than the freeness test.
                (deficiency(&g) > bound && is_free(&g, fam).is_free()).then(|| g.to_graph6())
            })
            .collect();
        bad.sort();
        failures.extend(bad);
    }
    Ok(ExperimentReport {
        predicate: format!("connected {fam}-free graphs on at most {max_n} vertices have deficiency <= {bound}"),
        instances_checked: checked,
        failures,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Where [`falsify_search`] found its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stage {
    Exhaustive,
    Catalog,
    Random,
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub graph: Graph,
    pub stage: Stage,
    pub deficiency: usize,
    /// Instances examined before this one was found, itself included.
    pub instances: usize,
}

/// Catalog members tried by [`falsify_search`] have at most this many vertices.
pub const CATALOG_ORDER: usize = 40;

/// Looks for a connected `fam`-free graph with deficiency at least `d`.
///
/// Tries every connected graph up to the enumeration cap, then the named
/// constructions, then seeded random growth: a random tree plus random edges,
/// repaired by deleting non-bridge edges of each forbidden copy found. The
/// random stage is a heuristic. Each graph examined counts against `budget`.
pub fn falsify_search(fam: &Family, d: usize, budget: usize, seed: u64) -> Option<Counterexample> {
    let mut used = 0;
    let hit = |g: &Graph| {
        let k = deficiency(g);
        (k >= d && is_free(g, fam).is_free()).then_some(k)
    };

    for n in 1..=MAX_ENUM_ORDER {
        let level = enumerate_connected(n).expect("within cap");
        let room = budget - used;
        let codes = &level.codes()[..level.len().min(room)];
        let found = codes.par_iter().position_first(|c| hit(&c.to_graph()).is_some());
        if let Some(i) = found {
            let graph = codes[i].to_graph();
            let deficiency = deficiency(&graph);
            return Some(Counterexample { graph, stage: Stage::Exhaustive, deficiency, instances: used + i + 1 });
        }
        used += codes.len();
        if used >= budget {
            return None;
        }
    }

    for spec in catalog(CATALOG_ORDER, 12) {
        if spec.order() <= MAX_ENUM_ORDER {
            continue;
        }
        let graph = generate(&spec).graph;
        if !graph.is_connected() {
            continue;
        }
        used += 1;
        if let Some(deficiency) = hit(&graph) {
            return Some(Counterexample { graph, stage: Stage::Catalog, deficiency, instances: used });
        }
        if used >= budget {
            return None;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while used < budget {
        used += 1;
        let Some(graph) = random_free_graph(fam, &mut rng) else { continue };
        if let Some(deficiency) = hit(&graph) {
            return Some(Counterexample { graph, stage: Stage::Random, deficiency, instances: used });
        }
    }
    None
}

fn random_free_graph(fam: &Family, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let n = rng.gen_range(4..=24);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for _ in 0..rng.gen_range(0..=n) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    let mut g = Graph::from_edges(n, &edges).expect("labels below n");
    for _ in 0..4 * n {
        let FreeVerdict::Contains { member, embedding } = is_free(&g, fam) else {
            return Some(g);
        };
        let h = fam
            .materialize(g.order())
            .into_iter()
            .find(|(label, _)| *label == member)
            .map(|(_, h)| h)?;
        let removable: Vec<(usize, usize)> = h
            .edges()
            .map(|(a, b)| (embedding.0[a], embedding.0[b]))
            .filter(|&(u, v)| g.without_edge(u, v).is_connected())
            .collect();
        if removable.is_empty() {
            return None;
        }
        let (u, v) = removable[rng.gen_range(0..removable.len())];
        g = g.without_edge(u, v);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Family {
        s.parse().unwrap()
    }

    #[test]
    fn claw_free_graphs_are_nearly_perfect() {
        let r = exhaustive_check(&fam("star(3)"), 1, 7).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.instances_checked, 1 + 1 + 2 + 6 + 21 + 112 + 853);
    }

    #[test]
    fn star_freeness_alone_is_not_enough() {
        let r = exhaustive_check(&fam("star(4)"), 1, 6).unwrap();
        assert!(!r.passed());
        assert!(exhaustive_check(&fam("star(4)"), 1, 10).is_err());
    }

    #[test]
    fn falsify_examples() {
        let c = falsify_search(&fam("T(3)"), 3, 1_000_000, 7).unwrap();
        assert!(c.deficiency >= 3);
        assert!(is_free(&c.graph, &fam("T(3)")).is_free());
        assert_eq!(c.stage, Stage::Exhaustive);
        let c = falsify_search(&fam("star(4)"), 3, 1_000_000, 7).unwrap();
        assert!(is_free(&c.graph, &fam("star(4)")).is_free());
        assert!(falsify_search(&fam("star(4), T(3)"), 3, 2_000, 7).is_none());
    }

    #[test]
    fn random_stage_is_deterministic() {
        let f = fam("path(4)");
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let (x, y) = (random_free_graph(&f, &mut a), random_free_graph(&f, &mut b));
            assert_eq!(x, y);
            if let Some(g) = x {
                assert!(g.is_connected());
                assert!(is_free(&g, &f).is_free());
            }
        }
    }
}
