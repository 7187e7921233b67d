//! Constructive matching procedures that check each step of their own argument.
//!
//! Every run returns a [`CertReport`]: the matching it built, the vertices it
//! missed, the bound it promises, and one record per claim checked on the way.

mod diameter;
mod lemma6;
mod pairs;
pub mod ramsey;
mod structured;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::families::FamilySpec;
use crate::graph::{Graph, VertexSet};
use crate::matching::{maximum_matching, Matching};
use crate::subgraph::{is_free, Family, FreeVerdict};

pub use diameter::{bounded_diameter_matching, bounded_diameter_matching_with, diameter_family};
pub use lemma6::{
    is_induced_matching, lemma6_induced_matching, lemma6_tight_instance, max_induced_matching,
    Lemma6Instance, INDUCED_MATCHING_CAP,
};
pub use pairs::{pair_classify, PairVerdict, RejectReason};
pub use ramsey::{f_bound, Bound, RamseyBounder};
pub use structured::{structured_family, structured_matching, structured_matching_with};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {hypothesis}")]
    PreconditionViolated { hypothesis: String, witness: Vec<usize> },
    #[error("claim failed: {claim}")]
    ClaimFailed { claim: String, witness: Vec<usize> },
    #[error("graph of order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
}

/// What to do when an input fails the forbidden-subgraph hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    /// Refuse with [`CertError::PreconditionViolated`].
    Enforce,
    /// Run anyway and set `precondition_ok = false`.
    Record,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CertReport {
    pub procedure: String,
    pub matching: Matching,
    pub missed: VertexSet,
    pub claimed_bound: Bound,
    pub assertions: Vec<Assertion>,
    pub precondition_ok: bool,
    pub notes: Vec<String>,
}

impl CertReport {
    fn new(procedure: &str, order: usize) -> Self {
        CertReport {
            procedure: procedure.into(),
            matching: Matching::empty(order),
            missed: VertexSet::full(order),
            claimed_bound: Bound::from_usize(0),
            assertions: Vec::new(),
            precondition_ok: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, witness: Vec<usize>) -> bool {
        let witness = if pass { Vec::new() } else { witness };
        self.assertions.push(Assertion { name: name.into(), pass, witness });
        pass
    }

    fn finish(&mut self, matching: Matching) {
        self.missed = matching.missed();
        self.matching = matching;
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.pass)
    }

    pub fn within_bound(&self) -> bool {
        self.claimed_bound.admits(self.missed.len())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "procedure": self.procedure,
            "matching": self.matching.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            "missed": self.missed.to_vec(),
            "claimed_bound": self.claimed_bound.to_string(),
            "assertions": self.assertions,
            "precondition_ok": self.precondition_ok,
            "notes": self.notes,
        })
    }
}

/// Checks `g` against `fam`; under [`Precondition::Record`] failures become report entries.
fn require_free(
    g: &Graph,
    fam: &Family,
    policy: Precondition,
    report: &mut CertReport,
) -> Result<(), CertError> {
    match is_free(g, fam) {
        FreeVerdict::Free => {
            report.check("precondition: forbidden subgraphs absent", true, Vec::new());
            Ok(())
        }
        FreeVerdict::Contains { member, embedding } => {
            let hypothesis = format!("graph contains {member}");
            if policy == Precondition::Enforce {
                return Err(CertError::PreconditionViolated { hypothesis, witness: embedding.0 });
            }
            report.precondition_ok = false;
            report.check(format!("precondition: {hypothesis}"), false, embedding.0);
            Ok(())
        }
    }
}

fn require_connected(g: &Graph) -> Result<(), CertError> {
    if g.order() == 0 || !g.is_connected() {
        return Err(CertError::Disconnected);
    }
    Ok(())
}

fn require_even_at_least_four(n: usize, even: bool) -> Result<(), CertError> {
    if n < 4 || (even && !n.is_multiple_of(2)) {
        let what = if even { "an even integer at least 4" } else { "at least 4" };
        return Err(CertError::BadParams(format!("n must be {what}, got {n}")));
    }
    Ok(())
}

/// Maximum matching of `g[s]`, in host labels.
fn matching_within(g: &Graph, s: &VertexSet) -> Vec<(usize, usize)> {
    let sub = g.induced_subgraph(s).expect("subset of the host");
    maximum_matching(&sub.graph)
        .edges()
        .iter()
        .map(|&(a, b)| (sub.map[a], sub.map[b]))
        .collect()
}

fn frak_k_members(n: usize, max_order: usize) -> Vec<FamilySpec> {
    (1..).map(|p| FamilySpec::frak_k(n, p)).take_while(|s| s.order() <= max_order).collect()
}
