//! Recognizes the two-graph families `{K_{1,s}, T_3}` and `{K_{1,s}, P_4}`.

use serde::Serialize;

use super::CertError;
use crate::families::{generate, FamilySpec};
use crate::graph::{named, Graph};
use crate::subgraph::is_isomorphic;

/// Largest order accepted by [`pair_classify`].
pub const PAIR_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RejectReason {
    /// The pair is not a star together with `T_3` or `P_4`.
    Shape,
    /// The right shape, but `s` lies outside `[4, d + 1]`.
    SRange { s: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairVerdict {
    Member(usize),
    NotMember(RejectReason),
}

/// `s` when `h` is `K_{1,s}` with `s ≥ 1`.
fn star_size(h: &Graph) -> Result<Option<usize>, CertError> {
    let n = h.order();
    if n < 2 {
        return Ok(None);
    }
    Ok(is_isomorphic(h, &named::star(n - 1)).map_err(too_large)?.then_some(n - 1))
}

fn is_partner(h: &Graph) -> Result<bool, CertError> {
    let t3 = generate(&FamilySpec::t(3)).graph;
    Ok(is_isomorphic(h, &t3).map_err(too_large)? || is_isomorphic(h, &named::path(4)).map_err(too_large)?)
}

fn too_large(e: crate::subgraph::SubgraphError) -> CertError {
    match e {
        crate::subgraph::SubgraphError::TooLarge { order, cap } => CertError::TooLarge { order, cap },
        other => CertError::BadParams(other.to_string()),
    }
}

pub fn pair_classify(h1: &Graph, h2: &Graph, d: usize) -> Result<PairVerdict, CertError> {
    if d < 3 {
        return Err(CertError::BadParams(format!("d must be at least 3, got {d}")));
    }
    for h in [h1, h2] {
        if h.order() > PAIR_CAP {
            return Err(CertError::TooLarge { order: h.order(), cap: PAIR_CAP });
        }
        if h.order() == 0 || !h.is_connected() {
            return Err(CertError::Disconnected);
        }
    }
    for (a, b) in [(h1, h2), (h2, h1)] {
        if let Some(s) = star_size(a)? {
            if is_partner(b)? {
                return Ok(if (4..=d + 1).contains(&s) {
                    PairVerdict::Member(s)
                } else {
                    PairVerdict::NotMember(RejectReason::SRange { s })
                });
            }
        }
    }
    Ok(PairVerdict::NotMember(RejectReason::Shape))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn t3() -> Graph {
        generate(&FamilySpec::t(3)).graph
    }

    #[test]
    fn examples() {
        assert_eq!(pair_classify(&star(4), &t3(), 3).unwrap(), PairVerdict::Member(4));
        assert_eq!(pair_classify(&path(4), &star(4), 3).unwrap(), PairVerdict::Member(4));
        assert_eq!(
            pair_classify(&star(6), &path(4), 4).unwrap(),
            PairVerdict::NotMember(RejectReason::SRange { s: 6 })
        );
        assert_eq!(
            pair_classify(&star(3), &path(4), 3).unwrap(),
            PairVerdict::NotMember(RejectReason::SRange { s: 3 })
        );
        assert_eq!(
            pair_classify(&star(4), &cycle(4), 3).unwrap(),
            PairVerdict::NotMember(RejectReason::Shape)
        );
        assert_eq!(pair_classify(&star(6), &t3(), 5).unwrap(), PairVerdict::Member(6));
    }

    #[test]
    fn refusals() {
        assert!(matches!(pair_classify(&star(4), &t3(), 2), Err(CertError::BadParams(_))));
        assert_eq!(pair_classify(&Graph::empty(2), &t3(), 3), Err(CertError::Disconnected));
        assert!(matches!(pair_classify(&path(13), &t3(), 3), Err(CertError::TooLarge { .. })));
    }
}
