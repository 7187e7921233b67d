//! Induced matchings in bipartite graphs from irredundant dominating sets.

use super::CertError;
use crate::graph::{Graph, VertexSet};
use crate::matching::Matching;

/// Largest order accepted by [`max_induced_matching`].
pub const INDUCED_MATCHING_CAP: usize = 64;

/// A bipartite graph with its two sides marked.
#[derive(Debug, Clone)]
pub struct Lemma6Instance {
    pub graph: Graph,
    pub x: VertexSet,
    pub y: VertexSet,
}

fn violated(hypothesis: impl Into<String>, witness: Vec<usize>) -> CertError {
    CertError::PreconditionViolated { hypothesis: hypothesis.into(), witness }
}

/// Returns `p` edges, pairwise joined by no edge of `g`, built from a minimal
/// subset of `y` dominating `x` and one private neighbor per member.
pub fn lemma6_induced_matching(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    n: usize,
    p: usize,
) -> Result<Matching, CertError> {
    let order = g.order();
    if x.host_order() != order || y.host_order() != order {
        return Err(CertError::BadParams("vertex sets do not match the graph".into()));
    }
    if x.intersects(y) || x.union(y).len() != order {
        return Err(violated("x and y partition the vertices", x.intersection(y).to_vec()));
    }
    for (side, name) in [(x, "x"), (y, "y")] {
        if let Some((u, v)) = g.edges().find(|&(u, v)| side.contains(u) && side.contains(v)) {
            return Err(violated(format!("{name} is independent"), vec![u, v]));
        }
    }
    if let Some(v) = x.iter().find(|&v| g.degree(v) == 0) {
        return Err(violated("every vertex of x has a neighbor", vec![v]));
    }
    if let Some(v) = y.iter().find(|&v| g.degree(v) > n) {
        return Err(violated(format!("every vertex of y has degree at most {n}"), vec![v]));
    }
    let need = n.saturating_mul(p.saturating_sub(1)).saturating_add(1);
    if x.len() < need {
        return Err(violated(format!("|x| >= n(p-1)+1 = {need}"), Vec::new()));
    }

    // Minimal dominating subset, shrinking in ascending order.
    let mut kept = y.clone();
    for v in y.iter() {
        kept.remove(v);
        if !x.is_subset(&g.neighborhood_of_set(&kept)) {
            kept.insert(v);
        }
    }
    let mut edges = Vec::with_capacity(p);
    for v in kept.iter() {
        if edges.len() == p {
            break;
        }
        let private = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&u| g.row(u).intersection_len(&kept) == 1);
        match private {
            Some(u) => edges.push((v, u)),
            None => {
                return Err(CertError::ClaimFailed {
                    claim: "every member of a minimal dominating set has a private neighbor".into(),
                    witness: vec![v],
                })
            }
        }
    }
    if edges.len() < p {
        return Err(CertError::ClaimFailed {
            claim: format!("a minimal dominating set has at least {p} members"),
            witness: kept.to_vec(),
        });
    }
    let m = Matching::new(order, edges);
    if !is_induced_matching(g, &m) {
        return Err(CertError::ClaimFailed {
            claim: "the chosen edges form an induced matching".into(),
            witness: m.saturated().to_vec(),
        });
    }
    Ok(m)
}

/// `p − 1` disjoint copies of `K_{1,n}`. Centers are `0..p-1`; the leaves of
/// center `i` are `p - 1 + i*n ..`.
pub fn lemma6_tight_instance(n: usize, p: usize) -> Result<Lemma6Instance, CertError> {
    if n < 1 || p < 2 {
        return Err(CertError::BadParams(format!("need n >= 1 and p >= 2, got n={n}, p={p}")));
    }
    let centers = p - 1;
    let order = centers * (n + 1);
    let mut edges = Vec::with_capacity(centers * n);
    for i in 0..centers {
        for j in 0..n {
            edges.push((i, centers + i * n + j));
        }
    }
    let graph = Graph::from_edges(order, &edges).expect("valid edges");
    let y = VertexSet::from_vertices(order, 0..centers).unwrap();
    let x = y.complement();
    Ok(Lemma6Instance { graph, x, y })
}

/// True iff the edges of `m` belong to `g` and the subgraph they induce is 1-regular.
pub fn is_induced_matching(g: &Graph, m: &Matching) -> bool {
    if !crate::matching::verify_matching(g, m) {
        return false;
    }
    let e = m.edges();
    for (i, &(a, b)) in e.iter().enumerate() {
        for &(c, d) in &e[i + 1..] {
            if g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d) {
                return false;
            }
        }
    }
    true
}

fn induced_branch(masks: &[u64], edges: &[(usize, usize)], from: usize, blocked: u64, size: usize, best: &mut usize) {
    if size + (edges.len() - from) <= *best {
        return;
    }
    let Some(k) = (from..edges.len())
        .find(|&k| blocked & (1 << edges[k].0) == 0 && blocked & (1 << edges[k].1) == 0)
    else {
        *best = (*best).max(size);
        return;
    };
    let (u, v) = edges[k];
    let closed = masks[u] | masks[v] | (1 << u) | (1 << v);
    induced_branch(masks, edges, k + 1, blocked | closed, size + 1, best);
    induced_branch(masks, edges, k + 1, blocked, size, best);
}

/// Size of a largest induced matching, by exhaustive branching.
pub fn max_induced_matching(g: &Graph) -> Result<usize, CertError> {
    if g.order() > INDUCED_MATCHING_CAP {
        return Err(CertError::TooLarge { order: g.order(), cap: INDUCED_MATCHING_CAP });
    }
    let masks = g.to_masks();
    let edges: Vec<_> = g.edges().collect();
    let mut best = 0;
    induced_branch(&masks, &edges, 0, 0, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn tight_instances() {
        for (n, p) in [(2, 3), (1, 2), (3, 4)] {
            let inst = lemma6_tight_instance(n, p).unwrap();
            assert_eq!(max_induced_matching(&inst.graph).unwrap(), p - 1);
            assert_eq!(inst.x.len(), n * (p - 1));
            let err = lemma6_induced_matching(&inst.graph, &inst.x, &inst.y, n, p).unwrap_err();
            assert!(matches!(err, CertError::PreconditionViolated { .. }));
            let m = lemma6_induced_matching(&inst.graph, &inst.x, &inst.y, n, p - 1).unwrap();
            assert!(is_induced_matching(&inst.graph, &m));
        }
        assert!(lemma6_tight_instance(2, 1).is_err());
    }

    #[test]
    fn disjoint_edges() {
        let p = 4;
        let g = Graph::from_edges(2 * p, &(0..p).map(|i| (i, p + i)).collect::<Vec<_>>()).unwrap();
        let y = VertexSet::from_vertices(2 * p, 0..p).unwrap();
        let x = y.complement();
        let m = lemma6_induced_matching(&g, &x, &y, 1, p).unwrap();
        assert_eq!(m.len(), p);
    }

    #[test]
    fn hypotheses_are_named() {
        let g = path(3);
        let x = VertexSet::from_vertices(3, [0, 2]).unwrap();
        let y = VertexSet::from_vertices(3, [1]).unwrap();
        assert_eq!(lemma6_induced_matching(&g, &x, &y, 2, 1).unwrap().len(), 1);
        match lemma6_induced_matching(&g, &x, &y, 1, 1) {
            Err(CertError::PreconditionViolated { hypothesis, .. }) => {
                assert!(hypothesis.contains("degree at most 1"))
            }
            other => panic!("{other:?}"),
        }
        match lemma6_induced_matching(&g, &x, &y, 2, 2) {
            Err(CertError::PreconditionViolated { hypothesis, .. }) => {
                assert!(hypothesis.contains("n(p-1)+1"))
            }
            other => panic!("{other:?}"),
        }
        let bad = VertexSet::from_vertices(3, [0, 1]).unwrap();
        assert!(lemma6_induced_matching(&g, &bad, &bad.complement(), 3, 1).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(max_induced_matching(&path(4)).unwrap(), 1);
        assert_eq!(max_induced_matching(&path(5)).unwrap(), 2);
        assert_eq!(max_induced_matching(&cycle(6)).unwrap(), 2);
        assert_eq!(max_induced_matching(&complete(5)).unwrap(), 1);
        assert_eq!(max_induced_matching(&Graph::empty(3)).unwrap(), 0);
    }
}
