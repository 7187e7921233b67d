//! Path decomposition matching for graphs free of the full obstruction set.
//!
//! A longest induced path `P = u_1 … u_m` is split into its two ends `X_0`
//! (the first and last `n` vertices) and its middle `Y_0`. Vertices reachable
//! from the ends form `X`; everything else hangs off the middle in layers
//! `Y_1, Y_2, …`. The `Y` side is matched top-down and closed off through a
//! claw-free auxiliary graph `L`; each component of `G[X]` goes through the
//! bounded-diameter procedure.

use super::diameter::{bounded_diameter_matching_with, run_levels};
use super::ramsey::{f_bound, Bound, RamseyBounder};
use super::{
    frak_k_members, matching_within, require_connected, require_even_at_least_four, require_free,
    CertError, CertReport, Precondition,
};
use crate::families::FamilySpec;
use crate::graph::{Graph, VertexSet};
use crate::matching::{maximum_matching, Matching};
use crate::subgraph::{is_claw_free, longest_induced_path, Family, LONGEST_PATH_CAP};

/// `{K_{1,n}, F_n^1, F_n^3, F_n^4} ∪ {𝔉F_n^p, 𝔉K_n^p : p ≥ 1}`, cut off at `max_order`.
pub fn structured_family(n: usize, max_order: usize) -> Family {
    let mut specs = vec![FamilySpec::star(n), FamilySpec::f1(n), FamilySpec::f3(n), FamilySpec::f4(n)];
    specs.extend(
        (1..).map(|p| FamilySpec::frak_f(n, p)).take_while(|s| s.order() <= max_order),
    );
    specs.extend(frak_k_members(n, max_order));
    specs.retain(|s| s.order() <= max_order);
    Family::from_specs(&specs)
}

pub fn structured_matching(g: &Graph, n: usize) -> Result<CertReport, CertError> {
    structured_matching_with(g, n, Precondition::Enforce)
}

pub fn structured_matching_with(
    g: &Graph,
    n: usize,
    policy: Precondition,
) -> Result<CertReport, CertError> {
    require_even_at_least_four(n, true)?;
    require_connected(g)?;
    if g.order() > LONGEST_PATH_CAP {
        return Err(CertError::TooLarge { order: g.order(), cap: LONGEST_PATH_CAP });
    }
    let mut report = CertReport::new("structured", g.order());
    require_free(g, &structured_family(n, g.order()), policy, &mut report)?;
    let path = longest_induced_path(g).expect("order checked against the cap");
    let threshold = n * n - n - 1;
    if path.len() < threshold {
        let mut r = bounded_diameter_matching_with(g, n, policy)?;
        r.procedure = "structured, delegated to bounded-diameter".into();
        r.notes.insert(
            0,
            format!("longest induced path has {} < {threshold} vertices", path.len()),
        );
        r.precondition_ok &= report.precondition_ok;
        report.assertions.append(&mut r.assertions);
        r.assertions = report.assertions;
        return Ok(r);
    }
    let edges = decompose(g, n, &path, &mut report)?;
    report.finish(Matching::new(g.order(), edges));
    let missed = report.missed.len();
    let ok = report.within_bound();
    report.check(format!("missed {missed} within claimed bound"), ok, report.missed.to_vec());
    Ok(report)
}

fn set(g: &Graph, vs: impl IntoIterator<Item = usize>) -> VertexSet {
    VertexSet::from_vertices(g.order(), vs).expect("host vertices")
}

fn decompose(
    g: &Graph,
    n: usize,
    path: &[usize],
    report: &mut CertReport,
) -> Result<Vec<(usize, usize)>, CertError> {
    let m = path.len();
    let mut pos = vec![usize::MAX; g.order()];
    for (k, &v) in path.iter().enumerate() {
        pos[v] = k;
    }
    let on_path = set(g, path.iter().copied());
    let x0 = set(g, path[..n].iter().chain(&path[m - n..]).copied());
    let y0 = set(g, path[n..m - n].iter().copied());

    // X layers. Every earlier X layer is excluded, not only X_1..X_{i-2}.
    let x1 = g.neighborhood_of_set(&x0).difference(&on_path);
    let y1_first = g.neighborhood_of_set(&y0).difference(&x0.union(&x1));
    let mut excluded = x0.union(&x1).union(&y0).union(&y1_first);
    let mut xs = vec![x0, x1];
    loop {
        let next = g.neighborhood_of_set(xs.last().unwrap()).difference(&excluded);
        if next.is_empty() {
            break;
        }
        excluded.union_with(&next);
        xs.push(next);
    }
    let beyond: Vec<usize> = xs.iter().skip(n + 1).flat_map(|s| s.to_vec()).collect();
    report.check(format!("X_{} is empty", n + 1), beyond.is_empty(), beyond);
    let x_all = xs.iter().fold(VertexSet::empty(g.order()), |acc, s| acc.union(s));

    let mut ys = vec![y0.clone()];
    let mut seen = x_all.union(&y0);
    loop {
        let next = g.neighborhood_of_set(ys.last().unwrap()).difference(&seen);
        if next.is_empty() {
            break;
        }
        seen.union_with(&next);
        ys.push(next);
    }
    let uncovered = seen.complement();
    report.check("X and Y cover every vertex", uncovered.is_empty(), uncovered.to_vec());
    let y_all = seen.difference(&x_all);

    let path_span = |v: usize| -> Option<(usize, usize)> {
        let ks: Vec<usize> = g.neighbors(v).iter().map(|&u| pos[u]).filter(|&k| k != usize::MAX).collect();
        Some((*ks.iter().min()?, *ks.iter().max()?))
    };
    if let Some(y1) = ys.get(1) {
        let y2 = ys.get(2).cloned().unwrap_or_else(|| VertexSet::empty(g.order()));
        let mut next_edge = Vec::new();
        let mut child = Vec::new();
        let mut twins = Vec::new();
        for v in y1.iter() {
            let Some((i, _)) = path_span(v) else { continue };
            if i + 1 >= m || !g.has_edge(v, path[i + 1]) {
                next_edge.push(v);
            }
            if g.row(v).intersects(&y2) {
                let on_y0: Vec<usize> = g.row(v).intersection(&y0).to_vec();
                let expect: Vec<usize> = if i + 1 < m {
                    let mut e = vec![path[i], path[i + 1]];
                    e.sort_unstable();
                    e
                } else {
                    vec![path[i]]
                };
                if on_y0 != expect {
                    child.push(v);
                }
            }
            for w in y1.iter().filter(|&w| w > v) {
                if path_span(w).map(|s| s.0) == Some(i) && !g.has_edge(v, w) {
                    twins.extend([v, w]);
                }
            }
        }
        report.check("each Y_1 vertex v with first path neighbor u_i is adjacent to u_{i+1}", next_edge.is_empty(), next_edge);
        report.check("a Y_1 vertex with a child in Y_2 sees exactly u_i, u_{i+1} on the middle", child.is_empty(), child);
        report.check("Y_1 vertices with the same first path neighbor are adjacent", twins.is_empty(), twins);
    }
    let mut not_clique = Vec::new();
    for k in 1..ys.len().saturating_sub(1) {
        for y in ys[k].iter() {
            let children = g.row(y).intersection(&ys[k + 1]);
            if !g.is_clique(&children) {
                not_clique.push(y);
            }
        }
    }
    report.check("children of each Y_k vertex (k >= 1) form a clique", not_clique.is_empty(), not_clique);

    // Top-down matching on the Y side.
    let mut edges = Vec::new();
    let top = ys.len() - 1;
    let mut z1 = VertexSet::empty(g.order());
    if top >= 1 {
        let mut cur = ys[top].clone();
        for k in (1..=top).rev() {
            for (a, b) in matching_within(g, &cur) {
                cur.remove(a);
                cur.remove(b);
                edges.push((a, b));
            }
            let z = cur;
            report.check(format!("Z_{k} is stable"), g.is_independent(&z), z.to_vec());
            if k == 1 {
                z1 = z;
                break;
            }
            let mut upper = ys[k - 1].clone();
            let mut orphans = Vec::new();
            for v in z.iter() {
                let parent = g
                    .row(v)
                    .intersection(&upper)
                    .iter()
                    .find(|&p| g.row(p).intersection_len(&z) == 1);
                match parent {
                    Some(p) => {
                        upper.remove(p);
                        edges.push((v, p));
                    }
                    None => orphans.push(v),
                }
            }
            report.check(format!("every vertex of Z_{k} has a parent with no other child in Z_{k}"), orphans.is_empty(), orphans);
            cur = upper;
        }
    }

    // The auxiliary graph L on Y_0 ∪ Z_1.
    let mut by_first: Vec<Vec<usize>> = vec![Vec::new(); m];
    for v in z1.iter() {
        if let Some((i, _)) = path_span(v) {
            by_first[i].push(v);
        }
    }
    let crowded: Vec<usize> = by_first.iter().filter(|vs| vs.len() > 1).flatten().copied().collect();
    report.check("at most one Z_1 vertex per first path neighbor", crowded.is_empty(), crowded);
    let l_vertices: Vec<usize> = y0.union(&z1).to_vec();
    let mut l_index = vec![usize::MAX; g.order()];
    for (i, &v) in l_vertices.iter().enumerate() {
        l_index[v] = i;
    }
    let mut l_edges = Vec::new();
    for k in n..m - n - 1 {
        l_edges.push((l_index[path[k]], l_index[path[k + 1]]));
    }
    for (i, vs) in by_first.iter().enumerate() {
        for &v in vs {
            for &u in path.get(i..=i + 1).unwrap_or(&path[i..=i]) {
                if g.has_edge(v, u) && y0.contains(u) {
                    l_edges.push((l_index[v], l_index[u]));
                }
            }
        }
    }
    let l = Graph::from_edges(l_vertices.len(), &l_edges).expect("indices within L");
    report.check("L is connected", l.is_connected(), Vec::new());
    report.check("L is claw-free", is_claw_free(&l), crate::subgraph::claw_centers(&l).iter().map(|c| l_vertices[c]).collect());
    let lm = maximum_matching(&l);
    let l_missed = l.order() - 2 * lm.len();
    report.check("L misses at most one vertex", l_missed <= 1, Vec::new());
    edges.extend(lm.edges().iter().map(|&(a, b)| (l_vertices[a], l_vertices[b])));

    let y_matched = Matching::new(g.order(), edges.iter().copied()).saturated();
    let y_missed = y_all.difference(&y_matched);
    report.check("the Y side misses at most one vertex", y_missed.len() <= 1, y_missed.to_vec());

    // X side, one component at a time.
    let bounder = RamseyBounder::default();
    let comps = g.components_within(&x_all);
    report.check("G[X] has at most two components", comps.len() <= 2, Vec::new());
    let mut bound = Bound::from_usize(1);
    for (c, comp) in comps.iter().enumerate() {
        let sub = g.induced_subgraph(comp).expect("host subset");
        let diam = sub.graph.diameter().finite().expect("component is connected");
        report.check(format!("X component {c} has diameter at most 3n"), diam <= 3 * n, comp.to_vec());
        bound = bound.add(&f_bound(n, diam.max(1), &bounder)?);
        let prefix = format!("X component {c}: ");
        for (a, b) in run_levels(&sub.graph, n, &bounder, report, &prefix) {
            edges.push((sub.map[a], sub.map[b]));
        }
    }
    report.claimed_bound = bound;
    report.notes.push(format!(
        "longest induced path {path:?}; {} X layers, {} Y layers",
        xs.len(),
        ys.len()
    ));
    report.notes.push(
        "claimed bound is 1 + sum of f(n, diam C) over components C of G[X]".into(),
    );
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;
    use crate::graph::named::*;
    use crate::matching::{deficiency, verify_matching};

    fn run(g: &Graph) -> CertReport {
        let r = structured_matching(g, 4).unwrap();
        assert!(verify_matching(g, &r.matching));
        assert!(r.missed.len() >= deficiency(g));
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        r
    }

    #[test]
    fn long_path() {
        let r = run(&path(20));
        assert!(r.missed.len() <= 1);
        assert_eq!(r.procedure, "structured");
    }

    #[test]
    fn odd_cycle() {
        let r = run(&cycle(25));
        assert_eq!(r.missed.len(), 1);
    }

    #[test]
    fn short_paths_delegate() {
        let r = run(&cycle(6));
        assert!(r.procedure.contains("delegated"));
        assert!(r.missed.is_empty());
    }

    #[test]
    fn obstruction_itself_is_refused() {
        let g = generate(&FamilySpec::frak_k(4, 1)).graph;
        assert!(matches!(structured_matching(&g, 4), Err(CertError::PreconditionViolated { .. })));
        assert!(matches!(structured_matching(&path(5), 5), Err(CertError::BadParams(_))));
        assert!(matches!(structured_matching(&path(31), 4), Err(CertError::TooLarge { .. })));
    }

    #[test]
    fn pendant_triangles_on_the_middle() {
        // P_16 with a triangle glued onto an edge of the middle section, and a
        // second layer vertex hanging off the new apex.
        let mut edges: Vec<(usize, usize)> = (0..15).map(|i| (i, i + 1)).collect();
        edges.extend([(16, 7), (16, 8), (17, 16)]);
        let g = Graph::from_edges(18, &edges).unwrap();
        let r = run(&g);
        assert_eq!(r.missed.len(), deficiency(&g));
    }
}
