//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Each export returns a JSON string or throws a string. The `*_json`
//! functions do the work and are what the native tests call.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use deflab_core::certifier::{
    bounded_diameter_matching_with, pair_classify, structured_matching_with, PairVerdict,
    Precondition, RejectReason,
};
use deflab_core::families::{generate, predicted_deficiency, FamilySpec};
use deflab_core::graph::{read_graphs, Graph};
use deflab_core::matching::{deficiency, maximum_matching};

/// Largest graph the page will draw.
pub const MAX_DEMO_ORDER: usize = 400;

fn parse_graph(text: &str) -> Result<(Graph, Value), String> {
    let text = text.trim();
    if let Ok(spec) = text.parse::<FamilySpec>() {
        if spec.order() > MAX_DEMO_ORDER {
            return Err(format!("{spec} has {} vertices; the demo draws at most {MAX_DEMO_ORDER}", spec.order()));
        }
        let g = generate(&spec);
        let landmarks = serde_json::to_value(&g.landmarks).expect("plain map");
        return Ok((g.graph, landmarks));
    }
    let mut graphs = read_graphs(text).map_err(|e| format!("not a spec, graph6 or edge list: {e}"))?;
    match graphs.len() {
        1 if graphs[0].order() <= MAX_DEMO_ORDER => Ok((graphs.remove(0), json!({}))),
        1 => Err(format!("the demo draws at most {MAX_DEMO_ORDER} vertices")),
        k => Err(format!("expected one graph, found {k}")),
    }
}

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u, v]).collect()
}

pub fn generate_json(input: &str) -> Result<String, String> {
    let (g, landmarks) = parse_graph(input)?;
    let predicted = input.trim().parse::<FamilySpec>().ok().and_then(|s| predicted_deficiency(&s));
    let m = maximum_matching(&g);
    Ok(json!({
        "order": g.order(),
        "edges": edges(&g),
        "graph6": g.to_graph6(),
        "landmarks": landmarks,
        "deficiency": deficiency(&g),
        "predicted": predicted,
        "matching": m.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
    })
    .to_string())
}

pub fn certify_json(input: &str, n: usize, mode: &str) -> Result<String, String> {
    let (g, _) = parse_graph(input)?;
    let report = match mode {
        "diameter" => bounded_diameter_matching_with(&g, n, Precondition::Record),
        "structured" => structured_matching_with(&g, n, Precondition::Record),
        other => return Err(format!("unknown mode {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    let mut v = report.to_json();
    v["order"] = json!(g.order());
    v["edges"] = json!(edges(&g));
    v["deficiency"] = json!(deficiency(&g));
    v["all_pass"] = json!(report.all_pass());
    Ok(v.to_string())
}

pub fn classify_json(h1: &str, h2: &str, d: usize) -> Result<String, String> {
    let (a, _) = parse_graph(h1)?;
    let (b, _) = parse_graph(h2)?;
    let verdict = pair_classify(&a, &b, d).map_err(|e| e.to_string())?;
    let text = match verdict {
        PairVerdict::Member(s) => format!("Member({s})"),
        PairVerdict::NotMember(RejectReason::Shape) => {
            "NotMember: not a star together with T3 or P4".to_string()
        }
        PairVerdict::NotMember(RejectReason::SRange { s }) => {
            format!("NotMember: star size {s} is outside [4, {}]", d + 1)
        }
    };
    Ok(json!({"member": matches!(verdict, PairVerdict::Member(_)), "text": text}).to_string())
}

#[wasm_bindgen]
pub fn generate_graph(input: &str) -> Result<String, JsValue> {
    generate_json(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn certify(input: &str, n: usize, mode: &str) -> Result<String, JsValue> {
    certify_json(input, n, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn classify_pair(h1: &str, h2: &str, d: usize) -> Result<String, JsValue> {
    classify_json(h1, h2, d).map_err(|e| JsValue::from_str(&e))
}
