use deflab_cli::dispatch;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("deflab").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = dispatch(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}\n{err}"));
    (code, v)
}

fn temp_file(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("deflab-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn documented_examples() {
    assert_eq!(run(&["def", "frakK(3,1)"]), (0, "3\n".into(), String::new()));
    let (code, out, _) = run(&["pairs", "--h1", "star(4)", "--h2", "T(3)", "--d", "3"]);
    assert_eq!((code, out.trim()), (0, "Member(4)"));
    let (code, _, err) = run(&["def", "nonexistent.g6"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonexistent.g6"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["pairs", "--h1", "star(6)", "--h2", "path(4)", "--d", "4"]).0, 1);
    assert_eq!(run(&["pairs", "--h1", "star(4)", "--h2", "path(4)", "--d", "2"]).0, 2);
    assert_eq!(run(&["free", "star(4)", "--family", "A", "--n", "4"]).0, 1);
    assert_eq!(run(&["free", "path(5)", "--family", "A"]).0, 2);
    assert_eq!(run(&["free", "path(5)", "--family", "A", "--n", "5"]).0, 2);
    assert_eq!(run(&["leq", "path(3)", "path(2)"]).0, 1);
    assert_eq!(run(&["leq", "path(2)", "star(3), bones"]).0, 2);
    assert_eq!(run(&["certify", "star(5)", "--n", "4"]).0, 3);
    assert_eq!(run(&["certify", "star(5)", "--n", "4", "--record"]).0, 3);
    assert_eq!(run(&["certify", "cycle(9)", "--n", "3"]).0, 2);
    assert_eq!(run(&["certify", "empty(2)", "--n", "4"]).0, 3);
    assert_eq!(run(&["enumerate", "--n", "10"]).0, 2);
    assert_eq!(run(&["check", "--family", "star(3)", "--bound", "1", "--max-n", "10"]).0, 2);
    assert_eq!(run(&["check", "--family", "star(4)", "--bound", "1", "--max-n", "6"]).0, 1);
    assert_eq!(run(&["gen", "cycle(2)"]).0, 2);
    assert_eq!(run(&["--jobs", "0", "def", "path(3)"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn malformed_input_never_panics() {
    let bad = temp_file("bad.g6", "this is not graph6 \u{7f}\n");
    let empty = temp_file("empty.g6", "\n\n");
    let short = temp_file("short.txt", "3 2\n0 1\n");
    for args in [
        vec!["def", "@/no/such/file"],
        vec!["def", &bad],
        vec!["def", &empty],
        vec!["def", &short],
        vec!["def", "frakK(0,1)"],
        vec!["def", "star(99999999999999999999)"],
        vec!["free", "path(3)", "--family", "{", "--n", "4"],
        vec!["leq", "", "path(2)"],
        vec!["pairs", "--h1", "path(40)", "--h2", "T(3)", "--d", "3"],
        vec!["certify", "path(40)", "--n", "4", "--mode", "structured"],
        vec!["certify", "path(4)", "--n", "4", "--mode", "sideways"],
    ] {
        assert_eq!(run(&args).0, 2, "{args:?}");
    }
}

#[test]
fn files_and_specs_are_interchangeable() {
    let g6 = temp_file("three.g6", "Bw\nCF\nC~\n");
    let (code, out, _) = run(&["def", &g6]);
    assert_eq!((code, out.as_str()), (0, "1\n2\n0\n"));
    assert_eq!(run(&["def", &format!("@{g6}")]).1, out);
    let edges = temp_file("edges.txt", "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(run(&["def", &edges]).1, "0\n");
    let (code, report) = json(&["certify", &edges, "--n", "4", "--mode", "structured"]);
    assert_eq!(code, 0);
    assert_eq!(report["missed"], serde_json::json!([]));
}

#[test]
fn json_payloads_parse() {
    let (_, v) = json(&["gen", "frakK(2,1)"]);
    assert_eq!(v["order"], 6);
    assert!(v["landmarks"].is_object());
    let (_, v) = json(&["def", "frakH(2,3,2)"]);
    assert_eq!(v[0]["deficiency"], 3);
    let (_, v) = json(&["free", "star(4)", "--family", "star(4), T(3)"]);
    assert_eq!(v[0]["free"], false);
    assert_eq!(v[0]["member"], "star(4)");
    let (_, v) = json(&["leq", "path(2)", "path(2), path(3)"]);
    assert_eq!(v["leq"], true);
    let (_, v) = json(&["certify", "cycle(12)", "--n", "4"]);
    for key in ["matching", "missed", "claimed_bound", "assertions", "precondition_ok"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v["claimed_bound"].is_string());
    let (_, v) = json(&["verify-lemmas", "--max-size", "12"]);
    assert!(v.as_array().unwrap().iter().all(|s| s["mismatches"].as_array().unwrap().is_empty()));
    let (_, v) = json(&["enumerate", "--n", "5"]);
    assert_eq!(v.as_array().unwrap().len(), 21);
    let (_, v) = json(&["check", "--family", "star(3)", "--bound", "1", "--max-n", "7"]);
    assert_eq!(v["failures"], serde_json::json!([]));
    let (_, v) = json(&["pairs", "--h1", "path(4)", "--h2", "star(5)", "--d", "4"]);
    assert_eq!(v["verdict"]["Member"], 5);
}

#[test]
fn output_is_independent_of_worker_count() {
    let args = ["check", "--family", "star(4)", "--bound", "1", "--max-n", "7"];
    let strip = |v: Value| (v["failures"].clone(), v["instances_checked"].clone());
    let one = strip(json(&[&["--jobs", "1"][..], &args].concat()).1);
    let four = strip(json(&[&["--jobs", "4"][..], &args].concat()).1);
    assert_eq!(one, four);
    assert!(!one.0.as_array().unwrap().is_empty());
    let many = temp_file("many.g6", &run(&["enumerate", "--n", "6"]).1);
    assert_eq!(run(&["--jobs", "1", "def", &many]).1, run(&["--jobs", "3", "def", &many]).1);
}

#[test]
fn enumerate_streams_one_graph_per_line() {
    let (code, out, _) = run(&["enumerate", "--n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 853);
}
