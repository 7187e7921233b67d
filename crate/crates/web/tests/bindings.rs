use deflab_web::{certify_json, classify_json, generate_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn generate_reports_deficiency_and_matching() {
    let v = parse(&generate_json("frakK(3,1)").unwrap());
    assert_eq!(v["order"], 9);
    assert_eq!(v["deficiency"], 3);
    assert_eq!(v["predicted"], 3);
    assert_eq!(v["matching"].as_array().unwrap().len(), 3);
    let v = parse(&generate_json("3 2\n0 1\n1 2\n").unwrap());
    assert_eq!(v["deficiency"], 1);
    assert!(v["predicted"].is_null());
    assert!(generate_json("cycle(2)").is_err());
    assert!(generate_json("path(100000)").is_err());
}

#[test]
fn certify_records_violations_instead_of_refusing() {
    let v = parse(&certify_json("cycle(10)", 4, "diameter").unwrap());
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["missed"], serde_json::json!([]));
    let v = parse(&certify_json("star(5)", 4, "structured").unwrap());
    assert_eq!(v["precondition_ok"], false);
    assert!(certify_json("path(4)", 4, "sideways").is_err());
    assert!(certify_json("empty(3)", 4, "diameter").is_err());
}

#[test]
fn classify_explains_rejections() {
    assert_eq!(parse(&classify_json("star(4)", "T(3)", 3).unwrap())["text"], "Member(4)");
    let v = parse(&classify_json("star(6)", "path(4)", 4).unwrap());
    assert_eq!(v["member"], false);
    assert!(v["text"].as_str().unwrap().contains("outside [4, 5]"));
    assert!(classify_json("star(4)", "T(3)", 2).is_err());
}
