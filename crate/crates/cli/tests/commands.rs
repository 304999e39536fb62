use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit")).args(args).output().expect("binary runs")
}

fn hopfkit_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn catalog_file(dir: &Path, p: u32, family: &str, case: u32) -> String {
    let out = hopfkit(&["catalog", "--p", &p.to_string(), "--family", family, "--case", &case.to_string()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let path = dir.join(format!("{family}-{case}-p{p}.json"));
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn catalog_documents() {
    let out = hopfkit(&["catalog", "--p", "2", "--family", "D2", "--case", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["dim"], 4);
    assert_eq!(doc["format_version"], "1");

    let out = hopfkit(&["catalog", "--p", "7", "--family", "D1", "--case", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dim"], 7);

    let out = hopfkit(&["catalog", "--p", "2", "--family", "D2", "--case", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = hopfkit(&["catalog", "--p", "4", "--family", "D1", "--case", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_pass_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let file = catalog_file(dir.path(), 3, "D2", 3);
    let out = hopfkit(&["verify", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    // Make x·x = 1 + x·x, breaking associativity.
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let mult = doc["mult"].as_array_mut().unwrap();
    let x = 3u64; // PBW index of x at p = 3
    mult.push(serde_json::json!([x, x, 0, 1]));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, doc.to_string()).unwrap();
    let out = hopfkit(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let failed: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.iter().any(|n| n.contains("associativity")), "{failed:?}");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{\"p\": 2").unwrap();
    for cmd in ["verify", "primitives", "coradical", "dual", "fingerprint"] {
        let out = hopfkit(&[cmd, path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{cmd}");
    }
    let out = hopfkit(&["verify", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let file = catalog_file(dir.path(), 2, "D2", 1);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    doc["comult"][0][1] = serde_json::json!(17);
    std::fs::write(&path, doc.to_string()).unwrap();
    assert_eq!(hopfkit(&["verify", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn coradical_primitives_fingerprint() {
    let dir = tempfile::tempdir().unwrap();
    let file = catalog_file(dir.path(), 2, "D2", 6);
    let out = hopfkit(&["coradical", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!({"dims": [1, 2, 3, 4], "connected": true}));

    let out = hopfkit(&["primitives", &file]);
    assert_eq!(json(&out)["dimension"], 1);

    let out = hopfkit(&["fingerprint", &file]);
    let fp = json(&out);
    assert_eq!(fp["dim_p"], 1);
    assert_eq!(fp["local"], true);
    assert_eq!(fp["min_alg_generators"], 2);
}

#[test]
fn dual_output_is_a_document() {
    let dir = tempfile::tempdir().unwrap();
    let file = catalog_file(dir.path(), 3, "D2", 2);
    let out = hopfkit(&["dual", &file]);
    assert_eq!(out.status.code(), Some(0));
    let path = dir.path().join("dual.json");
    std::fs::write(&path, &out.stdout).unwrap();
    assert_eq!(hopfkit(&["verify", path.to_str().unwrap()]).status.code(), Some(0));
    let fp = json(&hopfkit(&["fingerprint", path.to_str().unwrap()]));
    assert_eq!(fp["local"], true);
    assert_eq!(fp["commutative"], true);
}

#[test]
fn cohomology_dimensions_and_guard() {
    let dir = tempfile::tempdir().unwrap();
    let file = catalog_file(dir.path(), 3, "D1", 1);
    let out = hopfkit(&["cohomology", &file, "--degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dimension"], 1);

    let file = catalog_file(dir.path(), 2, "D2", 1);
    let out = hopfkit(&["cohomology", &file, "--degree", "2"]);
    assert_eq!(json(&out)["dimension"], 3);
    let out = hopfkit(&["cohomology", &file, "--degree", "1"]);
    assert_eq!(json(&out)["dimension"], 2);

    let out = hopfkit_env(&["cohomology", &file, "--degree", "2"], "HOPFKIT_MAX_TENSOR", "10");
    assert_eq!(out.status.code(), Some(3));
    let big = catalog_file(dir.path(), 7, "D2", 1);
    let out = hopfkit(&["cohomology", &big, "--degree", "2"]);
    assert_eq!(out.status.code(), Some(3));

    let out = hopfkit(&["cohomology", &file, "--degree", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_and_verbose_logging() {
    let out = hopfkit(&["--verbose", "classify", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stderr.is_empty());
    let report = json(&out);
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let quiet = hopfkit(&["classify", "--p", "2"]);
    assert!(quiet.stderr.is_empty());
}
