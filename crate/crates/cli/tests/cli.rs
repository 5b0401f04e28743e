use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn infcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infcm")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("infcm-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, file: &str, body: &str) -> String {
    let p = dir.join(file);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(format!("{name}.json"));
    let s: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn assert_valid(out: &Output, result_schema: &str) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).expect("json on stdout");
    for (name, doc) in [("envelope", &v), (result_schema, &v["result"])] {
        let errors: Vec<String> =
            schema(name).iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path)).collect();
        assert!(errors.is_empty(), "{name}: {errors:?}");
    }
    v
}

const DISJOINT_EDGES: &str = r#"{"vertices": [1, 2, 3, 4], "facets": [[1, 2], [3, 4]]}"#;
const TRIANGLE_EDGE: &str = r#"{"vertices": [1, 2, 3], "facets": [[1, 2]]}"#;
const TRIANGLE: &str = r#"{"vertices": [1, 2, 3], "facets": [[1, 2, 3]]}"#;

#[test]
fn two_disjoint_edges_are_not_cohen_macaulay() {
    let dir = scratch("cm");
    let c = write(&dir, "bad.json", DISJOINT_EDGES);
    let out = infcm(&["check-cm", "--complex", &c]);
    assert_eq!(out.status.code(), Some(1));
    let v = assert_valid(&out, "cm_report");
    assert_eq!(v["result"]["reisner_pass"], false);
    assert_eq!(v["result"]["sop_quotient_pass"], false);
    assert_eq!(v["result"]["hvector"], serde_json::json!([1, 2, -1]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(infcm(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(infcm(&["schubert", "rank", "2 2 1"]).status.code(), Some(2));
    assert_eq!(infcm(&["check-cm", "--complex", "/nonexistent/complex.json"]).status.code(), Some(2));
    assert_eq!(infcm(&["--field", "12", "schubert", "rank", "2 1"]).status.code(), Some(2));
}

#[test]
fn stanley_reisner_round_trip() {
    let dir = scratch("sr");
    let ideal =
        write(&dir, "ideal.json", r#"{"squarefree": true, "generators": [[[1, 1], [2, 1]], [[3, 1], [4, 1]]]}"#);
    let out = infcm(&["sr", "from-ideal", "--ideal", &ideal]);
    assert_eq!(out.status.code(), Some(0));
    let v = assert_valid(&out, "complex");
    let c = write(&dir, "complex.json", &v["result"].to_string());
    let out = infcm(&["sr", "to-ideal", "--complex", &c]);
    assert_eq!(out.status.code(), Some(0));
    let back = assert_valid(&out, "ideal");
    assert_eq!(back["result"]["generators"].as_array().unwrap().len(), 2);
}

#[test]
fn sop_find_and_extend() {
    let dir = scratch("sop");
    let small = write(&dir, "small.json", TRIANGLE_EDGE);
    let big = write(&dir, "big.json", TRIANGLE);
    let out = infcm(&["sop", "find", "--complex", &small]);
    assert_eq!(out.status.code(), Some(0));
    let m = assert_valid(&out, "sop");
    let sop = write(&dir, "sop.json", &m["result"].to_string());
    let out = infcm(&["sop", "extend", "--complex", &small, "--sop", &sop, "--target", &big]);
    assert_eq!(out.status.code(), Some(0));
    let e = assert_valid(&out, "sop");
    let rows = m["result"]["rows"].as_array().unwrap();
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().unwrap();
        assert_eq!(&e["result"]["rows"][i].as_array().unwrap()[..row.len()], &row[..]);
    }
}

#[test]
fn verify_chain_report() {
    let dir = scratch("chain");
    let a = write(&dir, "a.json", TRIANGLE_EDGE);
    let b = write(&dir, "b.json", TRIANGLE);
    let out = infcm(&["verify-chain", "--complex", &a, &b]);
    assert_eq!(out.status.code(), Some(0));
    let v = assert_valid(&out, "chain_report");
    assert_eq!(v["result"]["pass"], true);
}

#[test]
fn groebner_check_exit_codes() {
    let ok = infcm(&["groebner", "check", "--format", "json", "--poly", "x[1,1]*x[2,2] - x[1,2]*x[2,1]"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_valid(&ok, "groebner_report");
    let bad = infcm(&["groebner", "check", "--poly", "x[1,1]*x[2,2] - x[1,2]", "--poly", "x[1,1]*x[1,2] - x[2,2]"]);
    assert_eq!(bad.status.code(), Some(1));
    let q = infcm(&["--field", "Q", "groebner", "check", "--poly", "1/2*x[1,1] + 3*x[2,2]"]);
    assert_eq!(q.status.code(), Some(0));
}

#[test]
fn schubert_outputs_validate() {
    assert_valid(&infcm(&["schubert", "rank", "2 5 3 1", "--format", "json"]), "rank");
    assert_valid(&infcm(&["schubert", "ideal", "2 5 3 1", "--essential", "--format", "json"]), "generators");
    assert_valid(&infcm(&["schubert", "initial", "2 5 3 1", "--verify", "--format", "json"]), "initial");
    assert_valid(&infcm(&["schubert", "complex", "2 5 3 1"]), "complex");
    let out = infcm(&["schubert", "pipeline", "--perm", "(1 2)", "--mmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_valid(&out, "pipeline_report");
}

#[test]
fn output_is_reproducible() {
    let dir = scratch("repro");
    let c = write(&dir, "c.json", TRIANGLE);
    let runs: [&[&str]; 3] = [
        &["--seed", "7", "sop", "find", "--complex", &c],
        &["--seed", "3", "pipeline", "--rule", "even", "--mmax", "3"],
        &["schubert", "complex", "1 3 2", "--dot"],
    ];
    for args in runs {
        let a = infcm(args);
        let b = infcm(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let s1 = infcm(&["--seed", "1", "sop", "find", "--complex", &c]);
    let s2 = infcm(&["--seed", "2", "sop", "find", "--complex", &c]);
    assert_ne!(s1.stdout, s2.stdout);
}
