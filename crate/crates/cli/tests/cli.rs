use std::process::{Command, Output};

use serde_json::Value;

fn indcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indcx")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = indcx(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn betti_examples() {
    assert_eq!(json(&["betti", "product", "3", "3"])["betti"]["1"], 4);
    let t = json(&["betti", "--window", "2", "4", "conjecture_k2k3kn", "4"]);
    assert_eq!(t["betti"]["3"], 30);
    assert_eq!(t["betti"]["2"], 0);
    assert_eq!(t["betti"]["4"], 0);
    assert_eq!(json(&["betti", "path", "6"])["betti"]["1"], 1);
    let t = json(&["betti", "--coeff", "int", "product", "2", "3"]);
    assert_eq!(t["coefficients"], "integer");
    assert_eq!(t["betti"]["1"], 2);
}

#[test]
fn gen_writes_readable_files() {
    let dir = tempfile::tempdir().unwrap();
    for (name, ext) in [("m34", "txt"), ("m34", "json")] {
        let path = dir.path().join(format!("{name}.{ext}"));
        let p = path.to_str().unwrap();
        assert!(indcx(&["gen", "mycielskian", "3", "4", "-o", p]).status.success());
        let from_file = json(&["betti", "file", p]);
        let from_spec = json(&["betti", "--full", "mycielskian", "3", "4"]);
        assert_eq!(from_file["betti"], from_spec["betti"]);
        assert_eq!(from_spec["betti"]["2"], 6);
    }
    let edges = stdout(&indcx(&["gen", "product", "2", "2"]));
    assert!(edges.starts_with("4 2 0"), "{edges}");
    let c = stdout(&indcx(&["gen", "--graph-format", "json", "cycle_ladder", "5", "3"]));
    let g: Value = serde_json::from_str(&c).unwrap();
    assert_eq!(g["vertices"].as_array().unwrap().len(), 11);
}

#[test]
fn morse_reports() {
    let r = json(&["morse", "product", "4", "5"]);
    assert_eq!(r["acyclic"], true);
    assert_eq!(r["conclusion"], "wedge(12, S^1)");
    assert_eq!(r["matching"]["critical_counts"]["1"], 12);
    let r = json(&["morse", "product", "2", "2"]);
    assert_eq!(r["matching"]["critical"], serde_json::json!([[[2, 1], [2, 2]]]));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, stdout(&indcx(&["gen", "cycle", "5"]))).unwrap();
    let r = json(&["morse", "--order", "3 1 4 2 5", "file", path.to_str().unwrap()]);
    assert_eq!(r["acyclic"], true);
    assert_eq!(r["matching"]["order"], serde_json::json!([3, 1, 4, 2, 5]));
    assert_eq!(indcx(&["morse", "--order", "1 2", "file", path.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(indcx(&["morse", "--order", "1 9", "cycle", "5"]).status.code(), Some(3));
}

#[test]
fn reduce_examples() {
    assert_eq!(json(&["reduce", "kn_lr", "3", "1"])["result"], "point");
    assert_eq!(json(&["reduce", "gadget", "3", "3"])["result"], "point");
    let c6 = json(&["reduce", "cycle", "6"]);
    assert_eq!(c6["result"], "wedge(2, S^1)");
    let c5 = json(&["reduce", "cycle", "5"]);
    assert_eq!(c5["stuck"], true);
    assert_eq!(c5["residual"]["vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_is_reproducible_and_sets_exit_codes() {
    let args = ["verify", "suspension", "--seed", "7", "--count", "25", "--deterministic", "--format", "json"];
    let a = indcx(&args);
    let b = indcx(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["summaries"][0]["matched"], 75);

    let t = indcx(&["verify", "table1"]);
    let text = stdout(&t);
    for b in ["beta_3 = 4 ", "beta_3 = 14 ", "beta_3 = 30 ", "beta_3 = 52 ", "beta_3 = 80 "] {
        assert!(text.contains(b), "{text}");
    }
    assert!(indcx(&["verify", "mycielskian", "--n", "3", "--r", "2..7"]).status.success());
    assert_eq!(indcx(&["verify", "product", "--budget-faces", "20"]).status.code(), Some(2));
}

#[test]
fn face_guard_reads_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_indcx"))
        .args(["betti", "product", "4", "4"])
        .env("INDCX_MAX_FACES", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("face limit"));
}

#[test]
fn usage_errors_exit_3() {
    for args in [
        &["frobnicate"][..],
        &["betti"],
        &["betti", "nope", "3"],
        &["betti", "mycielskian", "3", "1"],
        &["verify", "no_such_suite"],
        &["betti", "--coeff", "q", "path", "3"],
        &["betti", "file", "/nonexistent/graph.txt"],
    ] {
        assert_eq!(indcx(args).status.code(), Some(3), "{args:?}");
    }
    assert_eq!(indcx(&["--help"]).status.code(), Some(0));
}
