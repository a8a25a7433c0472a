use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "examples", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn dchase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dchase")).args(args).output().expect("run dchase")
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json", "--no-timing"];
    all.extend_from_slice(args);
    let out = dchase(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

fn all_hold(v: &Value) -> bool {
    v["verdicts"].as_array().unwrap().iter().all(|x| x["holds"] == true)
}

#[test]
fn worked_snake_prints_delta() {
    let out = dchase(&["snake", &example("snake_worked.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("delta:\n    [1]\n"), "{text}");
    let (code, v) = json_of(&["snake", "--via-grids", &example("snake_worked.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["delta"]["entries"], serde_json::json!([[1]]));
    assert_eq!(v["details"]["delta_via_grids"], v["details"]["delta"]);
    assert_eq!(v["tables"]["six_term_dims"], serde_json::json!([0, 0, 1, 1, 0, 0]));
}

#[test]
fn perturbed_grid_is_rejected_with_its_square() {
    let (code, v) = json_of(&["validate", &example("grid_perturbed.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["exit_code"], 2);
    assert_eq!(v["tables"]["inexact_columns"], serde_json::json!(["2,2"]));
    let (code, _) = json_of(&["kcl", &example("grid_perturbed.json")]);
    assert_eq!(code, 2);
}

#[test]
fn zero_grid_has_equal_lists() {
    let (code, v) = json_of(&["kcl", &example("grid_zero.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["tables"]["top"], v["tables"]["left"]);
    assert!(all_hold(&v));
}

#[test]
fn example_files_pass() {
    let runs: [&[&str]; 6] = [
        &["validate", &example("grid_kernel.json")],
        &["kcl", "--iso", &example("grid_kernel.json")],
        &["ccl", "--iso", &example("grid_cokernel.json")],
        &["cross", &example("cross.json")],
        &["snake", "--via-grids", &example("snake.json")],
        &["hom", "--additivity", &example("hom_aseq.json"), &example("hom_eseq.json")],
    ];
    for args in runs {
        let (code, v) = json_of(args);
        assert_eq!(code, 0, "{args:?}: {v}");
        assert!(all_hold(&v), "{args:?}");
        assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
        assert!(v.get("elapsed_ms").is_none());
    }
}

#[test]
fn hom_example_has_a_defect() {
    let (_, v) = json_of(&["hom", "--additivity", &example("hom_aseq.json"), &example("hom_eseq.json")]);
    assert_eq!(v["tables"]["defect"], 3);
    assert_eq!(v["tables"]["right"], v["tables"]["bottom"]);
    assert_eq!(v["details"]["summand"]["method"], "exhaustive");
}

#[test]
fn iso_matrices_are_square() {
    let (_, v) = json_of(&["kcl", "--iso", &example("grid_kernel.json")]);
    for iso in v["details"]["isomorphisms"].as_array().unwrap() {
        assert_eq!(iso["source_dim"], iso["target_dim"]);
        assert_eq!(iso["matrix"]["rows"], iso["matrix"]["cols"]);
    }
    let (code, v) = json_of(&["kcl", "--position", "1", &example("grid_kernel.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 3);
}

#[test]
fn input_errors_exit_2() {
    let (code, v) = json_of(&["kcl", "--position", "9", &example("grid_kernel.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "position");
    let (code, v) = json_of(&["ccl", &example("grid_kernel.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "orientation");
    let out = dchase(&["validate", "/nonexistent/grid.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dchase(&["--field", "4", "validate", &example("grid_kernel.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_name_the_place() {
    let dir = std::env::temp_dir().join(format!("dchase-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\n  \"field\": 2,\n  \"f\": [1,\n}").unwrap();
    let out = dchase(&["cross", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
    std::fs::write(&bad, r#"{"field": {"prime": 2}, "beta1": {"rows": 1, "cols": 1, "entries": [[1]]}}"#).unwrap();
    let err = String::from_utf8(dchase(&["cross", bad.to_str().unwrap()]).stderr).unwrap();
    assert!(err.contains("beta2"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(dchase(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(dchase(&["gen", "lattice"]).status.code(), Some(3));
    assert_eq!(dchase(&["kcl"]).status.code(), Some(3));
    assert_eq!(dchase(&["--help"]).status.code(), Some(0));
}

#[test]
fn gen_is_deterministic_and_valid() {
    let dir = std::env::temp_dir().join(format!("dchase-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for kind in ["complex", "grid", "cross", "snake", "hom"] {
        let a = dchase(&["gen", kind, "--seed", "9", "--field", "5"]);
        let b = dchase(&["gen", kind, "--seed", "9", "--field", "5"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{kind}");
        let c = dchase(&["gen", kind, "--seed", "10", "--field", "5"]);
        assert_ne!(a.stdout, c.stdout, "{kind}");
    }
    let path = dir.join("g.json");
    let p = path.to_str().unwrap();
    let out = dchase(&["gen", "grid", "--seed", "3", "--shape", "4,3,1", "--max-dim", "5", "--orientation", "cokernel", "-o", p, "-q"]);
    assert_eq!(out.status.code(), Some(0));
    let (code, v) = json_of(&["ccl", p]);
    assert_eq!(code, 0, "{v}");
    let path = dir.join("s.json");
    let p = path.to_str().unwrap();
    assert_eq!(dchase(&["gen", "snake", "--seed", "4", "-o", p, "-q"]).status.code(), Some(0));
    let (code, v) = json_of(&["snake", "--via-grids", p]);
    assert_eq!(code, 0, "{v}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_output_is_byte_identical() {
    let args = ["--json", "--no-timing", "snake", "--via-grids", &example("snake.json")];
    assert_eq!(dchase(&args).stdout, dchase(&args).stdout);
    let (code, v) = json_of(&["selftest", "--seeds", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["selftest"]["passed"], true);
}

#[test]
fn quiet_prints_nothing() {
    let out = dchase(&["-q", "validate", &example("grid_perturbed.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}
