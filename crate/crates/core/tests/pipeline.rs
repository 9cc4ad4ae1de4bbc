//! End-to-end runs of the `apolar` binary against the files in `fixtures/`.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn apolar(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_apolar")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = apolar(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn golden_macaulay_polynomials() {
    for name in ["ci_2_3", "canonical_genus6", "scroll_divisor_3h_minus_f"] {
        let variety = fixture(&format!("{name}.json"));
        let v = json(&["macaulay", "--variety", variety.to_str().unwrap(), "--seed", "0", "--json"]);
        let golden = std::fs::read_to_string(fixture(&format!("{name}.seed0.macaulay"))).unwrap();
        assert_eq!(v["macaulay_polynomial"].as_str().unwrap(), golden.trim(), "{name}");
        assert_eq!(v["seed"], 0);
        assert!(v["truncation_bound"].is_u64());
    }
}

#[test]
fn construct_is_reproducible() {
    let a = json(&["construct", "scroll-divisor", "--type", "1,1,1", "--class", "3,-1", "--seed", "3"]);
    let golden: Value = serde_json::from_str(
        &std::fs::read_to_string(fixture("scroll_divisor_3h_minus_f.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(a["generators"], golden["generators"]);
    assert_eq!(a["s"], 0);
    let (_, first, _) = apolar(&["construct", "ci", "--degrees", "3,3", "--ambient", "4", "--seed", "5"]);
    let (_, second, _) = apolar(&["construct", "ci", "--degrees", "3,3", "--ambient", "4", "--seed", "5"]);
    assert_eq!(first, second);
}

#[test]
fn hilbert_of_twisted_cubic() {
    let input = fixture("twisted_cubic.ideal");
    let v = json(&["hilbert", "--input", input.to_str().unwrap(), "--bound", "4", "--json"]);
    assert_eq!(v["values"], serde_json::json!([1, 4, 7, 10, 13]));
    assert_eq!(v["truncation_bound"], 4);
}

#[test]
fn fermat_verdicts() {
    let v = json(&["fermat", "--input", fixture("fermat_cubic.poly").to_str().unwrap(), "--json"]);
    assert_eq!(v["status"], "Fermat");
    assert!(v["witness"].is_array());
    let v = json(&["fermat", "--input", fixture("binary_quartic.poly").to_str().unwrap(), "--json", "--seed", "4"]);
    assert_eq!(v["status"], "NotFermat");
    assert_eq!(v["seed"], 4);
    let (code, _, _) = apolar(&[
        "fermat",
        "--input",
        fixture("fermat_cubic.poly").to_str().unwrap(),
        "--attempts",
        "0",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn maintheorem_both_directions() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&[
        "maintheorem",
        "--variety",
        fixture("scroll_divisor_3h_minus_f.json").to_str().unwrap(),
        "--trials",
        "5",
        "--json",
    ]);
    assert_eq!(v["consensus"], "Fermat");
    assert_eq!(v["trials"].as_array().unwrap().len(), 5);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));

    let (_, ci, _) = apolar(&["construct", "ci", "--degrees", "3,3", "--ambient", "4", "--seed", "2"]);
    let path = dir.path().join("ci33.json");
    std::fs::write(&path, ci).unwrap();
    let v = json(&["maintheorem", "--variety", path.to_str().unwrap(), "--trials", "5", "--json"]);
    assert_eq!(v["consensus"], "NotFermat");
    let trials = v["trials"].as_array().unwrap();
    assert!(trials.iter().enumerate().all(|(i, t)| t["trial"] == i));
}

#[test]
fn boundary_run_exits_with_hypothesis_code() {
    let dir = tempfile::tempdir().unwrap();
    let (_, ci, _) = apolar(&["construct", "ci", "--degrees", "2,2", "--ambient", "4"]);
    let path = dir.path().join("ci22.json");
    std::fs::write(&path, ci).unwrap();
    let (code, out, _) = apolar(&["maintheorem", "--variety", path.to_str().unwrap(), "--trials", "2"]);
    assert_eq!(code, 2);
    assert!(out.contains("boundary: s+k=2"), "{out}");
}

#[test]
fn scroll_subcommands() {
    let v = json(&["scroll", "calc", "--type", "1,1,1", "--s", "0", "--json"]);
    assert_eq!(v["predicted_degree"], 8);
    assert_eq!(v["canonical_class"], serde_json::json!({"a": -3, "b": 1}));
    let v = json(&["scroll", "transform", "--d", "7", "--f", "3", "--json"]);
    assert_eq!(v["class"], serde_json::json!({"a": 3, "b": 2}));
}

#[test]
fn bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"N\": 4,").unwrap();
    let (code, _, _) = apolar(&["macaulay", "--variety", p.to_str().unwrap()]);
    assert_eq!(code, 4);
    let (code, _, err) = apolar(&["construct", "scroll", "--type", "0,0,1"]);
    assert_eq!(code, 1, "{err}");
}
