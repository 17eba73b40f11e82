use std::process::{Command, Output};

use serde_json::Value;

fn glsw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glsw"))
        .args(args)
        .env_remove("GLSW_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn catalog_bc1() {
    let out = glsw(&["catalog", "BC1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["null_root"], serde_json::json!([1, 2]));
    assert_eq!(r["tier"], 2);
    assert_eq!(r["defect"], serde_json::json!([-1, 2]));
}

#[test]
fn catalog_e8_and_unknown() {
    let r = json(&glsw(&["catalog", "E8"]));
    assert_eq!(r["null_root"].as_array().unwrap().len(), 9);
    let out = glsw(&["catalog", "X9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"].is_string());
}

#[test]
fn decompose_examples() {
    for (v, m, w) in [("2,4", 2, [0, 0]), ("3,5", 0, [3, 5]), ("2,2", 0, [2, 2])] {
        let out = glsw(&["decompose", "BC1", "-v", v, "--seed", "3"]);
        assert_eq!(out.status.code(), Some(0), "{v}");
        let r = json(&out);
        assert_eq!(r["m"], m);
        assert_eq!(r["w"], serde_json::json!(w));
    }
    let r = json(&glsw(&["decompose", "BC1", "-v", "2,2"]));
    assert_eq!(r["summands"], serde_json::json!([[[1, 1], 2]]));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(glsw(&["verify", "catalog"]).status.code(), Some(0));
    assert_eq!(glsw(&["verify", "bc1", "--seed", "7"]).status.code(), Some(0));
    let out = glsw(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["schema"], 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "euler", "--seed", "5"];
    let (a, b) = (glsw(&args), glsw(&args));
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_glsw"))
        .args(["verify", "euler"])
        .env("GLSW_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn tsv_and_caps() {
    let out = glsw(&[
        "verify",
        "stability",
        "--format",
        "tsv",
        "--caps",
        "dim=8,enum=1000000",
        "--primes",
        "3,5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.ends_with("\tpass")));
    assert_eq!(
        glsw(&["verify", "stability", "--caps", "depth=3"]).status.code(),
        Some(2)
    );
}
