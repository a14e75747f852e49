use std::process::{Command, Output};

use serde_json::Value;

fn rootgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootgeo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn without_timing(out: &Output) -> Value {
    let mut v = json(out);
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn verify_embedding_passes() {
    let out = rootgeo(&[
        "verify-embedding", "--field", "fp(t):5", "--n", "2", "--samples", "500", "--seed", "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["samples"], 500);
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn ronan_cover_plane_over_f2() {
    let out = rootgeo(&["ronan-cover", "--n", "2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cover_dim"], 8);
    assert_eq!(v["total_dim"], 49);
}

#[test]
fn dimension_report_over_rationals() {
    let out = rootgeo(&["dimension-report", "--field", "q", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dimension"], 8);
}

#[test]
fn dimension_report_over_function_field() {
    let out = rootgeo(&["dimension-report", "--field", "fp(t):5", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dimension"], 9);
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify-action", "--field", "q(t)", "--n", "2", "--samples", "20", "--seed", "3"];
    let a = rootgeo(&args);
    let b = rootgeo(&args);
    assert_eq!(without_timing(&a), without_timing(&b));
    let strip = |o: &Output| {
        String::from_utf8_lossy(&o.stdout)
            .lines()
            .filter(|l| !l.contains("timing_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["verify-embedding", "--field", "q(t)", "--n", "2", "--samples", "30", "--seed", "5"];
    let one = Command::new(env!("CARGO_BIN_EXE_rootgeo"))
        .args(args)
        .env("ROOTGEO_THREADS", "1")
        .output()
        .unwrap();
    let default = rootgeo(&args);
    assert_eq!(without_timing(&one), without_timing(&default));
}

#[test]
fn bad_field_is_a_usage_error() {
    let out = rootgeo(&["verify-action", "--field", "fp:4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    assert_eq!(rootgeo(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn split_verdicts() {
    let out = rootgeo(&["extension-split", "--cocycle", "derivation", "--expect", "non-split"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["details"]["verdict"]["verdict"], "non_split_certificate");

    let out = rootgeo(&["extension-split", "--cocycle", "coboundary", "--expect", "split"]);
    assert_eq!(out.status.code(), Some(0));

    let out = rootgeo(&["extension-split", "--cocycle", "zero", "--expect", "non-split"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn derivation_cocycle_needs_derivations() {
    let out = rootgeo(&["cocycle-check", "--field", "fp:5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = rootgeo(&["cocycle-check", "--field", "fp:5", "--cocycle", "coboundary", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn claim_witness_over_function_field() {
    let out = rootgeo(&["claim-witness", "--field", "q(t)", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["witness"]["left"], "(t^2-1)/(t^2)");
    assert_eq!(v["witness"]["right"], "(-t+1)/(t)");
    assert_ne!(v["witness"]["difference"], "0");
}

#[test]
fn collinearity_is_exhaustive_over_prime_fields() {
    let out = rootgeo(&["verify-collinearity", "--field", "fp:2", "--embedding", "natural"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["samples"], 14);
}

#[test]
fn enumerate_feeds_ronan_cover() {
    let out = rootgeo(&["enumerate", "--n", "2", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let dump = json(&out);
    let dir = std::env::temp_dir().join(format!("rootgeo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("plane3.json");
    let mut plain = dump.clone();
    plain.as_object_mut().unwrap().remove("timing_ms");
    std::fs::write(&path, serde_json::to_string(&plain).unwrap()).unwrap();
    let out = rootgeo(&["ronan-cover", "--q", "3", "--geometry", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cover_dim"], 8);
    assert_eq!(v["flags"], 52);
    std::fs::remove_dir_all(&dir).ok();
}
