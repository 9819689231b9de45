//! End-to-end tests of the `plgeom` binary: output contracts, exit codes,
//! file round-trips.

use std::path::Path;
use std::process::{Command, Output};

use plgeom::Instance;

fn plgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plgeom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn bound_envelope_prints_the_closed_form() {
    let out = plgeom(&[
        "bound", "envelope", "--n1", "1", "--c1", "1", "--n2", "1", "--c2", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("bound: 5\n"), "got: {text}");
    assert!(text.contains("convex bound: 2"));
}

#[test]
fn bound_union_free_reports_the_form_discrepancy() {
    let out = plgeom(&["bound", "union-free", "--n1", "3", "--n2", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("bound: 13\n"), "got: {text}");
    assert!(text.contains("argmax"));
    assert!(text.contains("ceiling form matches"));
}

#[test]
fn bound_intersection_counts_concave_vertices() {
    let out = plgeom(&[
        "bound",
        "intersection",
        "--n1",
        "3",
        "--r1",
        "0",
        "--n2",
        "3",
        "--r2",
        "0",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("bound: 6\n"));
}

#[test]
fn bound_rejects_inconsistent_censuses() {
    let out = plgeom(&[
        "bound", "envelope", "--n1", "1", "--c1", "2", "--n2", "1", "--c2", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_renders_json_on_request() {
    let out = plgeom(&[
        "bound", "envelope", "--n1", "1", "--c1", "1", "--n2", "1", "--c2", "1", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["n_bound"], 5);
}

#[test]
fn gen_round_trips_bit_identically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    let out = plgeom(&[
        "gen",
        "envelope",
        "--c1",
        "1",
        "--c2",
        "1",
        "--r1",
        "0",
        "--r2",
        "0",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let first = std::fs::read_to_string(&path).unwrap();
    let instance = Instance::read_file(&path).unwrap();
    assert_eq!(instance.kind_name(), "envelope");
    assert_eq!(instance.trace().unwrap().expected_n0, 5);
    // Parse back and re-serialize: bytes must match.
    assert_eq!(instance.to_json(), first);
}

#[test]
fn gen_without_out_prints_the_instance() {
    let out = plgeom(&[
        "gen", "envelope", "--c1", "0", "--c2", "0", "--r1", "0", "--r2", "0",
    ]);
    assert!(out.status.success());
    let instance: Instance = serde_json::from_str(&stdout(&out)).expect("instance json");
    assert_eq!(instance.kind_name(), "envelope");
}

#[test]
fn gen_union_writes_a_deterministic_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg1 = dir.path().join("a.svg");
    let svg2 = dir.path().join("b.svg");
    for svg in [&svg1, &svg2] {
        let out = plgeom(&[
            "gen",
            "union",
            "--c1",
            "3",
            "--c2",
            "3",
            "--r1",
            "0",
            "--r2",
            "0",
            "-o",
            dir.path().join("u.json").to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read_to_string(&svg1).unwrap();
    let b = std::fs::read_to_string(&svg2).unwrap();
    assert!(a.starts_with("<svg "));
    assert_eq!(a, b);
}

#[test]
fn gen_rejects_infeasible_parameters() {
    let out = plgeom(&[
        "gen", "union", "--c1", "2", "--c2", "3", "--r1", "0", "--r2", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_reports_io_failures() {
    let out = plgeom(&[
        "gen",
        "envelope",
        "--c1",
        "1",
        "--c2",
        "1",
        "--r1",
        "0",
        "--r2",
        "0",
        "-o",
        "/nonexistent-dir/e.json",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_campaign_exits_clean_and_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let out = plgeom(&[
        "verify",
        "union",
        "--trials",
        "40",
        "--seed",
        "2",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let rows: Vec<String> = std::fs::read_to_string(&csv)
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect();
    assert_eq!(rows.len(), 41, "header plus one row per trial");
    assert_eq!(rows[0], "trial,seed,n1,c1,n2,c2,n0,bound,slack,status");
    assert!(rows[1].ends_with(",ok") || rows[1].ends_with(",skipped"));
}

#[test]
fn verify_campaigns_are_seed_deterministic() {
    let run = |seed: &str| {
        stdout(&plgeom(&[
            "verify", "envelope", "--trials", "50", "--seed", seed,
        ]))
    };
    assert_eq!(run("9"), run("9"));
    assert_ne!(run("9"), run("10"));
}

#[test]
fn verify_from_reports_zero_slack_on_extremal_instances() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.json");
    let gen = plgeom(&[
        "gen",
        "intersection",
        "--r1",
        "0",
        "--r2",
        "3",
        "--c1",
        "3",
        "--c2",
        "3",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let out = plgeom(&["verify", "intersection", "--from", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("slack: 0"), "got: {text}");
    assert!(text.contains("status: ok"));
}

#[test]
fn verify_from_rejects_mismatched_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    let gen = plgeom(&[
        "gen",
        "envelope",
        "--c1",
        "1",
        "--c2",
        "1",
        "--r1",
        "0",
        "--r2",
        "0",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let out = plgeom(&["verify", "union", "--from", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_sweeps_report_every_row_tight() {
    let out = plgeom(&["table", "envelope", "--max", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("all tight"), "got: {text}");
    assert!(!text.contains("MISMATCH"));

    let out = plgeom(&["table", "intersection", "--max", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().skip(1).all(|line| line.ends_with(",tight")));
}

#[test]
fn usage_errors_exit_with_code_two() {
    let out = plgeom(&["bound", "envelope", "--n1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = plgeom(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_instance_file_is_an_io_error() {
    let out = plgeom(&["verify", "envelope", "--from", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(3));
}

fn write_instance(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn malformed_instance_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    write_instance(&path, "{\"kind\": \"envelope\"");
    let out = plgeom(&["verify", "envelope", "--from", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}
