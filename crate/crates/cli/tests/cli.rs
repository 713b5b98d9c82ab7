use std::path::{Path, PathBuf};

use hdx_cli::run_with;
use hdx_core::Complex2;
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn hdx(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hdx").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("{e}: {}", run.stdout))
}

fn write_complex(dir: &TempDir, name: &str, x: &Complex2) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, x.to_json()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_theorem_passes_on_complete_complexes() {
    let dir = TempDir::new().unwrap();
    for n in [4, 5] {
        let path = write_complex(&dir, &format!("k{n}.complex"), &Complex2::complete(n));
        let run = hdx(&["verify-theorem", s(&path), "--steps", "100"]);
        assert_eq!(run.code, 0, "{}", run.stderr);
        let report = json(&run);
        assert_eq!(report["status"], "pass");
        let alpha = report["results"]["alpha"].as_f64().unwrap();
        assert!(alpha > 0.0 && alpha < 1.0);
        assert_eq!(report["results"]["rapid_mixing"]["spectral_decay"], true);
        assert_eq!(report["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn missing_input_is_a_usage_error() {
    let run = hdx(&["spectrum", "missing.complex"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("missing.complex"));
    assert_eq!(json(&run)["status"], "error");
}

#[test]
fn capacity_threshold_on_edges() {
    let dir = TempDir::new().unwrap();
    let k7 = write_complex(&dir, "k7.complex", &Complex2::complete(7));
    let k8 = write_complex(&dir, "k8.complex", &Complex2::complete(8));
    assert_eq!(hdx(&["certify", s(&k7)]).code, 0);
    let run = hdx(&["certify", s(&k8)]);
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("capacity"));
}

#[test]
fn unknown_subcommand_or_flag_prints_usage() {
    let run = hdx(&["frobnicate"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("Usage"));
    assert!(run.stdout.is_empty());
    let run = hdx(&["certify", "x.complex", "--bogus"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("Usage"));
}

#[test]
fn strict_promotes_not_applicable() {
    let dir = TempDir::new().unwrap();
    let x = Complex2::build_from_triangles(&[[0, 1, 2], [1, 2, 3]], &[]).unwrap();
    let path = write_complex(&dir, "pair.complex", &x);
    let run = hdx(&["verify-theorem", s(&path), "--steps", "10"]);
    assert_eq!(run.code, 0);
    assert_eq!(json(&run)["status"], "not-applicable");
    assert_eq!(
        hdx(&["--strict", "verify-theorem", s(&path), "--steps", "10"]).code,
        1
    );
    assert_eq!(
        hdx(&["verify-theorem", s(&path), "--steps", "10", "--strict"]).code,
        1
    );

    let k4 = write_complex(&dir, "k4.complex", &Complex2::complete(4));
    assert_eq!(
        hdx(&["--strict", "verify-theorem", s(&k4), "--steps", "10"]).code,
        0
    );
}

#[test]
fn reports_are_byte_for_byte_reproducible() {
    let dir = TempDir::new().unwrap();
    let path = write_complex(&dir, "k5.complex", &Complex2::complete(5));
    for args in [
        vec!["certify", s(&path)],
        vec!["audit", s(&path), "--lemma", "all"],
        vec![
            "audit",
            s(&path),
            "--lemma",
            "sum",
            "--samples",
            "50",
            "--seed",
            "3",
        ],
        vec![
            "walk",
            s(&path),
            "--start",
            "2",
            "--steps",
            "6",
            "--paths",
            "500",
            "--seed",
            "9",
        ],
        vec!["verify-theorem", s(&path), "--steps", "20"],
    ] {
        let a = hdx(&args);
        let b = hdx(&args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn report_records_resolved_flags() {
    let dir = TempDir::new().unwrap();
    let path = write_complex(&dir, "k4.complex", &Complex2::complete(4));
    let report = json(&hdx(&[
        "spectrum",
        s(&path),
        "--graph",
        "g1",
        "--eigen-tol",
        "1e-10",
    ]));
    let flags = &report["command"]["flags"];
    assert_eq!(flags["graph"], "g1");
    assert_eq!(flags["eigen_tol"], 1e-10);
    assert_eq!(flags["slack"], 1e-9);
    assert_eq!(flags["strict"], false);
    assert_eq!(report["command"]["argv"][0], "hdx");
    let spectrum: Vec<f64> = report["results"]["spectrum"]["normalized_eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    let expected = [1.0, 0.0, 0.0, 0.0, -0.5, -0.5];
    for (a, b) in spectrum.iter().zip(expected) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn walk_emits_csv_with_header() {
    let dir = TempDir::new().unwrap();
    let path = write_complex(&dir, "k4.complex", &Complex2::complete(4));
    let run = hdx(&[
        "walk",
        s(&path),
        "--start",
        "0-1",
        "--steps",
        "4",
        "--exact",
        "--alpha",
        "auto",
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert!(lines[0].starts_with("# hdx walk "));
    let header = lines.iter().position(|l| !l.starts_with('#')).unwrap();
    assert_eq!(lines[header], "step,distance,alpha_power,ok");
    let rows = &lines[header + 1..];
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    assert!(rows[0].starts_with("0,0.912870929175"));

    let bad = hdx(&["walk", s(&path), "--start", "0-9", "--steps", "4"]);
    assert_eq!(bad.code, 2);
    let both = hdx(&[
        "walk",
        s(&path),
        "--start",
        "0",
        "--steps",
        "4",
        "--exact",
        "--paths",
        "10",
    ]);
    assert_eq!(both.code, 2);
}

#[test]
fn walk_without_triangles_is_an_undefined_transition() {
    let dir = TempDir::new().unwrap();
    let x = Complex2::build_from_triangles(&[[0, 1, 2]], &[[2, 3]]).unwrap();
    let path = write_complex(&dir, "tail.complex", &x);
    let edge = x.edge_id(2, 3).unwrap().to_string();
    let run = hdx(&[
        "walk",
        s(&path),
        "--start",
        &edge,
        "--steps",
        "3",
        "--paths",
        "5",
    ]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("undefined transition"));
}

#[test]
fn gen_output_round_trips() {
    let dir = TempDir::new().unwrap();
    let a = hdx(&["gen", "random", "--n", "6", "--p", "0.5", "--seed", "42"]);
    let b = hdx(&["gen", "random", "--n", "6", "--p", "0.5", "--seed", "42"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let x = Complex2::from_json(&a.stdout).unwrap();
    assert_eq!(x, Complex2::random(6, 0.5, 42).unwrap());
    let path = dir.path().join("r.complex");
    std::fs::write(&path, &a.stdout).unwrap();
    let report = json(&hdx(&["validate", s(&path)]));
    assert_eq!(report["results"]["valid"], true);
    assert_eq!(report["results"]["edges"], 15);
    assert_eq!(
        hdx(&["gen", "random", "--n", "6", "--p", "1.5", "--seed", "1"]).code,
        2
    );
}

#[test]
fn cocycles_and_cheeger_on_k4() {
    let dir = TempDir::new().unwrap();
    let path = write_complex(&dir, "k4.complex", &Complex2::complete(4));
    let report = json(&hdx(&["cocycles", s(&path), "--dim", "1"]));
    assert_eq!(report["results"]["cocycles"]["dimension"], 3);
    assert_eq!(report["results"]["coboundaries"]["dimension"], 3);
    assert_eq!(report["results"]["cohomology_dimension"], 0);
    assert_eq!(hdx(&["cocycles", s(&path), "--dim", "2"]).code, 2);

    let run = hdx(&["cheeger", s(&path), "--graph", "g0"]);
    assert_eq!(run.code, 0);
    let report = json(&run);
    assert_eq!(report["results"]["cheeger"]["h_normalized"], "2/3");
}

#[test]
fn audit_lemmas_on_k4() {
    let dir = TempDir::new().unwrap();
    let path = write_complex(&dir, "k4.complex", &Complex2::complete(4));
    let run = hdx(&["audit", s(&path), "--lemma", "all"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = json(&run);
    let lemmas = report["results"]["lemmas"].as_array().unwrap();
    let names: Vec<&str> = lemmas
        .iter()
        .map(|l| l["lemma"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["outgoing", "large-cuts", "distance", "local-views", "sum"]
    );
    assert_eq!(lemmas[0]["tally"]["checked"], 64);

    let single = json(&hdx(&["audit", s(&path), "--lemma", "sum", "--set", "0"]));
    assert_eq!(single["results"]["lemmas"][0]["tally"]["checked"], 1);

    // the one-sided mixing lemma as stated fails on K4 at S = V
    let mixing = hdx(&["audit", s(&path), "--lemma", "mixing"]);
    assert_eq!(mixing.code, 1);
    let report = json(&mixing);
    assert_eq!(
        report["results"]["lemmas"][0]["report"]["witness"],
        serde_json::json!([0, 1, 2, 3])
    );
}

#[test]
fn thread_count_does_not_change_reports() {
    let dir = TempDir::new().unwrap();
    let path = write_complex(&dir, "k6.complex", &Complex2::complete(6));
    let args = ["certify", s(&path)];
    let auto = hdx(&args);
    std::env::set_var("HDX_THREADS", "1");
    let single = hdx(&args);
    std::env::set_var("HDX_THREADS", "lots");
    let bad = hdx(&args);
    std::env::remove_var("HDX_THREADS");
    assert_eq!(auto.stdout, single.stdout);
    assert_eq!(bad.code, 2);
}
