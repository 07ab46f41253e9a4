use std::fs;
use std::path::Path;
use std::process::Command;

use orderone::cli::{run, EXIT_MALFORMED, EXIT_NOT_REALIZABLE, EXIT_OK, EXIT_VERIFICATION};
use orderone::codec::parse_json;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("orderone").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn circle_invariants_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "gamma0.gc", "# the embedded circle\ngc:\n");
    let (code, out, err) = call(&["invariants", &file]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(err.is_empty());
    let report = parse_json(out.trim()).unwrap();
    assert_eq!(report.y, vec![(-1, "1".to_string()), (1, "1".to_string())]);
    assert_eq!(report.class, "od");
}

#[test]
fn normalization_constants_shift_arnold_values() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "g0.gc", "gc:\n");
    let (_, out, _) = call(&["invariants", &file, "--k1", "1/4", "--k2", "7"]);
    let report = parse_json(out.trim()).unwrap();
    assert_eq!(report.j_plus, "0");
    let (code, _, err) = call(&["invariants", &file, "--k1", "x"]);
    assert_eq!(code, EXIT_MALFORMED);
    assert!(!err.is_empty());
}

#[test]
fn text_format_is_line_oriented() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "g1.gc", "gc: 1- 1-\n");
    let (code, out, _) = call(&["invariants", &file, "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l == "class: ev"));
    assert!(out.lines().any(|l| l == "F: X[0,0] + Y[-2] + Y[0] + Y[2]"));
}

#[test]
fn malformed_and_unrealizable_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.gc", "gc: 1+ 2+ 1+\n");
    let (code, out, err) = call(&["validate", &bad]);
    assert_eq!(code, EXIT_MALFORMED);
    assert!(out.is_empty());
    assert_eq!(err.lines().count(), 1);
    let torus = write(dir.path(), "torus.gc", "gc: 1+ 2+ 1+ 2+\n");
    assert_eq!(call(&["validate", &torus]).0, EXIT_NOT_REALIZABLE);
    let missing = dir.path().join("missing.gc");
    assert_eq!(
        call(&["validate", missing.to_str().unwrap()]).0,
        EXIT_MALFORMED
    );
    let good = write(dir.path(), "good.gc", "gc: 1+ 1+ 2+ 2+\n");
    assert_eq!(call(&["validate", &good]).0, EXIT_OK);
}

#[test]
fn unknown_flags_and_bounds_are_rejected() {
    assert_eq!(
        call(&["enumerate", "--max-crossings", "2", "--frobnicate"]).0,
        EXIT_MALFORMED
    );
    assert_eq!(
        call(&["enumerate", "--max-crossings", "40"]).0,
        EXIT_MALFORMED
    );
    assert_eq!(
        call(&["verify", "--suite", "nope", "--max-crossings", "2"]).0,
        EXIT_MALFORMED
    );
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn enumerate_defaults_to_dedup() {
    let (_, dedup, _) = call(&["enumerate", "--max-crossings", "3", "--format", "text"]);
    let (_, explicit, _) = call(&[
        "enumerate",
        "--max-crossings",
        "3",
        "--dedup",
        "--format",
        "text",
    ]);
    let (_, all, _) = call(&[
        "enumerate",
        "--max-crossings",
        "3",
        "--no-dedup",
        "--format",
        "text",
    ]);
    assert_eq!(dedup, explicit);
    assert_eq!(dedup.lines().count(), 10);
    assert_eq!(all.lines().count(), 14);
    assert!(dedup.lines().all(|l| l.starts_with("gc:")));
}

#[test]
fn census_writes_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("census.jsonl");
    let (code, _, _) = call(&[
        "census",
        "--max-crossings",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 10);
    for line in text.lines() {
        assert!(parse_json(line).unwrap().code.is_some());
    }
}

#[test]
fn symbol_subcommands() {
    let (code, out, _) = call(&["symbol", "f1", "J+[0,0]"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), r#"{"X":[[0,0,"2"]],"Y":[[0,"2"]]}"#);
    let (_, out, _) = call(&["symbol", "class", "S[0,0,0]", "--format", "text"]);
    assert_eq!(out.trim(), "ev");
    let (_, out, _) = call(&["symbol", "reduce", "JB[1,1]", "--format", "text"]);
    assert_eq!(out.trim(), "1 JA[0,0]");
    assert_eq!(call(&["symbol", "f1", "Q[1,2]"]).0, EXIT_MALFORMED);
}

#[test]
fn verify_passes_on_small_corpus() {
    let (code, out, err) = call(&["verify", "--suite", "fin", "--max-crossings", "4"]);
    assert_eq!(code, EXIT_OK, "{out}{err}");
    assert!(out.starts_with("fin: "));
    assert_ne!(EXIT_VERIFICATION, EXIT_OK);
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.gc", "gc: 1+\n");
    let bin = env!("CARGO_BIN_EXE_orderone");
    let st = Command::new(bin).args(["validate", &bad]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_MALFORMED));
    assert!(st.stdout.is_empty());
    let st = Command::new(bin)
        .args(["verify", "--suite", "main", "--max-crossings", "3"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(EXIT_OK));
}
