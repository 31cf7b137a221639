//! End-to-end tests of the `qlogic` binary: file formats, report shape,
//! exit codes, and determinism.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn qlogic() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qlogic"))
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn stdout_lines(output: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&output.stdout)
        .lines()
        .map(|line| serde_json::from_str(line).expect("stdout is JSON lines"))
        .collect()
}

const IDENTITY_2: &str = r#"{"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[1,0]]]}"#;
const E1_PROJECTION: &str = r#"{"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[0,0]]]}"#;
const PLUS_PROJECTION: &str = r#"{"dim": 2, "entries": [[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]}"#;

/// Registry with the converse-theorem witness shape: z = 0̌, and two
/// cut-like elements whose low weights are the given projections.
fn witness_registry(x_weight: &str, y_weight: &str) -> String {
    format!(
        r#"{{
  "sets": {{
    "z": {{"dim": 2, "entries": []}},
    "one": {{"dim": 2, "entries": [{{"child": "z", "weight": {IDENTITY_2}}}]}},
    "x": {{"dim": 2, "entries": [
        {{"child": "z", "weight": {x_weight}}},
        {{"child": "one", "weight": {IDENTITY_2}}}
    ]}},
    "y": {{"dim": 2, "entries": [
        {{"child": "z", "weight": {y_weight}}},
        {{"child": "one", "weight": {IDENTITY_2}}}
    ]}}
  }}
}}"#
    )
}

const WITNESS_FORMULA: &str = "z in x <-> ((z in x /\\ z in y) \\/ (z in x /\\ ~(z in y)))";

#[test]
fn eval_commuting_weights_gives_identity() {
    let dir = TempDir::new().unwrap();
    let registry = write(
        &dir,
        "reg.json",
        &witness_registry(E1_PROJECTION, E1_PROJECTION),
    );
    let formula = write(&dir, "formula.txt", WITNESS_FORMULA);
    for kind in ["sasaki", "contrapositive", "relevance"] {
        let output = qlogic()
            .arg("eval")
            .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
            .args(["--conditional", kind])
            .output()
            .unwrap();
        assert!(output.status.success(), "{output:?}");
        let lines = stdout_lines(&output);
        assert_eq!(lines[0]["conditional"], kind);
        assert_eq!(lines[1]["is_identity"], true);
        assert_eq!(lines[1]["strict"], false);
        assert_eq!(lines[1]["rank"], 2);
    }
}

#[test]
fn eval_non_commuting_weights_is_strict() {
    let dir = TempDir::new().unwrap();
    let registry = write(
        &dir,
        "reg.json",
        &witness_registry(E1_PROJECTION, PLUS_PROJECTION),
    );
    let formula = write(&dir, "formula.txt", WITNESS_FORMULA);
    let output = qlogic()
        .arg("eval")
        .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(output.status.success(), "{output:?}");
    let lines = stdout_lines(&output);
    assert_eq!(lines[1]["strict"], true);
    assert_eq!(lines[1]["is_identity"], false);
    assert!(lines[1]["rank"].as_u64().unwrap() < 2);
}

#[test]
fn eval_malformed_json_exits_2() {
    let dir = TempDir::new().unwrap();
    let registry = write(&dir, "reg.json", "{not json");
    let formula = write(&dir, "formula.txt", "z = z");
    let output = qlogic()
        .arg("eval")
        .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn eval_syntax_error_exits_2() {
    let dir = TempDir::new().unwrap();
    let registry = write(
        &dir,
        "reg.json",
        r#"{"sets": {"z": {"dim": 2, "entries": []}}}"#,
    );
    let formula = write(&dir, "formula.txt", "z = ");
    let output = qlogic()
        .arg("eval")
        .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("syntax error"));
}

#[test]
fn eval_unknown_name_exits_2() {
    let dir = TempDir::new().unwrap();
    let registry = write(
        &dir,
        "reg.json",
        r#"{"sets": {"z": {"dim": 2, "entries": []}}}"#,
    );
    let formula = write(&dir, "formula.txt", "z = ghost");
    let output = qlogic()
        .arg("eval")
        .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn eval_dimension_mismatch_exits_3() {
    let dir = TempDir::new().unwrap();
    let registry = write(
        &dir,
        "reg.json",
        r#"{"sets": {
            "a": {"dim": 2, "entries": []},
            "b": {"dim": 3, "entries": []}
        }}"#,
    );
    let formula = write(&dir, "formula.txt", "a = b");
    let output = qlogic()
        .arg("eval")
        .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn eval_unbounded_quantifier_exits_4() {
    let dir = TempDir::new().unwrap();
    let registry = write(
        &dir,
        "reg.json",
        r#"{"sets": {"z": {"dim": 2, "entries": []}}}"#,
    );
    let formula = write(&dir, "formula.txt", "forall x (x = x)");
    let output = qlogic()
        .arg("eval")
        .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn bad_tolerances_exit_5() {
    let dir = TempDir::new().unwrap();
    let registry = write(
        &dir,
        "reg.json",
        r#"{"sets": {"z": {"dim": 2, "entries": []}}}"#,
    );
    let formula = write(&dir, "formula.txt", "z = z");
    let output = qlogic()
        .arg("eval")
        .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
        .args(["--eps-rank", "1e-6", "--eps-compare", "1e-9"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(5));
}

#[test]
fn selftest_small_budget_passes_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let out_a = dir.path().join("a.jsonl");
    let out_b = dir.path().join("b.jsonl");
    for out in [&out_a, &out_b] {
        let output = qlogic()
            .arg("selftest")
            .args(["--dims", "2,3", "--trials", "2", "--seed", "99"])
            .args(["--out", out.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(output.status.success(), "{output:?}");
    }
    let a = fs::read(&out_a).unwrap();
    let b = fs::read(&out_b).unwrap();
    assert_eq!(a, b, "reports must be byte-identical for identical inputs");

    // The report is JSON lines with a header, one line per suite, and a
    // summary of zero failures.
    let text = String::from_utf8(a).unwrap();
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["command"], "selftest");
    assert_eq!(lines[0]["seed"], 99);
    assert_eq!(lines.last().unwrap()["failed"], 0);
    for suite in &lines[1..lines.len() - 1] {
        assert_eq!(suite["passed"], true, "{suite}");
    }
}

#[test]
fn selftest_reads_seed_from_environment() {
    let output = qlogic()
        .arg("selftest")
        .args(["--dims", "2", "--trials", "1"])
        .env("QLOGIC_SEED", "31337")
        .output()
        .unwrap();
    assert!(output.status.success());
    let lines = stdout_lines(&output);
    assert_eq!(lines[0]["seed"], 31337);
}

#[test]
fn selftest_zero_trials_vacuous_with_warning() {
    let output = qlogic()
        .arg("selftest")
        .args(["--dims", "2", "--trials", "0"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stderr).contains("vacuous"));
}

#[test]
fn selftest_rejects_bad_dims() {
    let output = qlogic()
        .arg("selftest")
        .args(["--dims", "6..2", "--trials", "1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(5));
}

fn write_order_inputs(dir: &TempDir) -> (PathBuf, PathBuf) {
    // X = |+⟩⟨+| and Y = diag(0, 1).
    let x = write(
        dir,
        "x.json",
        r#"{"dim": 2, "entries": [[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]}"#,
    );
    let y = write(
        dir,
        "y.json",
        r#"{"dim": 2, "entries": [[[0,0],[0,0]],[[0,0],[1,0]]], "spectrum": [0, 1]}"#,
    );
    (x, y)
}

fn find_conditional<'a>(
    lines: &'a [serde_json::Value],
    kind: &str,
    with_field: &str,
) -> &'a serde_json::Value {
    lines
        .iter()
        .find(|l| (l["conditional"] == kind || l["kind"] == kind) && !l[with_field].is_null())
        .expect("report line present")
}

#[test]
fn order_worked_example() {
    let dir = TempDir::new().unwrap();
    let (x, y) = write_order_inputs(&dir);
    let output = qlogic()
        .arg("order")
        .args([x.to_str().unwrap(), y.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(output.status.success(), "{output:?}");
    let lines = stdout_lines(&output);
    assert_eq!(lines[1]["spectral_order_leq"], false);
    let sasaki = find_conditional(&lines, "sasaki", "truth_value");
    assert_eq!(sasaki["rank"], 1);
    // The Sasaki value is |1⟩⟨1|.
    let matrix = &sasaki["truth_value"]["entries"];
    assert_eq!(matrix[1][1][0], 1.0);
    assert_eq!(matrix[0][0][0], 0.0);
}

#[test]
fn order_with_state_reports_measurement_verdicts() {
    let dir = TempDir::new().unwrap();
    let (x, y) = write_order_inputs(&dir);
    let psi = write(
        &dir,
        "psi.json",
        r#"{"dim": 2, "amplitudes": [[0,0],[1,0]]}"#,
    );
    let output = qlogic()
        .arg("order")
        .args([
            x.to_str().unwrap(),
            y.to_str().unwrap(),
            psi.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(output.status.success(), "{output:?}");
    let lines = stdout_lines(&output);
    let sasaki = find_conditional(&lines, "sasaki", "membership");
    assert_eq!(sasaki["membership"], true);
    assert_eq!(sasaki["tail_zero"], true);
    assert_eq!(sasaki["agrees"], true);
}

#[test]
fn order_state_dimension_mismatch_exits_3() {
    let dir = TempDir::new().unwrap();
    let (x, y) = write_order_inputs(&dir);
    let psi = write(
        &dir,
        "psi.json",
        r#"{"dim": 3, "amplitudes": [[1,0],[0,0],[0,0]]}"#,
    );
    let output = qlogic()
        .arg("order")
        .args([
            x.to_str().unwrap(),
            y.to_str().unwrap(),
            psi.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn order_rejects_declared_spectrum_mismatch() {
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"dim": 2, "entries": [[[0,0],[0,0]],[[0,0],[1,0]]], "spectrum": [0, 2]}"#,
    );
    let y = write(
        &dir,
        "y.json",
        r#"{"dim": 2, "entries": [[[0,0],[0,0]],[[0,0],[1,0]]]}"#,
    );
    let output = qlogic()
        .arg("order")
        .args([x.to_str().unwrap(), y.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn eval_out_file_matches_stdout() {
    let dir = TempDir::new().unwrap();
    let registry = write(
        &dir,
        "reg.json",
        &witness_registry(E1_PROJECTION, PLUS_PROJECTION),
    );
    let formula = write(&dir, "formula.txt", WITNESS_FORMULA);
    let out = dir.path().join("report.jsonl");
    let output = qlogic()
        .arg("eval")
        .args([formula.to_str().unwrap(), registry.to_str().unwrap()])
        .args(["--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(output.status.success());
    let file_body = fs::read_to_string(&out).unwrap();
    assert_eq!(file_body.as_bytes(), output.stdout.as_slice());
}

#[test]
fn missing_input_file_exits_2() {
    let output = qlogic()
        .arg("eval")
        .args(["/nonexistent/formula.txt", "/nonexistent/reg.json"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}
