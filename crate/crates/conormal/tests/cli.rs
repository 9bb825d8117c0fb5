use std::io::Write;
use std::process::{Command, Stdio};

use conormal::cli::run;
use conormal::json::MatrixJson;
use conormal::verify::{verify, Config, Suite, OPERATIONS};
use conormal_core::weyl::AffinePermutation;
use conormal_core::{LaurentMatrix, LaurentPoly, Rational};
use proptest::prelude::*;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("conormal").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn temp_matrix(name: &str, m: &LaurentMatrix<Rational>) -> String {
    let path = std::env::temp_dir().join(format!("conormal-{}-{name}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&MatrixJson::encode(m).unwrap()).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn identity_on_stdin_is_the_trivial_cell() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_conormal"))
        .args(["cell", "--matrix", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let identity = MatrixJson::encode(&LaurentMatrix::<Rational>::identity(4)).unwrap();
    child.stdin.take().unwrap().write_all(serde_json::to_string(&identity).unwrap().as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("window (1, 2, 3, 4)") && text.contains("word   e"), "{text}");
}

#[test]
fn cell_of_a_file_matrix_with_parabolic_reduction() {
    let w = AffinePermutation::new(vec![-1, 3, 4]).unwrap();
    let mut m: LaurentMatrix<Rational> = w.to_matrix();
    // right multiplication by 1 + 5 E_12 stays in the same Iwahori double coset
    let mut b = LaurentMatrix::identity(3);
    b.set(0, 1, LaurentPoly::from_i64(5));
    m = &m * &b;
    let path = temp_matrix("cell", &m);
    let doc = json(&["cell", "--matrix", &path, "--parabolic", "0,2", "--format", "json"]);
    assert_eq!(doc["window"], serde_json::json!([-1, 3, 4]));
    assert_eq!(doc["parabolic"]["j"], serde_json::json!([1]));
    let by_lambda = json(&["cell", "--matrix", &path, "--lambda", "2,1", "--format", "json"]);
    assert_eq!(by_lambda["parabolic"], doc["parabolic"]);
    let _ = std::fs::remove_file(path);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["kappa"][..],
        &["kappa", "--lambda", "1,x"],
        &["divisor", "--lambda", "2,1", "--i", "2"],
        &["verify", "--suite", "nope"],
        &["verify", "--nmax", "0"],
        &["cell", "--matrix", "/nonexistent/matrix.json"],
        &["frobnicate"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn malformed_matrices_are_rejected() {
    let path = std::env::temp_dir().join(format!("conormal-{}-bad.json", std::process::id()));
    for body in [r#"{"n": 2, "entries": [[], []]}"#, r#"{"n": 1, "entries": [[[0, 1, 0]]]}"#, "not json", r#"{"n": 2, "entries": [[[0,1,1]],[],[],[]]}"#] {
        std::fs::write(&path, body).unwrap();
        let (code, _, err) = call(&["cell", "--matrix", path.to_str().unwrap()]);
        assert_eq!(code, 2, "{body}: {err}");
    }
    let _ = std::fs::remove_file(path);
}

#[test]
fn construction_outputs() {
    let tab = json(&["tableau", "--lambda", "1,4,4,2,6", "--format", "json"]);
    assert_eq!(tab["s1"], serde_json::json!([1, 3, 4, 5, 16, 17]));
    assert_eq!(tab["columns"][0][3], 10);
    assert_eq!(tab["schema"], 1);
    let varpi = json(&["varpi", "--lambda", "1,1", "--format", "json"]);
    assert_eq!(varpi["varpi"]["window"], serde_json::json!([0, 3]));
    let lift: MatrixJson = serde_json::from_value(varpi["lift"].clone()).unwrap();
    assert_eq!(AffinePermutation::from_matrix(&lift.decode::<Rational>().unwrap()).unwrap().window(), [0, 3]);
    let div = json(&["divisor", "--lambda", "2,1", "--i", "1", "--format", "json"]);
    assert_eq!(div["gamma"], serde_json::json!({"i": 1, "j": 3}));
    assert_eq!(div["v_k_min"]["window"], serde_json::json!([-1, 3, 4]));
    assert_eq!(div["length"], div["dim_flag_variety"]);
    let (code, text, _) = call(&["kappa", "--lambda", "2,1"]);
    assert_eq!(code, 0);
    assert!(text.contains("kappa"));
}

#[test]
fn verify_reports_are_reproducible_and_cover_every_operation() {
    let a = call(&["verify", "--suite", "all", "--nmax", "3", "--seed", "7", "--format", "json"]);
    let b = call(&["verify", "--suite", "all", "--nmax", "3", "--seed", "7", "--format", "json"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let doc: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(doc["passed"], true);
    assert!(doc.get("duration_ms").is_none());
    assert_eq!(doc["coverage"]["missing"], serde_json::json!([]));
    assert_eq!(doc["coverage"]["exercised"].as_array().unwrap().len(), OPERATIONS.len());
    let other = call(&["verify", "--suite", "all", "--nmax", "3", "--seed", "8", "--format", "json"]);
    assert_ne!(a.1, other.1);
    let timed = json(&["report", "--nmax", "2", "--timing"]);
    assert!(timed["duration_ms"].is_u64());
}

#[test]
fn single_suites_pass_and_count_checks() {
    for suite in Suite::EACH {
        let report = verify(suite, &Config::new(4, 1), false);
        assert!(report.passed, "{suite:?}");
        assert!(report.coverage.is_none());
        let s = &report.suites[0];
        assert!(s.checks.values().all(|c| c.failed == 0 && c.passed > 0), "{suite:?}");
        assert!(s.witnesses.is_empty());
    }
}

fn matrix() -> impl Strategy<Value = LaurentMatrix<Rational>> {
    let term = (-3i64..=3, -20i64..=20, 1i64..=6);
    (1usize..=4).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(term.clone(), 0..=3), n * n).prop_map(move |cells| {
            let polys = cells
                .into_iter()
                .map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, num, den)| (e, Rational::new(num.into(), den.into())))))
                .collect();
            LaurentMatrix::from_entries(n, polys).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn matrix_json_decodes_to_the_encoded_matrix(m in matrix()) {
        let encoded = MatrixJson::encode(&m).unwrap();
        // canonical: every term nonzero with a positive reduced denominator
        prop_assert!(encoded.entries.iter().flatten().all(|[_, num, den]| *num != 0 && *den > 0));
        let text = serde_json::to_string(&encoded).unwrap();
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.decode::<Rational>().unwrap(), m);
    }
}
