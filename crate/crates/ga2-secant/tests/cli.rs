//! End-to-end tests of the `ga2-secant` binary: exit codes, output formats,
//! and the loss-free CSV contract.

use std::process::{Command, Output};

use ga2_secant::ga2::Vector2;
use ga2_secant::secant::{q_quotient, SamplePoint};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ga2-secant"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn secant_counterexample_text() {
    let out = run(&[
        "secant",
        "--fn",
        "x^2+y^2",
        "--a",
        "0,0",
        "--b",
        "-0.1,0.1",
        "--c",
        "0.1,0.1",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("q, geometric quotient"), "{text}");
    assert!(text.contains("0.2"), "{text}");
}

#[test]
fn secant_affine_json() {
    let out = run(&[
        "secant",
        "--format",
        "json",
        "--fn",
        "2*x+3*y+1",
        "--a",
        "0,0",
        "--b",
        "1,0",
        "--c",
        "0,1",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["q_quotient"][0], 2.0);
    assert_eq!(value["q_quotient"][1], 3.0);
    assert_eq!(value["q_determinant"][1], 3.0);
    assert!(value["max_discrepancy"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn secant_collinear_exits_3() {
    let out = run(&[
        "secant", "--fn", "x", "--a", "0,0", "--b", "1,1", "--c", "2,2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("collinear"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn secant_syntax_error_exits_2() {
    let out = run(&[
        "secant", "--fn", "x^", "--a", "0,0", "--b", "1,0", "--c", "0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("syntax error"), "{err}");
}

#[test]
fn usage_errors_exit_64() {
    // missing required flag
    let out = run(&["secant", "--fn", "x"]);
    assert_eq!(out.status.code(), Some(64));
    // malformed point
    let out = run(&["secant", "--fn", "x", "--a", "zero", "--b", "1,0", "--c", "0,1"]);
    assert_eq!(out.status.code(), Some(64));
    // unknown subcommand
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
    // domain validation inside the app
    let out = run(&["ga-check", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&[
        "sweep",
        "--fn",
        "x",
        "--k",
        "0",
        "--delta-start",
        "0.1",
        "--delta-end",
        "0.001",
        "--steps",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sweep"));
}

#[test]
fn ga_check_passes_and_reports() {
    let out = run(&["ga-check", "--trials", "300", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("anti-commutation-control"));
    assert!(text.contains("overall: pass"));

    let out = run(&["--format", "json", "ga-check", "--trials", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], serde_json::Value::Bool(true));
    assert!(value["results"].as_array().unwrap().len() >= 10);
}

#[test]
fn ga_check_is_reproducible_per_seed() {
    let a = stdout(&run(&["--format", "csv", "ga-check", "--trials", "500", "--seed", "9"]));
    let b = stdout(&run(&["--format", "csv", "ga-check", "--trials", "500", "--seed", "9"]));
    assert_eq!(a, b);
    let c = stdout(&run(&["--format", "csv", "ga-check", "--trials", "500", "--seed", "10"]));
    assert_ne!(a, c);
}

#[test]
fn sweep_csv_is_loss_free() {
    let out = run(&[
        "sweep",
        "--format",
        "csv",
        "--fn",
        "x^2+y^2",
        "--k",
        "2",
        "--delta-start",
        "1e-1",
        "--delta-end",
        "1e-5",
        "--steps",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "delta,eta,qx,qy,qnorm,nx,ny,nz,tangent_gap,degenerate"
    );
    let f = ga2_secant::expr::parse("x^2+y^2").unwrap();
    let mut rows = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 10);
        assert_eq!(fields[9], "false");
        let delta: f64 = fields[0].parse().unwrap();
        let eta: f64 = fields[1].parse().unwrap();
        // recompute q from the recorded (δ, η) exactly as the sweep does
        let point = |x: f64, y: f64| Vector2::new(x, y).unwrap();
        let sample = |p: Vector2| {
            SamplePoint::new(p, f.eval2(p.x(), p.y()).unwrap()).unwrap()
        };
        let q = q_quotient(
            &sample(point(0.0, 0.0)),
            &sample(point(-delta, eta)),
            &sample(point(delta, eta)),
        )
        .unwrap();
        // loss-free: the recomputed value formats to the identical string
        assert_eq!(format!("{}", q.x()), fields[2], "row {line}");
        assert_eq!(format!("{}", q.y()), fields[3], "row {line}");
        rows += 1;
    }
    assert_eq!(rows, 9);
}

#[test]
fn sweep_json_array_with_nulls_for_degenerate_rows() {
    let out = run(&[
        "sweep",
        "--format",
        "json",
        "--fn",
        "x^2+y^2",
        "--k",
        "250",
        "--delta-start",
        "1e-1",
        "--delta-end",
        "1e-3",
        "--steps",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = value.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows
        .iter()
        .any(|r| r["degenerate"] == serde_json::Value::Bool(true) && r["qx"].is_null()));
}

#[test]
fn sweep_out_file() {
    let dir = std::env::temp_dir().join("ga2-secant-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.csv");
    let out = run(&[
        "sweep",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
        "--fn",
        "x^2+y^2",
        "--k",
        "1",
        "--delta-start",
        "1e-1",
        "--delta-end",
        "1e-2",
        "--steps",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("delta,eta"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn strong_derivative_reports_convergence() {
    let out = run(&[
        "strong-derivative",
        "--fn1d",
        "x^2",
        "--x0",
        "1",
        "--h-levels",
        "3",
        "--trials",
        "200",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("derivative estimate"), "{text}");

    let out = run(&[
        "--format",
        "json",
        "strong-derivative",
        "--fn1d",
        "x^2",
        "--x0",
        "-0.5",
        "--h-levels",
        "2",
        "--trials",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((value["derivative"].as_f64().unwrap() + 1.0).abs() < 1e-8);

    // expression must be univariate
    let out = run(&[
        "strong-derivative",
        "--fn1d",
        "x+y",
        "--x0",
        "0",
        "--h-levels",
        "2",
        "--trials",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn per_row_formula_agreement_is_carried_in_text_output() {
    let out = run(&[
        "sweep",
        "--fn",
        "x^2+y^2",
        "--k",
        "3",
        "--delta-start",
        "1e-1",
        "--delta-end",
        "1e-5",
        "--steps",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("max formula discrepancy"), "{text}");
    assert!(text.contains("apparent limit"), "{text}");
    assert!(text.contains("|q| -> infinity"), "{text}");
}
