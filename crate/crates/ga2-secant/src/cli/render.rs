//! Text, CSV, and JSON rendering of the CLI reports.
//!
//! CSV and JSON print every float with Rust's shortest round-trip formatting,
//! so re-parsing an emitted file recovers the exact f64 values. The sweep CSV
//! column contract is
//! `delta,eta,qx,qy,qnorm,nx,ny,nz,tangent_gap,degenerate`; degenerate rows
//! leave the optional columns empty (JSON uses `null`).

use serde_json::{json, Value};

use super::{
    Format, GaCheckReport, SecantReport, StrongDerivReport, SweepRecord, SweepReport,
};

fn num(v: f64) -> String {
    format!("{v}")
}

fn opt_num(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn json_vec2(v: crate::ga2::Vector2) -> Value {
    json!([v.x(), v.y()])
}

pub fn secant(report: &SecantReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("f(x, y) = {}\n\n", report.fn_src));
            for (name, s) in [("a", &report.a), ("b", &report.b), ("c", &report.c)] {
                out.push_str(&format!(
                    "  {name} = {:<28} f({name}) = {}\n",
                    report_point(s.point()),
                    num(s.value())
                ));
            }
            out.push('\n');
            out.push_str(&format!("  tau (signed area)         = {}\n", num(report.tau)));
            out.push_str(&format!("  edge a (c - b)            = {}\n", report.edge_a));
            out.push_str(&format!("  edge b (a - c)            = {}\n", report.edge_b));
            out.push_str(&format!("  edge c (b - a)            = {}\n\n", report.edge_c));
            out.push_str(&format!("  q, geometric quotient     = {}\n", report.q_quotient));
            out.push_str(&format!(
                "  q, normal combination     = {}\n",
                report.q_normal_combination
            ));
            out.push_str(&format!("  q, determinant expansion  = {}\n", report.q_determinant));
            out.push_str(&format!(
                "  max pairwise discrepancy  = {:e}\n\n",
                report.max_discrepancy
            ));
            out.push_str("  plane: z = f(a) + q . (v - a)\n");
            out.push_str(&format!(
                "  eval at a, b, c           = {}, {}, {}\n",
                num(report.eval_at_base[0]),
                num(report.eval_at_base[1]),
                num(report.eval_at_base[2])
            ));
            let n = report.normal;
            out.push_str(&format!(
                "  unit normal               = ({}, {}, {})\n",
                num(n.nx()),
                num(n.ny()),
                num(n.nz())
            ));
            out
        }
        Format::Csv => {
            let mut out = String::from(
                "tau,qx_quotient,qy_quotient,qx_normal,qy_normal,qx_det,qy_det,max_discrepancy,eval_a,eval_b,eval_c,nx,ny,nz\n",
            );
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                num(report.tau),
                num(report.q_quotient.x()),
                num(report.q_quotient.y()),
                num(report.q_normal_combination.x()),
                num(report.q_normal_combination.y()),
                num(report.q_determinant.x()),
                num(report.q_determinant.y()),
                num(report.max_discrepancy),
                num(report.eval_at_base[0]),
                num(report.eval_at_base[1]),
                num(report.eval_at_base[2]),
                num(report.normal.nx()),
                num(report.normal.ny()),
                num(report.normal.nz()),
            ));
            out
        }
        Format::Json => {
            let value = json!({
                "fn": report.fn_src,
                "a": json_vec2(report.a.point()),
                "fa": report.a.value(),
                "b": json_vec2(report.b.point()),
                "fb": report.b.value(),
                "c": json_vec2(report.c.point()),
                "fc": report.c.value(),
                "tau": report.tau,
                "edge_a": json_vec2(report.edge_a),
                "edge_b": json_vec2(report.edge_b),
                "edge_c": json_vec2(report.edge_c),
                "q_quotient": json_vec2(report.q_quotient),
                "q_normal_combination": json_vec2(report.q_normal_combination),
                "q_determinant": json_vec2(report.q_determinant),
                "max_discrepancy": report.max_discrepancy,
                "eval": report.eval_at_base,
                "normal": report.normal.components(),
            });
            format!("{value:#}\n")
        }
    }
}

fn report_point(p: crate::ga2::Vector2) -> String {
    format!("({}, {})", num(p.x()), num(p.y()))
}

fn sweep_record_json(r: &SweepRecord) -> Value {
    json!({
        "delta": r.delta,
        "eta": r.eta,
        "qx": r.q.map(|q| q.x()),
        "qy": r.q.map(|q| q.y()),
        "qnorm": r.q_norm,
        "nx": r.normal.map(|n| n.nx()),
        "ny": r.normal.map(|n| n.ny()),
        "nz": r.normal.map(|n| n.nz()),
        "tangent_gap": r.tangent_gap,
        "degenerate": r.degenerate,
    })
}

pub fn sweep(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "sweep of f(x, y) = {} along eta = delta^{} at x0 = {}\n\n",
                report.fn_src, report.k, report.x0
            ));
            out.push_str(&format!(
                "  {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>11}  {}\n",
                "delta", "eta", "qx", "qy", "|q|", "nx", "ny", "nz", "tangent_gap", "degenerate"
            ));
            for r in &report.records {
                if r.degenerate {
                    out.push_str(&format!(
                        "  {:>12.5e} {:>12.5e} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>11}  true\n",
                        r.delta, r.eta, "-", "-", "-", "-", "-", "-", "-"
                    ));
                } else {
                    let q = r.q.unwrap();
                    let n = r.normal.unwrap();
                    out.push_str(&format!(
                        "  {:>12.5e} {:>12.5e} {:>12.5e} {:>12.5e} {:>12.5e} {:>12.5e} {:>12.5e} {:>12.5e} {:>11.4e}  false\n",
                        r.delta,
                        r.eta,
                        q.x(),
                        q.y(),
                        r.q_norm.unwrap(),
                        n.nx(),
                        n.ny(),
                        n.nz(),
                        r.tangent_gap.unwrap_or(f64::NAN),
                    ));
                }
            }
            out.push('\n');
            if let Some(tn) = &report.tangent_normal {
                out.push_str(&format!(
                    "  tangent-plane normal at x0: ({}, {}, {})\n",
                    num(tn.nx()),
                    num(tn.ny()),
                    num(tn.nz())
                ));
            }
            out.push_str(&format!("  apparent limit: {}\n", report.limit));
            out.push_str(&format!(
                "  max formula discrepancy over rows: {:e}\n",
                report.max_formula_discrepancy
            ));
            out
        }
        Format::Csv => {
            let mut out =
                String::from("delta,eta,qx,qy,qnorm,nx,ny,nz,tangent_gap,degenerate\n");
            for r in &report.records {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    num(r.delta),
                    num(r.eta),
                    opt_num(r.q.map(|q| q.x())),
                    opt_num(r.q.map(|q| q.y())),
                    opt_num(r.q_norm),
                    opt_num(r.normal.map(|n| n.nx())),
                    opt_num(r.normal.map(|n| n.ny())),
                    opt_num(r.normal.map(|n| n.nz())),
                    opt_num(r.tangent_gap),
                    r.degenerate,
                ));
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = report.records.iter().map(sweep_record_json).collect();
            format!("{:#}\n", Value::Array(rows))
        }
    }
}

pub fn ga_check(report: &GaCheckReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "algebra identity suite: seed = {}, trials = {}\n\n",
                report.seed, report.trials
            ));
            for r in &report.results {
                out.push_str(&format!(
                    "  {:<28} max error {:>10.3e}  tolerance {:>8.1e}  {}\n",
                    r.name,
                    r.max_error,
                    r.tolerance,
                    if r.pass { "pass" } else { "FAIL" }
                ));
                if let Some(input) = &r.worst_input {
                    out.push_str(&format!("      worst input: {input}\n"));
                }
            }
            out.push_str(&format!(
                "\n  overall: {}\n",
                if report.pass { "pass" } else { "FAIL" }
            ));
            out
        }
        Format::Csv => {
            let mut out = String::from("invariant,trials,max_error,tolerance,pass\n");
            for r in &report.results {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.name,
                    r.trials,
                    num(r.max_error),
                    num(r.tolerance),
                    r.pass
                ));
            }
            out
        }
        Format::Json => {
            let results: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    json!({
                        "invariant": r.name,
                        "trials": r.trials,
                        "max_error": r.max_error,
                        "tolerance": r.tolerance,
                        "pass": r.pass,
                        "worst_input": r.worst_input,
                    })
                })
                .collect();
            let value = json!({
                "seed": report.seed,
                "trials": report.trials,
                "pass": report.pass,
                "results": results,
            });
            format!("{value:#}\n")
        }
    }
}

pub fn strong_derivative(report: &StrongDerivReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "difference quotients of g(x) = {} near x0 = {}\n",
                report.fn_src, report.x0
            ));
            out.push_str(&format!(
                "derivative estimate g'(x0) = {}\n\n",
                num(report.derivative)
            ));
            out.push_str(&format!(
                "  {:>12} {:>14} {:>14}\n",
                "h", "max |dq - g'|", "error / h"
            ));
            for level in &report.levels {
                out.push_str(&format!(
                    "  {:>12.5e} {:>14.5e} {:>14.5e}\n",
                    level.h,
                    level.max_error,
                    level.max_error / level.h
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("h,max_error,derivative\n");
            for level in &report.levels {
                out.push_str(&format!(
                    "{},{},{}\n",
                    num(level.h),
                    num(level.max_error),
                    num(report.derivative)
                ));
            }
            out
        }
        Format::Json => {
            let levels: Vec<Value> = report
                .levels
                .iter()
                .map(|l| json!({ "h": l.h, "max_error": l.max_error }))
                .collect();
            let value = json!({
                "fn": report.fn_src,
                "x0": report.x0,
                "derivative": report.derivative,
                "levels": levels,
            });
            format!("{value:#}\n")
        }
    }
}
