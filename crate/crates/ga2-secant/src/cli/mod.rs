//! The experiment front-end behind the `ga2-secant` binary.
//!
//! Four operations, all pure functions returning report values that
//! [`render`](crate::cli::render) serializes as text, CSV, or JSON:
//!
//! - [`run_secant`]: one secant plane, with the quotient computed by all three
//!   formulas and their discrepancy,
//! - [`run_sweep`]: shrinking-triangle sweeps along the path family
//!   `η = δ^k`, the machinery that exhibits the tangent paradox,
//! - [`run_ga_check`]: the algebra identity suite over seeded random inputs,
//! - [`run_strong_derivative`]: the one-variable convergence demonstration
//!   that the paradox is contrasted against.
//!
//! Exit codes used by the binary: 0 success, 1 identity-suite failure,
//! 2 expression error, 3 degenerate geometry, 64 usage.

mod checks;
pub mod render;

pub use checks::{real_product, run_ga_check, run_ga_check_with_product, GaCheckReport, InvariantResult};

use std::fmt;

use crate::expr::{self, EvalError, Expr, SyntaxError};
use crate::ga2::Vector2;
use crate::rng::SplitMix64;
use crate::secant::{
    plane_from_determinant, q_normal_combination, q_quotient, diff_quotient_1d, PlaneNormal3,
    SamplePoint, SecantError, SecantPlane,
};

/// Output formats shared by all subcommands.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Errors surfaced by the CLI operations, with their process exit codes.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Syntax(SyntaxError),
    Eval(EvalError),
    Geometry(SecantError),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax(_) | CliError::Eval(_) => 2,
            CliError::Geometry(_) => 3,
            CliError::Usage(_) => 64,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Syntax(e) => write!(f, "{e}"),
            CliError::Eval(e) => write!(f, "cannot evaluate expression: {e}"),
            CliError::Geometry(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<SyntaxError> for CliError {
    fn from(e: SyntaxError) -> Self {
        CliError::Syntax(e)
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        CliError::Eval(e)
    }
}

impl From<SecantError> for CliError {
    fn from(e: SecantError) -> Self {
        CliError::Geometry(e)
    }
}

fn sample(f: &Expr, p: Vector2) -> Result<SamplePoint, CliError> {
    let value = f.eval2(p.x(), p.y())?;
    Ok(SamplePoint::new(p, value)?)
}

/// Report for a single secant-plane computation.
#[derive(Debug, Clone)]
pub struct SecantReport {
    pub fn_src: String,
    pub a: SamplePoint,
    pub b: SamplePoint,
    pub c: SamplePoint,
    pub tau: f64,
    pub edge_a: Vector2,
    pub edge_b: Vector2,
    pub edge_c: Vector2,
    pub q_quotient: Vector2,
    pub q_normal_combination: Vector2,
    pub q_determinant: Vector2,
    /// Largest pairwise distance between the three `q` values.
    pub max_discrepancy: f64,
    /// Plane heights at the three base points (they reproduce the samples).
    pub eval_at_base: [f64; 3],
    pub normal: PlaneNormal3,
}

/// Computes one secant plane of `f` through `a`, `b`, `c`, by all three
/// quotient formulas.
pub fn run_secant(
    fn_src: &str,
    a: Vector2,
    b: Vector2,
    c: Vector2,
) -> Result<SecantReport, CliError> {
    let f = expr::parse(fn_src)?;
    let sa = sample(&f, a)?;
    let sb = sample(&f, b)?;
    let sc = sample(&f, c)?;
    let tri = crate::secant::Triangle::new(a, b, c)?;
    let q1 = q_quotient(&sa, &sb, &sc)?;
    let q2 = q_normal_combination(&sa, &sb, &sc)?;
    let plane3 = plane_from_determinant(&sa, &sb, &sc)?;
    let q3 = plane3.q();
    let max_discrepancy = (q1 - q2)
        .norm()
        .max((q1 - q3).norm())
        .max((q2 - q3).norm());
    let plane = SecantPlane::new(a, sa.value(), q1)?;
    Ok(SecantReport {
        fn_src: fn_src.to_string(),
        a: sa,
        b: sb,
        c: sc,
        tau: tri.tau(),
        edge_a: tri.edge_a(),
        edge_b: tri.edge_b(),
        edge_c: tri.edge_c(),
        q_quotient: q1,
        q_normal_combination: q2,
        q_determinant: q3,
        max_discrepancy,
        eval_at_base: [plane.eval(a), plane.eval(b), plane.eval(c)],
        normal: plane.unit_normal3(),
    })
}

/// Configuration of a shrinking-triangle sweep.
///
/// The triangle family is `a = x0`, `b = x0 + T(-δ, η)`, `c = x0 + T(δ, η)`
/// with `η = δ^k`, over a geometric δ schedule from `delta_start` down to
/// `delta_end`. `T` is an optional rigid rotation followed by a shear
/// `(x, y) -> (x + shear·y, y)`; both default to the identity.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub fn_src: String,
    pub f: Expr,
    pub x0: Vector2,
    pub k: f64,
    pub delta_start: f64,
    pub delta_end: f64,
    pub steps: usize,
    pub rotate_deg: f64,
    pub shear: f64,
}

impl SweepConfig {
    pub fn new(
        fn_src: &str,
        k: f64,
        delta_start: f64,
        delta_end: f64,
        steps: usize,
        x0: Vector2,
    ) -> Result<Self, CliError> {
        if !(k.is_finite() && k > 0.0) {
            return Err(CliError::Usage(format!(
                "--k must be a positive real, got {k}"
            )));
        }
        if !(delta_start.is_finite() && delta_end.is_finite())
            || delta_end <= 0.0
            || delta_start <= delta_end
        {
            return Err(CliError::Usage(format!(
                "need --delta-start > --delta-end > 0, got {delta_start} and {delta_end}"
            )));
        }
        if steps < 2 {
            return Err(CliError::Usage(format!(
                "--steps must be at least 2, got {steps}"
            )));
        }
        let f = expr::parse(fn_src)?;
        Ok(SweepConfig {
            fn_src: fn_src.to_string(),
            f,
            x0,
            k,
            delta_start,
            delta_end,
            steps,
            rotate_deg: 0.0,
            shear: 0.0,
        })
    }

    fn transform(&self, offset: Vector2) -> Vector2 {
        let (sin, cos) = self.rotate_deg.to_radians().sin_cos();
        let rotated = Vector2::raw(
            cos * offset.x() - sin * offset.y(),
            sin * offset.x() + cos * offset.y(),
        );
        Vector2::raw(rotated.x() + self.shear * rotated.y(), rotated.y())
    }

    /// The geometric δ schedule, decreasing, endpoints exact.
    pub fn deltas(&self) -> Vec<f64> {
        let n = self.steps;
        let (ls, le) = (self.delta_start.ln(), self.delta_end.ln());
        (0..n)
            .map(|i| {
                if i == 0 {
                    self.delta_start
                } else if i == n - 1 {
                    self.delta_end
                } else {
                    (ls + (le - ls) * i as f64 / (n - 1) as f64).exp()
                }
            })
            .collect()
    }
}

/// One row of a sweep. Degenerate rows (triangle below the collinearity
/// threshold, or the function not evaluable at a vertex) keep their δ and η
/// but carry no quotient.
#[derive(Debug, Clone)]
pub struct SweepRecord {
    pub delta: f64,
    pub eta: f64,
    pub q: Option<Vector2>,
    pub q_norm: Option<f64>,
    pub normal: Option<PlaneNormal3>,
    /// Angle in radians between the row's plane normal and the tangent-plane
    /// normal at `x0`, as an unsigned line angle in `[0, π/2]`.
    pub tangent_gap: Option<f64>,
    pub degenerate: bool,
}

/// The apparent limit of the sweep, judged from the two smallest-δ rows:
/// ratio of |q| below 0.5 reads as vanishing, a ratio within [0.9, 1.1] with
/// a settled value as a finite limit, and a ratio above 2 as divergence.
#[derive(Debug, Clone, PartialEq)]
pub enum LimitClass {
    VanishingQ,
    FiniteQ(Vector2),
    DivergentQ(Option<PlaneNormal3>),
    Unclassified,
}

impl fmt::Display for LimitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitClass::VanishingQ => write!(f, "|q| -> 0 (secant plane flattens to z = f(x0))"),
            LimitClass::FiniteQ(q) => write!(f, "q -> {q} (finite, plane tilts to a fixed slope)"),
            LimitClass::DivergentQ(Some(n)) => write!(
                f,
                "|q| -> infinity; plane normal -> ({}, {}, {})",
                n.nx(),
                n.ny(),
                n.nz()
            ),
            LimitClass::DivergentQ(None) => write!(f, "|q| -> infinity"),
            LimitClass::Unclassified => write!(f, "no stable trend at the smallest deltas"),
        }
    }
}

/// Full sweep output.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub fn_src: String,
    pub k: f64,
    pub x0: Vector2,
    pub records: Vec<SweepRecord>,
    pub limit: LimitClass,
    pub tangent_normal: Option<PlaneNormal3>,
    /// Largest relative disagreement between the three quotient formulas over
    /// all non-degenerate rows (should sit near machine precision).
    pub max_formula_discrepancy: f64,
}

/// Runs the sweep: one record per δ, in decreasing δ order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, CliError> {
    let tangent_normal = cfg
        .f
        .grad_fd(cfg.x0)
        .ok()
        .and_then(|g| PlaneNormal3::new(g.x(), g.y(), -1.0).ok());
    fn degenerate_row(delta: f64, eta: f64) -> SweepRecord {
        SweepRecord {
            delta,
            eta,
            q: None,
            q_norm: None,
            normal: None,
            tangent_gap: None,
            degenerate: true,
        }
    }
    let mut records = Vec::with_capacity(cfg.steps);
    let mut max_formula_discrepancy: f64 = 0.0;
    for delta in cfg.deltas() {
        let eta = delta.powf(cfg.k);
        if !eta.is_finite() || eta <= 0.0 {
            records.push(degenerate_row(delta, eta));
            continue;
        }
        let a = cfg.x0;
        let b = a + cfg.transform(Vector2::raw(-delta, eta));
        let c = a + cfg.transform(Vector2::raw(delta, eta));
        let row = (|| -> Result<SweepRecord, CliError> {
            let sa = sample(&cfg.f, a)?;
            let sb = sample(&cfg.f, b)?;
            let sc = sample(&cfg.f, c)?;
            let q1 = q_quotient(&sa, &sb, &sc)?;
            let q2 = q_normal_combination(&sa, &sb, &sc)?;
            let q3 = plane_from_determinant(&sa, &sb, &sc)?.q();
            let scale = q1.norm().max(1.0);
            let discrepancy = (q1 - q2)
                .norm()
                .max((q1 - q3).norm())
                .max((q2 - q3).norm())
                / scale;
            max_formula_discrepancy = max_formula_discrepancy.max(discrepancy);
            debug_assert!(discrepancy <= 1e-10, "formula discrepancy {discrepancy}");
            let plane = SecantPlane::new(a, sa.value(), q1)?;
            let normal = plane.unit_normal3();
            let tangent_gap = tangent_normal.as_ref().map(|tn| normal.angle_to(tn));
            Ok(SweepRecord {
                delta,
                eta,
                q: Some(q1),
                q_norm: Some(q1.norm()),
                normal: Some(normal),
                tangent_gap,
                degenerate: false,
            })
        })();
        match row {
            Ok(r) => records.push(r),
            Err(_) => records.push(degenerate_row(delta, eta)),
        }
    }
    let limit = classify_limit(&records);
    Ok(SweepReport {
        fn_src: cfg.fn_src.clone(),
        k: cfg.k,
        x0: cfg.x0,
        records,
        limit,
        tangent_normal,
        max_formula_discrepancy,
    })
}

fn classify_limit(records: &[SweepRecord]) -> LimitClass {
    let live: Vec<&SweepRecord> = records.iter().filter(|r| !r.degenerate).collect();
    if live.len() < 2 {
        return LimitClass::Unclassified;
    }
    // records run in decreasing δ, so the last two are the smallest
    let prev = live[live.len() - 2];
    let last = live[live.len() - 1];
    let (q_prev, q_last) = match (prev.q, last.q) {
        (Some(p), Some(l)) => (p, l),
        _ => return LimitClass::Unclassified,
    };
    let (n_prev, n_last) = (q_prev.norm(), q_last.norm());
    if n_prev == 0.0 && n_last == 0.0 {
        return LimitClass::VanishingQ;
    }
    if n_prev == 0.0 {
        return LimitClass::Unclassified;
    }
    let ratio = n_last / n_prev;
    if ratio < 0.5 {
        LimitClass::VanishingQ
    } else if ratio > 2.0 {
        LimitClass::DivergentQ(last.normal)
    } else if (0.9..=1.1).contains(&ratio) && (q_last - q_prev).norm() < 1e-6 {
        LimitClass::FiniteQ(q_last)
    } else {
        LimitClass::Unclassified
    }
}

/// One h-level of the strong-derivative experiment.
#[derive(Debug, Clone, Copy)]
pub struct StrongDerivLevel {
    pub h: f64,
    /// max |difference quotient - derivative estimate| over the sampled pairs
    pub max_error: f64,
}

/// Report of [`run_strong_derivative`].
#[derive(Debug, Clone)]
pub struct StrongDerivReport {
    pub fn_src: String,
    pub x0: f64,
    /// Central-difference derivative at `x0`.
    pub derivative: f64,
    pub levels: Vec<StrongDerivLevel>,
}

/// Samples difference quotients of a one-variable expression over shrinking
/// neighborhoods of `x0`: for each level `h = 10^-(i+1)` it draws `trials`
/// random pairs `a != b` in `[x0-h, x0+h]` and reports the worst deviation
/// from the derivative. For continuously differentiable inputs the deviation
/// shrinks with h — the convergence that fails for secant planes.
pub fn run_strong_derivative(
    fn_src: &str,
    x0: f64,
    h_levels: usize,
    trials: u64,
    seed: u64,
) -> Result<StrongDerivReport, CliError> {
    let f = expr::parse(fn_src)?;
    if f.uses_y() {
        return Err(CliError::Usage(
            "--fn1d must be an expression in x only".to_string(),
        ));
    }
    if !x0.is_finite() {
        return Err(CliError::Usage(format!("--x0 must be finite, got {x0}")));
    }
    if h_levels == 0 {
        return Err(CliError::Usage("--h-levels must be at least 1".to_string()));
    }
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".to_string()));
    }
    let derivative = f.grad_fd(Vector2::new(x0, 0.0).map_err(|_| {
        CliError::Usage(format!("--x0 must be finite, got {x0}"))
    })?)?.x();
    let mut rng = SplitMix64::new(seed);
    let mut levels = Vec::with_capacity(h_levels);
    for i in 0..h_levels {
        let h = 10f64.powi(-(i as i32) - 1);
        // Pairs separated by less than this floor make the quotient pure
        // rounding noise; redraw them. The floor is far below every h the
        // schedule uses, so the sampled distribution is essentially uniform.
        let floor = (1e-7 * x0.abs().max(1.0)).min(0.01 * h);
        let mut max_error: f64 = 0.0;
        for _ in 0..trials {
            let mut a = rng.f64_in(x0 - h, x0 + h);
            let mut b = rng.f64_in(x0 - h, x0 + h);
            let mut attempts = 0;
            while (b - a).abs() < floor && attempts < 100 {
                a = rng.f64_in(x0 - h, x0 + h);
                b = rng.f64_in(x0 - h, x0 + h);
                attempts += 1;
            }
            if a == b {
                continue;
            }
            let ga = f.eval2(a, 0.0)?;
            let gb = f.eval2(b, 0.0)?;
            let quotient = diff_quotient_1d(ga, gb, a, b)?;
            max_error = max_error.max((quotient - derivative).abs());
        }
        levels.push(StrongDerivLevel { h, max_error });
    }
    Ok(StrongDerivReport {
        fn_src: fn_src.to_string(),
        x0,
        derivative,
        levels,
    })
}
