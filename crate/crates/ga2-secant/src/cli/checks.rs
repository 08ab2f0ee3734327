//! The algebra identity suite behind `ga-check`.
//!
//! Each named check replays one of the structural identities of `G2` on
//! seeded random inputs and reports its worst error. The geometric product
//! itself is passed in as a function so a deliberately corrupted product
//! table can be shown to trip the suite; the binary always runs the real one.

use crate::ga2::{
    det2_via_rotation, det2_via_wedge, polar_decompose, Multivector, Side, Vector2,
};
use crate::rng::SplitMix64;

use super::CliError;

/// The product under test.
pub type Product = fn(Multivector, Multivector) -> Multivector;

/// The crate's geometric product, as a plain function.
pub fn real_product(a: Multivector, b: Multivector) -> Multivector {
    a * b
}

/// Outcome of one invariant over all its trials.
#[derive(Debug, Clone)]
pub struct InvariantResult {
    pub name: &'static str,
    pub trials: u64,
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Debug rendering of the worst failing inputs, when the check failed.
    pub worst_input: Option<String>,
}

/// Report of the whole suite.
#[derive(Debug, Clone)]
pub struct GaCheckReport {
    pub seed: u64,
    pub trials: u64,
    pub results: Vec<InvariantResult>,
    pub pass: bool,
}

fn max_component_diff(a: Multivector, b: Multivector) -> f64 {
    a.components()
        .into_iter()
        .zip(b.components())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn rand_comp(rng: &mut SplitMix64) -> f64 {
    rng.f64_in(-1.0, 1.0)
}

fn rand_vec(rng: &mut SplitMix64) -> Vector2 {
    Vector2::new(rand_comp(rng), rand_comp(rng)).expect("finite")
}

fn rand_mv(rng: &mut SplitMix64) -> Multivector {
    Multivector::new(
        rand_comp(rng),
        rand_comp(rng),
        rand_comp(rng),
        rand_comp(rng),
    )
    .expect("finite")
}

struct Check {
    name: &'static str,
    tolerance: f64,
    run: fn(&mut SplitMix64, Product) -> (f64, String),
}

// Each check returns (error, input description) for one random trial.
const CHECKS: &[Check] = &[
    Check {
        name: "symmetric-part-is-dot",
        tolerance: 1e-13,
        run: |rng, product| {
            let (u, v) = (rand_vec(rng), rand_vec(rng));
            let (um, vm) = (Multivector::from(u), Multivector::from(v));
            let sym = (product(um, vm) + product(vm, um)) * 0.5;
            let dot = u.dot(v);
            let err = max_component_diff(sym, Multivector::new(dot, 0.0, 0.0, 0.0).unwrap())
                / dot.abs().max(1.0);
            (err, format!("u = {u}, v = {v}"))
        },
    },
    Check {
        name: "quadratic-form",
        tolerance: 0.0,
        run: |rng, product| {
            let v = rand_vec(rng);
            let square = product(Multivector::from(v), Multivector::from(v));
            let expected = Multivector::new(v.norm_sq(), 0.0, 0.0, 0.0).unwrap();
            (max_component_diff(square, expected), format!("v = {v}"))
        },
    },
    Check {
        name: "anti-commutation-control",
        tolerance: 0.0,
        run: |rng, product| {
            let (u, v) = (rand_vec(rng), rand_vec(rng));
            let (um, vm) = (Multivector::from(u), Multivector::from(v));
            let lhs = product(vm, um);
            let rhs = Multivector::new(2.0 * u.dot(v), 0.0, 0.0, 0.0).unwrap() - product(um, vm);
            (max_component_diff(lhs, rhs), format!("u = {u}, v = {v}"))
        },
    },
    Check {
        name: "associativity",
        tolerance: 1e-12,
        run: |rng, product| {
            let (a, b, c) = (rand_mv(rng), rand_mv(rng), rand_mv(rng));
            let lhs = product(product(a, b), c);
            let rhs = product(a, product(b, c));
            (
                max_component_diff(lhs, rhs),
                format!("a = {a}, b = {b}, c = {c}"),
            )
        },
    },
    Check {
        name: "i2-square-is-minus-one",
        tolerance: 0.0,
        run: |_, product| {
            let square = product(Multivector::I2, Multivector::I2);
            (
                max_component_diff(square, -Multivector::ONE),
                "I2 * I2".to_string(),
            )
        },
    },
    Check {
        name: "i2-inverse-is-minus-i2",
        tolerance: 0.0,
        run: |_, _| {
            let inv = Multivector::I2.inverse().expect("I2 is invertible");
            (
                max_component_diff(inv, -Multivector::I2),
                "I2^-1".to_string(),
            )
        },
    },
    Check {
        name: "zero-divisor-product",
        tolerance: 0.0,
        run: |_, product| {
            let p = Multivector::new(1.0, 1.0, 0.0, 0.0).unwrap();
            let q = Multivector::new(1.0, -1.0, 0.0, 0.0).unwrap();
            (
                max_component_diff(product(p, q), Multivector::ZERO),
                "(1 + e1)(1 - e1)".to_string(),
            )
        },
    },
    Check {
        name: "orientation-invariance",
        tolerance: 1e-12,
        run: |rng, product| {
            let theta = rng.f64_in(0.0, std::f64::consts::TAU);
            let flip = rng.next_u64() & 1 == 1;
            let (sin, cos) = theta.sin_cos();
            let e1p = Multivector::new(0.0, cos, sin, 0.0).unwrap();
            let e2p = if flip {
                Multivector::new(0.0, sin, -cos, 0.0).unwrap()
            } else {
                Multivector::new(0.0, -sin, cos, 0.0).unwrap()
            };
            let sign = if flip { -1.0 } else { 1.0 };
            let err = max_component_diff(product(e1p, e2p), Multivector::I2 * sign);
            (err, format!("theta = {theta}, flip = {flip}"))
        },
    },
    Check {
        name: "vector-inverse",
        tolerance: 1e-14,
        run: |rng, product| {
            let mut v = rand_vec(rng);
            while v.norm_sq() < 0.01 {
                v = rand_vec(rng);
            }
            let inv = v.inverse().expect("norm bounded away from zero");
            let prod = product(Multivector::from(v), Multivector::from(inv));
            (max_component_diff(prod, Multivector::ONE), format!("v = {v}"))
        },
    },
    Check {
        name: "multivector-inverse",
        tolerance: 1e-12,
        run: |rng, product| {
            let mut m = rand_mv(rng);
            loop {
                let [s, x, y, b] = m.components();
                let denom = (s * s + b * b) - (x * x + y * y);
                let magnitude = s * s + b * b + x * x + y * y;
                if magnitude > 1e-2 && denom.abs() > 0.05 * magnitude {
                    break;
                }
                m = rand_mv(rng);
            }
            let prod = product(m, m.inverse().expect("conditioned away from the cone"));
            (max_component_diff(prod, Multivector::ONE), format!("m = {m}"))
        },
    },
    Check {
        name: "rotate90-matches-product",
        tolerance: 0.0,
        run: |rng, product| {
            let v = rand_vec(rng);
            let vm = Multivector::from(v);
            let right = max_component_diff(
                Multivector::from(v.rotate90(Side::Right)),
                product(vm, Multivector::I2),
            );
            let left = max_component_diff(
                Multivector::from(v.rotate90(Side::Left)),
                product(Multivector::I2, vm),
            );
            (right.max(left), format!("v = {v}"))
        },
    },
    Check {
        name: "determinant-paths-bit-equal",
        tolerance: 0.0,
        run: |rng, _| {
            let (u, v) = (rand_vec(rng), rand_vec(rng));
            let reference = u.x() * v.y() - u.y() * v.x();
            let err = (det2_via_wedge(u, v) - reference)
                .abs()
                .max((det2_via_rotation(u, v) - reference).abs())
                .max((u.wedge(v) - reference).abs());
            (err, format!("u = {u}, v = {v}"))
        },
    },
    Check {
        name: "polar-form",
        tolerance: 1e-12,
        run: |rng, _| {
            let mut u = rand_vec(rng);
            let mut v = rand_vec(rng);
            while u.norm_sq() < 0.01 {
                u = rand_vec(rng);
            }
            while v.norm_sq() < 0.01 {
                v = rand_vec(rng);
            }
            let p = polar_decompose(u, v).expect("non-zero by construction");
            let scale = p.r().max(1.0);
            let err = ((p.r() * p.theta().cos() - u.dot(v)).abs())
                .max((p.r() * p.theta().sin() - u.wedge(v)).abs())
                / scale;
            (err, format!("u = {u}, v = {v}"))
        },
    },
    Check {
        name: "grade-reconstruction",
        tolerance: 0.0,
        run: |rng, _| {
            let m = rand_mv(rng);
            let err = max_component_diff(m.grade0() + m.grade1() + m.grade2(), m);
            (err, format!("m = {m}"))
        },
    },
];

/// Runs every invariant for `trials` iterations with the given product.
pub fn run_ga_check_with_product(
    seed: u64,
    trials: u64,
    product: Product,
) -> Result<GaCheckReport, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".to_string()));
    }
    let mut master = SplitMix64::new(seed);
    let mut results = Vec::with_capacity(CHECKS.len());
    for check in CHECKS {
        // one independent stream per check, in declaration order
        let mut rng = master.fork();
        let mut max_error: f64 = 0.0;
        let mut worst_input = None;
        for _ in 0..trials {
            let (err, input) = (check.run)(&mut rng, product);
            if err > max_error {
                max_error = err;
                if err > check.tolerance {
                    worst_input = Some(input);
                }
            }
        }
        let pass = max_error <= check.tolerance;
        results.push(InvariantResult {
            name: check.name,
            trials,
            max_error,
            tolerance: check.tolerance,
            pass,
            worst_input: if pass { None } else { worst_input },
        });
    }
    let pass = results.iter().all(|r| r.pass);
    Ok(GaCheckReport {
        seed,
        trials,
        results,
        pass,
    })
}

/// Runs the identity suite with the crate's geometric product.
pub fn run_ga_check(seed: u64, trials: u64) -> Result<GaCheckReport, CliError> {
    run_ga_check_with_product(seed, trials, real_product)
}
