//! Secant planes of two-variable functions via the geometric algebra of the
//! Euclidean plane.
//!
//! For a smooth one-variable function, secant lines through two graph points
//! converge to the tangent line however the two points approach each other.
//! The two-variable analogue fails: the secant plane through three graph
//! points of something as tame as `f(x, y) = x² + y²` can converge to the
//! tangent plane, to a different plane, or to a plane *orthogonal* to the
//! tangent plane, depending on the path along which the triangle of base
//! points collapses. This crate makes that tangent paradox computable:
//!
//! - [`ga2`] implements the plane geometric algebra `G2` (geometric product,
//!   inverses, rotations by the orientation `I2`, determinant identities,
//!   polar form),
//! - [`secant`] computes the *difference vector quotient* `q` of the plane
//!   `z = f(a) + q · (v - a)` through three samples, by three independent
//!   formulas that are tested to agree to near machine precision,
//! - [`expr`] parses the function `f` from a small arithmetic grammar so
//!   experiments need no recompilation,
//! - [`cli`] drives secant computations, shrinking-triangle sweeps along
//!   `η = δ^k` paths, the algebra identity suite, and the one-variable
//!   convergence baseline,
//! - [`rng`] is the fixed splitmix generator that keeps every report
//!   reproducible from a single seed.
//!
//! ```
//! use ga2_secant::ga2::Vector2;
//! use ga2_secant::secant::{q_quotient, SamplePoint};
//!
//! // f(x, y) = x² + y² sampled on the triangle 0, (-δ, η), (δ, η)
//! let f = |v: Vector2| v.dot(v);
//! let sample = |x, y| {
//!     let p = Vector2::new(x, y).unwrap();
//!     SamplePoint::new(p, f(p)).unwrap()
//! };
//! let (delta, eta) = (0.1, 0.1);
//! let q = q_quotient(
//!     &sample(0.0, 0.0),
//!     &sample(-delta, eta),
//!     &sample(delta, eta),
//! )
//! .unwrap();
//!
//! // the secant plane is z = (δ² + η²)/η · y, nowhere near z = 0 unless
//! // η shrinks no faster than δ
//! assert_eq!(q.x(), 0.0);
//! assert!((q.y() - (delta * delta + eta * eta) / eta).abs() < 1e-15);
//! ```
//!
//! The `ga2-secant` binary exposes the same operations as the `secant`,
//! `sweep`, `ga-check`, and `strong-derivative` subcommands; see the guide in
//! `book/` for a walkthrough.

pub mod cli;
pub mod expr;
pub mod ga2;
pub mod rng;
pub mod secant;

mod robust;

pub use ga2::{
    det2_via_rotation, det2_via_wedge, polar_decompose, Ga2Error, Multivector, PolarForm, Side,
    Vector2,
};
pub use secant::{
    diff_quotient_1d, oriented_area, plane_from_determinant, q_normal_combination, q_quotient,
    q_quotient_raw, secant_line_1d, PlaneNormal3, SamplePoint, SecantError, SecantLine,
    SecantPlane, Triangle,
};

// The book chapters double as doctests so their code stays in sync with the
// crate; `cargo test --doc` compiles and runs every fenced Rust block below.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/geometric-algebra.md")]
    mod geometric_algebra {}
    #[doc = include_str!("../../../book/src/secant-planes.md")]
    mod secant_planes {}
    #[doc = include_str!("../../../book/src/tangent-paradox.md")]
    mod tangent_paradox {}
    #[doc = include_str!("../../../book/src/expressions.md")]
    mod expressions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
