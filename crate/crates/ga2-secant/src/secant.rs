//! Secant planes of graphs of two-variable functions.
//!
//! Three points `(a, f(a))`, `(b, f(b))`, `(c, f(c))` over a non-collinear base
//! triangle determine a unique plane. Writing it as
//!
//! ```text
//! z = f(a) + q · (v - a)
//! ```
//!
//! defines the *difference vector quotient* `q`, the two-variable analogue of
//! the one-variable difference quotient `(g(b) - g(a)) / (b - a)`. This module
//! computes `q` (and the plane) by three independent routes that must agree:
//!
//! - [`q_quotient`]: the geometric quotient in `G2` of the vector
//!   `(f(b)-f(a))(c-a) - (f(c)-f(a))(b-a)` by the orientation
//!   `(b-a) ∧ (c-a)`,
//! - [`q_normal_combination`]: the fully symmetric combination of the
//!   triangle's outward edge normals weighted by `(f(i)+f(j)) / 2τ`,
//! - [`plane_from_determinant`]: cofactor expansion of the 3x3 point-plane
//!   determinant, using no algebra operations at all.
//!
//! Numerators, edge sums, and twice-areas are evaluated with error-free float
//! transforms (see `robust`), so the three routes stay within a few ulps of
//! one another even for very thin triangles, and `q` is invariant under all
//! six orderings of the samples.
//!
//! The one-variable baseline ([`diff_quotient_1d`], [`secant_line_1d`]) is
//! included for the convergence comparison: in one variable the secant slope
//! always converges to the derivative, while `q` does not — see the `cli`
//! module's sweep machinery for the demonstration.
//!
//! Everything here is an immutable value and a pure function; independent
//! triangles can be processed on as many threads as you like.

use std::fmt;

use crate::ga2::{Multivector, Vector2};
use crate::robust::{cross_dd, orient2d, two_diff, two_sum, Dd};

/// Triangles with `|2τ| <= DEGENERACY_FACTOR * (max edge length)^2` are
/// rejected as collinear. Scale-invariant, and loose enough that every
/// triangle a sweep produces before its height underflows is accepted.
pub const DEGENERACY_FACTOR: f64 = 1e-12;

/// Errors for secant-plane construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecantError {
    /// A sample value, coordinate, or derived quantity is NaN or infinite.
    NonFinite,
    /// The three base points do not span a triangle; no unique secant plane.
    CollinearPoints,
    /// The two abscissae of a one-variable secant coincide.
    CoincidentAbscissae,
    /// A normal direction of length zero cannot be normalized.
    DegenerateNormal,
}

impl fmt::Display for SecantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SecantError::NonFinite => write!(f, "values must be finite"),
            SecantError::CollinearPoints => {
                write!(f, "base points are collinear; no unique secant plane")
            }
            SecantError::CoincidentAbscissae => write!(f, "abscissae coincide; no secant line"),
            SecantError::DegenerateNormal => write!(f, "cannot normalize a zero direction"),
        }
    }
}

impl std::error::Error for SecantError {}

/// A domain point together with its function value.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SamplePoint {
    p: Vector2,
    fval: f64,
}

impl SamplePoint {
    pub fn new(p: Vector2, fval: f64) -> Result<Self, SecantError> {
        if fval.is_finite() {
            Ok(SamplePoint { p, fval })
        } else {
            Err(SecantError::NonFinite)
        }
    }

    pub fn point(&self) -> Vector2 {
        self.p
    }

    pub fn value(&self) -> f64 {
        self.fval
    }
}

/// Twice the signed area `2τ = (b-a) ∧ (c-a)`, rounded once from the exact
/// value, then halved.
///
/// Positive when `a -> b -> c` winds counter-clockwise (the `I2` orientation);
/// an odd permutation of the vertices flips the sign exactly.
pub fn oriented_area(a: Vector2, b: Vector2, c: Vector2) -> f64 {
    0.5 * orient2d(a.x(), a.y(), b.x(), b.y(), c.x(), c.y())
}

/// An oriented non-degenerate triangle with its signed area and edge frame.
///
/// Edges are named after the opposite vertex: `edge_a = c - b`,
/// `edge_b = a - c`, `edge_c = b - a`, so they sum to zero.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Triangle {
    a: Vector2,
    b: Vector2,
    c: Vector2,
    two_tau: f64,
    edge_a: Vector2,
    edge_b: Vector2,
    edge_c: Vector2,
}

impl Triangle {
    /// Builds the triangle, rejecting collinear (or nearly collinear) points
    /// per [`DEGENERACY_FACTOR`].
    pub fn new(a: Vector2, b: Vector2, c: Vector2) -> Result<Self, SecantError> {
        let edge_a = c - b;
        let edge_b = a - c;
        let edge_c = b - a;
        let max_edge_sq = edge_a
            .norm_sq()
            .max(edge_b.norm_sq())
            .max(edge_c.norm_sq());
        let two_tau = orient2d(a.x(), a.y(), b.x(), b.y(), c.x(), c.y());
        if !two_tau.is_finite() || two_tau.abs() <= DEGENERACY_FACTOR * max_edge_sq {
            return Err(SecantError::CollinearPoints);
        }
        Ok(Triangle {
            a,
            b,
            c,
            two_tau,
            edge_a,
            edge_b,
            edge_c,
        })
    }

    pub fn a(&self) -> Vector2 {
        self.a
    }

    pub fn b(&self) -> Vector2 {
        self.b
    }

    pub fn c(&self) -> Vector2 {
        self.c
    }

    /// Signed area τ.
    pub fn tau(&self) -> f64 {
        0.5 * self.two_tau
    }

    /// `2τ`, the wedge coefficient `(b-a) ∧ (c-a)`.
    pub fn two_tau(&self) -> f64 {
        self.two_tau
    }

    /// `c - b`, the edge opposite `a`.
    pub fn edge_a(&self) -> Vector2 {
        self.edge_a
    }

    /// `a - c`, the edge opposite `b`.
    pub fn edge_b(&self) -> Vector2 {
        self.edge_b
    }

    /// `b - a`, the edge opposite `c`.
    pub fn edge_c(&self) -> Vector2 {
        self.edge_c
    }
}

// Exact double-double differences of the sample geometry, shared by the
// quotient routes.
struct Frame {
    dbx: Dd,
    dby: Dd,
    dcx: Dd,
    dcy: Dd,
    dfb: Dd,
    dfc: Dd,
}

impl Frame {
    fn new(sa: &SamplePoint, sb: &SamplePoint, sc: &SamplePoint) -> Frame {
        Frame {
            dbx: two_diff(sb.p.x(), sa.p.x()),
            dby: two_diff(sb.p.y(), sa.p.y()),
            dcx: two_diff(sc.p.x(), sa.p.x()),
            dcy: two_diff(sc.p.y(), sa.p.y()),
            dfb: two_diff(sb.fval, sa.fval),
            dfc: two_diff(sc.fval, sa.fval),
        }
    }
}

/// The raw geometric quotient, before grade projection:
/// `[(f(b)-f(a))(c-a) - (f(c)-f(a))(b-a)] * [(b-a) ∧ (c-a)]^-1`.
///
/// The result is a vector in exact arithmetic; callers that only want `q`
/// should use [`q_quotient`], which asserts the grade-0 and grade-2 residues
/// and discards them. This entry point exists so the residues themselves can
/// be inspected.
pub fn q_quotient_raw(
    sa: &SamplePoint,
    sb: &SamplePoint,
    sc: &SamplePoint,
) -> Result<Multivector, SecantError> {
    let tri = Triangle::new(sa.p, sb.p, sc.p)?;
    let f = Frame::new(sa, sb, sc);
    // grade-1 numerator, each component rounded once from the exact value
    let nx = cross_dd(f.dfb, f.dcx, f.dfc, f.dbx).to_f64();
    let ny = cross_dd(f.dfb, f.dcy, f.dfc, f.dby).to_f64();
    let numerator = Multivector::from(Vector2::raw(nx, ny));
    let orientation = Multivector::new(0.0, 0.0, 0.0, tri.two_tau()).expect("2τ is finite");
    let inverse = orientation
        .inverse()
        .map_err(|_| SecantError::CollinearPoints)?;
    let raw = numerator * inverse;
    if raw.components().iter().all(|c| c.is_finite()) {
        Ok(raw)
    } else {
        Err(SecantError::NonFinite)
    }
}

/// The difference vector quotient `q` as a geometric quotient in `G2`.
///
/// Errors with [`SecantError::CollinearPoints`] when the base points span no
/// triangle.
pub fn q_quotient(
    sa: &SamplePoint,
    sb: &SamplePoint,
    sc: &SamplePoint,
) -> Result<Vector2, SecantError> {
    let raw = q_quotient_raw(sa, sb, sc)?;
    let q = raw.vector_part();
    let scale = q.norm().max(1.0);
    debug_assert!(
        raw.scalar().abs() <= 1e-10 * scale && raw.i2().abs() <= 1e-10 * scale,
        "geometric quotient is not grade-1: {raw}"
    );
    Ok(q)
}

/// `q` as the fully symmetric combination of outward edge normals:
///
/// ```text
/// q = [(f(a)+f(b)) ∂c⊥ + (f(a)+f(c)) ∂b⊥ + (f(b)+f(c)) ∂a⊥] / 2τ
/// ```
///
/// where `∂⊥ = I2 ∂` rotates each edge a right angle outward. Permuting the
/// three samples does not change the result.
pub fn q_normal_combination(
    sa: &SamplePoint,
    sb: &SamplePoint,
    sc: &SamplePoint,
) -> Result<Vector2, SecantError> {
    let tri = Triangle::new(sa.p, sb.p, sc.p)?;
    // exact edge differences: ∂a = c - b, ∂b = a - c, ∂c = b - a
    let dax = two_diff(sc.p.x(), sb.p.x());
    let day = two_diff(sc.p.y(), sb.p.y());
    let dbx = two_diff(sa.p.x(), sc.p.x());
    let dby = two_diff(sa.p.y(), sc.p.y());
    let dcx = two_diff(sb.p.x(), sa.p.x());
    let dcy = two_diff(sb.p.y(), sa.p.y());
    // pairwise value sums
    let wab = two_sum(sa.fval, sb.fval);
    let wac = two_sum(sa.fval, sc.fval);
    let wbc = two_sum(sb.fval, sc.fval);
    // ∂⊥ = I2 ∂ = (∂y, -∂x), so the bracket splits per component
    let bx = wab.mul(dcy).add(wac.mul(dby)).add(wbc.mul(day)).to_f64();
    let by = wab.mul(dcx).add(wac.mul(dbx)).add(wbc.mul(dax)).to_f64();
    // + 0.0 turns a signed zero from the division into plain 0
    let q = Vector2::raw(bx / tri.two_tau() + 0.0, -by / tri.two_tau() + 0.0);
    if q.x().is_finite() && q.y().is_finite() {
        Ok(q)
    } else {
        Err(SecantError::NonFinite)
    }
}

/// The secant plane `z = fbase + q · (v - base)` anchored at a base point.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SecantPlane {
    base: Vector2,
    fbase: f64,
    q: Vector2,
}

impl SecantPlane {
    pub fn new(base: Vector2, fbase: f64, q: Vector2) -> Result<Self, SecantError> {
        if fbase.is_finite() {
            Ok(SecantPlane { base, fbase, q })
        } else {
            Err(SecantError::NonFinite)
        }
    }

    /// The plane through three graph points, with `q` from the geometric
    /// quotient and the first sample as the anchor.
    pub fn through(
        sa: &SamplePoint,
        sb: &SamplePoint,
        sc: &SamplePoint,
    ) -> Result<Self, SecantError> {
        let q = q_quotient(sa, sb, sc)?;
        SecantPlane::new(sa.p, sa.fval, q)
    }

    pub fn base(&self) -> Vector2 {
        self.base
    }

    pub fn fbase(&self) -> f64 {
        self.fbase
    }

    pub fn q(&self) -> Vector2 {
        self.q
    }

    /// Plane height at `v`: `fbase + q · (v - base)`.
    pub fn eval(&self, v: Vector2) -> f64 {
        self.fbase + self.q.dot(v - self.base)
    }

    /// Unit normal of the plane as a surface in `(x, y, z)` space:
    /// `(q_x, q_y, -1) / sqrt(|q|^2 + 1)`.
    pub fn unit_normal3(&self) -> PlaneNormal3 {
        let len = (self.q.norm_sq() + 1.0).sqrt();
        PlaneNormal3 {
            nx: self.q.x() / len,
            ny: self.q.y() / len,
            nz: -1.0 / len,
        }
    }
}

/// A unit normal in `(x, y, z)` space with a fixed sign convention:
/// `nz <= 0`; for horizontal normals (`nz == 0`) take `ny >= 0`, and then
/// `nx >= 0`. The convention keeps normals comparable across a sweep even
/// when `|q|` diverges.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct PlaneNormal3 {
    nx: f64,
    ny: f64,
    nz: f64,
}

impl PlaneNormal3 {
    /// Normalizes a direction and applies the sign convention.
    pub fn new(nx: f64, ny: f64, nz: f64) -> Result<Self, SecantError> {
        if !(nx.is_finite() && ny.is_finite() && nz.is_finite()) {
            return Err(SecantError::NonFinite);
        }
        let len = (nx * nx + ny * ny + nz * nz).sqrt();
        if len == 0.0 || !len.is_finite() {
            return Err(SecantError::DegenerateNormal);
        }
        let (mut nx, mut ny, mut nz) = (nx / len, ny / len, nz / len);
        let flip = if nz != 0.0 {
            nz > 0.0
        } else if ny != 0.0 {
            ny < 0.0
        } else {
            nx < 0.0
        };
        if flip {
            nx = -nx;
            ny = -ny;
            nz = -nz;
        }
        // normalize -0.0 components so formatted output is stable
        Ok(PlaneNormal3 {
            nx: nx + 0.0,
            ny: ny + 0.0,
            nz: nz + 0.0,
        })
    }

    pub fn nx(&self) -> f64 {
        self.nx
    }

    pub fn ny(&self) -> f64 {
        self.ny
    }

    pub fn nz(&self) -> f64 {
        self.nz
    }

    pub fn components(&self) -> [f64; 3] {
        [self.nx, self.ny, self.nz]
    }

    pub fn dot(&self, other: &PlaneNormal3) -> f64 {
        self.nx * other.nx + self.ny * other.ny + self.nz * other.nz
    }

    /// Angle between the two normal *lines*, in `[0, π/2]`.
    pub fn angle_to(&self, other: &PlaneNormal3) -> f64 {
        self.dot(other).abs().min(1.0).acos()
    }

    /// Euclidean distance between the two unit normals.
    pub fn distance_to(&self, other: &PlaneNormal3) -> f64 {
        let dx = self.nx - other.nx;
        let dy = self.ny - other.ny;
        let dz = self.nz - other.nz;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// The secant plane by cofactor expansion of
///
/// ```text
///     | x - a_x    y - a_y    z - f(a)    |
/// det | b_x - a_x  b_y - a_y  f(b) - f(a) | = 0
///     | c_x - a_x  c_y - a_y  f(c) - f(a) |
/// ```
///
/// normalized to the `z = f(a) + q · (v - a)` form. This route touches no
/// algebra operations, so it serves as an independent cross-check of the
/// quotient formulas.
pub fn plane_from_determinant(
    sa: &SamplePoint,
    sb: &SamplePoint,
    sc: &SamplePoint,
) -> Result<SecantPlane, SecantError> {
    let f = Frame::new(sa, sb, sc);
    // minors along the first row
    let m13 = cross_dd(f.dbx, f.dcy, f.dby, f.dcx).to_f64(); // = 2τ
    let max_edge_sq = (sc.p - sb.p)
        .norm_sq()
        .max((sa.p - sc.p).norm_sq())
        .max((sb.p - sa.p).norm_sq());
    if !m13.is_finite() || m13.abs() <= DEGENERACY_FACTOR * max_edge_sq {
        return Err(SecantError::CollinearPoints);
    }
    let m11 = cross_dd(f.dby, f.dfc, f.dfb, f.dcy).to_f64();
    let m12 = cross_dd(f.dbx, f.dfc, f.dfb, f.dcx).to_f64();
    let q = Vector2::raw(-m11 / m13 + 0.0, m12 / m13 + 0.0);
    if !(q.x().is_finite() && q.y().is_finite()) {
        return Err(SecantError::NonFinite);
    }
    SecantPlane::new(sa.p, sa.fval, q)
}

/// One-variable difference quotient `(g(b) - g(a)) / (b - a)`.
pub fn diff_quotient_1d(ga: f64, gb: f64, a: f64, b: f64) -> Result<f64, SecantError> {
    if !(ga.is_finite() && gb.is_finite() && a.is_finite() && b.is_finite()) {
        return Err(SecantError::NonFinite);
    }
    if a == b {
        return Err(SecantError::CoincidentAbscissae);
    }
    Ok((gb - ga) / (b - a))
}

/// The secant line `z = g(a) + slope · (x - a)` through two graph points.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SecantLine {
    anchor: f64,
    value: f64,
    slope: f64,
}

impl SecantLine {
    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.value + self.slope * (x - self.anchor)
    }
}

/// The one-variable secant through `(a, g(a))` and `(b, g(b))`.
pub fn secant_line_1d(ga: f64, gb: f64, a: f64, b: f64) -> Result<SecantLine, SecantError> {
    let slope = diff_quotient_1d(ga, gb, a, b)?;
    Ok(SecantLine {
        anchor: a,
        value: ga,
        slope,
    })
}
