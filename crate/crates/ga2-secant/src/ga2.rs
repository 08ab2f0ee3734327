//! The geometric algebra `G2` of the Euclidean plane.
//!
//! `G2` is the associative algebra generated by an orthonormal basis
//! `{e1, e2}` of the plane under the rules (numbered as they are usually
//! presented; there is no A2):
//!
//! - **A1** scalars are degree-0 elements and `v^0 = 1`; non-zero vectors have
//!   degree 1,
//! - **A3** scalars commute with vectors,
//! - **A4** scalar, vector, and multivector addition (and scalar
//!   multiplication) all coincide, so the product is written by juxtaposition,
//! - **A5** scalars and non-zero vectors are linearly independent,
//! - **A6** the square of a vector is its squared Euclidean norm:
//!   `v v = |v|^2`.
//!
//! Those rules force `e1 e2 = -e2 e1`, and `{1, e1, e2, e1 e2}` turns out to be
//! a basis of the whole algebra. Writing `I2 = e1 e2` for the *orientation*,
//! a general element ("multivector") is
//!
//! ```text
//! m = s + x e1 + y e2 + b I2
//! ```
//!
//! and the geometric product expands over the table
//!
//! ```text
//!        1    e1    e2    I2
//!   1    1    e1    e2    I2
//!   e1   e1   1     I2    e2
//!   e2   e2  -I2    1    -e1
//!   I2   I2  -e2    e1   -1
//! ```
//!
//! Useful consequences implemented here: every non-zero vector has the inverse
//! `v / |v|^2`, `I2 * I2 == -1`, multiplying a vector by `I2` rotates it a
//! right angle, the 2x2 determinant is both a Clifford ratio
//! `(u ∧ v) (I2)^-1` and a scalar product `(u I2) · v`, and the product of two
//! vectors has the polar form `u v = |u||v| (cos θ + I2 sin θ)`.
//!
//! Unlike the complex numbers, `G2` is four-dimensional, non-commutative, and
//! not a division algebra: `(1 + e1)(1 - e1) = 0`, so `1 ± e1` are zero
//! divisors with no inverse.
//!
//! All values are immutable and every operation is a pure function, so
//! everything here is freely shareable across threads.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Errors for the algebra operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ga2Error {
    /// A constructor was handed a NaN or infinite component.
    NonFinite,
    /// A vector with `|v|^2 == 0` cannot be inverted.
    ZeroVector,
    /// The multivector is a zero divisor (e.g. `1 + e1`) and has no inverse.
    NonInvertible,
}

impl fmt::Display for Ga2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ga2Error::NonFinite => write!(f, "components must be finite"),
            Ga2Error::ZeroVector => write!(f, "zero vector has no inverse"),
            Ga2Error::NonInvertible => write!(f, "multivector is a zero divisor"),
        }
    }
}

impl std::error::Error for Ga2Error {}

/// An element of `G2`: `s + x e1 + y e2 + b I2`.
///
/// Components are kept finite by construction; the arithmetic operators do not
/// re-validate.
#[derive(Copy, Clone, Debug, PartialEq, Default)]
pub struct Multivector {
    s: f64,
    x: f64,
    y: f64,
    b: f64,
}

impl Multivector {
    pub const ZERO: Multivector = Multivector::raw(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Multivector = Multivector::raw(1.0, 0.0, 0.0, 0.0);
    pub const E1: Multivector = Multivector::raw(0.0, 1.0, 0.0, 0.0);
    pub const E2: Multivector = Multivector::raw(0.0, 0.0, 1.0, 0.0);
    /// The orientation `I2 = e1 e2`.
    pub const I2: Multivector = Multivector::raw(0.0, 0.0, 0.0, 1.0);

    pub(crate) const fn raw(s: f64, x: f64, y: f64, b: f64) -> Self {
        Multivector { s, x, y, b }
    }

    /// Builds `s + x e1 + y e2 + b I2`, rejecting non-finite components.
    pub fn new(s: f64, x: f64, y: f64, b: f64) -> Result<Self, Ga2Error> {
        if s.is_finite() && x.is_finite() && y.is_finite() && b.is_finite() {
            Ok(Multivector::raw(s, x, y, b))
        } else {
            Err(Ga2Error::NonFinite)
        }
    }

    /// A pure scalar.
    pub fn from_scalar(s: f64) -> Result<Self, Ga2Error> {
        Multivector::new(s, 0.0, 0.0, 0.0)
    }

    pub fn scalar(&self) -> f64 {
        self.s
    }

    pub fn e1(&self) -> f64 {
        self.x
    }

    pub fn e2(&self) -> f64 {
        self.y
    }

    pub fn i2(&self) -> f64 {
        self.b
    }

    /// `[scalar, e1, e2, I2]` components in basis order.
    pub fn components(&self) -> [f64; 4] {
        [self.s, self.x, self.y, self.b]
    }

    /// Scalar grade projection `(s, 0, 0, 0)`.
    pub fn grade0(&self) -> Multivector {
        Multivector::raw(self.s, 0.0, 0.0, 0.0)
    }

    /// Vector grade projection `(0, x, y, 0)`.
    pub fn grade1(&self) -> Multivector {
        Multivector::raw(0.0, self.x, self.y, 0.0)
    }

    /// Bivector grade projection `(0, 0, 0, b)`.
    pub fn grade2(&self) -> Multivector {
        Multivector::raw(0.0, 0.0, 0.0, self.b)
    }

    /// The grade-1 part as a plane vector, discarding the other grades.
    pub fn vector_part(&self) -> Vector2 {
        Vector2::raw(self.x, self.y)
    }

    /// Clifford conjugation: negates the vector and bivector parts, so that
    /// `m * m.conjugate()` is the scalar `s^2 + b^2 - x^2 - y^2`.
    pub fn conjugate(&self) -> Multivector {
        Multivector::raw(self.s, -self.x, -self.y, -self.b)
    }

    /// Inverse with respect to the geometric product.
    ///
    /// Defined whenever `s^2 + b^2 - x^2 - y^2 != 0`; this extends the vector
    /// inverse `v / |v|^2` and `(I2)^-1 = -I2` to all invertible multivectors.
    /// Zero divisors such as `1 + e1` return [`Ga2Error::NonInvertible`].
    pub fn inverse(&self) -> Result<Multivector, Ga2Error> {
        let denom = (self.s * self.s + self.b * self.b) - (self.x * self.x + self.y * self.y);
        if denom == 0.0 {
            return Err(Ga2Error::NonInvertible);
        }
        let c = self.conjugate();
        Ok(Multivector::raw(
            c.s / denom,
            c.x / denom,
            c.y / denom,
            c.b / denom,
        ))
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {} e1 + {} e2 + {} I2",
            self.s, self.x, self.y, self.b
        )
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        Multivector::raw(
            self.s + rhs.s,
            self.x + rhs.x,
            self.y + rhs.y,
            self.b + rhs.b,
        )
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        Multivector::raw(
            self.s - rhs.s,
            self.x - rhs.x,
            self.y - rhs.y,
            self.b - rhs.b,
        )
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector::raw(-self.s, -self.x, -self.y, -self.b)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, k: f64) -> Multivector {
        Multivector::raw(self.s * k, self.x * k, self.y * k, self.b * k)
    }
}

/// The geometric product, expanded over the basis table.
impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        let (s1, x1, y1, b1) = (self.s, self.x, self.y, self.b);
        let (s2, x2, y2, b2) = (rhs.s, rhs.x, rhs.y, rhs.b);
        Multivector::raw(
            s1 * s2 + x1 * x2 + y1 * y2 - b1 * b2,
            s1 * x2 + x1 * s2 - y1 * b2 + b1 * y2,
            s1 * y2 + y1 * s2 + x1 * b2 - b1 * x2,
            s1 * b2 + b1 * s2 + x1 * y2 - y1 * x2,
        )
    }
}

/// Which side of a vector the orientation `I2` multiplies on.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    /// `I2 v`: rotates `v` clockwise (for the standard orientation).
    Left,
    /// `v I2`: rotates `v` counter-clockwise.
    Right,
}

/// A plane vector, i.e. the grade-1 multivector `x e1 + y e2`.
#[derive(Copy, Clone, Debug, PartialEq, Default)]
pub struct Vector2 {
    x: f64,
    y: f64,
}

impl Vector2 {
    pub const ZERO: Vector2 = Vector2::raw(0.0, 0.0);
    pub const E1: Vector2 = Vector2::raw(1.0, 0.0);
    pub const E2: Vector2 = Vector2::raw(0.0, 1.0);

    pub(crate) const fn raw(x: f64, y: f64) -> Self {
        Vector2 { x, y }
    }

    /// Builds `x e1 + y e2`, rejecting non-finite components.
    pub fn new(x: f64, y: f64) -> Result<Self, Ga2Error> {
        if x.is_finite() && y.is_finite() {
            Ok(Vector2::raw(x, y))
        } else {
            Err(Ga2Error::NonFinite)
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Euclidean scalar product; equals the scalar part of `(uv + vu) / 2`.
    pub fn dot(&self, rhs: Vector2) -> f64 {
        self.x * rhs.x + self.y * rhs.y
    }

    /// Wedge coefficient: the `I2` component of `(uv - vu) / 2`, i.e. the 2x2
    /// determinant of the components. Zero exactly when the vectors are
    /// linearly dependent.
    pub fn wedge(&self, rhs: Vector2) -> f64 {
        self.x * rhs.y - self.y * rhs.x
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// `v / |v|^2`, the inverse with respect to the geometric product.
    pub fn inverse(&self) -> Result<Vector2, Ga2Error> {
        let n = self.norm_sq();
        if n == 0.0 {
            return Err(Ga2Error::ZeroVector);
        }
        Ok(Vector2::raw(self.x / n, self.y / n))
    }

    /// Right-angle rotation by the orientation: `v I2 = -I2 v = x e2 - y e1`.
    ///
    /// The result agrees bit-for-bit with the geometric product of the
    /// embedded multivectors.
    pub fn rotate90(&self, side: Side) -> Vector2 {
        match side {
            Side::Right => Vector2::raw(-self.y, self.x),
            Side::Left => Vector2::raw(self.y, -self.x),
        }
    }
}

impl fmt::Display for Vector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<Vector2> for Multivector {
    fn from(v: Vector2) -> Multivector {
        Multivector::raw(0.0, v.x, v.y, 0.0)
    }
}

impl Add for Vector2 {
    type Output = Vector2;
    fn add(self, rhs: Vector2) -> Vector2 {
        Vector2::raw(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vector2 {
    type Output = Vector2;
    fn sub(self, rhs: Vector2) -> Vector2 {
        Vector2::raw(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vector2 {
    type Output = Vector2;
    fn neg(self) -> Vector2 {
        Vector2::raw(-self.x, -self.y)
    }
}

impl Mul<f64> for Vector2 {
    type Output = Vector2;
    fn mul(self, k: f64) -> Vector2 {
        Vector2::raw(self.x * k, self.y * k)
    }
}

/// The 2x2 determinant as a Clifford ratio: `(u ∧ v) (I2)^-1`.
///
/// The wedge and the division are carried out through the geometric product,
/// yet the result is bit-identical to `u.x * v.y - u.y * v.x`.
pub fn det2_via_wedge(u: Vector2, v: Vector2) -> f64 {
    let um = Multivector::from(u);
    let vm = Multivector::from(v);
    let wedge = (um * vm - vm * um) * 0.5;
    let i2_inv = Multivector::I2
        .inverse()
        .expect("I2 squares to -1, so it is invertible");
    (wedge * i2_inv).scalar()
}

/// The 2x2 determinant as a scalar product: `(u I2) · v`.
///
/// Bit-identical to [`det2_via_wedge`] and to the component formula.
pub fn det2_via_rotation(u: Vector2, v: Vector2) -> f64 {
    u.rotate90(Side::Right).dot(v)
}

/// Polar form of a product of non-zero vectors:
/// `u v = r (cos θ + I2 sin θ)` with `r = |u| |v|`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct PolarForm {
    r: f64,
    theta: f64,
}

impl PolarForm {
    /// `|u| |v| >= 0`.
    pub fn r(&self) -> f64 {
        self.r
    }

    /// Oriented angle from `u` to `v`, reduced to `[0, 2π)`.
    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// Decomposes the product of two non-zero vectors into polar form, so that
/// `r cos θ = u · v` and `r sin θ = u ∧ v`.
pub fn polar_decompose(u: Vector2, v: Vector2) -> Result<PolarForm, Ga2Error> {
    if u.norm_sq() == 0.0 || v.norm_sq() == 0.0 {
        return Err(Ga2Error::ZeroVector);
    }
    let r = u.norm() * v.norm();
    let mut theta = u.wedge(v).atan2(u.dot(v));
    if theta < 0.0 {
        theta += std::f64::consts::TAU;
    }
    // A negative angle within an ulp of zero wraps to TAU itself; keep the
    // representative in [0, 2π).
    if theta >= std::f64::consts::TAU {
        theta = 0.0;
    }
    Ok(PolarForm { r, theta })
}
