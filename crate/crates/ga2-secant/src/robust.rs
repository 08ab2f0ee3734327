//! Error-free float transforms and a small double-double type.
//!
//! Secant-plane coefficients divide by twice a triangle area, so any rounding
//! in a numerator or in the area itself is amplified by the reciprocal of the
//! triangle's conditioning. The kernels here evaluate those few cancellation-prone
//! expressions (2x2 cross differences, weighted edge sums) to within an ulp or
//! two of the exact real value, which keeps the independent formulas for the
//! quotient in agreement regardless of how thin a triangle gets.
//!
//! Everything in this module is an internal building block; the public API of the
//! crate exposes only plain `f64` values.

/// A value represented as an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Copy, Clone, Debug, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn neg(self) -> Self {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    /// Full double-double addition (Knuth/Dekker two-level renormalization).
    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let t = two_sum(self.lo, other.lo);
        let mut lo = s.lo + t.hi;
        let r = quick_two_sum(s.hi, lo);
        lo = r.lo + t.lo;
        quick_two_sum(r.hi, lo)
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    /// Double-double product, keeping all cross terms that matter at O(eps^2).
    pub fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        let lo = p.lo + (self.hi * other.lo + self.lo * other.hi) + self.lo * other.lo;
        quick_two_sum(p.hi, lo)
    }
}

/// Error-free sum: returns `Dd { hi, lo }` with `hi + lo == a + b` exactly.
pub(crate) fn two_sum(a: f64, b: f64) -> Dd {
    let hi = a + b;
    let bv = hi - a;
    let lo = (a - (hi - bv)) + (b - bv);
    Dd { hi, lo }
}

/// `two_sum` variant that assumes `|a| >= |b|` (or a == 0).
pub(crate) fn quick_two_sum(a: f64, b: f64) -> Dd {
    let hi = a + b;
    let lo = b - (hi - a);
    Dd { hi, lo }
}

/// Error-free difference: `hi + lo == a - b` exactly.
pub(crate) fn two_diff(a: f64, b: f64) -> Dd {
    let hi = a - b;
    let bv = a - hi;
    let lo = (a - (hi + bv)) + (bv - b);
    Dd { hi, lo }
}

/// Error-free product via fused multiply-add: `hi + lo == a * b` exactly.
pub(crate) fn two_prod(a: f64, b: f64) -> Dd {
    let hi = a * b;
    let lo = a.mul_add(b, -hi);
    Dd { hi, lo }
}

/// `p1*q1 - p2*q2` where every factor is itself an exact double-double.
pub(crate) fn cross_dd(p1: Dd, q1: Dd, p2: Dd, q2: Dd) -> Dd {
    p1.mul(q1).sub(p2.mul(q2))
}

/// `(bx-ax)*(cy-ay) - (by-ay)*(cx-ax)` rounded once: twice the signed area of
/// the triangle `a, b, c`, exact to the last ulp even for near-degenerate input.
pub(crate) fn orient2d(ax: f64, ay: f64, bx: f64, by: f64, cx: f64, cy: f64) -> f64 {
    cross_dd(
        two_diff(bx, ax),
        two_diff(cy, ay),
        two_diff(by, ay),
        two_diff(cx, ax),
    )
    .to_f64()
}
