//! Lorentzian linear algebra on R^3 with signature (+,+,-).
//!
//! The third coordinate is the timelike axis: `<u,v> = u1*v1 + u2*v2 - u3*v3`.
//! All operations are pure functions on immutable values.

use std::ops::{Add, Mul, Neg, Sub};

/// A vector of Lorentz-Minkowski 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LVec3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

/// Causal type of a vector. The zero vector is classified `Spacelike`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalClass {
    Spacelike,
    Timelike,
    Lightlike,
}

impl std::fmt::Display for CausalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CausalClass::Spacelike => write!(f, "spacelike"),
            CausalClass::Timelike => write!(f, "timelike"),
            CausalClass::Lightlike => write!(f, "lightlike"),
        }
    }
}

impl LVec3 {
    pub const ZERO: LVec3 = LVec3 { x1: 0.0, x2: 0.0, x3: 0.0 };

    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        LVec3 { x1, x2, x3 }
    }

    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0 && self.x3 == 0.0
    }

    /// Euclidean squared norm (used only for scale-aware tolerances).
    pub fn eucl_norm_sq(self) -> f64 {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn scale(self, k: f64) -> LVec3 {
        LVec3::new(k * self.x1, k * self.x2, k * self.x3)
    }
}

impl Add for LVec3 {
    type Output = LVec3;
    fn add(self, o: LVec3) -> LVec3 {
        LVec3::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl Sub for LVec3 {
    type Output = LVec3;
    fn sub(self, o: LVec3) -> LVec3 {
        LVec3::new(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl Neg for LVec3 {
    type Output = LVec3;
    fn neg(self) -> LVec3 {
        LVec3::new(-self.x1, -self.x2, -self.x3)
    }
}

impl Mul<LVec3> for f64 {
    type Output = LVec3;
    fn mul(self, v: LVec3) -> LVec3 {
        v.scale(self)
    }
}

/// The indefinite inner product `u1*v1 + u2*v2 - u3*v3`.
pub fn lorentz_inner(u: LVec3, v: LVec3) -> f64 {
    u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3
}

/// `sqrt(|<v,v>|)`; zero exactly on lightlike vectors and the origin.
pub fn lorentz_norm(v: LVec3) -> f64 {
    lorentz_inner(v, v).abs().sqrt()
}

/// Default classification tolerance: `1e-10 * max(1, ||v||^2_euclidean)`.
pub fn default_causal_tau(v: LVec3) -> f64 {
    1e-10 * v.eucl_norm_sq().max(1.0)
}

/// Causal classification under tolerance `tau >= 0`:
/// lightlike if `|<v,v>| <= tau` and `v != 0`; spacelike if `<v,v> > tau` or
/// `v = 0`; timelike if `<v,v> < -tau`.
pub fn causal_class(v: LVec3, tau: f64) -> CausalClass {
    debug_assert!(tau >= 0.0);
    if v.is_zero() {
        return CausalClass::Spacelike;
    }
    let q = lorentz_inner(v, v);
    if q.abs() <= tau {
        CausalClass::Lightlike
    } else if q > 0.0 {
        CausalClass::Spacelike
    } else {
        CausalClass::Timelike
    }
}

/// The unique vector `w` with `<w,x> = det(x,u,v)` for every `x` (rows in
/// that order). Equals the Euclidean cross product with the third component
/// negated.
pub fn lorentz_cross(u: LVec3, v: LVec3) -> LVec3 {
    LVec3::new(
        u.x2 * v.x3 - u.x3 * v.x2,
        u.x3 * v.x1 - u.x1 * v.x3,
        -(u.x1 * v.x2 - u.x2 * v.x1),
    )
}

/// Mixed product `(u,v,w) = <u x v, w> = det(u,v,w)`.
pub fn mixed_product(u: LVec3, v: LVec3, w: LVec3) -> f64 {
    lorentz_inner(lorentz_cross(u, v), w)
}
