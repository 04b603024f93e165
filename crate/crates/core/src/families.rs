//! The four families of ruled translating solitons, as closed-form curve
//! jets. Every family is a ruled surface `X(s,t) = gamma(s) + t*beta(s)`:
//!
//! * [`NonCylFamily`] — the only family with a non-constant ruling,
//!   `beta(s) = (1,s,s)` (lightlike for every `s`).
//! * [`CylEqualFamily`] — cylindrical, spacelike ruling `w=(1,0,0)`, velocity
//!   `(v1, v2, sigma*v2)` with `|v2|=|v3|`.
//! * [`CylGeneralFamily`] — cylindrical, spacelike ruling `w=(1,0,0)`,
//!   velocity `(v1, v2, v3)` with `v2^2 != v3^2`.
//! * [`CylTimelikeFamily`] — cylindrical, timelike ruling `w=(0,0,1)`,
//!   velocity `(v1, v2, v3)`, base curve parametrized by Euclidean arc
//!   length in the `(x1,x2)` plane.
//!
//! The velocity components tangent to a constant ruling (`v1` in the
//! spacelike-ruling families, `v3` in the timelike one) drop out of the
//! soliton equation; [`FamilySpec::velocity`] sets them to zero.
//!
//! Integration constants shift the surface and default to zero in the
//! constructors' callers; parameter-shift normalizations are baked into the
//! closed forms.

use crate::error::{Error, Result};
use crate::jet::{ParamSurface, SurfaceJet2};
use crate::mink::LVec3;
use crate::ruled::{compose_ruled_jet, CurveJet, RuledSpec};

fn require_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be finite, got {x}")))
    }
}

fn require_sign(name: &str, x: i32) -> Result<()> {
    if x == 1 || x == -1 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be +1 or -1, got {x}")))
    }
}

/// Non-cylindrical family: ruling `beta(s) = (1,s,s)`, base curve
/// (with `d = v2 - v3`)
///
/// ```text
/// x(s) = d/8 s + c1
/// y(s) = 3d/64 s^2 + v1/16 s + (v3-3v2)/32 ln|s| + c2
/// z(s) = 3d/64 s^2 + v1/16 s + (v2-3v3)/32 ln|s| + c3
/// ```
///
/// defined on either component of `s != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonCylFamily {
    pub v: LVec3,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl NonCylFamily {
    pub fn new(v: LVec3, c1: f64, c2: f64, c3: f64) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::InvalidParameter(format!("velocity must be finite, got {v:?}")));
        }
        for (name, c) in [("c1", c1), ("c2", c2), ("c3", c3)] {
            require_finite(name, c)?;
        }
        if v.x2 == v.x3 {
            return Err(Error::InvalidParameter(format!(
                "non-cylindrical family requires v2 != v3, got v2 = v3 = {}",
                v.x2
            )));
        }
        Ok(Self { v, c1, c2, c3 })
    }

    pub fn in_domain(&self, s: f64) -> bool {
        s != 0.0 && s.is_finite()
    }

    /// Base-curve jet; caller must ensure `s != 0`.
    pub fn gamma_jet(&self, s: f64) -> CurveJet {
        let (v1, v2, v3) = (self.v.x1, self.v.x2, self.v.x3);
        let d = v2 - v3;
        let ky = (v3 - 3.0 * v2) / 32.0;
        let kz = (v2 - 3.0 * v3) / 32.0;
        let ln = s.abs().ln();
        let quad = 3.0 * d / 64.0 * s * s + v1 / 16.0 * s;
        let dquad = 3.0 * d / 32.0 * s + v1 / 16.0;
        let ddquad = 3.0 * d / 32.0;
        CurveJet {
            p: LVec3::new(d / 8.0 * s + self.c1, quad + ky * ln + self.c2, quad + kz * ln + self.c3),
            d1: LVec3::new(d / 8.0, dquad + ky / s, dquad + kz / s),
            d2: LVec3::new(0.0, ddquad - ky / (s * s), ddquad - kz / (s * s)),
        }
    }

    pub fn beta_jet(&self, s: f64) -> CurveJet {
        CurveJet {
            p: LVec3::new(1.0, s, s),
            d1: LVec3::new(0.0, 1.0, 1.0),
            d2: LVec3::ZERO,
        }
    }
}

/// Cylindrical family with `|v2| = |v3|`: ruling `w = (1,0,0)`, velocity
/// `(v1, v2, sigma*v2)`, profile curve (in the `(x2,x3)` plane)
///
/// ```text
/// x(s) = -delta s^2/(2 v2) - (v2/4) ln|s| + c1
/// y(s) = sigma (delta s^2/(2 v2) - (v2/4) ln|s|) + c2
/// ```
///
/// on either component of `s != 0`; `delta = <gamma',gamma'>` in `{-1,+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylEqualFamily {
    pub v2: f64,
    pub sigma: i32,
    pub delta: i32,
    pub c1: f64,
    pub c2: f64,
}

impl CylEqualFamily {
    pub fn new(v2: f64, sigma: i32, delta: i32, c1: f64, c2: f64) -> Result<Self> {
        require_finite("v2", v2)?;
        require_finite("c1", c1)?;
        require_finite("c2", c2)?;
        require_sign("sigma", sigma)?;
        require_sign("delta", delta)?;
        if v2 == 0.0 {
            return Err(Error::InvalidParameter(
                "equal-components cylindrical family requires v2 != 0".into(),
            ));
        }
        Ok(Self { v2, sigma, delta, c1, c2 })
    }

    pub fn in_domain(&self, s: f64) -> bool {
        s != 0.0 && s.is_finite()
    }

    /// Profile jet `(x, y)`; caller must ensure `s != 0`.
    pub fn profile(&self, s: f64) -> ([f64; 2], [f64; 2], [f64; 2]) {
        let (v2, sg, d) = (self.v2, self.sigma as f64, self.delta as f64);
        let x = -d * s * s / (2.0 * v2) - v2 / 4.0 * s.abs().ln() + self.c1;
        let y = sg * (d * s * s / (2.0 * v2) - v2 / 4.0 * s.abs().ln()) + self.c2;
        let dx = -d * s / v2 - v2 / (4.0 * s);
        let dy = sg * (d * s / v2 - v2 / (4.0 * s));
        let ddx = -d / v2 + v2 / (4.0 * s * s);
        let ddy = sg * (d / v2 + v2 / (4.0 * s * s));
        ([x, y], [dx, dy], [ddx, ddy])
    }

    pub fn gamma_jet(&self, s: f64) -> CurveJet {
        let (p, d1, d2) = self.profile(s);
        CurveJet {
            p: LVec3::new(0.0, p[0], p[1]),
            d1: LVec3::new(0.0, d1[0], d1[1]),
            d2: LVec3::new(0.0, d2[0], d2[1]),
        }
    }
}

/// Cylindrical family with `v2^2 != v3^2`: ruling `w = (1,0,0)`, velocity
/// `(v1, v2, v3)`. With `dn = v3^2 - v2^2`, `kq = delta*dn/4` and
/// `W = sqrt(s^2 + kq)`, the profile derivative is
///
/// ```text
/// x'(s) = 2 delta v2 s/dn + branch * (2|v3|/dn) W
/// ```
///
/// and `y'` solves `v3 y' - v2 x' = 2 delta s` (for `v3 = 0` the arc-length
/// relation fixes `y' = branch * 2W/|v2|` instead). Positions integrate via
/// the antiderivative of `2W`, `s W + kq ln|s + W|`. Domain: `s^2 + kq > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylGeneralFamily {
    pub v2: f64,
    pub v3: f64,
    pub delta: i32,
    pub branch: i32,
    pub c1: f64,
    pub c2: f64,
}

impl CylGeneralFamily {
    pub fn new(v2: f64, v3: f64, delta: i32, branch: i32, c1: f64, c2: f64) -> Result<Self> {
        require_finite("v2", v2)?;
        require_finite("v3", v3)?;
        require_finite("c1", c1)?;
        require_finite("c2", c2)?;
        require_sign("delta", delta)?;
        require_sign("branch", branch)?;
        if v2 * v2 == v3 * v3 {
            return Err(Error::InvalidParameter(format!(
                "general cylindrical family requires v2^2 != v3^2, got |v2| = |v3| = {}",
                v2.abs()
            )));
        }
        Ok(Self { v2, v3, delta, branch, c1, c2 })
    }

    fn kq(&self) -> f64 {
        self.delta as f64 * (self.v3 * self.v3 - self.v2 * self.v2) / 4.0
    }

    pub fn in_domain(&self, s: f64) -> bool {
        s.is_finite() && s * s + self.kq() > 0.0
    }

    /// Profile jet `(x, y)`; caller must ensure `s^2 + kq > 0`.
    pub fn profile(&self, s: f64) -> ([f64; 2], [f64; 2], [f64; 2]) {
        let (v2, v3) = (self.v2, self.v3);
        let (d, b) = (self.delta as f64, self.branch as f64);
        let dn = v3 * v3 - v2 * v2;
        let kq = self.kq();
        let w = (s * s + kq).sqrt();
        let dx = 2.0 * d * v2 * s / dn + b * (2.0 * v3.abs() / dn) * w;
        let ddx = 2.0 * d * v2 / dn + b * (2.0 * v3.abs() / dn) * (s / w);
        let (dy, ddy) = if v3 != 0.0 {
            ((2.0 * d * s + v2 * dx) / v3, (2.0 * d + v2 * ddx) / v3)
        } else {
            (b * 2.0 * w / v2.abs(), b * 2.0 * (s / w) / v2.abs())
        };
        let anti = s * w + kq * (s + w).abs().ln();
        let x = d * v2 * s * s / dn + b * (v3.abs() / dn) * anti + self.c1;
        let y = if v3 != 0.0 {
            d * v3 * s * s / dn + b * (v2 * v3.signum() / dn) * anti + self.c2
        } else {
            b / v2.abs() * anti + self.c2
        };
        ([x, y], [dx, dy], [ddx, ddy])
    }

    pub fn gamma_jet(&self, s: f64) -> CurveJet {
        let (p, d1, d2) = self.profile(s);
        CurveJet {
            p: LVec3::new(0.0, p[0], p[1]),
            d1: LVec3::new(0.0, d1[0], d1[1]),
            d2: LVec3::new(0.0, d2[0], d2[1]),
        }
    }
}

/// Cylindrical family with timelike ruling `w = (0,0,1)` and velocity
/// `(v1, v2, v3)`, `(v1,v2) != (0,0)`. With `P = v1^2 + v2^2` and
/// `U = sqrt(P/4 - s^2)`,
///
/// ```text
/// x'(s) = -2 v1 s/P + (2 ax/P) U      ax = branch*|v2|
/// y'(s) = -2 v2 s/P + (2 ay/P) U      ay = -branch*v1*sign(v2)  (|v1| if v2=0)
/// ```
///
/// which satisfies `(x')^2 + (y')^2 = 1` and `v1 x' + v2 y' = -2s`. Positions
/// use the antiderivative `-arccos(2s/sqrt(P))/4 + s U/P`. Domain:
/// `|s| < sqrt(P)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylTimelikeFamily {
    pub v1: f64,
    pub v2: f64,
    pub branch: i32,
    pub c1: f64,
    pub c2: f64,
}

impl CylTimelikeFamily {
    pub fn new(v1: f64, v2: f64, branch: i32, c1: f64, c2: f64) -> Result<Self> {
        require_finite("v1", v1)?;
        require_finite("v2", v2)?;
        require_finite("c1", c1)?;
        require_finite("c2", c2)?;
        require_sign("branch", branch)?;
        if v1 == 0.0 && v2 == 0.0 {
            return Err(Error::InvalidParameter(
                "timelike-ruling cylindrical family requires (v1,v2) != (0,0)".into(),
            ));
        }
        Ok(Self { v1, v2, branch, c1, c2 })
    }

    /// Half-width of the parameter interval: `sqrt(v1^2+v2^2)/2`.
    pub fn s_max(&self) -> f64 {
        (self.v1 * self.v1 + self.v2 * self.v2).sqrt() / 2.0
    }

    pub fn in_domain(&self, s: f64) -> bool {
        s.is_finite() && s.abs() < self.s_max()
    }

    /// Profile jet `(x, y)`; caller must ensure `|s| < s_max`.
    pub fn profile(&self, s: f64) -> ([f64; 2], [f64; 2], [f64; 2]) {
        let (v1, v2, b) = (self.v1, self.v2, self.branch as f64);
        let p = v1 * v1 + v2 * v2;
        let u = (p / 4.0 - s * s).sqrt();
        let ax = b * v2.abs();
        let ay = if v2 != 0.0 { -b * v1 * v2.signum() } else { b * v1.abs() };
        let dx = -2.0 * v1 * s / p + (2.0 * ax / p) * u;
        let dy = -2.0 * v2 * s / p + (2.0 * ay / p) * u;
        let ddx = -2.0 * v1 / p - (2.0 * ax / p) * (s / u);
        let ddy = -2.0 * v2 / p - (2.0 * ay / p) * (s / u);
        let anti = -0.25 * (2.0 * s / p.sqrt()).acos() + s * u / p;
        let x = -v1 * s * s / p + ax * anti + self.c1;
        let y = -v2 * s * s / p + ay * anti + self.c2;
        ([x, y], [dx, dy], [ddx, ddy])
    }

    pub fn gamma_jet(&self, s: f64) -> CurveJet {
        let (p, d1, d2) = self.profile(s);
        CurveJet {
            p: LVec3::new(p[0], p[1], 0.0),
            d1: LVec3::new(d1[0], d1[1], 0.0),
            d2: LVec3::new(d2[0], d2[1], 0.0),
        }
    }
}

/// Tagged union over the four families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    NonCyl(NonCylFamily),
    CylEqual(CylEqualFamily),
    CylGeneral(CylGeneralFamily),
    CylTimelike(CylTimelikeFamily),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::NonCyl(_) => "noncyl",
            FamilySpec::CylEqual(_) => "cyl-eq",
            FamilySpec::CylGeneral(_) => "cyl-gen",
            FamilySpec::CylTimelike(_) => "cyl-time",
        }
    }

    /// The translation velocity the family is built for, with the component
    /// tangent to a constant ruling set to zero.
    pub fn velocity(&self) -> LVec3 {
        match *self {
            FamilySpec::NonCyl(f) => f.v,
            FamilySpec::CylEqual(f) => LVec3::new(0.0, f.v2, f.sigma as f64 * f.v2),
            FamilySpec::CylGeneral(f) => LVec3::new(0.0, f.v2, f.v3),
            FamilySpec::CylTimelike(f) => LVec3::new(f.v1, f.v2, 0.0),
        }
    }

    /// Direction along which the velocity component is unconstrained: the
    /// ruling for the cylindrical families, none for the non-cylindrical one.
    pub fn free_velocity_direction(&self) -> Option<LVec3> {
        match self {
            FamilySpec::NonCyl(_) => None,
            FamilySpec::CylEqual(_) | FamilySpec::CylGeneral(_) => {
                Some(LVec3::new(1.0, 0.0, 0.0))
            }
            FamilySpec::CylTimelike(_) => Some(LVec3::new(0.0, 0.0, 1.0)),
        }
    }

    /// Causal sign `<beta,beta>` of the ruling: `+1` for the spacelike-ruling
    /// families and for `beta=(1,s,s)` (`<beta,beta> = 1` for all `s`), `-1`
    /// for the timelike ruling.
    pub fn ruling_delta(&self) -> i32 {
        match self {
            FamilySpec::CylTimelike(_) => -1,
            _ => 1,
        }
    }

    pub fn gamma_jet(&self, s: f64) -> CurveJet {
        match self {
            FamilySpec::NonCyl(f) => f.gamma_jet(s),
            FamilySpec::CylEqual(f) => f.gamma_jet(s),
            FamilySpec::CylGeneral(f) => f.gamma_jet(s),
            FamilySpec::CylTimelike(f) => f.gamma_jet(s),
        }
    }

    pub fn beta_jet(&self, s: f64) -> CurveJet {
        match self {
            FamilySpec::NonCyl(f) => f.beta_jet(s),
            FamilySpec::CylEqual(_) | FamilySpec::CylGeneral(_) => CurveJet {
                p: LVec3::new(1.0, 0.0, 0.0),
                d1: LVec3::ZERO,
                d2: LVec3::ZERO,
            },
            FamilySpec::CylTimelike(_) => CurveJet {
                p: LVec3::new(0.0, 0.0, 1.0),
                d1: LVec3::ZERO,
                d2: LVec3::ZERO,
            },
        }
    }

    pub fn in_domain(&self, s: f64) -> bool {
        match self {
            FamilySpec::NonCyl(f) => f.in_domain(s),
            FamilySpec::CylEqual(f) => f.in_domain(s),
            FamilySpec::CylGeneral(f) => f.in_domain(s),
            FamilySpec::CylTimelike(f) => f.in_domain(s),
        }
    }

    /// True when `[lo, hi]` sits inside one connected component of the
    /// `s`-domain; grids must never straddle `s = 0` (or the excluded band
    /// of the general cylindrical family).
    pub fn domain_connected(&self, lo: f64, hi: f64) -> bool {
        if !(FamilySpec::in_domain(self, lo) && FamilySpec::in_domain(self, hi)) {
            return false;
        }
        match self {
            FamilySpec::NonCyl(_) | FamilySpec::CylEqual(_) => lo * hi > 0.0,
            FamilySpec::CylGeneral(f) => f.kq() > 0.0 || lo * hi > 0.0,
            FamilySpec::CylTimelike(_) => true,
        }
    }

    pub fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet2> {
        if !FamilySpec::in_domain(self, s) {
            return Err(Error::DomainError(format!(
                "s = {s} is outside the domain of the {} family",
                self.name()
            )));
        }
        let jet = compose_ruled_jet(&self.gamma_jet(s), &self.beta_jet(s), t);
        if !jet.is_finite() {
            return Err(Error::DomainError(format!("non-finite jet at (s,t)=({s},{t})")));
        }
        Ok(jet)
    }

    /// Erases the family into a generic [`RuledSpec`].
    pub fn to_ruled(&self) -> RuledSpec {
        let f = *self;
        let g = *self;
        let d = *self;
        RuledSpec::with_domain(
            Box::new(move |s| f.gamma_jet(s)),
            Box::new(move |s| g.beta_jet(s)),
            Box::new(move |s| FamilySpec::in_domain(&d, s)),
        )
    }

    /// A representative closed interval strictly inside the `s`-domain
    /// (positive component for the `s != 0` families), used for sampling.
    pub fn sample_interval(&self) -> (f64, f64) {
        match self {
            FamilySpec::NonCyl(_) | FamilySpec::CylEqual(_) => (0.5, 2.5),
            FamilySpec::CylGeneral(f) => {
                let kq = f.kq();
                if kq > 0.0 {
                    (-1.5, 1.5)
                } else {
                    // domain is |s| > sqrt(-kq); sample inside the right component
                    let lo = (-kq).sqrt();
                    (lo + 0.5, lo + 2.5)
                }
            }
            FamilySpec::CylTimelike(f) => {
                let m = 0.85 * f.s_max();
                (-m, m)
            }
        }
    }

    /// True when the base curve is regular (`gamma' != 0`) at `samples`
    /// points across [`FamilySpec::sample_interval`] — i.e. the surface is
    /// not conical. Valid families always pass: the non-cylindrical base has
    /// constant `x' = (v2-v3)/8 != 0`, and the cylindrical profiles satisfy
    /// arc-length identities bounding `gamma'` away from zero.
    pub fn conical_check(&self, samples: usize) -> Result<bool> {
        if samples < 2 {
            return Err(Error::InvalidParameter(format!(
                "conical check needs at least 2 samples, got {samples}"
            )));
        }
        let (lo, hi) = self.sample_interval();
        for i in 0..samples {
            let s = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
            if !FamilySpec::in_domain(self, s) {
                continue;
            }
            if self.gamma_jet(s).d1.eucl_norm_sq() <= 1e-24 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl ParamSurface for FamilySpec {
    fn position(&self, s: f64, t: f64) -> Result<LVec3> {
        Ok(self.jet(s, t)?.x)
    }
    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet2> {
        FamilySpec::jet(self, s, t)
    }
    fn in_domain(&self, s: f64, _t: f64) -> bool {
        FamilySpec::in_domain(self, s)
    }
    fn domain_connected(&self, s_lo: f64, s_hi: f64) -> bool {
        FamilySpec::domain_connected(self, s_lo, s_hi)
    }
}
