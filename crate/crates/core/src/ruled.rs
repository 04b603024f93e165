//! Ruled surfaces `X(s,t) = gamma(s) + t * beta(s)` and the pointwise
//! residuals measuring how far such a surface is from being a translating
//! soliton of inverse mean curvature flow with velocity `V`, i.e. from
//! satisfying `<N,V> H = -1`.

use crate::error::{Error, Result};
use crate::jet::{
    default_degeneracy_tau, first_form, fundamental, ParamSurface, SurfaceJet2,
};
use crate::mink::{lorentz_inner, mixed_product, LVec3};

/// Value and first two derivatives of a space curve at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveJet {
    pub p: LVec3,
    pub d1: LVec3,
    pub d2: LVec3,
}

type CurveFn = Box<dyn Fn(f64) -> CurveJet + Send + Sync>;
type DomainFn = Box<dyn Fn(f64) -> bool + Send + Sync>;

/// A ruled surface given by jet evaluators for the base curve `gamma` and the
/// ruling direction `beta`, with an optional restriction of the `s`-domain.
/// The `t`-domain is all of `R`.
pub struct RuledSpec {
    gamma: CurveFn,
    beta: CurveFn,
    domain: DomainFn,
}

impl RuledSpec {
    pub fn new(gamma: CurveFn, beta: CurveFn) -> Self {
        Self { gamma, beta, domain: Box::new(|_| true) }
    }

    pub fn with_domain(gamma: CurveFn, beta: CurveFn, domain: DomainFn) -> Self {
        Self { gamma, beta, domain }
    }

    pub fn gamma_jet(&self, s: f64) -> CurveJet {
        (self.gamma)(s)
    }

    pub fn beta_jet(&self, s: f64) -> CurveJet {
        (self.beta)(s)
    }

    pub fn in_domain(&self, s: f64) -> bool {
        (self.domain)(s)
    }
}

impl ParamSurface for RuledSpec {
    fn position(&self, s: f64, t: f64) -> Result<LVec3> {
        Ok(ruled_jet(self, s, t)?.x)
    }
    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet2> {
        ruled_jet(self, s, t)
    }
    fn in_domain(&self, s: f64, _t: f64) -> bool {
        RuledSpec::in_domain(self, s)
    }
}

/// Assembles the exact jet of `X = gamma + t*beta` from the two curve jets:
/// `X_s = gamma' + t*beta'`, `X_t = beta`, `X_ss = gamma'' + t*beta''`,
/// `X_st = beta'`, `X_tt = 0`.
pub fn compose_ruled_jet(g: &CurveJet, b: &CurveJet, t: f64) -> SurfaceJet2 {
    SurfaceJet2 {
        x: g.p + t * b.p,
        x_s: g.d1 + t * b.d1,
        x_t: b.p,
        x_ss: g.d2 + t * b.d2,
        x_st: b.d1,
        x_tt: LVec3::ZERO,
    }
}

/// Exact jet of `X = gamma + t*beta` with domain and finiteness checks.
pub fn ruled_jet(spec: &RuledSpec, s: f64, t: f64) -> Result<SurfaceJet2> {
    if !spec.in_domain(s) {
        return Err(Error::DomainError(format!("s = {s} is outside the ruled surface's domain")));
    }
    let jet = compose_ruled_jet(&spec.gamma_jet(s), &spec.beta_jet(s), t);
    if !jet.is_finite() {
        return Err(Error::DomainError(format!("non-finite jet at (s,t)=({s},{t})")));
    }
    Ok(jet)
}

/// Polynomial-cleared soliton residual and its normalized form.
///
/// For a nondegenerate jet with `disc = EG - F^2`, the defining equation
/// `<N,V> H = -1` multiplied through by `2*disc^2 / (stuff that squares to 1)`
/// becomes, after using `X_tt = 0` on ruled patches,
///
/// `raw = (X_s,X_t,V) * [G*(X_s,X_t,X_ss) - 2F*(X_s,X_t,X_st)] - 2*disc^2`,
///
/// which vanishes exactly on translators with velocity `V`. The normalized
/// value `raw / (1 + disc^2)` stays O(1) on far-from-soliton inputs.
pub fn soliton_residual_princ(j: &SurfaceJet2, v: LVec3) -> Result<(f64, f64)> {
    #[allow(non_snake_case)]
    let (E, F, G) = first_form(j);
    let disc = E * G - F * F;
    let tau = default_degeneracy_tau(E, F, G);
    if disc.abs() <= tau {
        return Err(Error::DegenerateSurface { disc_abs: disc.abs(), tau });
    }
    let mv = mixed_product(j.x_s, j.x_t, v);
    let mss = mixed_product(j.x_s, j.x_t, j.x_ss);
    let mst = mixed_product(j.x_s, j.x_t, j.x_st);
    let raw = mv * (G * mss - 2.0 * F * mst) - 2.0 * disc * disc;
    Ok((raw, raw / (1.0 + disc * disc)))
}

/// Scale-aware tolerance below which the mean curvature counts as zero:
/// `1e-9 * (1 + |e| + |f| + |g|)`.
pub fn curvature_tau(e: f64, f: f64, g: f64) -> f64 {
    1e-9 * (1.0 + e.abs() + f.abs() + g.abs())
}

/// Direct soliton residual `|<N,V> H + 1|`, minimized over the two normal
/// orientations. (Flipping `N` flips `H` as well, so the product --- and
/// hence the minimum --- is orientation-invariant; the minimization mirrors
/// the definition rather than doing extra work.) Fails with
/// `MeanCurvatureZero` when `|H| <= curvature_tau(e,f,g)`.
pub fn soliton_residual_normal(j: &SurfaceJet2, v: LVec3) -> Result<f64> {
    let fd = fundamental(j)?;
    let tau = curvature_tau(fd.e, fd.f, fd.g);
    if fd.H.abs() <= tau {
        return Err(Error::MeanCurvatureZero(format!(
            "|H| = {:.3e} <= tau = {:.3e}: the flow speed 1/H is undefined",
            fd.H.abs(),
            tau
        )));
    }
    let q = mixed_product(j.x_s, j.x_t, v) / fd.area_el; // <N_+, V>
    let mut best = f64::INFINITY;
    for sign in [1.0, -1.0] {
        best = best.min((sign * q * sign * fd.H + 1.0).abs());
    }
    Ok(best)
}

/// Coefficients of the quartic `p(t) = A0 + A1 t + A2 t^2 + A3 t^3 + A4 t^4`
/// obtained by expanding the polynomial-cleared residual of a ruled surface
/// in the ruling parameter, together with a magnitude scale built from the
/// largest constituent monomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyCoeffs {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub scale: f64,
}

impl PolyCoeffs {
    pub fn eval(&self, t: f64) -> f64 {
        (((self.a4 * t + self.a3) * t + self.a2) * t + self.a1) * t + self.a0
    }
}

/// Expands the residual of `gamma + t*beta` at fixed `s` as a quartic in `t`,
/// assuming the ruling is normalized: `<beta,beta> = delta` (`+1` or `-1`)
/// and `<beta,gamma'> = 0`. With
/// `e0 = <g',g'>`, `e1 = <g',b'>`, `e2 = <b',b'>`,
/// `q0 = (g',b,V)`, `q1 = (b',b,V)`,
/// `s0 = (g',b,g'')`, `s1 = (g',b,b'') + (b',b,g'')`, `s2 = (b',b,b'')`,
/// the coefficients are
/// `A0 = 2 e0^2 - delta q0 s0`,
/// `A1 = 8 e0 e1 - delta (q0 s1 + q1 s0)`,
/// `A2 = 4 e0 e2 + 8 e1^2 - delta (q0 s2 + q1 s1)`,
/// `A3 = 8 e1 e2 - delta q1 s2`,
/// `A4 = 2 e2^2`,
/// and `p(t) = -raw_residual(s,t)` identically in `t`.
pub fn noncyl_poly_coeffs(spec: &RuledSpec, v: LVec3, delta: i32, s: f64) -> Result<PolyCoeffs> {
    if delta != 1 && delta != -1 {
        return Err(Error::InvalidParameter(format!("delta must be +1 or -1, got {delta}")));
    }
    if !spec.in_domain(s) {
        return Err(Error::DomainError(format!("s = {s} is outside the ruled surface's domain")));
    }
    let g = spec.gamma_jet(s);
    let b = spec.beta_jet(s);
    let bb = lorentz_inner(b.p, b.p);
    let bg = lorentz_inner(b.p, g.d1);
    if (bb - delta as f64).abs() > 1e-8 {
        return Err(Error::AssumptionViolated(format!(
            "ruling is not normalized: <beta,beta> = {bb}, expected {delta}"
        )));
    }
    if bg.abs() > 1e-8 {
        return Err(Error::AssumptionViolated(format!(
            "ruling is not orthogonal to the base curve: <beta,gamma'> = {bg}"
        )));
    }
    let d = delta as f64;
    let e0 = lorentz_inner(g.d1, g.d1);
    let e1 = lorentz_inner(g.d1, b.d1);
    let e2 = lorentz_inner(b.d1, b.d1);
    let q0 = mixed_product(g.d1, b.p, v);
    let q1 = mixed_product(b.d1, b.p, v);
    let s0 = mixed_product(g.d1, b.p, g.d2);
    let s1 = mixed_product(g.d1, b.p, b.d2) + mixed_product(b.d1, b.p, g.d2);
    let s2 = mixed_product(b.d1, b.p, b.d2);
    let monomials = [
        2.0 * e0 * e0,
        8.0 * e0 * e1,
        4.0 * e0 * e2,
        8.0 * e1 * e1,
        8.0 * e1 * e2,
        2.0 * e2 * e2,
        q0 * s0,
        q0 * s1,
        q1 * s0,
        q0 * s2,
        q1 * s1,
        q1 * s2,
    ];
    let scale = 1.0 + monomials.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    Ok(PolyCoeffs {
        a0: 2.0 * e0 * e0 - d * q0 * s0,
        a1: 8.0 * e0 * e1 - d * (q0 * s1 + q1 * s0),
        a2: 4.0 * e0 * e2 + 8.0 * e1 * e1 - d * (q0 * s2 + q1 * s1),
        a3: 8.0 * e1 * e2 - d * q1 * s2,
        a4: 2.0 * e2 * e2,
        scale,
    })
}

/// For a lightlike ruling (`<beta,beta> = 0`), the residual degenerates from
/// a quartic to the affine function `p0 + p1 t` with
/// `p0 = (g',b,V)(g',b,b') + <g',b>^3` and `p1 = (b',b,V)(g',b,b')`.
/// A translator with a lightlike ruling would need both to vanish; the
/// classification tests check that no nondegenerate spec achieves that.
pub fn lightlike_beta_poly(spec: &RuledSpec, v: LVec3, s: f64) -> Result<(f64, f64)> {
    if !spec.in_domain(s) {
        return Err(Error::DomainError(format!("s = {s} is outside the ruled surface's domain")));
    }
    let g = spec.gamma_jet(s);
    let b = spec.beta_jet(s);
    let bb = lorentz_inner(b.p, b.p);
    if bb.abs() > 1e-8 {
        return Err(Error::AssumptionViolated(format!(
            "ruling is not lightlike: <beta,beta> = {bb}"
        )));
    }
    let m_v = mixed_product(g.d1, b.p, v);
    let m_b = mixed_product(g.d1, b.p, b.d1);
    let ip = lorentz_inner(g.d1, b.p);
    Ok((m_v * m_b + ip.powi(3), mixed_product(b.d1, b.p, v) * m_b))
}
