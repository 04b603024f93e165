//! Fundamental forms, unit normal, and mean curvature of a nondegenerate
//! parametrized surface, evaluated from a second-order jet.
//!
//! Conventions: the normal used for all scalar outputs is the "+" orientation
//! `N = (X_s x X_t)/|X_s x X_t|`; `eps = <N,N>` is `+1` on timelike surfaces
//! (`EG - F^2 < 0`) and `-1` on spacelike ones (`EG - F^2 > 0`). Callers that
//! need the other orientation negate.

use crate::error::{Error, Result};
use crate::mink::{lorentz_cross, lorentz_inner, mixed_product, LVec3};

/// Position and all first/second partial derivatives of a parametrization at
/// a single `(s,t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceJet2 {
    pub x: LVec3,
    pub x_s: LVec3,
    pub x_t: LVec3,
    pub x_ss: LVec3,
    pub x_st: LVec3,
    pub x_tt: LVec3,
}

impl SurfaceJet2 {
    pub fn is_finite(&self) -> bool {
        self.x.is_finite()
            && self.x_s.is_finite()
            && self.x_t.is_finite()
            && self.x_ss.is_finite()
            && self.x_st.is_finite()
            && self.x_tt.is_finite()
    }
}

/// First/second form coefficients, causal sign, area element, and mean
/// curvature at one point, all for the "+" normal.
#[derive(Debug, Clone, Copy, PartialEq)]
#[allow(non_snake_case)]
pub struct FundamentalData {
    pub E: f64,
    pub F: f64,
    pub G: f64,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    /// `<N,N>`: +1 timelike, -1 spacelike.
    pub eps: i32,
    /// `|X_s x X_t| = sqrt(|EG - F^2|)`.
    pub area_el: f64,
    /// Mean curvature `(eps/2)(eG - 2fF + Eg)/(EG - F^2)`.
    pub H: f64,
}

/// An evaluatable parametrized surface over a rectangular-with-exclusions
/// parameter domain. Evaluators must be callable from multiple threads.
pub trait ParamSurface: Sync {
    fn position(&self, s: f64, t: f64) -> Result<LVec3>;
    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet2>;
    fn in_domain(&self, s: f64, t: f64) -> bool;
    /// True when `[s_lo, s_hi]` lies inside one connected component of the
    /// `s`-domain. Pointwise `in_domain` cannot see a grid straddling an
    /// excluded locus (e.g. `s = 0`) whose samples all miss it; surfaces
    /// with disconnected domains override this.
    fn domain_connected(&self, _s_lo: f64, _s_hi: f64) -> bool {
        true
    }
}

/// First fundamental form `(E, F, G) = (<X_s,X_s>, <X_s,X_t>, <X_t,X_t>)`.
pub fn first_form(j: &SurfaceJet2) -> (f64, f64, f64) {
    (
        lorentz_inner(j.x_s, j.x_s),
        lorentz_inner(j.x_s, j.x_t),
        lorentz_inner(j.x_t, j.x_t),
    )
}

/// Scale-aware degeneracy tolerance `1e-9 * max(1, E*G, F^2)`.
#[allow(non_snake_case)]
pub fn default_degeneracy_tau(E: f64, F: f64, G: f64) -> f64 {
    1e-9 * (E * G).max(F * F).max(1.0)
}

/// Causal sign of the surface: `+1` if `EG - F^2 < -tau` (timelike), `-1` if
/// `EG - F^2 > tau` (spacelike).
pub fn nondegeneracy(j: &SurfaceJet2, tau: f64) -> Result<i32> {
    #[allow(non_snake_case)]
    let (E, F, G) = first_form(j);
    let disc = E * G - F * F;
    if disc.abs() <= tau {
        return Err(Error::DegenerateSurface { disc_abs: disc.abs(), tau });
    }
    Ok(if disc < 0.0 { 1 } else { -1 })
}

fn nondegenerate_area(j: &SurfaceJet2) -> Result<(f64, f64, f64, f64, i32, f64)> {
    #[allow(non_snake_case)]
    let (E, F, G) = first_form(j);
    let tau = default_degeneracy_tau(E, F, G);
    let disc = E * G - F * F;
    if disc.abs() <= tau {
        return Err(Error::DegenerateSurface { disc_abs: disc.abs(), tau });
    }
    let eps = if disc < 0.0 { 1 } else { -1 };
    Ok((E, F, G, disc, eps, disc.abs().sqrt()))
}

/// Unit normal `sign * (X_s x X_t)/|X_s x X_t|`, with `sign` in `{-1,+1}`.
pub fn unit_normal(j: &SurfaceJet2, sign: i32) -> Result<LVec3> {
    debug_assert!(sign == 1 || sign == -1);
    let (.., area) = nondegenerate_area(j)?;
    Ok(lorentz_cross(j.x_s, j.x_t).scale(sign as f64 / area))
}

/// Second fundamental form for the "+" normal:
/// `e = (X_s,X_t,X_ss)/|X_s x X_t|`, similarly `f` with `X_st`, `g` with `X_tt`.
pub fn second_form(j: &SurfaceJet2) -> Result<(f64, f64, f64)> {
    let (.., area) = nondegenerate_area(j)?;
    Ok((
        mixed_product(j.x_s, j.x_t, j.x_ss) / area,
        mixed_product(j.x_s, j.x_t, j.x_st) / area,
        mixed_product(j.x_s, j.x_t, j.x_tt) / area,
    ))
}

/// Mean curvature `(eps/2)(eG - 2fF + Eg)/(EG - F^2)` for the "+" normal.
pub fn mean_curvature(j: &SurfaceJet2) -> Result<f64> {
    Ok(fundamental(j)?.H)
}

/// Mean curvature written directly in mixed products, bypassing `e,f,g`:
/// `eps * [G(X_s,X_t,X_ss) - 2F(X_s,X_t,X_st) + E(X_s,X_t,X_tt)] / (2*area*(EG-F^2))`.
/// Algebraically identical to [`mean_curvature`]; rounds differently, which is
/// exactly what the cross-check tests exercise.
pub fn mean_curvature_mixed(j: &SurfaceJet2) -> Result<f64> {
    #[allow(non_snake_case)]
    let (E, F, G, disc, eps, area) = nondegenerate_area(j)?;
    let num = G * mixed_product(j.x_s, j.x_t, j.x_ss) - 2.0 * F * mixed_product(j.x_s, j.x_t, j.x_st)
        + E * mixed_product(j.x_s, j.x_t, j.x_tt);
    Ok(eps as f64 * num / (2.0 * area * disc))
}

/// All pointwise data in one pass.
pub fn fundamental(j: &SurfaceJet2) -> Result<FundamentalData> {
    #[allow(non_snake_case)]
    let (E, F, G, disc, eps, area) = nondegenerate_area(j)?;
    let e = mixed_product(j.x_s, j.x_t, j.x_ss) / area;
    let f = mixed_product(j.x_s, j.x_t, j.x_st) / area;
    let g = mixed_product(j.x_s, j.x_t, j.x_tt) / area;
    #[allow(non_snake_case)]
    let H = 0.5 * eps as f64 * (e * G - 2.0 * f * F + E * g) / disc;
    Ok(FundamentalData { E, F, G, e, f, g, eps, area_el: area, H })
}

/// Default finite-difference step `1e-5 * max(1, |s|, |t|)`.
pub fn default_fd_step(s: f64, t: f64) -> f64 {
    1e-5 * s.abs().max(t.abs()).max(1.0)
}

/// Second-order central-difference jet from positions only: 3-point stencils
/// per axis, 4-point stencil for the mixed partial. Fails with `DomainError`
/// if any stencil point leaves the surface's domain.
pub fn fd_jet(surface: &dyn ParamSurface, s: f64, t: f64, h: f64) -> Result<SurfaceJet2> {
    debug_assert!(h > 0.0);
    let offsets = [
        (0.0, 0.0),
        (h, 0.0),
        (-h, 0.0),
        (0.0, h),
        (0.0, -h),
        (h, h),
        (h, -h),
        (-h, h),
        (-h, -h),
    ];
    for (ds, dt) in offsets {
        if !surface.in_domain(s + ds, t + dt) {
            return Err(Error::DomainError(format!(
                "finite-difference stencil leaves the domain at (s,t)=({},{})",
                s + ds,
                t + dt
            )));
        }
    }
    let c = surface.position(s, t)?;
    let sp = surface.position(s + h, t)?;
    let sm = surface.position(s - h, t)?;
    let tp = surface.position(s, t + h)?;
    let tm = surface.position(s, t - h)?;
    let pp = surface.position(s + h, t + h)?;
    let pm = surface.position(s + h, t - h)?;
    let mp = surface.position(s - h, t + h)?;
    let mm = surface.position(s - h, t - h)?;
    let h2 = h * h;
    Ok(SurfaceJet2 {
        x: c,
        x_s: (sp - sm).scale(1.0 / (2.0 * h)),
        x_t: (tp - tm).scale(1.0 / (2.0 * h)),
        x_ss: (sp - c.scale(2.0) + sm).scale(1.0 / h2),
        x_tt: (tp - c.scale(2.0) + tm).scale(1.0 / h2),
        x_st: (pp - pm - mp + mm).scale(1.0 / (4.0 * h2)),
    })
}
