//! Discrete inverse mean curvature flow of sampled surface patches and the
//! translation-deviation metric used to test the soliton property.
//!
//! The stepping scheme is deliberately plain: explicit Euler in time, vertex
//! velocity `-N/H` with the "+"-orientation normal, closed-form jets on the
//! first step and finite-difference jets over the evolving grid afterwards
//! (the analytic surface no longer matches the mesh after one discrete step).
//! Interior stencils are central; boundary lanes use third-order one-sided
//! stencils.

use crate::error::{Error, Result};
use crate::jet::{fundamental, unit_normal, ParamSurface, SurfaceJet2};
use crate::mink::{lorentz_inner, LVec3};

/// A rectangular grid of vertices in row-major order (`i_s * n_t + i_t`),
/// together with the parameter values each lane was sampled at.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshPatch {
    pub n_s: usize,
    pub n_t: usize,
    pub s_vals: Vec<f64>,
    pub t_vals: Vec<f64>,
    pub vertices: Vec<LVec3>,
}

impl MeshPatch {
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n_s && j < self.n_t);
        i * self.n_t + j
    }

    pub fn vertex(&self, i: usize, j: usize) -> LVec3 {
        self.vertices[self.index(i, j)]
    }
}

/// Explicit-Euler flow parameters. `h_floor` guards the `1/H` speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlowConfig {
    pub dt: f64,
    pub steps: usize,
    pub h_floor: f64,
}

impl FlowConfig {
    pub fn new(dt: f64, steps: usize) -> Result<Self> {
        if dt <= 0.0 || !dt.is_finite() {
            return Err(Error::InvalidParameter(format!("dt must be positive, got {dt}")));
        }
        if steps == 0 {
            return Err(Error::InvalidParameter("step count must be at least 1".into()));
        }
        Ok(Self { dt, steps, h_floor: 1e-6 })
    }

    pub fn total_time(&self) -> f64 {
        self.dt * self.steps as f64
    }
}

fn check_axis(name: &str, vals: &[f64]) -> Result<()> {
    if vals.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "{name}-axis needs at least 2 points for 2D stencils, got {}",
            vals.len()
        )));
    }
    let increasing = vals.windows(2).all(|w| w[1] > w[0]);
    let decreasing = vals.windows(2).all(|w| w[1] < w[0]);
    if !(increasing || decreasing) {
        return Err(Error::InvalidParameter(format!("{name}-axis values must be strictly monotone")));
    }
    Ok(())
}

/// Samples exact closed-form positions on the grid `s_vals x t_vals`.
pub fn sample_patch(surface: &dyn ParamSurface, s_vals: &[f64], t_vals: &[f64]) -> Result<MeshPatch> {
    check_axis("s", s_vals)?;
    check_axis("t", t_vals)?;
    let (s_lo, s_hi) = (
        s_vals.iter().cloned().fold(f64::INFINITY, f64::min),
        s_vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    );
    if !surface.domain_connected(s_lo, s_hi) {
        return Err(Error::DomainError(format!(
            "the s-range [{s_lo},{s_hi}] straddles an excluded locus of the surface domain"
        )));
    }
    let mut vertices = Vec::with_capacity(s_vals.len() * t_vals.len());
    for &s in s_vals {
        for &t in t_vals {
            if !surface.in_domain(s, t) {
                return Err(Error::DomainError(format!("grid point (s,t)=({s},{t}) is out of domain")));
            }
            vertices.push(surface.position(s, t)?);
        }
    }
    Ok(MeshPatch {
        n_s: s_vals.len(),
        n_t: t_vals.len(),
        s_vals: s_vals.to_vec(),
        t_vals: t_vals.to_vec(),
        vertices,
    })
}

/// Moves every vertex by `-dt * N/H` (N the "+"-orientation normal computed
/// from the supplied per-vertex jets). Fails with `MeanCurvatureZero` naming
/// the first offending vertex when `|H| < h_floor`.
pub fn imcf_step(patch: &MeshPatch, jets: &[SurfaceJet2], cfg: &FlowConfig) -> Result<MeshPatch> {
    assert_eq!(jets.len(), patch.vertices.len());
    let mut out = patch.clone();
    for i in 0..patch.n_s {
        for j in 0..patch.n_t {
            let k = patch.index(i, j);
            let fd = fundamental(&jets[k])?;
            if fd.H.abs() < cfg.h_floor {
                return Err(Error::MeanCurvatureZero(format!(
                    "|H| = {:.3e} < floor {:.3e} at vertex (i_s,i_t)=({i},{j}), (s,t)=({},{})",
                    fd.H.abs(),
                    cfg.h_floor,
                    patch.s_vals[i],
                    patch.t_vals[j]
                )));
            }
            let n = unit_normal(&jets[k], 1)?;
            out.vertices[k] = patch.vertices[k] - (cfg.dt / fd.H) * n;
        }
    }
    Ok(out)
}

fn uniform_spacing(name: &str, vals: &[f64]) -> Result<f64> {
    let h = vals[1] - vals[0];
    let span = (vals[vals.len() - 1] - vals[0]).abs();
    for w in vals.windows(2) {
        if ((w[1] - w[0]) - h).abs() > 1e-9 * span.max(1.0) {
            return Err(Error::InvalidParameter(format!(
                "{name}-axis must be uniformly spaced for finite-difference jets"
            )));
        }
    }
    Ok(h)
}

/// First derivative of a uniformly spaced lane: central in the interior,
/// third-order one-sided at the two ends. Needs at least 4 points.
fn d1_lane(f: &[LVec3], h: f64) -> Vec<LVec3> {
    let n = f.len();
    let mut out = vec![LVec3::ZERO; n];
    out[0] = (f[0].scale(-11.0 / 6.0) + f[1].scale(3.0) + f[2].scale(-1.5) + f[3].scale(1.0 / 3.0))
        .scale(1.0 / h);
    out[n - 1] = (f[n - 1].scale(11.0 / 6.0)
        + f[n - 2].scale(-3.0)
        + f[n - 3].scale(1.5)
        + f[n - 4].scale(-1.0 / 3.0))
    .scale(1.0 / h);
    for i in 1..n - 1 {
        out[i] = (f[i + 1] - f[i - 1]).scale(1.0 / (2.0 * h));
    }
    out
}

/// Second derivative of a uniformly spaced lane: central in the interior,
/// third-order one-sided (5-point) at the two ends. Needs at least 5 points.
fn d2_lane(f: &[LVec3], h: f64) -> Vec<LVec3> {
    let n = f.len();
    let h2 = h * h;
    let mut out = vec![LVec3::ZERO; n];
    let edge = |a: LVec3, b: LVec3, c: LVec3, d: LVec3, e: LVec3| {
        (a.scale(35.0 / 12.0)
            + b.scale(-26.0 / 3.0)
            + c.scale(19.0 / 2.0)
            + d.scale(-14.0 / 3.0)
            + e.scale(11.0 / 12.0))
        .scale(1.0 / h2)
    };
    out[0] = edge(f[0], f[1], f[2], f[3], f[4]);
    out[n - 1] = edge(f[n - 1], f[n - 2], f[n - 3], f[n - 4], f[n - 5]);
    for i in 1..n - 1 {
        out[i] = (f[i + 1] - f[i].scale(2.0) + f[i - 1]).scale(1.0 / h2);
    }
    out
}

/// Recovers per-vertex jets of the deformed mesh by differencing vertex
/// positions along the (fixed) parameter grid; the mixed partial composes the
/// two first-derivative operators. Grids must be uniform, 5 points or more
/// per axis.
pub fn fd_grid_jets(patch: &MeshPatch) -> Result<Vec<SurfaceJet2>> {
    if patch.n_s < 5 || patch.n_t < 5 {
        return Err(Error::InvalidParameter(format!(
            "finite-difference jets need at least a 5x5 grid, got {}x{}",
            patch.n_s, patch.n_t
        )));
    }
    let hs = uniform_spacing("s", &patch.s_vals)?;
    let ht = uniform_spacing("t", &patch.t_vals)?;
    let (ns, nt) = (patch.n_s, patch.n_t);
    let get_row = |buf: &Vec<LVec3>, i: usize| -> Vec<LVec3> { buf[i * nt..(i + 1) * nt].to_vec() };
    let get_col = |buf: &Vec<LVec3>, j: usize| -> Vec<LVec3> {
        (0..ns).map(|i| buf[i * nt + j]).collect()
    };

    let mut x_s = vec![LVec3::ZERO; ns * nt];
    let mut x_ss = vec![LVec3::ZERO; ns * nt];
    for j in 0..nt {
        let col = get_col(&patch.vertices, j);
        let d1 = d1_lane(&col, hs);
        let d2 = d2_lane(&col, hs);
        for i in 0..ns {
            x_s[i * nt + j] = d1[i];
            x_ss[i * nt + j] = d2[i];
        }
    }
    let mut x_t = vec![LVec3::ZERO; ns * nt];
    let mut x_tt = vec![LVec3::ZERO; ns * nt];
    for i in 0..ns {
        let row = get_row(&patch.vertices, i);
        let d1 = d1_lane(&row, ht);
        let d2 = d2_lane(&row, ht);
        for j in 0..nt {
            x_t[i * nt + j] = d1[j];
            x_tt[i * nt + j] = d2[j];
        }
    }
    // x_st = d/ds applied to the x_t field.
    let mut x_st = vec![LVec3::ZERO; ns * nt];
    for j in 0..nt {
        let col = get_col(&x_t, j);
        let d1 = d1_lane(&col, hs);
        for i in 0..ns {
            x_st[i * nt + j] = d1[i];
        }
    }
    Ok((0..ns * nt)
        .map(|k| SurfaceJet2 {
            x: patch.vertices[k],
            x_s: x_s[k],
            x_t: x_t[k],
            x_ss: x_ss[k],
            x_st: x_st[k],
            x_tt: x_tt[k],
        })
        .collect())
}

/// Runs `cfg.steps` explicit flow steps starting from exact samples of
/// `surface`: closed-form jets on step one, finite-difference jets from the
/// deformed mesh afterwards.
pub fn flow_to_time(
    surface: &dyn ParamSurface,
    s_vals: &[f64],
    t_vals: &[f64],
    cfg: &FlowConfig,
) -> Result<MeshPatch> {
    let mut patch = sample_patch(surface, s_vals, t_vals)?;
    for step in 0..cfg.steps {
        let jets = if step == 0 {
            let mut jets = Vec::with_capacity(patch.vertices.len());
            for &s in s_vals {
                for &t in t_vals {
                    jets.push(surface.jet(s, t)?);
                }
            }
            jets
        } else {
            fd_grid_jets(&patch)?
        };
        patch = imcf_step(&patch, &jets, cfg)?;
    }
    Ok(patch)
}

/// Sign `sigma` such that a translator flows along `sigma * V`:
/// `sign(-eps * <N,V> H)`, evaluated from one jet (callers use the patch
/// midpoint). On an exact translator `<N,V>H = -1`, so `sigma = eps`.
pub fn flow_direction_sign(j: &SurfaceJet2, v: LVec3) -> Result<f64> {
    let fd = fundamental(j)?;
    let q = lorentz_inner(unit_normal(j, 1)?, v);
    Ok((-(fd.eps as f64) * q * fd.H).signum())
}

fn eucl_dot(a: LVec3, b: LVec3) -> f64 {
    a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3
}

/// Euclidean distance from point `p` to the translated surface
/// `{X0(s,t) + offset}`, by Gauss-Newton descent in `(s,t)` from `(s0,t0)`
/// with step halving; returns the best distance reached.
fn point_to_surface_distance(
    surface: &dyn ParamSurface,
    offset: LVec3,
    p: LVec3,
    s0: f64,
    t0: f64,
) -> f64 {
    let objective = |s: f64, t: f64| -> Option<f64> {
        if !surface.in_domain(s, t) {
            return None;
        }
        surface.position(s, t).ok().map(|x| (x + offset - p).eucl_norm_sq())
    };
    let (mut s, mut t) = (s0, t0);
    let Some(mut best) = objective(s, t) else { return f64::INFINITY };
    for _ in 0..40 {
        let Ok(j) = surface.jet(s, t) else { break };
        let r = j.x + offset - p;
        let (js, jt) = (j.x_s, j.x_t);
        let a = eucl_dot(js, js);
        let b = eucl_dot(js, jt);
        let c = eucl_dot(jt, jt);
        let g1 = eucl_dot(js, r);
        let g2 = eucl_dot(jt, r);
        let det = a * c - b * b;
        if det.abs() <= 1e-14 * (a * c).abs().max(1.0) {
            break;
        }
        let mut ds = -(c * g1 - b * g2) / det;
        let mut dtp = -(a * g2 - b * g1) / det;
        // Backtrack until the objective decreases (or the step dies out).
        let mut improved = false;
        for _ in 0..25 {
            if let Some(val) = objective(s + ds, t + dtp) {
                if val < best {
                    best = val;
                    s += ds;
                    t += dtp;
                    improved = true;
                    break;
                }
            }
            ds *= 0.5;
            dtp *= 0.5;
        }
        if !improved || (ds.abs() + dtp.abs()) < 1e-14 * (1.0 + s.abs() + t.abs()) {
            break;
        }
    }
    best.sqrt()
}

/// Max over interior vertices (a `margin`-cell band is excluded: boundary
/// lanes carry one-sided-stencil error) of the Euclidean distance from the
/// flowed vertex to the translated initial surface `{X0(s,t) + T*V}`.
/// Nearest points are found per vertex by local minimization seeded at the
/// vertex's own parameters.
pub fn translation_deviation(
    flowed: &MeshPatch,
    original: &dyn ParamSurface,
    v: LVec3,
    t_total: f64,
    margin: usize,
) -> Result<f64> {
    if flowed.n_s <= 2 * margin || flowed.n_t <= 2 * margin {
        return Err(Error::InvalidParameter(format!(
            "no interior vertices left after excluding a {margin}-cell margin on a {}x{} grid",
            flowed.n_s, flowed.n_t
        )));
    }
    let offset = t_total * v;
    let mut worst = 0.0f64;
    for i in margin..flowed.n_s - margin {
        for j in margin..flowed.n_t - margin {
            let d = point_to_surface_distance(
                original,
                offset,
                flowed.vertex(i, j),
                flowed.s_vals[i],
                flowed.t_vals[j],
            );
            worst = worst.max(d);
        }
    }
    Ok(worst)
}

/// Uniform closed grid `lo..=hi` with `n` points, for sampling patches.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// The flat control surface `X = (s, t, 0)`; `H = 0` everywhere, so the flow
/// must refuse to move it.
pub struct PlaneSurface;

impl ParamSurface for PlaneSurface {
    fn position(&self, s: f64, t: f64) -> Result<LVec3> {
        Ok(LVec3::new(s, t, 0.0))
    }
    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet2> {
        Ok(SurfaceJet2 {
            x: LVec3::new(s, t, 0.0),
            x_s: LVec3::new(1.0, 0.0, 0.0),
            x_t: LVec3::new(0.0, 1.0, 0.0),
            x_ss: LVec3::ZERO,
            x_st: LVec3::ZERO,
            x_tt: LVec3::ZERO,
        })
    }
    fn in_domain(&self, _s: f64, _t: f64) -> bool {
        true
    }
}

/// Timelike circular cylinder `X = (cos s, sin s, t)`: constant `H = -1/2`,
/// *not* a translator for any `V` — the control case for the flow tests.
pub struct CylinderSurface;

impl ParamSurface for CylinderSurface {
    fn position(&self, s: f64, t: f64) -> Result<LVec3> {
        Ok(LVec3::new(s.cos(), s.sin(), t))
    }
    fn jet(&self, s: f64, t: f64) -> Result<SurfaceJet2> {
        Ok(SurfaceJet2 {
            x: LVec3::new(s.cos(), s.sin(), t),
            x_s: LVec3::new(-s.sin(), s.cos(), 0.0),
            x_t: LVec3::new(0.0, 0.0, 1.0),
            x_ss: LVec3::new(-s.cos(), -s.sin(), 0.0),
            x_st: LVec3::ZERO,
            x_tt: LVec3::ZERO,
        })
    }
    fn in_domain(&self, _s: f64, _t: f64) -> bool {
        true
    }
}
