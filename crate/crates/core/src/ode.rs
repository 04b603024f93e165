//! Fixed-step RK4 integration of the reduced ODE systems behind the soliton
//! families, used as an oracle independent of the closed forms: the oracles
//! start from the closed-form state at `s0` and integrate the *system*, so
//! agreement at `s1` checks the closed forms against the equations they are
//! supposed to solve rather than against themselves.

use crate::error::{Error, Result};
use crate::families::{CylTimelikeFamily, FamilySpec};
use crate::mink::LVec3;

type Rhs<'a> = dyn Fn(f64, &[f64], &mut [f64]) -> Result<()> + 'a;

/// A first-order initial value problem `y' = f(s, y)`, `y(s0) = y0`,
/// integrated to `s1` with uniform steps of nominal size `h`.
pub struct OdeProblem<'a> {
    pub rhs: &'a Rhs<'a>,
    pub s0: f64,
    pub y0: Vec<f64>,
    pub s1: f64,
    pub h: f64,
}

/// Classical fixed-step RK4. The step count is `round(|s1-s0|/h)` (at least
/// one), so the final step lands exactly on `s1`; `s1 = s0` returns the
/// initial state unchanged. Non-finite stage values abort with `SingularRhs`.
pub fn rk4_integrate(p: &OdeProblem) -> Result<Vec<f64>> {
    if p.h <= 0.0 || !p.h.is_finite() {
        return Err(Error::InvalidParameter(format!("step size must be positive, got {}", p.h)));
    }
    if !p.s0.is_finite() || !p.s1.is_finite() {
        return Err(Error::InvalidParameter("integration endpoints must be finite".into()));
    }
    let span = p.s1 - p.s0;
    if span == 0.0 {
        return Ok(p.y0.clone());
    }
    let n = ((span.abs() / p.h).round() as usize).max(1);
    let h = span / n as f64;
    let dim = p.y0.len();
    let mut y = p.y0.clone();
    let mut k1 = vec![0.0; dim];
    let mut k2 = vec![0.0; dim];
    let mut k3 = vec![0.0; dim];
    let mut k4 = vec![0.0; dim];
    let mut tmp = vec![0.0; dim];
    for i in 0..n {
        let s = p.s0 + i as f64 * h;
        (p.rhs)(s, &y, &mut k1)?;
        for j in 0..dim {
            tmp[j] = y[j] + 0.5 * h * k1[j];
        }
        (p.rhs)(s + 0.5 * h, &tmp, &mut k2)?;
        for j in 0..dim {
            tmp[j] = y[j] + 0.5 * h * k2[j];
        }
        (p.rhs)(s + 0.5 * h, &tmp, &mut k3)?;
        for j in 0..dim {
            tmp[j] = y[j] + h * k3[j];
        }
        (p.rhs)(s + h, &tmp, &mut k4)?;
        for j in 0..dim {
            y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
            if !y[j].is_finite() {
                return Err(Error::SingularRhs(format!(
                    "state became non-finite near s = {}",
                    s + h
                )));
            }
        }
    }
    Ok(y)
}

/// Integrates the separable reduction `u' = 8u^2/(v2-v3)` of the
/// non-cylindrical family from `u(s0) = (v3-v2)/(8 s0)`; the exact solution
/// is `u(s) = (v3-v2)/(8s)`, so the result should match that at `s1`.
/// The solution has a pole at `s = 0`, so intervals touching 0 are refused.
pub fn noncyl_u_oracle(v: LVec3, s0: f64, s1: f64, h: f64) -> Result<f64> {
    if v.x2 == v.x3 {
        return Err(Error::InvalidParameter("u-equation requires v2 != v3".into()));
    }
    if s0 == 0.0 || s1 == 0.0 || (s0 < 0.0) != (s1 < 0.0) {
        return Err(Error::SingularRhs(format!(
            "the solution u = (v3-v2)/(8s) has a pole at s = 0 inside [{s0},{s1}]"
        )));
    }
    let d = v.x2 - v.x3;
    let rhs = move |_s: f64, y: &[f64], dy: &mut [f64]| -> Result<()> {
        dy[0] = 8.0 * y[0] * y[0] / d;
        Ok(())
    };
    let y = rk4_integrate(&OdeProblem { rhs: &rhs, s0, y0: vec![-d / (8.0 * s0)], s1, h })?;
    Ok(y[0])
}

fn guard(den: f64, scale: f64, what: &str) -> Result<f64> {
    if den.abs() < 1e-8 * scale {
        Err(Error::SingularRhs(format!("{what} vanished: |{den:.3e}| below guard")))
    } else {
        Ok(den)
    }
}

/// Integrates the second-order reduction of the spacelike-ruling cylindrical
/// profiles, `x'' = -2 delta y'/(v2 y' - v3 x')`, `y'' = -2 delta x'/(v2 y' - v3 x')`,
/// as a first-order system in the state `(x', y')`, starting from the closed
/// form at `s0`. Returns `(x', y')` at `s1`.
pub fn cyl_spacelike_oracle(fam: &FamilySpec, s0: f64, s1: f64, h: f64) -> Result<(f64, f64)> {
    let (v2, v3, delta) = match fam {
        FamilySpec::CylEqual(f) => (f.v2, f.sigma as f64 * f.v2, f.delta as f64),
        FamilySpec::CylGeneral(f) => (f.v2, f.v3, f.delta as f64),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "the spacelike-ruling oracle applies to cyl-eq/cyl-gen, not {}",
                fam.name()
            )))
        }
    };
    for s in [s0, s1] {
        if !fam.in_domain(s) {
            return Err(Error::DomainError(format!(
                "s = {s} is outside the domain of the {} family",
                fam.name()
            )));
        }
    }
    let g0 = fam.gamma_jet(s0);
    let vscale = 1.0 + v2.abs().max(v3.abs());
    let rhs = move |_s: f64, y: &[f64], dy: &mut [f64]| -> Result<()> {
        let den = guard(v2 * y[1] - v3 * y[0], vscale * (1.0 + y[0].abs() + y[1].abs()),
            "v2 y' - v3 x'")?;
        dy[0] = -2.0 * delta * y[1] / den;
        dy[1] = -2.0 * delta * y[0] / den;
        Ok(())
    };
    let y = rk4_integrate(&OdeProblem { rhs: &rhs, s0, y0: vec![g0.d1.x2, g0.d1.x3], s1, h })?;
    Ok((y[0], y[1]))
}

/// Same for the timelike-ruling profiles: `x'' = -2 y'/(v1 y' - v2 x')`,
/// `y'' = 2 x'/(v1 y' - v2 x')`, state `(x', y')` seeded from the closed form
/// at `s0`.
pub fn cyl_timelike_oracle(fam: &CylTimelikeFamily, s0: f64, s1: f64, h: f64) -> Result<(f64, f64)> {
    for s in [s0, s1] {
        if !fam.in_domain(s) {
            return Err(Error::DomainError(format!(
                "|s| = {} is not below {}",
                s.abs(),
                fam.s_max()
            )));
        }
    }
    let (v1, v2) = (fam.v1, fam.v2);
    let (_, d1, _) = fam.profile(s0);
    let vscale = 1.0 + v1.abs().max(v2.abs());
    let rhs = move |_s: f64, y: &[f64], dy: &mut [f64]| -> Result<()> {
        let den = guard(v1 * y[1] - v2 * y[0], vscale * (1.0 + y[0].abs() + y[1].abs()),
            "v1 y' - v2 x'")?;
        dy[0] = -2.0 * y[1] / den;
        dy[1] = 2.0 * y[0] / den;
        Ok(())
    };
    let y = rk4_integrate(&OdeProblem { rhs: &rhs, s0, y0: vec![d1[0], d1[1]], s1, h })?;
    Ok((y[0], y[1]))
}

/// Composite trapezoid rule with a uniform step of at most `step`, used to
/// check printed antiderivatives against their integrands.
pub fn trapezoid(f: impl Fn(f64) -> f64, a: f64, b: f64, step: f64) -> f64 {
    assert!(step > 0.0);
    let n = ((b - a).abs() / step).ceil().max(1.0) as usize;
    let h = (b - a) / n as f64;
    let mut acc = 0.5 * (f(a) + f(b));
    for i in 1..n {
        acc += f(a + i as f64 * h);
    }
    acc * h
}
