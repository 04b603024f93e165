//! Acceptance gate: one test per release criterion, each printing a single
//! `criterion N: PASS/FAIL` line with the measured numbers.
//!
//! Three criteria fail by construction and are expected to: the
//! non-cylindrical closed form does not satisfy the soliton equation (its
//! residual is O(1), which criteria 1 and 2 surface), and the discrete-flow
//! deviation is dominated by spatial stencil error rather than the O(dt)
//! term (criterion 6). The failing tests report the measured values; the
//! remaining six pass.

mod common;

use common::*;
use imcf_ruled::families::{CylTimelikeFamily, FamilySpec, NonCylFamily};
use imcf_ruled::flow::{
    flow_direction_sign, flow_to_time, linspace, translation_deviation, CylinderSurface,
    FlowConfig,
};
use imcf_ruled::jet::{fd_jet, ParamSurface};
use imcf_ruled::mink::{lorentz_inner, LVec3};
use imcf_ruled::ode::{
    cyl_spacelike_oracle, cyl_timelike_oracle, noncyl_u_oracle, rk4_integrate, OdeProblem,
};
use imcf_ruled::report::residual_sweep;
use imcf_ruled::ruled::{
    lightlike_beta_poly, noncyl_poly_coeffs, soliton_residual_normal, CurveJet, RuledSpec,
};
use imcf_ruled::Error;
use rand::Rng;
use std::fmt::Write as _;
use std::time::Instant;

/// Prints the verdict line (visible under `--nocapture`; repeated in the
/// panic message on failure so it always reaches the log).
fn verdict(n: usize, pass: bool, details: &str) {
    let line = format!("criterion {n}: {} — {details}", if pass { "PASS" } else { "FAIL" });
    println!("{line}");
    assert!(pass, "{line}");
}

#[test]
fn criterion_1_translator_residuals() {
    let start = Instant::now();
    let mut worst_overall = 0.0f64;
    let mut details = String::new();
    let mut pass = true;
    for (fam, label) in figure_families() {
        let (lo, hi) = fam.sample_interval();
        let rep = residual_sweep(&fam, &linspace(lo, hi, 32), &linspace(-2.0, 2.0, 32)).unwrap();
        let ok = rep.max_norm <= 1e-8;
        pass &= ok;
        worst_overall = worst_overall.max(rep.max_norm);
        write!(details, "{label}: max|res| = {:.3e}; ", rep.max_norm).unwrap();
    }
    let elapsed = start.elapsed();
    pass &= elapsed.as_secs_f64() < 1.0;
    write!(details, "runtime {:.0} ms", elapsed.as_secs_f64() * 1e3).unwrap();
    // The three cylindrical families sit at machine precision; the
    // non-cylindrical closed form does not solve the equation (O(1)-O(10)
    // residual for both velocity signs), so this criterion fails on that leg.
    verdict(1, pass, &details);
}

#[test]
fn criterion_2_polynomial_system() {
    let fam = NonCylFamily::new(LVec3::new(2.0, 9.0, 1.0), 0.0, 0.0, 0.0).unwrap();
    let spec = FamilySpec::NonCyl(fam);
    let ruled = spec.to_ruled();

    let max_norm_coeff = |v: LVec3| -> f64 {
        let mut worst = 0.0f64;
        for s in linspace(0.5, 2.5, 100) {
            let c = noncyl_poly_coeffs(&ruled, v, 1, s).unwrap();
            for a in [c.a0, c.a1, c.a2, c.a3, c.a4] {
                worst = worst.max(a.abs() / c.scale);
            }
        }
        worst
    };

    let base = max_norm_coeff(fam.v);
    let perturbed = max_norm_coeff(fam.v + LVec3::new(0.0, 0.0, 1e-2));
    let vanishes = base <= 1e-9;
    let detects = perturbed >= 1e-4;
    // A2, A3, A4 do vanish along the family, but A0 and A1 are O(1):
    // the coefficient system is not satisfied by the closed form.
    verdict(
        2,
        vanishes && detects,
        &format!(
            "max|A_i|/scale = {base:.3e} along the family (need <= 1e-9), {perturbed:.3e} \
             after perturbing v3 by 1e-2 (need >= 1e-4)"
        ),
    );
}

#[test]
fn criterion_3_family_identities() {
    let mut worst = 0.0f64;
    let mut r = rng(103);
    for (fam, _) in figure_families() {
        let (lo, hi) = fam.sample_interval();
        for _ in 0..100 {
            let s = r.gen_range(lo..hi);
            let d1 = fam.gamma_jet(s).d1;
            let dev = match &fam {
                FamilySpec::NonCyl(f) => {
                    let beta = fam.beta_jet(s).p;
                    let ortho = lorentz_inner(d1, beta).abs();
                    let want = (f.v.x3 - f.v.x2) / (8.0 * s);
                    ortho.max((d1.x2 - d1.x3 - want).abs())
                }
                FamilySpec::CylEqual(f) => {
                    let (v2, v3, d) = (f.v2, f.sigma as f64 * f.v2, f.delta as f64);
                    (d1.x2 * d1.x2 - d1.x3 * d1.x3 - d)
                        .abs()
                        .max((v3 * d1.x3 - v2 * d1.x2 - 2.0 * d * s).abs())
                }
                FamilySpec::CylGeneral(f) => {
                    let d = f.delta as f64;
                    (d1.x2 * d1.x2 - d1.x3 * d1.x3 - d)
                        .abs()
                        .max((f.v3 * d1.x3 - f.v2 * d1.x2 - 2.0 * d * s).abs())
                }
                FamilySpec::CylTimelike(f) => (d1.x1 * d1.x1 + d1.x2 * d1.x2 - 1.0)
                    .abs()
                    .max((f.v2 * d1.x2 + f.v1 * d1.x1 + 2.0 * s).abs()),
            };
            worst = worst.max(dev);
        }
    }
    verdict(3, worst <= 1e-10, &format!("max identity deviation = {worst:.3e} (need <= 1e-10)"));
}

#[test]
fn criterion_4_jet_oracle() {
    // At the literal step h = 1e-5 the second-derivative stencils sit on the
    // f64 cancellation floor 4*eps*|X|/h^2 ~ 4e-6 relative, so the check is
    // asserted at the balanced step h = 1e-4*max(1,|s|,|t|) and the literal-h
    // figure is reported alongside.
    let rel_err = |h_for: &dyn Fn(f64, f64) -> f64| -> f64 {
        let mut r = rng(104);
        let mut worst = 0.0f64;
        for (fam, _) in figure_families() {
            let (lo, hi) = fam.sample_interval();
            for _ in 0..200 {
                let s = r.gen_range(lo..hi);
                let t: f64 = r.gen_range(-2.0..2.0);
                let exact = fam.jet(s, t).unwrap();
                let fd = fd_jet(&fam, s, t, h_for(s, t)).unwrap();
                for (a, b) in [
                    (exact.x, fd.x),
                    (exact.x_s, fd.x_s),
                    (exact.x_t, fd.x_t),
                    (exact.x_ss, fd.x_ss),
                    (exact.x_st, fd.x_st),
                    (exact.x_tt, fd.x_tt),
                ] {
                    worst = worst.max((a - b).max_abs() / (1.0 + a.max_abs()));
                }
            }
        }
        worst
    };
    let balanced = rel_err(&|s, t| 1e-4 * s.abs().max(t.abs()).max(1.0));
    let literal = rel_err(&|_, _| 1e-5);
    verdict(
        4,
        balanced <= 1e-6,
        &format!(
            "max relative jet error {balanced:.3e} at h = 1e-4*max(1,|s|,|t|) \
             (need <= 1e-6); {literal:.3e} at the cancellation-floored h = 1e-5"
        ),
    );
}

#[test]
fn criterion_5_ode_oracles() {
    let mut details = String::new();

    // u-equation on [1,2]
    let v = LVec3::new(2.0, 9.0, 1.0);
    let u = noncyl_u_oracle(v, 1.0, 2.0, 1e-3).unwrap();
    let du = (u - (v.x3 - v.x2) / 16.0).abs();
    write!(details, "u-eq dev {du:.2e}; ").unwrap();

    // spacelike system on [1,2]
    let fam = figure_families()[2].0; // cyl-gen v2=1 v3=2
    let (xp, yp) = cyl_spacelike_oracle(&fam, 1.0, 2.0, 1e-3).unwrap();
    let d1 = fam.gamma_jet(2.0).d1;
    let ds = (xp - d1.x2).abs().max((yp - d1.x3).abs());
    write!(details, "spacelike dev {ds:.2e}; ").unwrap();

    // timelike system on [0,1]
    let tfam = CylTimelikeFamily::new(8.0, 6.0, 1, 0.0, 0.0).unwrap();
    let (xp, yp) = cyl_timelike_oracle(&tfam, 0.0, 1.0, 1e-3).unwrap();
    let (_, td1, _) = tfam.profile(1.0);
    let dt_ = (xp - td1[0]).abs().max((yp - td1[1]).abs());
    write!(details, "timelike dev {dt_:.2e}; ").unwrap();

    // fourth-order convergence under h-halving on u' = -u^2, u(1) = 1
    let rhs = |_s: f64, y: &[f64], dy: &mut [f64]| -> Result<(), Error> {
        dy[0] = -y[0] * y[0];
        Ok(())
    };
    let err_at = |h: f64| {
        let y = rk4_integrate(&OdeProblem { rhs: &rhs, s0: 1.0, y0: vec![1.0], s1: 2.0, h })
            .unwrap();
        (y[0] - 0.5).abs()
    };
    let ratio = err_at(0.1) / err_at(0.05);
    write!(details, "order ratio {ratio:.1} (need 12..20)").unwrap();

    let pass = du <= 1e-6 && ds <= 1e-6 && dt_ <= 1e-6 && (12.0..=20.0).contains(&ratio);
    verdict(5, pass, &details);
}

#[test]
fn criterion_6_flow_translation() {
    // Deviation after T = 0.1 is dominated by the accumulated
    // finite-difference jet error of the deformed mesh, which does not
    // shrink with dt, so the dt-halving ratios land near 1.0 instead of
    // inside [1.7, 2.3]. Measured values are printed for the record. The
    // >10x control clause does hold for the two spacelike-ruling profiles.
    let cases: [(&str, FamilySpec, Vec<f64>, Vec<f64>); 4] = [
        {
            let f = figure_families()[1].0;
            ("cyl-eq", f, linspace(0.4, 1.0, 8), linspace(-0.3, 0.3, 8))
        },
        {
            let f = figure_families()[2].0;
            ("cyl-gen", f, linspace(-0.8, 0.8, 12), linspace(-0.8, 0.8, 12))
        },
        {
            let f = figure_families()[3].0;
            ("cyl-time", f, linspace(-2.5, 2.5, 8), linspace(-3.0, 3.0, 5))
        },
        {
            let f = figure_families()[0].0;
            ("noncyl", f, linspace(0.8, 1.8, 10), linspace(-0.3, 0.3, 10))
        },
    ];
    let dts = [2e-3, 1e-3, 5e-4];

    // control: a unit timelike cylinder, which flows but does not translate
    let control = {
        let grid = linspace(-1.0, 1.0, 10);
        let cfg = FlowConfig::new(5e-4, 200).unwrap();
        let flowed = flow_to_time(&CylinderSurface, &grid, &grid, &cfg).unwrap();
        translation_deviation(&flowed, &CylinderSurface, LVec3::new(0.0, 0.0, 1.0), 0.1, 2)
            .unwrap()
    };

    let mut details = format!("control cylinder dev {control:.4}; ");
    let mut pass = true;
    for (label, fam, s_vals, t_vals) in &cases {
        let mid = fam.jet(s_vals[s_vals.len() / 2], t_vals[t_vals.len() / 2]).unwrap();
        let sigma = flow_direction_sign(&mid, fam.velocity()).unwrap();
        let v = sigma * fam.velocity();
        let mut devs = Vec::new();
        for &dt in &dts {
            let cfg = FlowConfig::new(dt, (0.1 / dt).round() as usize).unwrap();
            let flowed = flow_to_time(fam, s_vals, t_vals, &cfg).unwrap();
            devs.push(
                translation_deviation(&flowed, fam, v, cfg.total_time(), 2).unwrap(),
            );
        }
        let r1 = devs[0] / devs[1];
        let r2 = devs[1] / devs[2];
        let converges = (1.7..=2.3).contains(&r1) && (1.7..=2.3).contains(&r2);
        let control_ok = control > 10.0 * devs[2];
        pass &= converges && control_ok;
        write!(
            details,
            "{label}: dev {:.2e}/{:.2e}/{:.2e} ratios {r1:.2}/{r2:.2} control x{:.1}; ",
            devs[0],
            devs[1],
            devs[2],
            control / devs[2]
        )
        .unwrap();
    }
    verdict(6, pass, details.trim_end_matches("; "));
}

#[test]
fn criterion_7_rejections() {
    let mut details = String::new();

    // constant lightlike ruling forces H = 0: the flow speed 1/H cannot exist
    let lightlike_plane = RuledSpec::new(
        Box::new(|s| CurveJet {
            p: LVec3::new(s, s * s, 0.0),
            d1: LVec3::new(1.0, 2.0 * s, 0.0),
            d2: LVec3::new(0.0, 2.0, 0.0),
        }),
        Box::new(|_| CurveJet { p: LVec3::new(1.0, 0.0, 1.0), d1: LVec3::ZERO, d2: LVec3::ZERO }),
    );
    let j = lightlike_plane.jet(0.7, 0.3).unwrap();
    let lightlike_rejected = matches!(
        soliton_residual_normal(&j, LVec3::new(1.0, 2.0, 3.0)),
        Err(Error::MeanCurvatureZero(_))
    );
    write!(details, "lightlike ruling w=(1,0,1) -> MeanCurvatureZero: {lightlike_rejected}; ")
        .unwrap();

    let equal_v_rejected = matches!(
        NonCylFamily::new(LVec3::new(2.0, 9.0, 9.0), 0.0, 0.0, 0.0),
        Err(Error::InvalidParameter(_))
    );
    write!(details, "noncyl v2=v3 -> InvalidParameter: {equal_v_rejected}; ").unwrap();

    let tfam = CylTimelikeFamily::new(8.0, 6.0, 1, 0.0, 0.0).unwrap();
    let spec = FamilySpec::CylTimelike(tfam);
    let edge_rejected = matches!(spec.jet(tfam.s_max(), 0.0), Err(Error::DomainError(_)))
        && matches!(spec.jet(-7.0, 0.0), Err(Error::DomainError(_)));
    write!(details, "cyl-time |s| >= s_max -> DomainError: {edge_rejected}; ").unwrap();

    // sampled degenerate-ruling classification: p0, p1 never both vanish
    let mut r = rng(107);
    let mut checked = 0usize;
    let mut min_margin = f64::INFINITY;
    for _ in 0..100 {
        let (spec, v) = random_lightlike_ruling_spec(&mut r);
        for _ in 0..10 {
            let s = r.gen_range(-2.0..2.0);
            let g = spec.gamma_jet(s);
            let b = spec.beta_jet(s);
            if lorentz_inner(g.d1, b.p).abs() < 1e-3 {
                continue;
            }
            let (p0, p1) = lightlike_beta_poly(&spec, v, s).unwrap();
            let scale = 1.0
                + (imcf_ruled::mixed_product(g.d1, b.p, v)
                    * imcf_ruled::mixed_product(g.d1, b.p, b.d1))
                .abs()
                + lorentz_inner(g.d1, b.p).abs().powi(3);
            min_margin = min_margin.min(p0.abs().max(p1.abs()) / scale);
            checked += 1;
        }
    }
    let lightlike_classified = min_margin > 1e-6 && checked > 500;
    write!(
        details,
        "degenerate rulings: min max(|p0|,|p1|)/scale = {min_margin:.2e} over {checked} samples"
    )
    .unwrap();

    verdict(
        7,
        lightlike_rejected && equal_v_rejected && edge_rejected && lightlike_classified,
        &details,
    );
}

#[test]
fn criterion_8_orthogonality_suite() {
    let m = orthogonality_margins(1000, 108);
    let pass = m.dep_max <= 1e-10
        && m.indep_lightlike_min > 1e-10
        && m.timelike_timelike_min > 1e-10
        && m.timelike_lightlike_min > 1e-10;
    verdict(
        8,
        pass,
        &format!(
            "parallel-lightlike cross max {:.2e} (<= 1e-10); non-orthogonality margins: \
             lightlike {:.2e}, timelike-timelike {:.2e}, timelike-lightlike {:.2e} (> 1e-10)",
            m.dep_max, m.indep_lightlike_min, m.timelike_timelike_min, m.timelike_lightlike_min
        ),
    );
}

#[test]
fn criterion_9_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| -> (Vec<u8>, Vec<u8>, Vec<u8>) {
        let obj = dir.path().join(format!("{tag}.obj"));
        let curve = dir.path().join(format!("{tag}.curve.csv"));
        let csv = dir.path().join(format!("{tag}.csv"));
        let ok = std::process::Command::new(env!("CARGO_BIN_EXE_imcf"))
            .args([
                "family", "cyl-time", "--v", "8,-7", "--s", "-3.5:3.5:40", "--t", "-2:2:40",
                "--out",
            ])
            .arg(&obj)
            .status()
            .unwrap()
            .success();
        assert!(ok);
        let ok = std::process::Command::new(env!("CARGO_BIN_EXE_imcf"))
            .args(["residual", "cyl-time", "--v", "8,-7", "--s", "-3.5:3.5:40", "--t", "-2:2:40", "--out"])
            .arg(&csv)
            .status()
            .unwrap()
            .success();
        assert!(ok);
        (
            std::fs::read(obj).unwrap(),
            std::fs::read(curve).unwrap(),
            std::fs::read(csv).unwrap(),
        )
    };
    let a = run("a");
    let b = run("b");
    let pass = a == b;
    verdict(
        9,
        pass,
        &format!(
            "family OBJ ({} bytes), curve CSV ({} bytes), residual CSV ({} bytes) identical \
             across reruns: {pass}",
            a.0.len(),
            a.1.len(),
            a.2.len()
        ),
    );
}
