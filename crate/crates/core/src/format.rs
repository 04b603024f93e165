//! Deterministic text output: number formatting plus CSV and OBJ writers.
//! All writers emit `\n` line endings and format numbers identically across
//! runs, so identical configs produce byte-identical files.

use crate::flow::MeshPatch;
use crate::report::ResidualReport;
use std::io::{Result as IoResult, Write};

/// Shortest round-trip decimal; scientific notation once `|x| >= 1e6` or
/// `0 < |x| < 1e-4`; all zeros (including `-0.0`) print as `0`.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let a = x.abs();
    if !(1e-4..1e6).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Header `s,t,x,y,z,E,F,G,H,residual_raw,residual_norm`, one row per grid
/// point in row-major order.
pub fn write_residual_csv(w: &mut dyn Write, report: &ResidualReport) -> IoResult<()> {
    writeln!(w, "s,t,x,y,z,E,F,G,H,residual_raw,residual_norm")?;
    for r in &report.rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            fmt_f64(r.s),
            fmt_f64(r.t),
            fmt_f64(r.x.x1),
            fmt_f64(r.x.x2),
            fmt_f64(r.x.x3),
            fmt_f64(r.e_coef),
            fmt_f64(r.f_coef),
            fmt_f64(r.g_coef),
            fmt_f64(r.h),
            fmt_f64(r.raw),
            fmt_f64(r.norm),
        )?;
    }
    Ok(())
}

/// Header `s,x,y,z`: the base curve of a family.
pub fn write_curve_csv(w: &mut dyn Write, rows: &[(f64, crate::mink::LVec3)]) -> IoResult<()> {
    writeln!(w, "s,x,y,z")?;
    for (s, p) in rows {
        writeln!(w, "{},{},{},{}", fmt_f64(*s), fmt_f64(p.x1), fmt_f64(p.x2), fmt_f64(p.x3))?;
    }
    Ok(())
}

/// ASCII OBJ: `v x y z` per vertex (row-major), then 1-based quad faces
/// `f a b c d` per grid cell. No normals: the surface normals live in the
/// indefinite metric and would only mislead Euclidean viewers.
pub fn write_obj(w: &mut dyn Write, patch: &MeshPatch) -> IoResult<()> {
    for v in &patch.vertices {
        writeln!(w, "v {} {} {}", fmt_f64(v.x1), fmt_f64(v.x2), fmt_f64(v.x3))?;
    }
    let idx = |i: usize, j: usize| i * patch.n_t + j + 1;
    for i in 0..patch.n_s - 1 {
        for j in 0..patch.n_t - 1 {
            writeln!(w, "f {} {} {} {}", idx(i, j), idx(i, j + 1), idx(i + 1, j + 1), idx(i + 1, j))?;
        }
    }
    Ok(())
}
