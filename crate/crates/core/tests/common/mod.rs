//! Shared deterministic generators for the integration suites: random causal
//! vectors, random family instances, and random ruled specs with lightlike
//! rulings. Everything is seeded so failures reproduce exactly.
#![allow(dead_code)]

use imcf_ruled::families::{
    CylEqualFamily, CylGeneralFamily, CylTimelikeFamily, FamilySpec, NonCylFamily,
};
use imcf_ruled::mink::{lorentz_cross, lorentz_inner, lorentz_norm, LVec3};
use imcf_ruled::ruled::{CurveJet, RuledSpec};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Log-uniform magnitude in `[lo, hi]`, `0 < lo < hi`.
pub fn log_uniform(r: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    (r.gen_range(lo.ln()..hi.ln())).exp()
}

fn sign(r: &mut impl Rng) -> f64 {
    if r.gen_bool(0.5) {
        1.0
    } else {
        -1.0
    }
}

/// Random vector on the light cone: `r * (cos a, sin a, +-1)`.
pub fn random_lightlike(r: &mut impl Rng) -> LVec3 {
    let a = r.gen_range(0.0..std::f64::consts::TAU);
    let m = log_uniform(r, 0.2, 5.0);
    let sheet = sign(r);
    LVec3::new(m * a.cos(), m * a.sin(), m * sheet)
}

/// Random timelike vector: `m * (sinh u cos a, sinh u sin a, +-cosh u)`.
pub fn random_timelike(r: &mut impl Rng) -> LVec3 {
    let a = r.gen_range(0.0..std::f64::consts::TAU);
    let u: f64 = r.gen_range(0.0..2.0);
    let m = log_uniform(r, 0.3, 3.0);
    LVec3::new(m * u.sinh() * a.cos(), m * u.sinh() * a.sin(), m * u.cosh() * sign(r))
}

/// Magnitude scale for inner products of `u` and `v`.
pub fn pair_scale(u: LVec3, v: LVec3) -> f64 {
    1.0 + u.max_abs() * v.max_abs()
}

/// Worst-case margins over the four causal-orthogonality clauses:
/// `dep_max` is the largest normalized `|u x v|` over orthogonal
/// (= parallel) lightlike pairs, and the three `*_min` values are the
/// smallest normalized `|<u,v>|` over pairs that must NOT be orthogonal.
pub struct OrthogonalityMargins {
    pub dep_max: f64,
    pub indep_lightlike_min: f64,
    pub timelike_timelike_min: f64,
    pub timelike_lightlike_min: f64,
}

pub fn orthogonality_margins(samples: usize, seed: u64) -> OrthogonalityMargins {
    let mut r = rng(seed);
    let mut dep_max = 0.0f64;
    for _ in 0..samples {
        let u = random_lightlike(&mut r);
        // Parallel lightlike partner: the only way two lightlike vectors
        // can be orthogonal.
        let v = sign(&mut r) * r.gen_range(0.2..3.0) * u;
        assert!(
            lorentz_inner(u, v).abs() <= 1e-12 * pair_scale(u, v),
            "generator bug: parallel lightlike pair not orthogonal"
        );
        let cross_scale = 1.0 + u.max_abs() * v.max_abs();
        dep_max = dep_max.max(lorentz_norm(lorentz_cross(u, v)) / cross_scale);
    }

    let mut indep_min = f64::INFINITY;
    let mut r = rng(seed ^ 0x9e3779b97f4a7c15);
    for _ in 0..samples {
        let u = random_lightlike(&mut r);
        let mut v = random_lightlike(&mut r);
        // Reject directions within 0.01 rad of the parallel configuration
        // (same cone angle on the same sheet, opposite angle across sheets).
        loop {
            let au = u.x2.atan2(u.x1);
            let av = v.x2.atan2(v.x1);
            let target = if u.x3.signum() == v.x3.signum() { 0.0 } else { std::f64::consts::PI };
            let diff = (av - au - target).rem_euclid(std::f64::consts::TAU);
            if diff.min(std::f64::consts::TAU - diff) >= 0.01 {
                break;
            }
            v = random_lightlike(&mut r);
        }
        indep_min = indep_min.min(lorentz_inner(u, v).abs() / pair_scale(u, v));
    }

    let mut tt_min = f64::INFINITY;
    let mut r = rng(seed ^ 0xc2b2ae3d27d4eb4f);
    for _ in 0..samples {
        let u = random_timelike(&mut r);
        let v = random_timelike(&mut r);
        tt_min = tt_min.min(lorentz_inner(u, v).abs() / pair_scale(u, v));
    }

    let mut tl_min = f64::INFINITY;
    let mut r = rng(seed ^ 0x165667b19e3779f9);
    for _ in 0..samples {
        let u = random_timelike(&mut r);
        let v = random_lightlike(&mut r);
        tl_min = tl_min.min(lorentz_inner(u, v).abs() / pair_scale(u, v));
    }

    OrthogonalityMargins {
        dep_max,
        indep_lightlike_min: indep_min,
        timelike_timelike_min: tt_min,
        timelike_lightlike_min: tl_min,
    }
}

pub fn random_noncyl(r: &mut impl Rng) -> NonCylFamily {
    let v1: f64 = r.gen_range(-3.0..3.0);
    let v2: f64 = r.gen_range(-5.0..5.0);
    let mut v3: f64 = r.gen_range(-5.0..5.0);
    while (v2 - v3).abs() < 0.1 {
        v3 = r.gen_range(-5.0..5.0);
    }
    NonCylFamily::new(
        LVec3::new(v1, v2, v3),
        r.gen_range(-1.0..1.0),
        r.gen_range(-1.0..1.0),
        r.gen_range(-1.0..1.0),
    )
    .unwrap()
}

pub fn random_cyl_equal(r: &mut impl Rng) -> CylEqualFamily {
    let v2 = sign(r) * log_uniform(r, 0.3, 3.0);
    CylEqualFamily::new(
        v2,
        sign(r) as i32,
        sign(r) as i32,
        r.gen_range(-1.0..1.0),
        r.gen_range(-1.0..1.0),
    )
    .unwrap()
}

pub fn random_cyl_general(r: &mut impl Rng) -> CylGeneralFamily {
    let v2 = sign(r) * log_uniform(r, 0.3, 3.0);
    let mut v3 = sign(r) * log_uniform(r, 0.3, 3.0);
    while (v2.abs() - v3.abs()).abs() < 0.1 {
        v3 = sign(r) * log_uniform(r, 0.3, 3.0);
    }
    CylGeneralFamily::new(
        v2,
        v3,
        sign(r) as i32,
        sign(r) as i32,
        r.gen_range(-1.0..1.0),
        r.gen_range(-1.0..1.0),
    )
    .unwrap()
}

pub fn random_cyl_timelike(r: &mut impl Rng) -> CylTimelikeFamily {
    // keep v1^2 + v2^2 >= 4 so the domain |s| < sqrt(v1^2+v2^2)/2 has room
    let a = r.gen_range(0.0..std::f64::consts::TAU);
    let m = r.gen_range(2.0..5.0);
    CylTimelikeFamily::new(
        m * a.cos(),
        m * a.sin(),
        sign(r) as i32,
        r.gen_range(-1.0..1.0),
        r.gen_range(-1.0..1.0),
    )
    .unwrap()
}

/// One random member of each classified family, cycling by `k`.
pub fn random_family(r: &mut impl Rng, k: usize) -> FamilySpec {
    match k % 4 {
        0 => FamilySpec::NonCyl(random_noncyl(r)),
        1 => FamilySpec::CylEqual(random_cyl_equal(r)),
        2 => FamilySpec::CylGeneral(random_cyl_general(r)),
        _ => FamilySpec::CylTimelike(random_cyl_timelike(r)),
    }
}

/// Uniform sample from the family's safe parameter window.
pub fn random_s(r: &mut impl Rng, fam: &FamilySpec) -> f64 {
    let (lo, hi) = fam.sample_interval();
    r.gen_range(lo..hi)
}

/// Random ruled spec whose ruling is lightlike everywhere:
/// `beta(s) = rho(s) * (cos th(s), sin th(s), 1)` with affine `th` and a
/// bounded oscillating `rho`, over a cubic base curve. Returns the spec and
/// the fixed test velocity.
pub fn random_lightlike_ruling_spec(r: &mut impl Rng) -> (RuledSpec, LVec3) {
    let g: Vec<LVec3> = (0..4)
        .map(|_| LVec3::new(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0)))
        .collect();
    let (g0, g1, g2, g3) = (g[0], g[1], g[2], g[3]);
    let th0 = r.gen_range(0.0..std::f64::consts::TAU);
    let th1 = r.gen_range(-1.0..1.0);
    let ph = r.gen_range(0.0..std::f64::consts::TAU);
    let gamma = move |s: f64| CurveJet {
        p: g0 + s * g1 + (s * s) * g2 + (s * s * s) * g3,
        d1: g1 + (2.0 * s) * g2 + (3.0 * s * s) * g3,
        d2: 2.0 * g2 + (6.0 * s) * g3,
    };
    let beta = move |s: f64| {
        let th = th0 + th1 * s;
        let rho = 1.0 + 0.25 * (ph + s).sin();
        let rho1 = 0.25 * (ph + s).cos();
        let rho2 = -0.25 * (ph + s).sin();
        let w = LVec3::new(th.cos(), th.sin(), 1.0);
        let wt = LVec3::new(-th.sin(), th.cos(), 0.0); // dw/d(th)
        let wtt = LVec3::new(-th.cos(), -th.sin(), 0.0);
        CurveJet {
            p: rho * w,
            d1: rho1 * w + (rho * th1) * wt,
            d2: rho2 * w + (2.0 * rho1 * th1) * wt + (rho * th1 * th1) * wtt,
        }
    };
    (RuledSpec::new(Box::new(gamma), Box::new(beta)), LVec3::new(1.0, 2.0, 3.0))
}

/// The concrete family members whose meshes the figures show, with the
/// labels the suites print.
pub fn figure_families() -> Vec<(FamilySpec, &'static str)> {
    vec![
        (
            FamilySpec::NonCyl(NonCylFamily::new(LVec3::new(2.0, 9.0, 1.0), 0.0, 0.0, 0.0).unwrap()),
            "noncyl V=(2,9,1)",
        ),
        (
            FamilySpec::CylEqual(CylEqualFamily::new(1.0, 1, 1, 0.0, 0.0).unwrap()),
            "cyl-eq v2=v3=1",
        ),
        (
            FamilySpec::CylGeneral(CylGeneralFamily::new(1.0, 2.0, 1, 1, 0.0, 0.0).unwrap()),
            "cyl-gen v2=1 v3=2",
        ),
        (
            FamilySpec::CylTimelike(CylTimelikeFamily::new(8.0, 6.0, 1, 0.0, 0.0).unwrap()),
            "cyl-time v=(8,6)",
        ),
        (
            FamilySpec::CylTimelike(CylTimelikeFamily::new(8.0, -3.0, 1, 0.0, 0.0).unwrap()),
            "cyl-time v=(8,-3)",
        ),
        (
            FamilySpec::CylTimelike(CylTimelikeFamily::new(8.0, -7.0, 1, 0.0, 0.0).unwrap()),
            "cyl-time v=(8,-7)",
        ),
    ]
}
