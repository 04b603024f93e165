//! C ABI over the ruled-translator library: construct family members behind
//! an opaque handle, evaluate jets and fundamental data, and compute soliton
//! residuals. The companion header `include/imcf_ruled.h` is generated by the
//! build script.
//!
//! Conventions: every fallible function returns [`IrStatus`] and writes its
//! result through out-pointers, which are only written on `IR_STATUS_OK`.
//! Handles from the `ir_family_*` constructors are released with
//! [`ir_family_free`]. All functions are thread-safe; handles are immutable
//! after construction.

use imcf_ruled::families::{
    CylEqualFamily, CylGeneralFamily, CylTimelikeFamily, FamilySpec, NonCylFamily,
};
use imcf_ruled::jet::{fundamental, SurfaceJet2};
use imcf_ruled::mink::{
    causal_class, default_causal_tau, lorentz_cross, lorentz_inner, mixed_product, CausalClass,
    LVec3,
};
use imcf_ruled::ruled::soliton_residual_princ;
use imcf_ruled::Error;

/// Result code of a fallible call. Values other than `Ok` leave every
/// out-parameter untouched.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A parameter is non-finite or outside its documented range.
    InvalidParameter = 2,
    /// Evaluation outside the family's parameter domain.
    DomainError = 3,
    /// The first fundamental form is degenerate at the point.
    DegenerateSurface = 4,
    /// |H| below tolerance: the flow speed 1/H is undefined.
    MeanCurvatureZero = 5,
    /// An ODE right-hand side hit a pole or diverged.
    SingularRhs = 6,
    /// A structural precondition (normalized ruling, orthogonality) failed.
    AssumptionViolated = 7,
}

fn status_of(e: &Error) -> IrStatus {
    match e {
        Error::InvalidParameter(_) => IrStatus::InvalidParameter,
        Error::DomainError(_) => IrStatus::DomainError,
        Error::DegenerateSurface { .. } => IrStatus::DegenerateSurface,
        Error::MeanCurvatureZero(_) => IrStatus::MeanCurvatureZero,
        Error::SingularRhs(_) => IrStatus::SingularRhs,
        Error::AssumptionViolated(_) => IrStatus::AssumptionViolated,
    }
}

/// Causal character of a vector under the ambient product
/// `x1 y1 + x2 y2 - x3 y3`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrCausalClass {
    Spacelike = 0,
    Timelike = 1,
    Lightlike = 2,
}

/// A vector in Lorentz-Minkowski 3-space; `x3` is the timelike coordinate.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrVec3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl From<LVec3> for IrVec3 {
    fn from(v: LVec3) -> Self {
        IrVec3 { x1: v.x1, x2: v.x2, x3: v.x3 }
    }
}

impl From<IrVec3> for LVec3 {
    fn from(v: IrVec3) -> Self {
        LVec3::new(v.x1, v.x2, v.x3)
    }
}

/// Position and partial derivatives of a parametrized surface at one point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrJet {
    pub x: IrVec3,
    pub x_s: IrVec3,
    pub x_t: IrVec3,
    pub x_ss: IrVec3,
    pub x_st: IrVec3,
    pub x_tt: IrVec3,
}

impl From<SurfaceJet2> for IrJet {
    fn from(j: SurfaceJet2) -> Self {
        IrJet {
            x: j.x.into(),
            x_s: j.x_s.into(),
            x_t: j.x_t.into(),
            x_ss: j.x_ss.into(),
            x_st: j.x_st.into(),
            x_tt: j.x_tt.into(),
        }
    }
}

impl From<IrJet> for SurfaceJet2 {
    fn from(j: IrJet) -> Self {
        SurfaceJet2 {
            x: j.x.into(),
            x_s: j.x_s.into(),
            x_t: j.x_t.into(),
            x_ss: j.x_ss.into(),
            x_st: j.x_st.into(),
            x_tt: j.x_tt.into(),
        }
    }
}

/// First and second fundamental forms, causal sign, area element, and mean
/// curvature at a point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
#[allow(non_snake_case)]
pub struct IrFundamental {
    pub E: f64,
    pub F: f64,
    pub G: f64,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    /// +1 on timelike patches, -1 on spacelike ones.
    pub eps: i32,
    pub area_el: f64,
    pub H: f64,
}

/// Opaque handle to one member of a classified family.
pub struct IrFamily {
    inner: FamilySpec,
}

fn hand_out(fam: FamilySpec, out: *mut *mut IrFamily) -> IrStatus {
    // out was null-checked by the caller
    unsafe { *out = Box::into_raw(Box::new(IrFamily { inner: fam })) };
    IrStatus::Ok
}

/// Builds a member of the non-cylindrical family with velocity
/// `(v1, v2, v3)`, `v2 != v3`, and integration constants `c1, c2, c3`.
///
/// # Safety
/// `out` must be a valid pointer; the handle written to it must be released
/// with [`ir_family_free`].
#[no_mangle]
pub unsafe extern "C" fn ir_family_noncyl(
    v1: f64,
    v2: f64,
    v3: f64,
    c1: f64,
    c2: f64,
    c3: f64,
    out: *mut *mut IrFamily,
) -> IrStatus {
    if out.is_null() {
        return IrStatus::NullPointer;
    }
    match NonCylFamily::new(LVec3::new(v1, v2, v3), c1, c2, c3) {
        Ok(f) => hand_out(FamilySpec::NonCyl(f), out),
        Err(e) => status_of(&e),
    }
}

/// Builds a spacelike-ruling cylindrical member with `|v2| = |v3|`
/// (`v3 = sigma*v2`); `sigma` and `delta` must be +1 or -1.
///
/// # Safety
/// `out` must be a valid pointer; release the handle with [`ir_family_free`].
#[no_mangle]
pub unsafe extern "C" fn ir_family_cyl_equal(
    v2: f64,
    sigma: i32,
    delta: i32,
    c1: f64,
    c2: f64,
    out: *mut *mut IrFamily,
) -> IrStatus {
    if out.is_null() {
        return IrStatus::NullPointer;
    }
    match CylEqualFamily::new(v2, sigma, delta, c1, c2) {
        Ok(f) => hand_out(FamilySpec::CylEqual(f), out),
        Err(e) => status_of(&e),
    }
}

/// Builds a spacelike-ruling cylindrical member with `v2^2 != v3^2`;
/// `delta` and `branch` must be +1 or -1.
///
/// # Safety
/// `out` must be a valid pointer; release the handle with [`ir_family_free`].
#[no_mangle]
pub unsafe extern "C" fn ir_family_cyl_general(
    v2: f64,
    v3: f64,
    delta: i32,
    branch: i32,
    c1: f64,
    c2: f64,
    out: *mut *mut IrFamily,
) -> IrStatus {
    if out.is_null() {
        return IrStatus::NullPointer;
    }
    match CylGeneralFamily::new(v2, v3, delta, branch, c1, c2) {
        Ok(f) => hand_out(FamilySpec::CylGeneral(f), out),
        Err(e) => status_of(&e),
    }
}

/// Builds a timelike-ruling cylindrical member with `(v1, v2) != (0, 0)`,
/// defined for `|s| < sqrt(v1^2 + v2^2)/2`; `branch` must be +1 or -1.
///
/// # Safety
/// `out` must be a valid pointer; release the handle with [`ir_family_free`].
#[no_mangle]
pub unsafe extern "C" fn ir_family_cyl_timelike(
    v1: f64,
    v2: f64,
    branch: i32,
    c1: f64,
    c2: f64,
    out: *mut *mut IrFamily,
) -> IrStatus {
    if out.is_null() {
        return IrStatus::NullPointer;
    }
    match CylTimelikeFamily::new(v1, v2, branch, c1, c2) {
        Ok(f) => hand_out(FamilySpec::CylTimelike(f), out),
        Err(e) => status_of(&e),
    }
}

/// Releases a family handle. Null is accepted and ignored.
///
/// # Safety
/// `fam` must be null or a handle obtained from an `ir_family_*` constructor
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ir_family_free(fam: *mut IrFamily) {
    if !fam.is_null() {
        drop(unsafe { Box::from_raw(fam) });
    }
}

/// Writes the family's translation velocity (free components set to zero).
///
/// # Safety
/// `fam` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ir_family_velocity(fam: *const IrFamily, out: *mut IrVec3) -> IrStatus {
    if fam.is_null() || out.is_null() {
        return IrStatus::NullPointer;
    }
    unsafe { *out = (*fam).inner.velocity().into() };
    IrStatus::Ok
}

/// Whether `s` lies inside the family's parameter domain.
///
/// # Safety
/// `fam` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn ir_family_in_domain(fam: *const IrFamily, s: f64) -> bool {
    if fam.is_null() {
        return false;
    }
    unsafe { &*fam }.inner.in_domain(s)
}

/// Evaluates the closed-form surface jet at `(s, t)`.
///
/// # Safety
/// `fam` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ir_family_jet(
    fam: *const IrFamily,
    s: f64,
    t: f64,
    out: *mut IrJet,
) -> IrStatus {
    if fam.is_null() || out.is_null() {
        return IrStatus::NullPointer;
    }
    match unsafe { &*fam }.inner.jet(s, t) {
        Ok(j) => {
            unsafe { *out = j.into() };
            IrStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Polynomial-cleared soliton residual of the family at `(s, t)` against its
/// own velocity: `raw` vanishes exactly on translators, `norm` is
/// `raw/(1 + disc^2)`.
///
/// # Safety
/// `fam`, `raw`, and `norm` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ir_family_residual(
    fam: *const IrFamily,
    s: f64,
    t: f64,
    raw: *mut f64,
    norm: *mut f64,
) -> IrStatus {
    if fam.is_null() || raw.is_null() || norm.is_null() {
        return IrStatus::NullPointer;
    }
    let inner = &unsafe { &*fam }.inner;
    let jet = match inner.jet(s, t) {
        Ok(j) => j,
        Err(e) => return status_of(&e),
    };
    match soliton_residual_princ(&jet, inner.velocity()) {
        Ok((r, n)) => {
            unsafe {
                *raw = r;
                *norm = n;
            }
            IrStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Fundamental forms, causal sign, area element, and mean curvature of a jet.
///
/// # Safety
/// `jet` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ir_jet_fundamental(jet: *const IrJet, out: *mut IrFundamental) -> IrStatus {
    if jet.is_null() || out.is_null() {
        return IrStatus::NullPointer;
    }
    let j: SurfaceJet2 = (unsafe { *jet }).into();
    match fundamental(&j) {
        Ok(fd) => {
            unsafe {
                *out = IrFundamental {
                    E: fd.E,
                    F: fd.F,
                    G: fd.G,
                    e: fd.e,
                    f: fd.f,
                    g: fd.g,
                    eps: fd.eps,
                    area_el: fd.area_el,
                    H: fd.H,
                };
            }
            IrStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Polynomial-cleared soliton residual of an arbitrary jet against
/// velocity `v`.
///
/// # Safety
/// `jet`, `raw`, and `norm` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ir_residual_princ(
    jet: *const IrJet,
    v: IrVec3,
    raw: *mut f64,
    norm: *mut f64,
) -> IrStatus {
    if jet.is_null() || raw.is_null() || norm.is_null() {
        return IrStatus::NullPointer;
    }
    let j: SurfaceJet2 = (unsafe { *jet }).into();
    match soliton_residual_princ(&j, v.into()) {
        Ok((r, n)) => {
            unsafe {
                *raw = r;
                *norm = n;
            }
            IrStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Causal class of `v`. A negative `tau` selects the default tolerance
/// `1e-10 * max(1, |v|_euclidean^2)`.
#[no_mangle]
pub extern "C" fn ir_causal_class(v: IrVec3, tau: f64) -> IrCausalClass {
    let v: LVec3 = v.into();
    let tau = if tau < 0.0 { default_causal_tau(v) } else { tau };
    match causal_class(v, tau) {
        CausalClass::Spacelike => IrCausalClass::Spacelike,
        CausalClass::Timelike => IrCausalClass::Timelike,
        CausalClass::Lightlike => IrCausalClass::Lightlike,
    }
}

/// The ambient inner product `u1 v1 + u2 v2 - u3 v3`.
#[no_mangle]
pub extern "C" fn ir_lorentz_inner(u: IrVec3, v: IrVec3) -> f64 {
    lorentz_inner(u.into(), v.into())
}

/// The Lorentzian cross product, satisfying `<u x v, w> = det(w, u, v)`.
#[no_mangle]
pub extern "C" fn ir_lorentz_cross(u: IrVec3, v: IrVec3) -> IrVec3 {
    lorentz_cross(u.into(), v.into()).into()
}

/// The mixed product `<u x v, w> = det(u, v, w)`.
#[no_mangle]
pub extern "C" fn ir_mixed_product(u: IrVec3, v: IrVec3, w: IrVec3) -> f64 {
    mixed_product(u.into(), v.into(), w.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn family_lifecycle_and_residual() {
        unsafe {
            let mut fam: *mut IrFamily = ptr::null_mut();
            assert_eq!(
                ir_family_cyl_general(1.0, 2.0, 1, 1, 0.0, 0.0, &mut fam),
                IrStatus::Ok
            );
            assert!(!fam.is_null());

            let mut v = IrVec3 { x1: 9.0, x2: 9.0, x3: 9.0 };
            assert_eq!(ir_family_velocity(fam, &mut v), IrStatus::Ok);
            assert_eq!((v.x1, v.x2, v.x3), (0.0, 1.0, 2.0));

            let (mut raw, mut norm) = (1.0f64, 1.0f64);
            assert_eq!(ir_family_residual(fam, 0.7, -1.3, &mut raw, &mut norm), IrStatus::Ok);
            assert!(raw.abs() <= 1e-10, "translator residual {raw}");
            assert!(norm.abs() <= 1e-10);

            let mut jet = ir_zero_jet();
            assert_eq!(ir_family_jet(fam, 0.7, -1.3, &mut jet), IrStatus::Ok);
            let mut fd = IrFundamental {
                E: 0.0,
                F: 0.0,
                G: 0.0,
                e: 0.0,
                f: 0.0,
                g: 0.0,
                eps: 0,
                area_el: 0.0,
                H: 0.0,
            };
            assert_eq!(ir_jet_fundamental(&jet, &mut fd), IrStatus::Ok);
            assert!(fd.eps == 1 || fd.eps == -1);
            assert!(fd.H.is_finite() && fd.H != 0.0);

            // the same residual, through the jet-level entry point
            let (mut raw2, mut norm2) = (0.0f64, 0.0f64);
            assert_eq!(
                ir_residual_princ(&jet, IrVec3 { x1: 0.0, x2: 1.0, x3: 2.0 }, &mut raw2, &mut norm2),
                IrStatus::Ok
            );
            assert_eq!(raw, raw2);

            ir_family_free(fam);
        }
    }

    fn ir_zero_jet() -> IrJet {
        let z = IrVec3 { x1: 0.0, x2: 0.0, x3: 0.0 };
        IrJet { x: z, x_s: z, x_t: z, x_ss: z, x_st: z, x_tt: z }
    }

    #[test]
    fn errors_map_to_distinct_codes() {
        unsafe {
            let mut fam: *mut IrFamily = ptr::null_mut();
            // v2 = v3 collapses the non-cylindrical construction
            assert_eq!(
                ir_family_noncyl(2.0, 9.0, 9.0, 0.0, 0.0, 0.0, &mut fam),
                IrStatus::InvalidParameter
            );
            assert!(fam.is_null(), "out must stay untouched on failure");

            assert_eq!(
                ir_family_cyl_timelike(8.0, 6.0, 1, 0.0, 0.0, &mut fam),
                IrStatus::Ok
            );
            let mut jet = ir_zero_jet();
            // |s| >= sqrt(v1^2+v2^2)/2 = 5 is outside the profile's domain
            assert_eq!(ir_family_jet(fam, 5.0, 0.0, &mut jet), IrStatus::DomainError);
            assert_eq!(ir_family_jet(ptr::null(), 0.0, 0.0, &mut jet), IrStatus::NullPointer);
            ir_family_free(fam);

            // a degenerate (lightlike) jet is rejected by the fundamental data
            let mut bad = ir_zero_jet();
            bad.x_s = IrVec3 { x1: 1.0, x2: 0.0, x3: 0.0 };
            bad.x_t = IrVec3 { x1: 0.0, x2: 1.0, x3: 1.0 };
            let mut fd = IrFundamental {
                E: 0.0,
                F: 0.0,
                G: 0.0,
                e: 0.0,
                f: 0.0,
                g: 0.0,
                eps: 0,
                area_el: 0.0,
                H: 0.0,
            };
            assert_eq!(ir_jet_fundamental(&bad, &mut fd), IrStatus::DegenerateSurface);

            ir_family_free(ptr::null_mut()); // freeing null is a no-op
        }
    }

    #[test]
    fn ambient_product_entry_points() {
        let u = IrVec3 { x1: 1.0, x2: 2.0, x3: 3.0 };
        assert_eq!(ir_lorentz_inner(u, u), -4.0);
        assert_eq!(ir_causal_class(u, -1.0), IrCausalClass::Timelike);
        assert_eq!(
            ir_causal_class(IrVec3 { x1: 3.0, x2: 4.0, x3: 5.0 }, -1.0),
            IrCausalClass::Lightlike
        );

        let e1 = IrVec3 { x1: 1.0, x2: 0.0, x3: 0.0 };
        let e2 = IrVec3 { x1: 0.0, x2: 1.0, x3: 0.0 };
        let c = ir_lorentz_cross(e1, e2);
        assert_eq!((c.x1, c.x2, c.x3), (0.0, 0.0, -1.0));
        let e3 = IrVec3 { x1: 0.0, x2: 0.0, x3: 1.0 };
        assert_eq!(ir_mixed_product(e1, e2, e3), 1.0);
    }

    #[test]
    fn generated_header_covers_the_api() {
        let header = include_str!("../include/imcf_ruled.h");
        for symbol in [
            "ir_family_noncyl",
            "ir_family_cyl_equal",
            "ir_family_cyl_general",
            "ir_family_cyl_timelike",
            "ir_family_free",
            "ir_family_velocity",
            "ir_family_in_domain",
            "ir_family_jet",
            "ir_family_residual",
            "ir_jet_fundamental",
            "ir_residual_princ",
            "ir_causal_class",
            "ir_lorentz_inner",
            "ir_lorentz_cross",
            "ir_mixed_product",
            "typedef struct IrFamily IrFamily;",
            "IMCF_RULED_H",
        ] {
            assert!(header.contains(symbol), "header is missing {symbol}");
        }
    }
}
