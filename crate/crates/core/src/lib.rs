//! Ruled translating solitons of inverse mean curvature flow in
//! Lorentz-Minkowski 3-space.
//!
//! The crate implements, generates, and numerically cross-checks the ruled
//! surfaces `X(s,t) = gamma(s) + t*beta(s)` that translate under the flow
//! `dX/dt = -N/H`, i.e. satisfy `<N,V> H = -1` for a fixed velocity `V`:
//!
//! * [`mink`] — the ambient inner product `x1 y1 + x2 y2 - x3 y3`, causal
//!   classification, Lorentzian cross and mixed products;
//! * [`jet`] — fundamental forms, normals, and mean curvature from
//!   second-order jets, plus a finite-difference jet oracle;
//! * [`ruled`] — ruled-surface jets, the polynomial-cleared soliton
//!   residual, and its expansion as a quartic in the ruling parameter;
//! * [`families`] — closed forms for the four classified families (one
//!   non-cylindrical, three cylindrical);
//! * [`ode`] — RK4 oracles that re-derive the families from their reduced
//!   ODE systems;
//! * [`flow`] — a discrete explicit-Euler flow and the translation-deviation
//!   metric;
//! * [`grid`], [`format`], [`report`] — sampling grids, deterministic CSV/OBJ
//!   output, residual sweeps.
//!
//! Numerical claims (tolerances, windows, measured residual magnitudes) are
//! pinned by the unit tests next to each module and by the integration suite.

pub mod error;
pub mod families;
pub mod flow;
pub mod format;
pub mod grid;
pub mod jet;
pub mod mink;
pub mod ode;
pub mod report;
pub mod ruled;

pub use error::{Error, Result};
pub use families::{CylEqualFamily, CylGeneralFamily, CylTimelikeFamily, FamilySpec, NonCylFamily};
pub use jet::{fd_jet, fundamental, FundamentalData, ParamSurface, SurfaceJet2};
pub use mink::{causal_class, lorentz_cross, lorentz_inner, mixed_product, CausalClass, LVec3};
pub use ruled::{
    lightlike_beta_poly, noncyl_poly_coeffs, soliton_residual_normal, soliton_residual_princ,
    CurveJet, PolyCoeffs, RuledSpec,
};
