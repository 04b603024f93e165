use thiserror::Error;

/// Failure modes of the geometric pipeline.
///
/// Every variant carries enough context to report *where* the computation
/// broke down; the CLI maps variants onto its exit-code table.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `EG - F^2` vanished (within tolerance), so the induced metric is
    /// degenerate and no normal/curvature data exists.
    #[error("degenerate surface: |EG - F^2| = {disc_abs:.3e} <= tau = {tau:.3e}")]
    DegenerateSurface { disc_abs: f64, tau: f64 },

    /// A parameter left the declared domain of a curve, family, or grid.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Mean curvature below the floor; 1/H (and the soliton identity) is
    /// meaningless there.
    #[error("mean curvature zero: {0}")]
    MeanCurvatureZero(String),

    /// A documented precondition of an operation does not hold for the input.
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),

    /// An ODE right-hand side overflowed or hit a declared pole.
    #[error("singular right-hand side: {0}")]
    SingularRhs(String),

    /// Construction-time rejection of structurally invalid parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
