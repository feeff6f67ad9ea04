use thiserror::Error;

/// Errors produced by the Burgers analysis routines.
///
/// Numeric payloads are carried as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BurgersError {
    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("coordinate x = {x} lies outside [0, {length}]")]
    OutOfDomain { x: f64, length: f64 },

    #[error("Robin coefficients p, q are undefined when A = B (closed-form spectrum applies)")]
    EqualBoundaryValues,

    #[error("root bracketing failed: found {found} of {wanted} roots scanning ({start}, {end}] with step {step}")]
    Bracketing {
        wanted: usize,
        found: usize,
        start: f64,
        end: f64,
        step: f64,
    },

    #[error("found {0} roots of the hyperbolic equation, at most 2 are possible")]
    TooManyHyperbolicRoots(usize),

    #[error("degenerate hyperbolic mode: |A|/(2 nu) equals k = {k}")]
    DegenerateHyperbolicMode { k: f64 },

    #[error("eigenfunction {index} has {zeros} interior zeros")]
    ZeroCountMismatch { index: usize, zeros: usize },

    #[error("eigenfunction {index} touches zero without crossing near x = {x}")]
    TangentialZero { index: usize, x: f64 },

    #[error("eigenvalues are not strictly increasing at index {index}")]
    NotStrictlyIncreasing { index: usize },

    #[error("stationary profile is inconsistent with the boundary data: {0}")]
    InconsistentProfile(String),

    #[error("Cole-Hopf input changes sign or vanishes at sample {index}")]
    SignChange { index: usize },

    #[error("modal denominator vanishes at x = {x}, t = {t}")]
    SingularDenominator { x: f64, t: f64 },

    #[error("time step {dt} exceeds the stability bound {bound}")]
    UnstableTimeStep { dt: f64, bound: f64 },

    #[error("simulation blew up at t = {t}: max|u| = {max_abs} exceeds {limit}")]
    BlowUp { t: f64, max_abs: f64, limit: f64 },

    #[error("Newton iteration for the discrete steady state did not converge (residual {residual})")]
    NoConvergence { residual: f64 },
}

pub type Result<T, E = BurgersError> = std::result::Result<T, E>;
