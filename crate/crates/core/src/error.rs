use thiserror::Error;

/// Everything that can go wrong while building or measuring a conic arc.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("eccentricity must be non-negative, got {0}")]
    NegativeEccentricity(f64),

    #[error("{name} must be a finite number, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("{name} must be positive, got {value}")]
    NonPositiveInput { name: &'static str, value: f64 },

    /// The requested sagitta is too deep for the eccentricity: the arc
    /// only exists for `k = l/f > k_min`, i.e. `f < l/k_min`.
    #[error(
        "infeasible sagitta for e = {e}: k = l/f = {k} must exceed {k_min}, i.e. f < l/{k_min}"
    )]
    InfeasibleSagitta { e: f64, k: f64, k_min: f64 },

    #[error("a parabola has no centre")]
    ParabolaHasNoCentre,

    #[error("angle {theta} lies outside the arc's range [-{beta}, {beta}]")]
    OutOfAngularRange { theta: f64, beta: f64 },

    #[error("angle {theta} reaches the asymptote direction (1 + e cos theta <= 0)")]
    AsymptoteDomain { theta: f64 },

    #[error("at least 2 samples are required, got {0}")]
    DegenerateSampleCount(usize),

    #[error("closed form expects a {expected} arc")]
    WrongClass { expected: &'static str },

    #[error("invalid quadrature settings: {0}")]
    InvalidSettings(&'static str),

    #[error(
        "quadrature did not converge after {subdivisions} subdivisions \
         (estimate {estimate}, error {error_estimate}, tolerance {tolerance})"
    )]
    QuadratureNonConvergence {
        subdivisions: usize,
        estimate: f64,
        error_estimate: f64,
        tolerance: f64,
    },

    #[error("{0} must not be empty")]
    EmptyList(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    finite(name, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositiveInput { name, value })
    }
}
