//! Error taxonomy shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma-type pole that does not cancel.
    #[error("pole at {at}")]
    Pole { at: Complex64 },
    /// Argument sits on a branch point (z = +-1 for the (z^2-1)^a convention).
    #[error("branch point at {at}")]
    BranchPoint { at: Complex64 },
    /// Argument outside the function's domain (cut rays, segments).
    #[error("domain error: {0}")]
    Domain(String),
    /// No transformation brings the series argument inside the convergence
    /// radius, or a series guard tripped.
    #[error("divergent series: {0}")]
    Divergence(String),
    /// A removable-singularity configuration that the requested normalization
    /// cannot represent (standard-normalization addition series only).
    #[error("resonance: {0}")]
    Resonance(String),
    /// z_< / z_> assignment violated for second-kind expansions.
    #[error("ordering violation: {0}")]
    Ordering(String),
    /// Parameter restriction stated by the identity is violated.
    #[error("restriction violated: {0}")]
    Restriction(String),
    /// Parameters do not match the required pattern (e.g. c = 2b).
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    /// Successive Richardson stages disagree beyond tolerance.
    #[error("extrapolation unstable: spread {spread:e}")]
    ExtrapolationUnstable { spread: f64 },
    /// Finite-difference step too large relative to the evaluation point.
    #[error("step size {h:e} too large for point {point:e}")]
    StepSize { h: f64, point: f64 },
    /// Refined quadrature disagrees with the coarse rule.
    #[error("quadrature did not converge: estimate {estimate:e}")]
    QuadratureNonconvergence { estimate: f64 },
    /// Value undefined (0/0 or similar without a removable interpretation).
    #[error("undefined value: {0}")]
    Undefined(String),
    /// Magnitude exceeds double-precision range.
    #[error("overflow: {0}")]
    Overflow(String),
}

impl Error {
    /// Stable lowercase tag used by the CLI error output.
    pub fn taxonomy(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "pole",
            Error::BranchPoint { .. } => "branch-point",
            Error::Domain(_) => "domain",
            Error::Divergence(_) => "divergence",
            Error::Resonance(_) => "resonance",
            Error::Ordering(_) => "ordering",
            Error::Restriction(_) => "restriction",
            Error::PatternMismatch(_) => "pattern-mismatch",
            Error::ExtrapolationUnstable { .. } => "extrapolation-instability",
            Error::StepSize { .. } => "step-size",
            Error::QuadratureNonconvergence { .. } => "quadrature-nonconvergence",
            Error::Undefined(_) => "undefined-value",
            Error::Overflow(_) => "overflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
