//! Error type shared by every numerical routine in the crate.

use thiserror::Error;

/// Errors surfaced by series, special-function, and quadrature evaluations.
///
/// Every routine that can fail returns `Result<T, Error>`; partial results are
/// never returned silently. Overflow and pole conditions are detected eagerly
/// so that no NaN or infinity escapes into downstream arithmetic.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Evaluation requested exactly at a pole of the function.
    #[error("pole at {location}")]
    Pole { location: String },

    /// The result magnitude exceeds the representable double range.
    #[error("overflow in {context}")]
    Overflow { context: String },

    /// An argument lies outside the documented domain of the operation.
    #[error("domain violation: {0}")]
    Domain(String),

    /// A series failed to reach its tolerance within the term budget.
    #[error("series did not converge within {max_terms} terms (last |term| = {last_term:e})")]
    SeriesNonConvergence { max_terms: usize, last_term: f64 },

    /// Adaptive quadrature exhausted its subdivision budget with the error
    /// estimate still far above tolerance.
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),

    /// A decay certificate is unusable (for example an algebraic exponent
    /// p ≤ 1 with no analytic tail available).
    #[error("decay certificate rejected: {0}")]
    BadCertificate(String),

    /// The truncated contour tail is too large relative to the computed value.
    #[error("contour tail bound violated: {0}")]
    TailBound(String),

    /// A value that must be real carried a non-negligible imaginary part.
    /// This signals an upstream bug, not a user error.
    #[error("imaginary residue too large: {0}")]
    ImaginaryResidue(String),

    /// Richardson extrapolants stopped contracting.
    #[error("extrapolation diverged: {0}")]
    ExtrapolationDiverged(String),
}

pub type Result<T> = std::result::Result<T, Error>;
