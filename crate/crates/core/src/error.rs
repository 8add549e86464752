use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// All amplitudes are numerically zero; the state cannot be normalized.
    #[error("state has no amplitude above the normalization floor")]
    ZeroState,

    /// The truncation cannot support the requested operation: too much
    /// probability mass sits within `window` slots of the cutoff.
    #[error(
        "cutoff {cutoff} too small: boundary window of {window} slots holds \
         tail mass {tail_mass:.3e} (tolerance {tail_tol:.1e})"
    )]
    CutoffTooSmall {
        cutoff: usize,
        window: usize,
        tail_mass: f64,
        tail_tol: f64,
    },

    /// Squeezing parameter outside the supported range.
    #[error("squeezing parameter r = {r} exceeds the maximum {max}")]
    RTooLarge { r: f64, max: f64 },

    /// Coherent parameter outside the supported range.
    #[error("|alpha| = {alpha} exceeds the maximum {max}")]
    AlphaTooLarge { alpha: f64, max: f64 },

    /// Added-photon count outside the supported range.
    #[error("added-photon count m = {m} exceeds the maximum {max}")]
    MTooLarge { m: usize, max: usize },

    /// Superposition components cancel to numerical zero.
    #[error("superposition components cancel: sum norm below 1e-10")]
    DegenerateSuperposition,

    /// A series oracle failed to reach its term tolerance.
    #[error("series did not converge within {max_terms} terms")]
    NonConvergence { max_terms: usize },

    /// The overlap matrix of a generalized superposition is numerically
    /// singular (squeezing parameters too close together).
    #[error(
        "overlap matrix ill-conditioned: smallest eigenvalue {eigenvalue:.3e} \
         below floor {floor:.1e}"
    )]
    IllConditionedOverlap { eigenvalue: f64, floor: f64 },

    /// An amplitude is NaN or infinite.
    #[error("non-finite amplitude at index {index}")]
    NonFiniteAmplitude { index: usize },

    /// A caller-supplied parameter violates a precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Short machine-parsable tag naming the error variant.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::ZeroState => "ZeroState",
            Error::CutoffTooSmall { .. } => "CutoffTooSmall",
            Error::RTooLarge { .. } => "RTooLarge",
            Error::AlphaTooLarge { .. } => "AlphaTooLarge",
            Error::MTooLarge { .. } => "MTooLarge",
            Error::DegenerateSuperposition => "DegenerateSuperposition",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::IllConditionedOverlap { .. } => "IllConditionedOverlap",
            Error::NonFiniteAmplitude { .. } => "NonFiniteAmplitude",
            Error::InvalidParameter(_) => "InvalidParameter",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
