//! Centralized numerical tolerances and truncation limits.
//!
//! Every tolerance used by the library is defined here so that tests can pin
//! exact defaults instead of scattering magic numbers.

/// Tolerances carried by every state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Allowed deviation of the squared norm from 1 for a normalized state.
    pub norm_tol: f64,
    /// Agreement tolerance for moment identities and cutoff convergence.
    pub moment_tol: f64,
    /// Maximum probability mass allowed in the boundary window of the
    /// truncation.
    pub tail_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            norm_tol: 1e-12,
            moment_tol: 1e-9,
            tail_tol: 1e-12,
        }
    }
}

/// Hard cap on auto-selected cutoffs.
pub const CUTOFF_CAP: usize = 4096;

/// Zero-amplitude headroom kept above the occupied part of a state so that
/// ladder words up to [`MAX_MOMENT_ORDER`] never touch the boundary.
pub const TAIL_MARGIN: usize = 16;

/// Largest supported moment order p + q.
pub const MAX_MOMENT_ORDER: usize = 8;

/// Slack used by squeezing decisions so states sitting exactly on the vacuum
/// benchmark (coherent states) never flap across the boundary.
pub const SQUEEZING_SLACK: f64 = 1e-9;

/// Smallest admissible eigenvalue of a superposition overlap matrix.
pub const OVERLAP_EIGENVALUE_FLOOR: f64 = 1e-12;

/// Norm below which a superposition is treated as fully cancelled.
pub const DEGENERACY_FLOOR: f64 = 1e-10;

/// Term magnitude at which series oracles stop accumulating.
pub const SERIES_TERM_TOL: f64 = 1e-16;

/// Term budget for series oracles before reporting non-convergence.
pub const SERIES_MAX_TERMS: usize = 100_000;
