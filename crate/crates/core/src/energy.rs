//! Normal-ordered energy density of a single field mode.
//!
//! For a single-mode excitation the vacuum-subtracted stress-tensor
//! expectation reduces to
//!
//! ```text
//! ⟨:T₀₀:⟩(θ) = 2 K₀₀ (⟨a†a⟩ − Re(⟨a²⟩ e^{2iθ}))
//! ```
//!
//! where θ is the plane-wave phase at the evaluation point and K₀₀ collects
//! the mode frequency and quantization-box volume into one positive
//! prefactor (default 1). The analytic minimum over θ is
//! 2K₀₀(⟨a†a⟩ − |⟨a²⟩|) at θ = −arg⟨a²⟩/2, so negativity is decided in
//! closed form rather than from grid samples.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::math::wrap_pi;
use crate::squeezing::principal_report;
use crate::tol::{SERIES_MAX_TERMS, SERIES_TERM_TOL};

/// Prefactor and evaluation grid for energy-density profiles.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyDensityConfig {
    k00: f64,
    theta_grid: Vec<f64>,
}

impl EnergyDensityConfig {
    /// Validate a prefactor and an explicit grid (strictly increasing,
    /// within [0, 2π]).
    pub fn new(k00: f64, theta_grid: Vec<f64>) -> Result<Self> {
        if !k00.is_finite() || k00 <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "energy-density prefactor must be positive, got {k00}"
            )));
        }
        for pair in theta_grid.windows(2) {
            if !(pair[0] < pair[1]) {
                return Err(Error::InvalidParameter(
                    "theta grid must be strictly increasing".into(),
                ));
            }
        }
        if theta_grid
            .iter()
            .any(|t| !t.is_finite() || *t < 0.0 || *t > std::f64::consts::TAU)
        {
            return Err(Error::InvalidParameter(
                "theta grid must lie within [0, 2*pi]".into(),
            ));
        }
        Ok(Self { k00, theta_grid })
    }

    /// `points` equally spaced phases over one period, θᵢ = 2πi/points.
    pub fn uniform(k00: f64, points: usize) -> Result<Self> {
        let grid = (0..points)
            .map(|i| std::f64::consts::TAU * i as f64 / points as f64)
            .collect();
        Self::new(k00, grid)
    }

    pub fn k00(&self) -> f64 {
        self.k00
    }

    pub fn theta_grid(&self) -> &[f64] {
        &self.theta_grid
    }
}

impl Default for EnergyDensityConfig {
    fn default() -> Self {
        Self::uniform(1.0, 64).expect("default grid is valid")
    }
}

/// Energy density sampled over a phase grid, with the analytic minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyDensityProfile {
    /// Grid phases.
    pub thetas: Vec<f64>,
    /// ⟨:T₀₀:⟩ at each grid phase.
    pub values: Vec<f64>,
    /// Analytic minimum over all θ (not only grid points).
    pub min_value: f64,
    /// Minimizing phase, wrapped into [0, π).
    pub min_theta: f64,
    /// True when the analytic minimum is negative.
    pub ever_negative: bool,
}

/// ⟨:T₀₀:⟩ at one phase; periodic in θ with period π.
pub fn t00(state: &FockState, theta: f64, cfg: &EnergyDensityConfig) -> Result<f64> {
    let n = state.moment(1, 1)?.re;
    let a2 = state.moment(0, 2)?;
    Ok(t00_from_moments(n, a2, theta, cfg.k00))
}

fn t00_from_moments(n: f64, a2: C64, theta: f64, k00: f64) -> f64 {
    2.0 * k00 * (n - (a2 * C64::from_polar(1.0, 2.0 * theta)).re)
}

/// Profile over the config grid plus the closed-form minimum.
pub fn t00_profile(state: &FockState, cfg: &EnergyDensityConfig) -> Result<EnergyDensityProfile> {
    let n = state.moment(1, 1)?.re;
    let a2 = state.moment(0, 2)?;
    let values: Vec<f64> = cfg
        .theta_grid
        .iter()
        .map(|&theta| t00_from_moments(n, a2, theta, cfg.k00))
        .collect();
    let min_value = 2.0 * cfg.k00 * (n - a2.norm());
    let min_theta = if a2.norm() < 1e-14 {
        0.0
    } else {
        wrap_pi(-a2.arg() / 2.0)
    };
    Ok(EnergyDensityProfile {
        thetas: cfg.theta_grid.clone(),
        values,
        min_value,
        min_theta,
        ever_negative: min_value < -1e-12 * cfg.k00,
    })
}

/// State families with printed closed-form energy densities (real
/// parameters), in units of K₀₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedForm {
    /// 2α²(1 − cos 2θ).
    Coherent { alpha: f64 },
    /// 2α² tanh(α²)(1 − coth(α²) cos 2θ).
    EvenCat { alpha: f64 },
    /// 2 sinh r (cosh r cos 2θ + sinh r).
    SqueezedVacuum { r: f64 },
    /// θ-independent series 16 sech r/(1 + √sech 2r) Σ n (4n)!/((2n)!²) (tanh r/2)^{4n}.
    FirstKindSvsL2 { r: f64 },
}

/// Closed-form ⟨:T₀₀:⟩ in units of K₀₀.
pub fn closed_form_t00(family: ClosedForm, theta: f64) -> Result<f64> {
    match family {
        ClosedForm::Coherent { alpha } => Ok(2.0 * alpha * alpha * (1.0 - (2.0 * theta).cos())),
        ClosedForm::EvenCat { alpha } => {
            let x = alpha * alpha;
            if x == 0.0 {
                return Ok(0.0);
            }
            Ok(2.0 * x * x.tanh() * (1.0 - (2.0 * theta).cos() / x.tanh()))
        }
        ClosedForm::SqueezedVacuum { r } => {
            Ok(2.0 * r.sinh() * (r.cosh() * (2.0 * theta).cos() + r.sinh()))
        }
        ClosedForm::FirstKindSvsL2 { r } => {
            let t = r.tanh();
            if t == 0.0 {
                return Ok(0.0);
            }
            let pref = 16.0 / (r.cosh() * (1.0 + (1.0 / (2.0 * r).cosh()).sqrt()));
            // Σ_{n≥1} n (4n)!/((2n)!²) (t/2)^{4n}, accumulated via the term
            // ratio (4n+1)(4n+2)(4n+3)(4n+4)/((2n+1)(2n+2))² · (t/2)^4.
            let x4 = (t / 2.0).powi(4);
            let mut coef = 1.0f64; // (4n)!/((2n)!²) (t/2)^{4n} at n = 0
            let mut sum = 0.0f64;
            let mut converged = false;
            for n in 0..SERIES_MAX_TERMS {
                let term = n as f64 * coef;
                sum += term;
                if n > 0 && term < SERIES_TERM_TOL {
                    converged = true;
                    break;
                }
                let nf = n as f64;
                coef *= (4.0 * nf + 1.0) * (4.0 * nf + 2.0) * (4.0 * nf + 3.0)
                    * (4.0 * nf + 4.0)
                    / ((2.0 * nf + 1.0) * (2.0 * nf + 2.0)).powi(2)
                    * x4;
            }
            if !converged {
                return Err(Error::NonConvergence {
                    max_terms: SERIES_MAX_TERMS,
                });
            }
            Ok(pref * sum)
        }
    }
}

/// Joint squeezing / energy-negativity outcome of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityReport {
    /// Principal quadrature variance below the vacuum value.
    pub squeezed: bool,
    /// Analytic minimum of ⟨:T₀₀:⟩ is negative.
    pub ever_negative: bool,
    /// squeezed == ever_negative. For zero-mean states the two conditions
    /// reduce to the same comparison of ⟨a†a⟩ against |⟨a²⟩| and must agree;
    /// for ⟨a⟩ ≠ 0 states the flag is reported but carries no guarantee.
    pub consistent_with_paper_claim: bool,
    /// |⟨a⟩| < 1e−10.
    pub zero_mean: bool,
}

/// Squeezing vs energy-density negativity for one state, at K₀₀ = 1.
pub fn negativity_report(state: &FockState) -> Result<NegativityReport> {
    let quad = principal_report(state)?;
    let profile = t00_profile(state, &EnergyDensityConfig::default())?;
    let zero_mean = state.moment(0, 1)?.norm() < 1e-10;
    Ok(NegativityReport {
        squeezed: quad.squeezed,
        ever_negative: profile.ever_negative,
        consistent_with_paper_claim: quad.squeezed == profile.ever_negative,
        zero_mean,
    })
}
