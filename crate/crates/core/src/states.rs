//! Constructors for the state families: coherent, squeezed vacuum,
//! photon-added coherent, cat, their first-kind superpositions, generalized
//! weighted superpositions, and the two-mode squeezed vacuum family.
//!
//! Every constructor auto-selects the smallest cutoff whose boundary window
//! of [`TAIL_MARGIN`](crate::tol::TAIL_MARGIN) slots holds less than
//! `tail_tol` probability mass (doubling up to [`CUTOFF_CAP`]), normalizes,
//! and — for superposition-type constructors, where the summation leaves the
//! global phase to a convention — rotates the largest-magnitude amplitude to
//! the nonnegative real axis so amplitude-level comparisons are
//! deterministic. Coefficients with factorial ratios are accumulated in log
//! space to stay finite far past n = 170.

use std::f64::consts::TAU;

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::math::wrap_tau;
use crate::tol::{Tolerances, CUTOFF_CAP, DEGENERACY_FLOOR, TAIL_MARGIN};
use crate::two_mode::TwoModeFockState;

/// Guard on |α| for coherent states.
pub const MAX_COHERENT_ALPHA: f64 = 20.0;
/// Guard on r for single- and two-mode squeezed vacua.
pub const MAX_SQUEEZE_R: f64 = 3.0;
/// Guard on |α| for photon-added coherent states.
pub const MAX_PACS_ALPHA: f64 = 10.0;
/// Guard on the added-photon count.
pub const MAX_PACS_M: usize = 20;
/// Guard on |α| for cat states.
pub const MAX_CAT_ALPHA: f64 = 10.0;

/// Squeeze parameter ξ = r e^{iθ} with r ≥ 0 and θ wrapped into [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeParam {
    r: f64,
    phase: f64,
}

impl SqueezeParam {
    pub fn new(r: f64, phase: f64) -> Result<Self> {
        if !r.is_finite() || r < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "squeezing parameter r must be finite and nonnegative, got {r}"
            )));
        }
        if !phase.is_finite() {
            return Err(Error::InvalidParameter("squeeze phase must be finite".into()));
        }
        Ok(Self {
            r,
            phase: wrap_tau(phase),
        })
    }

    /// Real squeeze parameter (θ = 0).
    pub fn real(r: f64) -> Result<Self> {
        Self::new(r, 0.0)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// ξ rotated by e^{iδ}.
    pub fn rotated(&self, delta: f64) -> Self {
        Self {
            r: self.r,
            phase: wrap_tau(self.phase + delta),
        }
    }
}

/// Parameters of an m-photon-added coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacsParam {
    alpha: C64,
    m: usize,
}

impl PacsParam {
    pub fn new(alpha: C64, m: usize) -> Result<Self> {
        let mag = alpha.norm();
        if !mag.is_finite() || mag > MAX_PACS_ALPHA {
            return Err(Error::AlphaTooLarge {
                alpha: mag,
                max: MAX_PACS_ALPHA,
            });
        }
        if m > MAX_PACS_M {
            return Err(Error::MTooLarge { m, max: MAX_PACS_M });
        }
        Ok(Self { alpha, m })
    }

    pub fn alpha(&self) -> C64 {
        self.alpha
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// Relative-phase convention of a cat state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatKind {
    /// |α⟩ + |−α⟩ (even photon numbers only).
    Even,
    /// |α⟩ − |−α⟩ (odd photon numbers only).
    Odd,
    /// |α⟩ + i|−α⟩.
    YurkeStoler,
}

/// Family tag of a superposition's components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFamily {
    SqueezedVacuum,
    Pacs,
    CoherentCat,
    TwoModeSqueezedVacuum,
}

/// Parameters of one superposition component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComponentParams {
    SqueezedVacuum(SqueezeParam),
    Pacs(PacsParam),
    Coherent(C64),
    TwoModeSqueezedVacuum(SqueezeParam),
}

impl ComponentParams {
    pub fn family(&self) -> StateFamily {
        match self {
            ComponentParams::SqueezedVacuum(_) => StateFamily::SqueezedVacuum,
            ComponentParams::Pacs(_) => StateFamily::Pacs,
            ComponentParams::Coherent(_) => StateFamily::CoherentCat,
            ComponentParams::TwoModeSqueezedVacuum(_) => StateFamily::TwoModeSqueezedVacuum,
        }
    }
}

/// One weighted component of a generalized superposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpositionComponent {
    pub weight: C64,
    pub params: ComponentParams,
}

/// Ordered list of weighted components, all from one family.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperpositionSpec {
    components: Vec<SuperpositionComponent>,
}

impl SuperpositionSpec {
    pub fn new(components: Vec<SuperpositionComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter(
                "superposition needs at least one component".into(),
            ));
        }
        let family = components[0].params.family();
        if components.iter().any(|c| c.params.family() != family) {
            return Err(Error::InvalidParameter(
                "superposition components must share one family".into(),
            ));
        }
        if components.iter().all(|c| c.weight.norm() == 0.0) {
            return Err(Error::InvalidParameter(
                "superposition needs at least one nonzero weight".into(),
            ));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[SuperpositionComponent] {
        &self.components
    }

    pub fn family(&self) -> StateFamily {
        self.components[0].params.family()
    }
}

/// Base family of a first-kind (root-of-unity) superposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FirstKindBase {
    SqueezedVacuum(SqueezeParam),
    Pacs(PacsParam),
}

// ---------------------------------------------------------------------------
// growth helpers

fn grow_single_mode(
    initial: usize,
    tol: Tolerances,
    build: impl Fn(usize) -> Vec<C64>,
) -> Result<Vec<C64>> {
    let mut cutoff = initial.clamp(2 * TAIL_MARGIN, CUTOFF_CAP);
    loop {
        let amps = build(cutoff);
        let total: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        let start = amps.len().saturating_sub(TAIL_MARGIN);
        let tail: f64 = amps[start..].iter().map(|a| a.norm_sqr()).sum();
        if total > 0.0 && tail <= tol.tail_tol * total {
            return Ok(amps);
        }
        if cutoff >= CUTOFF_CAP {
            return Err(Error::CutoffTooSmall {
                cutoff,
                window: TAIL_MARGIN,
                tail_mass: if total > 0.0 { tail / total } else { f64::NAN },
                tail_tol: tol.tail_tol,
            });
        }
        cutoff = (cutoff * 2).min(CUTOFF_CAP);
    }
}

fn grow_two_mode(
    initial: usize,
    tol: Tolerances,
    build: impl Fn(usize) -> Array2<C64>,
) -> Result<Array2<C64>> {
    let mut cutoff = initial.clamp(2 * TAIL_MARGIN, CUTOFF_CAP);
    loop {
        let amps = build(cutoff);
        let total: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        let (rows, cols) = amps.dim();
        let r0 = rows.saturating_sub(TAIL_MARGIN);
        let c0 = cols.saturating_sub(TAIL_MARGIN);
        let mut tail = 0.0;
        for ((i, j), a) in amps.indexed_iter() {
            if i >= r0 || j >= c0 {
                tail += a.norm_sqr();
            }
        }
        if total > 0.0 && tail <= tol.tail_tol * total {
            return Ok(amps);
        }
        if cutoff >= CUTOFF_CAP {
            return Err(Error::CutoffTooSmall {
                cutoff,
                window: TAIL_MARGIN,
                tail_mass: if total > 0.0 { tail / total } else { f64::NAN },
                tail_tol: tol.tail_tol,
            });
        }
        cutoff = (cutoff * 2).min(CUTOFF_CAP);
    }
}

/// Rotate all amplitudes so the largest-magnitude one is real nonnegative.
pub(crate) fn fix_global_phase(amps: &mut [C64]) {
    let mut best = 0usize;
    let mut best_mag = 0.0;
    for (n, a) in amps.iter().enumerate() {
        let mag = a.norm_sqr();
        if mag > best_mag {
            best_mag = mag;
            best = n;
        }
    }
    if best_mag < 1e-300 {
        return;
    }
    let phase = amps[best] / amps[best].norm();
    let rot = phase.conj();
    for a in amps.iter_mut() {
        *a *= rot;
    }
}

fn fix_global_phase_matrix(amps: &mut Array2<C64>) {
    let mut best = (0usize, 0usize);
    let mut best_mag = 0.0;
    for ((i, j), a) in amps.indexed_iter() {
        let mag = a.norm_sqr();
        if mag > best_mag {
            best_mag = mag;
            best = (i, j);
        }
    }
    if best_mag < 1e-300 {
        return;
    }
    let rot = (amps[best] / amps[best].norm()).conj();
    amps.mapv_inplace(|a| a * rot);
}

// ---------------------------------------------------------------------------
// elementary families

/// Coherent state |α⟩ with cₙ = e^{−|α|²/2} αⁿ/√n!.
pub fn coherent(alpha: C64) -> Result<FockState> {
    coherent_with(alpha, Options::default())
}

/// Options accepted by the `_with` constructor variants.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub tol: Option<Tolerances>,
    /// Explicit cutoff; skips the auto-growth policy. The boundary window is
    /// then only checked when moments are evaluated.
    pub cutoff: Option<usize>,
}

impl Options {
    fn tolerances(&self) -> Tolerances {
        self.tol.unwrap_or_default()
    }
}

pub fn coherent_with(alpha: C64, opts: Options) -> Result<FockState> {
    let mag = alpha.norm();
    if !mag.is_finite() || mag > MAX_COHERENT_ALPHA {
        return Err(Error::AlphaTooLarge {
            alpha: mag,
            max: MAX_COHERENT_ALPHA,
        });
    }
    let tol = opts.tolerances();
    let x = alpha.norm_sqr();
    let build = |cutoff: usize| {
        let mut amps = vec![C64::new(0.0, 0.0); cutoff + 1];
        amps[0] = C64::new((-x / 2.0).exp(), 0.0);
        for n in 1..=cutoff {
            amps[n] = amps[n - 1] * alpha / (n as f64).sqrt();
        }
        amps
    };
    let initial = (x + 12.0 * (x + 1.0).sqrt()) as usize + TAIL_MARGIN;
    let amps = match opts.cutoff {
        Some(c) => build(c),
        None => grow_single_mode(initial, tol, build)?,
    };
    FockState::from_grown(amps, tol)
}

/// Squeezed vacuum |ξ⟩ with c_{2m} = (cosh r)^{−1/2} (−e^{iθ} tanh r)^m √((2m)!)/(2^m m!).
pub fn squeezed_vacuum(xi: SqueezeParam) -> Result<FockState> {
    squeezed_vacuum_with(xi, Options::default())
}

pub fn squeezed_vacuum_with(xi: SqueezeParam, opts: Options) -> Result<FockState> {
    if xi.r() > MAX_SQUEEZE_R {
        return Err(Error::RTooLarge {
            r: xi.r(),
            max: MAX_SQUEEZE_R,
        });
    }
    let tol = opts.tolerances();
    let t = xi.r().tanh();
    let ln_cosh = xi.r().cosh().ln();
    let step_phase = xi.phase() + std::f64::consts::PI;
    let build = |cutoff: usize| {
        let mut amps = vec![C64::new(0.0, 0.0); cutoff + 1];
        // ln-magnitude accumulated across m: -ln(cosh r)/2 + m ln(tanh r)
        //   + ln(2m)!/2 - m ln 2 - ln m!
        let mut ln_mag = -0.5 * ln_cosh;
        let mut angle = 0.0;
        let mut m = 0usize;
        while 2 * m <= cutoff {
            amps[2 * m] = C64::from_polar(ln_mag.exp(), angle);
            if t == 0.0 {
                break;
            }
            let mf = m as f64;
            ln_mag += t.ln() + 0.5 * ((2.0 * mf + 1.0).ln() + (2.0 * mf + 2.0).ln())
                - std::f64::consts::LN_2
                - (mf + 1.0).ln();
            angle = wrap_tau(angle + step_phase);
            m += 1;
        }
        amps
    };
    let initial = if t > 0.0 {
        let m_star = (1e-16f64.ln() / (2.0 * t.ln())).ceil().max(1.0) as usize;
        2 * m_star + TAIL_MARGIN
    } else {
        2 * TAIL_MARGIN
    };
    let amps = match opts.cutoff {
        Some(c) => build(c),
        None => grow_single_mode(initial, tol, build)?,
    };
    FockState::from_grown(amps, tol)
}

/// m-photon-added coherent state |α, m⟩ ∝ a†ᵐ|α⟩.
pub fn pacs(p: PacsParam) -> Result<FockState> {
    pacs_with(p, Options::default())
}

pub fn pacs_with(p: PacsParam, opts: Options) -> Result<FockState> {
    let tol = opts.tolerances();
    let alpha = p.alpha();
    let m = p.m();
    let x = alpha.norm_sqr();
    let lm = crate::math::laguerre(m, -x);
    let ln_m_fact: f64 = (1..=m).map(|k| (k as f64).ln()).sum();
    let ln_pref = -x / 2.0 - 0.5 * (lm.ln() + ln_m_fact);
    let arg = if alpha.norm() > 0.0 { alpha.arg() } else { 0.0 };
    let ln_alpha = if alpha.norm() > 0.0 {
        alpha.norm().ln()
    } else {
        0.0
    };
    let build = |cutoff: usize| {
        let mut amps = vec![C64::new(0.0, 0.0); cutoff + 1];
        // c_{n+m} = pref · αⁿ √((n+m)!)/n!
        let mut ln_mag = ln_pref + 0.5 * ln_m_fact; // n = 0 term: √(m!)
        let mut angle = 0.0;
        let mut n = 0usize;
        while n + m <= cutoff {
            amps[n + m] = C64::from_polar(ln_mag.exp(), angle);
            if alpha.norm() == 0.0 {
                break;
            }
            let nf = n as f64;
            ln_mag += ln_alpha + 0.5 * (nf + 1.0 + m as f64).ln() - (nf + 1.0).ln();
            angle = wrap_tau(angle + arg);
            n += 1;
        }
        amps
    };
    let initial = m + (x + 12.0 * (x + 1.0).sqrt()) as usize + TAIL_MARGIN;
    let amps = match opts.cutoff {
        Some(c) => build(c),
        None => grow_single_mode(initial, tol, build)?,
    };
    FockState::from_grown(amps, tol)
}

/// Cat state: normalized |α⟩ ± |−α⟩ or |α⟩ + i|−α⟩.
pub fn cat(alpha: C64, kind: CatKind) -> Result<FockState> {
    cat_with(alpha, kind, Options::default())
}

pub fn cat_with(alpha: C64, kind: CatKind, opts: Options) -> Result<FockState> {
    let mag = alpha.norm();
    if !mag.is_finite() || mag > MAX_CAT_ALPHA {
        return Err(Error::AlphaTooLarge {
            alpha: mag,
            max: MAX_CAT_ALPHA,
        });
    }
    let plus = coherent_with(alpha, opts)?;
    let weight = match kind {
        CatKind::Even => C64::new(1.0, 0.0),
        CatKind::Odd => C64::new(-1.0, 0.0),
        CatKind::YurkeStoler => C64::new(0.0, 1.0),
    };
    let mut amps: Vec<C64> = plus
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(n, a)| {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            a + weight * sign * a
        })
        .collect();
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm < DEGENERACY_FLOOR {
        return Err(Error::ZeroState);
    }
    fix_global_phase(&mut amps);
    FockState::from_grown(amps, opts.tolerances())
}

// ---------------------------------------------------------------------------
// superpositions

/// Equal-weight superposition of one state with its parameter rotated by the
/// l-th roots of unity: Σⱼ |Φ e^{i2πj/l}⟩, normalized.
pub fn first_kind_superposition(base: FirstKindBase, l: usize) -> Result<FockState> {
    if l == 0 {
        return Err(Error::InvalidParameter(
            "first-kind superposition needs l >= 1".into(),
        ));
    }
    let component = |j: usize| -> Result<FockState> {
        let delta = TAU * j as f64 / l as f64;
        match base {
            FirstKindBase::SqueezedVacuum(xi) => squeezed_vacuum(xi.rotated(delta)),
            FirstKindBase::Pacs(p) => {
                let rotated = p.alpha() * C64::from_polar(1.0, delta);
                pacs(PacsParam::new(rotated, p.m())?)
            }
        }
    };
    if l == 1 {
        return component(0);
    }
    let states: Vec<FockState> = (0..l).map(component).collect::<Result<_>>()?;
    sum_states(&states, None)
}

/// Weighted superposition Σⱼ aⱼ|Φⱼ⟩ of single-mode components, normalized.
pub fn generalized_superposition(spec: &SuperpositionSpec) -> Result<FockState> {
    if spec.family() == StateFamily::TwoModeSqueezedVacuum {
        return Err(Error::InvalidParameter(
            "two-mode components cannot form a single-mode superposition".into(),
        ));
    }
    let states: Vec<FockState> = spec
        .components()
        .iter()
        .map(|c| match c.params {
            ComponentParams::SqueezedVacuum(xi) => squeezed_vacuum(xi),
            ComponentParams::Pacs(p) => pacs(p),
            ComponentParams::Coherent(a) => coherent(a),
            ComponentParams::TwoModeSqueezedVacuum(_) => unreachable!(),
        })
        .collect::<Result<_>>()?;
    let weights: Vec<C64> = spec.components().iter().map(|c| c.weight).collect();
    sum_states(&states, Some(&weights))
}

/// Generalized superposition of real squeezed vacua with real weights.
pub fn svs_superposition(r_list: &[f64], weights: &[f64]) -> Result<FockState> {
    if r_list.len() != weights.len() {
        return Err(Error::InvalidParameter(format!(
            "{} squeezing parameters but {} weights",
            r_list.len(),
            weights.len()
        )));
    }
    let components = r_list
        .iter()
        .zip(weights)
        .map(|(&r, &w)| {
            Ok(SuperpositionComponent {
                weight: C64::new(w, 0.0),
                params: ComponentParams::SqueezedVacuum(SqueezeParam::real(r)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    generalized_superposition(&SuperpositionSpec::new(components)?)
}

fn sum_states(states: &[FockState], weights: Option<&[C64]>) -> Result<FockState> {
    let len = states
        .iter()
        .map(|s| s.amplitudes().len())
        .max()
        .expect("nonempty component list");
    let tol = states[0].tolerances();
    let mut amps = vec![C64::new(0.0, 0.0); len];
    for (j, s) in states.iter().enumerate() {
        let w = weights.map_or(C64::new(1.0, 0.0), |ws| ws[j]);
        if w.norm_sqr() == 0.0 {
            continue;
        }
        for (n, a) in s.amplitudes().iter().enumerate() {
            amps[n] += w * a;
        }
    }
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm < DEGENERACY_FLOOR {
        return Err(Error::DegenerateSuperposition);
    }
    fix_global_phase(&mut amps);
    FockState::from_grown(amps, tol)
}

/// Overlap ⟨ξ(r₁)|ξ(r₂)⟩ = 1/√cosh(r₁ − r₂) for real squeeze parameters.
pub fn svs_overlap_oracle(r1: f64, r2: f64) -> f64 {
    1.0 / (r1 - r2).cosh().sqrt()
}

// ---------------------------------------------------------------------------
// two-mode family

/// Two-mode squeezed vacuum with c_{n,n} = (cosh r)^{−1} (−e^{iθ} tanh r)ⁿ.
pub fn two_mode_squeezed_vacuum(xi: SqueezeParam) -> Result<TwoModeFockState> {
    two_mode_squeezed_vacuum_with(xi, Options::default())
}

pub fn two_mode_squeezed_vacuum_with(
    xi: SqueezeParam,
    opts: Options,
) -> Result<TwoModeFockState> {
    if xi.r() > MAX_SQUEEZE_R {
        return Err(Error::RTooLarge {
            r: xi.r(),
            max: MAX_SQUEEZE_R,
        });
    }
    let tol = opts.tolerances();
    let t = xi.r().tanh();
    let inv_cosh = 1.0 / xi.r().cosh();
    let step_phase = xi.phase() + std::f64::consts::PI;
    let build = |cutoff: usize| {
        let mut amps = Array2::zeros((cutoff + 1, cutoff + 1));
        let mut mag = inv_cosh;
        let mut angle = 0.0;
        for n in 0..=cutoff {
            amps[(n, n)] = C64::from_polar(mag, angle);
            if t == 0.0 {
                break;
            }
            mag *= t;
            angle = wrap_tau(angle + step_phase);
        }
        amps
    };
    let initial = if t > 0.0 {
        (1e-16f64.ln() / (2.0 * t.ln())).ceil().max(1.0) as usize + TAIL_MARGIN
    } else {
        2 * TAIL_MARGIN
    };
    let amps = match opts.cutoff {
        Some(c) => build(c),
        None => grow_two_mode(initial, tol, build)?,
    };
    TwoModeFockState::from_grown(amps, tol)
}

/// First-kind superposition of two-mode squeezed vacua, l ∈ {1, 2, 3, 4}.
pub fn two_mode_first_kind(xi: SqueezeParam, l: usize) -> Result<TwoModeFockState> {
    if !(1..=4).contains(&l) {
        return Err(Error::InvalidParameter(format!(
            "two-mode first-kind superposition supports l in 1..=4, got {l}"
        )));
    }
    if l == 1 {
        return two_mode_squeezed_vacuum(xi);
    }
    let states: Vec<TwoModeFockState> = (0..l)
        .map(|j| two_mode_squeezed_vacuum(xi.rotated(TAU * j as f64 / l as f64)))
        .collect::<Result<_>>()?;
    let dim = states
        .iter()
        .map(|s| s.amplitudes().dim().0)
        .max()
        .expect("nonempty component list");
    let mut amps: Array2<C64> = Array2::zeros((dim, dim));
    for s in &states {
        let (r, c) = s.amplitudes().dim();
        let mut view = amps.slice_mut(ndarray::s![..r, ..c]);
        view += s.amplitudes();
    }
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm < DEGENERACY_FLOOR {
        return Err(Error::DegenerateSuperposition);
    }
    fix_global_phase_matrix(&mut amps);
    TwoModeFockState::from_grown(amps, states[0].tolerances())
}
