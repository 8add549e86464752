//! Truncated single-mode Fock-space representation.
//!
//! [`FockState`] is the universal state carrier: a dense complex amplitude
//! vector indexed by photon number n = 0..=cutoff. All operations are pure;
//! states are immutable after construction and safe to share across threads.
//!
//! Ladder-operator expectation values ⟨a†ᵖ aᵠ⟩ are evaluated exactly on the
//! truncated space from the matrix elements a|n⟩ = √n |n-1⟩ and
//! a†|n⟩ = √(n+1) |n+1⟩. Constructors keep a zero headroom window above the
//! occupied amplitudes so that operators up to the supported order never lose
//! probability mass over the boundary; the boundary window is re-checked at
//! evaluation time and [`Error::CutoffTooSmall`] is returned when a caller
//! forced a cutoff that chops a state mid-decay.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::tol::{Tolerances, MAX_MOMENT_ORDER, TAIL_MARGIN};

/// Product n (n-1) ... (n-k+1), i.e. n!/(n-k)!, as a float. k is at most
/// [`MAX_MOMENT_ORDER`], so this never overflows.
fn falling_product(n: usize, k: usize) -> f64 {
    ((n - k + 1)..=n).map(|j| j as f64).product()
}

/// Single-mode state in a truncated Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    amps: Vec<C64>,
    tol: Tolerances,
}

impl FockState {
    /// Build a state from raw amplitudes with default tolerances.
    ///
    /// Amplitudes must be finite. A zero headroom window of [`TAIL_MARGIN`]
    /// slots is appended so that exactly-supported states (e.g. Fock states)
    /// admit moments up to the maximum order. The state is not normalized.
    pub fn from_amplitudes(amps: Vec<C64>) -> Result<Self> {
        Self::from_amplitudes_with(amps, Tolerances::default())
    }

    /// Like [`Self::from_amplitudes`] with explicit tolerances.
    pub fn from_amplitudes_with(mut amps: Vec<C64>, tol: Tolerances) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::InvalidParameter("empty amplitude vector".into()));
        }
        for (index, a) in amps.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::NonFiniteAmplitude { index });
            }
        }
        amps.extend(std::iter::repeat(C64::new(0.0, 0.0)).take(TAIL_MARGIN));
        Ok(Self { amps, tol })
    }

    /// Internal path for constructor-grown vectors that already carry their
    /// headroom; normalizes.
    pub(crate) fn from_grown(amps: Vec<C64>, tol: Tolerances) -> Result<Self> {
        Self { amps, tol }.normalize()
    }

    /// The vacuum state |0⟩.
    pub fn vacuum() -> Self {
        Self::fock(0)
    }

    /// The number eigenstate |n⟩.
    pub fn fock(n: usize) -> Self {
        let mut amps = vec![C64::new(0.0, 0.0); n + 1 + TAIL_MARGIN];
        amps[n] = C64::new(1.0, 0.0);
        Self {
            amps,
            tol: Tolerances::default(),
        }
    }

    /// Largest representable photon number.
    pub fn cutoff(&self) -> usize {
        self.amps.len() - 1
    }

    /// Dense amplitude vector, n = 0..=cutoff.
    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    /// Amplitude of |n⟩; zero beyond the cutoff.
    pub fn amplitude(&self, n: usize) -> C64 {
        self.amps.get(n).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    /// Tolerances this state was built with.
    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// Euclidean norm of the amplitude vector.
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// True when Σ|cₙ|² = 1 within `norm_tol`.
    pub fn is_normalized(&self) -> bool {
        (self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>() - 1.0).abs() <= self.tol.norm_tol
    }

    /// Rescale to unit norm by a positive real factor; the global phase is
    /// untouched.
    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm();
        if n < 1e-300 {
            return Err(Error::ZeroState);
        }
        let inv = 1.0 / n;
        Ok(Self {
            amps: self.amps.iter().map(|a| a * inv).collect(),
            tol: self.tol,
        })
    }

    /// ⟨self|other⟩ = Σₙ conj(cₙ) dₙ; states of different cutoffs are padded
    /// with zeros.
    pub fn inner_product(&self, other: &Self) -> C64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Probability mass within `window` slots of the cutoff.
    pub fn boundary_tail_mass(&self, window: usize) -> f64 {
        let len = self.amps.len();
        let start = len.saturating_sub(window);
        self.amps[start..].iter().map(|a| a.norm_sqr()).sum()
    }

    fn ensure_headroom(&self, window: usize) -> Result<()> {
        if window == 0 {
            return Ok(());
        }
        let tail_mass = self.boundary_tail_mass(window);
        if tail_mass > self.tol.tail_tol {
            return Err(Error::CutoffTooSmall {
                cutoff: self.cutoff(),
                window,
                tail_mass,
                tail_tol: self.tol.tail_tol,
            });
        }
        Ok(())
    }

    /// Normally-ordered moment ⟨a†ᵖ aᵠ⟩, exact on the truncated space.
    pub fn moment(&self, p: usize, q: usize) -> Result<C64> {
        if p + q > MAX_MOMENT_ORDER {
            return Err(Error::InvalidParameter(format!(
                "moment order p + q = {} exceeds the supported maximum {}",
                p + q,
                MAX_MOMENT_ORDER
            )));
        }
        self.ensure_headroom(p.max(q))?;
        Ok(raw_moment(&self.amps, &self.amps, p, q))
    }

    /// Mean photon number ⟨a†a⟩.
    pub fn mean_photon_number(&self) -> Result<f64> {
        Ok(self.moment(1, 1)?.re)
    }

    /// pₙ = |cₙ|².
    pub fn photon_number_distribution(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Order-insensitive content hash of the amplitude vector, used to tie a
    /// [`MomentTable`] to its source state.
    pub fn fingerprint(&self) -> u64 {
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        for a in &self.amps {
            a.re.to_bits().hash(&mut hasher);
            a.im.to_bits().hash(&mut hasher);
        }
        hasher.finish()
    }

    /// Copy of the amplitude vector with `extra` zero slots appended.
    pub(crate) fn padded_amplitudes(&self, extra: usize) -> Vec<C64> {
        let mut v = self.amps.clone();
        v.extend(std::iter::repeat(C64::new(0.0, 0.0)).take(extra));
        v
    }
}

/// ⟨bra|a†ᵖ aᵠ|ket⟩ on raw amplitude vectors (zero-padded past their ends).
pub(crate) fn raw_moment(bra: &[C64], ket: &[C64], p: usize, q: usize) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for n in q..ket.len() {
        let bra_idx = n - q + p;
        if bra_idx >= bra.len() {
            continue;
        }
        let k = ket[n];
        if k.norm_sqr() == 0.0 {
            continue;
        }
        let b = bra[bra_idx];
        if b.norm_sqr() == 0.0 {
            continue;
        }
        let weight = (falling_product(n, q) * falling_product(bra_idx, p)).sqrt();
        acc += b.conj() * weight * k;
    }
    acc
}

/// Cross moment ⟨bra|a†ᵖ aᵠ|ket⟩ between two states.
pub(crate) fn cross_moment(bra: &FockState, ket: &FockState, p: usize, q: usize) -> Result<C64> {
    bra.ensure_headroom(p.max(q))?;
    ket.ensure_headroom(p.max(q))?;
    Ok(raw_moment(&bra.amps, &ket.amps, p, q))
}

/// Cached normally-ordered moments ⟨a†ᵖ aᵠ⟩ of one state.
///
/// Entries satisfy entry(p, q) = conj(entry(q, p)) by construction: only the
/// p >= q half is evaluated and the rest is mirrored.
#[derive(Debug, Clone)]
pub struct MomentTable {
    entries: HashMap<(usize, usize), C64>,
    max_order: usize,
    fingerprint: u64,
}

impl MomentTable {
    /// Evaluate all moments with p + q <= max_order.
    pub fn build(state: &FockState, max_order: usize) -> Result<Self> {
        if max_order > MAX_MOMENT_ORDER {
            return Err(Error::InvalidParameter(format!(
                "moment table order {} exceeds the supported maximum {}",
                max_order, MAX_MOMENT_ORDER
            )));
        }
        let mut entries = HashMap::new();
        for p in 0..=max_order {
            for q in 0..=(max_order - p) {
                if p >= q {
                    entries.insert((p, q), state.moment(p, q)?);
                }
            }
        }
        Ok(Self {
            entries,
            max_order,
            fingerprint: state.fingerprint(),
        })
    }

    /// Cached ⟨a†ᵖ aᵠ⟩, or None when p + q exceeds the table order.
    pub fn entry(&self, p: usize, q: usize) -> Option<C64> {
        if p >= q {
            self.entries.get(&(p, q)).copied()
        } else {
            self.entries.get(&(q, p)).map(|m| m.conj())
        }
    }

    /// Largest p + q stored.
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// Fingerprint of the source state.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn normalize_scales_by_positive_factor() {
        let s = FockState::from_amplitudes(vec![c(2.0), c(0.0), c(0.0)]).unwrap();
        let n = s.normalize().unwrap();
        assert!((n.amplitude(0) - c(1.0)).norm() < 1e-15);
        assert!(n.is_normalized());

        let s = FockState::from_amplitudes(vec![c(7.5), c(7.5)]).unwrap();
        let n = s.normalize().unwrap();
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((n.amplitude(0).re - inv_sqrt2).abs() < 1e-15);
        assert!((n.amplitude(1).re - inv_sqrt2).abs() < 1e-15);
    }

    #[test]
    fn normalize_keeps_global_phase() {
        let s = FockState::from_amplitudes(vec![C64::new(0.0, -3.0)]).unwrap();
        let n = s.normalize().unwrap();
        assert!((n.amplitude(0) - C64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn normalize_rejects_zero_state() {
        let s = FockState::from_amplitudes(vec![c(0.0), c(0.0)]).unwrap();
        assert!(matches!(s.normalize(), Err(Error::ZeroState)));
    }

    #[test]
    fn from_amplitudes_rejects_non_finite() {
        let err = FockState::from_amplitudes(vec![c(1.0), C64::new(f64::NAN, 0.0)]);
        assert!(matches!(err, Err(Error::NonFiniteAmplitude { index: 1 })));
    }

    #[test]
    fn vacuum_moments() {
        let v = FockState::vacuum();
        assert_eq!(v.moment(1, 1).unwrap(), c(0.0));
        assert_eq!(v.moment(0, 2).unwrap(), c(0.0));
        assert_eq!(v.moment(0, 0).unwrap(), c(1.0));
    }

    #[test]
    fn fock_state_moments_are_exact() {
        // |1⟩: ⟨a†a⟩ = 1, ⟨a†²a²⟩ = 0, ⟨a a†⟩ = 2
        let f1 = FockState::fock(1);
        assert!((f1.moment(1, 1).unwrap().re - 1.0).abs() < 1e-15);
        assert_eq!(f1.moment(2, 2).unwrap(), c(0.0));
        // |3⟩: ⟨a†²a²⟩ = 3·2 = 6
        let f3 = FockState::fock(3);
        assert!((f3.moment(2, 2).unwrap().re - 6.0).abs() < 1e-12);
    }

    #[test]
    fn moment_hermiticity() {
        let s = FockState::from_amplitudes(vec![
            C64::new(0.2, 0.1),
            C64::new(-0.4, 0.3),
            C64::new(0.5, -0.2),
            C64::new(0.1, 0.6),
        ])
        .unwrap()
        .normalize()
        .unwrap();
        for p in 0..=3 {
            for q in 0..=3 {
                let m = s.moment(p, q).unwrap();
                let mt = s.moment(q, p).unwrap();
                assert!((m - mt.conj()).norm() < 1e-12, "p={p} q={q}");
            }
        }
    }

    #[test]
    fn inner_product_pads_and_conjugates() {
        let a = FockState::from_amplitudes(vec![C64::new(0.6, 0.2), C64::new(0.1, -0.7)])
            .unwrap()
            .normalize()
            .unwrap();
        let b = FockState::from_amplitudes(vec![c(0.3), c(0.4), c(0.5), c(0.1), c(0.9)])
            .unwrap()
            .normalize()
            .unwrap();
        let ab = a.inner_product(&b);
        let ba = b.inner_product(&a);
        assert!((ab - ba.conj()).norm() < 1e-15);
        assert!((a.inner_product(&a).re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn distribution_sums_to_one() {
        let s = FockState::from_amplitudes(vec![c(1.0), c(2.0), c(2.0)])
            .unwrap()
            .normalize()
            .unwrap();
        let p = s.photon_number_distribution();
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        let v = FockState::vacuum().photon_number_distribution();
        assert_eq!(v[0], 1.0);
        assert!(v[1..].iter().all(|&x| x == 0.0));
    }

    #[test]
    fn cutoff_too_small_when_mass_sits_at_boundary() {
        // A state chopped mid-decay: uniform amplitudes all the way to the
        // edge, no headroom left after the padding window is consumed.
        let amps = vec![c(1.0); 40];
        let s = FockState {
            amps,
            tol: Tolerances::default(),
        }
        .normalize()
        .unwrap();
        assert!(matches!(
            s.moment(1, 1),
            Err(Error::CutoffTooSmall { .. })
        ));
    }

    #[test]
    fn moment_order_guard() {
        let v = FockState::vacuum();
        assert!(matches!(
            v.moment(5, 4),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn moment_table_mirrors_conjugates() {
        let s = FockState::from_amplitudes(vec![
            C64::new(0.3, 0.4),
            C64::new(0.5, -0.1),
            C64::new(-0.2, 0.2),
        ])
        .unwrap()
        .normalize()
        .unwrap();
        let table = MomentTable::build(&s, 4).unwrap();
        assert!((table.entry(0, 0).unwrap().re - 1.0).abs() < 1e-12);
        assert!(table.entry(1, 1).unwrap().re >= 0.0);
        for p in 0..=2 {
            for q in 0..=2 {
                let t = table.entry(p, q).unwrap();
                let direct = s.moment(p, q).unwrap();
                assert!((t - direct).norm() < 1e-15);
                assert!((t - table.entry(q, p).unwrap().conj()).norm() < 1e-15);
            }
        }
        assert_eq!(table.entry(5, 0), None);
        assert_eq!(table.fingerprint(), s.fingerprint());
    }
}
