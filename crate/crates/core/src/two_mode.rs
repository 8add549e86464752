//! Truncated two-mode Fock-space states and operator-word expectations.
//!
//! [`TwoModeFockState`] carries a complex amplitude matrix over |n, m⟩. The
//! two-mode squeezed vacuum and its superpositions live on the diagonal, but
//! the representation is dense and general. Operator expectations are taken
//! of words over the four ladder operators, applied right-to-left in a padded
//! copy of the truncated space so the value is exact for the stored state.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::tol::{Tolerances, TAIL_MARGIN};

/// One letter of a two-mode operator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderOp {
    /// a — annihilate in the first mode.
    A,
    /// a† — create in the first mode.
    ADag,
    /// b — annihilate in the second mode.
    B,
    /// b† — create in the second mode.
    BDag,
}

impl LadderOp {
    /// Hermitian conjugate letter.
    pub fn dagger(self) -> Self {
        match self {
            LadderOp::A => LadderOp::ADag,
            LadderOp::ADag => LadderOp::A,
            LadderOp::B => LadderOp::BDag,
            LadderOp::BDag => LadderOp::B,
        }
    }
}

/// Two-mode state in a truncated |n, m⟩ space.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeFockState {
    amps: Array2<C64>,
    tol: Tolerances,
}

impl TwoModeFockState {
    /// Build from a raw amplitude matrix (row index = photon number of mode
    /// a, column index = mode b). Appends a zero headroom window on both
    /// axes; does not normalize.
    pub fn from_amplitudes(amps: Array2<C64>) -> Result<Self> {
        Self::from_amplitudes_with(amps, Tolerances::default())
    }

    /// Like [`Self::from_amplitudes`] with explicit tolerances.
    pub fn from_amplitudes_with(amps: Array2<C64>, tol: Tolerances) -> Result<Self> {
        let (rows, cols) = amps.dim();
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter("empty amplitude matrix".into()));
        }
        for ((i, j), a) in amps.indexed_iter() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::NonFiniteAmplitude { index: i * cols + j });
            }
        }
        let mut padded = Array2::zeros((rows + TAIL_MARGIN, cols + TAIL_MARGIN));
        padded.slice_mut(ndarray::s![..rows, ..cols]).assign(&amps);
        Ok(Self { amps: padded, tol })
    }

    pub(crate) fn from_grown(amps: Array2<C64>, tol: Tolerances) -> Result<Self> {
        Self { amps, tol }.normalize()
    }

    /// The two-mode vacuum |0, 0⟩.
    pub fn vacuum() -> Self {
        let mut amps = Array2::zeros((1 + TAIL_MARGIN, 1 + TAIL_MARGIN));
        amps[(0, 0)] = C64::new(1.0, 0.0);
        Self {
            amps,
            tol: Tolerances::default(),
        }
    }

    /// Largest representable photon number per mode (rows - 1, cols - 1).
    pub fn cutoffs(&self) -> (usize, usize) {
        let (r, c) = self.amps.dim();
        (r - 1, c - 1)
    }

    /// Amplitude of |n, m⟩; zero beyond the cutoffs.
    pub fn amplitude(&self, n: usize, m: usize) -> C64 {
        self.amps
            .get((n, m))
            .copied()
            .unwrap_or(C64::new(0.0, 0.0))
    }

    /// Dense amplitude matrix.
    pub fn amplitudes(&self) -> &Array2<C64> {
        &self.amps
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>() - 1.0).abs() <= self.tol.norm_tol
    }

    /// Rescale to unit norm by a positive real factor.
    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm();
        if n < 1e-300 {
            return Err(Error::ZeroState);
        }
        Ok(Self {
            amps: self.amps.mapv(|a| a / n),
            tol: self.tol,
        })
    }

    /// Probability mass within `window` slots of either cutoff.
    pub fn boundary_tail_mass(&self, window: usize) -> f64 {
        let (rows, cols) = self.amps.dim();
        let r0 = rows.saturating_sub(window);
        let c0 = cols.saturating_sub(window);
        let mut mass = 0.0;
        for ((i, j), a) in self.amps.indexed_iter() {
            if i >= r0 || j >= c0 {
                mass += a.norm_sqr();
            }
        }
        mass
    }

    pub(crate) fn ensure_headroom(&self, window: usize) -> Result<()> {
        if window == 0 {
            return Ok(());
        }
        let tail_mass = self.boundary_tail_mass(window);
        if tail_mass > self.tol.tail_tol {
            let (r, c) = self.cutoffs();
            return Err(Error::CutoffTooSmall {
                cutoff: r.min(c),
                window,
                tail_mass,
                tail_tol: self.tol.tail_tol,
            });
        }
        Ok(())
    }

    /// Expectation ⟨W⟩ of an operator word, letters applied right-to-left.
    ///
    /// `[ADag, A]` is ⟨a†a⟩, `[A, B]` is ⟨ab⟩. The word is applied in a copy
    /// padded by its length, so the value is exact for the stored truncated
    /// state; Hermitian-conjugate words give conjugate values.
    pub fn word_moment(&self, word: &[LadderOp]) -> Result<C64> {
        self.ensure_headroom(word.len())?;
        let pad = word.len();
        let (rows, cols) = self.amps.dim();
        let mut work: Array2<C64> = Array2::zeros((rows + pad, cols + pad));
        work.slice_mut(ndarray::s![..rows, ..cols]).assign(&self.amps);
        for op in word.iter().rev() {
            work = apply_ladder(&work, *op);
        }
        let mut acc = C64::new(0.0, 0.0);
        for ((i, j), a) in self.amps.indexed_iter() {
            acc += a.conj() * work[(i, j)];
        }
        Ok(acc)
    }

    /// Joint distribution p(n, m) = |c_{n,m}|².
    pub fn joint_distribution(&self) -> Array2<f64> {
        self.amps.mapv(|a| a.norm_sqr())
    }

    /// Copy of the amplitude matrix with `extra` zero slots on both axes.
    pub(crate) fn padded_amplitudes(&self, extra: usize) -> Array2<C64> {
        let (rows, cols) = self.amps.dim();
        let mut out = Array2::zeros((rows + extra, cols + extra));
        out.slice_mut(ndarray::s![..rows, ..cols]).assign(&self.amps);
        out
    }
}

/// One ladder-operator application on a raw amplitude matrix.
pub(crate) fn apply_ladder(amps: &Array2<C64>, op: LadderOp) -> Array2<C64> {
    let (rows, cols) = amps.dim();
    let mut out = Array2::zeros((rows, cols));
    match op {
        LadderOp::A => {
            for n in 0..rows - 1 {
                let w = ((n + 1) as f64).sqrt();
                for m in 0..cols {
                    out[(n, m)] = w * amps[(n + 1, m)];
                }
            }
        }
        LadderOp::ADag => {
            for n in 1..rows {
                let w = (n as f64).sqrt();
                for m in 0..cols {
                    out[(n, m)] = w * amps[(n - 1, m)];
                }
            }
        }
        LadderOp::B => {
            for n in 0..rows {
                for m in 0..cols - 1 {
                    out[(n, m)] = ((m + 1) as f64).sqrt() * amps[(n, m + 1)];
                }
            }
        }
        LadderOp::BDag => {
            for n in 0..rows {
                for m in 1..cols {
                    out[(n, m)] = (m as f64).sqrt() * amps[(n, m - 1)];
                }
            }
        }
    }
    out
}
