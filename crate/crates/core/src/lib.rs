//! Numerical toolkit for squeezed states of light in a truncated Fock space.
//!
//! The crate builds squeezed/coherent/cat/photon-added states and their
//! superpositions, quantifies quadrature and higher-order squeezing,
//! optimizes superposition weights for maximal squeezing, and evaluates
//! normal-ordered energy-density profiles — the machinery needed to probe
//! the correspondence between squeezing and energy-density negativity.
//!
//! Modules:
//!
//! - [`fock`] / [`two_mode`]: the truncated Fock-space substrate — states,
//!   ladder-operator moments, moment tables.
//! - [`states`]: constructors for every state family plus closed-form
//!   overlap oracles.
//! - [`squeezing`]: quadrature variances, Hong–Mandel and Hillery criteria,
//!   and the closed-form variance series used for differential testing.
//! - [`energy`]: normal-ordered ⟨:T₀₀:⟩ profiles over the spacetime phase
//!   and the squeezing/negativity report.
//! - [`optimize`]: weight optimization by Nelder–Mead descent and by the
//!   generalized-eigenvalue route, with the reference benchmark table.
//! - [`report`]: the standard acceptance state grid and the full
//!   squeezing-vs-negativity survey.
//!
//! All state values are immutable after construction and all operations are
//! pure functions, so everything is safe to share across threads; the weight
//! optimizer runs its restarts in parallel.

pub mod energy;
pub mod error;
pub mod fock;
mod math;
pub mod optimize;
pub mod report;
pub mod squeezing;
pub mod states;
pub mod tol;
pub mod two_mode;

pub use error::{Error, Result};
pub use fock::{FockState, MomentTable};
pub use tol::Tolerances;
pub use two_mode::{LadderOp, TwoModeFockState};
