//! Minimization of the X-quadrature variance of generalized squeezed-vacuum
//! superpositions over real weight factors, at fixed squeezing parameters.
//!
//! Two independent methods are provided. `minimize_simplex` runs a seeded
//! multi-start Nelder–Mead descent on the free weights (one weight is pinned
//! to 1 as the gauge). `minimize_eigen` exploits that ⟨X⟩ = 0 for these
//! superpositions, so the variance is the Rayleigh quotient
//! (wᵀAw)/(wᵀSw) with A_{ij} = ⟨ξᵢ|X²|ξⱼ⟩ and S the overlap kernel
//! 1/√cosh(rᵢ − rⱼ); its smallest generalized eigenvalue is the global
//! minimum over real weights, which bounds what the simplex can find.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fock::{cross_moment, FockState};
use crate::squeezing::quadrature_variance;
use crate::states::{svs_overlap_oracle, svs_superposition, squeezed_vacuum, SqueezeParam};
use crate::tol::{DEGENERACY_FLOOR, OVERLAP_EIGENVALUE_FLOOR};

/// Fixed squeezing parameters plus optimizer controls.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationProblem {
    r_list: Vec<f64>,
    gauge: usize,
    restarts: usize,
    seed: u64,
}

impl OptimizationProblem {
    /// Problem over the given squeezing parameters with the last weight
    /// gauge-fixed to 1, 32 restarts, seed 0.
    pub fn new(r_list: Vec<f64>) -> Result<Self> {
        if r_list.is_empty() {
            return Err(Error::InvalidParameter(
                "optimization needs at least one squeezing parameter".into(),
            ));
        }
        if r_list.iter().any(|r| !r.is_finite() || *r < 0.0 || *r > 3.0) {
            return Err(Error::InvalidParameter(
                "squeezing parameters must lie in [0, 3]".into(),
            ));
        }
        let gauge = r_list.len() - 1;
        Ok(Self {
            r_list,
            gauge,
            restarts: 32,
            seed: 0,
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_restarts(mut self, restarts: usize) -> Result<Self> {
        if restarts == 0 {
            return Err(Error::InvalidParameter("restarts must be positive".into()));
        }
        self.restarts = restarts;
        Ok(self)
    }

    pub fn with_gauge(mut self, gauge: usize) -> Result<Self> {
        if gauge >= self.r_list.len() {
            return Err(Error::InvalidParameter(format!(
                "gauge index {gauge} out of range for {} components",
                self.r_list.len()
            )));
        }
        self.gauge = gauge;
        Ok(self)
    }

    pub fn r_list(&self) -> &[f64] {
        &self.r_list
    }

    pub fn gauge(&self) -> usize {
        self.gauge
    }

    pub fn restarts(&self) -> usize {
        self.restarts
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Which route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Simplex,
    Eigen,
}

/// Optimizer output in the gauge-fixed parameterization.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    /// Full weight vector with the gauge weight equal to +1.
    pub weights: Vec<f64>,
    /// X-quadrature variance at those weights.
    pub variance: f64,
    pub method: Method,
    pub iterations: usize,
    pub converged: bool,
}

/// Brute-force variance of the normalized superposition at the given
/// weights, through the truncated Fock path.
pub fn objective(problem: &OptimizationProblem, weights: &[f64]) -> Result<f64> {
    if weights.len() != problem.r_list.len() {
        return Err(Error::InvalidParameter(format!(
            "{} weights for {} components",
            weights.len(),
            problem.r_list.len()
        )));
    }
    let state = svs_superposition(&problem.r_list, weights)?;
    quadrature_variance(&state, 0.0)
}

/// Precomputed component amplitudes for fast repeated objective evaluation.
/// Identical arithmetic to [`objective`]; the components (even photon
/// support) force ⟨a⟩ = 0, so only ⟨a†a⟩ and ⟨a²⟩ enter.
struct ComponentCache {
    amps: Vec<Vec<C64>>,
    len: usize,
}

impl ComponentCache {
    fn build(r_list: &[f64]) -> Result<Self> {
        let states: Vec<FockState> = r_list
            .iter()
            .map(|&r| squeezed_vacuum(SqueezeParam::real(r)?))
            .collect::<Result<_>>()?;
        let len = states
            .iter()
            .map(|s| s.amplitudes().len())
            .max()
            .expect("nonempty");
        Ok(Self {
            amps: states
                .iter()
                .map(|s| {
                    let mut v = s.amplitudes().to_vec();
                    v.resize(len, C64::new(0.0, 0.0));
                    v
                })
                .collect(),
            len,
        })
    }

    fn variance(&self, weights: &[f64]) -> Result<f64> {
        let mut sum = vec![C64::new(0.0, 0.0); self.len];
        for (w, comp) in weights.iter().zip(&self.amps) {
            if *w == 0.0 {
                continue;
            }
            for (acc, a) in sum.iter_mut().zip(comp) {
                *acc += *w * a;
            }
        }
        let norm2: f64 = sum.iter().map(|c| c.norm_sqr()).sum();
        if norm2.sqrt() < DEGENERACY_FLOOR {
            return Err(Error::DegenerateSuperposition);
        }
        let mean_n: f64 = sum
            .iter()
            .enumerate()
            .map(|(n, c)| n as f64 * c.norm_sqr())
            .sum::<f64>()
            / norm2;
        let mut a2 = C64::new(0.0, 0.0);
        for k in 0..self.len.saturating_sub(2) {
            a2 += sum[k].conj() * (((k + 1) * (k + 2)) as f64).sqrt() * sum[k + 2];
        }
        a2 /= norm2;
        Ok(0.25 * (1.0 + 2.0 * mean_n + 2.0 * a2.re))
    }
}

const SIMPLEX_DIAMETER_TOL: f64 = 1e-10;
const SIMPLEX_SPREAD_TOL: f64 = 1e-12;
const SIMPLEX_MAX_ITER: usize = 4000;
const INITIAL_WEIGHT_RANGE: f64 = 3.0;

fn nelder_mead<F: Fn(&[f64]) -> f64>(
    f: &F,
    x0: &[f64],
) -> (Vec<f64>, f64, usize, bool) {
    let d = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(d + 1);
    simplex.push(x0.to_vec());
    for i in 0..d {
        let mut v = x0.to_vec();
        v[i] += 0.5;
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|x| f(x)).collect();

    let mut iterations = 0;
    let mut converged = false;
    while iterations < SIMPLEX_MAX_ITER {
        iterations += 1;
        let mut order: Vec<usize> = (0..=d).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(std::cmp::Ordering::Equal));
        let best = order[0];
        let worst = order[d];
        let second_worst = order[d - 1];

        let diameter = simplex
            .iter()
            .map(|x| {
                x.iter()
                    .zip(&simplex[best])
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max)
            })
            .fold(0.0f64, f64::max);
        let spread = values[worst] - values[best];
        if diameter < SIMPLEX_DIAMETER_TOL && spread < SIMPLEX_SPREAD_TOL {
            converged = true;
            break;
        }

        let mut centroid = vec![0.0; d];
        for (idx, x) in simplex.iter().enumerate() {
            if idx == worst {
                continue;
            }
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi;
            }
        }
        for c in centroid.iter_mut() {
            *c /= d as f64;
        }

        let blend = |from: &[f64], towards: &[f64], t: f64| -> Vec<f64> {
            from.iter()
                .zip(towards)
                .map(|(a, b)| a + t * (b - a))
                .collect()
        };
        // reflection
        let reflected = blend(&simplex[worst], &centroid, 2.0);
        let f_reflected = f(&reflected);
        if f_reflected < values[best] {
            // expansion
            let expanded = blend(&simplex[worst], &centroid, 3.0);
            let f_expanded = f(&expanded);
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
            continue;
        }
        if f_reflected < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
            continue;
        }
        // contraction
        let contracted = blend(&simplex[worst], &centroid, 0.5);
        let f_contracted = f(&contracted);
        if f_contracted < values[worst] {
            simplex[worst] = contracted;
            values[worst] = f_contracted;
            continue;
        }
        // shrink towards best
        let anchor = simplex[best].clone();
        for (idx, x) in simplex.iter_mut().enumerate() {
            if idx == best {
                continue;
            }
            *x = anchor
                .iter()
                .zip(x.iter())
                .map(|(b, xi)| b + 0.5 * (xi - b))
                .collect();
            values[idx] = f(x);
        }
    }

    let best = (0..values.len())
        .min_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(std::cmp::Ordering::Equal))
        .expect("nonempty simplex");
    (simplex[best].clone(), values[best], iterations, converged)
}

fn embed_gauge(free: &[f64], gauge: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(free.len() + 1);
    w.extend_from_slice(&free[..gauge]);
    w.push(1.0);
    w.extend_from_slice(&free[gauge..]);
    w
}

/// Derivative-free multi-start descent on the free weights.
///
/// Never fails outright on flat or rough objectives: when no restart meets
/// the convergence tolerances the best point found is returned with
/// `converged = false`.
pub fn minimize_simplex(problem: &OptimizationProblem) -> Result<OptimizationResult> {
    let l = problem.r_list.len();
    let cache = ComponentCache::build(&problem.r_list)?;
    if l == 1 {
        let weights = vec![1.0];
        let variance = cache.variance(&weights)?;
        return Ok(OptimizationResult {
            weights,
            variance,
            method: Method::Simplex,
            iterations: 0,
            converged: true,
        });
    }
    let d = l - 1;
    let f = |free: &[f64]| -> f64 {
        cache
            .variance(&embed_gauge(free, problem.gauge))
            .unwrap_or(f64::INFINITY)
    };
    let runs: Vec<(f64, usize, Vec<f64>, usize, bool)> = (0..problem.restarts)
        .into_par_iter()
        .map(|k| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(problem.seed.wrapping_add(k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let x0: Vec<f64> = (0..d)
                .map(|_| rng.gen_range(-INITIAL_WEIGHT_RANGE..INITIAL_WEIGHT_RANGE))
                .collect();
            let (x, fx, iters, conv) = nelder_mead(&f, &x0);
            (fx, k, x, iters, conv)
        })
        .collect();
    let best = runs
        .iter()
        .min_by(|a, b| {
            a.0.partial_cmp(&b.0)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.1.cmp(&b.1))
        })
        .expect("at least one restart");
    let weights = embed_gauge(&best.2, problem.gauge);
    let variance = cache.variance(&weights)?;
    Ok(OptimizationResult {
        weights,
        variance,
        method: Method::Simplex,
        iterations: best.3,
        converged: best.4,
    })
}

/// Global minimum over real weights as the smallest generalized eigenvalue
/// of ⟨ξᵢ|X²|ξⱼ⟩ w = λ ⟨ξᵢ|ξⱼ⟩ w, gauge-rescaled so the pinned weight is +1.
pub fn minimize_eigen(problem: &OptimizationProblem) -> Result<OptimizationResult> {
    let l = problem.r_list.len();
    let components: Vec<FockState> = problem
        .r_list
        .iter()
        .map(|&r| squeezed_vacuum(SqueezeParam::real(r)?))
        .collect::<Result<_>>()?;
    let mut s = DMatrix::<f64>::zeros(l, l);
    let mut a = DMatrix::<f64>::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            let kernel = svs_overlap_oracle(problem.r_list[i], problem.r_list[j]);
            s[(i, j)] = kernel;
            let c02 = cross_moment(&components[i], &components[j], 0, 2)?.re;
            let c20 = cross_moment(&components[i], &components[j], 2, 0)?.re;
            let c11 = cross_moment(&components[i], &components[j], 1, 1)?.re;
            a[(i, j)] = 0.25 * (c02 + c20 + 2.0 * c11 + kernel);
        }
    }
    // reduce A w = λ S w to a standard symmetric problem via S^{-1/2}
    let s_eigen = nalgebra::SymmetricEigen::new(s);
    let min_s = s_eigen.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    if min_s < OVERLAP_EIGENVALUE_FLOOR {
        return Err(Error::IllConditionedOverlap {
            eigenvalue: min_s,
            floor: OVERLAP_EIGENVALUE_FLOOR,
        });
    }
    let inv_sqrt = DVector::from_iterator(l, s_eigen.eigenvalues.iter().map(|v| 1.0 / v.sqrt()));
    let q = &s_eigen.eigenvectors;
    let w_half = q * DMatrix::from_diagonal(&inv_sqrt) * q.transpose();
    let mut b = &w_half * &a * &w_half;
    b = (&b + &b.transpose()) * 0.5;
    let b_eigen = nalgebra::SymmetricEigen::new(b);
    let (argmin, lambda) = b_eigen
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.partial_cmp(y.1).unwrap_or(std::cmp::Ordering::Equal))
        .expect("nonempty spectrum");
    let v = b_eigen.eigenvectors.column(argmin);
    let w = &w_half * v;
    let gauge_weight = w[problem.gauge];
    let max_entry = w.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if gauge_weight.abs() < 1e-12 * max_entry {
        return Err(Error::InvalidParameter(
            "optimal weight vector vanishes at the gauge index; choose another gauge".into(),
        ));
    }
    let weights: Vec<f64> = w.iter().map(|x| x / gauge_weight).collect();
    Ok(OptimizationResult {
        weights,
        variance: *lambda,
        method: Method::Eigen,
        iterations: 1,
        converged: true,
    })
}

/// One row of the reference benchmark table: fixed squeezing parameters and
/// the published minimum variance and weight factors.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceRow {
    pub r_list: Vec<f64>,
    pub printed_weights: Vec<f64>,
    pub printed_variance: f64,
    /// Weight vector that actually attains the printed variance, where it
    /// differs from the printed one (row 3 carries a sign misprint on its
    /// first weight; see README).
    pub corrected_weights: Option<Vec<f64>>,
}

/// The four-row reference table.
pub fn reference_table() -> Vec<ReferenceRow> {
    vec![
        ReferenceRow {
            r_list: vec![1.0],
            printed_weights: vec![1.0],
            printed_variance: 0.0338,
            corrected_weights: None,
        },
        ReferenceRow {
            r_list: vec![0.5, 1.0],
            printed_weights: vec![-0.32678, 1.0],
            printed_variance: 0.0268,
            corrected_weights: None,
        },
        ReferenceRow {
            r_list: vec![0.5, 0.8, 1.0],
            printed_weights: vec![-0.2317, -1.0103, 1.0],
            printed_variance: 0.0188,
            corrected_weights: Some(vec![0.2317, -1.0103, 1.0]),
        },
        ReferenceRow {
            r_list: vec![0.5, 0.7, 0.8, 1.0],
            printed_weights: vec![-0.3464, 2.4050, -2.9717, 1.0],
            printed_variance: 0.0151,
            corrected_weights: None,
        },
    ]
}

/// Tolerance for variance comparison against the reference table.
pub const TABLE_TOLERANCE: f64 = 5e-4;

/// Outcome of one reference-table row under both methods.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRowReport {
    pub index: usize,
    pub r_list: Vec<f64>,
    pub printed_weights: Vec<f64>,
    pub printed_variance: f64,
    /// Objective at the printed weights (as printed, no correction).
    pub objective_at_printed: f64,
    pub simplex: OptimizationResult,
    pub eigen: OptimizationResult,
    /// |eigen minimum − printed variance| within [`TABLE_TOLERANCE`].
    pub pass: bool,
    pub note: &'static str,
}

/// Run both methods on every reference-table row and compare against the
/// published minima.
pub fn reproduce_table(seed: u64) -> Result<Vec<TableRowReport>> {
    reference_table()
        .into_iter()
        .enumerate()
        .map(|(index, row)| {
            let problem = OptimizationProblem::new(row.r_list.clone())?.with_seed(seed);
            let objective_at_printed = objective(&problem, &row.printed_weights)?;
            let simplex = minimize_simplex(&problem)?;
            let eigen = minimize_eigen(&problem)?;
            let pass = (eigen.variance - row.printed_variance).abs() <= TABLE_TOLERANCE;
            let note = if row.corrected_weights.is_some() {
                "printed weights carry a sign misprint; the corrected vector attains the printed variance"
            } else {
                ""
            };
            Ok(TableRowReport {
                index: index + 1,
                r_list: row.r_list,
                printed_weights: row.printed_weights,
                printed_variance: row.printed_variance,
                objective_at_printed,
                simplex,
                eigen,
                pass,
                note,
            })
        })
        .collect()
}
