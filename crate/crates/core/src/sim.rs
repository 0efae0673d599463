//! Least-squares channel estimation over a frequency-selective MIMO
//! channel with `λ + 1` taps, using a training matrix and its cyclic
//! shifts.
//!
//! The cyclic prefix is modelled implicitly: the received block is
//! `Y = H·X + V`, where `X` stacks the right cyclic shifts `C^(0)..C^(λ)`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::linalg::ComplexMatrix;
use crate::matrix::SparseQaryMatrix;

/// Right cyclic shift by `u`: output column `i` is input column `(i − u) mod L`.
pub fn cyclic_shift(c: &SparseQaryMatrix, u: usize) -> Result<SparseQaryMatrix> {
    let len = c.cols();
    if u >= len {
        return Err(Error::ShiftOutOfRange {
            shift: u as i64,
            len,
        });
    }
    let entries = (0..c.rows() * len)
        .map(|idx| {
            let (g, i) = (idx / len, idx % len);
            c.get(g, (i + len - u) % len)
        })
        .collect();
    SparseQaryMatrix::new(c.q(), c.rows(), len, entries)
}

/// `X = (C^(0); C^(1); ...; C^(λ))`, of size `N_t(λ+1) × L`.
pub fn build_shift_stack(c: &SparseQaryMatrix, lambda: usize) -> Result<ComplexMatrix> {
    let (nt, len) = (c.rows(), c.cols());
    if lambda + 1 > len {
        return Err(invalid(format!(
            "channel memory {lambda} needs lambda + 1 <= L = {len}"
        )));
    }
    let mut x = ComplexMatrix::zeros(nt * (lambda + 1), len);
    for u in 0..=lambda {
        for g in 0..nt {
            for i in 0..len {
                x[(u * nt + g, i)] = c.value(g, (i + len - u) % len);
            }
        }
    }
    Ok(x)
}

/// `X·Xᴴ`.
pub fn gram(x: &ComplexMatrix) -> ComplexMatrix {
    x.gram()
}

/// `σ² / N_t · Tr((X·Xᴴ)⁻¹)`.
pub fn analytic_nmse(c: &SparseQaryMatrix, lambda: usize, sigma2: f64) -> Result<f64> {
    let x = build_shift_stack(c, lambda)?;
    let inv = gram(&x).invert_hermitian()?;
    nmse_from_inverse(&inv, c.rows(), sigma2)
}

fn nmse_from_inverse(inv: &ComplexMatrix, nt: usize, sigma2: f64) -> Result<f64> {
    let tr = inv.trace();
    assert!(
        tr.im.abs() <= 1e-9 * tr.re.abs().max(1.0),
        "trace of a Hermitian inverse must be real"
    );
    Ok(sigma2 / nt as f64 * tr.re)
}

/// `σ² (λ + 1) / M`.
pub fn min_nmse(lambda: usize, weight: usize, sigma2: f64) -> f64 {
    assert!(weight > 0, "row weight must be positive");
    sigma2 * (lambda as f64 + 1.0) / weight as f64
}

/// `σ² = 10^{−SNR/10}`; `+∞` dB maps to a noiseless channel.
pub fn snr_db_to_sigma2(snr_db: f64) -> f64 {
    if snr_db == f64::INFINITY {
        0.0
    } else {
        10f64.powf(-snr_db / 10.0)
    }
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R, variance: f64) -> Complex64 {
    let s = (variance / 2.0).sqrt();
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * s, im * s)
}

/// `H = (H_0, ..., H_λ)`, `N_r × N_t(λ+1)` with i.i.d. `CN(0, 1/(λ+1))` entries.
pub fn draw_channel<R: Rng + ?Sized>(nt: usize, nr: usize, lambda: usize, rng: &mut R) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(nr, nt * (lambda + 1));
    let var = 1.0 / (lambda as f64 + 1.0);
    for r in 0..nr {
        for c in 0..nt * (lambda + 1) {
            h[(r, c)] = complex_gaussian(rng, var);
        }
    }
    h
}

/// Independent generator for one trial, keyed by `(seed, trial)`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    /// Receive antennas.
    pub nr: usize,
    /// Channel memory; the channel has `lambda + 1` taps.
    pub lambda: usize,
    /// Noise variance per receive antenna (SNR = `1/σ²`).
    pub sigma2: f64,
    pub trials: usize,
    pub seed: u64,
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.nr == 0 {
            return Err(invalid("at least one receive antenna is required"));
        }
        if !(self.sigma2 >= 0.0 && self.sigma2.is_finite()) {
            return Err(invalid(format!("noise variance {} must be finite and >= 0", self.sigma2)));
        }
        if self.trials == 0 {
            return Err(invalid("at least one trial is required"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NmseResult {
    pub analytic_nmse: f64,
    pub empirical_nmse: f64,
    pub min_nmse: f64,
    /// 1-norm condition number of `X·Xᴴ`.
    pub condition_estimate: f64,
    pub achieved_min: bool,
}

/// LS estimator `Ĥ = Y·Xᴴ(X·Xᴴ)⁻¹` for a fixed training matrix and channel
/// memory. The projector `Xᴴ(X·Xᴴ)⁻¹` is formed once.
#[derive(Debug, Clone)]
pub struct LsEstimator {
    nt: usize,
    lambda: usize,
    weight: usize,
    stack: ComplexMatrix,
    gram_inverse: ComplexMatrix,
    projector: ComplexMatrix,
    condition: f64,
}

impl LsEstimator {
    pub fn new(c: &SparseQaryMatrix, lambda: usize) -> Result<Self> {
        let weight = c.common_row_weight().ok_or_else(|| {
            let w = c.row_weights();
            Error::UnequalRowEnergy {
                min: *w.iter().min().unwrap(),
                max: *w.iter().max().unwrap(),
            }
        })?;
        if weight == 0 {
            return Err(invalid("training matrix has no energy"));
        }
        let stack = build_shift_stack(c, lambda)?;
        let g = gram(&stack);
        let gram_inverse = g.invert_hermitian()?;
        let projector = stack.conj_transpose().mul(&gram_inverse)?;
        let condition = g.norm_one() * gram_inverse.norm_one();
        Ok(LsEstimator {
            nt: c.rows(),
            lambda,
            weight,
            stack,
            gram_inverse,
            projector,
            condition,
        })
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn analytic_nmse(&self, sigma2: f64) -> f64 {
        nmse_from_inverse(&self.gram_inverse, self.nt, sigma2).expect("trace is finite")
    }

    pub fn min_nmse(&self, sigma2: f64) -> f64 {
        min_nmse(self.lambda, self.weight, sigma2)
    }

    pub fn condition_estimate(&self) -> f64 {
        self.condition
    }

    /// `Ĥ = Y·Xᴴ(X·Xᴴ)⁻¹`.
    pub fn estimate(&self, y: &ComplexMatrix) -> Result<ComplexMatrix> {
        y.mul(&self.projector)
    }

    /// Squared estimation error `‖Ĥ − H‖²_F` of one trial.
    pub fn trial_error(&self, nr: usize, sigma2: f64, rng: &mut ChaCha8Rng) -> Result<f64> {
        let h = draw_channel(self.nt, nr, self.lambda, rng);
        let mut y = h.mul(&self.stack)?;
        if sigma2 > 0.0 {
            for r in 0..y.rows() {
                for c in 0..y.cols() {
                    y[(r, c)] += complex_gaussian(rng, sigma2);
                }
            }
        }
        let h_hat = self.estimate(&y)?;
        Ok(h_hat.sub(&h)?.frobenius_norm_sqr())
    }

    /// Monte-Carlo NMSE. Trial `t` draws from `trial_rng(seed, t)` and the
    /// reduction runs in trial order, so results do not depend on the
    /// number of worker threads.
    pub fn simulate(&self, cfg: &SimConfig) -> Result<NmseResult> {
        cfg.validate()?;
        if cfg.lambda != self.lambda {
            return Err(invalid(format!(
                "estimator built for lambda = {} but config has {}",
                self.lambda, cfg.lambda
            )));
        }
        let errors: Vec<f64> = (0..cfg.trials as u64)
            .into_par_iter()
            .map(|t| self.trial_error(cfg.nr, cfg.sigma2, &mut trial_rng(cfg.seed, t)))
            .collect::<Result<_>>()?;
        let mut acc = CompensatedSum::default();
        for e in errors {
            acc.add(e);
        }
        let empirical = acc.value() / cfg.trials as f64 / (cfg.nr * self.nt) as f64;
        if !empirical.is_finite() {
            return Err(Error::NonFinite);
        }
        let analytic = self.analytic_nmse(cfg.sigma2);
        let minimum = self.min_nmse(cfg.sigma2);
        Ok(NmseResult {
            analytic_nmse: analytic,
            empirical_nmse: empirical,
            min_nmse: minimum,
            condition_estimate: self.condition,
            achieved_min: (analytic - minimum).abs() <= 1e-9 * minimum,
        })
    }
}

/// Builds the estimator for `cfg.lambda` and runs [`LsEstimator::simulate`].
pub fn simulate_ls(c: &SparseQaryMatrix, cfg: &SimConfig) -> Result<NmseResult> {
    cfg.validate()?;
    LsEstimator::new(c, cfg.lambda)?.simulate(cfg)
}
