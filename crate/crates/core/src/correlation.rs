//! Periodic and aperiodic correlation, and brute-force checks of the
//! zero-correlation-zone properties of sparse arrays and sequence sets.

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::matrix::SparseQaryMatrix;

/// Relative zero threshold: a correlation counts as zero when
/// `|θ| ≤ ZERO_TOLERANCE · L`.
pub const ZERO_TOLERANCE: f64 = 1e-9;

pub fn zero_tolerance(len: usize) -> f64 {
    ZERO_TOLERANCE * len as f64
}

fn check_lengths(a: &[Complex64], b: &[Complex64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            name: "sequence",
            expected: a.len(),
            got: b.len(),
        });
    }
    if a.is_empty() {
        return Err(invalid("sequences must be non-empty"));
    }
    Ok(())
}

/// Periodic cross-correlation `θ(a, b; u) = Σ_i a_{(i+u) mod L} · b_i*`.
pub fn pccf(a: &[Complex64], b: &[Complex64], u: usize) -> Result<Complex64> {
    check_lengths(a, b)?;
    let len = a.len();
    if u >= len {
        return Err(Error::ShiftOutOfRange {
            shift: u as i64,
            len,
        });
    }
    Ok((0..len).map(|i| a[(i + u) % len] * b[i].conj()).sum())
}

/// Aperiodic cross-correlation `ρ(a, b; u)` for `-L < u < L`.
pub fn aperiodic_ccf(a: &[Complex64], b: &[Complex64], u: i64) -> Result<Complex64> {
    check_lengths(a, b)?;
    let len = a.len();
    if u.unsigned_abs() as usize >= len {
        return Err(Error::ShiftOutOfRange { shift: u, len });
    }
    let s = u.unsigned_abs() as usize;
    Ok(if u >= 0 {
        (0..len - s).map(|i| a[i + s] * b[i].conj()).sum()
    } else {
        (0..len - s).map(|i| a[i] * b[i + s].conj()).sum()
    })
}

/// Which condition of the SZCZ definition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Rows do not share a common non-zero count `M`.
    UnequalWeights,
    /// In-phase autocorrelation differs from `M`.
    AutoPeak,
    /// Out-of-phase autocorrelation inside the zone is non-zero.
    Auto,
    /// Cross-correlation inside the zone (including `u = 0`) is non-zero.
    Cross,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SzczViolation {
    pub kind: ViolationKind,
    pub g: usize,
    pub k: usize,
    pub u: usize,
    pub magnitude: f64,
}

/// Support lists `(column, conj(value))` for each row; correlation cost
/// then scales with the non-zero count instead of `L`.
struct Prepared {
    len: usize,
    dense: Vec<Vec<Complex64>>,
    support: Vec<Vec<(usize, Complex64)>>,
}

impl Prepared {
    fn new(c: &SparseQaryMatrix) -> Self {
        let dense: Vec<Vec<Complex64>> = (0..c.rows()).map(|g| c.row_complex(g)).collect();
        let support = dense
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| v.norm_sqr() > 0.0)
                    .map(|(i, v)| (i, v.conj()))
                    .collect()
            })
            .collect();
        Prepared {
            len: c.cols(),
            dense,
            support,
        }
    }

    fn theta(&self, g: usize, k: usize, u: usize) -> Complex64 {
        let row = &self.dense[g];
        self.support[k]
            .iter()
            .map(|&(i, v)| row[(i + u) % self.len] * v)
            .sum()
    }

    /// First failing `(g, k)` pair at shift `u`, if any.
    fn check_shift(&self, u: usize, weight: usize, tol: f64) -> Option<SzczViolation> {
        let n = self.dense.len();
        for g in 0..n {
            for k in 0..n {
                let theta = self.theta(g, k, u);
                let (kind, dev) = match (g == k, u.is_multiple_of(self.len)) {
                    (true, true) => (ViolationKind::AutoPeak, (theta - weight as f64).norm()),
                    (true, false) => (ViolationKind::Auto, theta.norm()),
                    (false, _) => (ViolationKind::Cross, theta.norm()),
                };
                if dev > tol {
                    return Some(SzczViolation {
                        kind,
                        g,
                        k,
                        u,
                        magnitude: theta.norm(),
                    });
                }
            }
        }
        None
    }
}

fn weight_violation(c: &SparseQaryMatrix) -> std::result::Result<usize, SzczViolation> {
    let weights = c.row_weights();
    let first = weights[0];
    match weights.iter().position(|&w| w != first) {
        None => Ok(first),
        Some(g) => Err(SzczViolation {
            kind: ViolationKind::UnequalWeights,
            g: 0,
            k: g,
            u: 0,
            magnitude: weights[g] as f64,
        }),
    }
}

/// Checks that `c` is an SZCZ array of width `z`: in-phase autocorrelation
/// `M`, zero autocorrelation for `1 ≤ |u| ≤ z` and zero cross-correlation
/// for `|u| ≤ z`.
///
/// Negative shifts are covered through `θ(g, k; −u) = θ(k, g; u)*`, so every
/// ordered row pair is scanned over `u = 0..=z`.
pub fn verify_szcz(c: &SparseQaryMatrix, z: usize) -> std::result::Result<(), SzczViolation> {
    let weight = weight_violation(c)?;
    let prepared = Prepared::new(c);
    let tol = zero_tolerance(c.cols());
    for u in 0..=z {
        if let Some(v) = prepared.check_shift(u, weight, tol) {
            return Err(v);
        }
    }
    Ok(())
}

/// Largest `Z` for which [`verify_szcz`] passes, capped at `L − 1`.
///
/// `None` when even `Z = 0` fails (distinct rows overlap in phase, or rows
/// carry unequal weight).
pub fn measure_zcz_width(c: &SparseQaryMatrix) -> Option<usize> {
    let weight = weight_violation(c).ok()?;
    let prepared = Prepared::new(c);
    let tol = zero_tolerance(c.cols());
    if prepared.check_shift(0, weight, tol).is_some() {
        return None;
    }
    for u in 1..c.cols() {
        if prepared.check_shift(u, weight, tol).is_some() {
            return Some(u - 1);
        }
    }
    Some(c.cols() - 1)
}

/// Criterion C1: every column holds exactly one non-zero entry.
pub fn check_c1(c: &SparseQaryMatrix) -> bool {
    (0..c.cols()).all(|i| (0..c.rows()).filter(|&g| c.get(g, i).is_some()).count() == 1)
}

/// Full correlation picture of a matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationReport {
    pub rows: usize,
    pub cols: usize,
    pub q: u32,
    /// `|θ(C_g, C_k; u)|` for `u = 0..L`, indexed by `g * rows + k`.
    pub pccf_magnitudes: Vec<Vec<f64>>,
    pub measured_zcz_width: Option<usize>,
    pub row_weights: Vec<usize>,
    pub sparsity: f64,
    pub c1_satisfied: bool,
    pub zero_tolerance: f64,
}

impl CorrelationReport {
    pub fn magnitudes(&self, g: usize, k: usize) -> &[f64] {
        &self.pccf_magnitudes[g * self.rows + k]
    }
}

pub fn correlation_report(c: &SparseQaryMatrix) -> CorrelationReport {
    let prepared = Prepared::new(c);
    let n = c.rows();
    let pccf_magnitudes = (0..n * n)
        .map(|gk| {
            (0..c.cols())
                .map(|u| prepared.theta(gk / n, gk % n, u).norm())
                .collect()
        })
        .collect();
    let row_weights = c.row_weights();
    let sparsity = c.sparsity();
    if let Some(&m) = row_weights.first().filter(|&&m| row_weights.iter().all(|&w| w == m)) {
        let per_row = (c.cols() - m) as f64 / c.cols() as f64;
        assert!((per_row - sparsity).abs() < 1e-12);
    }
    CorrelationReport {
        rows: n,
        cols: c.cols(),
        q: c.q(),
        pccf_magnitudes,
        measured_zcz_width: measure_zcz_width(c),
        row_weights,
        sparsity,
        c1_satisfied: check_c1(c),
        zero_tolerance: zero_tolerance(c.cols()),
    }
}

/// Checks the cross Z-complementary set conditions with zones
/// `R1 = {1..z}` and `R2 = {L−z..L−1}`: aperiodic autocorrelation sums
/// vanish for `|u| ∈ R1 ∪ R2` and neighbouring cross-correlation sums
/// `Σ ρ(C_i, C_{(i+1) mod N}; u)` vanish for `|u| ∈ R2`. With two sequences
/// this is the cross Z-complementary pair check.
pub fn verify_czcs(set: &[Vec<Complex64>], z: usize) -> Result<bool> {
    if set.len() < 2 {
        return Err(invalid("a complementary set needs at least two sequences"));
    }
    let len = set[0].len();
    for s in set {
        check_lengths(&set[0], s)?;
    }
    for (seq, s) in set.iter().enumerate() {
        if let Some(index) = s.iter().position(|v| (v.norm() - 1.0).abs() > 1e-9) {
            return Err(Error::NotPolyphase { seq, index });
        }
    }
    if z >= len {
        return Err(invalid(format!("zone width {z} must be below length {len}")));
    }
    let tol = zero_tolerance(len);
    let n = set.len();
    let in_r1 = |s: usize| (1..=z).contains(&s);
    let in_r2 = |s: usize| s >= len - z && s < len;

    for s in 1..len {
        let auto = in_r1(s) || in_r2(s);
        let cross = in_r2(s);
        for u in [s as i64, -(s as i64)] {
            if auto {
                let sum: Complex64 = set
                    .iter()
                    .map(|c| aperiodic_ccf(c, c, u))
                    .sum::<Result<Complex64>>()?;
                if sum.norm() > tol {
                    return Ok(false);
                }
            }
            if cross {
                let sum: Complex64 = (0..n)
                    .map(|i| aperiodic_ccf(&set[i], &set[(i + 1) % n], u))
                    .sum::<Result<Complex64>>()?;
                if sum.norm() > tol {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
