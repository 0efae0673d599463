//! Verification reports and CSV tables.

use std::fmt::Write as _;

use serde::Serialize;
use szcz::correlation::{check_c1, measure_zcz_width, pccf, verify_szcz};
use szcz::sim::{min_nmse, snr_db_to_sigma2, LsEstimator, SimConfig};
use szcz::{Error, SparseQaryMatrix};

/// JSON field order is the struct order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "N")]
    pub rows: usize,
    #[serde(rename = "L")]
    pub cols: usize,
    pub q: u32,
    #[serde(rename = "M")]
    pub row_weights: Vec<usize>,
    pub sparsity: f64,
    pub c1: bool,
    /// −1 when even the in-phase conditions fail.
    pub measured_zcz_width: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_at_z: Option<bool>,
}

impl VerifyReport {
    pub fn new(m: &SparseQaryMatrix, z: Option<usize>) -> Self {
        VerifyReport {
            rows: m.rows(),
            cols: m.cols(),
            q: m.q(),
            row_weights: m.row_weights(),
            sparsity: m.sparsity(),
            c1: check_c1(m),
            measured_zcz_width: measure_zcz_width(m).map_or(-1, |w| w as i64),
            z,
            pass_at_z: z.map(|z| z < m.cols() && verify_szcz(m, z).is_ok()),
        }
    }

    /// What `--strict` treats as failure.
    pub fn passed(&self) -> bool {
        self.c1 && self.measured_zcz_width >= 0 && self.pass_at_z != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NmseRow {
    pub lambda: usize,
    pub snr_db: f64,
    /// `None` when the Gram matrix is singular.
    pub analytic_nmse: Option<f64>,
    pub empirical_nmse: Option<f64>,
    pub min_nmse: f64,
    pub trials: usize,
    pub seed: u64,
}

impl NmseRow {
    pub fn status(&self) -> &'static str {
        if self.analytic_nmse.is_some() {
            "ok"
        } else {
            "singular"
        }
    }
}

pub const NMSE_HEADER: &str = "lambda,snr_db,analytic_nmse,empirical_nmse,min_nmse,trials,seed,status";

fn num(x: Option<f64>) -> String {
    x.map_or(String::new(), |v| format!("{v:.12e}"))
}

pub fn nmse_csv_line(r: &NmseRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.lambda,
        r.snr_db,
        num(r.analytic_nmse),
        num(r.empirical_nmse),
        num(Some(r.min_nmse)),
        r.trials,
        r.seed,
        r.status()
    )
}

/// One row per (λ, SNR) point, λ outermost.
pub fn nmse_rows(
    m: &SparseQaryMatrix,
    lambdas: &[usize],
    snr_db: &[f64],
    trials: usize,
    seed: u64,
    nr: usize,
) -> anyhow::Result<Vec<NmseRow>> {
    let weight = m
        .common_row_weight()
        .ok_or_else(|| anyhow::anyhow!("rows have unequal weights {:?}", m.row_weights()))?;
    let mut out = Vec::new();
    for &lambda in lambdas {
        let est = match LsEstimator::new(m, lambda) {
            Ok(e) => Some(e),
            Err(Error::Singular { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        for &snr in snr_db {
            let sigma2 = snr_db_to_sigma2(snr);
            let row = match &est {
                Some(est) => {
                    let r = est.simulate(&SimConfig {
                        nr,
                        lambda,
                        sigma2,
                        trials,
                        seed,
                    })?;
                    NmseRow {
                        lambda,
                        snr_db: snr,
                        analytic_nmse: Some(r.analytic_nmse),
                        empirical_nmse: Some(r.empirical_nmse),
                        min_nmse: r.min_nmse,
                        trials,
                        seed,
                    }
                }
                None => NmseRow {
                    lambda,
                    snr_db: snr,
                    analytic_nmse: None,
                    empirical_nmse: None,
                    min_nmse: min_nmse(lambda, weight, sigma2),
                    trials,
                    seed,
                },
            };
            out.push(row);
        }
    }
    Ok(out)
}

pub fn nmse_csv(rows: &[NmseRow]) -> String {
    let mut s = format!("{NMSE_HEADER}\n");
    for r in rows {
        s.push_str(&nmse_csv_line(r));
        s.push('\n');
    }
    s
}

/// `u,abs_theta` for `u = 0..shifts`.
pub fn corr_csv(m: &SparseQaryMatrix, g: usize, k: usize, shifts: usize) -> anyhow::Result<String> {
    for r in [g, k] {
        if r >= m.rows() {
            return Err(Error::RowOutOfRange { g: r, rows: m.rows() }.into());
        }
    }
    anyhow::ensure!(shifts <= m.cols(), "at most L = {} shifts, asked for {shifts}", m.cols());
    let (a, b) = (m.row_complex(g), m.row_complex(k));
    let mut s = String::from("u,abs_theta\n");
    for u in 0..shifts {
        let t = pccf(&a, &b, u)?.norm();
        writeln!(s, "{u},{t:.12e}").unwrap();
    }
    Ok(s)
}
