//! Matrix specifications and the canned experiment configurations.

use std::path::PathBuf;

use anyhow::{bail, ensure};
use szcz::construct::*;
use szcz::SparseQaryMatrix;

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixSpec {
    Theorem1(Theorem1Params),
    Theorem2(Theorem2Params),
    CzcpBaseline { nt: usize },
    CzcsBaseline { nt: usize },
}

/// A built matrix with its claimed width, if the source makes one.
#[derive(Debug, Clone)]
pub struct Built {
    pub matrix: SparseQaryMatrix,
    pub claimed_width: Option<usize>,
}

impl MatrixSpec {
    pub fn build(&self) -> szcz::Result<Built> {
        let (matrix, claimed_width) = match self {
            MatrixSpec::Theorem1(p) => {
                let c = construct_theorem1(p)?;
                (c.matrix, Some(c.claimed_width))
            }
            MatrixSpec::Theorem2(p) => {
                let c = construct_theorem2(p)?;
                (c.matrix, Some(c.claimed_width))
            }
            MatrixSpec::CzcpBaseline { nt } => {
                let (d0, d1) = baseline_czcp_pair();
                (czcp_training_matrix(&d0, &d1, *nt)?, Some(4))
            }
            MatrixSpec::CzcsBaseline { nt } => (czcs_training_matrix(&baseline_czcs_set(), *nt)?, Some(3)),
        };
        Ok(Built {
            matrix,
            claimed_width,
        })
    }

    pub fn single_chain_4x32() -> Self {
        MatrixSpec::Theorem1(Theorem1Params::new(2, 5, 2, vec![5, 2, 1, 3, 4]))
    }

    pub fn multi_chain_4x64() -> Self {
        MatrixSpec::Theorem2(Theorem2Params::new(2, 6, 2, vec![vec![6, 4, 3], vec![5, 2, 1]]))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub name: String,
    pub matrix: MatrixSpec,
    pub lambdas: Vec<usize>,
    pub snr_db: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    pub nr: usize,
    pub output: PathBuf,
}

impl ExperimentConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        ensure!(!self.lambdas.is_empty(), "{}: empty lambda grid", self.name);
        ensure!(!self.snr_db.is_empty(), "{}: empty SNR grid", self.name);
        ensure!(self.trials > 0, "{}: trials must be positive", self.name);
        ensure!(self.nr > 0, "{}: nr must be positive", self.name);
        if let Err(e) = self.matrix.build() {
            bail!("{}: {e}", self.name);
        }
        Ok(())
    }
}

/// Named training matrices compared in the NMSE sweeps.
pub fn comparison_matrices() -> Vec<(&'static str, MatrixSpec)> {
    vec![
        ("szcz", MatrixSpec::multi_chain_4x64()),
        ("czcp", MatrixSpec::CzcpBaseline { nt: 4 }),
        ("czcs", MatrixSpec::CzcsBaseline { nt: 4 }),
    ]
}

/// λ = 3..11 at 12 dB.
pub fn lambda_sweep(trials: usize, seed: u64, nr: usize, out: &std::path::Path) -> Vec<ExperimentConfig> {
    comparison_matrices()
        .into_iter()
        .map(|(name, matrix)| ExperimentConfig {
            name: name.to_string(),
            matrix,
            lambdas: (3..=11).collect(),
            snr_db: vec![12.0],
            trials,
            seed,
            nr,
            output: out.join("nmse_vs_lambda.csv"),
        })
        .collect()
}

/// λ = 8 (nine paths), SNR 0..14 dB in 2 dB steps.
pub fn snr_sweep(trials: usize, seed: u64, nr: usize, out: &std::path::Path) -> Vec<ExperimentConfig> {
    comparison_matrices()
        .into_iter()
        .map(|(name, matrix)| ExperimentConfig {
            name: name.to_string(),
            matrix,
            lambdas: vec![8],
            snr_db: (0..=7).map(|k| 2.0 * k as f64).collect(),
            trials,
            seed,
            nr,
            output: out.join("nmse_vs_snr.csv"),
        })
        .collect()
}
