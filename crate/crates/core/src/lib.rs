//! Sparse zero-correlation-zone (SZCZ) training matrices for
//! spatial-modulation channel estimation.
//!
//! * [`gbf`]: 2D generalized Boolean functions and their restricted arrays.
//! * [`correlation`]: periodic/aperiodic correlation and brute-force SZCZ,
//!   C1 and CZCS/CZCP checks.
//! * [`construct`]: restricted-GBF constructions, the perfect CZCP kernel
//!   and the kernel-based baseline matrices.
//! * [`sim`]: shift stacks, LS estimation and analytic/Monte-Carlo NMSE.

pub mod construct;
pub mod correlation;
mod error;
pub mod gbf;
pub mod linalg;
pub mod matrix;
pub mod sim;

pub use error::{Error, Result};
pub use gbf::{Gbf2D, Restriction, Var};
pub use linalg::ComplexMatrix;
pub use matrix::{root_of_unity, QarySequence, SparseQaryMatrix};

/// Largest supported `m + n`; arrays hold at most `2^26` entries.
pub const MAX_VARIABLES: usize = 26;
