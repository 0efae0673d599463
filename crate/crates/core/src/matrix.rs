//! Sparse q-ary arrays whose entries are zero or a power of the primitive
//! q-th root of unity `ξ = exp(2πi/q)`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `ξ^e` for `ξ = exp(2πi/q)`. Multiples of a quarter turn are returned
/// exactly so that binary and quaternary correlations cancel without
/// rounding residue.
pub fn root_of_unity(q: u32, exp: u32) -> Complex64 {
    let e = (exp % q) as u64;
    let q = q as u64;
    if (4 * e).is_multiple_of(q) {
        return match (4 * e) / q {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let angle = 2.0 * PI * e as f64 / q as f64;
    Complex64::new(angle.cos(), angle.sin())
}

fn check_modulus(q: u32) -> Result<()> {
    if q < 2 || !q.is_multiple_of(2) {
        return Err(Error::OddModulus(q));
    }
    Ok(())
}

/// A dense q-ary (polyphase) sequence stored as exponents of `ξ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QarySequence {
    q: u32,
    exponents: Vec<u32>,
}

impl QarySequence {
    pub fn new(q: u32, exponents: Vec<u32>) -> Result<Self> {
        check_modulus(q)?;
        if let Some((col, &exp)) = exponents.iter().enumerate().find(|(_, &e)| e >= q) {
            return Err(Error::ExponentOutOfRange { row: 0, col, exp, q });
        }
        Ok(QarySequence { q, exponents })
    }

    /// Parses a binary sequence written with `+` and `-`.
    pub fn from_signs(signs: &str) -> Result<Self> {
        let exponents = signs
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(0),
                '-' => Ok(1),
                other => Err(Error::InvalidParameters(format!(
                    "unexpected sign character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        QarySequence::new(2, exponents)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.exponents
            .iter()
            .map(|&e| root_of_unity(self.q, e))
            .collect()
    }

    /// Multiplies every entry by `ξ^offset`.
    pub fn rotated(&self, offset: u32) -> QarySequence {
        QarySequence {
            q: self.q,
            exponents: self
                .exponents
                .iter()
                .map(|&e| (e + offset % self.q) % self.q)
                .collect(),
        }
    }
}

/// An `N × L` array over `{0} ∪ {ξ^e}`; `None` is a zero entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseQaryMatrix {
    q: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Option<u32>>,
}

impl SparseQaryMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(q: u32, rows: usize, cols: usize, entries: Vec<Option<u32>>) -> Result<Self> {
        check_modulus(q)?;
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameters(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                name: "entries",
                expected: rows * cols,
                got: entries.len(),
            });
        }
        for (idx, e) in entries.iter().enumerate() {
            if let Some(exp) = *e {
                if exp >= q {
                    return Err(Error::ExponentOutOfRange {
                        row: idx / cols,
                        col: idx % cols,
                        exp,
                        q,
                    });
                }
            }
        }
        Ok(SparseQaryMatrix {
            q,
            rows,
            cols,
            entries,
        })
    }

    /// An all-zero matrix.
    pub fn zeros(q: u32, rows: usize, cols: usize) -> Result<Self> {
        SparseQaryMatrix::new(q, rows, cols, vec![None; rows * cols])
    }

    pub fn from_rows(q: u32, rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let n = rows.len();
        let l = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != l) {
            return Err(Error::LengthMismatch {
                name: "row",
                expected: l,
                got: r.len(),
            });
        }
        SparseQaryMatrix::new(q, n, l, rows.into_iter().flatten().collect())
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, g: usize, i: usize) -> Option<u32> {
        self.entries[g * self.cols + i]
    }

    pub(crate) fn set(&mut self, g: usize, i: usize, value: Option<u32>) {
        debug_assert!(value.is_none_or(|e| e < self.q));
        self.entries[g * self.cols + i] = value;
    }

    pub fn row(&self, g: usize) -> &[Option<u32>] {
        &self.entries[g * self.cols..(g + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Option<u32>] {
        &self.entries
    }

    pub fn value(&self, g: usize, i: usize) -> Complex64 {
        self.get(g, i)
            .map_or(Complex64::new(0.0, 0.0), |e| root_of_unity(self.q, e))
    }

    pub fn row_complex(&self, g: usize) -> Vec<Complex64> {
        (0..self.cols).map(|i| self.value(g, i)).collect()
    }

    /// Non-zero count of row `g`, which is also its energy.
    pub fn row_weight(&self, g: usize) -> usize {
        self.row(g).iter().filter(|e| e.is_some()).count()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows).map(|g| self.row_weight(g)).collect()
    }

    /// Energy `Σ|C_{g,l}|²` of row `g`, computed from the complex values.
    pub fn row_energy(&self, g: usize) -> f64 {
        (0..self.cols).map(|i| self.value(g, i).norm_sqr()).sum()
    }

    /// The shared per-row weight `M`, if all rows agree.
    pub fn common_row_weight(&self) -> Option<usize> {
        let w = self.row_weights();
        let first = w[0];
        w.iter().all(|&x| x == first).then_some(first)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    /// Fraction of zero entries over the whole array.
    pub fn sparsity(&self) -> f64 {
        let total = (self.rows * self.cols) as f64;
        (total - self.nonzero_count() as f64) / total
    }

    /// Positions of present entries per column.
    pub fn column_support(&self, i: usize) -> Vec<usize> {
        (0..self.rows).filter(|&g| self.get(g, i).is_some()).collect()
    }
}

impl fmt::Display for SparseQaryMatrix {
    /// `+`/`-`/`0` for binary arrays, exponents and `.` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in 0..self.rows {
            let line: Vec<String> = self
                .row(g)
                .iter()
                .map(|e| match (self.q, e) {
                    (_, None) if self.q == 2 => "0".to_string(),
                    (_, None) => ".".to_string(),
                    (2, Some(0)) => "+".to_string(),
                    (2, Some(_)) => "-".to_string(),
                    (_, Some(k)) => k.to_string(),
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
