//! Two-dimensional generalized Boolean functions (GBFs) and their
//! restricted arrays.
//!
//! A 2D GBF maps row variables `y_1..y_n` and column variables `x_1..x_m`
//! to `Z_q`. Row index `g` and column index `i` are expanded LSB-first:
//! `g = Σ g_h 2^{h-1}`, `i = Σ i_j 2^{j-1}`. Only quadratic-plus-linear
//! functions are represented.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::SparseQaryMatrix;
use crate::MAX_VARIABLES;

/// A Boolean variable, 1-indexed as in `x_1..x_m`, `y_1..y_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(l) => write!(f, "x{l}"),
            Var::Y(s) => write!(f, "y{s}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticTerm {
    pub a: Var,
    pub b: Var,
    pub coeff: u32,
}

/// Quadratic-plus-linear q-ary function of `n` row and `m` column variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gbf2D {
    q: u32,
    n: usize,
    m: usize,
    quadratic: Vec<QuadraticTerm>,
    linear_x: Vec<u32>,
    linear_y: Vec<u32>,
    constant: u32,
}

impl Gbf2D {
    /// The zero function.
    pub fn new(q: u32, n: usize, m: usize) -> Result<Self> {
        if q < 2 || !q.is_multiple_of(2) {
            return Err(Error::OddModulus(q));
        }
        if n == 0 {
            return Err(Error::NoRowVariables);
        }
        if m + n > MAX_VARIABLES {
            return Err(Error::TooManyVariables(m + n));
        }
        Ok(Gbf2D {
            q,
            n,
            m,
            quadratic: Vec::new(),
            linear_x: vec![0; m],
            linear_y: vec![0; n],
            constant: 0,
        })
    }

    fn check_var(&self, v: Var) -> Result<()> {
        let ok = match v {
            Var::X(l) => (1..=self.m).contains(&l),
            Var::Y(s) => (1..=self.n).contains(&s),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::VariableOutOfRange { var: v.to_string() })
        }
    }

    pub fn add_quadratic(&mut self, a: Var, b: Var, coeff: u32) -> Result<()> {
        self.check_var(a)?;
        self.check_var(b)?;
        if a == b {
            return Err(Error::DegenerateQuadratic(a.to_string()));
        }
        self.quadratic.push(QuadraticTerm {
            a,
            b,
            coeff: coeff % self.q,
        });
        Ok(())
    }

    /// Sets `μ_l`, the coefficient of `x_l`.
    pub fn set_linear_x(&mut self, l: usize, coeff: u32) -> Result<()> {
        self.check_var(Var::X(l))?;
        self.linear_x[l - 1] = coeff % self.q;
        Ok(())
    }

    /// Sets `κ_s`, the coefficient of `y_s`.
    pub fn set_linear_y(&mut self, s: usize, coeff: u32) -> Result<()> {
        self.check_var(Var::Y(s))?;
        self.linear_y[s - 1] = coeff % self.q;
        Ok(())
    }

    pub fn set_constant(&mut self, c: u32) {
        self.constant = c % self.q;
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn quadratic_terms(&self) -> &[QuadraticTerm] {
        &self.quadratic
    }

    pub fn linear_x(&self) -> &[u32] {
        &self.linear_x
    }

    pub fn linear_y(&self) -> &[u32] {
        &self.linear_y
    }

    pub fn constant(&self) -> u32 {
        self.constant
    }

    pub fn rows(&self) -> usize {
        1 << self.n
    }

    pub fn cols(&self) -> usize {
        1 << self.m
    }

    #[inline]
    fn bit(v: Var, g: usize, i: usize) -> u64 {
        match v {
            Var::X(l) => ((i >> (l - 1)) & 1) as u64,
            Var::Y(s) => ((g >> (s - 1)) & 1) as u64,
        }
    }

    fn eval_unchecked(&self, g: usize, i: usize) -> u32 {
        let mut acc = self.constant as u64;
        for t in &self.quadratic {
            acc += t.coeff as u64 * Self::bit(t.a, g, i) * Self::bit(t.b, g, i);
        }
        for (l, &mu) in self.linear_x.iter().enumerate() {
            acc += mu as u64 * ((i >> l) & 1) as u64;
        }
        for (s, &kappa) in self.linear_y.iter().enumerate() {
            acc += kappa as u64 * ((g >> s) & 1) as u64;
        }
        (acc % self.q as u64) as u32
    }

    /// `f_{g,i}`, the function value at row `g` and column `i`.
    pub fn eval(&self, g: usize, i: usize) -> Result<u32> {
        if g >= self.rows() {
            return Err(Error::RowOutOfRange { g, rows: self.rows() });
        }
        if i >= self.cols() {
            return Err(Error::ColumnOutOfRange { i, cols: self.cols() });
        }
        Ok(self.eval_unchecked(g, i))
    }

    /// The fully dense `2^n × 2^m` array of `f`.
    pub fn to_dense_array(&self) -> SparseQaryMatrix {
        let (rows, cols) = (self.rows(), self.cols());
        let entries = (0..rows * cols)
            .map(|idx| Some(self.eval_unchecked(idx / cols, idx % cols)))
            .collect();
        SparseQaryMatrix::new(self.q, rows, cols, entries).expect("dense array is well-formed")
    }

    /// The restricted array: entry `(g, i)` is present iff `i_{w_α} = g_α`
    /// for every `α`.
    pub fn to_sparse_array(&self, w: &Restriction) -> Result<SparseQaryMatrix> {
        for &idx in w.indices() {
            if !(1..=self.m).contains(&idx) {
                return Err(Error::RestrictionOutOfRange { index: idx, m: self.m });
            }
        }
        let limit = self.n.min(self.m);
        if w.len() > limit {
            return Err(Error::RestrictionTooLong { p: w.len(), limit });
        }
        let (rows, cols) = (self.rows(), self.cols());
        let entries = (0..rows * cols)
            .map(|idx| {
                let (g, i) = (idx / cols, idx % cols);
                w.admits(g, i).then(|| self.eval_unchecked(g, i))
            })
            .collect();
        SparseQaryMatrix::new(self.q, rows, cols, entries)
    }
}

/// Ordered restricted-variable indices `W = (w_1, ..., w_p)`, binding
/// `x_{w_α} = y_α`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Restriction {
    indices: Vec<usize>,
}

impl Restriction {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &idx in &indices {
            if idx == 0 {
                return Err(Error::RestrictionOutOfRange { index: 0, m: 0 });
            }
            if !seen.insert(idx) {
                return Err(Error::RestrictionDuplicate(idx));
            }
        }
        Ok(Restriction { indices })
    }

    pub fn empty() -> Self {
        Restriction::default()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Whether column `i` of row `g` survives the restriction.
    pub fn admits(&self, g: usize, i: usize) -> bool {
        self.indices
            .iter()
            .enumerate()
            .all(|(alpha, &w)| (i >> (w - 1)) & 1 == (g >> alpha) & 1)
    }

    /// `(2^p − 1) / 2^p`.
    pub fn sparsity(&self) -> f64 {
        let full = (1u64 << self.len()) as f64;
        (full - 1.0) / full
    }
}
