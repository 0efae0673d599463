//! SZCZ training matrix constructions from restricted GBFs, the perfect
//! CZCP kernel, and the kernel-based baseline arrangements.
//!
//! Permutations, partitions and coefficient indices are 1-indexed to match
//! the variable names `x_1..x_m`, `y_1..y_n`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::gbf::{Gbf2D, Restriction, Var};
use crate::matrix::{QarySequence, SparseQaryMatrix};
use crate::MAX_VARIABLES;

/// A constructed training matrix together with the width its construction
/// guarantees.
#[derive(Debug, Clone)]
pub struct Construction {
    pub matrix: SparseQaryMatrix,
    pub claimed_width: usize,
    pub function: Gbf2D,
    pub restriction: Restriction,
}

impl Construction {
    /// `(2^n − 1) / 2^n`, the sparsity the construction guarantees.
    pub fn claimed_sparsity(&self) -> f64 {
        self.restriction.sparsity()
    }
}

fn check_common(q: u32, m: usize, n: usize, mu: &[u32], kappa: &[u32]) -> Result<()> {
    if q < 2 || !q.is_multiple_of(2) {
        return Err(Error::OddModulus(q));
    }
    if n == 0 {
        return Err(Error::NoRowVariables);
    }
    if m <= n {
        return Err(invalid(format!("m = {m} must exceed n = {n}")));
    }
    if m + n > MAX_VARIABLES {
        return Err(Error::TooManyVariables(m + n));
    }
    if mu.len() != m + 1 {
        return Err(Error::LengthMismatch {
            name: "mu (mu_0..mu_m)",
            expected: m + 1,
            got: mu.len(),
        });
    }
    if kappa.len() != n {
        return Err(Error::LengthMismatch {
            name: "kappa",
            expected: n,
            got: kappa.len(),
        });
    }
    let top = mu[m] % q;
    if top != 0 && top != q / 2 {
        return Err(invalid(format!("mu_m = {} must be 0 or q/2 = {}", mu[m], q / 2)));
    }
    Ok(())
}

fn check_permutation(name: &str, perm: &[usize], m: usize) -> Result<()> {
    if perm.len() != m {
        return Err(invalid(format!(
            "{name} has {} entries, expected {m}",
            perm.len()
        )));
    }
    let set: BTreeSet<usize> = perm.iter().copied().collect();
    if set.len() != m || set.iter().any(|&v| v == 0 || v > m) {
        return Err(invalid(format!("{name} is not a permutation of 1..={m}")));
    }
    Ok(())
}

/// Adds all linear x/y terms and the constant.
fn add_linear(f: &mut Gbf2D, mu: &[u32], kappa: &[u32]) -> Result<()> {
    f.set_constant(mu[0]);
    for (l, &c) in mu.iter().enumerate().skip(1) {
        f.set_linear_x(l, c)?;
    }
    for (s, &c) in kappa.iter().enumerate() {
        f.set_linear_y(s + 1, c)?;
    }
    Ok(())
}

/// Parameters of the single-chain construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Params {
    pub q: u32,
    pub m: usize,
    pub n: usize,
    /// `π(1), ..., π(m)`.
    pub pi: Vec<usize>,
    /// `μ_0, μ_1, ..., μ_m`.
    pub mu: Vec<u32>,
    /// `κ_1, ..., κ_n`.
    pub kappa: Vec<u32>,
}

impl Theorem1Params {
    /// Parameters with every linear coefficient and the constant zero.
    pub fn new(q: u32, m: usize, n: usize, pi: Vec<usize>) -> Self {
        Theorem1Params {
            q,
            m,
            n,
            pi,
            mu: vec![0; m + 1],
            kappa: vec![0; n],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (q, m, n) = (self.q, self.m, self.n);
        check_common(q, m, n, &self.mu, &self.kappa)?;
        if m < n + 2 {
            return Err(invalid(format!(
                "m = {m} must be at least n + 2 = {} so that pi(2) lies on the chain",
                n + 2
            )));
        }
        check_permutation("pi", &self.pi, m)?;
        if self.pi[0] != m {
            return Err(invalid(format!("pi(1) = {} != m = {m}", self.pi[0])));
        }
        for alpha in 1..=n {
            let v = self.pi[m - n + alpha - 1];
            if !(m - n..m).contains(&v) {
                return Err(invalid(format!(
                    "pi(m-n+{alpha}) = {v} not in {{{}, ..., {}}}",
                    m - n,
                    m - 1
                )));
            }
        }
        Ok(())
    }

    /// `2^{π(2) − 1}`.
    pub fn claimed_width(&self) -> usize {
        1 << (self.pi[1] - 1)
    }
}

/// Builds `f = (q/2) Σ_{l=1}^{m−n−1} x_{π(l)} x_{π(l+1)} + Σ μ_l x_l +
/// Σ κ_s y_s + μ_0` restricted by `x_{π(m−n+α)} = y_α`.
pub fn construct_theorem1(p: &Theorem1Params) -> Result<Construction> {
    p.validate()?;
    let (m, n) = (p.m, p.n);
    let half = p.q / 2;
    let mut f = Gbf2D::new(p.q, n, m)?;
    for l in 0..m - n - 1 {
        f.add_quadratic(Var::X(p.pi[l]), Var::X(p.pi[l + 1]), half)?;
    }
    add_linear(&mut f, &p.mu, &p.kappa)?;
    let restriction = Restriction::new(p.pi[m - n..].to_vec())?;
    let matrix = f.to_sparse_array(&restriction)?;
    Ok(Construction {
        matrix,
        claimed_width: p.claimed_width(),
        function: f,
        restriction,
    })
}

/// Parameters of the multi-chain construction. Block `α` is the ordering
/// `π_α(1), ..., π_α(m_α)` of the partition set `I_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Params {
    pub q: u32,
    pub m: usize,
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
    pub mu: Vec<u32>,
    pub kappa: Vec<u32>,
}

impl Theorem2Params {
    pub fn new(q: u32, m: usize, n: usize, blocks: Vec<Vec<usize>>) -> Self {
        Theorem2Params {
            q,
            m,
            n,
            blocks,
            mu: vec![0; m + 1],
            kappa: vec![0; n],
        }
    }

    /// Pairs a partition `I_1..I_n` with bijections `π_α`, checking that each
    /// ordering enumerates exactly its set.
    pub fn from_partition(
        q: u32,
        m: usize,
        n: usize,
        partition: &[Vec<usize>],
        orderings: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if partition.len() != orderings.len() {
            return Err(invalid(format!(
                "partition has {} blocks but {} orderings were given",
                partition.len(),
                orderings.len()
            )));
        }
        for (alpha, (set, order)) in partition.iter().zip(&orderings).enumerate() {
            let a: BTreeSet<_> = set.iter().collect();
            let b: BTreeSet<_> = order.iter().collect();
            if a != b || order.len() != set.len() || set.len() != a.len() {
                return Err(invalid(format!(
                    "pi_{} is not a bijection onto I_{}",
                    alpha + 1,
                    alpha + 1
                )));
            }
        }
        Ok(Theorem2Params::new(q, m, n, orderings))
    }

    pub fn validate(&self) -> Result<()> {
        let (q, m, n) = (self.q, self.m, self.n);
        check_common(q, m, n, &self.mu, &self.kappa)?;
        if self.blocks.len() != n {
            return Err(invalid(format!(
                "partition has {} blocks, expected n = {n}",
                self.blocks.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for (alpha, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(invalid(format!("I_{} is empty", alpha + 1)));
            }
            for &v in block {
                if v == 0 || v > m {
                    return Err(invalid(format!("index {v} in I_{} outside 1..={m}", alpha + 1)));
                }
                if !seen.insert(v) {
                    return Err(invalid(format!("index {v} appears in more than one block")));
                }
            }
            if block[0] != m - alpha {
                return Err(invalid(format!(
                    "pi_{}(1) = {} != m - {} + 1 = {}",
                    alpha + 1,
                    block[0],
                    alpha + 1,
                    m - alpha
                )));
            }
        }
        if seen.len() != m {
            return Err(invalid(format!("blocks do not cover 1..={m}")));
        }
        if self.blocks[0].len() < 2 {
            return Err(invalid("m_1 must be at least 2 so that pi_1(2) exists"));
        }
        Ok(())
    }

    /// `2^{π_1(2) − 1}`.
    pub fn claimed_width(&self) -> usize {
        1 << (self.blocks[0][1] - 1)
    }
}

/// Builds `f = (q/2) Σ_α [Σ_{β=1}^{m_α−1} x_{π_α(β)} x_{π_α(β+1)} +
/// x_{π_α(m_α)} y_α] + Σ μ_l x_l + Σ κ_s y_s + μ_0` restricted by
/// `x_{π_α(m_α)} = y_α`.
pub fn construct_theorem2(p: &Theorem2Params) -> Result<Construction> {
    p.validate()?;
    let half = p.q / 2;
    let mut f = Gbf2D::new(p.q, p.n, p.m)?;
    for (alpha, block) in p.blocks.iter().enumerate() {
        for pair in block.windows(2) {
            f.add_quadratic(Var::X(pair[0]), Var::X(pair[1]), half)?;
        }
        let last = *block.last().expect("validated non-empty");
        f.add_quadratic(Var::X(last), Var::Y(alpha + 1), half)?;
    }
    add_linear(&mut f, &p.mu, &p.kappa)?;
    let tail = p.blocks.iter().map(|b| *b.last().unwrap()).collect();
    let restriction = Restriction::new(tail)?;
    let matrix = f.to_sparse_array(&restriction)?;
    Ok(Construction {
        matrix,
        claimed_width: p.claimed_width(),
        function: f,
        restriction,
    })
}

/// The perfect q-ary CZCP `(f, f + (q/2) x_{m'})` of length `2^{m'}` with
/// `f = (q/2) Σ_{l=1}^{m'−1} x_{π(l)} x_{π(l+1)} + Σ μ_l x_l + μ_0`.
///
/// `mu` holds `μ_0, ..., μ_{m'}`.
pub fn perfect_czcp_kernel(
    m_prime: usize,
    q: u32,
    pi: &[usize],
    mu: &[u32],
) -> Result<(QarySequence, QarySequence)> {
    if q < 2 || !q.is_multiple_of(2) {
        return Err(Error::OddModulus(q));
    }
    if m_prime == 0 || m_prime > MAX_VARIABLES {
        return Err(invalid(format!("kernel length exponent {m_prime} out of range")));
    }
    check_permutation("pi", pi, m_prime)?;
    if pi[0] != m_prime {
        return Err(invalid(format!("pi(1) = {} != m' = {m_prime}", pi[0])));
    }
    if mu.len() != m_prime + 1 {
        return Err(Error::LengthMismatch {
            name: "mu (mu_0..mu_m')",
            expected: m_prime + 1,
            got: mu.len(),
        });
    }
    let half = (q / 2) as u64;
    let qq = q as u64;
    let bit = |i: usize, var: usize| ((i >> (var - 1)) & 1) as u64;
    let first: Vec<u32> = (0..1usize << m_prime)
        .map(|i| {
            let mut acc = mu[0] as u64;
            for w in pi.windows(2) {
                acc += half * bit(i, w[0]) * bit(i, w[1]);
            }
            for (l, &c) in mu.iter().enumerate().skip(1) {
                acc += c as u64 * bit(i, l);
            }
            (acc % qq) as u32
        })
        .collect();
    let second = first
        .iter()
        .enumerate()
        .map(|(i, &e)| ((e as u64 + half * bit(i, m_prime)) % qq) as u32)
        .collect();
    Ok((QarySequence::new(q, first)?, QarySequence::new(q, second)?))
}

fn check_antennas(nt: usize) -> Result<()> {
    if nt == 0 || !nt.is_power_of_two() {
        return Err(invalid(format!("antenna count {nt} must be a power of two")));
    }
    Ok(())
}

/// Places kernel sequence `j` of row `g` at column `j·nt·len + g·len`.
fn arrange(kernels: &[&QarySequence], nt: usize) -> Result<SparseQaryMatrix> {
    check_antennas(nt)?;
    let first = kernels[0];
    for k in kernels {
        if k.len() != first.len() {
            return Err(Error::LengthMismatch {
                name: "kernel sequence",
                expected: first.len(),
                got: k.len(),
            });
        }
        if k.q() != first.q() {
            return Err(invalid("kernel sequences use different moduli"));
        }
    }
    let len = first.len();
    if len == 0 {
        return Err(invalid("kernel sequences must be non-empty"));
    }
    let cols = kernels.len() * nt * len;
    let mut c = SparseQaryMatrix::zeros(first.q(), nt, cols)?;
    for g in 0..nt {
        for (j, k) in kernels.iter().enumerate() {
            let offset = j * nt * len + g * len;
            for (i, &e) in k.exponents().iter().enumerate() {
                c.set(g, offset + i, Some(e));
            }
        }
    }
    Ok(c)
}

/// The CZCP-based training matrix (block-diagonal `D0` then `D1`).
pub fn czcp_training_matrix(
    d0: &QarySequence,
    d1: &QarySequence,
    nt: usize,
) -> Result<SparseQaryMatrix> {
    arrange(&[d0, d1], nt)
}

/// The CZCS-based training matrix: `s_j` of row `g` at `j·nt·|s|+g·|s|`.
pub fn czcs_training_matrix(set: &[QarySequence], nt: usize) -> Result<SparseQaryMatrix> {
    if set.is_empty() {
        return Err(invalid("complementary set is empty"));
    }
    let refs: Vec<&QarySequence> = set.iter().collect();
    arrange(&refs, nt)
}

/// The perfect (8, 4)-CZCP used as the CZCP baseline kernel.
pub fn baseline_czcp_pair() -> (QarySequence, QarySequence) {
    (
        QarySequence::from_signs("+++-++-+").unwrap(),
        QarySequence::from_signs("+++---+-").unwrap(),
    )
}

/// The length-4 CZCS of set size 4 used as the CZCS baseline kernel.
pub fn baseline_czcs_set() -> Vec<QarySequence> {
    ["+-++", "+++-", "+-++", "---+"]
        .iter()
        .map(|s| QarySequence::from_signs(s).unwrap())
        .collect()
}

/// Canonical single-chain parameters that collapse to the CZCP arrangement:
/// `π = (m, m−n−1, m−n−2, ..., 1, m−n, ..., m−1)`.
///
/// `kernel_mu` holds `μ_0..μ_{m'}` with `m' = m − n − 1`; `mu_top` is `μ_m`.
/// Tail and row-variable coefficients are zero.
pub fn corollary1_params(
    q: u32,
    m: usize,
    n: usize,
    kernel_mu: &[u32],
    mu_top: u32,
) -> Result<Theorem1Params> {
    if n == 0 || m < n + 3 {
        return Err(invalid(format!("need m >= n + 3, got m = {m}, n = {n}")));
    }
    let m_prime = m - n - 1;
    if kernel_mu.len() != m_prime + 1 {
        return Err(Error::LengthMismatch {
            name: "kernel mu",
            expected: m_prime + 1,
            got: kernel_mu.len(),
        });
    }
    let mut pi = vec![m];
    pi.extend((1..=m_prime).rev());
    pi.extend(m - n..m);
    let mut mu = vec![0; m + 1];
    mu[..=m_prime].copy_from_slice(kernel_mu);
    mu[m] = mu_top;
    Ok(Theorem1Params {
        q,
        m,
        n,
        pi,
        mu,
        kappa: vec![0; n],
    })
}

#[derive(Debug, Clone)]
pub struct Corollary1Report {
    pub theorem: SparseQaryMatrix,
    pub arranged: SparseQaryMatrix,
    pub kernel: (QarySequence, QarySequence),
    pub claimed_width: usize,
    pub mismatches: usize,
}

impl Corollary1Report {
    pub fn equal(&self) -> bool {
        self.mismatches == 0
    }
}

/// Builds the canonical single-chain matrix and the arrangement of the
/// matching perfect CZCP kernel of length `2^{m−n−1}`, and compares them
/// entrywise. `μ_m = q/2` shows up as a sign flip of the second kernel
/// sequence.
pub fn corollary1_check(
    q: u32,
    m: usize,
    n: usize,
    kernel_mu: &[u32],
    mu_top: u32,
) -> Result<Corollary1Report> {
    let params = corollary1_params(q, m, n, kernel_mu, mu_top)?;
    let theorem = construct_theorem1(&params)?;
    let m_prime = m - n - 1;
    let kernel_pi: Vec<usize> = (1..=m_prime).rev().collect();
    let (d0, d1) = perfect_czcp_kernel(m_prime, q, &kernel_pi, kernel_mu)?;
    let arranged = czcp_training_matrix(&d0, &d1.rotated(mu_top), 1 << n)?;
    let mismatches = if theorem.matrix.rows() == arranged.rows()
        && theorem.matrix.cols() == arranged.cols()
    {
        theorem
            .matrix
            .entries()
            .iter()
            .zip(arranged.entries())
            .filter(|(a, b)| a != b)
            .count()
    } else {
        theorem.matrix.entries().len().max(arranged.entries().len())
    };
    Ok(Corollary1Report {
        theorem: theorem.matrix,
        arranged,
        kernel: (d0, d1),
        claimed_width: theorem.claimed_width,
        mismatches,
    })
}

fn random_coefficients<R: Rng + ?Sized>(q: u32, m: usize, n: usize, rng: &mut R) -> (Vec<u32>, Vec<u32>) {
    let mut mu: Vec<u32> = (0..=m).map(|_| rng.random_range(0..q)).collect();
    mu[m] = if rng.random_bool(0.5) { q / 2 } else { 0 };
    let kappa = (0..n).map(|_| rng.random_range(0..q)).collect();
    (mu, kappa)
}

/// A uniformly drawn valid single-chain parameter set.
pub fn random_theorem1_params<R: Rng + ?Sized>(q: u32, m: usize, n: usize, rng: &mut R) -> Theorem1Params {
    assert!(n >= 1 && m >= n + 2, "need m >= n + 2");
    let mut middle: Vec<usize> = (1..m - n).collect();
    middle.shuffle(rng);
    let mut tail: Vec<usize> = (m - n..m).collect();
    tail.shuffle(rng);
    let mut pi = vec![m];
    pi.extend(middle);
    pi.extend(tail);
    let (mu, kappa) = random_coefficients(q, m, n, rng);
    Theorem1Params {
        q,
        m,
        n,
        pi,
        mu,
        kappa,
    }
}

/// A randomly drawn valid multi-chain parameter set: the free indices
/// `1..=m−n` are scattered over the blocks (block 1 receives at least one)
/// and each block tail is shuffled.
pub fn random_theorem2_params<R: Rng + ?Sized>(q: u32, m: usize, n: usize, rng: &mut R) -> Theorem2Params {
    assert!(n >= 1 && m > n, "need m > n");
    let mut free: Vec<usize> = (1..=m - n).collect();
    free.shuffle(rng);
    let mut blocks: Vec<Vec<usize>> = (0..n).map(|alpha| vec![m - alpha]).collect();
    blocks[0].push(free.pop().expect("m > n leaves a free index"));
    for v in free {
        let alpha = rng.random_range(0..n);
        blocks[alpha].push(v);
    }
    for block in &mut blocks {
        block[1..].shuffle(rng);
    }
    let (mu, kappa) = random_coefficients(q, m, n, rng);
    Theorem2Params {
        q,
        m,
        n,
        blocks,
        mu,
        kappa,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{check_c1, measure_zcz_width, verify_czcs, verify_szcz};

    #[test]
    fn theorem1_named_errors() {
        let bad_first = Theorem1Params::new(2, 5, 2, vec![2, 5, 1, 3, 4]);
        let msg = construct_theorem1(&bad_first).unwrap_err().to_string();
        assert!(msg.contains("pi(1) = 2 != m = 5"), "{msg}");

        let bad_tail = Theorem1Params::new(2, 5, 2, vec![5, 3, 1, 2, 4]);
        let msg = construct_theorem1(&bad_tail).unwrap_err().to_string();
        assert!(msg.contains("pi(m-n+1) = 2"), "{msg}");

        let mut bad_top = Theorem1Params::new(4, 5, 2, vec![5, 2, 1, 3, 4]);
        bad_top.mu[5] = 1;
        assert!(construct_theorem1(&bad_top).unwrap_err().to_string().contains("mu_m"));

        let not_perm = Theorem1Params::new(2, 5, 2, vec![5, 2, 2, 3, 4]);
        assert!(construct_theorem1(&not_perm).is_err());

        let short = Theorem1Params::new(2, 3, 2, vec![3, 1, 2]);
        assert!(construct_theorem1(&short).unwrap_err().to_string().contains("n + 2"));
    }

    #[test]
    fn theorem1_dimensions_and_weights() {
        let c = construct_theorem1(&Theorem1Params::new(2, 5, 2, vec![5, 2, 1, 3, 4])).unwrap();
        assert_eq!((c.matrix.rows(), c.matrix.cols()), (4, 32));
        assert_eq!(c.matrix.nonzero_count(), 32);
        assert_eq!(c.matrix.common_row_weight(), Some(8));
        assert_eq!(c.claimed_width, 2);
        assert_eq!(c.restriction.indices(), &[3, 4]);
    }

    #[test]
    fn theorem2_named_errors() {
        let p = Theorem2Params::new(2, 6, 2, vec![vec![5, 4, 3], vec![6, 2, 1]]);
        assert!(construct_theorem2(&p).unwrap_err().to_string().contains("pi_1(1) = 5"));
        let p = Theorem2Params::new(2, 6, 2, vec![vec![6], vec![5, 4, 3, 2, 1]]);
        assert!(construct_theorem2(&p).unwrap_err().to_string().contains("m_1"));
        let p = Theorem2Params::new(2, 6, 2, vec![vec![6, 4, 3], vec![5, 2, 2]]);
        assert!(construct_theorem2(&p).is_err());
        let p = Theorem2Params::new(2, 6, 2, vec![vec![6, 4, 3], vec![5, 2]]);
        assert!(construct_theorem2(&p).unwrap_err().to_string().contains("cover"));
        assert!(Theorem2Params::from_partition(
            2,
            6,
            2,
            &[vec![3, 4, 6], vec![2, 1, 5]],
            vec![vec![6, 4, 3], vec![5, 2, 4]]
        )
        .is_err());
    }

    #[test]
    fn theorem2_singleton_trailing_blocks() {
        // m_2 = m_3 = 1: blocks 2 and 3 carry no chain, only the coupling.
        let p = Theorem2Params::new(2, 6, 3, vec![vec![6, 2, 3, 1], vec![5], vec![4]]);
        let c = construct_theorem2(&p).unwrap();
        assert_eq!(c.claimed_width, 2);
        assert!(verify_szcz(&c.matrix, c.claimed_width).is_ok());
        assert!(check_c1(&c.matrix));
    }

    #[test]
    fn theorem2_largest_width() {
        // pi_1(2) = m - n gives 2^{m-n-1}.
        let p = Theorem2Params::new(2, 6, 2, vec![vec![6, 4, 3, 2], vec![5, 1]]);
        let c = construct_theorem2(&p).unwrap();
        assert_eq!(c.claimed_width, 8);
        assert_eq!(measure_zcz_width(&c.matrix), Some(8));
    }

    #[test]
    fn kernel_small_pair() {
        let (a, b) = perfect_czcp_kernel(2, 2, &[2, 1], &[0, 0, 0]).unwrap();
        assert_eq!(a, QarySequence::from_signs("+++-").unwrap());
        assert_eq!(b, QarySequence::from_signs("++-+").unwrap());
    }

    #[test]
    fn kernel_eight_is_perfect() {
        let (a, b) = perfect_czcp_kernel(3, 2, &[3, 1, 2], &[0; 4]).unwrap();
        assert_eq!(a.len(), 8);
        assert!(verify_czcs(&[a.to_complex(), b.to_complex()], 4).unwrap());
    }

    #[test]
    fn kernel_errors() {
        assert!(perfect_czcp_kernel(3, 2, &[1, 3, 2], &[0; 4]).is_err());
        assert!(perfect_czcp_kernel(3, 2, &[3, 1, 2], &[0; 3]).is_err());
        assert!(perfect_czcp_kernel(3, 3, &[3, 1, 2], &[0; 4]).is_err());
    }

    #[test]
    fn baselines_satisfy_c1_and_cyclic_structure() {
        let (d0, d1) = baseline_czcp_pair();
        let czcp = czcp_training_matrix(&d0, &d1, 4).unwrap();
        assert!(check_c1(&czcp));
        let set = baseline_czcs_set();
        let czcs = czcs_training_matrix(&set, 4).unwrap();
        assert!(check_c1(&czcs));
        for g in 0..4 {
            for i in 0..64 {
                assert_eq!(czcs.get(g, (i + 4 * g) % 64), czcs.get(0, i));
            }
        }
        assert!(czcp_training_matrix(&d0, &d1, 3).is_err());
        assert!(czcp_training_matrix(&d0, &set[0], 4).is_err());
    }

    #[test]
    fn corollary1_small_cases() {
        let r = corollary1_check(2, 5, 2, &[0, 0, 0], 0).unwrap();
        assert!(r.equal());
        assert_eq!(r.theorem.to_string(), r.arranged.to_string());
        let r = corollary1_check(2, 6, 2, &[0; 4], 0).unwrap();
        assert!(r.equal());
        assert_eq!(r.claimed_width, 4);
        assert_eq!(measure_zcz_width(&r.theorem), Some(4));
        assert!(corollary1_check(2, 4, 2, &[0, 0], 0).is_err());
    }

    #[test]
    fn random_params_are_valid() {
        let mut rng = rand::rng();
        for _ in 0..20 {
            random_theorem1_params(4, 7, 3, &mut rng).validate().unwrap();
            random_theorem2_params(4, 7, 3, &mut rng).validate().unwrap();
            random_theorem2_params(2, 4, 3, &mut rng).validate().unwrap();
        }
    }
}
