//! Shared fixtures: the reference matrices as sign strings, and naive
//! correlation oracles written independently of the library routines.
#![allow(dead_code)]

use num_complex::Complex64;
use szcz::SparseQaryMatrix;

/// Single-chain training matrix, m = 5, n = 2 (4 × 32).
pub const SINGLE_CHAIN_4X32: [&str; 4] = [
    "+++-000000000000++-+000000000000",
    "0000+++-000000000000++-+00000000",
    "00000000+++-000000000000++-+0000",
    "000000000000+++-000000000000++-+",
];

/// Multi-chain training matrix, m = 6, n = 2 (4 × 64).
pub const MULTI_CHAIN_4X64: [&str; 4] = [
    "+0+00000+0+00000+0-00000+0-00000+0+00000-0-00000+0-00000-0+00000",
    "0000-0-00000+0+00000-0+00000+0-00000-0-00000-0-00000-0+00000-0+0",
    "0-0+00000-0+00000-0-00000-0-00000-0+00000+0-00000-0-00000+0+0000",
    "00000+0-00000-0+00000+0+00000-0-00000+0-00000+0-00000+0+00000+0+",
];

/// Block layout of the CZCP baseline: `D0` then `D1`, block-diagonal.
pub fn czcp_baseline_rows() -> Vec<String> {
    let (d0, d1, z) = ("+++-++-+", "+++---+-", "00000000");
    (0..4)
        .map(|g| {
            let mut s = String::new();
            for half in [d0, d1] {
                for b in 0..4 {
                    s.push_str(if b == g { half } else { z });
                }
            }
            s
        })
        .collect()
}

/// Block layout of the CZCS baseline.
pub fn czcs_baseline_rows() -> Vec<String> {
    let set = ["+-++", "+++-", "+-++", "---+"];
    (0..4)
        .map(|g| {
            let mut s = String::new();
            for seq in set {
                for b in 0..4 {
                    s.push_str(if b == g { seq } else { "0000" });
                }
            }
            s
        })
        .collect()
}

pub fn parse_signs<S: AsRef<str>>(rows: &[S]) -> SparseQaryMatrix {
    let parsed = rows
        .iter()
        .map(|r| {
            r.as_ref()
                .chars()
                .map(|c| match c {
                    '+' => Some(0),
                    '-' => Some(1),
                    '0' => None,
                    other => panic!("bad sign {other}"),
                })
                .collect()
        })
        .collect();
    SparseQaryMatrix::from_rows(2, parsed).unwrap()
}

pub fn to_signs(m: &SparseQaryMatrix) -> Vec<String> {
    assert_eq!(m.q(), 2);
    (0..m.rows())
        .map(|g| {
            m.row(g)
                .iter()
                .map(|e| match e {
                    None => '0',
                    Some(0) => '+',
                    Some(_) => '-',
                })
                .collect()
        })
        .collect()
}

/// `ξ^e` via the polar form, independent of the library's exact roots.
pub fn naive_root(q: u32, e: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / q as f64)
}

pub fn naive_rows(m: &SparseQaryMatrix) -> Vec<Vec<Complex64>> {
    (0..m.rows())
        .map(|g| {
            m.row(g)
                .iter()
                .map(|e| e.map_or(Complex64::new(0.0, 0.0), |e| naive_root(m.q(), e)))
                .collect()
        })
        .collect()
}

/// Periodic correlation at any signed shift by direct double loop.
pub fn naive_pccf(a: &[Complex64], b: &[Complex64], u: i64) -> Complex64 {
    let len = a.len() as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..len {
        for j in 0..len {
            if j == (i + u).rem_euclid(len) {
                acc += a[j as usize] * b[i as usize].conj();
            }
        }
    }
    acc
}

/// Aperiodic correlation by summing every index pair at distance `u`.
pub fn naive_aperiodic(a: &[Complex64], b: &[Complex64], u: i64) -> Complex64 {
    let len = a.len() as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..len {
        for j in 0..len {
            if j - i == u {
                acc += a[j as usize] * b[i as usize].conj();
            }
        }
    }
    acc
}

/// SZCZ check over every signed shift `|u| ≤ z` and every row pair.
pub fn naive_is_szcz(m: &SparseQaryMatrix, z: usize) -> bool {
    let rows = naive_rows(m);
    let len = m.cols();
    let tol = 1e-9 * len as f64;
    let weights: Vec<usize> = (0..m.rows()).map(|g| m.row(g).iter().flatten().count()).collect();
    if weights.iter().any(|&w| w != weights[0]) {
        return false;
    }
    let weight = weights[0] as f64;
    for g in 0..rows.len() {
        for k in 0..rows.len() {
            for u in -(z as i64)..=(z as i64) {
                let theta = naive_pccf(&rows[g], &rows[k], u);
                let ok = if g == k && u.rem_euclid(len as i64) == 0 {
                    (theta - weight).norm() <= tol
                } else {
                    theta.norm() <= tol
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Largest passing width by upward sweep of [`naive_is_szcz`].
pub fn naive_width(m: &SparseQaryMatrix) -> Option<usize> {
    if !naive_is_szcz(m, 0) {
        return None;
    }
    let mut z = 0;
    while z + 1 < m.cols() && naive_is_szcz(m, z + 1) {
        z += 1;
    }
    Some(z)
}
