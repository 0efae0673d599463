mod common;

use common::*;
use szcz::construct::*;
use szcz::correlation::*;
use szcz::QarySequence;

fn multi_chain_4x64() -> Construction {
    let p = Theorem2Params::from_partition(
        2,
        6,
        2,
        &[vec![3, 4, 6], vec![2, 1, 5]],
        vec![vec![6, 4, 3], vec![5, 2, 1]],
    )
    .unwrap();
    construct_theorem2(&p).unwrap()
}

#[test]
fn single_chain_reproduces_reference_matrix() {
    let c = construct_theorem1(&Theorem1Params::new(2, 5, 2, vec![5, 2, 1, 3, 4])).unwrap();
    assert_eq!(to_signs(&c.matrix), SINGLE_CHAIN_4X32);
    assert_eq!(c.claimed_width, 2);
    assert_eq!(measure_zcz_width(&c.matrix), Some(2));
    assert!(verify_szcz(&c.matrix, 2).is_ok());
    assert!(check_c1(&c.matrix));
}

#[test]
fn multi_chain_reproduces_reference_matrix() {
    let c = multi_chain_4x64();
    assert_eq!(to_signs(&c.matrix), MULTI_CHAIN_4X64);
    assert_eq!(c.claimed_width, 8);
    assert!(verify_szcz(&c.matrix, 8).is_ok());
    let v = verify_szcz(&c.matrix, 9).unwrap_err();
    assert_eq!(v.u, 9);
    assert_eq!(measure_zcz_width(&c.matrix), Some(8));
    assert!((c.matrix.sparsity() - 0.75).abs() < 1e-15);
    assert!(check_c1(&c.matrix));
}

#[test]
fn multi_chain_correlation_profile() {
    let m = parse_signs(&MULTI_CHAIN_4X64);
    let c0 = m.row_complex(0);
    let c3 = m.row_complex(3);
    assert_eq!(pccf(&c0, &c0, 0).unwrap().re, 16.0);
    for u in 1..=8 {
        assert!(pccf(&c0, &c0, u).unwrap().norm() < 1e-12);
    }
    for u in 0..=8 {
        assert!(pccf(&c0, &c3, u).unwrap().norm() < 1e-12);
    }
    let report = correlation_report(&m);
    assert_eq!(report.magnitudes(0, 0)[0], 16.0);
    assert!(report.magnitudes(0, 3)[..9].iter().all(|&v| v < 1e-12));
    assert_eq!(report.measured_zcz_width, Some(8));
}

#[test]
fn baseline_matrices_and_widths() {
    let (d0, d1) = baseline_czcp_pair();
    let czcp = czcp_training_matrix(&d0, &d1, 4).unwrap();
    assert_eq!(to_signs(&czcp), czcp_baseline_rows());
    assert_eq!(measure_zcz_width(&czcp), Some(4));

    let czcs = czcs_training_matrix(&baseline_czcs_set(), 4).unwrap();
    assert_eq!(to_signs(&czcs), czcs_baseline_rows());
    assert_eq!(measure_zcz_width(&czcs), Some(3));
    assert!(check_c1(&czcs));
}

#[test]
fn small_czcp_arrangement_matches_single_chain() {
    let a = QarySequence::from_signs("+++-").unwrap();
    let b = QarySequence::from_signs("++-+").unwrap();
    let m = czcp_training_matrix(&a, &b, 4).unwrap();
    assert_eq!(to_signs(&m), SINGLE_CHAIN_4X32);
}

#[test]
fn baseline_kernel_sweeps() {
    let to_c = |s: &QarySequence| s.to_complex();
    let (d0, d1) = baseline_czcp_pair();
    let pair = [to_c(&d0), to_c(&d1)];
    let widest = (0..8).filter(|&z| verify_czcs(&pair, z).unwrap()).max();
    assert_eq!(widest, Some(4));

    // Largest passing zone of the length-4 set, frozen from a brute-force sweep.
    let set: Vec<_> = baseline_czcs_set().iter().map(to_c).collect();
    let passing: Vec<usize> = (0..4).filter(|&z| verify_czcs(&set, z).unwrap()).collect();
    assert_eq!(passing, vec![0, 1, 2, 3]);
}

#[test]
fn naive_oracle_agrees_on_reference_matrices() {
    for rows in [SINGLE_CHAIN_4X32.map(String::from).to_vec(), MULTI_CHAIN_4X64.map(String::from).to_vec(), czcp_baseline_rows(), czcs_baseline_rows()] {
        let m = parse_signs(&rows);
        assert_eq!(measure_zcz_width(&m), naive_width(&m));
    }
}
