//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use szcz::construct::*;
use szcz::correlation::*;
use szcz::sim::*;
use szcz::{Error, SparseQaryMatrix};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn single_chain_reference() -> Outcome {
    let c = construct_theorem1(&Theorem1Params::new(2, 5, 2, vec![5, 2, 1, 3, 4])).map_err(|e| e.to_string())?;
    let got = to_signs(&c.matrix);
    let diff = got.iter().zip(SINGLE_CHAIN_4X32).filter(|(a, b)| a.as_str() != *b).count();
    ensure(diff == 0, format!("{diff} rows differ"))?;
    Ok("4x32 matrix identical".into())
}

fn multi_chain_4x64() -> Result<SparseQaryMatrix, String> {
    let p = Theorem2Params::from_partition(
        2,
        6,
        2,
        &[vec![3, 4, 6], vec![2, 1, 5]],
        vec![vec![6, 4, 3], vec![5, 2, 1]],
    )
    .map_err(|e| e.to_string())?;
    Ok(construct_theorem2(&p).map_err(|e| e.to_string())?.matrix)
}

fn multi_chain_reference() -> Outcome {
    let m = multi_chain_4x64()?;
    ensure(to_signs(&m) == MULTI_CHAIN_4X64, "matrix differs from the reference")?;
    let w = measure_zcz_width(&m);
    ensure(w == Some(8), format!("width {w:?}"))?;
    ensure(m.sparsity() == 0.75, format!("sparsity {}", m.sparsity()))?;
    ensure(check_c1(&m), "C1 fails")?;
    Ok("identical, width 8, sparsity 0.75, C1".into())
}

fn baseline_widths() -> Outcome {
    let (d0, d1) = baseline_czcp_pair();
    let czcp = czcp_training_matrix(&d0, &d1, 4).map_err(|e| e.to_string())?;
    ensure(to_signs(&czcp) == czcp_baseline_rows(), "CZCP arrangement differs")?;
    let czcs = czcs_training_matrix(&baseline_czcs_set(), 4).map_err(|e| e.to_string())?;
    ensure(to_signs(&czcs) == czcs_baseline_rows(), "CZCS arrangement differs")?;
    let (a, b) = (measure_zcz_width(&czcp), measure_zcz_width(&czcs));
    ensure(a == Some(4) && b == Some(3), format!("widths {a:?}, {b:?}"))?;
    Ok("widths 4 and 3".into())
}

fn property_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut count = 0;
    for q in [2u32, 4] {
        for n in 1..=3usize {
            for m in n + 2..=7 {
                for _ in 0..50 {
                    let p1 = random_theorem1_params(q, m, n, &mut rng);
                    let p2 = random_theorem2_params(q, m, n, &mut rng);
                    let outputs = [
                        construct_theorem1(&p1).map_err(|e| e.to_string())?,
                        construct_theorem2(&p2).map_err(|e| e.to_string())?,
                    ];
                    let expected = ((1usize << n) - 1) as f64 / (1usize << n) as f64;
                    for c in outputs {
                        if let Err(v) = verify_szcz(&c.matrix, c.claimed_width) {
                            return Err(format!("q={q} n={n} m={m}: {v:?}"));
                        }
                        ensure(check_c1(&c.matrix), format!("q={q} n={n} m={m}: C1"))?;
                        ensure(
                            (c.matrix.sparsity() - expected).abs() < 1e-15,
                            format!("q={q} n={n} m={m}: sparsity {}", c.matrix.sparsity()),
                        )?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} matrices"))
}

fn corollary() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut count = 0;
    for q in [2u32, 4] {
        for (m, n) in [(5, 2), (6, 2), (6, 3)] {
            for mu_top in [0, q / 2] {
                let kernel_mu: Vec<u32> = (0..m - n).map(|_| rng.random_range(0..q)).collect();
                let r = corollary1_check(q, m, n, &kernel_mu, mu_top).map_err(|e| e.to_string())?;
                ensure(r.equal(), format!("q={q} m={m} n={n}: {} mismatches", r.mismatches))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} cases entrywise equal"))
}

fn kernel() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for m_prime in 2..=6usize {
        for q in [2u32, 4] {
            for _ in 0..20 {
                let mut pi: Vec<usize> = (1..m_prime).collect();
                rand::seq::SliceRandom::shuffle(pi.as_mut_slice(), &mut rng);
                pi.insert(0, m_prime);
                let mu: Vec<u32> = (0..=m_prime).map(|_| rng.random_range(0..q)).collect();
                let (a, b) = perfect_czcp_kernel(m_prime, q, &pi, &mu).map_err(|e| e.to_string())?;
                let set = [a.to_complex(), b.to_complex()];
                let ok = verify_czcs(&set, 1 << (m_prime - 1)).map_err(|e| e.to_string())?;
                ensure(ok, format!("m'={m_prime} q={q} pi={pi:?} mu={mu:?}"))?;
            }
        }
    }
    Ok("200 pairs perfect".into())
}

const SNR_DB: f64 = 12.0;

fn optimality() -> Outcome {
    let c = multi_chain_4x64()?;
    let s2 = snr_db_to_sigma2(SNR_DB);
    for sigma2 in [1.0, s2, 1e-2] {
        for lambda in 0..=8 {
            let a = analytic_nmse(&c, lambda, sigma2).map_err(|e| e.to_string())?;
            let target = sigma2 * (lambda as f64 + 1.0) / 16.0;
            ensure((a - target).abs() <= 1e-9 * target, format!("lambda {lambda}: {a} vs {target}"))?;
        }
    }
    let at8 = analytic_nmse(&c, 8, s2).map_err(|e| e.to_string())?;
    ensure((at8 - 3.549e-2).abs() < 5e-6, format!("lambda 8: {at8}"))?;
    for lambda in 9..=11 {
        let a = analytic_nmse(&c, lambda, s2).map_err(|e| e.to_string())?;
        let minimum = min_nmse(lambda, 16, s2);
        ensure(a > minimum * (1.0 + 1e-9), format!("lambda {lambda} attains minimum"))?;
    }
    Ok(format!("lambda 8: {at8:.4e} ({:.2} dB)", 10.0 * at8.log10()))
}

/// Largest λ at which the analytic curve sits on the minimum, plus the worst
/// Monte-Carlo deviation over invertible points.
fn sweep(c: &SparseQaryMatrix, name: &str, seed: u64) -> Result<(usize, f64), String> {
    let s2 = snr_db_to_sigma2(SNR_DB);
    let mut last_min = None;
    let mut worst: f64 = 0.0;
    let mut departed = false;
    for lambda in 3..=11 {
        let cfg = SimConfig {
            nr: 4,
            lambda,
            sigma2: s2,
            trials: 10_000,
            seed,
        };
        match simulate_ls(c, &cfg) {
            Ok(r) => {
                if r.achieved_min {
                    ensure(!departed, format!("{name}: minimum regained at lambda {lambda}"))?;
                    last_min = Some(lambda);
                } else {
                    departed = true;
                }
                worst = worst.max((r.empirical_nmse - r.analytic_nmse).abs() / r.analytic_nmse);
            }
            // Unbounded NMSE: the least-squares estimate is undefined.
            Err(Error::Singular { .. }) => departed = true,
            Err(e) => return Err(format!("{name}: {e}")),
        }
    }
    Ok((last_min.ok_or(format!("{name}: never attains minimum"))?, worst))
}

fn lambda_sweep() -> Outcome {
    let seed = 2024;
    let szcz = multi_chain_4x64()?;
    let czcp = parse_signs(&czcp_baseline_rows());
    let czcs = parse_signs(&czcs_baseline_rows());
    let (a, ea) = sweep(&szcz, "SZCZ", seed)?;
    let (b, eb) = sweep(&czcp, "CZCP", seed)?;
    let (c, ec) = sweep(&czcs, "CZCS", seed)?;
    ensure(a == 8, format!("SZCZ on minimum through {a}"))?;
    ensure(b == 4, format!("CZCP on minimum through {b}"))?;
    ensure(c == 3, format!("CZCS on minimum through {c}"))?;
    let worst = ea.max(eb).max(ec);
    ensure(worst < 0.03, format!("Monte-Carlo deviation {worst:.4}"))?;
    Ok(format!("minimum through 8/4/3, worst MC deviation {:.2}%", 100.0 * worst))
}

fn noiseless() -> Outcome {
    let mut worst: f64 = 0.0;
    for c in [multi_chain_4x64()?, parse_signs(&czcp_baseline_rows()), parse_signs(&czcs_baseline_rows())] {
        let cfg = SimConfig {
            nr: 4,
            lambda: 3,
            sigma2: 0.0,
            trials: 1000,
            seed: 9,
        };
        let r = simulate_ls(&c, &cfg).map_err(|e| e.to_string())?;
        worst = worst.max(r.empirical_nmse);
    }
    ensure(worst <= 1e-18, format!("empirical {worst:e}"))?;
    Ok(format!("max empirical {worst:.1e}"))
}

fn random_sparse(rng: &mut ChaCha8Rng, q: u32, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| {
            if rng.random_bool(0.4) {
                Complex64::new(0.0, 0.0)
            } else {
                naive_root(q, rng.random_range(0..q))
            }
        })
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let q = [2u32, 4, 8][rng.random_range(0..3)];
        let len = rng.random_range(1..=256);
        let a = random_sparse(&mut rng, q, len);
        let b = random_sparse(&mut rng, q, len);
        let li = len as i64;
        for u in 0..li {
            let p = pccf(&a, &b, u as usize).map_err(|e| e.to_string())?;
            worst = worst.max((p - naive_pccf(&a, &b, u)).norm());
        }
        for u in 1 - li..li {
            let r = aperiodic_ccf(&a, &b, u).map_err(|e| e.to_string())?;
            worst = worst.max((r - naive_aperiodic(&a, &b, u)).norm());
        }
    }
    ensure(worst <= 1e-10, format!("max deviation {worst:e}"))?;
    Ok(format!("max deviation {worst:.1e}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 single-chain 4x32 reproduction", Duration::from_secs(1), single_chain_reference),
        ("2 multi-chain 4x64 reproduction", Duration::from_secs(1), multi_chain_reference),
        ("3 baseline widths", Duration::from_secs(1), baseline_widths),
        ("4 construction sweep", Duration::from_secs(60), property_sweep),
        ("5 corollary equality", Duration::MAX, corollary),
        ("6 perfect kernel pairs", Duration::MAX, kernel),
        ("7 NMSE optimality", Duration::MAX, optimality),
        ("8 lambda sweep at 12 dB", Duration::from_secs(120), lambda_sweep),
        ("9 noiseless exactness", Duration::MAX, noiseless),
        ("10 correlation oracle", Duration::MAX, oracle_equivalence),
    ];
    let mut failures = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({:.2}s)", elapsed.as_secs_f64()),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] {name}: {detail} ({:.2}s)", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} passed, {failures} failed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
