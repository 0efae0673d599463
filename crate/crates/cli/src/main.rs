use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use szcz::construct::{Theorem1Params, Theorem2Params};
use szcz_cli::config::{lambda_sweep, snr_sweep, ExperimentConfig, MatrixSpec};
use szcz_cli::format::{load, save, write_matrix};
use szcz_cli::params::{parse_blocks, parse_list, parse_pair, parse_snr_grid, parse_usize_grid};
use szcz_cli::report::{corr_csv, nmse_csv, nmse_csv_line, nmse_rows, VerifyReport, NMSE_HEADER};

/// Sparse zero-correlation-zone training matrices: construction,
/// verification and LS channel-estimation NMSE.
///
/// Permutation and partition indices are 1-based, as in `--pi "5,2,1,3,4"`.
#[derive(Parser)]
#[command(name = "szcz", version)]
struct Cli {
    /// Worker threads for Monte-Carlo trials (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a training matrix and write it in the matrix file format.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Report weights, sparsity, C1 and the measured zero-correlation width as JSON.
    Verify {
        file: PathBuf,
        /// Also check the zero-correlation conditions at this width.
        #[arg(long)]
        z: Option<usize>,
        /// Exit non-zero if C1 fails, no width is found, or the --z check fails.
        #[arg(long)]
        strict: bool,
    },
    /// Analytic and Monte-Carlo NMSE of the LS estimator as CSV.
    Nmse {
        file: PathBuf,
        /// Channel memory: a list "3,5,8" or an inclusive range "3..11".
        #[arg(long, default_value = "8")]
        lambda: String,
        /// SNR per receive antenna in dB, comma separated; "inf" means no noise.
        #[arg(long, default_value = "12", allow_hyphen_values = true)]
        snr_db: String,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Receive antennas.
        #[arg(long, default_value_t = 4)]
        nr: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Periodic correlation magnitudes |theta(g, k; u)| as CSV.
    Corr {
        file: PathBuf,
        /// Row pair "g,k", 0-based.
        #[arg(long)]
        rows: String,
        /// Number of shifts, starting at 0 (default: L).
        #[arg(long)]
        shifts: Option<usize>,
    },
    /// Write the example and baseline matrices and the two NMSE sweeps.
    Repro {
        /// Output directory; SZCZ_OUT_DIR is used when omitted, then "repro".
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        nr: usize,
    },
}

#[derive(Args)]
struct Output {
    /// Write the matrix here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Coefficients {
    /// Linear coefficients mu_0,mu_1,...,mu_m (default all zero).
    #[arg(long)]
    mu: Option<String>,
    /// Row-variable coefficients kappa_1,...,kappa_n (default all zero).
    #[arg(long)]
    kappa: Option<String>,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Single quadratic chain restricted on the last n positions of pi.
    Thm1 {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Permutation pi(1),...,pi(m).
        #[arg(long)]
        pi: String,
        #[command(flatten)]
        coeffs: Coefficients,
        #[command(flatten)]
        out: Output,
    },
    /// One chain per row variable.
    Thm2 {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Orderings per block separated by '|', e.g. "6,4,3|5,2,1".
        #[arg(long)]
        pi: String,
        /// Partition sets, e.g. "3,4,6|2,1,5"; checked against --pi.
        #[arg(long)]
        partition: Option<String>,
        #[command(flatten)]
        coeffs: Coefficients,
        #[command(flatten)]
        out: Output,
    },
    /// Arrangement of the length-8 complementary pair.
    CzcpBaseline {
        #[arg(long, default_value_t = 4)]
        nt: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Arrangement of the length-4 four-sequence set.
    CzcsBaseline {
        #[arg(long, default_value_t = 4)]
        nt: usize,
        #[command(flatten)]
        out: Output,
    },
}

fn coefficients(c: &Coefficients, m: usize, n: usize) -> anyhow::Result<(Vec<u32>, Vec<u32>)> {
    let mu = match &c.mu {
        Some(s) => parse_list(s)?,
        None => vec![0; m + 1],
    };
    let kappa = match &c.kappa {
        Some(s) => parse_list(s)?,
        None => vec![0; n],
    };
    Ok((mu, kappa))
}

fn construct(kind: ConstructKind) -> anyhow::Result<()> {
    let (spec, out) = match kind {
        ConstructKind::Thm1 { q, m, n, pi, coeffs, out } => {
            let (mu, kappa) = coefficients(&coeffs, m, n)?;
            let p = Theorem1Params {
                q,
                m,
                n,
                pi: parse_list(&pi)?,
                mu,
                kappa,
            };
            (MatrixSpec::Theorem1(p), out)
        }
        ConstructKind::Thm2 {
            q,
            m,
            n,
            pi,
            partition,
            coeffs,
            out,
        } => {
            let orderings = parse_blocks(&pi)?;
            let mut p = match partition {
                Some(s) => Theorem2Params::from_partition(q, m, n, &parse_blocks(&s)?, orderings)?,
                None => Theorem2Params::new(q, m, n, orderings),
            };
            (p.mu, p.kappa) = coefficients(&coeffs, m, n)?;
            (MatrixSpec::Theorem2(p), out)
        }
        ConstructKind::CzcpBaseline { nt, out } => (MatrixSpec::CzcpBaseline { nt }, out),
        ConstructKind::CzcsBaseline { nt, out } => (MatrixSpec::CzcsBaseline { nt }, out),
    };
    let built = spec.build()?;
    let m = &built.matrix;
    let z = built.claimed_width.map_or("-".to_string(), |z| z.to_string());
    let claim = format!("(N, L, Z, S) = ({}, {}, {z}, {})", m.rows(), m.cols(), m.sparsity());
    match out.output {
        Some(path) => {
            save(&path, m)?;
            println!("{claim}");
        }
        None => {
            print!("{}", write_matrix(m));
            eprintln!("{claim}");
        }
    }
    Ok(())
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        anyhow::ensure!(t > 0, "--threads must be positive");
        b = b.num_threads(t);
    }
    Ok(b.build()?.install(f))
}

fn out_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os("SZCZ_OUT_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("repro"))
}

fn run_sweeps(configs: &[ExperimentConfig], path: &Path) -> anyhow::Result<()> {
    let mut csv = format!("matrix,{NMSE_HEADER}\n");
    for cfg in configs {
        cfg.validate()?;
        let m = cfg.matrix.build()?.matrix;
        for row in nmse_rows(&m, &cfg.lambdas, &cfg.snr_db, cfg.trials, cfg.seed, cfg.nr)? {
            csv.push_str(&format!("{},{}\n", cfg.name, nmse_csv_line(&row)));
        }
    }
    std::fs::write(path, csv).with_context(|| format!("writing {}", path.display()))
}

fn repro(dir: &Path, trials: usize, seed: u64, nr: usize) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let matrices = [
        ("single_chain_4x32.txt", MatrixSpec::single_chain_4x32()),
        ("multi_chain_4x64.txt", MatrixSpec::multi_chain_4x64()),
        ("czcp_baseline.txt", MatrixSpec::CzcpBaseline { nt: 4 }),
        ("czcs_baseline.txt", MatrixSpec::CzcsBaseline { nt: 4 }),
    ];
    for (file, spec) in matrices {
        save(&dir.join(file), &spec.build()?.matrix)?;
        println!("wrote {}", dir.join(file).display());
    }
    for configs in [lambda_sweep(trials, seed, nr, dir), snr_sweep(trials, seed, nr, dir)] {
        let path = configs[0].output.clone();
        run_sweeps(&configs, &path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Construct { kind } => construct(kind)?,
        Command::Verify { file, z, strict } => {
            let report = VerifyReport::new(&load(&file)?, z);
            println!("{}", serde_json::to_string_pretty(&report)?);
            if strict && !report.passed() {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Nmse {
            file,
            lambda,
            snr_db,
            trials,
            seed,
            nr,
            output,
        } => {
            let m = load(&file)?;
            let lambdas = parse_usize_grid(&lambda)?;
            let snrs = parse_snr_grid(&snr_db)?;
            let rows = with_threads(cli.threads, || nmse_rows(&m, &lambdas, &snrs, trials, seed, nr))??;
            let csv = nmse_csv(&rows);
            match output {
                Some(p) => std::fs::write(&p, csv).with_context(|| format!("writing {}", p.display()))?,
                None => std::io::stdout().write_all(csv.as_bytes())?,
            }
        }
        Command::Corr { file, rows, shifts } => {
            let m = load(&file)?;
            let (g, k) = parse_pair(&rows)?;
            print!("{}", corr_csv(&m, g, k, shifts.unwrap_or(m.cols()))?);
        }
        Command::Repro {
            out_dir: dir,
            trials,
            seed,
            nr,
        } => {
            let dir = out_dir(dir);
            with_threads(cli.threads, || repro(&dir, trials, seed, nr))??;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
