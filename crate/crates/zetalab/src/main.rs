//! Batch CLI: every check as a subcommand with reproducible budgets and
//! machine-readable reports. Exit status: 0 when all residuals sit within
//! their tolerances, 1 on a tolerance failure, 2 on configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use zetalab::config::RunConfig;
use zetalab::runner::{self, CheckOutcome};

#[derive(Parser)]
#[command(
    name = "zetalab",
    version,
    about = "Numerical checks of transform identities tied to the Riemann zeta function",
    after_help = "Reports are written as JSON plus CSV under --out-dir; \
                  SONINE_CACHE_DIR overrides the zero-table cache location."
)]
struct Cli {
    /// Plain-text key=value config file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory for reports.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Worker-thread cap for parallel sections (0 = all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized sample points.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SupportArgs {
    /// Support interval [a, A] of the base bump, as two values.
    #[arg(long, num_args = 2, value_names = ["A_LO", "A_HI"])]
    support: Option<Vec<f64>>,
}

#[derive(Subcommand)]
enum Command {
    /// Locate nontrivial zeros below a height and validate the table.
    /// Sign changes of the Hardy Z function, cross-checked by the argument
    /// principle on the completed zeta.
    Zeros {
        #[arg(long, default_value_t = 100.0)]
        t_max: f64,
    },
    /// Check chi(s)chi(1-s) = 1, the completed-zeta symmetry, and the
    /// cross-route value chi(2) = -2 pi^2 on seeded random strip points.
    FunctionalEq {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Poisson summation with a scaling parameter: theta-identity points on
    /// the Gaussian and one bump-function point.
    Poisson(SupportArgs),
    /// Muntz formula: zeta(s) * integral of phi t^{s-1} against the integral
    /// of the modified Poisson sum, at s = 1/2 and 1/2 + 10i.
    Muntz(SupportArgs),
    /// Co-Poisson intertwining identity on the default u-grid, plus the
    /// plateau constants -g_hat(1) and -g_hat(0).
    Copoisson(SupportArgs),
    /// Mellin factorization zeta(s) * g_hat(s) of the co-Poisson sum at 20
    /// critical-line points including the first zero ordinate.
    CopoissonMellin(SupportArgs),
    /// Build Sonine-space elements: moment-normalized co-Poisson membership
    /// and the even-Hermite K_1 construction with its eigenrelation.
    SonineBuild {
        #[command(flatten)]
        support: SupportArgs,
        /// Even-Hermite basis size.
        #[arg(long)]
        m: Option<usize>,
        /// Number of Chebyshev collocation points in (0, 1).
        #[arg(long)]
        points: Option<usize>,
    },
    /// Zero-density window: argument-principle count of the completed
    /// zeta * g_hat* transform against its component sum and (T/2pi) log T.
    SonineZeros {
        #[command(flatten)]
        support: SupportArgs,
        /// Window height T.
        #[arg(long)]
        t: Option<f64>,
    },
    /// Ramanujan's Mobius/zero identity: sqrt(a) sum mu(n)/n e^{-(a/n)^2} -
    /// sqrt(b) ... against -(1/(2 sqrt b)) sum over zeros of
    /// b^rho Gamma((1-rho)/2)/zeta'(rho), ab = pi.
    Ramanujan {
        /// Scale parameters a (repeatable).
        #[arg(long = "a", num_args = 1..)]
        a_values: Option<Vec<f64>>,
        /// Mobius truncation N.
        #[arg(long)]
        n: Option<u64>,
        /// Number of zeros to sum over.
        #[arg(long)]
        zeros: Option<usize>,
    },
    /// Residue interpolation series sum over rho of G(rho)/zeta'(rho) *
    /// zeta(Z)/(Z-rho): all-zero negative control plus the Hermite proxy
    /// convergence trend.
    ResidueSeries(SupportArgs),
    /// Sum-zero identity: block partial sums of G(rho)/zeta'(rho) on the
    /// Hermite proxy must decay across blocks.
    SumZero(SupportArgs),
    /// Biorthogonality of the dual system zeta(s)/((s-rho) zeta'(rho)
    /// pi^{-rho/2} Gamma(rho/2)) on the first zeros.
    Biorthogonality {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Run the full acceptance-style suite with the configured budgets.
    All {
        /// Reduced budgets (lower zero height, smaller Mobius truncation).
        #[arg(long)]
        quick: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> zetalab::Result<bool> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    if let Some(dir) = cli.out_dir {
        config.out_dir = dir;
    }
    if let Some(jobs) = cli.jobs {
        config.jobs = jobs;
    }
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if config.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build_global()
            .map_err(|e| zetalab::Error::Config(format!("thread pool: {e}")))?;
    }

    let outcomes = dispatch(&cli.command, &mut config)?;
    let mut all_passed = true;
    for outcome in &outcomes {
        runner::write_outcome(outcome, &config.out_dir)?;
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{verdict} {}: {}", outcome.name, outcome.detail);
        all_passed &= outcome.passed;
    }
    Ok(all_passed)
}

fn apply_support(config: &mut RunConfig, support: &SupportArgs) -> zetalab::Result<()> {
    if let Some(values) = &support.support {
        if values.len() != 2 || !(values[0] > 0.0 && values[0] < values[1]) {
            return Err(zetalab::Error::Config(
                "--support expects two values 0 < a < A".into(),
            ));
        }
        config.support_lo = values[0];
        config.support_hi = values[1];
    }
    Ok(())
}

fn dispatch(command: &Command, config: &mut RunConfig) -> zetalab::Result<Vec<CheckOutcome>> {
    match command {
        Command::Zeros { t_max } => Ok(vec![runner::run_zeros(config, *t_max)?]),
        Command::FunctionalEq { samples } => {
            Ok(vec![runner::run_functional_eq(config, *samples)?])
        }
        Command::Poisson(support) => {
            apply_support(config, support)?;
            Ok(vec![runner::run_poisson(config)?])
        }
        Command::Muntz(support) => {
            apply_support(config, support)?;
            Ok(vec![runner::run_muntz(config)?])
        }
        Command::Copoisson(support) => {
            apply_support(config, support)?;
            Ok(vec![runner::run_copoisson(config)?])
        }
        Command::CopoissonMellin(support) => {
            apply_support(config, support)?;
            let zeros = runner::zero_table_for(config, 15.0)?;
            Ok(vec![runner::run_copoisson_mellin(config, &zeros)?])
        }
        Command::SonineBuild { support, m, points } => {
            apply_support(config, support)?;
            if let Some(m) = m {
                config.hermite_basis = *m;
            }
            if let Some(points) = points {
                config.hermite_points = *points;
            }
            Ok(vec![
                runner::run_sonine_build(config)?,
                runner::run_support_profile(config)?,
            ])
        }
        Command::SonineZeros { support, t } => {
            if let Some(values) = &support.support {
                if values.len() != 2 || !(values[0] > 0.0 && values[0] < values[1]) {
                    return Err(zetalab::Error::Config(
                        "--support expects two values 0 < a < A".into(),
                    ));
                }
                config.density_support_lo = values[0];
                config.density_support_hi = values[1];
            }
            if let Some(t) = t {
                config.density_height = *t;
            }
            let zeros = runner::zero_table_for(config, config.density_height)?;
            Ok(vec![runner::run_sonine_zeros(
                config,
                &zeros,
                config.density_height,
            )?])
        }
        Command::Ramanujan { a_values, n, zeros } => {
            if let Some(a) = a_values {
                config.ramanujan_a = a.clone();
            }
            if let Some(n) = n {
                config.n_moebius = *n;
            }
            let mut table = runner::zero_table_for(config, config.zero_height)?;
            if let Some(count) = zeros {
                if table.len() < *count {
                    // Grow the table height until the requested count fits.
                    let height = (3.2 * *count as f64).clamp(config.zero_height, 500.0);
                    table = runner::zero_table_for(config, height)?;
                }
                table.zeros.truncate(*count);
            }
            Ok(vec![runner::run_ramanujan(config, &table)?])
        }
        Command::ResidueSeries(support) => {
            apply_support(config, support)?;
            let zeros = runner::zero_table_for(config, config.zero_height)?;
            Ok(vec![runner::run_residue_series(config, &zeros)?])
        }
        Command::SumZero(support) => {
            apply_support(config, support)?;
            let zeros = runner::zero_table_for(config, config.zero_height)?;
            Ok(vec![runner::run_sum_zero(config, &zeros)?])
        }
        Command::Biorthogonality { count } => {
            let zeros = runner::zero_table_for(config, config.zero_height)?;
            Ok(vec![runner::run_biorthogonality(config, &zeros, *count)?])
        }
        Command::All { quick } => {
            if *quick {
                // The density ratio window is calibrated at T = 100; only
                // the Möbius truncation and the zero-table height shrink.
                config.zero_height = 50.0;
                config.n_moebius = 1_000_000;
            }
            runner::run_all(config)
        }
    }
}
