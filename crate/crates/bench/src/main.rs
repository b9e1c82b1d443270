use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mwsht::grid::{mw_sample_count, points_csv, MwGrid};
use mwsht::quadrature::{weights_csv, QuadWeights};
use mwsht::GlGrid;
use mwsht_bench::{
    counts_csv, integrate_csv, parse_list, roundtrip_csv, run_integrate, run_roundtrip, trials_csv,
    RoundTripConfig, Sampling,
};

#[derive(Parser)]
#[command(
    name = "mwsht",
    version,
    about = "Spin spherical harmonic transform sweeps, emitted as CSV"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inverse-then-forward accuracy and timing over random coefficients.
    Roundtrip(RoundtripArgs),
    /// Quadrature weight profiles v and q.
    Weights(WeightsArgs),
    /// Sample positions of one grid.
    Grid(GridArgs),
    /// Sample counts of the equiangular, Gauss-Legendre and Driscoll-Healy grids.
    Counts(CountsArgs),
    /// Quadrature error on random band-limited functions.
    Integrate(IntegrateArgs),
}

#[derive(Args)]
struct Output {
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RoundtripArgs {
    /// Band-limits: a value, a comma list or a range such as 16-32.
    #[arg(short = 'L', long = "bandlimit", default_value = "64")]
    band_limits: String,
    /// Spins, same syntax as the band-limits.
    #[arg(short, long = "spin", default_value = "0", allow_hyphen_values = true)]
    spins: String,
    #[arg(long, default_value = "mw")]
    sampling: Sampling,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Real signals through the real fast path (spin 0, mw only).
    #[arg(long)]
    real: bool,
    /// Untimed round trips before each (L, s) cell.
    #[arg(long, default_value_t = 0)]
    warmup: usize,
    /// Run the trials of each cell on separate threads.
    #[arg(long)]
    parallel_trials: bool,
    /// Allow Gauss-Legendre above its stability limit.
    #[arg(long)]
    gl_unstable_override: bool,
    /// One row per trial instead of mean and standard deviation.
    #[arg(long)]
    per_trial: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct WeightsArgs {
    #[arg(short = 'L', long = "bandlimit", default_value = "4,64")]
    band_limits: String,
    #[arg(short, long, default_value_t = 0, allow_hyphen_values = true)]
    spin: i32,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GridArgs {
    #[arg(short = 'L', long = "bandlimit", default_value_t = 12)]
    band_limit: usize,
    #[arg(long, default_value = "mw")]
    sampling: Sampling,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CountsArgs {
    #[arg(short = 'L', long = "bandlimit", default_value = "1-16")]
    band_limits: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct IntegrateArgs {
    #[arg(short = 'L', long = "bandlimit", default_value = "4,16,64")]
    band_limits: String,
    #[arg(short, long = "spin", default_value = "0", allow_hyphen_values = true)]
    spins: String,
    /// Random functions per (L, s).
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: Output,
}

type BoxResult<T> = Result<T, Box<dyn std::error::Error>>;

fn emit(output: &Output, csv: &str) -> BoxResult<()> {
    match &output.out {
        Some(path) => fs::write(path, csv)?,
        None => std::io::stdout().lock().write_all(csv.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> BoxResult<()> {
    match cli.command {
        Command::Roundtrip(a) => {
            let cfg = RoundTripConfig {
                band_limits: parse_list(&a.band_limits)?,
                spins: parse_list(&a.spins)?,
                sampling: a.sampling,
                trials: a.trials,
                seed: a.seed,
                real: a.real,
                warmup: a.warmup,
                parallel_trials: a.parallel_trials,
                gl_unstable_override: a.gl_unstable_override,
            };
            let reports = run_roundtrip(&cfg);
            for r in &reports {
                if let Err(msg) = &r.outcome {
                    eprintln!("L={} s={}: {msg}", r.band_limit, r.spin);
                }
            }
            let csv = if a.per_trial {
                trials_csv(&reports)
            } else {
                roundtrip_csv(&reports, a.trials)
            };
            emit(&a.output, &csv)
        }
        Command::Weights(a) => {
            let band_limits: Vec<usize> = parse_list(&a.band_limits)?;
            let mut csv = String::new();
            for &l in &band_limits {
                if band_limits.len() > 1 {
                    csv.push_str(&format!("# band_limit={l} spin={}\n", a.spin));
                }
                csv.push_str(&weights_csv(&QuadWeights::new(l, a.spin)?)?);
            }
            emit(&a.output, &csv)
        }
        Command::Grid(a) => {
            let l = a.band_limit;
            let csv = match a.sampling {
                Sampling::Mw => {
                    let g = MwGrid::new(l)?;
                    points_csv(g.points()) + &format!("# distinct_points={}\n", mw_sample_count(l))
                }
                Sampling::Gl => {
                    let g = GlGrid::new(l)?;
                    points_csv(g.points()) + &format!("# distinct_points={}\n", g.points().count())
                }
            };
            emit(&a.output, &csv)
        }
        Command::Counts(a) => emit(&a.output, &counts_csv(&parse_list(&a.band_limits)?)?),
        Command::Integrate(a) => {
            let mut reports = Vec::new();
            for l in parse_list::<usize>(&a.band_limits)? {
                for s in parse_list::<i32>(&a.spins)? {
                    reports.push(run_integrate(l, s, a.trials, a.seed)?);
                }
            }
            emit(&a.output, &integrate_csv(&reports, a.seed))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
