//! `disksever` command line.
//!
//! Exit codes: 0 on success, 1 on bad input (flags, files, parameters),
//! 2 when an internal check fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use disksever_core::centerpoint::exact_centerpoint;
use disksever_core::generators::{
    gen_arbitrary_radii, gen_lower_bound, gen_random, gen_random_disjoint, gen_snake, LOWER_BOUND_EPS,
};
use disksever_core::separators::{
    axis_parallel_separator, line_through_point_separator, optimal_line_separator, random_line_separator,
    ALPHA_FOUR_FIFTHS, ALPHA_TWO_THIRDS,
};
use disksever_core::{Instance, SeparatorResult};

use crate::calibrate::{calibrate_constants, CalibrationConfig};
use crate::config::{AlgoName, ExperimentConfig};
use crate::error::{HarnessError, Result};
use crate::experiments::{run_experiment, write_outputs};
use crate::io::{instance_to_string, read_instance, write_text};
use crate::record::SeparatorRecord;
use crate::with_thread_pool;

#[derive(Parser, Debug)]
#[command(name = "disksever", version, about = "Balanced line separators for disk graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Random,
    Disjoint,
    Snake,
    LowerBound,
    ArbitraryRadii,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance file.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        /// Target edge count (lower-bound family).
        #[arg(long)]
        m: Option<usize>,
        /// Square side (random and disjoint families).
        #[arg(long)]
        side: Option<f64>,
        /// Snake parameter, odd and >= 3.
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long)]
        eps: Option<f64>,
        /// Redraw random instances until connected.
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 10_000)]
        max_rejects: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a line separator of an instance.
    Sep {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgoName::Sweep)]
        algo: AlgoName,
        /// Balance parameter; fixed at 4/5 for axis and 2/3 for centerpoint.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal line separator of an instance.
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = ALPHA_TWO_THIRDS)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an experiment config and write its tables and plot.
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: u64,
        /// Overrides the config's output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit the random-line constants and write them as JSON.
    Calibrate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        per_n: usize,
        #[arg(long, default_value_t = 21)]
        lines: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| HarnessError::input(format!("--{flag} is required for family {family}")))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_text(p, text),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| HarnessError::input(format!("stdout: {e}"))),
    }
}

fn fixed_alpha(given: Option<f64>, fixed: f64, algo: &str) -> Result<f64> {
    match given {
        Some(a) if (a - fixed).abs() > 1e-12 => {
            Err(HarnessError::input(format!("{algo} separators have alpha fixed at {fixed}, got {a}")))
        }
        _ => Ok(fixed),
    }
}

fn separate(inst: &Instance, algo: AlgoName, alpha: Option<f64>, trials: usize, seed: u64) -> Result<SeparatorResult> {
    let res = match algo {
        AlgoName::Sweep => random_line_separator(inst, trials, seed, alpha.unwrap_or(ALPHA_TWO_THIRDS))?,
        AlgoName::Centerpoint => {
            fixed_alpha(alpha, ALPHA_TWO_THIRDS, "centerpoint")?;
            let p = exact_centerpoint(&inst.centers())?;
            line_through_point_separator(inst, p, trials, seed, None)?
        }
        AlgoName::Axis => {
            fixed_alpha(alpha, ALPHA_FOUR_FIFTHS, "axis")?;
            axis_parallel_separator(inst)?
        }
        AlgoName::Optimal => optimal_line_separator(inst, alpha.unwrap_or(ALPHA_TWO_THIRDS))?,
    };
    res.validate(inst)?;
    Ok(res)
}

fn execute(cmd: Command) -> Result<()> {
    match cmd {
        Command::Gen { family, n, m, side, q, levels, eps, connected, max_rejects, seed, out } => {
            let inst = match family {
                Family::Random => {
                    gen_random(need(n, "n", "random")?, need(side, "side", "random")?, seed, connected, max_rejects)?
                }
                Family::Disjoint => {
                    gen_random_disjoint(need(n, "n", "disjoint")?, need(side, "side", "disjoint")?, seed, max_rejects)?
                }
                Family::Snake => gen_snake(need(q, "q", "snake")?)?,
                Family::LowerBound => {
                    gen_lower_bound(
                        need(n, "n", "lower-bound")?,
                        need(m, "m", "lower-bound")?,
                        eps.unwrap_or(LOWER_BOUND_EPS),
                    )?
                    .0
                }
                Family::ArbitraryRadii => {
                    gen_arbitrary_radii(need(levels, "levels", "arbitrary-radii")?, eps.unwrap_or(0.01))?
                }
            };
            emit(out.as_ref(), &instance_to_string(&inst))
        }
        Command::Sep { input, algo, alpha, trials, seed, out } => {
            let inst = read_instance(&input)?;
            let res = with_thread_pool(|| separate(&inst, algo, alpha, trials, seed))??;
            emit(out.as_ref(), &SeparatorRecord::from(&res).to_json())
        }
        Command::Oracle { input, alpha, out } => {
            let inst = read_instance(&input)?;
            let res = separate(&inst, AlgoName::Optimal, Some(alpha), 1, 0)?;
            emit(out.as_ref(), &SeparatorRecord::from(&res).to_json())
        }
        Command::Bench { config, seed, out } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            cfg.seed = seed;
            let dest = out
                .or_else(|| cfg.out.clone())
                .ok_or_else(|| HarnessError::input("no output path: set `out` in the config or pass --out"))?;
            let result = with_thread_pool(|| run_experiment(&cfg))??;
            for p in write_outputs(&result, &dest, &cfg.id)? {
                eprintln!("wrote {}", p.display());
            }
            Ok(())
        }
        Command::Calibrate { seed, per_n, lines, out } => {
            if per_n == 0 || lines == 0 {
                return Err(HarnessError::input("--per-n and --lines must be at least 1"));
            }
            let cfg = CalibrationConfig { seed, per_n, lines, ..Default::default() };
            let rec = with_thread_pool(|| calibrate_constants(&cfg))??;
            emit(out.as_ref(), &rec.to_json())
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match std::panic::catch_unwind(|| execute(cli.command)) {
        Ok(Ok(())) => 0,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        Err(_) => 2,
    }
}
