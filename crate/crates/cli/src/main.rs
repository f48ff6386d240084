//! `tetra`: count integer tetrahedra by perimeter and diameter.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage, 3 integrity or
//! I/O failure.

mod cache;
mod commands;
mod context;
mod error;
mod range;
mod svg;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tetra_core::analysis::{PeakMode, DEFAULT_S_DENOMINATOR};

use crate::cache::ResultCache;
use crate::commands::{Axis, PlotKind, StatsArgs};
use crate::context::{Context, EngineArg};
use crate::error::{CliError, CliResult};
use crate::range::IndexRange;
use crate::verify::Suite;

#[derive(Parser)]
#[command(name = "tetra", version, about = "Exact counts of integer tetrahedra up to congruence")]
struct Cli {
    /// Result cache file.
    #[arg(long, global = true, env = "TETRA_CACHE", default_value = "tetra-cache.csv")]
    cache: PathBuf,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
#[group(required = true, multiple = false)]
struct AxisArgs {
    /// Perimeters, e.g. `6..50`.
    #[arg(long)]
    n_range: Option<IndexRange>,
    /// Diameters, e.g. `1..40`.
    #[arg(long)]
    d_range: Option<IndexRange>,
}

impl AxisArgs {
    fn axis(self) -> Axis {
        match (self.n_range, self.d_range) {
            (Some(r), _) => Axis::Perimeter(r),
            (None, Some(r)) => Axis::Diameter(r),
            (None, None) => unreachable!("clap requires one range"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PeakArg {
    Exhaustive,
    Hinted,
}

#[derive(Subcommand)]
enum Command {
    /// Print t_n, t^d or the joint cell t^d_n.
    Count {
        #[arg(long)]
        perimeter: Option<u32>,
        #[arg(long)]
        diameter: Option<u32>,
        /// Engine for a joint cell.
        #[arg(long, value_enum, default_value = "auto")]
        engine: EngineArg,
    },
    /// Write totals, or with --joint every cell, as `kind,n,d,value`.
    Table {
        #[command(flatten)]
        axis: AxisArgs,
        #[arg(long)]
        joint: bool,
        #[arg(long, default_value_t = 1)]
        step: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fixed-point counts per conjugacy class with both orbit totals.
    Fix {
        #[arg(long)]
        n_range: IndexRange,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the embedded reference values.
    Verify {
        #[arg(long, value_enum, default_value = "core")]
        suite: Suite,
    },
    /// Ratios and maxima per perimeter or diameter.
    Stats {
        #[command(flatten)]
        axis: AxisArgs,
        #[arg(long, default_value_t = 1)]
        step: u32,
        #[arg(long, value_enum, default_value = "exhaustive")]
        peak: PeakArg,
        /// Read counts from a `kind,n,d,value` file instead of computing them.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_S_DENOMINATOR)]
        s_denominator: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write `<out>.csv` and `<out>.svg`.
    Plot {
        #[arg(long, value_enum)]
        kind: PlotKind,
        #[arg(long)]
        range: IndexRange,
        /// Log scale on both axes.
        #[arg(long)]
        log: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare the brute-force oracle with the fast counts.
    Oracle {
        #[arg(long)]
        n_range: IndexRange,
        #[arg(long, default_value_t = tetra_core::oracle::DEFAULT_CEILING)]
        ceiling: u32,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| CliError::Integrity(format!("thread pool: {e}")))?;
    }
    let cache = if cli.no_cache || matches!(cli.command, Command::Verify { .. }) {
        None
    } else {
        Some(ResultCache::open(&cli.cache)?)
    };
    let mut ctx = Context::new(cache);
    match cli.command {
        Command::Count { perimeter, diameter, engine } => commands::count(&mut ctx, perimeter, diameter, engine),
        Command::Table { axis, joint, step, out } => commands::table(&mut ctx, axis.axis(), joint, step, out.as_deref()),
        Command::Fix { n_range, out } => commands::fix(&mut ctx, n_range, out.as_deref()),
        Command::Verify { suite } => verify::run(suite),
        Command::Stats { axis, step, peak, input, s_denominator, out } => {
            let mode = match peak {
                PeakArg::Exhaustive => PeakMode::Exhaustive,
                PeakArg::Hinted => PeakMode::Hinted,
            };
            commands::stats(&mut ctx, &StatsArgs { axis: axis.axis(), step, mode, input, s_denominator, out })
        }
        Command::Plot { kind, range, log, out } => commands::plot(&mut ctx, kind, range, log, &out),
        Command::Oracle { n_range, ceiling } => commands::oracle(&mut ctx, n_range, ceiling),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tetra: {e}");
            e.exit_code()
        }
    }
}
