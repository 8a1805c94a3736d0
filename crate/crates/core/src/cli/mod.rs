//! The `submax` command line: `verify`, `solve`, `simulate` and `sweep`.
//!
//! Exit codes: 0 success, 1 a property or guarantee was violated, 2 a usage,
//! parse or configuration error. CSV output goes to `--out` or stdout; every
//! row echoes the master seed and [`VERSION_TAG`](crate::VERSION_TAG).

mod simulate;
mod solve;
mod sweep;
mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use simulate::{simulate, Scenario, ScenarioDrops, SimulateRow};
pub use solve::{solve, solve_instance, SolveOptions, SolveRow};
pub use sweep::{sweep, SweepConfig, SweepConstraint, SweepRow};
pub use verify::verify;

#[derive(Parser, Debug)]
#[command(name = "submax", version, about = "Submodular maximization under matroid constraints")]
pub struct Cli {
    /// Master seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: one per core). Output does not depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Leave the wall_time column empty so runs compare byte for byte.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check normality, monotonicity, submodularity, curvature and the matroid axioms.
    Verify { instance: PathBuf },
    /// Run one or more solvers on an instance and report the gap to the optimum.
    Solve {
        instance: PathBuf,
        /// Comma-separated list of solvers.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "sg")]
        solver: Vec<Solver>,
        /// Continuous greedy steps.
        #[arg(long, default_value_t = 50)]
        steps: usize,
        /// Samples per gradient estimate; 0 evaluates the extension exactly.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Block order for sg-partition, comma separated.
        #[arg(long, value_delimiter = ',')]
        block_order: Option<Vec<usize>>,
        /// Dump the continuous greedy trajectory as CSV.
        #[arg(long)]
        trajectory: Option<PathBuf>,
    },
    /// Simulate distributed greedy over a communication graph.
    Simulate { scenario: PathBuf },
    /// Run a grid of generated instances and solvers.
    Sweep { config: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Solver {
    /// Sequential greedy.
    Sg,
    /// Greedy one block at a time.
    SgPartition,
    /// Lazy greedy.
    Lazy,
    /// Continuous greedy followed by pipage rounding.
    Cg,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::Sg => "sg",
            Solver::SgPartition => "sg-partition",
            Solver::Lazy => "lazy",
            Solver::Cg => "cg",
        }
    }
}

/// Common run settings taken from the global flags.
#[derive(Clone, Copy, Debug)]
pub struct RunSettings {
    pub seed: u64,
    pub timestamps: bool,
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                2
            } else {
                0
            }
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Runs the command; `Ok(false)` means a check or guarantee failed.
pub fn execute(cli: &Cli) -> Result<bool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Error::InvalidParameter("--workers must be at least 1".into()));
        }
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| Error::InvalidParameter(e.to_string()))?;
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> Result<bool> {
    let settings = RunSettings { seed: cli.seed, timestamps: !cli.no_timestamp };
    let mut out = open_output(cli.out.as_deref())?;
    let ok = match &cli.command {
        Command::Verify { instance } => verify(instance, settings, &mut out)?,
        Command::Solve { instance, solver, steps, samples, block_order, trajectory } => {
            let options = SolveOptions {
                steps: *steps,
                samples: *samples,
                block_order: block_order.clone(),
                trajectory: trajectory.clone(),
            };
            let inst = crate::instance::load_instance(instance)?;
            let rows = solve(&inst, solver, &options, settings)?;
            write_csv(&mut out, &rows)?;
            rows.iter().all(SolveRow::meets_bound)
        }
        Command::Simulate { scenario } => {
            let rows = simulate(&Scenario::load(scenario)?, settings)?;
            write_csv(&mut out, &rows)?;
            rows.iter().all(SimulateRow::meets_bound)
        }
        Command::Sweep { config } => {
            let rows = sweep(&SweepConfig::load(config)?, settings)?;
            write_csv(&mut out, &rows)?;
            rows.iter().all(SweepRow::meets_bound)
        }
    };
    out.flush()?;
    Ok(ok)
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

pub(crate) fn write_csv<W: Write, R: Serialize>(out: W, rows: &[R]) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

pub(crate) fn read_config<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    toml::from_str(&text).map_err(|e| Error::Parse { path: path.display().to_string(), message: e.to_string() })
}

pub(crate) fn format_set(set: &crate::subset::Subset) -> String {
    set.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}
