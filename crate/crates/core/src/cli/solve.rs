use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bruteforce::{brute_force_opt, gap_against, N_MAX_BRUTE_FORCE};
use crate::continuous::{continuous_greedy, pipage_round, pipage_round_sampled, CGParams, N_MAX_EXACT};
use crate::error::{Error, Result};
use crate::greedy::{
    bound_partition_curvature, bound_uniform_curvature, lazy_greedy, natural_order, sequential_greedy,
    sequential_greedy_partition,
};
use crate::instance::{Constraint, Instance};
use crate::oracle::{CountingOracle, ValueOracle};
use crate::properties::{total_curvature, N_MAX_EXHAUSTIVE};
use crate::subset::Subset;
use crate::{EPS_VAL, VERSION_TAG};

use super::{format_set, write_csv, RunSettings, Solver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub steps: usize,
    /// 0 selects exact multilinear evaluation.
    pub samples: usize,
    pub block_order: Option<Vec<usize>>,
    pub trajectory: Option<PathBuf>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { steps: 50, samples: 0, block_order: None, trajectory: None }
    }
}

/// One CSV row of `solve`. `opt` and `ratio` are empty beyond brute-force
/// range; `bound` is empty when no guarantee applies.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveRow {
    pub instance: String,
    pub solver: &'static str,
    pub n: usize,
    pub constraint: &'static str,
    pub set: String,
    pub value: f64,
    pub opt: Option<f64>,
    pub ratio: Option<f64>,
    pub bound: Option<f64>,
    pub oracle_calls: u64,
    pub wall_time: Option<f64>,
    pub seed: u64,
    pub version: &'static str,
}

impl SolveRow {
    pub fn meets_bound(&self) -> bool {
        match (self.ratio, self.bound) {
            (Some(r), Some(b)) => r >= b - EPS_VAL,
            _ => true,
        }
    }
}

/// Runs every solver in `solvers` on `inst`, sharing one optimum.
pub fn solve(inst: &Instance, solvers: &[Solver], options: &SolveOptions, settings: RunSettings) -> Result<Vec<SolveRow>> {
    if solvers.is_empty() {
        return Err(Error::InvalidParameter("no solver selected".into()));
    }
    let n = inst.ground_size();
    let opt = if n <= N_MAX_BRUTE_FORCE { Some(brute_force_opt(&*inst.oracle, &inst.constraint)?.1) } else { None };
    // Curvature is measured exhaustively where feasible; c = 1 is always valid.
    let curvature = if !inst.flagged_submodular {
        None
    } else if n <= N_MAX_EXHAUSTIVE {
        Some(total_curvature(&*inst.oracle)?.c)
    } else {
        Some(1.0)
    };
    solvers.iter().map(|&s| solve_instance(inst, s, options, settings, opt, curvature)).collect()
}

/// Runs a single solver given a precomputed optimum and curvature.
pub fn solve_instance(
    inst: &Instance,
    solver: Solver,
    options: &SolveOptions,
    settings: RunSettings,
    opt: Option<f64>,
    curvature: Option<f64>,
) -> Result<SolveRow> {
    let f = CountingOracle::new(inst.oracle.clone());
    let start = Instant::now();
    let set = run_solver(&f, inst, solver, options, settings)?;
    let elapsed = start.elapsed().as_secs_f64();
    let oracle_calls = f.calls();
    let value = inst.oracle.value(&set);
    let bound = match curvature {
        None => None,
        Some(c) => guarantee(&inst.constraint, solver, options, c)?,
    };
    Ok(SolveRow {
        instance: inst.name.clone(),
        solver: solver.name(),
        n: inst.ground_size(),
        constraint: inst.constraint.kind(),
        set: format_set(&set),
        value,
        opt,
        ratio: opt.map(|o| gap_against(value, o).ratio),
        bound,
        oracle_calls,
        wall_time: settings.timestamps.then_some(elapsed),
        seed: settings.seed,
        version: VERSION_TAG,
    })
}

fn run_solver<O: ValueOracle + ?Sized>(
    f: &O,
    inst: &Instance,
    solver: Solver,
    options: &SolveOptions,
    settings: RunSettings,
) -> Result<Subset> {
    let n = inst.ground_size();
    Ok(match solver {
        Solver::Sg => sequential_greedy(f, &inst.constraint)?.set,
        Solver::Lazy => lazy_greedy(f, &inst.constraint)?.set,
        Solver::SgPartition => {
            let m = partition_of(inst, solver)?;
            let order = options.block_order.clone().unwrap_or_else(|| natural_order(&m));
            sequential_greedy_partition(f, &m, &order)?.set
        }
        Solver::Cg => {
            let m = partition_of(inst, solver)?;
            let params = match options.samples {
                0 => CGParams::exact(options.steps),
                k => CGParams::sampled(options.steps, k, settings.seed),
            };
            let outcome = continuous_greedy(f, &m, &params)?;
            if let Some(path) = &options.trajectory {
                let rows: Vec<TrajectoryRow> = outcome
                    .trajectory
                    .iter()
                    .map(|t| TrajectoryRow {
                        step: t.step,
                        value: t.value,
                        block_sums: t.block_sums.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "),
                    })
                    .collect();
                write_csv(std::fs::File::create(path)?, &rows)?;
            }
            if n <= N_MAX_EXACT {
                pipage_round(&outcome.x, &m, f)?
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(crate::derive_seed(settings.seed, 1));
                pipage_round_sampled(&outcome.x, &m, f, options.samples.max(1), &mut rng)?
            }
        }
    })
}

#[derive(Serialize)]
struct TrajectoryRow {
    step: usize,
    value: f64,
    block_sums: String,
}

fn partition_of(inst: &Instance, solver: Solver) -> Result<crate::matroid::PartitionMatroid> {
    inst.constraint.as_partition().ok_or_else(|| {
        Error::InvalidParameter(format!("solver {} needs a uniform or partition matroid constraint", solver.name()))
    })
}

/// Worst-case ratio promised for `solver` on `constraint` at curvature `c`.
fn guarantee(constraint: &Constraint, solver: Solver, options: &SolveOptions, c: f64) -> Result<Option<f64>> {
    Ok(match (solver, constraint) {
        (Solver::Cg, _) if options.samples == 0 => {
            Some((1.0 - (-1.0f64).exp() - 2.0 / options.steps as f64).max(0.0))
        }
        (Solver::Cg, _) | (_, Constraint::Explicit(_)) => None,
        (_, Constraint::Uniform(_)) => Some(bound_uniform_curvature(c)?),
        (_, Constraint::Partition(_)) => Some(bound_partition_curvature(c)?),
    })
}
