use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{ConstraintSpec, Family, InstanceFile};
use crate::{EPS_VAL, VERSION_TAG};

use super::{read_config, solve, RunSettings, SolveOptions, Solver};

/// A grid of generated instances: every family × size × budget × seed,
/// each solved by every solver.
///
/// ```toml
/// families = ["coverage", "rank"]
/// sizes = [8, 10]
/// kappas = [1, 2, 3, 4]
/// seeds = 10
/// solvers = ["sg", "lazy"]
/// ```
///
/// The instance depends on family, size and seed index only, so a budget
/// sweep reuses the same objective across `kappas`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub sizes: Vec<usize>,
    pub kappas: Vec<usize>,
    pub seeds: usize,
    pub solvers: Vec<Solver>,
    #[serde(default)]
    pub constraint: SweepConstraint,
    #[serde(default = "default_steps")]
    pub steps: usize,
    #[serde(default)]
    pub samples: usize,
}

fn default_steps() -> usize {
    50
}

/// `partition` splits element `p` into block `p mod blocks` with budget
/// `min(κ, block size)` per block.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SweepConstraint {
    #[default]
    Uniform,
    Partition { blocks: usize },
}

impl SweepConfig {
    pub fn load(path: &Path) -> Result<Self> {
        read_config(path)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub family: Family,
    pub n: usize,
    pub kappa: usize,
    pub seed_index: usize,
    pub instance_seed: u64,
    pub solver: &'static str,
    pub value: f64,
    pub opt: Option<f64>,
    pub ratio: Option<f64>,
    pub bound: Option<f64>,
    pub oracle_calls: u64,
    pub wall_time: Option<f64>,
    pub seed: u64,
    pub version: &'static str,
}

impl SweepRow {
    pub fn meets_bound(&self) -> bool {
        match (self.ratio, self.bound) {
            (Some(r), Some(b)) => r >= b - EPS_VAL,
            _ => true,
        }
    }
}

/// Seed of the instance `(family, size, seed_index)` under `master`.
pub fn instance_seed(master: u64, family: Family, size: usize, seed_index: usize) -> u64 {
    let code = Family::ALL.iter().position(|&f| f == family).expect("listed family") as u64;
    crate::derive_seed(master, code << 56 | (size as u64) << 32 | seed_index as u64)
}

/// Rows come out in config order (family, size, κ, seed, solver) whatever
/// the number of workers.
pub fn sweep(config: &SweepConfig, settings: RunSettings) -> Result<Vec<SweepRow>> {
    if config.families.is_empty()
        || config.sizes.is_empty()
        || config.kappas.is_empty()
        || config.seeds == 0
        || config.solvers.is_empty()
    {
        return Err(Error::InvalidParameter("sweep grid is empty".into()));
    }
    let mut jobs = Vec::new();
    for &family in &config.families {
        for &n in &config.sizes {
            for &kappa in &config.kappas {
                for s in 0..config.seeds {
                    jobs.push((family, n, kappa, s));
                }
            }
        }
    }
    let options = SolveOptions { steps: config.steps, samples: config.samples, ..SolveOptions::default() };
    let batches = jobs
        .par_iter()
        .map(|&(family, n, kappa, s)| {
            let instance_seed = instance_seed(settings.seed, family, n, s);
            let mut rng = ChaCha8Rng::seed_from_u64(instance_seed);
            let file = InstanceFile {
                name: format!("{family}-n{n}-s{s}"),
                objective: family.generate(n, &mut rng),
                constraint: Some(constraint_for(&config.constraint, n, kappa)?),
            };
            let inst = file.build()?;
            let run = RunSettings { seed: instance_seed, ..settings };
            let rows = solve(&inst, &config.solvers, &options, run)?;
            Ok(rows
                .into_iter()
                .map(|r| SweepRow {
                    family,
                    n,
                    kappa,
                    seed_index: s,
                    instance_seed,
                    solver: r.solver,
                    value: r.value,
                    opt: r.opt,
                    ratio: r.ratio,
                    bound: r.bound,
                    oracle_calls: r.oracle_calls,
                    wall_time: r.wall_time,
                    seed: settings.seed,
                    version: VERSION_TAG,
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(batches.into_iter().flatten().collect())
}

fn constraint_for(spec: &SweepConstraint, n: usize, kappa: usize) -> Result<ConstraintSpec> {
    Ok(match *spec {
        SweepConstraint::Uniform => ConstraintSpec::Uniform { kappa },
        SweepConstraint::Partition { blocks } => {
            if blocks == 0 || blocks > n {
                return Err(Error::InvalidParameter(format!("cannot split {n} elements into {blocks} blocks")));
            }
            let blocks: Vec<Vec<usize>> = (0..blocks).map(|b| (b..n).step_by(blocks).collect()).collect();
            let kappas = blocks.iter().map(|b| kappa.min(b.len())).collect();
            ConstraintSpec::Partition { blocks, kappas }
        }
    })
}
