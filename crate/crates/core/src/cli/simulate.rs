use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bruteforce::{brute_force_opt, gap_against, N_MAX_BRUTE_FORCE};
use crate::distributed::{
    bernoulli_sweep, clique_number, find_message_sequence, gap_bound_incomplete, run_distributed_sg, CommGraph,
    DropModel, MessageSchedule,
};
use crate::error::{Error, Result};
use crate::instance::load_instance;
use crate::{EPS_VAL, VERSION_TAG};

use super::{read_config, RunSettings};

/// A distributed-greedy scenario. Agents are the blocks of the instance's
/// partition matroid.
///
/// ```toml
/// instance = "harvest.toml"   # relative to this file
/// edges = [[0, 1], [1, 2]]
/// schedule = [0, 1, 2]        # optional; may hop between non-neighbours
///
/// [drops]
/// kind = "bernoulli"
/// p = [0.0, 0.5, 1.0]
/// trials = 20
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub instance: PathBuf,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schedule: Option<Vec<usize>>,
    #[serde(default)]
    pub drops: ScenarioDrops,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ScenarioDrops {
    #[default]
    None,
    Bernoulli { p: Vec<f64>, trials: usize },
    FailedHops { hops: Vec<usize> },
}

impl Scenario {
    /// Loads a scenario and resolves its instance path against the file's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let mut s: Scenario = read_config(path)?;
        if s.instance.is_relative() {
            if let Some(dir) = path.parent() {
                s.instance = dir.join(&s.instance);
            }
        }
        Ok(s)
    }
}

/// One CSV row of `simulate`. `p` is empty for deterministic drop models;
/// `trial_seed` is the derived seed of a Bernoulli trial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulateRow {
    pub trial: usize,
    pub p: Option<f64>,
    pub value: f64,
    pub opt: Option<f64>,
    pub ratio: Option<f64>,
    pub omega: usize,
    pub bound: f64,
    pub hamiltonian_flag: bool,
    pub revisits: usize,
    pub exact_walk: bool,
    pub trial_seed: Option<u64>,
    pub seed: u64,
    pub version: &'static str,
}

impl SimulateRow {
    pub fn meets_bound(&self) -> bool {
        self.ratio.is_none_or(|r| r >= self.bound - EPS_VAL)
    }
}

pub fn simulate(scenario: &Scenario, settings: RunSettings) -> Result<Vec<SimulateRow>> {
    let inst = load_instance(&scenario.instance)?;
    let m = inst.constraint.as_partition().ok_or_else(|| {
        Error::InvalidInstance("distributed simulation needs a partition or uniform constraint".into())
    })?;
    let agents = m.num_blocks();
    let graph = CommGraph::new(agents, &scenario.edges)?;
    let schedule = match &scenario.schedule {
        Some(walk) => MessageSchedule::from_override(&graph, walk.clone())?,
        None => find_message_sequence(&graph)?,
    };
    let f = &*inst.oracle;
    let base = |trial, p, value, omega, trial_seed, opt: Option<f64>| -> Result<SimulateRow> {
        Ok(SimulateRow {
            trial,
            p,
            value,
            opt,
            ratio: opt.map(|o| gap_against(value, o).ratio),
            omega,
            bound: gap_bound_incomplete(agents, omega)?,
            hamiltonian_flag: schedule.is_hamiltonian(),
            revisits: schedule.revisits(),
            exact_walk: schedule.exact,
            trial_seed,
            seed: settings.seed,
            version: VERSION_TAG,
        })
    };
    match &scenario.drops {
        ScenarioDrops::Bernoulli { p, trials } => {
            if p.is_empty() || *trials == 0 {
                return Err(Error::InvalidParameter("bernoulli drops need probabilities and trials".into()));
            }
            let table = bernoulli_sweep(f, &m, &schedule, p, *trials, settings.seed)?;
            table
                .rows
                .iter()
                .map(|r| base(r.trial, Some(r.p_success), r.value, r.omega, Some(r.seed), r.opt))
                .collect()
        }
        drops => {
            let model = match drops {
                ScenarioDrops::FailedHops { hops } => DropModel::FailedHops(hops.iter().copied().collect::<BTreeSet<_>>()),
                _ => DropModel::None,
            };
            let opt = if f.ground_size() <= N_MAX_BRUTE_FORCE { Some(brute_force_opt(f, &m)?.1) } else { None };
            let run = run_distributed_sg(f, &m, &schedule, &model)?;
            let omega = clique_number(&run.info)?;
            Ok(vec![base(0, None, run.value, omega, None, opt)?])
        }
    }
}
