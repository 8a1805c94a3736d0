//! Instance files: one objective plus its constraint, stored as TOML.
//!
//! ```toml
//! name = "three-covers"
//!
//! [objective]
//! kind = "coverage"
//! weights = [1.0, 1.0, 1.0]
//! cover_sets = [[0, 1], [1, 2], [2]]
//!
//! [constraint]
//! kind = "uniform"
//! kappa = 2
//! ```
//!
//! Objective kinds: `modular`, `coverage`, `exemplar`, `rank`, `welfare`,
//! `harvesting` and `square-cardinality` (a supermodular decoy). Constraint
//! kinds: `uniform`, `partition` and `explicit` (maximal sets of an
//! arbitrary independence system). `welfare` and `harvesting` derive their
//! own partition matroid and take no `[constraint]` table. Unknown fields
//! are rejected.

use std::path::Path;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functions::{
    generate, harvesting_partition, welfare_lift, CoverageInstance, CoverageOracle, ExemplarInstance, ExemplarOracle,
    LossMode, ModularInstance, ModularOracle, Point, RankInstance, RankOracle,
};
use crate::matroid::{IndependenceOracle, PartitionMatroid, SetSystem, UniformMatroid};
use crate::oracle::{FnOracle, ValueOracle};
use crate::subset::{ElementId, Subset};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub name: String,
    pub objective: Objective,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraint: Option<ConstraintSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Objective {
    Modular(ModularInstance),
    Coverage(CoverageInstance),
    Exemplar {
        #[serde(default)]
        mode: LossMode,
        candidates: Vec<Point>,
        data: Vec<Point>,
        phantom: Point,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dissimilarity: Option<Vec<Vec<f64>>>,
    },
    Rank(RankInstance),
    /// One local objective per agent, each over the same `items` items.
    Welfare { items: usize, agents: Vec<Objective> },
    /// Agent `i` deploys up to `kappas[i]` devices on candidates `access[i]`.
    Harvesting {
        candidates: Vec<Point>,
        data: Vec<Point>,
        phantom: Point,
        access: Vec<Vec<usize>>,
        kappas: Vec<usize>,
    },
    /// `f(S) = |S|²`: monotone and normal but supermodular.
    SquareCardinality { n: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ConstraintSpec {
    Uniform { kappa: usize },
    Partition { blocks: Vec<Vec<ElementId>>, kappas: Vec<usize> },
    Explicit { maximal: Vec<Vec<ElementId>> },
}

/// A built constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    Uniform(UniformMatroid),
    Partition(PartitionMatroid),
    Explicit(SetSystem),
}

impl Constraint {
    /// Uniform matroids become single-block partitions; explicit systems
    /// have no partition form.
    pub fn as_partition(&self) -> Option<PartitionMatroid> {
        match self {
            Constraint::Uniform(u) => Some(u.to_partition()),
            Constraint::Partition(p) => Some(p.clone()),
            Constraint::Explicit(_) => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Constraint::Uniform(_) => "uniform",
            Constraint::Partition(_) => "partition",
            Constraint::Explicit(_) => "explicit",
        }
    }

    fn inner(&self) -> &dyn IndependenceOracle {
        match self {
            Constraint::Uniform(u) => u,
            Constraint::Partition(p) => p,
            Constraint::Explicit(s) => s,
        }
    }
}

impl IndependenceOracle for Constraint {
    fn ground_size(&self) -> usize {
        self.inner().ground_size()
    }
    fn is_independent(&self, set: &Subset) -> bool {
        self.inner().is_independent(set)
    }
    fn can_add(&self, set: &Subset, p: ElementId) -> bool {
        self.inner().can_add(set, p)
    }
    fn rank_ceiling(&self) -> usize {
        self.inner().rank_ceiling()
    }
}

pub struct Instance {
    pub name: String,
    pub oracle: Arc<dyn ValueOracle>,
    pub constraint: Constraint,
    /// Whether the objective kind is monotone submodular by construction.
    pub flagged_submodular: bool,
}

impl std::fmt::Debug for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Instance")
            .field("name", &self.name)
            .field("oracle", &self.oracle.name())
            .field("constraint", &self.constraint)
            .field("flagged_submodular", &self.flagged_submodular)
            .finish()
    }
}

impl Instance {
    pub fn ground_size(&self) -> usize {
        self.oracle.ground_size()
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse { path: String::new(), message: e.to_string() })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Parse { path: path.display().to_string(), message: e.to_string() })
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::InvalidInstance(e.to_string()))
    }

    pub fn build(&self) -> Result<Instance> {
        let (oracle, derived_constraint) = build_objective(&self.objective)?;
        let n = oracle.ground_size();
        let constraint = match (&self.constraint, derived_constraint) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidInstance(format!(
                    "objective `{}` derives its own constraint; remove the [constraint] table",
                    oracle.name()
                )))
            }
            (None, Some(p)) => Constraint::Partition(p),
            (Some(spec), None) => build_constraint(spec, n)?,
            (None, None) => return Err(Error::InvalidInstance("missing [constraint] table".into())),
        };
        Ok(Instance {
            name: self.name.clone(),
            oracle,
            constraint,
            flagged_submodular: !matches!(
                self.objective,
                Objective::SquareCardinality { .. } | Objective::Exemplar { mode: LossMode::ExemplarAverage, .. }
            ),
        })
    }
}

/// Parses and builds an instance file in one step.
pub fn load_instance(path: impl AsRef<Path>) -> Result<Instance> {
    InstanceFile::load(path)?.build()
}

fn build_constraint(spec: &ConstraintSpec, n: usize) -> Result<Constraint> {
    Ok(match spec {
        ConstraintSpec::Uniform { kappa } => Constraint::Uniform(UniformMatroid::new(n, *kappa)?),
        ConstraintSpec::Partition { blocks, kappas } => {
            Constraint::Partition(PartitionMatroid::new(n, blocks.clone(), kappas.clone())?)
        }
        ConstraintSpec::Explicit { maximal } => Constraint::Explicit(SetSystem::new(n, maximal.clone())?),
    })
}

fn exemplar_instance(candidates: &[Point], data: &[Point], phantom: Point, dissimilarity: Option<Vec<Vec<f64>>>) -> ExemplarInstance {
    ExemplarInstance { candidates: candidates.to_vec(), data: data.to_vec(), phantom, dissimilarity }
}

fn build_objective(obj: &Objective) -> Result<(Arc<dyn ValueOracle>, Option<PartitionMatroid>)> {
    Ok(match obj {
        Objective::Modular(inst) => (Arc::new(ModularOracle::new(inst)?), None),
        Objective::Coverage(inst) => (Arc::new(CoverageOracle::new(inst)?), None),
        Objective::Exemplar { mode, candidates, data, phantom, dissimilarity } => {
            let inst = exemplar_instance(candidates, data, *phantom, dissimilarity.clone());
            (Arc::new(ExemplarOracle::new(&inst, *mode)?), None)
        }
        Objective::Rank(inst) => (Arc::new(RankOracle::new(inst)?), None),
        Objective::Welfare { items, agents } => {
            let locals = agents
                .iter()
                .map(|a| match build_objective(a)? {
                    (f, None) => Ok(f),
                    (_, Some(_)) => Err(Error::InvalidInstance("welfare agents need plain objectives".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            let (_, f, m) = welfare_lift(locals, *items)?;
            (Arc::new(f), Some(m))
        }
        Objective::Harvesting { candidates, data, phantom, access, kappas } => {
            if access.len() != kappas.len() {
                return Err(Error::InvalidInstance(format!(
                    "{} access lists but {} budgets",
                    access.len(),
                    kappas.len()
                )));
            }
            let base = ExemplarOracle::new(&exemplar_instance(candidates, data, *phantom, None), LossMode::KMedoid)?;
            let (f, m, _) = harvesting_partition(Arc::new(base), access, kappas.clone())?;
            (Arc::new(f), Some(m))
        }
        Objective::SquareCardinality { n } => {
            if *n == 0 {
                return Err(Error::InvalidInstance("square-cardinality needs n ≥ 1".into()));
            }
            (Arc::new(FnOracle::new(*n, "square-cardinality", |s: &Subset| (s.len() * s.len()) as f64)), None)
        }
    })
}

/// Objective families available to generated sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Modular,
    Coverage,
    Exemplar,
    Rank,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Modular, Family::Coverage, Family::Exemplar, Family::Rank];

    pub fn name(self) -> &'static str {
        match self {
            Family::Modular => "modular",
            Family::Coverage => "coverage",
            Family::Exemplar => "exemplar",
            Family::Rank => "rank",
        }
    }

    /// A random objective over `n` elements.
    pub fn generate(self, n: usize, rng: &mut impl Rng) -> Objective {
        match self {
            Family::Modular => Objective::Modular(generate::modular(n, rng)),
            Family::Coverage => Objective::Coverage(generate::coverage(n, 2 * n, rng)),
            Family::Exemplar => {
                let inst = generate::exemplar(n, 2 * n, rng);
                Objective::Exemplar {
                    mode: LossMode::KMedoid,
                    candidates: inst.candidates,
                    data: inst.data,
                    phantom: inst.phantom,
                    dissimilarity: None,
                }
            }
            Family::Rank => Objective::Rank(generate::traffic(n, rng)),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
