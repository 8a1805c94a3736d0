//! Exemplar-based clustering and the data-harvesting deployments built on it.
//!
//! Two loss conventions are supported. [`LossMode::KMedoid`] assigns every
//! datum to its nearest chosen exemplar, `L(R) = (1/|D|) Σ_d min_{p∈R} dist(p,d)`,
//! and makes the utility monotone submodular. [`LossMode::ExemplarAverage`]
//! averages each chosen exemplar's distance to its nearest datum,
//! `L(R) = (1/|R|) Σ_{p∈R} min_d dist(p,d)`; it is kept for comparison and
//! carries no submodularity guarantee.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::PartitionMatroid;
use crate::oracle::ValueOracle;
use crate::subset::Subset;

use super::ProjectedOracle;

pub type Point = [f64; 2];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LossMode {
    #[default]
    KMedoid,
    ExemplarAverage,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExemplarInstance {
    pub candidates: Vec<Point>,
    pub data: Vec<Point>,
    pub phantom: Point,
    /// Explicit dissimilarities, one row per candidate followed by one row
    /// for the phantom, each of length `|data|`. Euclidean when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dissimilarity: Option<Vec<Vec<f64>>>,
}

impl ExemplarInstance {
    fn distance_rows(&self) -> Result<(Vec<Vec<f64>>, Vec<f64>)> {
        if self.candidates.is_empty() || self.data.is_empty() {
            return Err(Error::InvalidInstance("exemplar instance needs candidates and data".into()));
        }
        match &self.dissimilarity {
            Some(rows) => {
                if rows.len() != self.candidates.len() + 1 || rows.iter().any(|r| r.len() != self.data.len()) {
                    return Err(Error::InvalidInstance(format!(
                        "dissimilarity must be {}x{}",
                        self.candidates.len() + 1,
                        self.data.len()
                    )));
                }
                if rows.iter().flatten().any(|d| !(*d >= 0.0)) {
                    return Err(Error::InvalidInstance("dissimilarities must be nonnegative".into()));
                }
                let mut rows = rows.clone();
                let phantom = rows.pop().expect("checked length");
                Ok((rows, phantom))
            }
            None => {
                let row = |a: &Point| self.data.iter().map(|d| euclidean(a, d)).collect::<Vec<_>>();
                Ok((self.candidates.iter().map(row).collect(), row(&self.phantom)))
            }
        }
    }
}

fn euclidean(a: &Point, b: &Point) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// `f(R) = L({d0}) − L(R ∪ {d0})` over the candidate points.
#[derive(Clone, Debug)]
pub struct ExemplarOracle {
    mode: LossMode,
    /// `dist[p][d]` for candidate `p` and datum `d`.
    dist: Vec<Vec<f64>>,
    phantom_dist: Vec<f64>,
    name: String,
}

impl ExemplarOracle {
    pub fn new(inst: &ExemplarInstance, mode: LossMode) -> Result<Self> {
        let (dist, phantom_dist) = inst.distance_rows()?;
        let name = match mode {
            LossMode::KMedoid => "exemplar",
            LossMode::ExemplarAverage => "exemplar-average",
        };
        Ok(Self { mode, dist, phantom_dist, name: name.into() })
    }

    pub fn mode(&self) -> LossMode {
        self.mode
    }

    /// Loss of a nonempty exemplar set drawn from the candidates.
    pub fn exemplar_loss(&self, set: &Subset) -> Result<f64> {
        set.check_width(self.dist.len())?;
        if set.is_empty() {
            return Err(Error::EmptyExemplarSet);
        }
        let rows: Vec<&[f64]> = set.iter().map(|p| self.dist[p].as_slice()).collect();
        Ok(self.loss(&rows))
    }

    fn loss(&self, rows: &[&[f64]]) -> f64 {
        match self.mode {
            LossMode::KMedoid => {
                let d = self.phantom_dist.len();
                let total: f64 = (0..d).map(|j| rows.iter().map(|r| r[j]).fold(f64::INFINITY, f64::min)).sum();
                total / d as f64
            }
            LossMode::ExemplarAverage => {
                let total: f64 = rows.iter().map(|r| r.iter().copied().fold(f64::INFINITY, f64::min)).sum();
                total / rows.len() as f64
            }
        }
    }

    fn phantom_loss(&self) -> f64 {
        self.loss(&[self.phantom_dist.as_slice()])
    }
}

impl ValueOracle for ExemplarOracle {
    fn ground_size(&self) -> usize {
        self.dist.len()
    }
    fn value(&self, set: &Subset) -> f64 {
        let mut rows: Vec<&[f64]> = set.iter().map(|p| self.dist[p].as_slice()).collect();
        rows.push(&self.phantom_dist);
        self.phantom_loss() - self.loss(&rows)
    }
    fn name(&self) -> &str {
        &self.name
    }
    fn value_range(&self) -> Option<f64> {
        Some(self.phantom_loss())
    }
}

/// Multi-agent harvesting: agent `i` may deploy `kappas[i]` devices on its
/// own retrieval points `access[i]`, which may overlap between agents. The
/// ground set is the agent-major list of pairs `(i, b)` and the blocks
/// `{(i, b) : b ∈ access[i]}` are disjoint by construction.
pub fn harvesting_partition(
    oracle: Arc<ExemplarOracle>,
    access: &[Vec<usize>],
    kappas: Vec<usize>,
) -> Result<(ProjectedOracle<Arc<ExemplarOracle>>, PartitionMatroid, Vec<(usize, usize)>)> {
    let pairs: Vec<(usize, usize)> =
        access.iter().enumerate().flat_map(|(i, bs)| bs.iter().map(move |&b| (i, b))).collect();
    if let Some(&(_, b)) = pairs.iter().find(|(_, b)| *b >= oracle.ground_size()) {
        return Err(Error::ElementOutOfRange { element: b, size: oracle.ground_size() });
    }
    let mut blocks = vec![Vec::new(); access.len()];
    for (k, &(i, _)) in pairs.iter().enumerate() {
        blocks[i].push(k);
    }
    let matroid = PartitionMatroid::new(pairs.len(), blocks, kappas)?;
    let projected = ProjectedOracle::new(oracle, pairs.iter().map(|&(_, b)| b).collect());
    Ok((projected, matroid, pairs))
}
