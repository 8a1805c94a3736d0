use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::subset::Subset;

/// Weighted coverage: element `p` covers the universe items `cover_sets[p]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverageInstance {
    /// Weight of each universe item.
    pub weights: Vec<f64>,
    pub cover_sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct CoverageOracle {
    weights: Vec<f64>,
    covers: Vec<Subset>,
}

impl CoverageOracle {
    pub fn new(inst: &CoverageInstance) -> Result<Self> {
        if inst.cover_sets.is_empty() {
            return Err(Error::InvalidInstance("coverage instance needs at least one element".into()));
        }
        if inst.weights.iter().any(|w| !(*w >= 0.0)) {
            return Err(Error::InvalidInstance("coverage weights must be nonnegative".into()));
        }
        let width = inst.weights.len().max(1);
        let covers = inst
            .cover_sets
            .iter()
            .map(|c| Subset::from_elements(width, c.iter().copied()))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidInstance(format!("cover set: {e}")))?;
        Ok(Self { weights: inst.weights.clone(), covers })
    }

    pub fn covered(&self, set: &Subset) -> Subset {
        let mut u = Subset::empty(self.weights.len().max(1));
        for p in set.iter() {
            u.union_with(&self.covers[p]);
        }
        u
    }
}

impl ValueOracle for CoverageOracle {
    fn ground_size(&self) -> usize {
        self.covers.len()
    }
    /// Σ of weights over `∪_{p∈S} C_p`.
    fn value(&self, set: &Subset) -> f64 {
        self.covered(set).iter().map(|i| self.weights[i]).sum()
    }
    fn name(&self) -> &str {
        "coverage"
    }
    fn value_range(&self) -> Option<f64> {
        Some(self.weights.iter().sum())
    }
}
