use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularInstance {
    pub weights: Vec<f64>,
}

/// `f(S) = Σ_{p∈S} w_p`.
#[derive(Clone, Debug)]
pub struct ModularOracle {
    weights: Vec<f64>,
}

impl ModularOracle {
    pub fn new(inst: &ModularInstance) -> Result<Self> {
        if inst.weights.is_empty() || inst.weights.iter().any(|w| !(*w >= 0.0)) {
            return Err(Error::InvalidInstance("modular weights must be nonempty and nonnegative".into()));
        }
        Ok(Self { weights: inst.weights.clone() })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl ValueOracle for ModularOracle {
    fn ground_size(&self) -> usize {
        self.weights.len()
    }
    fn value(&self, set: &Subset) -> f64 {
        set.iter().map(|p| self.weights[p]).sum()
    }
    fn name(&self) -> &str {
        "modular"
    }
    fn value_range(&self) -> Option<f64> {
        Some(self.weights.iter().sum())
    }
    fn curvature_hint(&self) -> Option<f64> {
        Some(0.0)
    }
}
