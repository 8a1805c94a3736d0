//! Welfare allocation lifted to a partition-matroid problem.
//!
//! Items `0..m` go to agents `0..N`. The lifted ground set holds the pairs
//! `(item, agent)` at index `item·N + agent`; block `i` is item `i`'s row
//! with budget 1, so each item goes to at most one agent.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matroid::PartitionMatroid;
use crate::oracle::ValueOracle;
use crate::subset::{GroundSet, Subset};

pub struct WelfareOracle {
    items: usize,
    locals: Vec<Arc<dyn ValueOracle>>,
}

impl WelfareOracle {
    pub fn agents(&self) -> usize {
        self.locals.len()
    }

    pub fn items(&self) -> usize {
        self.items
    }

    pub fn pair_index(&self, item: usize, agent: usize) -> usize {
        item * self.locals.len() + agent
    }

    /// Items assigned to `agent` under the lifted set.
    pub fn bundle(&self, set: &Subset, agent: usize) -> Subset {
        let n = self.locals.len();
        let mut bundle = Subset::empty(self.items);
        for k in set.iter().filter(|k| k % n == agent) {
            bundle.insert(k / n);
        }
        bundle
    }
}

impl ValueOracle for WelfareOracle {
    fn ground_size(&self) -> usize {
        self.items * self.locals.len()
    }
    /// `Σ_j f_j({items i : (i, j) ∈ R})`.
    fn value(&self, set: &Subset) -> f64 {
        self.locals.iter().enumerate().map(|(j, f)| f.value(&self.bundle(set, j))).sum()
    }
    fn name(&self) -> &str {
        "welfare"
    }
    fn value_range(&self) -> Option<f64> {
        self.locals.iter().map(|f| f.value_range()).sum()
    }
}

/// Lifts per-agent utilities over `items` items to a single objective with
/// its partition matroid.
pub fn welfare_lift(
    locals: Vec<Arc<dyn ValueOracle>>,
    items: usize,
) -> Result<(GroundSet, WelfareOracle, PartitionMatroid)> {
    if locals.is_empty() || items == 0 {
        return Err(Error::InvalidInstance("welfare needs at least one agent and one item".into()));
    }
    if let Some(f) = locals.iter().find(|f| f.ground_size() != items) {
        return Err(Error::GroundSetMismatch { expected: items, actual: f.ground_size() });
    }
    let agents = locals.len();
    let blocks = (0..items).map(|i| (i * agents..(i + 1) * agents).collect()).collect();
    let matroid = PartitionMatroid::new(items * agents, blocks, vec![1; items])?;
    Ok((GroundSet::new(items * agents)?, WelfareOracle { items, locals }, matroid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{CoverageInstance, CoverageOracle, ModularInstance, ModularOracle};

    #[test]
    fn single_agent_is_a_relabeling() {
        let local = ModularOracle::new(&ModularInstance { weights: vec![1.0, 2.0, 4.0] }).unwrap();
        let (ground, f, m) = welfare_lift(vec![Arc::new(local.clone())], 3).unwrap();
        assert_eq!(ground.len(), 3);
        assert_eq!(m.kappas(), &[1, 1, 1]);
        for mask in 0..8 {
            let s = Subset::from_mask(3, mask);
            assert_eq!(f.value(&s), local.value(&s));
        }
    }

    #[test]
    fn identical_agents_are_symmetric() {
        let cov = CoverageInstance { weights: vec![1.0; 3], cover_sets: vec![vec![0, 1], vec![1, 2]] };
        let a: Arc<dyn ValueOracle> = Arc::new(CoverageOracle::new(&cov).unwrap());
        let (_, f, _) = welfare_lift(vec![a.clone(), a], 2).unwrap();
        let to_first = Subset::from_elements(4, [f.pair_index(0, 0)]).unwrap();
        let to_second = Subset::from_elements(4, [f.pair_index(0, 1)]).unwrap();
        assert_eq!(f.value(&to_first), f.value(&to_second));
    }

    #[test]
    fn mismatched_local_ground_set_rejected() {
        let local = ModularOracle::new(&ModularInstance { weights: vec![1.0, 2.0] }).unwrap();
        assert!(welfare_lift(vec![Arc::new(local)], 3).is_err());
    }
}
