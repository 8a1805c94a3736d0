//! Concrete submodular objectives and seeded instance generators.

mod coverage;
mod exemplar;
pub mod generate;
mod modular;
mod rank;
mod welfare;

pub use coverage::{CoverageInstance, CoverageOracle};
pub use exemplar::{harvesting_partition, ExemplarInstance, ExemplarOracle, LossMode, Point};
pub use modular::{ModularInstance, ModularOracle};
pub use rank::{matrix_rank, RankInstance, RankOracle, EPS_RANK};
pub use welfare::{welfare_lift, WelfareOracle};

use crate::oracle::ValueOracle;
use crate::subset::Subset;

/// `f(R) = inner({map[p] : p ∈ R})`: relabels a ground set onto another,
/// possibly many-to-one.
pub struct ProjectedOracle<O> {
    inner: O,
    map: Vec<usize>,
    name: String,
}

impl<O: ValueOracle> ProjectedOracle<O> {
    pub fn new(inner: O, map: Vec<usize>) -> Self {
        assert!(map.iter().all(|&q| q < inner.ground_size()), "projection target out of range");
        let name = format!("{}-projected", inner.name());
        Self { inner, map, name }
    }

    pub fn project(&self, set: &Subset) -> Subset {
        let mut out = Subset::empty(self.inner.ground_size());
        for p in set.iter() {
            out.insert(self.map[p]);
        }
        out
    }
}

impl<O: ValueOracle> ValueOracle for ProjectedOracle<O> {
    fn ground_size(&self) -> usize {
        self.map.len()
    }
    fn value(&self, set: &Subset) -> f64 {
        self.inner.value(&self.project(set))
    }
    fn name(&self) -> &str {
        &self.name
    }
    fn value_range(&self) -> Option<f64> {
        self.inner.value_range()
    }
}
