//! Link-flow identifiability: rank of flow-conservation rows stacked with
//! the measurement rows of the instrumented links.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::subset::Subset;

/// Relative pivot threshold for rank computation.
pub const EPS_RANK: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankInstance {
    /// Flow-conservation rows, one per node.
    pub base_rows: Vec<Vec<f64>>,
    /// One measurement row per candidate link.
    pub measurement_rows: Vec<Vec<f64>>,
}

impl RankInstance {
    /// Conservation rows at every node not listed in `boundary` (entry and
    /// exit nodes, where flow enters or leaves the network), plus one unit
    /// measurement row per link. Links are `(from, to)` node pairs.
    pub fn from_network(nodes: usize, links: &[(usize, usize)], boundary: &[usize]) -> Result<Self> {
        let mut base_rows = vec![vec![0.0; links.len()]; nodes];
        for (l, &(from, to)) in links.iter().enumerate() {
            if from >= nodes || to >= nodes || from == to {
                return Err(Error::InvalidInstance(format!("link {l} ({from}->{to}) is not a valid link")));
            }
            base_rows[from][l] -= 1.0;
            base_rows[to][l] += 1.0;
        }
        let base_rows = base_rows
            .into_iter()
            .enumerate()
            .filter(|(v, _)| !boundary.contains(v))
            .map(|(_, row)| row)
            .collect();
        let measurement_rows = (0..links.len())
            .map(|l| {
                let mut row = vec![0.0; links.len()];
                row[l] = 1.0;
                row
            })
            .collect();
        Ok(Self { base_rows, measurement_rows })
    }
}

/// Rank by Gaussian elimination with partial pivoting. A pivot counts when
/// its magnitude exceeds `rel_tol · max(1, max |a_ij|)`.
pub fn matrix_rank(rows: &[Vec<f64>], rel_tol: f64) -> usize {
    let Some(width) = rows.first().map(Vec::len) else { return 0 };
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let scale = a.iter().flatten().fold(1.0_f64, |m, x| m.max(x.abs()));
    let tol = rel_tol * scale;
    let mut rank = 0;
    for col in 0..width {
        if rank == a.len() {
            break;
        }
        let (pivot, magnitude) = (rank..a.len())
            .map(|r| (r, a[r][col].abs()))
            .fold((rank, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if magnitude <= tol {
            continue;
        }
        a.swap(rank, pivot);
        for r in rank + 1..a.len() {
            let factor = a[r][col] / a[rank][col];
            if factor != 0.0 {
                for c in col..width {
                    a[r][c] -= factor * a[rank][c];
                }
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Clone, Debug)]
pub struct RankOracle {
    inst: RankInstance,
    width: usize,
}

impl RankOracle {
    pub fn new(inst: &RankInstance) -> Result<Self> {
        let width = inst
            .base_rows
            .iter()
            .chain(&inst.measurement_rows)
            .map(Vec::len)
            .next()
            .ok_or_else(|| Error::InvalidInstance("rank instance has no rows".into()))?;
        if inst.base_rows.iter().chain(&inst.measurement_rows).any(|r| r.len() != width) {
            return Err(Error::InvalidInstance("all rows must have the same width".into()));
        }
        if inst.measurement_rows.is_empty() {
            return Err(Error::InvalidInstance("rank instance has no candidate links".into()));
        }
        Ok(Self { inst: inst.clone(), width })
    }

    pub fn base_rank(&self) -> usize {
        matrix_rank(&self.inst.base_rows, EPS_RANK)
    }

    /// Rank of the conservation rows stacked with the rows of `links`.
    pub fn rank_value(&self, links: &Subset) -> usize {
        let mut rows = self.inst.base_rows.clone();
        rows.extend(links.iter().map(|l| self.inst.measurement_rows[l].clone()));
        matrix_rank(&rows, EPS_RANK)
    }
}

impl ValueOracle for RankOracle {
    fn ground_size(&self) -> usize {
        self.inst.measurement_rows.len()
    }
    /// `rank(A) − rank(base rows)`, so the oracle is normal.
    fn value(&self, set: &Subset) -> f64 {
        (self.rank_value(set) - self.base_rank()) as f64
    }
    fn name(&self) -> &str {
        "rank"
    }
    fn value_range(&self) -> Option<f64> {
        Some((self.width - self.base_rank().min(self.width)) as f64)
    }
}
