//! Sequential greedy solvers and their a-priori approximation bounds.
//!
//! Every solver breaks ties in favour of the lowest element index. The lazy
//! variant reproduces the plain one exactly because of that rule.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::Serialize;

use crate::EPS_VAL;
use crate::error::{Error, Result};
use crate::matroid::{IndependenceOracle, PartitionMatroid};
use crate::oracle::ValueOracle;
use crate::subset::{ElementId, Subset};

const PARALLEL_SCAN_MIN: usize = 64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Pick {
    pub element: ElementId,
    /// Marginal gain at the time of the pick.
    pub gain: f64,
    /// Oracle calls spent choosing this pick.
    pub oracle_calls: u64,
}

/// Audit trail of a greedy run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GreedyTrace {
    pub picks: Vec<Pick>,
    #[serde(serialize_with = "serialize_subset")]
    pub set: Subset,
    pub value: f64,
    /// Calls made before the first pick (`f(∅)`, plus the lazy initial pass).
    pub initial_calls: u64,
}

fn serialize_subset<S: serde::Serializer>(s: &Subset, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

impl GreedyTrace {
    pub fn oracle_calls(&self) -> u64 {
        self.initial_calls + self.picks.iter().map(|p| p.oracle_calls).sum::<u64>()
    }

    pub fn elements(&self) -> Vec<ElementId> {
        self.picks.iter().map(|p| p.element).collect()
    }

    /// The prefix sets `∅, {p1}, {p1,p2}, …`.
    pub fn prefixes(&self) -> impl Iterator<Item = Subset> + '_ {
        let mut s = Subset::empty(self.set.width());
        std::iter::once(s.clone()).chain(self.picks.iter().map(move |p| {
            s.insert(p.element);
            s.clone()
        }))
    }
}

/// Best `(element, value of set ∪ {element})` among `candidates`, lowest index on ties.
pub(crate) fn argmax<O: ValueOracle + ?Sized>(f: &O, set: &Subset, candidates: &[ElementId]) -> Option<(ElementId, f64)> {
    let values: Vec<f64> = if candidates.len() >= PARALLEL_SCAN_MIN {
        candidates.par_iter().map(|&p| f.value(&set.with(p))).collect()
    } else {
        candidates.iter().map(|&p| f.value(&set.with(p))).collect()
    };
    let mut best: Option<(ElementId, f64)> = None;
    for (&p, &v) in candidates.iter().zip(&values) {
        if best.is_none_or(|(_, bv)| v > bv) {
            best = Some((p, v));
        }
    }
    best
}

/// Greedy over an arbitrary independence oracle: repeatedly add the feasible
/// element of largest marginal gain until no element can be added. Zero-gain
/// picks are still made, so the result is a maximal independent set.
pub fn sequential_greedy<O, M>(f: &O, m: &M) -> Result<GreedyTrace>
where
    O: ValueOracle + ?Sized,
    M: IndependenceOracle + ?Sized,
{
    let n = check_grounds(f, m)?;
    let mut set = Subset::empty(n);
    let mut current = f.value(&set);
    let mut picks = Vec::new();
    loop {
        let candidates: Vec<ElementId> = (0..n).filter(|&p| !set.contains(p) && m.can_add(&set, p)).collect();
        let Some((p, v)) = argmax(f, &set, &candidates) else { break };
        picks.push(Pick { element: p, gain: v - current, oracle_calls: candidates.len() as u64 });
        set.insert(p);
        current = v;
    }
    Ok(GreedyTrace { picks, set, value: current, initial_calls: 1 })
}

/// Partition-matroid greedy: blocks are visited in `block_order`, and block
/// `i` greedily receives `κ_i` elements of `P_i` given every earlier pick.
pub fn sequential_greedy_partition<O>(f: &O, m: &PartitionMatroid, block_order: &[usize]) -> Result<GreedyTrace>
where
    O: ValueOracle + ?Sized,
{
    let n = check_grounds(f, m)?;
    check_permutation(block_order, m.num_blocks())?;
    let mut set = Subset::empty(n);
    let mut current = f.value(&set);
    let mut picks = Vec::new();
    for &b in block_order {
        for _ in 0..m.kappas()[b] {
            let candidates: Vec<ElementId> = m.blocks()[b].iter().copied().filter(|&p| !set.contains(p)).collect();
            let (p, v) = argmax(f, &set, &candidates).expect("κ_i ≤ |P_i| leaves a candidate");
            picks.push(Pick { element: p, gain: v - current, oracle_calls: candidates.len() as u64 });
            set.insert(p);
            current = v;
        }
    }
    Ok(GreedyTrace { picks, set, value: current, initial_calls: 1 })
}

/// Natural block order `0, 1, …, N−1`.
pub fn natural_order(m: &PartitionMatroid) -> Vec<usize> {
    (0..m.num_blocks()).collect()
}

struct Bound {
    gain: f64,
    value: f64,
    element: ElementId,
    step: usize,
}

impl PartialEq for Bound {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Bound {}

impl Ord for Bound {
    // Max-heap on gain; among equal gains the lower element index comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.gain.total_cmp(&other.gain).then_with(|| other.element.cmp(&self.element))
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lazy greedy: keeps stale marginal gains as upper bounds in a max-heap and
/// re-evaluates only the element on top. Returns the same set as
/// [`sequential_greedy`] when `f` is submodular; for other `f` the result
/// may differ and nothing detects it.
pub fn lazy_greedy<O, M>(f: &O, m: &M) -> Result<GreedyTrace>
where
    O: ValueOracle + ?Sized,
    M: IndependenceOracle + ?Sized,
{
    let n = check_grounds(f, m)?;
    let mut set = Subset::empty(n);
    let mut current = f.value(&set);
    let mut heap = BinaryHeap::with_capacity(n);
    let mut initial_calls = 1;
    for p in (0..n).filter(|&p| m.can_add(&set, p)) {
        let value = f.value(&set.with(p));
        initial_calls += 1;
        heap.push(Bound { gain: value - current, value, element: p, step: 0 });
    }
    let mut picks = Vec::new();
    let mut step_calls = 0;
    while let Some(top) = heap.pop() {
        if !m.can_add(&set, top.element) {
            // Stays infeasible for every superset.
            continue;
        }
        if top.step == picks.len() {
            // A stale bound can sit a rounding error below a fresh gain it
            // equals exactly; settle near-ties by value and index as the
            // sequential scan does.
            let window = top.gain - EPS_VAL;
            let mut best = top;
            let mut deferred = Vec::new();
            while heap.peek().is_some_and(|b| b.gain >= window) {
                let mut next = heap.pop().expect("peeked");
                if !m.can_add(&set, next.element) {
                    continue;
                }
                if next.step != picks.len() {
                    let value = f.value(&set.with(next.element));
                    step_calls += 1;
                    next = Bound { gain: value - current, value, element: next.element, step: picks.len() };
                }
                if next.value > best.value || (next.value == best.value && next.element < best.element) {
                    std::mem::swap(&mut best, &mut next);
                }
                deferred.push(next);
            }
            heap.extend(deferred);
            picks.push(Pick { element: best.element, gain: best.gain, oracle_calls: step_calls });
            set.insert(best.element);
            current = best.value;
            step_calls = 0;
        } else {
            let value = f.value(&set.with(top.element));
            step_calls += 1;
            heap.push(Bound { gain: value - current, value, element: top.element, step: picks.len() });
        }
    }
    Ok(GreedyTrace { picks, set, value: current, initial_calls })
}

/// `(1/c)(1 − e^{−c})`, with the limit 1 at `c = 0`.
pub fn bound_uniform_curvature(c: f64) -> Result<f64> {
    check_curvature(c)?;
    Ok(if c == 0.0 { 1.0 } else { (1.0 - (-c).exp()) / c })
}

/// `1 / (1 + c)`.
pub fn bound_partition_curvature(c: f64) -> Result<f64> {
    check_curvature(c)?;
    Ok(1.0 / (1.0 + c))
}

fn check_curvature(c: f64) -> Result<()> {
    if (0.0..=1.0).contains(&c) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("curvature {c} outside [0, 1]")))
    }
}

fn check_grounds<O, M>(f: &O, m: &M) -> Result<usize>
where
    O: ValueOracle + ?Sized,
    M: IndependenceOracle + ?Sized,
{
    let n = f.ground_size();
    if m.ground_size() != n {
        return Err(Error::GroundSetMismatch { expected: n, actual: m.ground_size() });
    }
    Ok(n)
}

pub(crate) fn check_permutation(order: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    for &b in order {
        if b >= len || std::mem::replace(&mut seen[b], true) {
            return Err(Error::InvalidParameter(format!("{order:?} is not a permutation of 0..{len}")));
        }
    }
    if order.len() != len {
        return Err(Error::InvalidParameter(format!("{order:?} is not a permutation of 0..{len}")));
    }
    Ok(())
}
