//! Seeded random instance generators. All randomness flows from the `rng`
//! argument; callers seed it explicitly.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::matroid::PartitionMatroid;

use super::{CoverageInstance, ExemplarInstance, ModularInstance, RankInstance};

const SIDE: f64 = 100.0;

pub fn modular(n: usize, rng: &mut impl Rng) -> ModularInstance {
    ModularInstance { weights: (0..n).map(|_| rng.gen_range(0.1..10.0)).collect() }
}

/// Each of the `n` elements covers between 1 and `universe/2 + 1` items.
pub fn coverage(n: usize, universe: usize, rng: &mut impl Rng) -> CoverageInstance {
    let items: Vec<usize> = (0..universe).collect();
    let cover_sets = (0..n)
        .map(|_| {
            let k = rng.gen_range(1..=universe / 2 + 1);
            let mut c: Vec<usize> = items.choose_multiple(rng, k).copied().collect();
            c.sort_unstable();
            c
        })
        .collect();
    let weights = (0..universe).map(|_| rng.gen_range(0.5..5.0)).collect();
    CoverageInstance { weights, cover_sets }
}

/// Coverage with pairwise disjoint cover sets, i.e. a modular function.
pub fn disjoint_coverage(n: usize, rng: &mut impl Rng) -> CoverageInstance {
    let mut weights = Vec::new();
    let mut cover_sets = Vec::new();
    for _ in 0..n {
        let k = rng.gen_range(1..=3);
        cover_sets.push((weights.len()..weights.len() + k).collect());
        weights.extend((0..k).map(|_| rng.gen_range(0.5..5.0)));
    }
    CoverageInstance { weights, cover_sets }
}

/// Candidates and data uniform in a square; the phantom sits well outside
/// it, farther from every datum than any candidate can be.
pub fn exemplar(candidates: usize, data: usize, rng: &mut impl Rng) -> ExemplarInstance {
    let mut point = || [rng.gen_range(0.0..SIDE), rng.gen_range(0.0..SIDE)];
    let candidates = (0..candidates).map(|_| point()).collect();
    let data = (0..data).map(|_| point()).collect();
    ExemplarInstance { candidates, data, phantom: [3.0 * SIDE, 3.0 * SIDE], dissimilarity: None }
}

/// A random traffic network with `links` candidate links. Node 0 is the
/// entry and the last node the exit; a random path links them and the
/// remaining links join random distinct node pairs.
pub fn traffic(links: usize, rng: &mut impl Rng) -> RankInstance {
    let nodes = (links / 2 + 1).max(3).min(links + 1);
    let mut order: Vec<usize> = (1..nodes - 1).collect();
    order.shuffle(rng);
    let mut path = vec![0];
    path.extend(order);
    path.push(nodes - 1);
    let mut edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).take(links).collect();
    while edges.len() < links {
        let a = rng.gen_range(0..nodes);
        let b = rng.gen_range(0..nodes);
        if a != b {
            edges.push((a, b));
        }
    }
    RankInstance::from_network(nodes, &edges, &[0, nodes - 1]).expect("generated links are valid")
}

/// Shuffles `0..n` into `blocks` nonempty blocks with budgets in `1..=min(|P_i|, max_kappa)`.
pub fn partition(n: usize, blocks: usize, max_kappa: usize, rng: &mut impl Rng) -> PartitionMatroid {
    assert!(blocks >= 1 && blocks <= n, "need 1 ≤ blocks ≤ n");
    let mut elements: Vec<usize> = (0..n).collect();
    elements.shuffle(rng);
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(blocks - 1).collect();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(blocks);
    let mut start = 0;
    for end in cuts.into_iter().chain([n]) {
        parts.push(elements[start..end].to_vec());
        start = end;
    }
    let kappas = parts.iter().map(|b| rng.gen_range(1..=b.len().min(max_kappa.max(1)))).collect();
    PartitionMatroid::new(n, parts, kappas).expect("generated partition is valid")
}
