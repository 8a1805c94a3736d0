//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use submax::instance::{ConstraintSpec, Family, InstanceFile};
use submax::{Subset, ValueOracle};

pub fn generated(family: Family, n: usize, seed: u64) -> Arc<dyn ValueOracle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let file = InstanceFile {
        name: format!("{family}-{seed}"),
        objective: family.generate(n, &mut rng),
        constraint: Some(ConstraintSpec::Uniform { kappa: 1 }),
    };
    file.build().unwrap().oracle
}

/// `f` on every subset, indexed by bitmask.
pub fn table(f: &dyn ValueOracle) -> Vec<f64> {
    let n = f.ground_size();
    (0..1u64 << n).map(|m| f.value(&Subset::from_mask(n, m))).collect()
}

pub fn opt_uniform(table: &[f64], kappa: usize) -> f64 {
    (0..table.len()).filter(|m| m.count_ones() as usize <= kappa).map(|m| table[m]).fold(f64::MIN, f64::max)
}

pub fn opt_partition(table: &[f64], blocks: &[Vec<usize>], kappas: &[usize]) -> f64 {
    (0..table.len())
        .filter(|&m| blocks.iter().zip(kappas).all(|(b, &k)| b.iter().filter(|&&p| m >> p & 1 == 1).count() <= k))
        .map(|m| table[m])
        .fold(f64::MIN, f64::max)
}

/// Multilinear extension by folding one coordinate at a time.
pub fn multilinear(table: &[f64], x: &[f64]) -> f64 {
    let mut v = table.to_vec();
    for (p, &xp) in x.iter().enumerate() {
        let bit = 1 << p;
        for m in 0..v.len() {
            if m & bit == 0 {
                v[m] = (1.0 - xp) * v[m] + xp * v[m | bit];
            }
        }
    }
    v[0]
}

/// `1 − min_p (f(V) − f(V∖p)) / f({p})`: the closed form valid for monotone
/// submodular `f`, with zero singletons counting as `c = 1`.
pub fn curvature(table: &[f64], n: usize) -> f64 {
    let full = (1usize << n) - 1;
    let worst = (0..n)
        .map(|p| {
            let single = table[1 << p] - table[0];
            if single <= 1e-9 {
                0.0
            } else {
                (table[full] - table[full & !(1 << p)]) / single
            }
        })
        .fold(1.0, f64::min);
    (1.0 - worst).clamp(0.0, 1.0)
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for i in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(i, k - 1);
            out.push(p);
        }
    }
    out
}

/// Whether an undirected graph has a Hamiltonian path, by depth-first search.
pub fn has_hamiltonian_path(adj: &[Vec<bool>]) -> bool {
    fn extend(adj: &[Vec<bool>], v: usize, seen: &mut Vec<bool>, depth: usize) -> bool {
        if depth == adj.len() {
            return true;
        }
        for u in 0..adj.len() {
            if adj[v][u] && !seen[u] {
                seen[u] = true;
                if extend(adj, u, seen, depth + 1) {
                    return true;
                }
                seen[u] = false;
            }
        }
        false
    }
    (0..adj.len()).any(|s| {
        let mut seen = vec![false; adj.len()];
        seen[s] = true;
        extend(adj, s, &mut seen, 1)
    })
}

/// Largest mutually adjacent subset, by enumeration.
pub fn max_clique(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    (1u32..1 << n)
        .filter(|&m| {
            let members: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
            members.iter().all(|&i| members.iter().all(|&j| i == j || adj[i][j]))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Cover `0..n` with `blocks` contiguous nonempty blocks.
pub fn contiguous_blocks(n: usize, cuts: &[usize]) -> Vec<Vec<usize>> {
    let mut bounds = vec![0];
    bounds.extend(cuts.iter().copied());
    bounds.push(n);
    bounds.windows(2).map(|w| (w[0]..w[1]).collect()).collect()
}
