//! Independence oracles: uniform and partition matroids, explicit set
//! systems, and an exhaustive axiom verifier.

use crate::error::{Error, Result};
use crate::properties::{PropertyReport, Witness, N_MAX_EXHAUSTIVE};
use crate::subset::{ElementId, Subset};

pub trait IndependenceOracle: Send + Sync {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, set: &Subset) -> bool;

    /// Whether `set ∪ {p}` stays independent. Implementations may assume `set` is independent.
    fn can_add(&self, set: &Subset, p: ElementId) -> bool {
        self.is_independent(&set.with(p))
    }

    /// Size of a maximum independent set.
    fn rank_ceiling(&self) -> usize {
        let mut s = Subset::empty(self.ground_size());
        for p in 0..self.ground_size() {
            if self.can_add(&s, p) {
                s.insert(p);
            }
        }
        s.len()
    }

    fn try_is_independent(&self, set: &Subset) -> Result<bool> {
        set.check_width(self.ground_size())?;
        Ok(self.is_independent(set))
    }
}

impl<T: IndependenceOracle + ?Sized> IndependenceOracle for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: &Subset) -> bool {
        (**self).is_independent(set)
    }
    fn can_add(&self, set: &Subset, p: ElementId) -> bool {
        (**self).can_add(set, p)
    }
    fn rank_ceiling(&self) -> usize {
        (**self).rank_ceiling()
    }
}

impl<T: IndependenceOracle + ?Sized> IndependenceOracle for Box<T> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: &Subset) -> bool {
        (**self).is_independent(set)
    }
    fn can_add(&self, set: &Subset, p: ElementId) -> bool {
        (**self).can_add(set, p)
    }
    fn rank_ceiling(&self) -> usize {
        (**self).rank_ceiling()
    }
}

/// All subsets of size at most `kappa`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    kappa: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, kappa: usize) -> Result<Self> {
        if kappa == 0 || kappa > n {
            return Err(Error::InvalidMatroid(format!("uniform budget {kappa} must lie in 1..={n}")));
        }
        Ok(Self { n, kappa })
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// The same matroid as a partition matroid with one block.
    pub fn to_partition(&self) -> PartitionMatroid {
        PartitionMatroid::new(self.n, vec![(0..self.n).collect()], vec![self.kappa])
            .expect("one full block is a valid partition")
    }
}

impl IndependenceOracle for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }
    fn is_independent(&self, set: &Subset) -> bool {
        set.len() <= self.kappa
    }
    fn can_add(&self, set: &Subset, p: ElementId) -> bool {
        set.contains(p) || set.len() < self.kappa
    }
    fn rank_ceiling(&self) -> usize {
        self.kappa
    }
}

/// Per-block budgets over a disjoint cover of the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMatroid {
    n: usize,
    blocks: Vec<Vec<ElementId>>,
    kappas: Vec<usize>,
    block_of: Vec<usize>,
}

impl PartitionMatroid {
    pub fn new(n: usize, blocks: Vec<Vec<ElementId>>, kappas: Vec<usize>) -> Result<Self> {
        if blocks.len() != kappas.len() {
            return Err(Error::InvalidMatroid(format!(
                "{} blocks but {} budgets",
                blocks.len(),
                kappas.len()
            )));
        }
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            for &p in block {
                if p >= n {
                    return Err(Error::ElementOutOfRange { element: p, size: n });
                }
                if block_of[p] != usize::MAX {
                    return Err(Error::InvalidMatroid(format!("element {p} appears in two blocks")));
                }
                block_of[p] = i;
            }
            if kappas[i] == 0 || kappas[i] > block.len() {
                return Err(Error::InvalidMatroid(format!(
                    "block {i} budget {} must lie in 1..={}",
                    kappas[i],
                    block.len()
                )));
            }
        }
        if let Some(p) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidMatroid(format!("element {p} belongs to no block")));
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Self { n, blocks, kappas, block_of })
    }

    pub fn blocks(&self) -> &[Vec<ElementId>] {
        &self.blocks
    }

    pub fn kappas(&self) -> &[usize] {
        &self.kappas
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, p: ElementId) -> usize {
        self.block_of[p]
    }

    fn block_count(&self, set: &Subset, block: usize) -> usize {
        self.blocks[block].iter().filter(|&&p| set.contains(p)).count()
    }
}

impl IndependenceOracle for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }
    fn is_independent(&self, set: &Subset) -> bool {
        let mut counts = vec![0; self.blocks.len()];
        for p in set.iter() {
            let b = self.block_of[p];
            counts[b] += 1;
            if counts[b] > self.kappas[b] {
                return false;
            }
        }
        true
    }
    fn can_add(&self, set: &Subset, p: ElementId) -> bool {
        let b = self.block_of[p];
        set.contains(p) || self.block_count(set, b) < self.kappas[b]
    }
    fn rank_ceiling(&self) -> usize {
        self.kappas.iter().sum()
    }
}

/// An independence system given by its maximal sets: `S` is independent
/// iff it lies inside one of them. Need not be a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    n: usize,
    maximal: Vec<Subset>,
}

impl SetSystem {
    pub fn new(n: usize, maximal: Vec<Vec<ElementId>>) -> Result<Self> {
        let maximal = maximal
            .into_iter()
            .map(|m| Subset::from_elements(n, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, maximal })
    }
}

impl IndependenceOracle for SetSystem {
    fn ground_size(&self) -> usize {
        self.n
    }
    fn is_independent(&self, set: &Subset) -> bool {
        set.is_empty() || self.maximal.iter().any(|m| set.is_subset_of(m))
    }
}

/// Maximum independent-set size of `m`.
pub fn matroid_rank_ceiling<M: IndependenceOracle + ?Sized>(m: &M) -> usize {
    m.rank_ceiling()
}

/// Exhaustively checks nonemptiness, downward closure and augmentation.
///
/// Augmentation is checked for pairs with `|S| = |R| + 1`; given downward
/// closure this covers every pair with `|S| > |R|`.
pub fn verify_matroid_axioms<M: IndependenceOracle + ?Sized>(m: &M) -> Result<PropertyReport> {
    const NAME: &str = "matroid";
    let n = m.ground_size();
    if n > N_MAX_EXHAUSTIVE {
        return Err(Error::TooLargeForExhaustive { n, limit: N_MAX_EXHAUSTIVE });
    }
    let fail = |s: u64, r: Option<u64>, p: Option<usize>, checks: u64| PropertyReport {
        property: NAME,
        holds: false,
        witness: Some(Witness {
            s: Subset::from_mask(n, s),
            r: r.map(|r| Subset::from_mask(n, r)),
            p,
        }),
        checks_performed: checks,
        exhaustive: true,
    };
    let indep: Vec<bool> = (0..1u64 << n).map(|s| m.is_independent(&Subset::from_mask(n, s))).collect();
    let mut checks = 1;
    if !indep[0] {
        return Ok(fail(0, None, None, checks));
    }
    for s in (0..1u64 << n).filter(|&s| indep[s as usize]) {
        for p in (0..n).filter(|&p| s >> p & 1 == 1) {
            checks += 1;
            if !indep[(s & !(1 << p)) as usize] {
                // S is independent but S \ {p} is not.
                return Ok(fail(s, Some(s & !(1 << p)), Some(p), checks));
            }
        }
    }
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for s in (0..1u64 << n).filter(|&s| indep[s as usize]) {
        by_size[s.count_ones() as usize].push(s);
    }
    for k in 0..n {
        for &r in &by_size[k] {
            for &s in &by_size[k + 1] {
                checks += 1;
                let extendable = (0..n)
                    .filter(|&p| s >> p & 1 == 1 && r >> p & 1 == 0)
                    .any(|p| indep[(r | 1 << p) as usize]);
                if !extendable {
                    return Ok(fail(s, Some(r), None, checks));
                }
            }
        }
    }
    Ok(PropertyReport { property: NAME, holds: true, witness: None, checks_performed: checks, exhaustive: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::all_subsets;

    fn set(n: usize, v: &[usize]) -> Subset {
        Subset::from_elements(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn uniform_independence() {
        let m = UniformMatroid::new(4, 2).unwrap();
        assert!(m.is_independent(&set(4, &[0, 3])));
        assert!(!m.is_independent(&set(4, &[0, 1, 3])));
        assert!(m.is_independent(&Subset::empty(4)));
        assert!(matches!(m.try_is_independent(&Subset::empty(5)), Err(Error::GroundSetMismatch { .. })));
    }

    #[test]
    fn partition_independence() {
        let m = PartitionMatroid::new(4, vec![vec![0, 1], vec![2, 3]], vec![1, 1]).unwrap();
        assert!(!m.is_independent(&set(4, &[0, 1])));
        assert!(m.is_independent(&set(4, &[0, 3])));
        assert!(m.is_independent(&Subset::empty(4)));
        assert!(!m.can_add(&set(4, &[1]), 0));
        assert!(m.can_add(&set(4, &[1]), 2));
    }

    #[test]
    fn rank_ceilings() {
        assert_eq!(matroid_rank_ceiling(&UniformMatroid::new(5, 3).unwrap()), 3);
        let m = PartitionMatroid::new(6, vec![vec![0], vec![1, 2, 3], vec![4, 5]], vec![1, 2, 1]).unwrap();
        assert_eq!(matroid_rank_ceiling(&m), 4);
        let single = PartitionMatroid::new(5, vec![(0..5).collect()], vec![5]).unwrap();
        assert_eq!(matroid_rank_ceiling(&single), 5);
        // The default greedy rank agrees on a set system.
        let s = SetSystem::new(4, vec![vec![0, 1, 2], vec![3]]).unwrap();
        assert_eq!(s.rank_ceiling(), 3);
    }

    #[test]
    fn construction_guards() {
        assert!(UniformMatroid::new(3, 0).is_err());
        assert!(UniformMatroid::new(3, 4).is_err());
        assert!(PartitionMatroid::new(3, vec![vec![0, 1], vec![1, 2]], vec![1, 1]).is_err());
        assert!(PartitionMatroid::new(3, vec![vec![0, 1]], vec![1]).is_err());
        assert!(PartitionMatroid::new(3, vec![vec![0, 1], vec![2]], vec![3, 1]).is_err());
        assert!(PartitionMatroid::new(3, vec![vec![0, 1], vec![2]], vec![1]).is_err());
    }

    #[test]
    fn uniform_equals_single_block_partition() {
        for n in 1..=12 {
            for kappa in 1..=n {
                let u = UniformMatroid::new(n, kappa).unwrap();
                let p = u.to_partition();
                assert!(all_subsets(n).all(|s| u.is_independent(&s) == p.is_independent(&s)));
            }
        }
    }

    #[test]
    fn axioms_hold_for_small_matroids() {
        assert!(verify_matroid_axioms(&UniformMatroid::new(4, 2).unwrap()).unwrap().holds);
        let m = PartitionMatroid::new(4, vec![vec![0, 1], vec![2, 3]], vec![1, 1]).unwrap();
        assert!(verify_matroid_axioms(&m).unwrap().holds);
    }

    #[test]
    fn excluding_one_pair_still_gives_a_matroid() {
        // Dropping a single pair from the size-2 sets makes the pair parallel.
        let pairs: Vec<Vec<usize>> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| vec![a, b]))
            .filter(|p| p != &vec![2, 3])
            .collect();
        assert!(verify_matroid_axioms(&SetSystem::new(4, pairs).unwrap()).unwrap().holds);
    }

    #[test]
    fn decoy_fails_augmentation_with_witness() {
        // Size ≤ 2 without {0,1} and {0,2}: R = {0} cannot grow from S = {1,2}.
        let pairs: Vec<Vec<usize>> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| vec![a, b]))
            .filter(|p| p != &vec![0, 1] && p != &vec![0, 2])
            .collect();
        let decoy = SetSystem::new(4, pairs).unwrap();
        let report = verify_matroid_axioms(&decoy).unwrap();
        assert!(!report.holds);
        let w = report.witness.unwrap();
        let (s, r) = (w.s, w.r.unwrap());
        assert!(decoy.is_independent(&s) && decoy.is_independent(&r));
        assert!(s.len() > r.len());
        assert!(s.difference(&r).iter().all(|p| !decoy.is_independent(&r.with(p))));
    }

    struct NotDownwardClosed;

    impl IndependenceOracle for NotDownwardClosed {
        fn ground_size(&self) -> usize {
            3
        }
        fn is_independent(&self, set: &Subset) -> bool {
            set.len() != 1
        }
    }

    #[test]
    fn decoy_fails_downward_closure() {
        let report = verify_matroid_axioms(&NotDownwardClosed).unwrap();
        let w = report.witness.unwrap();
        assert_eq!(w.s.len(), 2);
        assert_eq!(w.r.unwrap().len(), 1);
    }
}
