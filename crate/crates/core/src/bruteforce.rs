//! Exact optimum by enumerating independent sets.

use crate::error::{Error, Result};
use crate::matroid::IndependenceOracle;
use crate::oracle::ValueOracle;
use crate::subset::Subset;
use crate::EPS_VAL;

pub const N_MAX_BRUTE_FORCE: usize = 20;

/// Maximizer of `f` over the independent sets of `m`; ties go to the
/// lexicographically smallest set.
///
/// Depth-first over elements in ascending order, cutting a branch as soon as
/// the partial set turns dependent (sound by downward closure).
pub fn brute_force_opt<O, M>(f: &O, m: &M) -> Result<(Subset, f64)>
where
    O: ValueOracle + ?Sized,
    M: IndependenceOracle + ?Sized,
{
    let n = f.ground_size();
    if m.ground_size() != n {
        return Err(Error::GroundSetMismatch { expected: n, actual: m.ground_size() });
    }
    if n > N_MAX_BRUTE_FORCE {
        return Err(Error::TooLargeForExhaustive { n, limit: N_MAX_BRUTE_FORCE });
    }
    let mut current = Subset::empty(n);
    let mut best = (current.clone(), f.value(&current));
    search(f, m, 0, &mut current, &mut best);
    Ok(best)
}

fn search<O, M>(f: &O, m: &M, p: usize, current: &mut Subset, best: &mut (Subset, f64))
where
    O: ValueOracle + ?Sized,
    M: IndependenceOracle + ?Sized,
{
    if p == f.ground_size() {
        let v = f.value(current);
        if v > best.1 || (v == best.1 && *current < best.0) {
            *best = (current.clone(), v);
        }
        return;
    }
    if m.can_add(current, p) {
        current.insert(p);
        search(f, m, p + 1, current, best);
        current.remove(p);
    }
    search(f, m, p + 1, current, best);
}

/// `f(S) / OPT`, with the degenerate `OPT = 0` case kept apart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gap {
    pub ratio: f64,
    /// `OPT = 0`: the ratio is declared 1 by convention.
    pub vacuous: bool,
}

pub fn empirical_gap<O, M>(f: &O, m: &M, set: &Subset) -> Result<Gap>
where
    O: ValueOracle + ?Sized,
    M: IndependenceOracle + ?Sized,
{
    let (_, opt) = brute_force_opt(f, m)?;
    Ok(gap_against(f.value(set), opt))
}

/// Ratio of `value` to a known optimum.
pub fn gap_against(value: f64, opt: f64) -> Gap {
    if opt.abs() <= EPS_VAL {
        Gap { ratio: 1.0, vacuous: true }
    } else {
        Gap { ratio: value / opt, vacuous: false }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{CoverageInstance, CoverageOracle, ModularInstance, ModularOracle};
    use crate::matroid::{PartitionMatroid, UniformMatroid};
    use crate::oracle::FnOracle;

    #[test]
    fn modular_optimum_is_top_kappa() {
        let f = ModularOracle::new(&ModularInstance { weights: vec![2.0, 7.0, 1.0, 5.0] }).unwrap();
        let (set, value) = brute_force_opt(&f, &UniformMatroid::new(4, 2).unwrap()).unwrap();
        assert_eq!(set.to_vec(), vec![1, 3]);
        assert_eq!(value, 12.0);
    }

    #[test]
    fn coverage_optimum() {
        // {a,b}, {b,c}, {c}
        let f = CoverageOracle::new(&CoverageInstance {
            weights: vec![1.0; 3],
            cover_sets: vec![vec![0, 1], vec![1, 2], vec![2]],
        })
        .unwrap();
        let (set, value) = brute_force_opt(&f, &UniformMatroid::new(3, 2).unwrap()).unwrap();
        assert_eq!(value, 3.0);
        // {0,1} and {0,2} both reach 3; the lexicographically smaller wins.
        assert_eq!(set.to_vec(), vec![0, 1]);
    }

    #[test]
    fn optimum_is_independent() {
        let f = FnOracle::new(6, "card", |s: &Subset| s.len() as f64);
        let m = PartitionMatroid::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]], vec![1, 2]).unwrap();
        let (set, value) = brute_force_opt(&f, &m).unwrap();
        assert!(m.is_independent(&set));
        assert_eq!(value, 3.0);
    }

    #[test]
    fn gaps() {
        let f = ModularOracle::new(&ModularInstance { weights: vec![1.0, 3.0] }).unwrap();
        let m = UniformMatroid::new(2, 1).unwrap();
        assert_eq!(empirical_gap(&f, &m, &Subset::singleton(2, 1)).unwrap().ratio, 1.0);
        assert_eq!(empirical_gap(&f, &m, &Subset::empty(2)).unwrap().ratio, 0.0);
        let zero = FnOracle::new(2, "zero", |_: &Subset| 0.0);
        let g = empirical_gap(&zero, &m, &Subset::empty(2)).unwrap();
        assert!(g.vacuous && g.ratio == 1.0);
    }

    #[test]
    fn size_guard() {
        let f = FnOracle::new(21, "card", |s: &Subset| s.len() as f64);
        assert!(brute_force_opt(&f, &UniformMatroid::new(21, 2).unwrap()).is_err());
    }
}
