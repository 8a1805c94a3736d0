//! Brute-force checkers for normality, monotonicity, submodularity and
//! total curvature.
//!
//! Exhaustive mode tabulates `f` over all `2^n` subsets, so it is capped at
//! [`N_MAX_EXHAUSTIVE`] elements. Larger ground sets need [`CheckMode::Sampled`],
//! whose reports are marked as not proven.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{value_table, ValueOracle};
use crate::subset::{ElementId, Subset};
use crate::EPS_VAL;

pub const N_MAX_EXHAUSTIVE: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// A violating configuration. Which fields are set depends on the property:
/// normality uses only `s = ∅`, monotonicity `(s, p)`, submodularity `(s, r, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub s: Subset,
    pub r: Option<Subset>,
    pub p: Option<ElementId>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyReport {
    pub property: &'static str,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub checks_performed: u64,
    /// `false` for sampled checks: a pass is evidence, not proof.
    pub exhaustive: bool,
}

impl PropertyReport {
    fn new(property: &'static str, witness: Option<Witness>, checks: u64, exhaustive: bool) -> Self {
        Self { property, holds: witness.is_none(), witness, checks_performed: checks, exhaustive }
    }
}

impl std::fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = match (self.holds, self.exhaustive) {
            (true, true) => "holds",
            (true, false) => "holds (sampled, not proven)",
            (false, _) => "FAILS",
        };
        write!(f, "{:<12} {verdict} after {} checks", self.property, self.checks_performed)?;
        if let Some(w) = &self.witness {
            write!(f, "; witness S={}", w.s)?;
            if let Some(r) = &w.r {
                write!(f, " R={r}")?;
            }
            if let Some(p) = w.p {
                write!(f, " p={p}")?;
            }
        }
        Ok(())
    }
}

fn exhaustive_table<O: ValueOracle + ?Sized>(f: &O) -> Result<Vec<f64>> {
    let n = f.ground_size();
    if n > N_MAX_EXHAUSTIVE {
        return Err(Error::TooLargeForExhaustive { n, limit: N_MAX_EXHAUSTIVE });
    }
    value_table(f)
}

/// `f(∅) = 0` within [`EPS_VAL`].
pub fn check_normal<O: ValueOracle + ?Sized>(f: &O) -> PropertyReport {
    let empty = Subset::empty(f.ground_size());
    let witness = (f.value(&empty).abs() > EPS_VAL).then(|| Witness { s: empty, r: None, p: None });
    PropertyReport::new("normal", witness, 1, true)
}

/// `f(S ∪ {p}) ≥ f(S)` for every `S` and `p ∉ S`.
pub fn check_monotone<O: ValueOracle + ?Sized>(f: &O, mode: CheckMode) -> Result<PropertyReport> {
    let n = f.ground_size();
    match mode {
        CheckMode::Exhaustive => {
            let table = exhaustive_table(f)?;
            let mut checks = 0;
            for s in 0..1u64 << n {
                for p in (0..n).filter(|&p| s >> p & 1 == 0) {
                    checks += 1;
                    if table[(s | 1 << p) as usize] < table[s as usize] - EPS_VAL {
                        let w = Witness { s: Subset::from_mask(n, s), r: None, p: Some(p) };
                        return Ok(PropertyReport::new("monotone", Some(w), checks, true));
                    }
                }
            }
            Ok(PropertyReport::new("monotone", None, checks, true))
        }
        CheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for k in 0..samples {
                let s = random_subset(n, &mut rng);
                let Some(p) = random_outside(&s, &mut rng) else { continue };
                if f.value(&s.with(p)) < f.value(&s) - EPS_VAL {
                    let w = Witness { s, r: None, p: Some(p) };
                    return Ok(PropertyReport::new("monotone", Some(w), k + 1, false));
                }
            }
            Ok(PropertyReport::new("monotone", None, samples, false))
        }
    }
}

/// Diminishing returns: `Δ(p|S) ≥ Δ(p|R)` for all `S ⊆ R` and `p ∉ R`.
pub fn check_submodular<O: ValueOracle + ?Sized>(f: &O, mode: CheckMode) -> Result<PropertyReport> {
    let n = f.ground_size();
    match mode {
        CheckMode::Exhaustive => {
            let table = exhaustive_table(f)?;
            let full = (1u64 << n) - 1;
            // Per-R scans fan out; the ordered collect keeps the first witness deterministic.
            let per_r: Vec<(u64, Option<Witness>)> = (0..=full)
                .into_par_iter()
                .map(|r| {
                    let mut checks = 0;
                    for p in (0..n).filter(|&p| r >> p & 1 == 0) {
                        let gain_r = table[(r | 1 << p) as usize] - table[r as usize];
                        let mut s = r;
                        loop {
                            checks += 1;
                            let gain_s = table[(s | 1 << p) as usize] - table[s as usize];
                            if gain_s < gain_r - EPS_VAL {
                                let w = Witness {
                                    s: Subset::from_mask(n, s),
                                    r: Some(Subset::from_mask(n, r)),
                                    p: Some(p),
                                };
                                return (checks, Some(w));
                            }
                            if s == 0 {
                                break;
                            }
                            s = (s - 1) & r;
                        }
                    }
                    (checks, None)
                })
                .collect();
            let checks = per_r.iter().map(|(c, _)| c).sum();
            let witness = per_r.into_iter().find_map(|(_, w)| w);
            Ok(PropertyReport::new("submodular", witness, checks, true))
        }
        CheckMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for k in 0..samples {
                let r = random_subset(n, &mut rng);
                let Some(p) = random_outside(&r, &mut rng) else { continue };
                let s = Subset::from_elements(n, r.iter().filter(|_| rng.gen_bool(0.5)))?;
                let gain_s = f.value(&s.with(p)) - f.value(&s);
                let gain_r = f.value(&r.with(p)) - f.value(&r);
                if gain_s < gain_r - EPS_VAL {
                    let w = Witness { s, r: Some(r), p: Some(p) };
                    return Ok(PropertyReport::new("submodular", Some(w), k + 1, false));
                }
            }
            Ok(PropertyReport::new("submodular", None, samples, false))
        }
    }
}

/// The lattice form `f(R) + f(S) ≥ f(R ∪ S) + f(R ∩ S)` over all pairs.
/// Quadratic in `2^n`; meant for cross-validating [`check_submodular`] on small sets.
pub fn check_submodular_lattice<O: ValueOracle + ?Sized>(f: &O) -> Result<PropertyReport> {
    let n = f.ground_size();
    if n > 10 {
        return Err(Error::TooLargeForExhaustive { n, limit: 10 });
    }
    let table = value_table(f)?;
    let mut checks = 0;
    for r in 0..1u64 << n {
        for s in 0..1u64 << n {
            checks += 1;
            let lhs = table[r as usize] + table[s as usize];
            let rhs = table[(r | s) as usize] + table[(r & s) as usize];
            if lhs < rhs - EPS_VAL {
                let w = Witness {
                    s: Subset::from_mask(n, s),
                    r: Some(Subset::from_mask(n, r)),
                    p: None,
                };
                return Ok(PropertyReport::new("submodular", Some(w), checks, true));
            }
        }
    }
    Ok(PropertyReport::new("submodular", None, checks, true))
}

/// Total curvature and the elements whose singleton gain vanished.
#[derive(Clone, Debug, PartialEq)]
pub struct Curvature {
    pub c: f64,
    /// Elements with `f({p}) = 0`; each forces `c = 1`.
    pub zero_singletons: Vec<ElementId>,
}

/// `c = 1 − min_{R, p∉R} Δ(p|R) / Δ(p|∅)`, by exhaustive enumeration.
///
/// Requires `f` monotone and submodular; a negative gain or a gain above the
/// singleton gain is reported as a precondition violation.
pub fn total_curvature<O: ValueOracle + ?Sized>(f: &O) -> Result<Curvature> {
    let n = f.ground_size();
    let table = exhaustive_table(f)?;
    let mut min_ratio = 1.0_f64;
    let mut zero_singletons = Vec::new();
    for p in 0..n {
        let base = table[1 << p] - table[0];
        if base <= EPS_VAL {
            zero_singletons.push(p);
            min_ratio = 0.0;
        }
        for r in (0..1u64 << n).filter(|r| r >> p & 1 == 0) {
            let gain = table[(r | 1 << p) as usize] - table[r as usize];
            if gain < -EPS_VAL {
                return Err(Error::Precondition(format!(
                    "f is not monotone: gain of {p} at {} is {gain}",
                    Subset::from_mask(n, r)
                )));
            }
            if gain > base + EPS_VAL {
                return Err(Error::Precondition(format!(
                    "f is not submodular: gain of {p} at {} exceeds its singleton gain",
                    Subset::from_mask(n, r)
                )));
            }
            if base > EPS_VAL {
                min_ratio = min_ratio.min(gain / base);
            }
        }
    }
    Ok(Curvature { c: (1.0 - min_ratio).clamp(0.0, 1.0), zero_singletons })
}

fn random_subset(n: usize, rng: &mut impl Rng) -> Subset {
    let mut s = Subset::empty(n);
    for p in 0..n {
        if rng.gen_bool(0.5) {
            s.insert(p);
        }
    }
    s
}

fn random_outside(s: &Subset, rng: &mut impl Rng) -> Option<ElementId> {
    let outside: Vec<_> = (0..s.width()).filter(|&p| !s.contains(p)).collect();
    (!outside.is_empty()).then(|| outside[rng.gen_range(0..outside.len())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::FnOracle;

    fn modular(w: Vec<f64>) -> impl ValueOracle {
        let n = w.len();
        FnOracle::new(n, "modular", move |s: &Subset| s.iter().map(|p| w[p]).sum())
    }

    #[test]
    fn normal_checks() {
        assert!(check_normal(&modular(vec![1.0, 2.0])).holds);
        let shifted = FnOracle::new(3, "shifted", |s: &Subset| s.len() as f64 + 1.0);
        let report = check_normal(&shifted);
        assert!(!report.holds);
        assert!(report.witness.unwrap().s.is_empty());
    }

    #[test]
    fn decreasing_function_is_not_monotone() {
        let f = FnOracle::new(4, "neg", |s: &Subset| if s.is_empty() { 0.0 } else { (4 - s.len()) as f64 });
        let report = check_monotone(&f, CheckMode::Exhaustive).unwrap();
        assert!(!report.holds);
        let w = report.witness.unwrap();
        let p = w.p.unwrap();
        assert!(f.value(&w.s.with(p)) < f.value(&w.s));
    }

    #[test]
    fn square_cardinality_is_supermodular() {
        let f = FnOracle::new(5, "sq", |s: &Subset| (s.len() * s.len()) as f64);
        let report = check_submodular(&f, CheckMode::Exhaustive).unwrap();
        assert!(!report.holds);
        let w = report.witness.unwrap();
        let (s, r, p) = (w.s, w.r.unwrap(), w.p.unwrap());
        assert!(s.is_subset_of(&r) && !r.contains(p));
        let gain = |x: &Subset| f.value(&x.with(p)) - f.value(x);
        assert!(gain(&s) < gain(&r));
        assert!(!check_submodular_lattice(&f).unwrap().holds);
    }

    #[test]
    fn modular_holds_everywhere_and_has_zero_curvature() {
        let f = modular(vec![1.0, 2.0, 3.0, 0.5]);
        assert!(check_monotone(&f, CheckMode::Exhaustive).unwrap().holds);
        let report = check_submodular(&f, CheckMode::Exhaustive).unwrap();
        assert!(report.holds && report.exhaustive);
        // Σ_R (n − |R|) 2^|R| = n 3^(n−1)
        assert_eq!(report.checks_performed, 4 * 27);
        assert_eq!(total_curvature(&f).unwrap().c, 0.0);
    }

    #[test]
    fn truncated_cardinality_has_full_curvature() {
        let f = FnOracle::new(2, "min1", |s: &Subset| s.len().min(1) as f64);
        let c = total_curvature(&f).unwrap();
        assert_eq!(c.c, 1.0);
        assert!(c.zero_singletons.is_empty());
    }

    #[test]
    fn zero_singleton_forces_full_curvature() {
        let f = FnOracle::new(3, "dead", |s: &Subset| s.iter().filter(|&p| p != 1).count() as f64);
        let c = total_curvature(&f).unwrap();
        assert_eq!(c.c, 1.0);
        assert_eq!(c.zero_singletons, vec![1]);
    }

    #[test]
    fn curvature_rejects_supermodular_input() {
        let f = FnOracle::new(3, "sq", |s: &Subset| (s.len() * s.len()) as f64);
        assert!(matches!(total_curvature(&f), Err(Error::Precondition(_))));
    }

    #[test]
    fn size_guard_and_sampled_mode() {
        let f = FnOracle::new(20, "card", |s: &Subset| s.len() as f64);
        assert!(matches!(
            check_monotone(&f, CheckMode::Exhaustive),
            Err(Error::TooLargeForExhaustive { n: 20, limit: 14 })
        ));
        let report = check_submodular(&f, CheckMode::Sampled { samples: 200, seed: 7 }).unwrap();
        assert!(report.holds && !report.exhaustive);
        assert!(report.to_string().contains("not proven"));
        let sq = FnOracle::new(20, "sq", |s: &Subset| (s.len() * s.len()) as f64);
        assert!(!check_submodular(&sq, CheckMode::Sampled { samples: 200, seed: 7 }).unwrap().holds);
    }
}
