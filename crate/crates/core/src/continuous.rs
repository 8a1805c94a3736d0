//! Multilinear extension, continuous greedy and pipage rounding.
//!
//! `F(x) = E[f(R_x)]` where `R_x` contains each element `p` independently
//! with probability `x_p`. Exact routines enumerate all `2^n` subsets
//! (`n ≤ 20`); the sampled ones draw `K` sets and report Hoeffding widths.
//!
//! Sampling is split into fixed-size chunks, chunk `c` drawing from ChaCha
//! stream `c` of a base seed taken from the caller's RNG. Chunks may run on
//! any number of workers and are reduced in chunk order, so results depend
//! only on the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matroid::{IndependenceOracle, PartitionMatroid};
use crate::oracle::{range_bound, value_table, ValueOracle};
use crate::subset::Subset;
use crate::EPS_VAL;

pub const N_MAX_EXACT: usize = 20;

/// Hoeffding confidence used by [`multilinear_estimate`].
pub const CONFIDENCE: f64 = 0.99;

const CHUNK: usize = 256;

/// A point of the unit cube.
#[derive(Clone, Debug, PartialEq)]
pub struct MembershipVector(Vec<f64>);

impl MembershipVector {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if let Some((p, v)) = x.iter().enumerate().find(|(_, v)| !(0.0..=1.0).contains(*v)) {
            return Err(Error::InvalidParameter(format!("membership x[{p}] = {v} outside [0, 1]")));
        }
        Ok(Self(x))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n])
    }

    pub fn indicator(set: &Subset) -> Self {
        Self((0..set.width()).map(|p| if set.contains(p) { 1.0 } else { 0.0 }).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|&v| v == 0.0 || v == 1.0)
    }

    /// Draws `R_x`.
    pub fn sample(&self, rng: &mut impl Rng) -> Subset {
        let mut s = Subset::empty(self.0.len());
        for (p, &xp) in self.0.iter().enumerate() {
            if xp >= 1.0 || (xp > 0.0 && rng.gen::<f64>() < xp) {
                s.insert(p);
            }
        }
        s
    }
}

/// `{x ∈ [0,1]^n : Σ_{p∈P_i} x_p ≤ κ_i}` for a partition matroid.
#[derive(Clone, Debug)]
pub struct MatroidPolytope {
    matroid: PartitionMatroid,
}

impl MatroidPolytope {
    pub fn new(matroid: PartitionMatroid) -> Self {
        Self { matroid }
    }

    pub fn block_sums(&self, x: &[f64]) -> Vec<f64> {
        self.matroid.blocks().iter().map(|b| b.iter().map(|&p| x[p]).sum()).collect()
    }

    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        x.len() == self.matroid.ground_size()
            && x.iter().all(|&v| (-tol..=1.0 + tol).contains(&v))
            && self.block_sums(x).iter().zip(self.matroid.kappas()).all(|(&s, &k)| s <= k as f64 + tol)
    }
}

/// All values of `f` with the probability machinery on top.
pub struct ExactExtension {
    n: usize,
    values: Vec<f64>,
}

impl ExactExtension {
    pub fn new<O: ValueOracle + ?Sized>(f: &O) -> Result<Self> {
        let n = f.ground_size();
        if n > N_MAX_EXACT {
            return Err(Error::TooLargeForExhaustive { n, limit: N_MAX_EXACT });
        }
        Ok(Self { n, values: value_table(f)? })
    }

    fn check(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::GroundSetMismatch { expected: self.n, actual: x.len() });
        }
        Ok(())
    }

    /// `Σ_R f(R) Π_{p∈R} x_p Π_{p∉R} (1 − x_p)`, summed in mask order.
    pub fn value(&self, x: &[f64]) -> Result<f64> {
        self.check(x)?;
        Ok(self.weighted_sum(x))
    }

    fn weighted_sum(&self, x: &[f64]) -> f64 {
        let mut probs = vec![1.0];
        for &xp in x {
            let half = probs.len();
            probs.resize(2 * half, 0.0);
            for m in 0..half {
                let base = probs[m];
                probs[m] = base * (1.0 - xp);
                probs[m + half] = base * xp;
            }
        }
        self.values.iter().zip(&probs).map(|(v, pr)| v * pr).sum()
    }

    fn pinned(&self, x: &[f64], pins: &[(usize, f64)]) -> f64 {
        let mut y = x.to_vec();
        for &(p, v) in pins {
            y[p] = v;
        }
        self.weighted_sum(&y)
    }

    /// `∂F/∂x_p = E[f(R_x ∪ {p}) − f(R_x \ {p})]`.
    pub fn gradient(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check(x)?;
        Ok((0..self.n).map(|p| self.pinned(x, &[(p, 1.0)]) - self.pinned(x, &[(p, 0.0)])).collect())
    }

    /// `∂²F/∂x_p∂x_q`, the four-term expectation over the other coordinates.
    pub fn cross_partial(&self, x: &[f64], p: usize, q: usize) -> Result<f64> {
        self.check(x)?;
        if p == q || p >= self.n || q >= self.n {
            return Err(Error::InvalidParameter(format!("need distinct coordinates, got {p} and {q}")));
        }
        Ok(self.pinned(x, &[(p, 1.0), (q, 1.0)]) - self.pinned(x, &[(p, 1.0), (q, 0.0)])
            - self.pinned(x, &[(p, 0.0), (q, 1.0)])
            + self.pinned(x, &[(p, 0.0), (q, 0.0)]))
    }
}

pub fn multilinear_exact<O: ValueOracle + ?Sized>(f: &O, x: &MembershipVector) -> Result<f64> {
    ExactExtension::new(f)?.value(x.as_slice())
}

pub fn grad_exact<O: ValueOracle + ?Sized>(f: &O, x: &MembershipVector) -> Result<Vec<f64>> {
    ExactExtension::new(f)?.gradient(x.as_slice())
}

pub fn cross_second_partial<O: ValueOracle + ?Sized>(f: &O, x: &MembershipVector, p: usize, q: usize) -> Result<f64> {
    ExactExtension::new(f)?.cross_partial(x.as_slice(), p, q)
}

/// Sample mean of `f(R_x)` with a Hoeffding half-width.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub half_width: f64,
}

/// Hoeffding half-width for `samples` draws of a variable with range `range`.
pub fn hoeffding_half_width(range: f64, samples: usize, confidence: f64) -> f64 {
    let delta = 1.0 - confidence;
    range * ((2.0 / delta).ln() / (2.0 * samples as f64)).sqrt()
}

/// Runs `body(rng, count)` over `samples` draws split into chunks, summing
/// the per-chunk vectors in chunk order.
fn chunked_sum<F>(samples: usize, dim: usize, rng: &mut impl Rng, body: F) -> Vec<f64>
where
    F: Fn(&mut ChaCha8Rng, usize) -> Vec<f64> + Sync,
{
    let base: u64 = rng.gen();
    let chunks = samples.div_ceil(CHUNK);
    let partials: Vec<Vec<f64>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut r = ChaCha8Rng::seed_from_u64(base);
            r.set_stream(c as u64);
            body(&mut r, CHUNK.min(samples - c * CHUNK))
        })
        .collect();
    let mut total = vec![0.0; dim];
    for part in partials {
        for (t, v) in total.iter_mut().zip(part) {
            *t += v;
        }
    }
    total
}

pub fn multilinear_estimate<O, R>(f: &O, x: &MembershipVector, samples: usize, rng: &mut R) -> Result<Estimate>
where
    O: ValueOracle + ?Sized,
    R: Rng,
{
    if samples == 0 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    if x.len() != f.ground_size() {
        return Err(Error::GroundSetMismatch { expected: f.ground_size(), actual: x.len() });
    }
    let total = chunked_sum(samples, 1, rng, |r, count| vec![(0..count).map(|_| f.value(&x.sample(r))).sum()]);
    Ok(Estimate {
        mean: total[0] / samples as f64,
        half_width: hoeffding_half_width(range_bound(f), samples, CONFIDENCE),
    })
}

/// Monte-Carlo gradient. Each drawn set `R` serves every coordinate, and
/// both sides of `f(R ∪ {p}) − f(R \ {p})` share it.
pub fn grad_estimate<O, R>(f: &O, x: &MembershipVector, samples: usize, rng: &mut R) -> Result<Vec<f64>>
where
    O: ValueOracle + ?Sized,
    R: Rng,
{
    let n = f.ground_size();
    if samples == 0 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    if x.len() != n {
        return Err(Error::GroundSetMismatch { expected: n, actual: x.len() });
    }
    let total = chunked_sum(samples, n, rng, |r, count| {
        let mut acc = vec![0.0; n];
        for _ in 0..count {
            let set = x.sample(r);
            let base = f.value(&set);
            for (p, a) in acc.iter_mut().enumerate() {
                *a += if set.contains(p) { base - f.value(&set.without(p)) } else { f.value(&set.with(p)) - base };
            }
        }
        acc
    });
    Ok(total.into_iter().map(|t| t / samples as f64).collect())
}

/// The vertex of `P(M)` maximizing `⟨v, g⟩`: in each block, ones at the
/// `κ_i` largest entries of `g` (lowest index on ties).
pub fn conditional_gradient_direction(g: &[f64], m: &PartitionMatroid) -> Result<Vec<f64>> {
    if g.len() != m.ground_size() {
        return Err(Error::GroundSetMismatch { expected: m.ground_size(), actual: g.len() });
    }
    if let Some((index, &value)) = g.iter().enumerate().find(|(_, v)| !(**v >= -EPS_VAL)) {
        return Err(Error::NegativeGradient { index, value });
    }
    let mut v = vec![0.0; g.len()];
    for (block, &kappa) in m.blocks().iter().zip(m.kappas()) {
        let mut ranked = block.clone();
        ranked.sort_by(|&a, &b| g[b].total_cmp(&g[a]).then(a.cmp(&b)));
        for &p in ranked.iter().take(kappa) {
            v[p] = 1.0;
        }
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradientMode {
    Exact,
    Sampled { samples: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CGParams {
    /// Number of Frank-Wolfe steps; the step size is `1/steps`.
    pub steps: usize,
    pub gradient: GradientMode,
    pub seed: u64,
}

impl CGParams {
    pub fn exact(steps: usize) -> Self {
        Self { steps, gradient: GradientMode::Exact, seed: 0 }
    }

    pub fn sampled(steps: usize, samples: usize, seed: u64) -> Self {
        Self { steps, gradient: GradientMode::Sampled { samples }, seed }
    }

    fn validate(&self) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::InvalidParameter("continuous greedy needs at least one step".into()));
        }
        if self.gradient == (GradientMode::Sampled { samples: 0 }) {
            return Err(Error::InvalidParameter("sampled gradients need at least one sample".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrajectoryPoint {
    pub step: usize,
    pub block_sums: Vec<f64>,
    /// `F(x)`: exact in exact mode, a sample mean otherwise.
    pub value: f64,
}

#[derive(Clone, Debug)]
pub struct ContinuousOutcome {
    pub x: MembershipVector,
    pub trajectory: Vec<TrajectoryPoint>,
}

/// Frank-Wolfe ascent from `x = 0`: `x ← x + v/T` with `v` the conditional
/// gradient direction at the current iterate, `T` times. The result sits on
/// the boundary of `P(M)`: every block sums to `κ_i`.
pub fn continuous_greedy<O>(f: &O, m: &PartitionMatroid, params: &CGParams) -> Result<ContinuousOutcome>
where
    O: ValueOracle + ?Sized,
{
    params.validate()?;
    let n = f.ground_size();
    if m.ground_size() != n {
        return Err(Error::GroundSetMismatch { expected: n, actual: m.ground_size() });
    }
    let polytope = MatroidPolytope::new(m.clone());
    let exact = match params.gradient {
        GradientMode::Exact => Some(ExactExtension::new(f)?),
        GradientMode::Sampled { .. } => None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    // x_p = counts[p] / T keeps every iterate an exact multiple of the step.
    let mut counts = vec![0usize; n];
    let steps = params.steps;
    let to_x = |counts: &[usize]| counts.iter().map(|&c| c as f64 / steps as f64).collect::<Vec<_>>();
    let evaluate = |x: &[f64], rng: &mut ChaCha8Rng| -> Result<f64> {
        match (&exact, params.gradient) {
            (Some(ext), _) => ext.value(x),
            (None, GradientMode::Sampled { samples }) => {
                Ok(multilinear_estimate(f, &MembershipVector(x.to_vec()), samples, rng)?.mean)
            }
            (None, GradientMode::Exact) => unreachable!("exact mode always builds the table"),
        }
    };
    let mut trajectory = Vec::with_capacity(steps + 1);
    let x0 = to_x(&counts);
    trajectory.push(TrajectoryPoint { step: 0, block_sums: polytope.block_sums(&x0), value: evaluate(&x0, &mut rng)? });
    for t in 1..=steps {
        let x = to_x(&counts);
        let grad = match (&exact, params.gradient) {
            (Some(ext), _) => ext.gradient(&x)?,
            (None, GradientMode::Sampled { samples }) => {
                grad_estimate(f, &MembershipVector(x.clone()), samples, &mut rng)?
            }
            (None, GradientMode::Exact) => unreachable!("exact mode always builds the table"),
        };
        let direction = conditional_gradient_direction(&grad, m)?;
        for (c, d) in counts.iter_mut().zip(&direction) {
            if *d == 1.0 {
                *c += 1;
            }
        }
        let x = to_x(&counts);
        trajectory.push(TrajectoryPoint { step: t, block_sums: polytope.block_sums(&x), value: evaluate(&x, &mut rng)? });
    }
    Ok(ContinuousOutcome { x: MembershipVector(to_x(&counts)), trajectory })
}

const INTEGRAL_TOL: f64 = 1e-9;

/// Pipage rounding over a partition matroid with exact `F` comparisons.
///
/// While a block holds two fractional coordinates `p < q`, mass moves along
/// `e_p − e_q` to whichever endpoint has the larger `F`. `F` is convex along
/// that line, so the better endpoint is no worse than the start.
pub fn pipage_round<O: ValueOracle + ?Sized>(x: &MembershipVector, m: &PartitionMatroid, f: &O) -> Result<Subset> {
    let ext = ExactExtension::new(f)?;
    pipage_with(x, m, |y| ext.weighted_sum(y))
}

/// Pipage rounding comparing endpoints by sampled `F` (stochastic rounding).
/// For ground sets beyond exact enumeration.
pub fn pipage_round_sampled<O, R>(
    x: &MembershipVector,
    m: &PartitionMatroid,
    f: &O,
    samples: usize,
    rng: &mut R,
) -> Result<Subset>
where
    O: ValueOracle + ?Sized,
    R: Rng,
{
    if samples == 0 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    pipage_with(x, m, |y| {
        multilinear_estimate(f, &MembershipVector(y.to_vec()), samples, rng).expect("validated inputs").mean
    })
}

fn pipage_with(x: &MembershipVector, m: &PartitionMatroid, mut value: impl FnMut(&[f64]) -> f64) -> Result<Subset> {
    let n = m.ground_size();
    if x.len() != n {
        return Err(Error::GroundSetMismatch { expected: n, actual: x.len() });
    }
    let mut y = x.as_slice().to_vec();
    for (block, sum) in MatroidPolytope::new(m.clone()).block_sums(&y).into_iter().enumerate() {
        if (sum - sum.round()).abs() > INTEGRAL_TOL {
            return Err(Error::NonIntegralBlock { block, sum });
        }
    }
    let snap = |v: f64| {
        if v.abs() <= INTEGRAL_TOL {
            0.0
        } else if (1.0 - v).abs() <= INTEGRAL_TOL {
            1.0
        } else {
            v
        }
    };
    y.iter_mut().for_each(|v| *v = snap(*v));
    for block in m.blocks() {
        loop {
            let fractional: Vec<usize> = block.iter().copied().filter(|&p| y[p] != 0.0 && y[p] != 1.0).collect();
            if fractional.len() < 2 {
                // A lone fractional coordinate is rounding noise on an integral sum.
                if let Some(&p) = fractional.first() {
                    y[p] = y[p].round();
                }
                break;
            }
            let (p, q) = (fractional[0], fractional[1]);
            let up = (1.0 - y[p]).min(y[q]);
            let down = y[p].min(1.0 - y[q]);
            let mut toward_p = y.clone();
            toward_p[p] = snap(toward_p[p] + up);
            toward_p[q] = snap(toward_p[q] - up);
            let mut toward_q = y.clone();
            toward_q[p] = snap(toward_q[p] - down);
            toward_q[q] = snap(toward_q[q] + down);
            y = if value(&toward_p) >= value(&toward_q) { toward_p } else { toward_q };
        }
    }
    Ok(Subset::from_elements(n, (0..n).filter(|&p| y[p] > 0.5))?)
}

/// `max(0, 1 − 2·T·n·e^{−K/(8T²)})`, the success probability attached to
/// sampled continuous greedy.
pub fn chernoff_success_probability(steps: usize, n: usize, samples: f64) -> f64 {
    let t = steps as f64;
    (1.0 - 2.0 * t * n as f64 * (-samples / (8.0 * t * t)).exp()).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{CoverageInstance, CoverageOracle, ModularInstance, ModularOracle};
    use crate::oracle::FnOracle;

    fn coverage() -> CoverageOracle {
        CoverageOracle::new(&CoverageInstance {
            weights: vec![1.0, 2.0, 3.0, 1.5],
            cover_sets: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0], vec![3]],
        })
        .unwrap()
    }

    #[test]
    fn vertex_and_origin_agreement() {
        let f = coverage();
        let s = Subset::from_elements(5, [1, 3]).unwrap();
        assert_eq!(multilinear_exact(&f, &MembershipVector::indicator(&s)).unwrap(), f.value(&s));
        assert_eq!(multilinear_exact(&f, &MembershipVector::zeros(5)).unwrap(), 0.0);
    }

    #[test]
    fn modular_extension_is_linear() {
        let w = vec![1.0, 2.5, 4.0];
        let f = ModularOracle::new(&ModularInstance { weights: w.clone() }).unwrap();
        let x = MembershipVector::new(vec![0.2, 0.7, 0.5]).unwrap();
        let expected: f64 = w.iter().zip(x.as_slice()).map(|(a, b)| a * b).sum();
        assert!((multilinear_exact(&f, &x).unwrap() - expected).abs() < 1e-12);
        let g = grad_exact(&f, &x).unwrap();
        for (gi, wi) in g.iter().zip(&w) {
            assert!((gi - wi).abs() < 1e-12);
        }
    }

    #[test]
    fn membership_validation() {
        assert!(MembershipVector::new(vec![0.5, 1.2]).is_err());
        assert!(MembershipVector::new(vec![0.0, 1.0]).unwrap().is_integral());
    }

    #[test]
    fn integral_estimate_is_exact() {
        let f = coverage();
        let s = Subset::from_elements(5, [0, 2]).unwrap();
        let x = MembershipVector::indicator(&s);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in [1, 7, 300] {
            assert_eq!(multilinear_estimate(&f, &x, k, &mut rng).unwrap().mean, f.value(&s));
        }
        let g = grad_estimate(&f, &x, 5, &mut rng).unwrap();
        assert_eq!(g, grad_exact(&f, &x).unwrap());
    }

    #[test]
    fn single_sample_mean_is_a_function_value() {
        let f = coverage();
        let x = MembershipVector::new(vec![0.5; 5]).unwrap();
        let values: Vec<f64> = crate::subset::all_subsets(5).map(|s| f.value(&s)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let mean = multilinear_estimate(&f, &x, 1, &mut rng).unwrap().mean;
            assert!(values.contains(&mean));
        }
    }

    #[test]
    fn estimates_depend_only_on_the_seed() {
        let f = coverage();
        let x = MembershipVector::new(vec![0.3, 0.6, 0.1, 0.9, 0.5]).unwrap();
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| grad_estimate(&f, &x, 2000, &mut ChaCha8Rng::seed_from_u64(11)).unwrap())
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn direction_picks_top_kappa_per_block() {
        let m = PartitionMatroid::new(3, vec![vec![0, 1, 2]], vec![1]).unwrap();
        assert_eq!(conditional_gradient_direction(&[0.2, 0.9, 0.5], &m).unwrap(), vec![0.0, 1.0, 0.0]);
        let tie = PartitionMatroid::new(2, vec![vec![0, 1]], vec![1]).unwrap();
        assert_eq!(conditional_gradient_direction(&[1.0, 1.0], &tie).unwrap(), vec![1.0, 0.0]);
        assert!(matches!(
            conditional_gradient_direction(&[1.0, -0.5], &tie),
            Err(Error::NegativeGradient { index: 1, .. })
        ));
    }

    #[test]
    fn modular_continuous_greedy_lands_on_top_weights() {
        let f = ModularOracle::new(&ModularInstance { weights: vec![3.0, 1.0, 2.0, 5.0, 4.0] }).unwrap();
        let m = PartitionMatroid::new(5, vec![vec![0, 1, 2], vec![3, 4]], vec![2, 1]).unwrap();
        let out = continuous_greedy(&f, &m, &CGParams::exact(10)).unwrap();
        assert_eq!(out.x.as_slice(), &[1.0, 0.0, 1.0, 1.0, 0.0]);
        assert_eq!(out.trajectory.len(), 11);
        assert_eq!(out.trajectory.last().unwrap().value, 10.0);
    }

    #[test]
    fn params_are_validated() {
        let f = coverage();
        let m = PartitionMatroid::new(5, vec![(0..5).collect()], vec![2]).unwrap();
        assert!(continuous_greedy(&f, &m, &CGParams::exact(0)).is_err());
        assert!(continuous_greedy(&f, &m, &CGParams::sampled(5, 0, 1)).is_err());
    }

    #[test]
    fn pipage_keeps_integral_points() {
        let f = coverage();
        let m = PartitionMatroid::new(5, vec![vec![0, 1, 2], vec![3, 4]], vec![2, 1]).unwrap();
        let s = Subset::from_elements(5, [0, 2, 4]).unwrap();
        assert_eq!(pipage_round(&MembershipVector::indicator(&s), &m, &f).unwrap(), s);
    }

    #[test]
    fn pipage_symmetric_pair_preserves_value() {
        let f = FnOracle::new(2, "sym", |s: &Subset| s.len().min(1) as f64);
        let m = PartitionMatroid::new(2, vec![vec![0, 1]], vec![1]).unwrap();
        let x = MembershipVector::new(vec![0.5, 0.5]).unwrap();
        let s = pipage_round(&x, &m, &f).unwrap();
        assert_eq!(s.len(), 1);
        assert!(f.value(&s) >= multilinear_exact(&f, &x).unwrap());
        let flat = ModularOracle::new(&ModularInstance { weights: vec![2.0, 2.0] }).unwrap();
        let s = pipage_round(&x, &m, &flat).unwrap();
        assert_eq!(s.to_vec(), vec![0]);
        assert_eq!(flat.value(&s), multilinear_exact(&flat, &x).unwrap());
    }

    #[test]
    fn pipage_rejects_fractional_block_sums() {
        let f = coverage();
        let m = PartitionMatroid::new(5, vec![(0..5).collect()], vec![2]).unwrap();
        let x = MembershipVector::new(vec![0.5, 0.5, 0.5, 0.0, 0.0]).unwrap();
        assert!(matches!(pipage_round(&x, &m, &f), Err(Error::NonIntegralBlock { block: 0, .. })));
    }

    #[test]
    fn chernoff_values() {
        assert_eq!(chernoff_success_probability(10, 10, 0.0), 0.0);
        assert_eq!(chernoff_success_probability(10, 10, f64::INFINITY), 1.0);
        let p = chernoff_success_probability(10, 10, 80_000.0);
        assert_eq!(p, 1.0 - 200.0 * (-100.0f64).exp());
        assert_eq!(p, 1.0);
    }
}
