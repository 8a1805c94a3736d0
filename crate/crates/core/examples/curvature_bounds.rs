//! Measured curvature tightens the greedy guarantee. Compare the bound
//! with the ratio actually achieved on random instances.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use submax::bruteforce::brute_force_opt;
use submax::functions::{generate, CoverageOracle, ExemplarOracle, LossMode, ModularOracle, RankOracle};
use submax::greedy::{bound_partition_curvature, bound_uniform_curvature, sequential_greedy};
use submax::properties::total_curvature;
use submax::{UniformMatroid, ValueOracle};

fn report(f: &dyn ValueOracle, kappa: usize) -> submax::Result<()> {
    let m = UniformMatroid::new(f.ground_size(), kappa)?;
    let c = total_curvature(f)?.c;
    let (_, opt) = brute_force_opt(f, &m)?;
    let ratio = sequential_greedy(f, &m)?.value / opt;
    println!(
        "{:<9} c = {c:.3}  uniform bound {:.3}  partition bound {:.3}  achieved {ratio:.3}",
        f.name(),
        bound_uniform_curvature(c)?,
        bound_partition_curvature(c)?,
    );
    Ok(())
}

fn main() -> submax::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 9;
    report(&ModularOracle::new(&generate::modular(n, &mut rng))?, 3)?;
    report(&CoverageOracle::new(&generate::disjoint_coverage(n, &mut rng))?, 3)?;
    report(&CoverageOracle::new(&generate::coverage(n, 12, &mut rng))?, 3)?;
    report(&ExemplarOracle::new(&generate::exemplar(n, 20, &mut rng), LossMode::KMedoid)?, 3)?;
    report(&RankOracle::new(&generate::traffic(n, &mut rng))?, 3)?;
    Ok(())
}
