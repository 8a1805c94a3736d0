//! Continuous greedy over a partition matroid, then pipage rounding.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use submax::bruteforce::brute_force_opt;
use submax::continuous::{continuous_greedy, multilinear_exact, pipage_round, CGParams};
use submax::functions::{generate, CoverageOracle};
use submax::ValueOracle;

fn main() -> submax::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let f = CoverageOracle::new(&generate::coverage(10, 14, &mut rng))?;
    let m = generate::partition(10, 3, 2, &mut rng);
    println!("blocks {:?} budgets {:?}", m.blocks(), m.kappas());

    let steps = 50;
    let out = continuous_greedy(&f, &m, &CGParams::exact(steps))?;
    for point in out.trajectory.iter().step_by(10) {
        println!("t = {:>2}/{steps}  F = {:7.3}  block sums {:?}", point.step, point.value, point.block_sums);
    }

    let fx = multilinear_exact(&f, &out.x)?;
    let rounded = pipage_round(&out.x, &m, &f)?;
    let (_, opt) = brute_force_opt(&f, &m)?;
    println!("F(x) = {fx:.3}, rounded {rounded} worth {:.3}, optimum {opt:.3}", f.value(&rounded));
    println!("guarantee 1 - 1/e - 2/T = {:.3}, achieved {:.3}", 1.0 - (-1.0f64).exp() - 2.0 / steps as f64, f.value(&rounded) / opt);
    Ok(())
}
