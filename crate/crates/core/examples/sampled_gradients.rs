//! Monte-Carlo estimates of the multilinear extension and its gradient,
//! and continuous greedy driven by them.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use submax::continuous::{
    chernoff_success_probability, continuous_greedy, grad_estimate, grad_exact, multilinear_estimate,
    multilinear_exact, pipage_round_sampled, CGParams, MembershipVector,
};
use submax::functions::{generate, ExemplarOracle, LossMode};
use submax::ValueOracle;

fn main() -> submax::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = ExemplarOracle::new(&generate::exemplar(8, 30, &mut rng), LossMode::KMedoid)?;
    let x = MembershipVector::new(vec![0.2, 0.5, 0.1, 0.9, 0.3, 0.0, 0.7, 0.4])?;
    let exact = multilinear_exact(&f, &x)?;
    for samples in [50, 500, 5000] {
        let est = multilinear_estimate(&f, &x, samples, &mut rng)?;
        println!("K = {samples:>4}: F ≈ {:8.3} ± {:7.3} (exact {exact:.3})", est.mean, est.half_width);
    }

    let g = grad_exact(&f, &x)?;
    let g_hat = grad_estimate(&f, &x, 2000, &mut rng)?;
    let err = g.iter().zip(&g_hat).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("largest gradient error with 2000 samples: {err:.3}");

    let m = generate::partition(8, 2, 2, &mut rng);
    let (steps, samples) = (20, 400);
    let out = continuous_greedy(&f, &m, &CGParams::sampled(steps, samples, 99))?;
    let set = pipage_round_sampled(&out.x, &m, &f, samples, &mut rng)?;
    println!("sampled continuous greedy picked {set} worth {:.3}", f.value(&set));
    for k in [1e4, 1e6, 1e8] {
        println!(
            "success probability with K = {k:e}: {:.4}",
            chernoff_success_probability(steps, f.ground_size(), k)
        );
    }
    Ok(())
}
