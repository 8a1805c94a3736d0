//! Exhaustive and sampled property checks, including a supermodular decoy.

use submax::functions::{generate, RankOracle};
use submax::oracle::FnOracle;
use submax::properties::{check_monotone, check_normal, check_submodular, total_curvature, CheckMode};
use submax::Subset;

fn main() -> submax::Result<()> {
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(1);
    let rank = RankOracle::new(&generate::traffic(10, &mut rng))?;
    println!("{}", check_normal(&rank));
    println!("{}", check_monotone(&rank, CheckMode::Exhaustive)?);
    println!("{}", check_submodular(&rank, CheckMode::Exhaustive)?);
    println!("curvature {:.3}", total_curvature(&rank)?.c);

    let square = FnOracle::new(5, "square", |s: &Subset| (s.len() * s.len()) as f64);
    println!("{}", check_submodular(&square, CheckMode::Exhaustive)?);

    let wide = FnOracle::new(40, "sqrt-size", |s: &Subset| (s.len() as f64).sqrt());
    println!("{}", check_submodular(&wide, CheckMode::Sampled { samples: 5000, seed: 2 })?);
    Ok(())
}
