//! Place data-retrieval devices at candidate spots to serve scattered data
//! points, first centrally and then with agents that each reach only some
//! of the spots.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use submax::bruteforce::brute_force_opt;
use submax::functions::{generate, harvesting_partition, ExemplarOracle, LossMode};
use submax::greedy::{natural_order, sequential_greedy, sequential_greedy_partition};
use submax::UniformMatroid;

fn main() -> submax::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let inst = generate::exemplar(8, 40, &mut rng);
    let f = Arc::new(ExemplarOracle::new(&inst, LossMode::KMedoid)?);

    let m = UniformMatroid::new(8, 3)?;
    let run = sequential_greedy(&*f, &m)?;
    let (_, opt) = brute_force_opt(&*f, &m)?;
    println!("central: spots {} cut the loss by {:.2} (optimum {opt:.2})", run.set, run.value);

    // Three agents with overlapping reach, one device each except the last.
    let access = vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5], vec![5, 6, 7]];
    let (g, pm, pairs) = harvesting_partition(f, &access, vec![1, 1, 2])?;
    let run = sequential_greedy_partition(&g, &pm, &natural_order(&pm))?;
    let (_, opt) = brute_force_opt(&g, &pm)?;
    let deployed: Vec<String> = run.set.iter().map(|k| format!("agent {} at spot {}", pairs[k].0, pairs[k].1)).collect();
    println!("agents: {}", deployed.join(", "));
    println!("loss reduction {:.2} (optimum {opt:.2}, ratio {:.3})", run.value, run.value / opt);
    Ok(())
}
