//! Allocate four items among three agents. Each assignment is an
//! (item, agent) pair; every item goes to at most one agent, which makes
//! the problem a partition matroid with one block per item.

use std::sync::Arc;

use submax::bruteforce::brute_force_opt;
use submax::functions::{welfare_lift, CoverageInstance, CoverageOracle, ModularInstance, ModularOracle};
use submax::greedy::sequential_greedy_partition;
use submax::ValueOracle;

fn main() -> submax::Result<()> {
    let items = 4;
    let collector: Arc<dyn ValueOracle> = Arc::new(CoverageOracle::new(&CoverageInstance {
        weights: vec![4.0, 2.0, 2.0],
        cover_sets: vec![vec![0], vec![0, 1], vec![2], vec![1, 2]],
    })?);
    let flat: Arc<dyn ValueOracle> = Arc::new(ModularOracle::new(&ModularInstance { weights: vec![3.0, 1.0, 2.5, 1.5] })?);
    let picky: Arc<dyn ValueOracle> = Arc::new(ModularOracle::new(&ModularInstance { weights: vec![0.5, 3.5, 0.5, 0.5] })?);

    let (_, f, m) = welfare_lift(vec![collector, flat, picky], items)?;
    let (best, opt) = brute_force_opt(&f, &m)?;
    println!("optimal welfare {opt:.2}");

    for order in [vec![0, 1, 2, 3], vec![3, 2, 1, 0], vec![1, 3, 0, 2]] {
        let run = sequential_greedy_partition(&f, &m, &order)?;
        let bundles: Vec<String> = (0..f.agents()).map(|a| f.bundle(&run.set, a).to_string()).collect();
        println!("items in order {order:?}: bundles {}, welfare {:.2}, ratio {:.3}", bundles.join(" "), run.value, run.value / opt);
    }
    let optimal: Vec<String> = (0..f.agents()).map(|a| f.bundle(&best, a).to_string()).collect();
    println!("optimal bundles {}", optimal.join(" "));
    Ok(())
}
