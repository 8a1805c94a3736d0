//! Where to put flow sensors so that link flows become identifiable.
//! The objective is the rank gained by the sensor rows on top of the
//! flow-conservation rows at interior nodes.

use submax::bruteforce::brute_force_opt;
use submax::functions::{RankInstance, RankOracle};
use submax::greedy::sequential_greedy;
use submax::{Subset, UniformMatroid, ValueOracle};

fn main() -> submax::Result<()> {
    // Entry 0, exit 4, a diamond in between and one bypass.
    let links = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2), (3, 4), (0, 4)];
    let inst = RankInstance::from_network(5, &links, &[0, 4])?;
    let f = RankOracle::new(&inst)?;
    println!("{} links, {} degrees of freedom left by conservation", links.len(), f.value(&Subset::full(links.len())));

    for kappa in 1..=4 {
        let m = UniformMatroid::new(links.len(), kappa)?;
        let run = sequential_greedy(&f, &m)?;
        let (_, opt) = brute_force_opt(&f, &m)?;
        let chosen: Vec<_> = run.set.iter().map(|l| links[l]).collect();
        println!("{kappa} sensors on {chosen:?}: rank gain {} (optimum {opt})", run.value);
    }
    Ok(())
}
