//! Four agents pass a message around a ring to run greedy without a
//! coordinator. Dropped hops leave agents choosing on partial information.

use submax::bruteforce::brute_force_opt;
use submax::distributed::{
    bernoulli_sweep, clique_number, find_message_sequence, gap_bound_incomplete, run_distributed_sg, CommGraph,
    DropModel,
};
use submax::functions::{CoverageInstance, CoverageOracle};
use submax::PartitionMatroid;

fn main() -> submax::Result<()> {
    // Each agent owns two spots: a shared hot spot worth 10 and a private one worth 3.
    let f = CoverageOracle::new(&CoverageInstance {
        weights: vec![10.0, 3.0, 3.0, 3.0, 3.0],
        cover_sets: (0..8).map(|e| if e % 2 == 0 { vec![0] } else { vec![e / 2 + 1] }).collect(),
    })?;
    let m = PartitionMatroid::new(8, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]], vec![1, 1, 1, 1])?;
    let (_, opt) = brute_force_opt(&f, &m)?;

    let star = find_message_sequence(&CommGraph::star(3))?;
    println!("star walk {:?}: hamiltonian {}, {} revisit", star.walk(), star.is_hamiltonian(), star.revisits());

    let ring = CommGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let schedule = find_message_sequence(&ring)?;
    println!("ring walk {:?}", schedule.walk());

    let drops = DropModel::FailedHops([1].into());
    let run = run_distributed_sg(&f, &m, &schedule, &drops)?;
    let omega = clique_number(&run.info)?;
    for agent in 0..4 {
        println!("agent {agent} heard from {:?} and picked {}", run.info.in_neighbors(agent), run.picks[agent]);
    }
    println!(
        "hop 1 lost: value {:.2} of {opt:.2}, clique number {omega}, guaranteed {:.3}",
        run.value,
        gap_bound_incomplete(4, omega)?
    );

    let table = bernoulli_sweep(&f, &m, &schedule, &[0.0, 0.5, 0.9, 1.0], 50, 17)?;
    for s in &table.summaries {
        println!(
            "p = {:.1}: mean ratio {:.3}, worst {:.3}, mean clique number {:.2}",
            s.p_success,
            s.mean_ratio.unwrap_or(f64::NAN),
            s.min_ratio.unwrap_or(f64::NAN),
            s.mean_omega
        );
    }
    Ok(())
}
