//! The axiom verifier on real matroids and on independence systems that
//! only look like one.

use submax::matroid::{verify_matroid_axioms, SetSystem};
use submax::{PartitionMatroid, UniformMatroid};

fn main() -> submax::Result<()> {
    println!("{}", verify_matroid_axioms(&UniformMatroid::new(6, 3)?)?);
    let partition = PartitionMatroid::new(6, vec![vec![0, 3], vec![1, 2, 5], vec![4]], vec![1, 2, 1])?;
    println!("{}", verify_matroid_axioms(&partition)?);

    // Pairs avoiding {0,1} and {0,2}: {1,2} cannot extend {0}.
    let pairs = SetSystem::new(4, vec![vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]])?;
    println!("{}", verify_matroid_axioms(&pairs)?);

    // Two maximal sets of different sizes.
    let lopsided = SetSystem::new(5, vec![vec![0, 1], vec![2, 3, 4]])?;
    println!("{}", verify_matroid_axioms(&lopsided)?);
    Ok(())
}
