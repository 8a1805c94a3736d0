//! Pick three sensors out of eight to cover the most weighted area.

use submax::bruteforce::brute_force_opt;
use submax::functions::{CoverageInstance, CoverageOracle};
use submax::greedy::{lazy_greedy, sequential_greedy};
use submax::{UniformMatroid, ValueOracle};

fn main() -> submax::Result<()> {
    let inst = CoverageInstance {
        weights: vec![5.0, 3.0, 3.0, 2.0, 2.0, 2.0, 1.0, 1.0, 4.0],
        cover_sets: vec![
            vec![0, 1],
            vec![0, 2, 3],
            vec![1, 4],
            vec![3, 5, 6],
            vec![8],
            vec![2, 7, 8],
            vec![4, 5],
            vec![0, 6, 7],
        ],
    };
    let f = CoverageOracle::new(&inst)?;
    let m = UniformMatroid::new(f.ground_size(), 3)?;

    let sg = sequential_greedy(&f, &m)?;
    for (i, pick) in sg.picks.iter().enumerate() {
        println!("pick {}: sensor {} adds {:.1}", i + 1, pick.element, pick.gain);
    }
    let lazy = lazy_greedy(&f, &m)?;
    assert_eq!(lazy.set, sg.set);
    println!("greedy {} value {:.1} with {} oracle calls", sg.set, sg.value, sg.oracle_calls());
    println!("lazy   {} value {:.1} with {} oracle calls", lazy.set, lazy.value, lazy.oracle_calls());

    let (best, opt) = brute_force_opt(&f, &m)?;
    println!("optimum {best} value {opt:.1}; ratio {:.3}", sg.value / opt);
    Ok(())
}
