//! Submodular maximization under uniform and partition matroid constraints.
//!
//! The crate bundles:
//!
//! - subsets, value oracles and brute-force property checkers
//!   ([`subset`], [`oracle`], [`properties`]);
//! - concrete objectives: coverage, exemplar clustering, link-flow rank,
//!   modular weights and welfare allocation ([`functions`]);
//! - independence oracles with an axiom verifier ([`matroid`]);
//! - sequential, partition and lazy greedy with their curvature bounds ([`greedy`]);
//! - the multilinear extension, continuous greedy and pipage rounding ([`continuous`]);
//! - a message-passing simulator for distributed greedy ([`distributed`]);
//! - an exact enumerator used as ground truth ([`bruteforce`]);
//! - instance and experiment files plus the `submax` command line ([`instance`], [`cli`]).

pub mod bruteforce;
pub mod cli;
pub mod continuous;
pub mod distributed;
pub mod error;
pub mod functions;
pub mod greedy;
pub mod instance;
pub mod matroid;
pub mod oracle;
pub mod properties;
pub mod subset;

pub use error::{Error, Result};
pub use matroid::{IndependenceOracle, PartitionMatroid, UniformMatroid};
pub use oracle::ValueOracle;
pub use subset::{ElementId, GroundSet, Subset};

/// Absolute tolerance for comparing oracle values.
pub const EPS_VAL: f64 = 1e-9;

/// Tag echoed into every CSV row.
pub const VERSION_TAG: &str = concat!("submax-", env!("CARGO_PKG_VERSION"));

/// Seed for stream `stream` of a master seed. Used wherever independent
/// workers need reproducible, worker-count-independent randomness.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(stream);
    rng.gen()
}
