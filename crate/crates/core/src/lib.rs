//! Fibonacci cubes `Γ_n`, Lucas cubes `Λ_n` and the cube-complement `Γ̄_n`.
//!
//! Every closed form here (edge counts, irregularity, imbalance censuses,
//! degree sequence of `Γ̄_n`) has a brute-force counterpart in [`oracle`]
//! that works only from adjacency. The bijections behind the irregularity
//! results are implemented explicitly in [`bijections`].

mod arith;
pub mod bijections;
pub mod cli;
pub mod complement;
pub mod cubes;
pub mod error;
pub mod imbalance;
pub mod oracle;
pub mod strings;

/// Counter type for every enumerative quantity. `n 2^{n-1}` already exceeds
/// `u64` at `n = 60`.
pub type Count = u128;

pub use cubes::{CubeGraph, Edge, Family};
pub use error::{Error, Result};
pub use strings::{BitString, StringClass};
