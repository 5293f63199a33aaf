//! Singularity invariants of type A Schubert varieties.
//!
//! The crate combines two routes to the same local information:
//! combinatorial ones (Bruhat order, interval pattern avoidance) and
//! algebraic ones (Kazhdan-Lusztig ideals, Gröbner bases, Schreyer
//! resolutions).

pub mod budget;
pub mod error;
pub mod invariants;
pub mod klideal;
pub mod pattern;
pub mod perm;
pub mod poly;
pub mod resolution;

/// Library version, part of every result-cache key.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use error::{Error, Result};
pub use pattern::{Embedding, IntervalPattern, PatternIdealGenerators};
pub use perm::{BruhatInterval, Permutation};
