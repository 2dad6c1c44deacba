//! Exact combinatorial bounds for the Hofer-Zehnder capacity of coadjoint
//! orbits of compact simple Lie groups.
//!
//! The crate builds root systems and Weyl groups with exact rational
//! arithmetic, the Bruhat, quantum Bruhat and weighted Cayley graphs, and
//! evaluates the lower and upper capacity bounds obtained from a decomposition
//! of the longest Weyl group element into orthogonal reflections.

pub mod capacity;
pub mod cli;
pub mod error;
pub mod graphs;
pub mod rational;
pub mod rootsystem;
pub mod verify;
pub mod weyl;

pub use capacity::{hz_bounds, CapacityBounds, HzOptions, W0Decomposition, WeightLambda};
pub use error::{Error, Result};
pub use rational::{Rational, RationalVector};
pub use rootsystem::{Family, RootSystem};
pub use weyl::{ParabolicData, WeylElement, WeylGroup};
