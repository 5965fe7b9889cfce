//! Exact analysis of nets of quadric surfaces in projective 3-space:
//! base loci, singular members, configuration graphs of vertical divisors,
//! root-system combinatorics, and discriminant quartics.

pub mod baselocus;
pub mod catalog;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod mordell;
pub mod parse;
pub mod quadric;
pub mod quartic;
pub mod roots;

pub use error::{Error, Result};
