//! Perfect matchings without left-nestings, factorial posets, inversion
//! tables and upper-triangular matrices: the bijections between them,
//! their statistics, exhaustive generators and a registry of checks.

pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod inversion;
pub mod json;
pub mod matching;
pub mod matrix;
pub mod permutation;
pub mod poset;
pub mod statistics;
pub mod verify;

pub use error::{Error, Result};
pub use inversion::InversionTable;
pub use json::FromJson;
pub use matching::{Arc, Matching, NestCrossRecord};
pub use matrix::TriangularMatrix;
pub use permutation::Permutation;
pub use poset::{FactorialPoset, Poset};
pub use statistics::{Stat, StatRecord, StatTerm};
