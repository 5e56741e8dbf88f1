//! Exhaustive generators, class filters, statistic tallies and counting
//! oracles.

mod classes;
mod distribution;
mod generators;
pub mod oracles;

pub use classes::{count_class, filter_class, Object, ObjectClass, Predicate};
pub use distribution::{distribution, DistributionTable};
pub use generators::{
    gen_ascent_sequences, gen_factorial_posets, gen_inversion_tables, gen_matchings, gen_matrices,
    gen_natural_posets, gen_permutations,
};
pub use oracles::{catalan, double_factorial_odd, factorial, fishburn_numbers, second_order_eulerian};
