//! Executable bijections between permutation classes with matching statistics.
//!
//! [`direct`] holds the maps given by a fixed sequence of elementary moves. [`recursive`]
//! builds the insertion-driven matchings level by level and materializes them as
//! [`MatchingTable`]s, which [`direct::bij_p_complement`] then composes with.

pub mod direct;
mod matching;
pub mod recursive;

pub use direct::{
    bij_p_complement, bij_p_complement_inv, bij_r_split, bij_r_split_inv, bij_r_symmetry,
    bij_r_symmetry_inv, SplitTag,
};
pub use matching::MatchingTable;
pub use recursive::{alpha, beta, RecursiveBijections};
