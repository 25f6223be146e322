//! Brute-force oracles kept independent of the coset construction: braces
//! from regular subgroups of the holomorph, backtracking enumeration of small
//! solutions, and the dihedral size check.

mod backtrack;
mod conjecture;
mod holomorph;

pub use backtrack::{all_solutions, all_solutions_with, SearchOrder, SolutionCensus, MAX_ALL, MAX_INDECOMPOSABLE};
pub use conjecture::{conjecture_check, ConjectureReport};
pub use holomorph::{braces_of_order, braces_on_group, regular_subgroups, BraceCensus};

#[cfg(test)]
mod tests;
