//! Finite braces and indecomposable involutive solutions of the
//! set-theoretic Yang–Baxter equation.
//!
//! The crate is organized bottom-up:
//!
//! - [`groups`]: abelian tuple groups, permutation groups, Cayley tables,
//!   subgroup lattices, additive automorphisms and holomorphs.
//! - [`braces`]: the brace abstraction, the explicit brace families of sizes
//!   `pq` and `p²q`, axiom checks, the λ map, brace automorphisms and brace
//!   isomorphism.
//! - [`solutions`]: solutions given by σ/τ tables, validation of the
//!   Yang–Baxter axioms, permutation groups, the brace induced on the
//!   permutation group, and solution isomorphism.
//! - [`construct`]: λ-orbits, stabilizers, core-free subgroups, the coset
//!   construction of indecomposable solutions and classification up to
//!   isomorphism.
//! - [`enumerate`]: brute-force oracles (braces from regular subgroups of the
//!   holomorph, backtracking enumeration of small solutions) and the
//!   dihedral size check.
//! - [`format`] and [`report`]: the line-oriented file format and the
//!   verification sweep used by the command-line tool.

pub mod arith;
pub mod bounds;
pub mod braces;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod groups;
pub mod report;
pub mod solutions;

pub use bounds::Bounds;
pub use error::{Error, Result};
