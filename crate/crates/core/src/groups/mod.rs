//! Finite-group substrate: abelian tuple groups, permutations, Cayley tables,
//! subgroup lattices, normal cores, automorphisms, holomorphs, and recognition
//! of the small groups that occur as permutation groups of solutions.

mod abelian;
mod auts;
mod identify;
mod perm;
mod table;

pub use abelian::{abelian_groups_of_order, invariant_factors_from_moduli, AbelianGroup, Element};
pub use auts::{abelian_automorphisms, for_each_additive_isomorphism, holomorph, AdditiveMap, Holomorph};
pub use identify::{abelian_basis, abelian_invariants, dihedral_split, identify_group, DihedralSplit, GroupDescriptor};
pub use perm::{generate_perm_group, is_transitive, PermGroup, Permutation};
pub use table::{GroupTable, Subgroup, TableDefect};
