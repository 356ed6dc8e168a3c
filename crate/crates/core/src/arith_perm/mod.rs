//! Modular arithmetic, permutations, small permutation groups and integer
//! Smith normal form.

pub mod group;
pub mod perm;
pub mod residue;
pub mod snf;

pub use group::{
    coset_table, factorial, perm_closure, CosetTable, PermGroup, MAX_COSETS, MAX_GROUP_DEGREE,
    MAX_MATERIALIZED,
};
pub use perm::{all_permutations, Permutation};
pub use residue::{lcm_all, units_mod, Residue};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};
