//! The `(ℓ, σ)`-action of `Z_n^× × Σ_k` on generating Γ-vectors, its
//! stabilizer, the images `H1 = ψ(LMod)` and `H2 = ψ(CLMod)`, and the
//! classification of three-point classes.

mod classify;
mod stabilizer;
mod vector;

pub use classify::{classify_irreducible, Classification, GroupDescriptor, IrreducibleCase};
pub use stabilizer::{
    cross_check_bruteforce, evaluate_half_twists, for_each_stabilizer, half_twist_names,
    half_twist_word, liftable_images, mod_equals_lmod, stabilizer_bruteforce, stabilizing_unit,
    CEntry, StabilizerReport, MAX_BRUTE_FORCE_DEGREE,
};
pub use vector::{act, GammaVector};
