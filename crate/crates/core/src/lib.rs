//! Liftable mapping class groups of cyclic branched covers of the sphere.
//!
//! A periodic mapping class `F` of a closed surface with spherical quotient
//! is encoded by a cyclic data set. From it this crate computes the
//! generating Γ-vector, the images in `Σ_k` of the liftable and centralizing
//! subgroups of `Mod(S_{0,k})`, finite presentations of those subgroups, and
//! presentations of the normalizer `N(F)` and centralizer `C(F)`.

pub mod arith_perm;
pub mod datasets;
pub mod error;
pub mod fpgroups;
pub mod gamma_action;
pub mod liftable;

pub use error::{Error, Result};
