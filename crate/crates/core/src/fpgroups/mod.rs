//! Finitely presented groups: words, presentations, sphere mapping class
//! group presentations, Reidemeister-Schreier rewriting, Tietze moves,
//! abelianization and extension presentations.

mod extension;
mod presentation;
mod schreier;
pub mod sphere;
mod tietze;
mod word;

pub use extension::{extension_presentation, Evaluation, Lift, LiftData};
pub use presentation::{abelianization, Abelianization, Presentation, SymbolicRelation};
pub use schreier::{reidemeister_schreier, reidemeister_schreier_detailed, SchreierRewriting};
pub use sphere::{half_twist_images, mod_sphere_presentation, pmod_sphere_presentation};
pub use tietze::{tietze_simplify, TietzeBudget};
pub use word::{Letter, Word};
