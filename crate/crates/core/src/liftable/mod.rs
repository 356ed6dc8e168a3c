//! End-to-end analysis of spherical data sets: liftable images, LMod and
//! CLMod presentations, normalizer and centralizer presentations, the
//! symplectic matrix check for the order `2g+2` doubled class, and the
//! genus-3 table of irreducible classes.

mod analysis;
mod matrices;
mod normalizer;
mod table;

pub use analysis::{
    analyze, analyze_with, family_tags, subgroup_presentation, AnalysisReport, AnalyzeOptions,
    DoubledCase, FamilyTag, SubgroupPresentation, MAX_CROSS_CHECK_DEGREE, MAX_PRESENTATION_INDEX,
};
pub use matrices::{
    psi_f, psi_g, psi_g1, psi_g2, psi_g3, skew_form, verify_doubled_matrices, CheckKind,
    MatrixCheck, MatrixVerification,
};
pub use normalizer::{
    doubled_clmod_presentation, doubled_corollary_dataset, doubled_lmod_presentation,
    normalizer_centralizer, normalizer_centralizer_exact, NormalizerSpec, Provenance, UserLifts,
};
pub use table::{table_genus3, Table, TableRow, GENUS3_ROWS, OUT_OF_SCOPE};
