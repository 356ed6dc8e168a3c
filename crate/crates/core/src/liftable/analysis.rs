use serde::Serialize;
use serde_json::{json, Value};

use crate::arith_perm::units_mod;
use crate::datasets::{DataSet, Pair};
use crate::error::{Error, Result};
use crate::fpgroups::{
    abelianization, half_twist_images, mod_sphere_presentation, reidemeister_schreier_detailed,
    tietze_simplify, Abelianization, Presentation, TietzeBudget, Word,
};
use crate::gamma_action::{
    classify_irreducible, cross_check_bruteforce, liftable_images, mod_equals_lmod, Classification,
    GammaVector, StabilizerReport,
};

/// Largest `[Mod : ψ⁻¹(H)]` for which presentations are computed.
pub const MAX_PRESENTATION_INDEX: usize = 720;

/// Largest `k` for which `analyze` re-derives `H1`, `H2` by exhaustive search.
pub const MAX_CROSS_CHECK_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DoubledCase {
    /// Some branch point has order 2; `[Mod : LMod] = 6`.
    #[serde(rename = "(i)")]
    OrderTwo,
    /// No branch point of order 2; `[Mod : LMod] = 12`.
    #[serde(rename = "(ii)")]
    NoOrderTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyTag {
    Hyperelliptic,
    BalancedSuperelliptic { n: u64, k: u64 },
    Doubled { case: DoubledCase },
}

impl FamilyTag {
    pub fn describe(&self) -> String {
        match self {
            FamilyTag::Hyperelliptic => "hyperelliptic".into(),
            FamilyTag::BalancedSuperelliptic { n, k } => {
                format!("balanced superelliptic (n = {n}, k = {k})")
            }
            FamilyTag::Doubled {
                case: DoubledCase::OrderTwo,
            } => "doubled, case (i)".into(),
            FamilyTag::Doubled {
                case: DoubledCase::NoOrderTwo,
            } => "doubled, case (ii)".into(),
        }
    }
}

/// A presentation of `ψ⁻¹(H) ≤ Mod(S_{0,k})`.
#[derive(Debug, Clone)]
pub struct SubgroupPresentation {
    pub index: usize,
    /// Generators of the unsimplified Reidemeister-Schreier output.
    pub schreier_rank: usize,
    pub raw: Presentation,
    pub simplified: Presentation,
    pub abelianization: Abelianization,
    /// Half-twist word of each generator of `raw`.
    pub definitions: Vec<Word>,
}

impl SubgroupPresentation {
    /// Half-twist word of a generator of `raw` or `simplified`.
    pub fn definition(&self, name: &str) -> Option<&Word> {
        self.raw.generator_index(name).map(|i| &self.definitions[i])
    }
}

/// Presentation of `ψ⁻¹(H)` via Reidemeister-Schreier and Tietze moves.
pub fn subgroup_presentation(h: &crate::arith_perm::PermGroup) -> Result<SubgroupPresentation> {
    let k = h.degree();
    let index = h.index_in_symmetric();
    if index > MAX_PRESENTATION_INDEX as u128 {
        return Err(Error::Capacity {
            what: "subgroup index for presentations",
            size: index.min(usize::MAX as u128) as usize,
            max: MAX_PRESENTATION_INDEX,
        });
    }
    let p = mod_sphere_presentation(k)?;
    let rs = reidemeister_schreier_detailed(&p, &half_twist_images(k), h)?;
    let simplified = tietze_simplify(&rs.presentation, TietzeBudget::default());
    let abelianization = abelianization(&simplified)?;
    Ok(SubgroupPresentation {
        index: rs.index,
        schreier_rank: rs.presentation.generators().len(),
        raw: rs.presentation,
        simplified,
        abelianization,
        definitions: rs.definitions,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Compute LMod and CLMod presentations when the index allows.
    pub presentations: bool,
    /// Re-derive `H1`, `H2` by exhaustive search for `k ≤ MAX_CROSS_CHECK_DEGREE`.
    pub cross_check: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            presentations: true,
            cross_check: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub dataset: DataSet,
    pub genus: i64,
    pub gamma: GammaVector,
    pub stab: StabilizerReport,
    /// Absent when the index exceeds [`MAX_PRESENTATION_INDEX`].
    pub lmod: Option<SubgroupPresentation>,
    pub clmod: Option<SubgroupPresentation>,
    pub classification: Option<Classification>,
    pub mod_equals_lmod: bool,
    pub families: Vec<FamilyTag>,
    pub cross_checked: bool,
}

pub fn analyze(d: &DataSet) -> Result<AnalysisReport> {
    analyze_with(d, AnalyzeOptions::default())
}

pub fn analyze_with(d: &DataSet, options: AnalyzeOptions) -> Result<AnalysisReport> {
    let genus = d.ensure_valid()?;
    if d.g0() != 0 {
        return Err(Error::NotSpherical(d.g0()));
    }
    if genus < 2 {
        return Err(Error::GenusOutOfScope(genus));
    }
    let gamma = d.gamma_vector()?;
    let stab = liftable_images(&gamma)?;
    let full = mod_equals_lmod(&gamma);
    if full != stab.h1.is_symmetric() {
        return Err(Error::Inconsistent(
            "full-liftability criterion disagrees with H1".into(),
        ));
    }
    let cross_checked = options.cross_check && gamma.k() <= MAX_CROSS_CHECK_DEGREE;
    if cross_checked {
        cross_check_bruteforce(&gamma, &stab)?;
    }
    let classification = if gamma.k() == 3 {
        let c = classify_irreducible(&gamma)?;
        if c.lmod.order() as u128 != stab.h1.order() {
            return Err(Error::Inconsistent(format!(
                "case {} predicts |LMod| = {} but |H1| = {}",
                c.case,
                c.lmod.order(),
                stab.h1.order()
            )));
        }
        Some(c)
    } else {
        None
    };
    let presentation = |h| -> Result<Option<SubgroupPresentation>> {
        if !options.presentations {
            return Ok(None);
        }
        match subgroup_presentation(h) {
            Ok(p) => Ok(Some(p)),
            Err(Error::Capacity { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let lmod = presentation(&stab.h1)?;
    let clmod = presentation(&stab.h2)?;
    check_bookkeeping(&lmod, stab.index_mod_lmod, gamma.k())?;
    check_bookkeeping(
        &clmod,
        stab.index_mod_lmod * stab.index_n_c as u128,
        gamma.k(),
    )?;
    Ok(AnalysisReport {
        families: family_tags(d),
        dataset: d.clone(),
        genus,
        gamma,
        stab,
        lmod,
        clmod,
        classification,
        mod_equals_lmod: full,
        cross_checked,
    })
}

/// The Schreier index equals `[Mod : ψ⁻¹(H)]` and the unsimplified rank is
/// `index·(k−2) + 1`.
fn check_bookkeeping(p: &Option<SubgroupPresentation>, index: u128, k: usize) -> Result<()> {
    let Some(p) = p else { return Ok(()) };
    if p.index as u128 != index || p.schreier_rank != p.index * (k - 2) + 1 {
        return Err(Error::Inconsistent(format!(
            "Schreier index {} and rank {} disagree with [Mod : ψ⁻¹(H)] = {index}",
            p.index, p.schreier_rank
        )));
    }
    Ok(())
}

/// Family memberships recognised from the shape of a spherical data set.
pub fn family_tags(d: &DataSet) -> Vec<FamilyTag> {
    let mut tags = Vec::new();
    let n = d.n();
    let pairs = d.pairs();
    let k = pairs.len();
    if n == 2 && pairs.iter().all(|p| *p == Pair { d: 1, n: 2 }) {
        tags.push(FamilyTag::Hyperelliptic);
    }
    if n >= 3 && k.is_multiple_of(2) && k >= 4 {
        let ups = pairs.iter().filter(|p| **p == Pair { d: 1, n }).count();
        let downs = pairs.iter().filter(|p| **p == Pair { d: n - 1, n }).count();
        if ups == k / 2 && downs == k / 2 {
            tags.push(FamilyTag::BalancedSuperelliptic {
                n,
                k: (k / 2 - 1) as u64,
            });
        }
    }
    if k == 4 && d.g0() == 0 && is_doubled(d) {
        let case = if pairs.iter().any(|p| p.n == 2) {
            DoubledCase::OrderTwo
        } else {
            DoubledCase::NoOrderTwo
        };
        tags.push(FamilyTag::Doubled { case });
    }
    tags
}

/// Pairs split as `{(d1,n1), (−d1,n1)}`, `{(d2,n2), (−d2,n2)}`, and some
/// `(n, 0; (±d1,n1), (±d2,n2), (u,n))` is a data set, `u` a unit; up to
/// equivalence that is a three-point set ending in `(1, n)`.
fn is_doubled(d: &DataSet) -> bool {
    let p = d.pairs();
    let matchings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    let n = d.n();
    matchings.iter().any(|&[(a, b), (c, e)]| {
        if p[b] != p[a].negated() || p[e] != p[c].negated() {
            return false;
        }
        [p[a], p[b]].iter().any(|&x| {
            [p[c], p[e]].iter().any(|&y| {
                units_mod(n).into_iter().any(|u| {
                    let src = DataSet::from_pairs(n, 0, vec![x, y, Pair::new(u.value() as i64, n)]);
                    src.validate().is_valid()
                })
            })
        })
    })
}

impl AnalysisReport {
    pub fn index_mod_lmod(&self) -> u128 {
        self.stab.index_mod_lmod
    }

    pub fn index_n_c(&self) -> usize {
        self.stab.index_n_c
    }

    pub fn to_json(&self) -> Value {
        let sub = |s: &Option<SubgroupPresentation>| match s {
            None => Value::Null,
            Some(s) => json!({
                "index": s.index,
                "schreier_rank": s.schreier_rank,
                "presentation": s.simplified.to_json(),
                "text": s.simplified.render(),
                "abelianization": s.abelianization.to_string(),
            }),
        };
        json!({
            "schema": 1,
            "dataset": self.dataset.to_string(),
            "genus": self.genus,
            "gamma": { "n": self.gamma.n(), "c": self.gamma.values() },
            "stabilizer": self.stab.to_json(),
            "mod_equals_lmod": self.mod_equals_lmod,
            "lmod": sub(&self.lmod),
            "clmod": sub(&self.clmod),
            "classification": self.classification.as_ref().map(|c| json!({
                "case": c.case.label(),
                "ell": c.ell,
                "lmod": c.lmod.to_string(),
                "normalizer": c.normalizer.to_string(),
                "centralizer": c.centralizer.to_string(),
                "normalizer_asserted": c.normalizer_asserted,
            })),
            "families": self.families.iter().map(FamilyTag::describe).collect::<Vec<_>>(),
            "cross_checked": self.cross_checked,
        })
    }
}
