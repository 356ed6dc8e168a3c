use serde::Serialize;
use serde_json::{json, Value};

use super::analysis::{AnalysisReport, DoubledCase, FamilyTag, SubgroupPresentation};
use crate::arith_perm::{Permutation, Residue};
use crate::datasets::DataSet;
use crate::error::{Error, Result};
use crate::fpgroups::{
    abelianization, extension_presentation, Evaluation, LiftData, Presentation, Word,
};
use crate::gamma_action::{
    evaluate_half_twists, stabilizing_unit, GroupDescriptor, IrreducibleCase,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    BuiltIn,
    UserSupplied,
    Symbolic,
}

/// A presentation of `N(F)` or `C(F)` as an extension of `⟨F | F^n⟩`.
#[derive(Debug, Clone)]
pub struct NormalizerSpec {
    pub presentation: Presentation,
    /// `(lift, quotient generator, e)` with `lift · F · lift⁻¹ = F^e`.
    pub conjugation: Vec<(String, String, i64)>,
    pub provenance: Provenance,
    pub descriptor: Option<GroupDescriptor>,
    /// The isomorphism type is stated without an exhibited lift relation.
    pub asserted: bool,
}

impl NormalizerSpec {
    pub fn to_json(&self) -> Value {
        json!({
            "presentation": self.presentation.to_json(),
            "text": self.presentation.render(),
            "conjugation": self.conjugation.iter().map(|(g, s, e)| json!({
                "lift": g, "generator": s, "exponent": e,
            })).collect::<Vec<_>>(),
            "provenance": self.provenance,
            "descriptor": self.descriptor.map(|d| d.to_string()),
            "asserted": self.asserted,
        })
    }
}

/// `F`-exponents of the lifted relators, one per relator of the simplified
/// LMod and CLMod presentations of an [`AnalysisReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UserLifts {
    pub normalizer: Vec<i64>,
    pub centralizer: Vec<i64>,
}

/// `(N(F), C(F))`. User-supplied exponents take precedence, then built-in
/// presentations (three-point classes and the order `2g+2` doubled class),
/// then symbolic exponents `e_1, e_2, …`. A free CLMod always yields the
/// exact `⟨F, G_1, … | F^n, [G_i, F]⟩`.
pub fn normalizer_centralizer(
    report: &AnalysisReport,
    lifts: Option<&UserLifts>,
) -> Result<(NormalizerSpec, NormalizerSpec)> {
    if let Some(l) = lifts {
        return Ok((
            lifted(report, true, Some(&l.normalizer))?,
            lifted(report, false, Some(&l.centralizer))?,
        ));
    }
    if let Some(pair) = irreducible_built_in(report)? {
        return Ok(pair);
    }
    if let Some(pair) = doubled_built_in(report)? {
        return Ok(pair);
    }
    Ok((lifted(report, true, None)?, lifted(report, false, None)?))
}

/// As [`normalizer_centralizer`], refusing symbolic exponents.
pub fn normalizer_centralizer_exact(
    report: &AnalysisReport,
    lifts: Option<&UserLifts>,
) -> Result<(NormalizerSpec, NormalizerSpec)> {
    let (n, c) = normalizer_centralizer(report, lifts)?;
    for s in [&n, &c] {
        if s.presentation.is_symbolic() {
            return Err(Error::MissingLiftData(format!(
                "{} relator evaluations are undetermined",
                s.presentation.symbolic().len()
            )));
        }
    }
    Ok((n, c))
}

fn kernel(n: u64) -> Presentation {
    Presentation::new(vec!["F".into()], vec![Word::power_of(0, n as i64)]).expect("one generator")
}

fn signed(ell: u64, n: u64) -> i64 {
    Residue::from_u64(ell, n).signed()
}

fn lift_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("G{i}")).collect()
}

/// Lifts every generator of the simplified LMod (or CLMod) presentation.
fn lifted(
    report: &AnalysisReport,
    normalizer: bool,
    exponents: Option<&[i64]>,
) -> Result<NormalizerSpec> {
    let sub: &SubgroupPresentation = if normalizer {
        &report.lmod
    } else {
        &report.clmod
    }
    .as_ref()
    .ok_or(Error::Capacity {
        what: "subgroup index for presentations",
        size: report.index_mod_lmod() as usize,
        max: super::analysis::MAX_PRESENTATION_INDEX,
    })?;
    let q = &sub.simplified;
    let n = report.gamma.n();
    let k = report.gamma.k();
    let names = lift_names(q.generators().len());
    let mut conj = Vec::with_capacity(names.len());
    for (name, gen) in names.iter().zip(q.generators()) {
        let word = sub
            .definition(gen)
            .ok_or_else(|| Error::Inconsistent(format!("no definition for {gen}")))?;
        let sigma = evaluate_half_twists(word, k);
        let ell = stabilizing_unit(&report.gamma, &sigma)
            .ok_or_else(|| Error::Inconsistent(format!("{gen} does not lift")))?;
        if !normalizer && ell != 1 {
            return Err(Error::Inconsistent(format!(
                "{gen} lies in CLMod but inverts F"
            )));
        }
        conj.push((name.clone(), gen.clone(), signed(ell, n)));
    }
    let free = q.relators().is_empty() && !q.is_symbolic();
    let (evaluations, provenance) = match exponents {
        Some(e) => {
            if e.len() != q.relators().len() {
                return Err(Error::MissingLiftData(format!(
                    "{} exponents for {} relators",
                    e.len(),
                    q.relators().len()
                )));
            }
            (
                e.iter()
                    .map(|&x| Evaluation::Word(Word::power_of(0, x)))
                    .collect(),
                Provenance::UserSupplied,
            )
        }
        None => (
            (1..=q.relators().len())
                .map(|i| Evaluation::Symbolic {
                    base: 0,
                    symbol: format!("e_{i}"),
                })
                .collect(),
            if free {
                Provenance::BuiltIn
            } else {
                Provenance::Symbolic
            },
        ),
    };
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let exps: Vec<i64> = conj.iter().map(|c| c.2).collect();
    let data = LiftData::cyclic_kernel(&name_refs, &exps, evaluations);
    Ok(NormalizerSpec {
        presentation: extension_presentation(&kernel(n), q, &data)?,
        conjugation: conj,
        provenance,
        descriptor: None,
        asserted: false,
    })
}

fn cyclic_quotient(m: i64) -> Presentation {
    Presentation::new(vec!["g".into()], vec![Word::power_of(0, m)]).expect("one generator")
}

fn extension(
    n: u64,
    q: &Presentation,
    lifts: &[(&str, &str, i64)],
    evaluations: Vec<Evaluation>,
    descriptor: Option<GroupDescriptor>,
    asserted: bool,
) -> Result<NormalizerSpec> {
    let names: Vec<&str> = lifts.iter().map(|l| l.0).collect();
    let exps: Vec<i64> = lifts.iter().map(|l| l.2).collect();
    let data = LiftData::cyclic_kernel(&names, &exps, evaluations);
    Ok(NormalizerSpec {
        presentation: extension_presentation(&kernel(n), q, &data)?,
        conjugation: lifts
            .iter()
            .map(|&(g, s, e)| (g.into(), s.into(), e))
            .collect(),
        provenance: Provenance::BuiltIn,
        descriptor,
        asserted,
    })
}

fn irreducible_built_in(
    report: &AnalysisReport,
) -> Result<Option<(NormalizerSpec, NormalizerSpec)>> {
    let Some(c) = &report.classification else {
        return Ok(None);
    };
    let n = report.gamma.n();
    let trivial = Presentation::new(vec![], vec![])?;
    let centre = extension(
        n,
        &trivial,
        &[],
        vec![],
        Some(GroupDescriptor::Cyclic { n }),
        false,
    )?;
    let ell = c.ell.unwrap_or(1);
    if c.case != IrreducibleCase::III && !report.stab.units.contains(&ell) {
        return Err(Error::Inconsistent(format!("{ell} is not in Z_n^×(Γ)")));
    }
    let id = || vec![Evaluation::Word(Word::identity())];
    Ok(Some(match c.case {
        IrreducibleCase::I => (
            extension(
                n,
                &cyclic_quotient(3),
                &[("G", "g", signed(ell, n))],
                id(),
                Some(c.normalizer),
                false,
            )?,
            centre,
        ),
        IrreducibleCase::IIa => {
            let both = extension(
                n,
                &cyclic_quotient(2),
                &[("G", "g", 1)],
                id(),
                Some(c.normalizer),
                true,
            )?;
            (both.clone(), both)
        }
        IrreducibleCase::IIb => (
            extension(
                n,
                &cyclic_quotient(2),
                &[("G", "g", signed(ell, n))],
                id(),
                Some(c.normalizer),
                false,
            )?,
            centre,
        ),
        IrreducibleCase::III => {
            let mut n_spec = centre.clone();
            n_spec.descriptor = Some(c.normalizer);
            (n_spec, centre)
        }
    }))
}

/// `(2g+2, 0; (1,2), (1,2), (1,g+1), (−1,g+1))` for even `g ≥ 2`.
pub fn doubled_corollary_dataset(g: u64) -> Result<DataSet> {
    if g < 2 || !g.is_multiple_of(2) {
        return Err(Error::Malformed(format!(
            "genus {g} must be even and at least 2"
        )));
    }
    let n = 2 * g + 2;
    DataSet::new(
        n,
        0,
        &[(1, 2), (1, 2), (1, g as i64 + 1), (-1, g as i64 + 1)],
    )
}

/// LMod for the doubled family: case (i) over `σ1, a13, σ3`, case (ii)
/// over `a12, a13, δ = σ1⁻¹σ3`.
pub fn doubled_lmod_presentation(case: DoubledCase) -> Presentation {
    match case {
        DoubledCase::OrderTwo => Presentation::from_named(
            &["s1", "a13", "s3"],
            &[
                &[("s1", 2), ("s3", -2)],
                &[("s1", 1), ("s3", 1), ("s1", -1), ("s3", -1)],
                &[("s1", 1), ("a13", 1), ("s1", 1), ("a13", 1)],
                &[("s3", 1), ("a13", 1), ("s3", 1), ("a13", 1)],
            ],
        ),
        DoubledCase::NoOrderTwo => Presentation::from_named(
            &["a12", "a13", "d"],
            &[
                &[("d", 2)],
                &[("a12", 1), ("d", 1), ("a12", -1), ("d", -1)],
                &[("a13", 1), ("d", 1), ("a13", -1), ("d", -1)],
            ],
        ),
    }
    .expect("well-formed")
}

/// CLMod for the doubled family: `⟨σ1, a13 | (σ1 a13)^2⟩` in case (i), the
/// free group `PMod(S_{0,4}) = ⟨a12, a13⟩` in case (ii).
pub fn doubled_clmod_presentation(case: DoubledCase) -> Presentation {
    match case {
        DoubledCase::OrderTwo => Presentation::from_named(
            &["s1", "a13"],
            &[&[("s1", 1), ("a13", 1), ("s1", 1), ("a13", 1)]],
        ),
        DoubledCase::NoOrderTwo => Presentation::from_named(&["a12", "a13"], &[]),
    }
    .expect("well-formed")
}

fn doubled_built_in(report: &AnalysisReport) -> Result<Option<(NormalizerSpec, NormalizerSpec)>> {
    let g = report.genus as u64;
    if !g.is_multiple_of(2) || report.dataset != doubled_corollary_dataset(g)? {
        return Ok(None);
    }
    if !report.families.contains(&FamilyTag::Doubled {
        case: DoubledCase::OrderTwo,
    }) {
        return Err(Error::Inconsistent(
            "order 2g+2 class is not tagged doubled".into(),
        ));
    }
    let n = 2 * g + 2;
    let q = doubled_lmod_presentation(DoubledCase::OrderTwo);
    let qc = doubled_clmod_presentation(DoubledCase::OrderTwo);
    for (sub, quotient) in [(&report.lmod, &q), (&report.clmod, &qc)] {
        if let Some(s) = sub {
            if s.abelianization != abelianization(quotient)? {
                return Err(Error::Inconsistent(format!(
                    "computed abelianization {} differs from {}",
                    s.abelianization,
                    abelianization(quotient)?
                )));
            }
        }
    }
    let units = [
        ("s1", Permutation::transposition(4, 1, 2)),
        ("a13", Permutation::identity(4)),
        ("s3", Permutation::transposition(4, 3, 4)),
    ];
    let mut exps = Vec::new();
    for (name, sigma) in &units {
        let ell = stabilizing_unit(&report.gamma, sigma)
            .ok_or_else(|| Error::Inconsistent(format!("{name} does not lift")))?;
        exps.push(signed(ell, n));
    }
    let f = |e: u64| Evaluation::Word(Word::power_of(0, e as i64));
    let normalizer = extension(
        n,
        &q,
        &[
            ("G1", "s1", exps[0]),
            ("G2", "a13", exps[1]),
            ("G3", "s3", exps[2]),
        ],
        vec![f(0), f(0), f(g + 2), f(g + 1)],
        None,
        false,
    )?;
    let centralizer = extension(
        n,
        &qc,
        &[("G1", "s1", exps[0]), ("G2", "a13", exps[1])],
        vec![f(g + 2)],
        None,
        false,
    )?;
    Ok(Some((normalizer, centralizer)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::Abelianization;
    use crate::liftable::analyze;

    fn report(s: &str) -> AnalysisReport {
        analyze(&s.parse().unwrap()).unwrap()
    }

    fn relators(p: &Presentation, rels: &[&[(&str, i64)]]) -> Presentation {
        let names: Vec<&str> = p.generators().iter().map(String::as_str).collect();
        Presentation::from_named(&names, rels).unwrap()
    }

    #[test]
    fn corollary_genus_two() {
        let (n, c) =
            normalizer_centralizer(&report("(6,0;(1,2),(1,2),(1,3),(2,3))"), None).unwrap();
        let expected = relators(
            &n.presentation,
            &[
                &[("F", 6)],
                &[("G1", 1), ("F", 1), ("G1", -1), ("F", -1)],
                &[("G2", 1), ("F", 1), ("G2", -1), ("F", -1)],
                &[("G1", 1), ("G3", 1), ("G1", -1), ("G3", -1)],
                &[("G1", 1), ("G2", 1), ("G1", 1), ("G2", 1), ("F", -4)],
                &[("G3", 1), ("F", 1), ("G3", -1), ("F", 1)],
                &[("G1", 2), ("G3", -2)],
                &[("G3", 1), ("G2", 1), ("G3", 1), ("G2", 1), ("F", -3)],
            ],
        );
        assert!(
            n.presentation.same_relators(&expected),
            "{}",
            n.presentation
        );
        assert_eq!(n.provenance, Provenance::BuiltIn);
        let expected_c = relators(
            &c.presentation,
            &[
                &[("F", 6)],
                &[("G1", 1), ("F", 1), ("G1", -1), ("F", -1)],
                &[("G2", 1), ("F", 1), ("G2", -1), ("F", -1)],
                &[("G1", 1), ("G2", 1), ("G1", 1), ("G2", 1), ("F", -4)],
            ],
        );
        assert!(
            c.presentation.same_relators(&expected_c),
            "{}",
            c.presentation
        );
    }

    #[test]
    fn free_centralizer_is_exact() {
        let r = report("(10,0;(1,5),(4,5),(1,10),(9,10))");
        assert_eq!(
            r.clmod.as_ref().unwrap().abelianization,
            Abelianization::new(2, &[])
        );
        let (n, c) = normalizer_centralizer(&r, None).unwrap();
        assert_eq!(
            c.presentation.render(),
            "<F, G1, G2 | F^10 = 1, G1*F*G1^-1*F^-1 = 1, G2*F*G2^-1*F^-1 = 1>"
        );
        assert_eq!(c.provenance, Provenance::BuiltIn);
        assert_eq!(n.provenance, Provenance::Symbolic);
        assert!(normalizer_centralizer_exact(&r, None).is_err());
        let lifts = UserLifts {
            normalizer: vec![0; n.presentation.symbolic().len()],
            centralizer: vec![],
        };
        let (n2, _) = normalizer_centralizer_exact(&r, Some(&lifts)).unwrap();
        assert_eq!(n2.provenance, Provenance::UserSupplied);
        let bad = UserLifts {
            normalizer: vec![0; n.presentation.symbolic().len() + 1],
            centralizer: vec![],
        };
        assert!(matches!(
            normalizer_centralizer(&r, Some(&bad)),
            Err(Error::MissingLiftData(_))
        ));
    }

    #[test]
    fn irreducible_presentations() {
        let (n, c) = normalizer_centralizer(&report("(7,0;(5,7),(1,7),(1,7))"), None).unwrap();
        assert_eq!(
            n.presentation.render(),
            "<F, G | F^7 = 1, G^2 = 1, G*F*G^-1*F^-1 = 1>"
        );
        assert!(n.asserted && c.asserted);
        assert_eq!(
            abelianization(&n.presentation).unwrap(),
            Abelianization::new(0, &[14])
        );

        let (n, c) = normalizer_centralizer(&report("(7,0;(1,7),(2,7),(4,7))"), None).unwrap();
        assert_eq!(n.conjugation[0].2.rem_euclid(7).pow(3) % 7, 1);
        assert_eq!(
            abelianization(&n.presentation).unwrap(),
            Abelianization::new(0, &[3])
        );
        assert_eq!(c.presentation.render(), "<F | F^7 = 1>");

        let (n, _) = normalizer_centralizer(&report("(8,0;(1,4),(1,8),(5,8))"), None).unwrap();
        assert_eq!(
            n.presentation.render(),
            "<F, G | F^8 = 1, G^2 = 1, G*F*G^-1*F^3 = 1>"
        );
    }

    #[test]
    fn doubled_quotients() {
        for (case, ab) in [
            (DoubledCase::OrderTwo, Abelianization::new(1, &[2, 2])),
            (DoubledCase::NoOrderTwo, Abelianization::new(2, &[2])),
        ] {
            assert_eq!(
                abelianization(&doubled_lmod_presentation(case)).unwrap(),
                ab
            );
        }
        assert!(doubled_corollary_dataset(3).is_err());
        assert_eq!(
            doubled_corollary_dataset(4).unwrap().to_string(),
            "(10,0;(1,2),(1,2),(1,5),(4,5))"
        );
    }
}
