//! Presentations of extensions `1 → N → G → Q → 1` from presentations of
//! `N` and `Q` and lift data.

use std::collections::BTreeSet;

use super::presentation::{Presentation, SymbolicRelation};
use super::word::Word;
use crate::error::{Error, Result};

/// A lift `s'` of a quotient generator `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub name: String,
    /// `s_a` for each kernel generator `a`, in kernel generator order, with
    /// `s' a s'⁻¹ = s_a`.
    pub conjugation: Vec<Word>,
}

/// What a lifted quotient relator `r'` evaluates to inside `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    /// A word in the kernel generators.
    Word(Word),
    /// `base^{symbol}` with the exponent left undetermined.
    Symbolic { base: usize, symbol: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftData {
    /// One lift per quotient generator, in quotient generator order.
    pub lifts: Vec<Lift>,
    /// One evaluation per quotient relator, in quotient relator order.
    pub evaluations: Vec<Evaluation>,
}

impl LiftData {
    /// Lift data for a cyclic kernel `⟨F⟩`: lift `i` conjugates `F` to
    /// `F^{exponents[i]}`.
    pub fn cyclic_kernel(names: &[&str], exponents: &[i64], evaluations: Vec<Evaluation>) -> Self {
        Self {
            lifts: names
                .iter()
                .zip(exponents)
                .map(|(name, &e)| Lift {
                    name: name.to_string(),
                    conjugation: vec![Word::power_of(0, e)],
                })
                .collect(),
            evaluations,
        }
    }
}

/// Generators: kernel names then lift names. Relators: the kernel relators,
/// each lifted quotient relator times the inverse of its evaluation, and
/// `s' a s'⁻¹ s_a⁻¹` for every lift and kernel generator. Symbolic
/// evaluations become symbolic relations `r' = base^{symbol}`.
pub fn extension_presentation(
    n: &Presentation,
    q: &Presentation,
    data: &LiftData,
) -> Result<Presentation> {
    let kn = n.generators().len();
    if data.lifts.len() != q.generators().len() {
        return Err(Error::MissingLiftData(format!(
            "{} lifts for {} quotient generators",
            data.lifts.len(),
            q.generators().len()
        )));
    }
    if data.evaluations.len() != q.relators().len() {
        return Err(Error::MissingLiftData(format!(
            "{} evaluations for {} quotient relators",
            data.evaluations.len(),
            q.relators().len()
        )));
    }
    if q.is_symbolic() {
        return Err(Error::Symbolic(
            "quotient presentation must be concrete".into(),
        ));
    }
    let kernel_names: BTreeSet<&String> = n.generators().iter().collect();
    if let Some(l) = data.lifts.iter().find(|l| kernel_names.contains(&l.name)) {
        return Err(Error::Malformed(format!(
            "lift name {} clashes with a kernel generator",
            l.name
        )));
    }
    let in_kernel = |w: &Word| w.max_generator().is_none_or(|g| g < kn);

    let mut names = n.generators().to_vec();
    names.extend(data.lifts.iter().map(|l| l.name.clone()));
    let mut relators = n.relators().to_vec();
    let mut symbolic = n.symbolic().to_vec();

    for (r, eval) in q.relators().iter().zip(&data.evaluations) {
        let lifted = r.relabel(|g| g + kn);
        match eval {
            Evaluation::Word(w) => {
                if !in_kernel(w) {
                    return Err(Error::Malformed("evaluation leaves the kernel".into()));
                }
                relators.push(lifted.concat(&w.inverse()));
            }
            Evaluation::Symbolic { base, symbol } => {
                if *base >= kn {
                    return Err(Error::Malformed(
                        "symbolic base must be a kernel generator".into(),
                    ));
                }
                symbolic.push(SymbolicRelation {
                    word: lifted,
                    base: *base,
                    symbol: symbol.clone(),
                });
            }
        }
    }
    for (i, lift) in data.lifts.iter().enumerate() {
        if lift.conjugation.len() != kn {
            return Err(Error::MissingLiftData(format!(
                "lift {} conjugates {} of {kn} kernel generators",
                lift.name,
                lift.conjugation.len()
            )));
        }
        let s = Word::gen(kn + i);
        for (a, s_a) in lift.conjugation.iter().enumerate() {
            if !in_kernel(s_a) {
                return Err(Error::Malformed(
                    "conjugation word leaves the kernel".into(),
                ));
            }
            relators.push(
                s.concat(&Word::gen(a))
                    .concat(&s.inverse())
                    .concat(&s_a.inverse()),
            );
        }
    }
    Presentation::with_symbolic(names, relators, symbolic)
}
