use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::word::Word;
use crate::arith_perm::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

/// `word = base^{symbol}` with an undetermined exponent `symbol`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicRelation {
    pub word: Word,
    pub base: usize,
    pub symbol: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    symbolic: Vec<SymbolicRelation>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        Self::with_symbolic(generators, relators, Vec::new())
    }

    pub fn with_symbolic(
        generators: Vec<String>,
        relators: Vec<Word>,
        symbolic: Vec<SymbolicRelation>,
    ) -> Result<Self> {
        let distinct: BTreeSet<&String> = generators.iter().collect();
        if distinct.len() != generators.len() {
            return Err(Error::Malformed("generator names must be distinct".into()));
        }
        let m = generators.len();
        let out_of_range = relators
            .iter()
            .chain(symbolic.iter().map(|s| &s.word))
            .any(|w| w.max_generator().is_some_and(|g| g >= m))
            || symbolic.iter().any(|s| s.base >= m);
        if out_of_range {
            return Err(Error::Malformed(
                "relator refers to an undeclared generator".into(),
            ));
        }
        Ok(Self {
            generators,
            relators,
            symbolic,
        })
    }

    /// Builds a presentation from named syllables, e.g. `[("a", 2), ("b", -1)]`.
    pub fn from_named(generators: &[&str], relators: &[&[(&str, i64)]]) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let words = relators
            .iter()
            .map(|r| named_word(&names, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, words)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn symbolic(&self) -> &[SymbolicRelation] {
        &self.symbolic
    }

    pub fn is_symbolic(&self) -> bool {
        !self.symbolic.is_empty()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Word from named syllables over this presentation's generators.
    pub fn word(&self, syllables: &[(&str, i64)]) -> Result<Word> {
        named_word(&self.generators, syllables)
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum::<usize>()
            + self.symbolic.iter().map(|s| s.word.len()).sum::<usize>()
    }

    /// Relators up to cyclic rotation and inversion, with generators named.
    pub fn relator_set(&self) -> BTreeSet<Vec<(String, i64)>> {
        self.relators
            .iter()
            .filter(|r| !r.cyclically_reduced().is_empty())
            .map(|r| {
                r.relator_key()
                    .syllables()
                    .into_iter()
                    .map(|(g, e)| (self.generators[g].clone(), e))
                    .collect()
            })
            .collect()
    }

    /// Same generator names (in any order) and same relator set.
    pub fn same_relators(&self, other: &Presentation) -> bool {
        let a: BTreeSet<&String> = self.generators.iter().collect();
        let b: BTreeSet<&String> = other.generators.iter().collect();
        a == b
            && !self.is_symbolic()
            && !other.is_symbolic()
            && self.relator_set() == other.relator_set()
    }

    /// Renames generators by position.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.generators.len() {
            return Err(Error::Malformed(
                "renaming must cover every generator".into(),
            ));
        }
        Self::with_symbolic(names, self.relators.clone(), self.symbolic.clone())
    }

    /// `<a, b | a^2 = 1, b = F^{e_1}>`; the trivial presentation is `<1>`.
    pub fn render(&self) -> String {
        if self.generators.is_empty() && self.relators.iter().all(Word::is_empty) {
            return "<1>".into();
        }
        let mut relations: Vec<String> = self
            .relators
            .iter()
            .map(|r| format!("{} = 1", r.render(&self.generators)))
            .collect();
        relations.extend(self.symbolic.iter().map(|s| {
            format!(
                "{} = {}^{{{}}}",
                s.word.render(&self.generators),
                self.generators[s.base],
                s.symbol
            )
        }));
        format!(
            "<{} | {}>",
            self.generators.join(", "),
            relations.join(", ")
        )
    }

    pub fn to_json(&self) -> Value {
        let letters = |w: &Word| -> Value {
            w.letters()
                .iter()
                .map(|l| json!([self.generators[l.gen], l.exponent()]))
                .collect()
        };
        json!({
            "generators": self.generators,
            "relators": self.relators.iter().map(|r| json!({
                "text": r.render(&self.generators),
                "letters": letters(r),
            })).collect::<Vec<_>>(),
            "symbolic": self.symbolic.iter().map(|s| json!({
                "text": s.word.render(&self.generators),
                "letters": letters(&s.word),
                "base": self.generators[s.base],
                "exponent": s.symbol,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn named_word(names: &[String], syllables: &[(&str, i64)]) -> Result<Word> {
    let mut parts = Vec::with_capacity(syllables.len());
    for &(name, e) in syllables {
        let g = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Malformed(format!("unknown generator {name}")))?;
        parts.push((g, e));
    }
    Ok(Word::from_syllables(&parts))
}

/// `Z^r ⊕ Z_{d_1} ⊕ …` with `d_1 | d_2 | …`, all `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Abelianization {
    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        Self {
            free_rank,
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// Smith normal form of the exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> Result<Abelianization> {
    if p.is_symbolic() {
        return Err(Error::Symbolic(
            "relations with undetermined exponents have no fixed abelianization".into(),
        ));
    }
    let m = p.generators.len();
    let mut matrix = IntMatrix::zeros(p.relators.len(), m);
    for (i, r) in p.relators.iter().enumerate() {
        for l in r.letters() {
            matrix.set(i, l.gen, matrix.get(i, l.gen) + l.exponent());
        }
    }
    let snf = smith_normal_form(&matrix);
    Ok(Abelianization {
        free_rank: snf.free_rank,
        torsion: snf.factors.into_iter().filter(|d| !d.is_one()).collect(),
    })
}
