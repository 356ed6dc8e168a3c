//! Tietze simplification.

use std::collections::HashSet;

use super::presentation::{Presentation, SymbolicRelation};
use super::word::Word;

/// Limits on substitution growth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TietzeBudget {
    /// Maximum number of generator eliminations.
    pub max_eliminations: usize,
    /// A substitution is rejected if it creates a relator longer than this,
    /// unless it does not lengthen anything.
    pub max_relator_length: usize,
    /// A substitution is rejected if the total relator length would exceed
    /// `max(current total, max_total_length)`.
    pub max_total_length: usize,
}

impl Default for TietzeBudget {
    fn default() -> Self {
        Self {
            max_eliminations: 100_000,
            max_relator_length: 64,
            max_total_length: 20_000,
        }
    }
}

/// Repeatedly: cyclically reduce relators, drop trivial and duplicate ones
/// (up to rotation and inversion), then eliminate a generator that occurs
/// exactly once in some relator, preferring the shortest such relator and
/// then the last such generator. Bases of symbolic relations are never eliminated.
pub fn tietze_simplify(p: &Presentation, budget: TietzeBudget) -> Presentation {
    let mut names: Vec<String> = p.generators().to_vec();
    let mut relators: Vec<Word> = p.relators().to_vec();
    let mut symbolic: Vec<SymbolicRelation> = p.symbolic().to_vec();
    let protected: HashSet<usize> = symbolic.iter().map(|s| s.base).collect();
    let mut alive: Vec<bool> = vec![true; names.len()];

    let mut eliminations = 0;
    loop {
        relators = dedup(relators);
        if eliminations >= budget.max_eliminations {
            break;
        }
        let Some((r_idx, gen, value)) = pick_elimination(&relators, &protected, &budget, &symbolic)
        else {
            break;
        };
        let sub = |g: usize| {
            if g == gen {
                value.clone()
            } else {
                Word::gen(g)
            }
        };
        let mut next = Vec::with_capacity(relators.len() - 1);
        for (i, r) in relators.iter().enumerate() {
            if i != r_idx {
                next.push(r.substitute(sub));
            }
        }
        relators = next;
        for s in &mut symbolic {
            s.word = s.word.substitute(sub);
        }
        alive[gen] = false;
        eliminations += 1;
    }

    // renumber surviving generators
    let mut new_index = vec![usize::MAX; names.len()];
    let mut kept = Vec::new();
    for (g, name) in names.drain(..).enumerate() {
        if alive[g] {
            new_index[g] = kept.len();
            kept.push(name);
        }
    }
    let relators = relators
        .iter()
        .map(|r| r.relabel(|g| new_index[g]))
        .collect();
    let symbolic = symbolic
        .into_iter()
        .map(|s| SymbolicRelation {
            word: s.word.relabel(|g| new_index[g]),
            base: new_index[s.base],
            symbol: s.symbol,
        })
        .collect();
    Presentation::with_symbolic(kept, relators, symbolic).expect("renumbering preserves validity")
}

fn dedup(relators: Vec<Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in relators {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        if seen.insert(r.relator_key()) {
            out.push(r);
        }
    }
    out
}

/// Relator index, generator, and the word it is replaced by.
fn pick_elimination(
    relators: &[Word],
    protected: &HashSet<usize>,
    budget: &TietzeBudget,
    symbolic: &[SymbolicRelation],
) -> Option<(usize, usize, Word)> {
    let mut order: Vec<usize> = (0..relators.len()).collect();
    order.sort_by_key(|&i| (relators[i].len(), i));
    let total: usize = relators.iter().map(Word::len).sum::<usize>()
        + symbolic.iter().map(|s| s.word.len()).sum::<usize>();
    for &i in &order {
        let r = &relators[i];
        // later generators go first, so earlier names survive
        let mut candidates: Vec<(usize, usize)> = r
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| !protected.contains(&l.gen) && r.occurrences(l.gen) == 1)
            .map(|(pos, l)| (l.gen, pos))
            .collect();
        candidates.sort_unstable_by(|a, b| b.cmp(a));
        for (_, pos) in candidates {
            let l = r.letters()[pos];
            let value = solve(r, pos);
            let occurrences: usize = relators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, w)| w.occurrences(l.gen))
                .sum::<usize>()
                + symbolic
                    .iter()
                    .map(|s| s.word.occurrences(l.gen))
                    .sum::<usize>();
            let growth = occurrences * value.len();
            let shrink = occurrences + r.len();
            if growth <= shrink {
                return Some((i, l.gen, value));
            }
            let new_total = total + growth - shrink;
            let longest = relators
                .iter()
                .enumerate()
                .filter(|&(j, w)| j != i && w.occurrences(l.gen) > 0)
                .map(|(_, w)| w.len() + w.occurrences(l.gen) * (value.len().saturating_sub(1)))
                .max()
                .unwrap_or(0);
            if new_total <= total.max(budget.max_total_length)
                && longest <= budget.max_relator_length
            {
                return Some((i, l.gen, value));
            }
        }
    }
    None
}

/// For `r = u·x^ε·v` with `x` occurring once, the value of `x`.
fn solve(r: &Word, pos: usize) -> Word {
    let letters = r.letters();
    let u = Word::new(letters[..pos].iter().copied());
    let v = Word::new(letters[pos + 1..].iter().copied());
    // u x v = 1 gives x = u⁻¹ v⁻¹; u x⁻¹ v = 1 gives x = v u
    if letters[pos].inv {
        v.concat(&u)
    } else {
        u.inverse().concat(&v.inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::{abelianization, pmod_sphere_presentation, Abelianization};

    #[test]
    fn dead_generator_and_substitution() {
        let p = Presentation::from_named(&["a", "b"], &[&[("b", 1)]]).unwrap();
        assert_eq!(
            tietze_simplify(&p, TietzeBudget::default()).render(),
            "<a | >"
        );
        let p = Presentation::from_named(&["a", "b"], &[&[("a", 1), ("b", 1)]]).unwrap();
        assert_eq!(
            tietze_simplify(&p, TietzeBudget::default()).render(),
            "<a | >"
        );
    }

    #[test]
    fn pmod4_is_free_of_rank_two() {
        let p = tietze_simplify(
            &pmod_sphere_presentation(4).unwrap(),
            TietzeBudget::default(),
        );
        assert_eq!(p.generators().len(), 2);
        assert!(p.relators().is_empty());
        assert_eq!(abelianization(&p).unwrap(), Abelianization::new(2, &[]));
    }

    #[test]
    fn keeps_symbolic_bases() {
        let mut p = Presentation::from_named(&["F", "G"], &[&[("F", 1), ("G", -1)]]).unwrap();
        let w = p.word(&[("G", 2)]).unwrap();
        p = Presentation::with_symbolic(
            p.generators().to_vec(),
            p.relators().to_vec(),
            vec![SymbolicRelation {
                word: w,
                base: 0,
                symbol: "e_1".into(),
            }],
        )
        .unwrap();
        let s = tietze_simplify(&p, TietzeBudget::default());
        assert_eq!(s.render(), "<F | F^2 = F^{e_1}>");
    }
}
