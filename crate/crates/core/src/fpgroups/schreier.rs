//! Reidemeister-Schreier rewriting for preimages `ψ⁻¹(H)` of permutation
//! subgroups.

use super::presentation::Presentation;
use super::word::{Letter, Word};
use crate::arith_perm::{coset_table, perm_closure, CosetTable, PermGroup, Permutation};
use crate::error::{Error, Result};

/// Output of [`reidemeister_schreier_detailed`].
#[derive(Debug, Clone)]
pub struct SchreierRewriting {
    pub presentation: Presentation,
    /// `[G : ψ⁻¹(H)]`.
    pub index: usize,
    /// For each output generator `x_{c,s}`, the word `t_c s t_{cs}⁻¹` in the
    /// generators of the input presentation.
    pub definitions: Vec<Word>,
    pub cosets: CosetTable,
}

/// Presentation of `ψ⁻¹(H)` with generators `x_{coset}_{gen}`.
pub fn reidemeister_schreier(
    p: &Presentation,
    psi: &[Permutation],
    h: &PermGroup,
) -> Result<Presentation> {
    Ok(reidemeister_schreier_detailed(p, psi, h)?.presentation)
}

/// Cosets are numbered breadth-first from `H` with generators in declared
/// order; the BFS tree is the Schreier transversal, and its edges are the
/// eliminated (trivial) Schreier generators.
pub fn reidemeister_schreier_detailed(
    p: &Presentation,
    psi: &[Permutation],
    h: &PermGroup,
) -> Result<SchreierRewriting> {
    let m = p.generators().len();
    if psi.len() != m {
        return Err(Error::Malformed(format!(
            "ψ assigns {} images to {m} generators",
            psi.len()
        )));
    }
    let image = perm_closure(psi, h.degree())?;
    if !h.is_subgroup_of(&image) {
        return Err(Error::NotASubgroup);
    }
    let cosets = coset_table(h, psi)?;
    let index = cosets.len();

    let mut numbering = vec![vec![None; m]; index];
    let mut names = Vec::new();
    let mut definitions = Vec::new();
    let transversal: Vec<Word> = (0..index)
        .map(|c| {
            Word::new(
                cosets
                    .rep_word(c)
                    .into_iter()
                    .map(|s| Letter::new(s, false)),
            )
        })
        .collect();
    for c in 0..index {
        for s in 0..m {
            let d = cosets.table[c][s];
            if cosets.parent[d] == Some((c, s)) {
                continue;
            }
            numbering[c][s] = Some(names.len());
            names.push(format!("x_{c}_{}", p.generators()[s]));
            definitions.push(
                transversal[c]
                    .concat(&Word::gen(s))
                    .concat(&transversal[d].inverse()),
            );
        }
    }

    let mut relators = Vec::with_capacity(index * p.relators().len());
    for c in 0..index {
        for r in p.relators() {
            relators.push(rewrite(r, c, &cosets, &numbering)?);
        }
    }
    let presentation = Presentation::new(names, relators)?;
    Ok(SchreierRewriting {
        presentation,
        index,
        definitions,
        cosets,
    })
}

/// Rewrites `t_c r t_c⁻¹` in Schreier generators.
fn rewrite(
    r: &Word,
    start: usize,
    cosets: &CosetTable,
    numbering: &[Vec<Option<usize>>],
) -> Result<Word> {
    let mut cur = start;
    let mut out = Vec::new();
    for l in r.letters() {
        if l.inv {
            let prev = cosets.inverse_step(cur, l.gen);
            if let Some(x) = numbering[prev][l.gen] {
                out.push(Letter::new(x, true));
            }
            cur = prev;
        } else {
            if let Some(x) = numbering[cur][l.gen] {
                out.push(Letter::new(x, false));
            }
            cur = cosets.table[cur][l.gen];
        }
    }
    if cur != start {
        return Err(Error::Inconsistent(
            "a relator does not map to the identity under ψ".into(),
        ));
    }
    Ok(Word::new(out))
}
