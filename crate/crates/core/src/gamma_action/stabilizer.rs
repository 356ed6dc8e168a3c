use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::vector::GammaVector;
use crate::arith_perm::{
    all_permutations, factorial, perm_closure, units_mod, PermGroup, Permutation, Residue,
    MAX_GROUP_DEGREE,
};
use crate::error::{Error, Result};
use crate::fpgroups::{Letter, Word};

/// Largest `k` for which the stabilizer is found by exhaustive search.
pub const MAX_BRUTE_FORCE_DEGREE: usize = 10;

fn brute_force_guard(gamma: &GammaVector) -> Result<()> {
    if gamma.k() > MAX_BRUTE_FORCE_DEGREE {
        return Err(Error::Capacity {
            what: "exhaustive stabilizer degree",
            size: gamma.k(),
            max: MAX_BRUTE_FORCE_DEGREE,
        });
    }
    Ok(())
}

/// Calls `f(ℓ, σ)` for every `(ℓ, σ) ∈ Z_n^× × Σ_k` fixing `Γ`, in order of
/// `ℓ` then lexicographic `σ`.
pub fn for_each_stabilizer(
    gamma: &GammaVector,
    mut f: impl FnMut(u64, &Permutation),
) -> Result<()> {
    brute_force_guard(gamma)?;
    let k = gamma.k();
    for ell in units_mod(gamma.n()) {
        let scaled = gamma.scaled(ell.value());
        for sigma in all_permutations(k) {
            // (ℓ,σ)Γ = Γ  ⟺  ℓ c_j = c_{σ(j)} for all j
            if (0..k).all(|j| scaled[j] == gamma.get(sigma.apply(j))) {
                f(ell.value(), &sigma);
            }
        }
    }
    Ok(())
}

/// `Stab(Γ) ≤ Z_n^× × Σ_k` by exhaustive search.
pub fn stabilizer_bruteforce(gamma: &GammaVector) -> Result<Vec<(Residue, Permutation)>> {
    let mut out = Vec::new();
    for_each_stabilizer(gamma, |ell, sigma| {
        out.push((Residue::from_u64(ell, gamma.n()), *sigma))
    })?;
    let set: HashSet<(u64, Permutation)> = out.iter().map(|(l, s)| (l.value(), *s)).collect();
    let id = Permutation::identity(gamma.k());
    let closed = set.contains(&(1 % gamma.n(), id))
        && out.iter().all(|(l, s)| {
            let inv = l.inverse().expect("stabilizer units are units");
            set.contains(&(inv.value(), s.inverse()))
        })
        && (out.len() > 720
            || out.iter().all(|(l1, s1)| {
                out.iter()
                    .all(|(l2, s2)| set.contains(&((*l1 * *l2).value(), *s1 * *s2)))
            }));
    if !closed {
        return Err(Error::Inconsistent("stabilizer is not a subgroup".into()));
    }
    Ok(out)
}

/// A chosen `δ_ℓ` with `ψ(δ_ℓ) = σ_ℓ` and `(ℓ, σ_ℓ)Γ = Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CEntry {
    pub ell: u64,
    pub sigma: Permutation,
    /// Word in the half-twists `s1, …, s{k-1}`.
    pub word: Word,
}

#[derive(Debug, Clone)]
pub struct StabilizerReport {
    pub n: u64,
    pub c: Vec<u64>,
    /// `ψ(LMod)`.
    pub h1: PermGroup,
    /// `ψ(CLMod)`.
    pub h2: PermGroup,
    /// `Z_n^×(Γ)`, ascending.
    pub units: Vec<u64>,
    /// 1-based pairs `(i, j)`, `i < j`, with `c_i = c_j`.
    pub b: Vec<(usize, usize)>,
    /// One entry per unit in `units`; `ℓ = 1` carries the empty word.
    pub c_words: Vec<CEntry>,
    pub index_mod_lmod: u128,
    pub index_n_c: usize,
}

/// Names `s1, …, s{k-1}` of the half-twist generators.
pub fn half_twist_names(k: usize) -> Vec<String> {
    (1..k).map(|i| format!("s{i}")).collect()
}

#[derive(Serialize)]
struct StabilizerJson<'a> {
    n: u64,
    c: &'a [u64],
    #[serde(rename = "H1_order")]
    h1_order: u64,
    #[serde(rename = "H2_order")]
    h2_order: u64,
    units: &'a [u64],
    #[serde(rename = "B")]
    b: Vec<[usize; 2]>,
    #[serde(rename = "C")]
    c_words: BTreeMap<u64, String>,
    index_mod_lmod: u64,
    index_n_c: usize,
}

impl StabilizerReport {
    pub fn k(&self) -> usize {
        self.c.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let names = half_twist_names(self.k());
        let j = StabilizerJson {
            n: self.n,
            c: &self.c,
            h1_order: self.h1.order() as u64,
            h2_order: self.h2.order() as u64,
            units: &self.units,
            b: self.b.iter().map(|&(i, j)| [i, j]).collect(),
            c_words: self
                .c_words
                .iter()
                .map(|e| {
                    (
                        e.ell,
                        if e.word.is_empty() {
                            String::new()
                        } else {
                            e.word.render(&names)
                        },
                    )
                })
                .collect(),
            index_mod_lmod: self.index_mod_lmod as u64,
            index_n_c: self.index_n_c,
        };
        serde_json::to_value(j).expect("report serializes")
    }
}

/// `ψ(LMod)` and `ψ(CLMod)` from the generating sets `B` and `C`.
pub fn liftable_images(gamma: &GammaVector) -> Result<StabilizerReport> {
    let k = gamma.k();
    if k > MAX_GROUP_DEGREE {
        return Err(Error::Capacity {
            what: "number of branch points",
            size: k,
            max: MAX_GROUP_DEGREE,
        });
    }
    let c = gamma.values();
    let mut b = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if c[i] == c[j] {
                b.push((i + 1, j + 1));
            }
        }
    }
    let sorted = gamma.sorted();
    let units: Vec<u64> = units_mod(gamma.n())
        .into_iter()
        .map(Residue::value)
        .filter(|&ell| {
            let mut s = gamma.scaled(ell);
            s.sort_unstable();
            s == sorted
        })
        .collect();
    let c_words: Vec<CEntry> = units
        .iter()
        .map(|&ell| {
            let sigma = delta(gamma, ell);
            CEntry {
                ell,
                sigma,
                word: half_twist_word(&sigma),
            }
        })
        .collect();

    let b_perms: Vec<Permutation> = b
        .iter()
        .map(|&(i, j)| Permutation::transposition(k, i, j))
        .collect();
    let h2 = perm_closure(&b_perms, k)?;
    let mut h1_gens = b_perms;
    h1_gens.extend(c_words.iter().map(|e| e.sigma).filter(|s| !s.is_identity()));
    let h1 = perm_closure(&h1_gens, k)?;
    if h1.order() != h2.order() * units.len() as u128 {
        return Err(Error::Inconsistent(format!(
            "|H1| = {} but |H2|·|Z_n^×(Γ)| = {}·{}",
            h1.order(),
            h2.order(),
            units.len()
        )));
    }
    Ok(StabilizerReport {
        n: gamma.n(),
        c,
        index_mod_lmod: factorial(k) / h1.order(),
        index_n_c: units.len(),
        h1,
        h2,
        units,
        b,
        c_words,
    })
}

/// Greedy `σ_ℓ`: for `i` ascending, the first unmatched `j` with
/// `ℓ c_j = c_i` is sent to `i`.
fn delta(gamma: &GammaVector, ell: u64) -> Permutation {
    let k = gamma.k();
    let scaled = gamma.scaled(ell);
    let mut used = vec![false; k];
    let mut images = vec![0; k];
    for i in 0..k {
        let j = (0..k)
            .find(|&j| !used[j] && scaled[j] == gamma.get(i))
            .expect("ℓ preserves the multiset of entries");
        used[j] = true;
        images[j] = i;
    }
    Permutation::from_images(&images).expect("matching is a bijection")
}

/// Half-twist word for `(1, j)`: `s1 ⋯ s_{j−2} s_{j−1} s_{j−2}⁻¹ ⋯ s1⁻¹`.
fn one_j_word(j: usize) -> Word {
    let up: Vec<Letter> = (0..j - 2).map(|i| Letter::new(i, false)).collect();
    let down = up.iter().rev().map(|l| l.inverse());
    Word::new(
        up.iter()
            .copied()
            .chain([Letter::new(j - 2, false)])
            .chain(down),
    )
}

/// Word in `s1, …, s{k-1}` mapping to `sigma` under `s_i ↦ (i, i+1)`.
///
/// Each cycle `(a_1 … a_s)` is `(a_1 a_s) ⋯ (a_1 a_2)`, and each `(a b)`
/// with `a, b ≠ 1` is `(1 a)(1 b)(1 a)`.
pub fn half_twist_word(sigma: &Permutation) -> Word {
    let mut w = Word::identity();
    for cycle in sigma.cycles() {
        let pts: Vec<usize> = cycle.iter().map(|p| p + 1).collect();
        for &b in pts[1..].iter().rev() {
            let a = pts[0];
            let t = if a == 1 {
                one_j_word(b)
            } else {
                let x = one_j_word(a);
                x.concat(&one_j_word(b)).concat(&x)
            };
            w = w.concat(&t);
        }
    }
    w
}

/// `ψ` on half-twist words.
pub fn evaluate_half_twists(word: &Word, k: usize) -> Permutation {
    word.letters()
        .iter()
        .fold(Permutation::identity(k), |acc, l| {
            // half-twists map to involutions, so inverses need no care
            acc * Permutation::transposition(k, l.gen + 1, l.gen + 2)
        })
}

/// The unit `ℓ` with `(ℓ, σ)Γ = Γ`, if any; unique because `Γ` generates.
pub fn stabilizing_unit(gamma: &GammaVector, sigma: &Permutation) -> Option<u64> {
    units_mod(gamma.n())
        .into_iter()
        .map(Residue::value)
        .find(|&ell| {
            let scaled = gamma.scaled(ell);
            (0..gamma.k()).all(|j| scaled[j] == gamma.get(sigma.apply(j)))
        })
}

/// Compares the report against exhaustive search: every stabilizing `σ`
/// lies in `H1` (in `H2` when `ℓ = 1`) and the counts match the orders.
pub fn cross_check_bruteforce(gamma: &GammaVector, report: &StabilizerReport) -> Result<()> {
    let mut total: u128 = 0;
    let mut central: u128 = 0;
    let mut outside = None;
    for_each_stabilizer(gamma, |ell, sigma| {
        total += 1;
        let in_group = if ell == 1 % gamma.n() {
            central += 1;
            report.h2.contains(sigma)
        } else {
            report.h1.contains(sigma)
        };
        if !in_group && outside.is_none() {
            outside = Some((ell, *sigma));
        }
    })?;
    if let Some((ell, sigma)) = outside {
        return Err(Error::Inconsistent(format!(
            "({ell}, {sigma}) stabilizes Γ but is missing from the generated groups"
        )));
    }
    if total != report.h1.order() || central != report.h2.order() {
        return Err(Error::Inconsistent(format!(
            "exhaustive search gives |H1| = {total}, |H2| = {central}; generators give {}, {}",
            report.h1.order(),
            report.h2.order()
        )));
    }
    Ok(())
}

/// `Mod(S_{0,k}) = LMod`: all entries equal and `k ≡ 0 (mod n)`.
pub fn mod_equals_lmod(gamma: &GammaVector) -> bool {
    let c = gamma.values();
    c.iter().all(|&x| x == c[0]) && (gamma.k() as u64).is_multiple_of(gamma.n())
}
