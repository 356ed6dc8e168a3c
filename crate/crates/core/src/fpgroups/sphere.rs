//! Presentations of `Mod(S_{0,k})` and `PMod(S_{0,k})`.

use std::collections::HashMap;

use super::presentation::Presentation;
use super::word::Word;
use crate::arith_perm::Permutation;
use crate::error::{Error, Result};

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::Malformed(format!(
            "sphere presentations need k ≥ 3 marked points, got {k}"
        )));
    }
    Ok(())
}

/// Half-twist generators `s1, …, s{k-1}` with relators, in order:
/// `[s_i, s_j]` for every ordered pair with `|i − j| > 1`, the braid
/// relators `s_i s_{i+1} s_i s_{i+1}⁻¹ s_i⁻¹ s_{i+1}⁻¹`,
/// `(s_1 ⋯ s_{k−1})^k`, and `s_1 ⋯ s_{k−1} s_{k−1} ⋯ s_1`.
pub fn mod_sphere_presentation(k: usize) -> Result<Presentation> {
    check_k(k)?;
    let m = k - 1;
    let names = (1..=m).map(|i| format!("s{i}")).collect();
    let mut relators = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i.abs_diff(j) > 1 {
                relators.push(Word::commutator(&Word::gen(i), &Word::gen(j)));
            }
        }
    }
    for i in 0..m - 1 {
        relators.push(Word::from_syllables(&[
            (i, 1),
            (i + 1, 1),
            (i, 1),
            (i + 1, -1),
            (i, -1),
            (i + 1, -1),
        ]));
    }
    let product = Word::new((0..m).map(|i| super::Letter::new(i, false)));
    relators.push(product.pow(k as i64));
    relators.push(product.concat(&Word::new(
        (0..m).rev().map(|i| super::Letter::new(i, false)),
    )));
    Presentation::new(names, relators)
}

/// `ψ(s_i) = (i, i+1)`.
pub fn half_twist_images(k: usize) -> Vec<Permutation> {
    (1..k)
        .map(|i| Permutation::transposition(k, i, i + 1))
        .collect()
}

/// Generators `a{i}_{j}`, `1 ≤ i < j < k`, with the five relation families
/// taken as listed: (i) `[a_pq, a_rs]`, (ii) `[a_ps, a_qr]`,
/// (iii) `[a_rs a_pr a_rs⁻¹, a_qs]` for `p < q < r < s`; (iv) the two
/// relators of `a_pr a_qr a_pq = a_qr a_pq a_pr = a_pq a_pr a_qr` for
/// `p < q < r`; (v) `(a_12 ⋯ a_1(k−1)) ⋯ (a_(k−2)(k−1))`.
pub fn pmod_sphere_presentation(k: usize) -> Result<Presentation> {
    check_k(k)?;
    let mut index = HashMap::new();
    let mut names = Vec::new();
    for i in 1..k {
        for j in i + 1..k {
            index.insert((i, j), names.len());
            names.push(format!("a{i}_{j}"));
        }
    }
    let a = |i: usize, j: usize| Word::gen(index[&(i, j)]);
    let mut relators = Vec::new();
    let quads = || {
        (1..k).flat_map(move |p| {
            (p + 1..k).flat_map(move |q| {
                (q + 1..k).flat_map(move |r| (r + 1..k).map(move |s| (p, q, r, s)))
            })
        })
    };
    for (p, q, r, s) in quads() {
        relators.push(Word::commutator(&a(p, q), &a(r, s)));
    }
    for (p, q, r, s) in quads() {
        relators.push(Word::commutator(&a(p, s), &a(q, r)));
    }
    for (p, q, r, s) in quads() {
        let conj = a(r, s).concat(&a(p, r)).concat(&a(r, s).inverse());
        relators.push(Word::commutator(&conj, &a(q, s)));
    }
    for p in 1..k {
        for q in p + 1..k {
            for r in q + 1..k {
                let x = a(p, r).concat(&a(q, r)).concat(&a(p, q));
                let y = a(q, r).concat(&a(p, q)).concat(&a(p, r));
                let z = a(p, q).concat(&a(p, r)).concat(&a(q, r));
                relators.push(x.concat(&y.inverse()));
                relators.push(y.concat(&z.inverse()));
            }
        }
    }
    let mut last = Word::identity();
    for i in 1..k - 1 {
        for j in i + 1..k {
            last = last.concat(&a(i, j));
        }
    }
    relators.push(last);
    Presentation::new(names, relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::{abelianization, Abelianization};

    #[test]
    fn mod_counts() {
        let p = mod_sphere_presentation(4).unwrap();
        assert_eq!(p.generators(), ["s1", "s2", "s3"]);
        assert_eq!(p.relators().len(), 6);
        assert_eq!(abelianization(&p).unwrap(), Abelianization::new(0, &[6]));
        assert!(mod_sphere_presentation(2).is_err());
    }

    #[test]
    fn pmod_small_cases() {
        let p3 = pmod_sphere_presentation(3).unwrap();
        assert_eq!(p3.render(), "<a1_2 | a1_2 = 1>");
        let p4 = pmod_sphere_presentation(4).unwrap();
        assert_eq!(p4.generators(), ["a1_2", "a1_3", "a2_3"]);
        assert_eq!(
            p4.relators().last().unwrap().render(p4.generators()),
            "a1_2*a1_3*a2_3"
        );
        assert_eq!(abelianization(&p4).unwrap(), Abelianization::new(2, &[]));
    }

    #[test]
    fn pmod_family_sizes() {
        // C(k-1, 4) for each of (i)-(iii), 2 C(k-1, 3) for (iv), one for (v)
        let p = pmod_sphere_presentation(6).unwrap();
        assert_eq!(p.generators().len(), 10);
        assert_eq!(p.relators().len(), 3 * 5 + 2 * 10 + 1);
    }
}
