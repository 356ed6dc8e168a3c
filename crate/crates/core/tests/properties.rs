use std::collections::HashSet;
use std::sync::OnceLock;

use liftable_core::arith_perm::{
    all_permutations, smith_normal_form, units_mod, IntMatrix, Permutation, Residue,
};
use liftable_core::datasets::enumerate_spherical;
use liftable_core::fpgroups::{abelianization, tietze_simplify, Presentation, TietzeBudget, Word};
use liftable_core::gamma_action::{act, stabilizer_bruteforce, GammaVector};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

/// Product of elementary row operations `r_i += c·r_j`, `i ≠ j`, and swaps.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..8).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        for (i, j, c, swap) in ops {
            let mut e = IntMatrix::identity(n);
            if swap {
                e.set(i, i, 0);
                e.set(j, j, 0);
                e.set(i, j, 1);
                e.set(j, i, 1);
                if i == j {
                    e.set(i, i, 1);
                }
            } else if i != j {
                e.set(i, j, c);
            }
            m = e.mul(&m);
        }
        m
    })
}

fn gamma_vectors() -> &'static [GammaVector] {
    static ALL: OnceLock<Vec<GammaVector>> = OnceLock::new();
    ALL.get_or_init(|| {
        (2..=3)
            .flat_map(|g| enumerate_spherical(g).unwrap())
            .map(|d| d.gamma_vector().unwrap())
            .collect()
    })
}

fn presentation() -> impl Strategy<Value = Presentation> {
    let letter = (
        0usize..3,
        prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)],
    );
    let relator = prop::collection::vec(letter, 1..6);
    prop::collection::vec(relator, 0..4).prop_map(|rels| {
        let words = rels.iter().map(|r| Word::from_syllables(r)).collect();
        Presentation::new(vec!["a".into(), "b".into(), "c".into()], words).unwrap()
    })
}

proptest! {
    #[test]
    fn smith_form_is_unimodular_invariant(a in matrix(3, 4), u in unimodular(3), v in unimodular(4)) {
        let a = IntMatrix::from_rows(&a).unwrap();
        prop_assert_eq!(u.determinant().abs(), 1);
        let b = u.mul(&a).mul(&v);
        prop_assert_eq!(smith_normal_form(&a), smith_normal_form(&b));
    }

    #[test]
    fn tietze_preserves_abelianization(p in presentation()) {
        let q = tietze_simplify(&p, TietzeBudget::default());
        prop_assert_eq!(abelianization(&p).unwrap(), abelianization(&q).unwrap());
        prop_assert!(q.generators().len() <= p.generators().len());
    }

    #[test]
    fn action_is_a_left_action(i in 0usize..23, a in 0usize..64, b in 0usize..64, s in 0usize..720, t in 0usize..720) {
        let all = gamma_vectors();
        let gamma = &all[i % all.len()];
        let (n, k) = (gamma.n(), gamma.k());
        let units = units_mod(n);
        let (l1, l2) = (units[a % units.len()], units[b % units.len()]);
        let count = (1..=k).product::<usize>();
        let s1 = all_permutations(k).nth(s % count).unwrap();
        let s2 = all_permutations(k).nth(t % count).unwrap();
        let one = Residue::from_u64(1, n);
        prop_assert_eq!(&act(one, &Permutation::identity(k), gamma).unwrap(), gamma);
        let stepwise = act(l1, &s1, &act(l2, &s2, gamma).unwrap()).unwrap();
        let combined = act(l1 * l2, &s1.compose(&s2), gamma).unwrap();
        prop_assert_eq!(stepwise, combined);
    }
}

#[test]
fn stabilizers_are_subgroups() {
    for gamma in gamma_vectors() {
        let stab = stabilizer_bruteforce(gamma).unwrap();
        let set: HashSet<(u64, Permutation)> = stab.iter().map(|(l, s)| (l.value(), *s)).collect();
        assert!(set.contains(&(1, Permutation::identity(gamma.k()))));
        // products of all pairs, or of a stride sample for large stabilizers
        let step = (stab.len() / 200).max(1);
        for (l1, s1) in stab.iter().step_by(step) {
            for (l2, s2) in stab.iter().step_by(step) {
                assert!(set.contains(&((*l1 * *l2).value(), s1.compose(s2))));
            }
            assert_eq!(&act(*l1, s1, gamma).unwrap(), gamma);
        }
    }
}
