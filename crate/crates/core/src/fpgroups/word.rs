//! Freely reduced words over numbered generators.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Self { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Self {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Freely reduces `letters`.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self(out)
    }

    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn gen(g: usize) -> Self {
        Self(vec![Letter::new(g, false)])
    }

    /// `g^e`.
    pub fn power_of(g: usize, e: i64) -> Self {
        Self(vec![Letter::new(g, e < 0); e.unsigned_abs() as usize])
    }

    /// Concatenation of `(generator, exponent)` syllables.
    pub fn from_syllables(syllables: &[(usize, i64)]) -> Self {
        Self::new(syllables.iter().flat_map(|&(g, e)| Self::power_of(g, e).0))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        Self::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        Self::new((0..e.unsigned_abs()).flat_map(|_| base.0.iter().copied()))
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Removes matching letters from both ends.
    pub fn cyclically_reduced(&self) -> Self {
        let v = &self.0;
        let (mut i, mut j) = (0, v.len());
        while j - i >= 2 && v[i] == v[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        Self(v[i..j].to_vec())
    }

    /// Least word among all cyclic rotations of the word and its inverse,
    /// after cyclic reduction: equal keys mean the relators are equivalent.
    pub fn relator_key(&self) -> Self {
        let r = self.cyclically_reduced();
        let inv = r.inverse();
        let n = r.len();
        let mut best = r.clone();
        for w in [&r, &inv] {
            for s in 0..n {
                let rot: Vec<Letter> = w.0[s..].iter().chain(w.0[..s].iter()).copied().collect();
                if rot < best.0 {
                    best = Self(rot);
                }
            }
        }
        best
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.0.iter().filter(|l| l.gen == gen).count()
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.exponent())
            .sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Replaces every generator `g` by `images(g)`.
    pub fn substitute(&self, images: impl Fn(usize) -> Word) -> Self {
        Self::new(self.0.iter().flat_map(|l| {
            let w = images(l.gen);
            if l.inv {
                w.inverse().0
            } else {
                w.0
            }
        }))
    }

    /// Renames generators; the map must be injective on used generators.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        Self(
            self.0
                .iter()
                .map(|l| Letter::new(map(l.gen), l.inv))
                .collect(),
        )
    }

    /// Syllables `(generator, exponent)` with maximal runs merged.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.0 {
            match out.last_mut() {
                Some((g, e)) if *g == l.gen && (*e < 0) == l.inv => *e += l.exponent(),
                _ => out.push((l.gen, l.exponent())),
            }
        }
        out
    }

    /// `a*b^2*c^-1`, or `1` for the empty word.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        for (i, (g, e)) in self.syllables().into_iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(&names[g]);
            if e != 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}
