//! Permutations of `{1, …, k}`.
//!
//! Points are stored 0-based; everything user-facing (cycle notation,
//! transposition constructors, JSON index pairs) is 1-based.
//!
//! Composition is right-to-left: `(σ * τ)(i) = σ(τ(i))`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest degree a [`Permutation`] can carry.
pub const MAX_PERM_DEGREE: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    len: u8,
    images: [u8; MAX_PERM_DEGREE],
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        assert!(k <= MAX_PERM_DEGREE, "degree {k} too large");
        let mut images = [0u8; MAX_PERM_DEGREE];
        for (i, slot) in images.iter_mut().enumerate().take(k) {
            *slot = i as u8;
        }
        Self {
            len: k as u8,
            images,
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let k = images.len();
        if k > MAX_PERM_DEGREE {
            return Err(Error::Capacity {
                what: "permutation degree",
                size: k,
                max: MAX_PERM_DEGREE,
            });
        }
        let mut seen = [false; MAX_PERM_DEGREE];
        let mut out = [0u8; MAX_PERM_DEGREE];
        for (i, &v) in images.iter().enumerate() {
            if v >= k || seen[v] {
                return Err(Error::Malformed(format!(
                    "{images:?} is not a permutation of 0..{k}"
                )));
            }
            seen[v] = true;
            out[i] = v as u8;
        }
        Ok(Self {
            len: k as u8,
            images: out,
        })
    }

    /// The transposition swapping the 1-based points `i` and `j`.
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= k && j <= k && i != j);
        let mut p = Self::identity(k);
        p.images.swap(i - 1, j - 1);
        p
    }

    /// Product of the given 1-based cycles, applied right-to-left.
    pub fn from_cycles(k: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Self::identity(k);
        for cycle in cycles.iter().rev() {
            let mut c = Self::identity(k);
            let mut seen = vec![false; k + 1];
            for (pos, &a) in cycle.iter().enumerate() {
                let b = cycle[(pos + 1) % cycle.len()];
                if a == 0 || a > k || b == 0 || b > k {
                    return Err(Error::Malformed(format!(
                        "cycle point out of range 1..={k}"
                    )));
                }
                if std::mem::replace(&mut seen[a], true) {
                    return Err(Error::Malformed(format!("point {a} repeats in a cycle")));
                }
                c.images[a - 1] = (b - 1) as u8;
            }
            acc = c * acc;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.len as usize
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images[..self.degree()].iter().map(|&v| v as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images().enumerate().all(|(i, v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[self.images[i] as usize] = i as u8;
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for i in 0..self.degree() {
            out.images[i] = self.images[other.images[i] as usize];
        }
        out
    }

    /// Non-trivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// The 1-based pair `(i, j)`, `i < j`, if this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let cycles = self.cycles();
        match cycles.as_slice() {
            [c] if c.len() == 2 => Some((c[0] + 1, c[1] + 1)),
            _ => None,
        }
    }

    /// Parses cycle notation such as `(1,2)(3,4)` or `()` for degree `k`.
    pub fn parse_cycles(s: &str, k: usize) -> Result<Self> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let inner_end = rest
                .find(')')
                .filter(|_| rest.starts_with('('))
                .ok_or_else(|| Error::Malformed(format!("bad cycle notation {s:?}")))?;
            let inner = rest[1..inner_end].trim();
            if !inner.is_empty() {
                let pts = inner
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::Malformed(format!("bad cycle notation {s:?}")))?;
                cycles.push(pts);
            }
            rest = rest[inner_end + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(k, &refs)
    }
}

impl std::ops::Mul for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        self.compose(&rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All of `Σ_k` in lexicographic order of image arrays.
pub fn all_permutations(k: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some(Permutation::identity(k));
    std::iter::from_fn(move || {
        let cur = next?;
        next = next_lex(&cur);
        Some(cur)
    })
}

fn next_lex(p: &Permutation) -> Option<Permutation> {
    let k = p.degree();
    let mut a = *p;
    let v = &mut a.images[..k];
    let i = (0..k.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1])?;
    let j = (i + 1..k).rev().find(|&j| v[j] > v[i])?;
    v.swap(i, j);
    v[i + 1..].reverse();
    Some(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = Permutation::parse_cycles("(1,2)(3,4)", 4).unwrap();
        assert_eq!(p.to_string(), "(1,2)(3,4)");
        assert_eq!(Permutation::identity(5).to_string(), "()");
        assert_eq!(
            Permutation::parse_cycles("()", 3).unwrap(),
            Permutation::identity(3)
        );
        let q = Permutation::parse_cycles("(3,1,2)", 3).unwrap();
        assert_eq!(q.to_string(), "(1,2,3)");
        assert!(Permutation::parse_cycles("(1,1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        // (1,2,3) = (1,3)(1,2)
        let a = Permutation::transposition(3, 1, 3);
        let b = Permutation::transposition(3, 1, 2);
        assert_eq!((a * b).to_string(), "(1,2,3)");
        let c = Permutation::parse_cycles("(1,2,3)", 3).unwrap();
        assert_eq!(c.apply(0), 1);
        assert!((c * c.inverse()).is_identity());
    }

    #[test]
    fn lex_enumeration_counts() {
        assert_eq!(all_permutations(1).count(), 1);
        assert_eq!(all_permutations(4).count(), 24);
        let all: Vec<_> = all_permutations(5).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all.len(), 120);
    }

    #[test]
    fn transposition_detection() {
        assert_eq!(
            Permutation::transposition(5, 4, 2).as_transposition(),
            Some((2, 4))
        );
        assert_eq!(
            Permutation::parse_cycles("(1,2)(3,4)", 4)
                .unwrap()
                .as_transposition(),
            None
        );
    }
}
