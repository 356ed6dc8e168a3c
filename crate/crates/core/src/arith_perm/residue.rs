use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `Z_n`, always stored reduced into `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces `value` modulo `modulus`. Panics on a zero modulus.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Self { value: v, modulus }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Self {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_unit(self) -> bool {
        self.value.gcd(&self.modulus) == 1
    }

    /// Additive order of the residue in `Z_n`.
    pub fn order(self) -> u64 {
        self.modulus / self.value.gcd(&self.modulus)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let m = self.modulus as u128;
        let mut base = self.value as u128 % m;
        let mut acc = 1u128 % m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Self {
            value: acc as u64,
            modulus: self.modulus,
        }
    }

    pub fn inverse(self) -> Result<Self> {
        let e = (self.value as i64).extended_gcd(&(self.modulus as i64));
        if e.gcd != 1 {
            return Err(Error::NotAUnit {
                value: self.value,
                modulus: self.modulus,
            });
        }
        Ok(Self::new(e.x, self.modulus))
    }

    /// Representative in `(-n/2, n/2]`, used when printing exponents such as `F^-1`.
    pub fn signed(self) -> i64 {
        let v = self.value as i64;
        let m = self.modulus as i64;
        if 2 * v > m {
            v - m
        } else {
            v
        }
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue {
            value: ((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue {
            value: ((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The unit group `Z_n^×` in ascending order.
///
/// For `n = 1` the ring is trivial and `0 ≡ 1`, so the single residue `0`
/// is returned as the trivial unit group.
pub fn units_mod(n: u64) -> Vec<Residue> {
    assert!(n >= 1, "modulus must be positive");
    if n == 1 {
        return vec![Residue::from_u64(0, 1)];
    }
    (1..n)
        .filter(|v| v.gcd(&n) == 1)
        .map(|v| Residue::from_u64(v, n))
        .collect()
}

pub fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1, |acc, v| acc.lcm(&v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(v: Vec<Residue>) -> Vec<u64> {
        v.into_iter().map(Residue::value).collect()
    }

    #[test]
    fn small_unit_groups() {
        assert_eq!(vals(units_mod(2)), vec![1]);
        assert_eq!(vals(units_mod(7)), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(vals(units_mod(12)), vec![1, 5, 7, 11]);
        assert_eq!(vals(units_mod(1)), vec![0]);
    }

    fn totient(n: u64) -> usize {
        (1..=n).filter(|k| k.gcd(&n) == 1).count()
    }

    #[test]
    fn units_have_totient_size_and_are_closed() {
        for n in 1..=200u64 {
            let u = units_mod(n);
            assert_eq!(u.len(), totient(n), "n = {n}");
            for &a in &u {
                for &b in &u {
                    assert!(u.contains(&(a * b)), "n = {n}: {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn inverse_and_signed() {
        let x = Residue::new(3, 7);
        assert_eq!((x * x.inverse().unwrap()).value(), 1);
        assert!(Residue::new(4, 8).inverse().is_err());
        assert_eq!(Residue::new(-1, 6).signed(), -1);
        assert_eq!(Residue::new(3, 6).signed(), 3);
        assert_eq!(Residue::new(-8, 7).value(), 6);
        assert_eq!(Residue::new(2, 7).pow(3).value(), 1);
        assert_eq!(Residue::new(6, 8).order(), 4);
    }
}
