use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith_perm::{Permutation, Residue};
use crate::error::{Error, Result};

/// `(c_1, …, c_k)` in `Z_n`: non-zero entries summing to zero and
/// generating `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaVector {
    n: u64,
    c: Vec<u64>,
}

impl GammaVector {
    pub fn new(n: u64, c: Vec<u64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Malformed(format!("modulus {n} must be at least 2")));
        }
        let c: Vec<u64> = c.into_iter().map(|x| x % n).collect();
        if c.contains(&0) {
            return Err(Error::Malformed("Γ-vector entries must be non-zero".into()));
        }
        if c.iter().fold(0u64, |acc, &x| (acc + x) % n) != 0 {
            return Err(Error::Malformed("Γ-vector entries must sum to 0".into()));
        }
        if c.iter().fold(n, |acc, &x| acc.gcd(&x)) != 1 {
            return Err(Error::Malformed(
                "Γ-vector entries must generate Z_n".into(),
            ));
        }
        Ok(Self { n, c })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.c.len()
    }

    pub fn values(&self) -> Vec<u64> {
        self.c.clone()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.c[i]
    }

    /// Branch order `n / gcd(c_i, n)` at the 0-based position `i`.
    pub fn order_at(&self, i: usize) -> u64 {
        self.n / self.c[i].gcd(&self.n)
    }

    /// Genus of the covering surface.
    pub fn genus(&self) -> i64 {
        let one = Ratio::from_integer(1i128);
        let sum: Ratio<i128> = (0..self.k())
            .map(|i| one - Ratio::new(1, self.order_at(i) as i128))
            .sum();
        let g = one + Ratio::new(self.n as i128, 2) * (Ratio::from_integer(-2) + sum);
        debug_assert!(g.is_integer());
        g.to_integer() as i64
    }

    /// The entries as a sorted multiset.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.c.clone();
        v.sort_unstable();
        v
    }

    /// `(ℓ c_1, …, ℓ c_k)`.
    pub fn scaled(&self, ell: u64) -> Vec<u64> {
        self.c
            .iter()
            .map(|&x| ((x as u128 * ell as u128) % self.n as u128) as u64)
            .collect()
    }
}

/// `(ℓ, σ)·Γ`, whose `i`-th entry is `ℓ·c_{σ⁻¹(i)}`; a left action.
pub fn act(ell: Residue, sigma: &Permutation, gamma: &GammaVector) -> Result<GammaVector> {
    if ell.modulus() != gamma.n || !ell.is_unit() {
        return Err(Error::NotAUnit {
            value: ell.value(),
            modulus: gamma.n,
        });
    }
    if sigma.degree() != gamma.k() {
        return Err(Error::DegreeMismatch {
            expected: gamma.k(),
            found: sigma.degree(),
        });
    }
    let scaled = gamma.scaled(ell.value());
    let mut out = vec![0; gamma.k()];
    for (j, &v) in scaled.iter().enumerate() {
        out[sigma.apply(j)] = v;
    }
    Ok(GammaVector { n: gamma.n, c: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_examples() {
        let g = GammaVector::new(7, vec![1, 2, 4]).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(act(Residue::from_u64(1, 7), &id, &g).unwrap(), g);
        let cyc = Permutation::parse_cycles("(1,2,3)", 3).unwrap();
        assert_eq!(act(Residue::from_u64(2, 7), &cyc, &g).unwrap(), g);
        let h = GammaVector::new(7, vec![5, 1, 1]).unwrap();
        let t = Permutation::transposition(3, 2, 3);
        assert_eq!(act(Residue::from_u64(1, 7), &t, &h).unwrap(), h);
        // entry i comes from σ⁻¹(i)
        let moved = act(Residue::from_u64(1, 7), &cyc, &g).unwrap();
        assert_eq!(moved.values(), vec![4, 1, 2]);
    }

    #[test]
    fn action_errors() {
        let g = GammaVector::new(6, vec![3, 3, 2, 4]).unwrap();
        assert!(matches!(
            act(Residue::from_u64(2, 6), &Permutation::identity(4), &g),
            Err(Error::NotAUnit { .. })
        ));
        assert!(matches!(
            act(Residue::from_u64(1, 6), &Permutation::identity(3), &g),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn vector_invariants() {
        assert!(GammaVector::new(7, vec![1, 2, 3]).is_err());
        assert!(GammaVector::new(6, vec![2, 4]).is_err());
        assert!(GammaVector::new(6, vec![0, 1, 5]).is_err());
        assert_eq!(GammaVector::new(7, vec![1, 2, 4]).unwrap().genus(), 3);
        assert_eq!(GammaVector::new(2, vec![1; 6]).unwrap().genus(), 2);
    }
}
