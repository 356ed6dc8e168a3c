//! Cyclic data sets `(n, g0; (d_1, n_1), …, (d_k, n_k))`.
//!
//! A data set encodes a `Z_n`-action on a closed surface up to conjugacy:
//! the quotient orbifold has genus `g0` and `k` cone points, the `i`-th of
//! order `n_i` with rotation datum `d_i ∈ Z_{n_i}^×`.

mod enumerate;
mod family;
mod grammar;

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith_perm::{lcm_all, units_mod};
use crate::error::{Error, Result};
use crate::gamma_action::GammaVector;

pub use enumerate::{enumerate_spherical, enumerate_spherical_with_jobs, MAX_ENUMERATION_GENUS};
pub use family::{make_family, Family};

/// A branch point `(d, n_i)`; `d` is kept reduced into `[0, n_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pair {
    pub d: u64,
    pub n: u64,
}

impl Pair {
    /// Reduces `d` modulo `n`. Panics if `n == 0`.
    pub fn new(d: i64, n: u64) -> Self {
        assert!(n > 0, "branch order must be positive");
        Self {
            d: (d as i128).rem_euclid(n as i128) as u64,
            n,
        }
    }

    /// `(ℓ·d mod n_i, n_i)`.
    pub fn scaled(self, ell: u64) -> Self {
        Self {
            d: ((self.d as u128 * ell as u128) % self.n as u128) as u64,
            n: self.n,
        }
    }

    pub fn negated(self) -> Self {
        Self {
            d: (self.n - self.d) % self.n,
            n: self.n,
        }
    }
}

// canonical storage sorts by (n_i, d_i)
impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.d).cmp(&(other.n, other.d))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DataSet {
    n: u64,
    g0: u64,
    pairs: Vec<Pair>,
}

/// A failed condition of the data-set definition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "label", rename_all = "snake_case")]
pub enum Violation {
    /// `n_i ∤ n`, `n_i < 2`, or `gcd(d_i, n_i) ≠ 1` at the 1-based position.
    CondI { index: usize },
    /// Deleting the 1-based position lowers the lcm of the orders.
    CondIi { index: usize },
    /// Spherical quotient but `lcm(n_1, …, n_k) ≠ n`.
    CondIii { lcm: u64 },
    /// `Σ (n/n_i)·d_i ≢ 0 (mod n)`.
    CondIv,
    /// Riemann-Hurwitz gives a negative genus.
    CondV { genus: i64 },
    /// Riemann-Hurwitz gives a non-integral genus, printed as a fraction.
    RhNonInteger { genus: String },
}

impl Violation {
    pub fn label(&self) -> &'static str {
        match self {
            Violation::CondI { .. } => "cond_i",
            Violation::CondIi { .. } => "cond_ii",
            Violation::CondIii { .. } => "cond_iii",
            Violation::CondIv => "cond_iv",
            Violation::CondV { .. } => "cond_v",
            Violation::RhNonInteger { .. } => "rh_non_integer",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CondI { index } => write!(
                f,
                "cond_i: pair {index} has n_i ∤ n, n_i < 2 or gcd(d_i, n_i) ≠ 1"
            ),
            Violation::CondIi { index } => {
                write!(f, "cond_ii: removing pair {index} lowers lcm(n_1, …, n_k)")
            }
            Violation::CondIii { lcm } => {
                write!(f, "cond_iii: lcm(n_1, …, n_k) = {lcm} differs from n")
            }
            Violation::CondIv => write!(f, "cond_iv: Σ (n/n_i)·d_i is not 0 mod n"),
            Violation::CondV { genus } => {
                write!(f, "cond_v: Riemann-Hurwitz genus {genus} is negative")
            }
            Violation::RhNonInteger { genus } => write!(
                f,
                "rh_non_integer: Riemann-Hurwitz genus {genus} is not an integer"
            ),
        }
    }
}

/// Warnings that do not invalidate a data set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScopeFlag {
    /// Genus below 2; classification operations refuse such inputs.
    ScopeGenus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub genus: Option<i64>,
    pub violations: Vec<Violation>,
    pub flags: Vec<ScopeFlag>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn labels(&self) -> Vec<&'static str> {
        self.violations.iter().map(Violation::label).collect()
    }
}

/// Witness `(ℓ, σ)` of an equivalence: `(ℓ·d_i, n_i) = (d'_{σ(i)}, n'_{σ(i)})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub ell: u64,
    /// 1-based images `σ(1), …, σ(k)`.
    pub sigma: Vec<usize>,
}

impl DataSet {
    /// Builds an unvalidated data set, reducing each `d_i` modulo `n_i`.
    pub fn new(n: u64, g0: u64, pairs: &[(i64, i64)]) -> Result<Self> {
        if n < 2 {
            return Err(Error::Malformed(format!(
                "degree n = {n} must be at least 2"
            )));
        }
        if g0 == 0 && pairs.is_empty() {
            return Err(Error::Malformed(
                "a spherical data set needs at least one branch point".into(),
            ));
        }
        let pairs = pairs
            .iter()
            .map(|&(d, ni)| {
                if ni < 1 {
                    Err(Error::Malformed(format!(
                        "branch order {ni} must be positive"
                    )))
                } else {
                    Ok(Pair::new(d, ni as u64))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, g0, pairs })
    }

    pub(crate) fn from_pairs(n: u64, g0: u64, pairs: Vec<Pair>) -> Self {
        Self { n, g0, pairs }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn g0(&self) -> u64 {
        self.g0
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    /// Number of branch points.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut violations = Vec::new();

        for (i, p) in self.pairs.iter().enumerate() {
            if p.n < 2 || !n.is_multiple_of(p.n) || p.d.gcd(&p.n) != 1 {
                violations.push(Violation::CondI { index: i + 1 });
            }
        }

        let full = lcm_all(self.pairs.iter().map(|p| p.n));
        for i in 0..self.pairs.len() {
            let without = lcm_all(
                self.pairs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p.n),
            );
            if without != full {
                violations.push(Violation::CondIi { index: i + 1 });
            }
        }

        if self.g0 == 0 && full != n {
            violations.push(Violation::CondIii { lcm: full });
        }

        // Σ d_i/n_i ∈ Z is Σ (n/n_i)·d_i ≡ 0 (mod n) without assuming n_i | n
        let angle: Ratio<i128> = self
            .pairs
            .iter()
            .map(|p| Ratio::new(p.d as i128, p.n as i128))
            .sum();
        if !angle.is_integer() {
            violations.push(Violation::CondIv);
        }

        let genus = self.riemann_hurwitz();
        let mut genus_value = None;
        if !genus.is_integer() {
            violations.push(Violation::RhNonInteger {
                genus: genus.to_string(),
            });
        } else if genus.to_integer() < 0 {
            violations.push(Violation::CondV {
                genus: genus.to_integer() as i64,
            });
        } else {
            genus_value = Some(genus.to_integer() as i64);
        }

        let mut flags = Vec::new();
        if violations.is_empty() {
            if genus_value.is_some_and(|g| g < 2) {
                flags.push(ScopeFlag::ScopeGenus);
            }
        } else {
            genus_value = None;
        }
        ValidationReport {
            genus: genus_value,
            violations,
            flags,
        }
    }

    /// `g = 1 + (n/2)·(2g0 − 2 + Σ (1 − 1/n_i))`, exactly.
    pub fn riemann_hurwitz(&self) -> Ratio<i128> {
        let one = Ratio::from_integer(1i128);
        let sum: Ratio<i128> = self
            .pairs
            .iter()
            .map(|p| one - Ratio::new(1, p.n as i128))
            .sum();
        one + Ratio::new(self.n as i128, 2) * (Ratio::from_integer(2 * self.g0 as i128 - 2) + sum)
    }

    pub fn ensure_valid(&self) -> Result<i64> {
        let report = self.validate();
        match report.genus {
            Some(g) => Ok(g),
            None => Err(Error::Invalid(report.violations)),
        }
    }

    /// Genus of a valid data set, refusing `g < 2`.
    pub fn ensure_in_scope(&self) -> Result<i64> {
        let g = self.ensure_valid()?;
        if g < 2 {
            return Err(Error::GenusOutOfScope(g));
        }
        Ok(g)
    }

    /// `c_i = (n/n_i)·d_i mod n`, in stored order.
    pub fn gamma_vector(&self) -> Result<GammaVector> {
        self.ensure_valid()?;
        if self.g0 != 0 {
            return Err(Error::NotSpherical(self.g0));
        }
        let c = self
            .pairs
            .iter()
            .map(|p| (self.n / p.n) * p.d % self.n)
            .collect();
        GammaVector::new(self.n, c)
    }

    /// Pairs sorted by `(n_i, d_i)`.
    pub fn sorted(&self) -> DataSet {
        let mut pairs = self.pairs.clone();
        pairs.sort();
        Self::from_pairs(self.n, self.g0, pairs)
    }

    /// Least sorted pair list over all rescalings by `ℓ ∈ Z_n^×`.
    pub fn canonical_form(&self) -> DataSet {
        let best = units_mod(self.n)
            .into_iter()
            .map(|ell| {
                let mut pairs: Vec<Pair> =
                    self.pairs.iter().map(|p| p.scaled(ell.value())).collect();
                pairs.sort();
                pairs
            })
            .min()
            .unwrap_or_else(|| self.sorted().pairs);
        Self::from_pairs(self.n, self.g0, best)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_form() == *self
    }

    /// Same `n`, `g0`, `k`, and some `(ℓ, σ)` matching rescaled pairs.
    ///
    /// Units are tried in ascending order; `σ` sends each position to the
    /// first still-unmatched position of `other` holding the same pair.
    pub fn equivalent_to(&self, other: &DataSet) -> Option<Equivalence> {
        if self.n != other.n || self.g0 != other.g0 || self.k() != other.k() {
            return None;
        }
        let mut target = other.pairs.clone();
        target.sort();
        for ell in units_mod(self.n) {
            let ell = ell.value();
            let mut scaled: Vec<Pair> = self.pairs.iter().map(|p| p.scaled(ell)).collect();
            scaled.sort();
            if scaled != target {
                continue;
            }
            let mut used = vec![false; other.k()];
            let sigma = self
                .pairs
                .iter()
                .map(|p| {
                    let want = p.scaled(ell);
                    let j = (0..other.k())
                        .find(|&j| !used[j] && other.pairs[j] == want)
                        .expect("multisets agree");
                    used[j] = true;
                    j + 1
                })
                .collect();
            return Some(Equivalence { ell, sigma });
        }
        None
    }
}

pub fn are_equivalent(a: &DataSet, b: &DataSet) -> Option<Equivalence> {
    a.equivalent_to(b)
}

pub fn validate(d: &DataSet) -> ValidationReport {
    d.validate()
}

pub fn gamma_vector(d: &DataSet) -> Result<GammaVector> {
    d.gamma_vector()
}

pub fn canonical_form(d: &DataSet) -> DataSet {
    d.canonical_form()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> DataSet {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        assert_eq!(ds("(7,0;(1,7),(2,7),(4,7))").validate().genus, Some(3));
        assert_eq!(ds("(2,0;(1,2)_6)").validate().genus, Some(2));
        assert_eq!(
            ds("(6,0;(1,2),(1,2),(1,6),(5,6))").validate().genus,
            Some(3)
        );
        let bad = ds("(4,0;(1,2),(1,4))").validate();
        assert_eq!(bad.genus, None);
        assert_eq!(bad.labels(), vec!["cond_ii", "cond_iv", "rh_non_integer"]);
    }

    #[test]
    fn printed_corollary_data_set_is_rejected() {
        let r = ds("(6,0;(1,2),(1,2),(1,6),(-1,5))").validate();
        assert!(r.labels().contains(&"cond_i"));
        assert!(r.labels().contains(&"rh_non_integer"));
        assert_eq!(
            ds("(6,0;(1,2),(1,2),(1,3),(2,3))").validate().genus,
            Some(2)
        );
    }

    #[test]
    fn low_genus_is_flagged_not_failed() {
        let r = ds("(3,0;(1,3),(1,3),(1,3))").validate();
        assert_eq!(r.genus, Some(1));
        assert!(r.violations.is_empty());
        assert_eq!(r.flags, vec![ScopeFlag::ScopeGenus]);
        assert!(matches!(
            ds("(3,0;(1,3),(1,3),(1,3))").ensure_in_scope(),
            Err(Error::GenusOutOfScope(1))
        ));
    }

    #[test]
    fn negative_genus_and_bad_orders() {
        // g = 1 + 2(−2 + 1/2) = −2
        let r = ds("(4,0;(1,2))").validate();
        assert_eq!(r.labels(), vec!["cond_ii", "cond_iii", "cond_iv", "cond_v"]);
        assert_eq!(ds("(2,0;(1,2),(1,2))").validate().genus, Some(0));
        let r = ds("(4,0;(1,1),(1,4),(3,4))").validate();
        assert!(r.labels().contains(&"cond_i"));
        let r = ds("(6,0;(3,6),(1,6),(2,6))").validate();
        assert!(r.labels().contains(&"cond_i"));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            DataSet::new(1, 0, &[(1, 2)]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(DataSet::new(4, 0, &[]), Err(Error::Malformed(_))));
        assert!(matches!(
            DataSet::new(4, 0, &[(1, 0)]),
            Err(Error::Malformed(_))
        ));
        assert!(DataSet::new(4, 1, &[]).is_ok());
    }

    #[test]
    fn gamma_vector_examples() {
        assert_eq!(
            ds("(7,0;(1,7),(2,7),(4,7))")
                .gamma_vector()
                .unwrap()
                .values(),
            vec![1, 2, 4]
        );
        assert_eq!(
            ds("(2,0;(1,2)_6)").gamma_vector().unwrap().values(),
            vec![1; 6]
        );
        assert_eq!(
            ds("(6,0;(1,2),(1,2),(1,3),(2,3))")
                .gamma_vector()
                .unwrap()
                .values(),
            vec![3, 3, 2, 4]
        );
        assert!(matches!(
            ds("(2,1;(1,2),(1,2))").gamma_vector(),
            Err(Error::NotSpherical(1))
        ));
    }

    #[test]
    fn equivalence_examples() {
        let a = ds("(7,0;(1,7),(2,7),(4,7))");
        let w = a.equivalent_to(&ds("(7,0;(2,7),(4,7),(1,7))")).unwrap();
        assert_eq!(w.ell, 1);
        assert_eq!(w.sigma, vec![3, 1, 2]);
        let w = a.equivalent_to(&ds("(7,0;(3,7),(5,7),(6,7))")).unwrap();
        assert_eq!(w.ell, 3);
        assert!(ds("(7,0;(1,7),(1,7),(5,7))").equivalent_to(&a).is_none());
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            ds("(7,0;(3,7),(5,7),(6,7))").canonical_form(),
            ds("(7,0;(1,7),(2,7),(4,7))")
        );
        let h = ds("(2,0;(1,2)_6)");
        assert_eq!(h.canonical_form(), h);
        let r = ds("(8,0;(1,4),(1,8),(5,8))");
        assert_eq!(r.canonical_form(), r);
    }
}
