use std::fmt;

use serde::{Deserialize, Serialize};

use super::vector::GammaVector;
use crate::arith_perm::{units_mod, Residue};
use crate::error::{Error, Result};

/// Small finite groups built from cyclic pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Trivial,
    Cyclic {
        n: u64,
    },
    DirectProduct {
        n: u64,
        m: u64,
    },
    /// `Z_n ⋊_ℓ Z_m = ⟨x, y | x^m, y^n, x y x⁻¹ = y^ℓ⟩`.
    Semidirect {
        n: u64,
        m: u64,
        twist: u64,
    },
}

impl GroupDescriptor {
    pub fn order(&self) -> u64 {
        match *self {
            GroupDescriptor::Trivial => 1,
            GroupDescriptor::Cyclic { n } => n,
            GroupDescriptor::DirectProduct { n, m } | GroupDescriptor::Semidirect { n, m, .. } => {
                n * m
            }
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupDescriptor::Trivial => write!(f, "1"),
            GroupDescriptor::Cyclic { n } => write!(f, "Z_{n}"),
            GroupDescriptor::DirectProduct { n, m } => write!(f, "Z_{n} × Z_{m}"),
            GroupDescriptor::Semidirect { n, m, twist } => write!(f, "Z_{n} ⋊_{twist} Z_{m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IrreducibleCase {
    #[serde(rename = "(i)")]
    I,
    #[serde(rename = "(ii)(a)")]
    IIa,
    #[serde(rename = "(ii)(b)")]
    IIb,
    #[serde(rename = "(iii)")]
    III,
}

impl IrreducibleCase {
    pub fn label(&self) -> &'static str {
        match self {
            IrreducibleCase::I => "(i)",
            IrreducibleCase::IIa => "(ii)(a)",
            IrreducibleCase::IIb => "(ii)(b)",
            IrreducibleCase::III => "(iii)",
        }
    }
}

impl fmt::Display for IrreducibleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub case: IrreducibleCase,
    /// The unit `ℓ` witnessing cases (i) and (ii).
    pub ell: Option<u64>,
    pub lmod: GroupDescriptor,
    pub centralizer: GroupDescriptor,
    pub normalizer: GroupDescriptor,
    /// The normalizer is stated without an exhibited lift relation (case (ii)(a)).
    pub normalizer_asserted: bool,
}

/// Classifies a three-point spherical class by its normalizer and centralizer.
///
/// Case (i) is tried first (smallest `ℓ ≠ 1` with `ℓ³ = 1` and
/// `Γ ~ (c, ℓc, ℓ²c)`); then case (ii) over ascending `ℓ` with `ℓ² = 1` and
/// each choice of distinguished entry `c_p` with `ℓ ≡ 1 (mod n_p)` and the
/// other two entries related by `ℓ`; otherwise case (iii).
pub fn classify_irreducible(gamma: &GammaVector) -> Result<Classification> {
    if gamma.k() != 3 {
        return Err(Error::BranchCount {
            expected: 3,
            found: gamma.k(),
        });
    }
    let g = gamma.genus();
    if g < 2 {
        return Err(Error::GenusOutOfScope(g));
    }
    let n = gamma.n();
    let units: Vec<u64> = units_mod(n).into_iter().map(Residue::value).collect();
    let pow = |ell: u64, e: u64| Residue::from_u64(ell, n).pow(e).value();
    let sorted = gamma.sorted();

    for &ell in units.iter().filter(|&&l| l != 1 && pow(l, 3) == 1) {
        let hit = (0..3).any(|p| {
            let x = gamma.get(p);
            let mut orbit = vec![x, x * ell % n, x * pow(ell, 2) % n];
            orbit.sort_unstable();
            orbit == sorted
        });
        if hit {
            return Ok(Classification {
                case: IrreducibleCase::I,
                ell: Some(ell),
                lmod: GroupDescriptor::Cyclic { n: 3 },
                centralizer: GroupDescriptor::Cyclic { n },
                normalizer: GroupDescriptor::Semidirect {
                    n,
                    m: 3,
                    twist: ell,
                },
                normalizer_asserted: false,
            });
        }
    }

    for &ell in units.iter().filter(|&&l| pow(l, 2) == 1 % n) {
        let hit = (0..3).any(|p| {
            let (j, k) = match p {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            (ell % gamma.order_at(p)) == 1 % gamma.order_at(p)
                && gamma.get(k) == gamma.get(j) * ell % n
        });
        if !hit {
            continue;
        }
        return Ok(if ell == 1 {
            if n > 2 * g as u64 + 2 {
                return Err(Error::Inconsistent(format!(
                    "case (ii)(a) with n = {n} > 2g + 2 = {}",
                    2 * g + 2
                )));
            }
            Classification {
                case: IrreducibleCase::IIa,
                ell: Some(1),
                lmod: GroupDescriptor::Cyclic { n: 2 },
                centralizer: GroupDescriptor::DirectProduct { n, m: 2 },
                normalizer: GroupDescriptor::DirectProduct { n, m: 2 },
                normalizer_asserted: true,
            }
        } else {
            Classification {
                case: IrreducibleCase::IIb,
                ell: Some(ell),
                lmod: GroupDescriptor::Cyclic { n: 2 },
                centralizer: GroupDescriptor::Cyclic { n },
                normalizer: GroupDescriptor::Semidirect {
                    n,
                    m: 2,
                    twist: ell,
                },
                normalizer_asserted: false,
            }
        });
    }

    Ok(Classification {
        case: IrreducibleCase::III,
        ell: None,
        lmod: GroupDescriptor::Trivial,
        centralizer: GroupDescriptor::Cyclic { n },
        normalizer: GroupDescriptor::Cyclic { n },
        normalizer_asserted: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::DataSet;

    fn classify(s: &str) -> Classification {
        let d: DataSet = s.parse().unwrap();
        classify_irreducible(&d.gamma_vector().unwrap()).unwrap()
    }

    #[test]
    fn table_rows() {
        let rows = [
            ("(7,0;(1,7),(2,7),(4,7))", "Z_7 ⋊_2 Z_3", "Z_7"),
            ("(7,0;(5,7),(1,7),(1,7))", "Z_7 × Z_2", "Z_7 × Z_2"),
            ("(8,0;(1,4),(1,8),(5,8))", "Z_8 ⋊_5 Z_2", "Z_8"),
            ("(8,0;(3,4),(1,8),(1,8))", "Z_8 × Z_2", "Z_8 × Z_2"),
            ("(9,0;(1,3),(1,9),(5,9))", "Z_9", "Z_9"),
            ("(12,0;(1,2),(1,12),(5,12))", "Z_12 ⋊_5 Z_2", "Z_12"),
            ("(12,0;(2,3),(1,4),(1,12))", "Z_12", "Z_12"),
            ("(14,0;(1,2),(3,7),(1,14))", "Z_14", "Z_14"),
        ];
        for (d, nf, cf) in rows {
            let c = classify(d);
            assert_eq!(c.normalizer.to_string(), nf, "{d}");
            assert_eq!(c.centralizer.to_string(), cf, "{d}");
        }
    }

    #[test]
    fn cases_and_errors() {
        assert_eq!(classify("(7,0;(1,7),(2,7),(4,7))").case, IrreducibleCase::I);
        assert_eq!(
            classify("(7,0;(5,7),(1,7),(1,7))").case,
            IrreducibleCase::IIa
        );
        assert_eq!(classify("(8,0;(1,4),(1,8),(5,8))").ell, Some(5));
        assert_eq!(
            classify("(9,0;(1,3),(1,9),(5,9))").lmod,
            GroupDescriptor::Trivial
        );
        let four = GammaVector::new(6, vec![3, 3, 2, 4]).unwrap();
        assert!(matches!(
            classify_irreducible(&four),
            Err(Error::BranchCount { .. })
        ));
        let torus = GammaVector::new(3, vec![1, 1, 1]).unwrap();
        assert!(matches!(
            classify_irreducible(&torus),
            Err(Error::GenusOutOfScope(1))
        ));
    }
}
