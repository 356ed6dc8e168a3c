//! Named families of data sets.

use serde::{Deserialize, Serialize};

use super::{DataSet, Pair};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `(2, 0; (1,2) × (2g+2))`.
    Hyperelliptic { g: u64 },
    /// `(n, 0; ((1,n), (n−1,n)) × (k+1))`, of genus `k(n−1)`.
    BalancedSuperelliptic { n: u64, k: u64 },
    /// From `(n, 0; (d1,n1), (d2,n2), (1,n))` builds
    /// `(n, 0; (d1,n1), (−d1,n1), (d2,n2), (−d2,n2))`, returned sorted.
    Doubled { source: DataSet },
}

pub fn make_family(family: &Family) -> Result<DataSet> {
    let d = match family {
        Family::Hyperelliptic { g } => {
            if *g < 2 {
                return Err(Error::GenusOutOfScope(*g as i64));
            }
            DataSet::from_pairs(2, 0, vec![Pair { d: 1, n: 2 }; (2 * g + 2) as usize])
        }
        Family::BalancedSuperelliptic { n, k } => {
            if *n < 2 || *k < 1 {
                return Err(Error::Malformed(format!(
                    "superelliptic family needs n ≥ 2 and k ≥ 1, got n = {n}, k = {k}"
                )));
            }
            let pairs = (0..=*k)
                .flat_map(|_| [Pair::new(1, *n), Pair::new(-1, *n)])
                .collect();
            DataSet::from_pairs(*n, 0, pairs)
        }
        Family::Doubled { source } => {
            source.ensure_valid()?;
            if source.g0() != 0 {
                return Err(Error::NotSpherical(source.g0()));
            }
            if source.k() != 3 {
                return Err(Error::BranchCount {
                    expected: 3,
                    found: source.k(),
                });
            }
            let n = source.n();
            let last = source.pairs()[2];
            if last != (Pair { d: 1, n }) {
                return Err(Error::Malformed(format!(
                    "doubling needs a last pair (1,{n}), got ({},{})",
                    last.d, last.n
                )));
            }
            let [a, b] = [source.pairs()[0], source.pairs()[1]];
            DataSet::from_pairs(n, 0, vec![a, a.negated(), b, b.negated()]).sorted()
        }
    };
    d.ensure_valid()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let h = make_family(&Family::Hyperelliptic { g: 2 }).unwrap();
        assert_eq!(h.to_string(), "(2,0;(1,2),(1,2),(1,2),(1,2),(1,2),(1,2))");
        let s = make_family(&Family::BalancedSuperelliptic { n: 3, k: 1 }).unwrap();
        assert_eq!(s.to_string(), "(3,0;(1,3),(2,3),(1,3),(2,3))");
        assert_eq!(s.validate().genus, Some(2));
        let source: DataSet = "(6,0;(1,2),(1,3),(1,6))".parse().unwrap();
        let d = make_family(&Family::Doubled { source }).unwrap();
        assert_eq!(d.to_string(), "(6,0;(1,2),(1,2),(1,3),(2,3))");
        assert_eq!(d.validate().genus, Some(2));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_family(&Family::Hyperelliptic { g: 1 }).is_err());
        assert!(make_family(&Family::BalancedSuperelliptic { n: 1, k: 1 }).is_err());
        // fails cond_iv, so it is not a data set to begin with
        let source: DataSet = "(6,0;(1,2),(2,3),(1,6))".parse().unwrap();
        assert!(matches!(
            make_family(&Family::Doubled { source }),
            Err(Error::Invalid(_))
        ));
        let source: DataSet = "(7,0;(1,7),(2,7),(4,7))".parse().unwrap();
        assert!(make_family(&Family::Doubled { source }).is_err());
    }
}
