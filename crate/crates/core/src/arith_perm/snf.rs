//! Exact integer matrices and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Malformed("matrix rows differ in length".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Exact product. Panics on `i64` overflow rather than wrapping.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i64 = 0;
                for l in 0..self.cols {
                    let term = self
                        .get(i, l)
                        .checked_mul(other.get(l, j))
                        .expect("matrix entry overflow");
                    acc = acc.checked_add(term).expect("matrix entry overflow");
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        (0..e).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn determinant(&self) -> i128 {
        assert_eq!(self.rows, self.cols);
        // Bareiss fraction-free elimination
        let n = self.rows;
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&v| v as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        if n == 0 {
            1
        } else {
            sign * a[n - 1][n - 1]
        }
    }

    /// Inverse of a matrix with determinant `±1`, via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::Malformed("inverse of a non-square matrix".into()));
        }
        let det = self.determinant();
        if det.abs() != 1 {
            return Err(Error::Malformed(format!("determinant {det} is not a unit")));
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i);
                let cof = if (i + j) % 2 == 0 { 1 } else { -1 } * minor.determinant();
                inv.set(i, j, (cof * det) as i64);
            }
        }
        Ok(inv)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let rows: Vec<Vec<i64>> = (0..self.rows)
            .filter(|&i| i != skip_row)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != skip_col)
                    .map(|j| self.get(i, j))
                    .collect()
            })
            .collect();
        IntMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i).to_vec()))
            .finish()
    }
}

/// Diagonal of the Smith normal form plus the corank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    /// Non-zero diagonal entries `d_1 | d_2 | …`, all positive.
    pub factors: Vec<BigInt>,
    /// `cols - rank`.
    pub free_rank: usize,
}

impl SmithForm {
    /// Factors greater than one, i.e. the torsion invariants of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows: Vec<Vec<i128>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|&v| v as i128).collect())
        .collect();
    // Small matrices stay in i128; any overflow restarts in BigInt.
    let diag: Vec<BigInt> = match reduce(rows) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => {
            let big: Vec<Vec<BigInt>> = (0..m.rows())
                .map(|i| m.row(i).iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            reduce(big).expect("BigInt arithmetic does not overflow")
        }
    };
    let rank = diag.len();
    SmithForm {
        factors: diag,
        free_rank: m.cols() - rank,
    }
}

fn reduce<T>(mut a: Vec<Vec<T>>) -> Option<Vec<T>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows && t < ncols {
        // smallest non-zero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..ncols {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let d = q.checked_mul(&a[t][j])?;
                    a[i][j] = a[i][j].checked_sub(&d)?;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    if row[t].is_zero() {
                        continue;
                    }
                    let d = q.checked_mul(&row[t])?;
                    row[j] = row[j].checked_sub(&d)?;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..nrows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..ncols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                } else if best.1 != t {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            // pivot must divide the rest of the trailing block
            let p = a[t][t].clone();
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..ncols {
                        a[t][j] = a[t][j].clone() + a[i][j].clone();
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Some(diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> (Vec<i64>, usize) {
        let f = smith_normal_form(&IntMatrix::from_rows(rows).unwrap());
        let d = f
            .factors
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        (d, f.free_rank)
    }

    #[test]
    fn examples() {
        assert_eq!(snf(&[vec![1, 0], vec![0, 1]]), (vec![1, 1], 0));
        assert_eq!(snf(&[vec![2, 0], vec![0, 4]]), (vec![2, 4], 0));
        assert_eq!(
            snf(&[vec![2, -2, 0], vec![2, 0, 2], vec![0, 2, 2]]),
            (vec![2, 2], 1)
        );
        assert_eq!(snf(&[vec![6, 0, 0], vec![-4, 2, 2]]), (vec![2, 6], 1));
        assert_eq!(snf(&[vec![6, 4]]), (vec![2], 1));
        assert_eq!(snf(&[vec![0, 0]]), (vec![], 2));
        assert_eq!(snf(&[vec![4, 0], vec![0, 6]]), (vec![2, 12], 0));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let f = smith_normal_form(
            &IntMatrix::from_rows(&[vec![big, big - 1], vec![big - 2, big]]).unwrap(),
        );
        // determinant is preserved up to sign
        let det =
            BigInt::from(big) * BigInt::from(big) - BigInt::from(big - 1) * BigInt::from(big - 2);
        let prod: BigInt = f.factors.iter().product();
        assert_eq!(prod, det.abs());
    }

    #[test]
    fn unimodular_inverse() {
        let f = IntMatrix::from_rows(&[
            vec![0, -1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![0, 0, -1, 0],
        ])
        .unwrap();
        assert_eq!(f.determinant(), 1);
        let inv = f.inverse_unimodular().unwrap();
        assert_eq!(f.mul(&inv), IntMatrix::identity(4));
        assert_eq!(inv, f.pow(5));
    }
}
