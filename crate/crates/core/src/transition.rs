//! Change-of-basis matrices between the classical bases at a fixed degree.
//!
//! Convention: row `λ` holds the expansion of `from_λ` in the target basis,
//! `from_λ = Σ_μ M[λ][μ] to_μ`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::Basis;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    degree: usize,
    from: Basis,
    to: Basis,
    index: Vec<Partition>,
    rows: Vec<Vec<Rational>>,
}

impl TransitionMatrix {
    pub(crate) fn from_rows(degree: usize, from: Basis, to: Basis, rows: Vec<Vec<Rational>>) -> Self {
        let index = partitions_of(degree);
        debug_assert_eq!(rows.len(), index.len());
        TransitionMatrix { degree, from, to, index, rows }
    }

    pub fn identity(degree: usize, basis: Basis) -> Self {
        let n = partitions_of(degree).len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Self::from_rows(degree, basis, basis, rows)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn from_basis(&self) -> Basis {
        self.from
    }

    pub fn to_basis(&self) -> Basis {
        self.to
    }

    /// Row and column labels, in [`partitions_of`] order.
    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.index.len()
    }

    fn position(&self, p: &Partition) -> Option<usize> {
        self.index.binary_search(p).ok()
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> Rational {
        match (self.position(row), self.position(col)) {
            (Some(i), Some(j)) => self.rows[i][j].clone(),
            _ => Rational::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    /// Maps coefficients in the source basis to coefficients in the target.
    pub fn apply(&self, coeffs: &BTreeMap<Partition, Rational>) -> BTreeMap<Partition, Rational> {
        let mut acc = vec![Rational::zero(); self.size()];
        for (p, c) in coeffs {
            let i = self.position(p).expect("coefficient index outside the matrix degree");
            for (j, x) in self.rows[i].iter().enumerate() {
                if !x.is_zero() {
                    acc[j] += c * x;
                }
            }
        }
        self.index
            .iter()
            .cloned()
            .zip(acc)
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `self` followed by `next`: from `self.from` to `next.to`.
    pub fn compose(&self, next: &TransitionMatrix) -> TransitionMatrix {
        assert_eq!(self.degree, next.degree);
        assert_eq!(self.to, next.from, "composition needs matching middle basis");
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .filter(|&k| !self.rows[i][k].is_zero())
                            .map(|k| &self.rows[i][k] * &next.rows[k][j])
                            .fold(Rational::zero(), |a, b| a + b)
                    })
                    .collect()
            })
            .collect();
        TransitionMatrix::from_rows(self.degree, self.from, next.to, rows)
    }

    /// Exact inverse by Gauss-Jordan elimination, `None` if singular.
    pub fn inverse(&self) -> Option<TransitionMatrix> {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut inv = TransitionMatrix::identity(self.degree, self.to).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &scale;
            }
            for x in inv[col].iter_mut() {
                *x *= &scale;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for k in 0..n {
                    let (da, di) = (&a[col][k] * &factor, &inv[col][k] * &factor);
                    a[r][k] -= da;
                    inv[r][k] -= di;
                }
            }
        }
        Some(TransitionMatrix::from_rows(self.degree, self.to, self.from, inv))
    }

    pub fn determinant(&self) -> Rational {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            det *= &a[col][col];
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &a[col][col];
                let (top, bottom) = a.split_at_mut(r);
                for (x, pivot) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= pivot * &factor;
                }
            }
        }
        det
    }

    /// File name used by the on-disk cache.
    pub fn file_name(from: Basis, to: Basis, degree: usize) -> String {
        format!("{from}-{to}-{degree}.json")
    }

    /// Nonzero entries as `{row_partition, col_partition, numerator, denominator}`.
    pub fn to_json(&self) -> Result<String> {
        let mut entries = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                entries.push(EntryDoc {
                    row_partition: self.index[i].clone(),
                    col_partition: self.index[j].clone(),
                    numerator: small(x.numer())?,
                    denominator: small(x.denom())?,
                });
            }
        }
        Ok(serde_json::to_string(&entries)?)
    }

    pub fn from_json(degree: usize, from: Basis, to: Basis, text: &str) -> Result<Self> {
        let entries: Vec<EntryDoc> = serde_json::from_str(text)?;
        let mut m = TransitionMatrix::identity(degree, from);
        m.to = to;
        for row in m.rows.iter_mut() {
            row.iter_mut().for_each(|x| *x = Rational::zero());
        }
        for e in entries {
            let (Some(i), Some(j)) = (m.position(&e.row_partition), m.position(&e.col_partition)) else {
                return Err(Error::Parse(format!(
                    "entry ({}, {}) is not indexed by partitions of {degree}",
                    e.row_partition, e.col_partition
                )));
            };
            if e.denominator == 0 {
                return Err(Error::Parse("zero denominator".into()));
            }
            m.rows[i][j] = Rational::new(e.numerator.into(), e.denominator.into());
        }
        Ok(m)
    }

    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = dir.join(Self::file_name(self.from, self.to, self.degree));
        fs::write(&path, self.to_json()?)?;
        Ok(path)
    }

    /// Reads a cached matrix, `Ok(None)` when the file is absent.
    pub fn load(dir: &Path, from: Basis, to: Basis, degree: usize) -> Result<Option<Self>> {
        let path = dir.join(Self::file_name(from, to, degree));
        match fs::read_to_string(&path) {
            Ok(text) => Self::from_json(degree, from, to, &text).map(Some),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    row_partition: Partition,
    col_partition: Partition,
    numerator: i64,
    denominator: i64,
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| {
        Error::InvalidInput(format!(
            "matrix entry with {} digits does not fit the cache format",
            x.abs().to_string().len()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_and_determinant() {
        let m = TransitionMatrix::from_rows(
            2,
            Basis::H,
            Basis::P,
            vec![vec![q(1, 2), q(1, 2)], vec![q(0, 1), q(1, 1)]],
        );
        assert_eq!(m.determinant(), q(1, 2));
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).is_identity());
        assert_eq!(inv.from_basis(), Basis::P);
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = TransitionMatrix::from_rows(2, Basis::M, Basis::M, vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]);
        assert!(m.inverse().is_none());
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let m = TransitionMatrix::from_rows(2, Basis::E, Basis::P, vec![vec![q(-1, 2), q(1, 2)], vec![q(0, 1), q(1, 1)]]);
        let text = m.to_json().unwrap();
        assert!(text.starts_with(r#"[{"row_partition":[2],"col_partition":[2],"numerator":-1,"denominator":2}"#));
        let back = TransitionMatrix::from_json(2, Basis::E, Basis::P, &text).unwrap();
        assert_eq!(back, m);
        assert!(TransitionMatrix::from_json(2, Basis::E, Basis::P, r#"[{"row_partition":[3],"col_partition":[2],"numerator":1,"denominator":1}]"#).is_err());
    }
}
