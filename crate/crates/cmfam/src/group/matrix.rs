//! Square matrices over a cyclotomic field, with the exact linear algebra
//! the group engine needs: products, inverses, rank, and coroot extraction.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::rational::Rational;

/// Row-major square matrix; all entries share one conductor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn from_entries(n: usize, entries: Vec<Cyclotomic>) -> Self {
        assert_eq!(entries.len(), n * n);
        Matrix { n, entries }
    }

    pub fn identity(n: usize, conductor: u32) -> Self {
        let mut entries = vec![Cyclotomic::zero(conductor); n * n];
        for i in 0..n {
            entries[i * n + i] = Cyclotomic::one(conductor);
        }
        Matrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let conductor = self.entries[0].conductor();
        let mut out = vec![Cyclotomic::zero(conductor); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out[i * n + j] = out[i * n + j].add(&a.mul(b));
                }
            }
        }
        Matrix { n, entries: out }
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero(self.entries[0].conductor());
        for i in 0..self.n {
            t = t.add(self.entry(i, i));
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        let conductor = self.entries[0].conductor();
        let one = Cyclotomic::one(conductor);
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.entry(i, j);
                if i == j {
                    *e == one
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Gauss-Jordan inverse; errors on singular input.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let conductor = self.entries[0].conductor();
        let mut a: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Cyclotomic::one(conductor)
                        } else {
                            Cyclotomic::zero(conductor)
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = a[col][j].mul(&p);
                inv[col][j] = inv[col][j].mul(&p);
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        let t = a[col][j].mul(&f);
                        a[r][j] = a[r][j].sub(&t);
                        let t = inv[col][j].mul(&f);
                        inv[r][j] = inv[r][j].sub(&t);
                    }
                }
            }
        }
        Ok(Matrix {
            n,
            entries: inv.into_iter().flatten().collect(),
        })
    }

    /// Rank of (identity - self); 1 exactly for reflections.
    pub fn rank_of_id_minus(&self) -> usize {
        let n = self.n;
        let conductor = self.entries[0].conductor();
        let id = Matrix::identity(n, conductor);
        let rows: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| id.entry(i, j).sub(self.entry(i, j)))
                    .collect()
            })
            .collect();
        rank(rows)
    }

    /// A nonzero row of (identity - self), scaled so its first nonzero
    /// entry is 1. For a reflection this spans the coroot line.
    pub fn coroot(&self) -> Option<Vec<Cyclotomic>> {
        let n = self.n;
        let conductor = self.entries[0].conductor();
        let id = Matrix::identity(n, conductor);
        for i in 0..n {
            let row: Vec<Cyclotomic> = (0..n)
                .map(|j| id.entry(i, j).sub(self.entry(i, j)))
                .collect();
            if row.iter().any(|c| !c.is_zero()) {
                return Some(normalize_projective(row));
            }
        }
        None
    }

    /// A nonzero column of (identity - self): a root vector of a reflection.
    pub fn root(&self) -> Option<Vec<Cyclotomic>> {
        let n = self.n;
        let conductor = self.entries[0].conductor();
        let id = Matrix::identity(n, conductor);
        for j in 0..n {
            let col: Vec<Cyclotomic> = (0..n)
                .map(|i| id.entry(i, j).sub(self.entry(i, j)))
                .collect();
            if col.iter().any(|c| !c.is_zero()) {
                return Some(col);
            }
        }
        None
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e.scale(r)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// Stable dedup key: canonical serialization of the reduced entries.
    pub fn canonical_key(&self) -> String {
        use fmt::Write;
        let mut s = String::new();
        for e in &self.entries {
            for (exp, num, den) in e.to_triples() {
                let _ = write!(s, "{exp}:{num}/{den},");
            }
            s.push(';');
        }
        s
    }
}

/// Row rank by Gaussian elimination (consumes the rows).
pub fn rank(mut rows: Vec<Vec<Cyclotomic>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = rows[r][j].mul(&f);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Scale a nonzero vector so its first nonzero entry is 1.
pub fn normalize_projective(mut v: Vec<Cyclotomic>) -> Vec<Cyclotomic> {
    let lead = v
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero vector")
        .clone();
    let inv = lead.inv().expect("nonzero entry");
    for c in v.iter_mut() {
        *c = c.mul(&inv);
    }
    v
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            write!(f, "  [")?;
            for j in 0..self.n {
                write!(f, "{}{}", if j > 0 { ", " } else { "" }, self.entry(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
