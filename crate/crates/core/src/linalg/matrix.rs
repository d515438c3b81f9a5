//! Small dense matrices over an exact field.

use crate::scalars::{Field, ScalarError};
use num_traits::{One, Zero};

/// A dense rows×cols matrix. Throughout the crate the convention for a
/// linear map φ on a based space is row-major images: φ(x_j) = Σ_s M[j][s]·x_s,
/// so the matrix of φ∘ψ is M_ψ·M_φ.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = K::zero();
            for k in 0..self.cols {
                if !self[(r, k)].is_zero() && !other[(k, c)].is_zero() {
                    acc = acc + self[(r, k)].clone() * other[(k, c)].clone();
                }
            }
            acc
        })
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(col * n + c, pivot * n + c);
                    inv.data.swap(col * n + c, pivot * n + c);
                }
            }
            let p = a[(col, col)].clone();
            let pinv = p.inv().ok()?;
            for c in 0..n {
                a[(col, c)] = a[(col, c)].clone() * pinv.clone();
                inv[(col, c)] = inv[(col, c)].clone() * pinv.clone();
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for c in 0..n {
                        let sub = f.clone() * a[(col, c)].clone();
                        a[(r, c)] = a[(r, c)].clone() - sub;
                        let sub = f.clone() * inv[(col, c)].clone();
                        inv[(r, c)] = inv[(r, c)].clone() - sub;
                    }
                }
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-free-ish Gaussian elimination over the field.
    pub fn determinant(&self) -> K {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = K::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a[(r, col)].is_zero()) {
                Some(p) => p,
                None => return K::zero(),
            };
            if pivot != col {
                for c in 0..n {
                    a.data.swap(col * n + c, pivot * n + c);
                }
                det = -det;
            }
            let p = a[(col, col)].clone();
            det = det * p.clone();
            let pinv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone() * pinv.clone();
                    for c in col..n {
                        let sub = f.clone() * a[(col, c)].clone();
                        a[(r, c)] = a[(r, c)].clone() - sub;
                    }
                }
            }
        }
        det
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        assert!(self.is_square());
        let base = if e < 0 {
            self.inverse().ok_or(ScalarError::DivisionByZero)?
        } else {
            self.clone()
        };
        let mut acc = Self::identity(self.rows);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Kronecker product on pair indices (a,b) ↦ a·other.rows + b, matching
    /// the ordered-pair generators of bullet products.
    pub fn kronecker(&self, other: &Self) -> Self {
        Self::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (a, b) = (r / other.rows, r % other.rows);
                let (a2, b2) = (c / other.cols, c % other.cols);
                self[(a, a2)].clone() * other[(b, b2)].clone()
            },
        )
    }

    pub fn map<L: Field>(&self, mut f: impl FnMut(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (r, c): (usize, usize)) -> &K {
        &self.data[r * self.cols + c]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut K {
        &mut self.data[r * self.cols + c]
    }
}
