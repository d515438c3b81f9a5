//! Sparse row spaces with exact Gaussian elimination.
//!
//! Vectors are sorted `(column, coefficient)` lists with no zero entries.
//! Columns are ordered so that the *leftmost* column is the pivot target;
//! callers that want "largest monomial eliminated first" (the crate's
//! length-lex convention) must map monomials to columns in descending order.

use crate::scalars::Field;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A sparse vector: strictly increasing columns, nonzero coefficients.
pub type SparseVec<K> = Vec<(u32, K)>;

/// target + c·source, merging sorted supports and dropping zeros.
pub(crate) fn axpy<K: Field>(target: &SparseVec<K>, c: &K, source: &SparseVec<K>) -> SparseVec<K> {
    if c.is_zero() {
        return target.clone();
    }
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        match (target.get(i), source.get(j)) {
            (Some((tc, tv)), Some((sc, sv))) if tc == sc => {
                let v = tv.clone() + c.clone() * sv.clone();
                if !v.is_zero() {
                    out.push((*tc, v));
                }
                i += 1;
                j += 1;
            }
            (Some((tc, tv)), Some((sc, _))) if tc < sc => {
                out.push((*tc, tv.clone()));
                i += 1;
            }
            (Some(_), Some((sc, sv))) => {
                let v = c.clone() * sv.clone();
                if !v.is_zero() {
                    out.push((*sc, v));
                }
                j += 1;
            }
            (Some((tc, tv)), None) => {
                out.push((*tc, tv.clone()));
                i += 1;
            }
            (None, Some((sc, sv))) => {
                let v = c.clone() * sv.clone();
                if !v.is_zero() {
                    out.push((*sc, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// A row space maintained in echelon form.
///
/// With `reduced = true` the basis is the unique reduced row echelon form
/// (pivot coefficient 1, pivot column eliminated from every other row), so
/// two spans are equal iff the structures are equal. With `reduced = false`
/// only forward elimination is performed; membership tests and
/// `reduce`-based normal forms are still canonical, which is what the large
/// graded components use.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<K> {
    dim: usize,
    reduced: bool,
    rows: BTreeMap<u32, SparseVec<K>>,
}

impl<K: Field> Echelon<K> {
    pub fn new(dim: usize, reduced: bool) -> Self {
        Echelon {
            dim,
            reduced,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_rows(dim: usize, rows: impl IntoIterator<Item = SparseVec<K>>, reduced: bool) -> Self {
        let mut e = Self::new(dim, reduced);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.keys().copied()
    }

    /// Rows in ascending pivot-column order, pivot coefficient 1.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> + '_ {
        self.rows.values()
    }

    /// Fully reduce `v` against the stored pivot rows. The result has no
    /// support on pivot columns and is the canonical representative of
    /// `v + span`.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut i = 0;
        while i < v.len() {
            let col = v[i].0;
            match self.rows.get(&col) {
                Some(prow) => {
                    let c = -v[i].1.clone();
                    // prow's minimum column is `col`, so entries of v below
                    // index i are untouched and the entry at `col` cancels.
                    v = axpy(&v, &c, prow);
                }
                None => i += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Insert a vector; returns true when the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let v = if self.reduced {
            self.reduce(v)
        } else {
            self.forward_reduce(v)
        };
        let Some((lead, lc)) = v.first().cloned() else {
            return false;
        };
        let lc_inv = lc.inv().expect("leading coefficient is nonzero");
        let row: SparseVec<K> = v
            .into_iter()
            .map(|(c, x)| (c, x * lc_inv.clone()))
            .collect();
        if self.reduced {
            let keys: Vec<u32> = self.rows.keys().copied().collect();
            for k in keys {
                let existing = &self.rows[&k];
                if let Some(idx) = existing.iter().position(|(c, _)| *c == lead) {
                    let coef = -existing[idx].1.clone();
                    let updated = axpy(existing, &coef, &row);
                    self.rows.insert(k, updated);
                }
            }
        }
        self.rows.insert(lead, row);
        true
    }

    /// Eliminate only leading entries (forward elimination).
    fn forward_reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        while let Some((lead, c)) = v.first().cloned() {
            match self.rows.get(&lead) {
                Some(prow) => {
                    let c = -c;
                    v = axpy(&v, &c, prow);
                }
                None => break,
            }
        }
        v
    }

    /// Columns without a pivot, ascending.
    pub fn non_pivot_cols(&self) -> Vec<u32> {
        (0..self.dim as u32)
            .filter(|c| !self.rows.contains_key(c))
            .collect()
    }

    /// A reduced-echelon basis of the orthogonal complement under the
    /// standard dot pairing. Requires `reduced = true`.
    pub fn nullspace(&self) -> Vec<SparseVec<K>> {
        assert!(self.reduced, "nullspace needs the reduced form");
        self.non_pivot_cols()
            .into_iter()
            .map(|w| {
                let mut v: SparseVec<K> = vec![(w, K::one())];
                for (p, row) in &self.rows {
                    if let Some((_, c)) = row.iter().find(|(col, _)| *col == w) {
                        v.push((*p, -c.clone()));
                    }
                }
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }

    /// Span equality through mutual containment (works in either mode).
    pub fn same_span(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.rank() == other.rank()
            && self.rows().all(|r| other.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn v(entries: &[(u32, i64)]) -> SparseVec<Rational> {
        entries.iter().map(|&(c, x)| (c, Rational::from(x))).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = Echelon::from_rows(4, vec![v(&[(0, 1), (1, 2)]), v(&[(1, 1), (3, 1)])], true);
        let b = Echelon::from_rows(
            4,
            vec![v(&[(0, 2), (1, 4)]), v(&[(0, 1), (1, 3), (3, 1)])],
            true,
        );
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert!(a.contains(&v(&[(0, 3), (1, 6)])));
        assert!(!a.contains(&v(&[(0, 1)])));
    }

    #[test]
    fn reduce_gives_canonical_representative() {
        let e = Echelon::from_rows(3, vec![v(&[(0, 1), (2, -1)])], false);
        let r = e.reduce(v(&[(0, 2), (1, 1)]));
        assert_eq!(r, v(&[(1, 1), (2, 2)]));
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let e = Echelon::from_rows(3, vec![v(&[(0, 1), (1, -1)])], true);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for nv in &ns {
            for row in e.rows() {
                let mut dot = Rational::from(0);
                for (c, x) in nv {
                    if let Some((_, y)) = row.iter().find(|(rc, _)| rc == c) {
                        dot = dot + x.clone() * y.clone();
                    }
                }
                assert!(num_traits::Zero::is_zero(&dot));
            }
        }
    }

    #[test]
    fn same_span_in_ref_mode() {
        let a = Echelon::from_rows(4, vec![v(&[(0, 1), (3, 1)]), v(&[(1, 1)])], false);
        let b = Echelon::from_rows(4, vec![v(&[(0, 2), (1, 2), (3, 2)]), v(&[(1, 3)])], false);
        assert!(a.same_span(&b));
    }
}
