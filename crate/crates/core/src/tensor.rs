//! Endomorphisms of V⊗V and V⊗V⊗V in sparse coefficient form, with
//! leg placement and the quantum Yang-Baxter residual.
//!
//! Index convention (the single authority for the whole crate): upper
//! indices are outputs, lower indices are inputs, 1-based, so a tensor R
//! acts by R(x_k⊗x_l) = Σ R^{ij}_{kl} x_i⊗x_j and an entry is keyed
//! (i, j, k, l).

use crate::scalars::Field;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Largest supported dimension of V. The QYBE residual costs O(n^9) exact
/// multiplications, which bounds feasible sizes.
pub const MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorError {
    /// Dimension of V outside 2..=MAX_DIM.
    DimensionCap(usize),
    /// Two tensors over different V.
    DimensionMismatch(usize, usize),
    /// A 1-based index outside 1..=n.
    IndexOutOfRange(usize),
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::DimensionCap(n) => {
                write!(f, "dimension {n} exceeds the supported cap {MAX_DIM}")
            }
            TensorError::DimensionMismatch(a, b) => write!(f, "dimension mismatch: {a} vs {b}"),
            TensorError::IndexOutOfRange(i) => write!(f, "index {i} out of range"),
        }
    }
}

impl std::error::Error for TensorError {}

/// Which two tensor legs of V⊗V⊗V an End(V⊗V) element acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Legs {
    OneTwo,
    OneThree,
    TwoThree,
}

/// An element of End(V⊗V): sparse map (i,j,k,l) → coefficient R^{ij}_{kl},
/// absent keys meaning zero and stored coefficients always nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct EndTensor<K> {
    n: usize,
    coeffs: BTreeMap<[u8; 4], K>,
}

/// An element of End(V⊗V⊗V), keyed (i,j,k | u,v,w).
#[derive(Debug, Clone, PartialEq)]
pub struct EndTensor3<K> {
    n: usize,
    coeffs: BTreeMap<[u8; 6], K>,
}

fn check_dim(n: usize) -> Result<(), TensorError> {
    if n < 2 || n > MAX_DIM {
        Err(TensorError::DimensionCap(n))
    } else {
        Ok(())
    }
}

impl<K: Field> EndTensor<K> {
    pub fn zero(n: usize) -> Result<Self, TensorError> {
        check_dim(n)?;
        Ok(EndTensor {
            n,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn identity(n: usize) -> Result<Self, TensorError> {
        let mut t = Self::zero(n)?;
        for i in 1..=n {
            for j in 1..=n {
                t.add_to(i, j, i, j, K::one());
            }
        }
        Ok(t)
    }

    /// The flip τ(x_k⊗x_l) = x_l⊗x_k.
    pub fn flip(n: usize) -> Result<Self, TensorError> {
        let mut t = Self::zero(n)?;
        for k in 1..=n {
            for l in 1..=n {
                t.add_to(l, k, k, l, K::one());
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> K {
        self.coeffs
            .get(&[i as u8, j as u8, k as u8, l as u8])
            .cloned()
            .unwrap_or_else(K::zero)
    }

    /// Add `value` to the (i,j,k,l) coefficient, keeping sparse canonical
    /// form (zeros are removed).
    pub fn add_to(&mut self, i: usize, j: usize, k: usize, l: usize, value: K) {
        if value.is_zero() {
            return;
        }
        let key = [i as u8, j as u8, k as u8, l as u8];
        let entry = self.coeffs.remove(&key);
        let v = match entry {
            Some(old) => old + value,
            None => value,
        };
        if !v.is_zero() {
            self.coeffs.insert(key, v);
        }
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: K) -> Result<(), TensorError> {
        for idx in [i, j, k, l] {
            if idx < 1 || idx > self.n {
                return Err(TensorError::IndexOutOfRange(idx));
            }
        }
        let key = [i as u8, j as u8, k as u8, l as u8];
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
        Ok(())
    }

    /// Entries in deterministic (i,j,k,l) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize, &K)> + '_ {
        self.coeffs.iter().map(|(k, v)| {
            (
                k[0] as usize,
                k[1] as usize,
                k[2] as usize,
                k[3] as usize,
                v,
            )
        })
    }

    /// The nonzero coefficients of R(x_k⊗x_l), as (i, j, coefficient).
    pub fn act(&self, k: usize, l: usize) -> Result<Vec<(usize, usize, K)>, TensorError> {
        if k < 1 || k > self.n {
            return Err(TensorError::IndexOutOfRange(k));
        }
        if l < 1 || l > self.n {
            return Err(TensorError::IndexOutOfRange(l));
        }
        Ok(self
            .entries()
            .filter(|&(_, _, kk, ll, _)| kk == k && ll == l)
            .map(|(i, j, _, _, v)| (i, j, v.clone()))
            .collect())
    }

    /// Embed into End(V⊗3) acting on the given legs, identity elsewhere.
    pub fn place(&self, legs: Legs) -> EndTensor3<K> {
        let mut out = EndTensor3 {
            n: self.n,
            coeffs: BTreeMap::new(),
        };
        for (i, j, k, l, v) in self.entries() {
            for m in 1..=self.n {
                let (upper, lower) = match legs {
                    Legs::OneTwo => ([i, j, m], [k, l, m]),
                    Legs::OneThree => ([i, m, j], [k, m, l]),
                    Legs::TwoThree => ([m, i, j], [m, k, l]),
                };
                out.add_to(upper, lower, v.clone());
            }
        }
        out
    }

    /// R¹²R¹³R²³ − R²³R¹³R¹²; zero exactly when R solves the QYBE.
    pub fn qybe_residual(&self) -> EndTensor3<K> {
        let r12 = self.place(Legs::OneTwo);
        let r13 = self.place(Legs::OneThree);
        let r23 = self.place(Legs::TwoThree);
        let lhs = r12.compose(&r13).unwrap().compose(&r23).unwrap();
        let rhs = r23.compose(&r13).unwrap().compose(&r12).unwrap();
        lhs.sub(&rhs).unwrap()
    }

    pub fn map<L: Field, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<L, E>,
    ) -> Result<EndTensor<L>, E> {
        let mut coeffs = BTreeMap::new();
        for (key, v) in &self.coeffs {
            let w = f(v)?;
            if !w.is_zero() {
                coeffs.insert(*key, w);
            }
        }
        Ok(EndTensor { n: self.n, coeffs })
    }
}

impl<K: Field> EndTensor3<K> {
    pub fn zero(n: usize) -> Result<Self, TensorError> {
        check_dim(n)?;
        Ok(EndTensor3 {
            n,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn identity(n: usize) -> Result<Self, TensorError> {
        let mut t = Self::zero(n)?;
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    t.add_to([a, b, c], [a, b, c], K::one());
                }
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, upper: [usize; 3], lower: [usize; 3]) -> K {
        let key = [
            upper[0] as u8,
            upper[1] as u8,
            upper[2] as u8,
            lower[0] as u8,
            lower[1] as u8,
            lower[2] as u8,
        ];
        self.coeffs.get(&key).cloned().unwrap_or_else(K::zero)
    }

    pub fn add_to(&mut self, upper: [usize; 3], lower: [usize; 3], value: K) {
        if value.is_zero() {
            return;
        }
        let key = [
            upper[0] as u8,
            upper[1] as u8,
            upper[2] as u8,
            lower[0] as u8,
            lower[1] as u8,
            lower[2] as u8,
        ];
        let v = match self.coeffs.remove(&key) {
            Some(old) => old + value,
            None => value,
        };
        if !v.is_zero() {
            self.coeffs.insert(key, v);
        }
    }

    /// Exact composition self∘other (matrix product in End(V⊗3)).
    pub fn compose(&self, other: &Self) -> Result<Self, TensorError> {
        if self.n != other.n {
            return Err(TensorError::DimensionMismatch(self.n, other.n));
        }
        // Group the right factor's entries by output triple for the
        // contraction over the middle index.
        let mut by_upper: BTreeMap<[u8; 3], Vec<(&[u8; 6], &K)>> = BTreeMap::new();
        for (key, v) in &other.coeffs {
            by_upper
                .entry([key[0], key[1], key[2]])
                .or_default()
                .push((key, v));
        }
        let mut out = EndTensor3 {
            n: self.n,
            coeffs: BTreeMap::new(),
        };
        for (akey, av) in &self.coeffs {
            let mid = [akey[3], akey[4], akey[5]];
            if let Some(matches) = by_upper.get(&mid) {
                for (bkey, bv) in matches {
                    out.add_to(
                        [akey[0] as usize, akey[1] as usize, akey[2] as usize],
                        [bkey[3] as usize, bkey[4] as usize, bkey[5] as usize],
                        av.clone() * (*bv).clone(),
                    );
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TensorError> {
        if self.n != other.n {
            return Err(TensorError::DimensionMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (key, v) in &other.coeffs {
            out.add_to(
                [key[0] as usize, key[1] as usize, key[2] as usize],
                [key[3] as usize, key[4] as usize, key[5] as usize],
                -v.clone(),
            );
        }
        Ok(out)
    }

    /// Nonzero entries count, for residual reports.
    pub fn nonzero_count(&self) -> usize {
        self.coeffs.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RatFunc, Rational};
    use crate::twist::classical_rq;
    use num_traits::One;

    fn rq2() -> EndTensor<RatFunc> {
        classical_rq(2, &RatFunc::q()).unwrap()
    }

    #[test]
    fn act_on_classical_rq() {
        let r = rq2();
        let q = RatFunc::q();
        let qmq = q.clone() - RatFunc::q_pow(-1);
        assert_eq!(r.act(1, 2).unwrap(), vec![(1, 2, RatFunc::one())]);
        assert_eq!(
            r.act(2, 1).unwrap(),
            vec![(1, 2, qmq), (2, 1, RatFunc::one())]
        );
        assert_eq!(r.act(1, 1).unwrap(), vec![(1, 1, q)]);
        assert!(r.act(0, 1).is_err());
        assert!(r.act(1, 3).is_err());
    }

    #[test]
    fn place_identity_and_flip() {
        let id = EndTensor::<Rational>::identity(2).unwrap();
        assert_eq!(id.place(Legs::OneTwo), EndTensor3::identity(2).unwrap());

        // flip on legs 2,3 sends v1⊗v1⊗v2 to v1⊗v2⊗v1.
        let tau = EndTensor::<Rational>::flip(2).unwrap();
        let p = tau.place(Legs::TwoThree);
        assert_eq!(p.get([1, 2, 1], [1, 1, 2]), Rational::from(1));
        assert_eq!(p.get([1, 1, 2], [1, 1, 2]), Rational::from(0));
    }

    #[test]
    fn place_rq_on_outer_legs() {
        // R_q on legs 1,3 applied to v2⊗v1⊗v1: coefficient q - q^-1 on
        // v1⊗v1⊗v2 plus 1 on v2⊗v1⊗v1.
        let p = rq2().place(Legs::OneThree);
        let qmq = RatFunc::q() - RatFunc::q_pow(-1);
        assert_eq!(p.get([1, 1, 2], [2, 1, 1]), qmq);
        assert_eq!(p.get([2, 1, 1], [2, 1, 1]), RatFunc::one());
    }

    #[test]
    fn compose_basics() {
        let n = 3;
        let id = EndTensor3::<Rational>::identity(n).unwrap();
        let tau12 = EndTensor::<Rational>::flip(n).unwrap().place(Legs::OneTwo);
        assert_eq!(id.compose(&tau12).unwrap(), tau12);
        assert_eq!(tau12.compose(&tau12).unwrap(), id);

        // Two sparse single-entry tensors compose to a single entry with
        // multiplied coefficient.
        let mut a = EndTensor3::<Rational>::zero(2).unwrap();
        a.add_to([1, 1, 2], [2, 1, 1], Rational::from(3));
        let mut b = EndTensor3::<Rational>::zero(2).unwrap();
        b.add_to([2, 1, 1], [1, 2, 2], Rational::from(5));
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.len(), 1);
        assert_eq!(ab.get([1, 1, 2], [1, 2, 2]), Rational::from(15));

        let wrong = EndTensor3::<Rational>::identity(2).unwrap();
        assert!(matches!(
            id.compose(&wrong),
            Err(TensorError::DimensionMismatch(3, 2))
        ));
    }

    #[test]
    fn qybe_residual_trivial_solutions() {
        assert!(EndTensor::<Rational>::identity(3)
            .unwrap()
            .qybe_residual()
            .is_zero());
        assert!(EndTensor::<Rational>::flip(3)
            .unwrap()
            .qybe_residual()
            .is_zero());
    }

    #[test]
    fn qybe_residual_classical_rq_symbolic() {
        assert!(rq2().qybe_residual().is_zero());
    }

    #[test]
    fn place_respects_composition() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(42);
        for legs in [Legs::OneTwo, Legs::OneThree, Legs::TwoThree] {
            let n = 3;
            let mut a = EndTensor::<Rational>::zero(n).unwrap();
            let mut b = EndTensor::<Rational>::zero(n).unwrap();
            for _ in 0..6 {
                a.add_to(
                    rng.gen_range(1..=n),
                    rng.gen_range(1..=n),
                    rng.gen_range(1..=n),
                    rng.gen_range(1..=n),
                    Rational::from(rng.gen_range(-3..=3)),
                );
                b.add_to(
                    rng.gen_range(1..=n),
                    rng.gen_range(1..=n),
                    rng.gen_range(1..=n),
                    rng.gen_range(1..=n),
                    Rational::from(rng.gen_range(-3..=3)),
                );
            }
            // compose A and B as End(V⊗2) by embedding on legs 1,2 of a
            // 3-fold space and composing there against the direct embedding.
            let ab2 = {
                // direct 2-leg composition via the 12-placement trick
                let pa = a.place(legs);
                let pb = b.place(legs);
                pa.compose(&pb).unwrap()
            };
            // (A∘B) computed on legs: first compute A∘B as EndTensor via
            // entries contraction.
            let mut ab = EndTensor::<Rational>::zero(n).unwrap();
            for (i, j, k, l, v) in a.entries() {
                for (kk, ll, u, w, x) in b.entries() {
                    if (k, l) == (kk, ll) {
                        ab.add_to(i, j, u, w, v.clone() * x.clone());
                    }
                }
            }
            assert_eq!(ab.place(legs), ab2);
        }
    }

    #[test]
    fn dimension_cap_enforced() {
        assert!(EndTensor::<Rational>::zero(9).is_err());
        assert!(EndTensor::<Rational>::zero(1).is_err());
        assert!(EndTensor::<Rational>::zero(8).is_ok());
    }
}
