//! Dense univariate polynomials over ℚ, the building block for ℚ(q).

use super::{Rational, ScalarError};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in q with rational coefficients, stored in ascending degree
/// order. Canonical form: the coefficient vector is empty for zero and has a
/// nonzero last entry otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    pub(crate) coeffs: Vec<Rational>,
}

impl QPoly {
    fn trim(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Rational::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self::trim(coeffs)
    }

    pub fn constant(c: Rational) -> Self {
        Self::trim(vec![c])
    }

    /// The monomial c·q^d.
    pub fn monomial(c: Rational, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        QPoly { coeffs }
    }

    /// The variable q.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// True when the polynomial is c·q^d for a single d (and nonzero).
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Divide every coefficient so the leading coefficient becomes 1.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => {
                let inv = Rational(lc.0.recip());
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly), ScalarError> {
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let lc_inv = Rational(d.leading_coeff().unwrap().0.recip());
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().clone() * lc_inv.clone();
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].clone() - factor.clone() * dc.clone();
                }
                quo[k] = factor;
            }
            rem.pop();
            while rem.last().map_or(false, Rational::is_zero) {
                rem.pop();
            }
            if rem.len() < dd + 1 {
                break;
            }
        }
        Ok((QPoly::trim(quo), QPoly::trim(rem)))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Nonzero (coefficient, exponent) pairs in descending exponent order,
    /// with exponents shifted down by `shift` (Laurent printing support).
    fn signed_terms(&self, shift: i64) -> Vec<(Rational, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (c.clone(), e as i64 - shift))
            .collect()
    }

    /// Grammar rendering with exponents shifted by `shift` (used to print a
    /// Laurent polynomial p/q^shift without a fraction).
    pub(crate) fn render(&self, shift: i64) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (c, e)) in self.signed_terms(shift).into_iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if e == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&format!("q^{e}"));
            } else {
                out.push_str(&format!("{a}*q^{e}"));
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(0))
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            coeffs.push(a + b);
        }
        QPoly::trim(coeffs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        self + (-rhs)
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        QPoly::trim(coeffs)
    }
}

impl Zero for QPoly {
    fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPoly {
    fn one() -> Self {
        QPoly::constant(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}
