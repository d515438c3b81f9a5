//! Exact coefficient fields: the rationals ℚ and the rational-function
//! field ℚ(q) in one variable.
//!
//! Everything downstream (tensors, quadratic algebras, FRT bialgebras) is
//! generic over the [`Field`] trait, so the same code runs fully symbolic
//! over [`RatFunc`] or specialized at a rational value of q over
//! [`Rational`]. All arithmetic is exact and all representations are
//! canonical: two values are equal iff their representations are equal.
//!
//! Scalars have a textual form shared by every interchange document:
//!
//! ```text
//! expr  := term (('+'|'-') term)*
//! term  := coeff ('*' 'q^' int)? | 'q^' int
//! coeff := int ('/' posint)?
//! ```
//!
//! with an optional top-level `(expr)/(expr)` for rational functions, e.g.
//! `"3/2"`, `"q^2 - 1"`, `"(q^2-1)/(q)"`. Printing and parsing round-trip.

mod parse;
mod poly;
mod ratfunc;
mod rational;

pub use poly::QPoly;
pub use ratfunc::RatFunc;
pub use rational::Rational;

use num_traits::{One, Zero};
use std::fmt;

/// Errors produced by scalar construction, arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Inverting zero (or dividing by zero).
    DivisionByZero,
    /// Evaluating a rational function at a zero of its denominator.
    PoleAtPoint,
    /// The input string is not in the scalar grammar.
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::PoleAtPoint => write!(f, "denominator vanishes at the evaluation point"),
            ScalarError::Parse(msg) => write!(f, "scalar parse error: {msg}"),
        }
    }
}

impl std::error::Error for ScalarError {}

/// How a scalar renders when used as a multiplicative factor in front of a
/// monomial (for noncommutative-polynomial printing).
pub struct FactorRepr {
    /// True when the factor should be absorbed into a leading minus sign.
    pub neg: bool,
    /// `None` when the remaining factor is 1 and can be omitted entirely.
    pub body: Option<String>,
}

/// An exact field with canonical representatives.
///
/// Implementors must guarantee that `==` decides mathematical equality,
/// which holds for [`Rational`] and [`RatFunc`] because both normalize on
/// every operation.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
    /// Multiplicative inverse; `DivisionByZero` on zero.
    fn inv(&self) -> Result<Self, ScalarError>;

    /// The image of an integer under the unique ring map ℤ → K.
    fn from_int(n: i64) -> Self;

    /// The image of a rational number under ℚ → K.
    fn from_rational(r: &Rational) -> Self;

    /// Parse from the shared scalar grammar.
    fn parse(s: &str) -> Result<Self, ScalarError>;

    /// Rendering as a signed factor for polynomial printing.
    fn factor_repr(&self) -> FactorRepr {
        FactorRepr {
            neg: false,
            body: Some(format!("({self})")),
        }
    }

    /// Integer power, with negative exponents through `inv`.
    fn pow_int(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        Ok(acc)
    }

    /// `a / b`, erroring on zero divisor.
    fn div(&self, b: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * b.inv()?)
    }
}

#[cfg(test)]
mod tests;
