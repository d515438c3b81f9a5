//! The rational-function field ℚ(q).

use super::{Field, FactorRepr, QPoly, Rational, ScalarError};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of ℚ(q) as a reduced fraction of polynomials.
///
/// Canonical form: numerator and denominator coprime, denominator monic and
/// nonzero; zero is 0/1. Equality of canonical forms decides mathematical
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    /// Build and normalize num/den. `DivisionByZero` when den = 0.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g).expect("gcd divides");
        let (den, _) = den.div_rem(&g).expect("gcd divides");
        // Make the denominator monic, folding its leading coefficient into
        // the numerator.
        let lc = den.leading_coeff().expect("nonzero").clone();
        let lc_inv = Rational(lc.0.recip());
        RatFunc {
            num: num.scale(&lc_inv),
            den: den.monic(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    /// The variable q.
    pub fn q() -> Self {
        Self::from_poly(QPoly::q())
    }

    /// q^e for any integer e (negative exponents allowed).
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(QPoly::monomial(Rational::one(), e as usize))
        } else {
            RatFunc {
                num: QPoly::one(),
                den: QPoly::monomial(Rational::one(), (-e) as usize),
            }
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// The evaluation homomorphism at q = q0. `PoleAtPoint` when the
    /// (reduced) denominator vanishes there.
    pub fn specialize(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint);
        }
        let n = self.num.eval(q0);
        Ok(n * Rational(d.0.recip()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.render(0))
        } else if self.den.is_monomial() {
            // Monic monomial denominator q^k: print as a Laurent polynomial.
            write!(f, "{}", self.num.render(self.den.degree().unwrap() as i64))
        } else {
            write!(f, "({})/({})", self.num.render(0), self.den.render(0))
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        RatFunc::normalized(
            self.num.clone() * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::normalized(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_poly(QPoly::constant(Rational::from(n)))
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    fn from_int(n: i64) -> Self {
        RatFunc::from(n)
    }

    fn from_rational(r: &Rational) -> Self {
        RatFunc::from_poly(QPoly::constant(r.clone()))
    }

    fn parse(s: &str) -> Result<Self, ScalarError> {
        super::parse::parse_ratfunc(s)
    }

    fn factor_repr(&self) -> FactorRepr {
        // A single Laurent monomial c*q^e prints inline; anything else is
        // parenthesized.
        if self.den.is_one() || self.den.is_monomial() {
            if self.num.is_monomial() {
                let e = self.num.degree().unwrap() as i64
                    - self.den.degree().unwrap_or(0) as i64;
                let c = self.num.leading_coeff().unwrap();
                let neg = c.is_negative();
                let a = c.abs();
                let body = match (a.is_one(), e) {
                    (true, 0) => None,
                    (true, _) => Some(format!("q^{e}")),
                    (false, 0) => Some(a.to_string()),
                    (false, _) => Some(format!("{a}*q^{e}")),
                };
                return FactorRepr { neg, body };
            }
        }
        FactorRepr {
            neg: false,
            body: Some(format!("({self})")),
        }
    }
}
