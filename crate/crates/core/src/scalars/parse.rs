//! Recursive-descent parser for the shared scalar grammar.

use super::{QPoly, RatFunc, Rational, ScalarError};
use num_bigint::BigInt;
use num_traits::One;

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), ScalarError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            _ => Err(self.error(&format!("expected `{}`", c as char))),
        }
    }

    fn error(&self, msg: &str) -> ScalarError {
        ScalarError::Parse(format!("{msg} at byte {} of `{}`", self.pos, self.src))
    }

    fn parse_uint(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        self.src[start..self.pos]
            .parse::<BigInt>()
            .map_err(|e| self.error(&e.to_string()))
    }

    fn parse_sint(&mut self) -> Result<BigInt, ScalarError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.parse_uint()?;
        Ok(if neg { -n } else { n })
    }

    /// factor := number | 'q' ('^' sint)?
    fn parse_factor(&mut self) -> Result<RatFunc, ScalarError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let e = self.parse_sint()?;
                    let e: i64 = (&e)
                        .try_into()
                        .map_err(|_| self.error("exponent out of range"))?;
                    Ok(RatFunc::q_pow(e))
                } else {
                    Ok(RatFunc::q())
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint()?;
                let den = if self.peek() == Some(b'/') {
                    // Lookahead: only treat `/` as a coefficient slash when a
                    // digit follows (a `(` would belong to the ratio form).
                    let save = self.pos;
                    self.pos += 1;
                    if matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                        self.parse_uint()?
                    } else {
                        self.pos = save;
                        BigInt::one()
                    }
                } else {
                    BigInt::one()
                };
                let r = Rational::from_bigint(num, den).map_err(|_| self.error("zero denominator"))?;
                Ok(RatFunc::from_poly(QPoly::constant(r)))
            }
            _ => Err(self.error("expected a coefficient or q-power")),
        }
    }

    /// term := factor ('*' factor)*
    fn parse_term(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.parse_factor()?;
        }
        Ok(acc)
    }

    /// expr := ['-'] term (('+'|'-') term)*
    fn parse_expr(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            -self.parse_term()?
        } else {
            self.parse_term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.parse_term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.parse_term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// Top level: `(expr)/(expr)` or a plain expr.
    fn parse_scalar(&mut self) -> Result<RatFunc, ScalarError> {
        let v = if self.peek() == Some(b'(') {
            self.pos += 1;
            let num = self.parse_expr()?;
            self.expect(b')')?;
            self.expect(b'/')?;
            self.expect(b'(')?;
            let den = self.parse_expr()?;
            self.expect(b')')?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            num * den.inv_unchecked()
        } else {
            self.parse_expr()?
        };
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.error("trailing input"));
        }
        Ok(v)
    }
}

impl RatFunc {
    fn inv_unchecked(self) -> RatFunc {
        use super::Field;
        self.inv().expect("checked nonzero")
    }
}

pub fn parse_ratfunc(s: &str) -> Result<RatFunc, ScalarError> {
    Cursor::new(s).parse_scalar()
}
