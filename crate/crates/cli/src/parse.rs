//! Recursive-descent parser for scalar literals.
//!
//! Grammar (precedence `^` > unary `-` > `* /` > binary `+ -`):
//!
//! ```text
//! rational   := expr                      -- `t` not allowed
//! ratfunc    := expr                      -- over `t`
//! quaternion := '[' expr ',' expr ',' expr ',' expr ']'
//! expr       := term (('+'|'-') term)*
//! term       := unary (('*'|'/') unary)*
//! unary      := '-' unary | power
//! power      := atom ('^' integer)?
//! atom       := integer | 't' | '(' expr ')'
//! ```
//!
//! Expressions evaluate exactly in Q(t); the rational and quaternion
//! domains reject the variable and read off the constant. Parsing is the
//! inverse of canonical serialization up to normalization.

use std::fmt;
use std::str::FromStr;

use orebit_core::algebra::{Domain, Quaternion, RatFunc, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the literal.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses a literal in the given domain into a canonical scalar.
pub fn parse_scalar(domain: Domain, text: &str) -> Result<Scalar, ParseError> {
    let mut p = Parser::new(text, domain == Domain::RatFunc);
    let value = match domain {
        Domain::Quaternion => {
            let q = p.quaternion()?;
            Scalar::Quaternion(q)
        }
        _ => {
            let v = p.expr()?;
            match domain {
                Domain::RatFunc => Scalar::RatFunc(v),
                Domain::Rational => Scalar::Rational(constant_of(&v, 0)?),
                Domain::Quaternion => unreachable!(),
            }
        }
    };
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Extracts the constant value of a `t`-free rational function.
fn constant_of(v: &RatFunc, position: usize) -> Result<Rational, ParseError> {
    use num_traits::Zero;
    if !v.denominator().is_one() || v.numerator().degree().map_or(false, |d| d > 0) {
        // unreachable through `parse_scalar`: `t` is rejected at the atom
        // level in constant contexts
        return Err(ParseError {
            position,
            message: "expected a constant".into(),
        });
    }
    Ok(v.numerator()
        .coeffs()
        .first()
        .cloned()
        .unwrap_or_else(Rational::zero))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allow_var: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, allow_var: bool) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            allow_var,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos) == Some(&b' ') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn quaternion(&mut self) -> Result<Quaternion, ParseError> {
        self.expect(b'[')?;
        let mut parts = Vec::with_capacity(4);
        for i in 0..4 {
            if i > 0 {
                self.expect(b',')?;
            }
            let at = self.pos;
            let v = self.expr()?;
            parts.push(constant_of(&v, at)?);
        }
        self.expect(b']')?;
        let mut it = parts.into_iter();
        Ok(Quaternion::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ))
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos - 1;
                let rhs = self.unary()?;
                let inv = rhs.inv().map_err(|_| ParseError {
                    position: at,
                    message: "division by zero".into(),
                })?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ParseError> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let exp = self.natural()?;
            let exp: u32 = exp.try_into().map_err(|_| ParseError {
                position: at,
                message: "exponent too large".into(),
            })?;
            let mut acc = RatFunc::one();
            for _ in 0..exp {
                acc = &acc * &base;
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b't') => {
                if !self.allow_var {
                    return Err(self.error("the variable 't' is not allowed here"));
                }
                self.pos += 1;
                Ok(RatFunc::var())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.natural()?;
                Ok(RatFunc::from_rational(Rational::from_integer(n)))
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn natural(&mut self) -> Result<num_bigint::BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(num_bigint::BigInt::from_str(digits).expect("digit string"))
    }
}

/// Parses a serialized polynomial: coefficient literals, index = power of x.
pub fn parse_poly_literals(
    domain: Domain,
    literals: &[String],
) -> Result<Vec<Scalar>, ParseError> {
    literals
        .iter()
        .map(|text| parse_scalar(domain, text))
        .collect()
}
