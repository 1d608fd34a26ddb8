//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' nonneg-integer)?
//! base   := integer | identifier | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit: `gj` is one identifier, not `g*j`.
//! `^` binds tighter than `*` and unary minus, so `-a^2` is `-(a^2)`.
//! Whitespace is insignificant.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// Parses `text` into a polynomial over `ring`.
///
/// ```
/// use completion_kit::{parse, RingSpec};
///
/// let ring = RingSpec::new(["a", "b", "c", "d"]).unwrap();
/// let p = parse("a*d - b*c", &ring).unwrap();
/// assert_eq!(p.to_string(), "a*d - b*c");
/// assert!(parse("a + e", &ring).is_err());
/// ```
pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.unexpected());
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn unexpected(&mut self) -> Error {
        match self.peek() {
            None => self.error("unexpected end of input"),
            Some(_) => {
                let ch = std::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or('?');
                self.error(format!("unexpected character `{ch}`"))
            }
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let start = self.digits_start();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a non-negative integer exponent"));
            }
            let exponent: u32 = digits.parse().map_err(|_| Error::Syntax {
                offset: start,
                message: format!("exponent `{digits}` is too large"),
            })?;
            return Ok(base.pow(exponent));
        }
        Ok(base)
    }

    fn digits_start(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn digits(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(match self.peek() {
                        None => self.error("expected `)`"),
                        Some(_) => self.unexpected(),
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let value: BigInt = self.digits().parse().expect("ascii digits");
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.ring.var(name)
            }
            _ => Err(self.unexpected()),
        }
    }
}
