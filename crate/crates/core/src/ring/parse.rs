//! Reading and printing polynomials in the variable names of a [`CoxRing`].
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor | '/' integer)*
//! factor := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

use super::{CoxRing, PolyRing, Polynomial};

struct Parser<'a> {
    ring: &'a CoxRing,
    pr: PolyRing,
    src: &'a [u8],
    pos: usize,
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
            position: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small_exponent(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Syntax {
            position: start,
            message: "exponent too large".into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let t = self.term()?;
                self.pr.neg(&t)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.pr.add(&acc, &t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.pr.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.pr.mul(&acc, &f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.integer()?;
                    let q = BigRational::new(BigInt::one(), d);
                    let c = self.pr.field.from_rational(&q).map_err(|_| Error::Syntax {
                        position: at,
                        message: "division by a value that is zero in the field".into(),
                    })?;
                    acc = self.pr.scale(&acc, &c);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.small_exponent()?;
            return Ok(self.pr.pow(&base, k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.pr.constant(self.pr.field.from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.ring.var(name).ok_or_else(|| Error::UnknownVariable {
                    name: name.to_string(),
                    position: start,
                })
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses a polynomial written in the ring's variable names.
pub fn parse_polynomial(ring: &CoxRing, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        pr: ring.poly_ring(),
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

/// Prints a polynomial so that [`parse_polynomial`] reads it back.
pub fn format_polynomial(ring: &CoxRing, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in f.terms().iter().enumerate() {
        let q = c.to_rational_repr();
        let neg = q.is_negative();
        let a = q.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !a.is_one() || m.is_one() {
            factors.push(a.numer().to_string());
        }
        for v in m.support() {
            let e = m.exp(v);
            factors.push(if e == 1 {
                ring.names()[v].clone()
            } else {
                format!("{}^{e}", ring.names()[v])
            });
        }
        out.push_str(&factors.join("*"));
        if !a.denom().is_one() {
            out.push_str(&format!("/{}", a.denom()));
        }
    }
    out
}
