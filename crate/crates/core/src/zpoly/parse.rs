//! Text grammar for polynomials:
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor (['*'] factor)*
//! factor := integer | 'z' index ['^' integer] | '(' poly ')'
//! ```
//!
//! Whitespace and the TeX thin space `\,` are ignored. Parentheses may not be
//! nested; a parenthesized sum is expanded into the surrounding product.

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, ZPolynomial};
use crate::error::{Error, Result};

pub fn parse_poly(text: &str, rank: usize) -> Result<ZPolynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        rank,
        depth: 0,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: usize,
    depth: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        let found = match self.src.get(self.pos) {
            Some(&b) => format!("{message} `{}`", b as char),
            None => format!("{message} (end of input)"),
        };
        Error::Syntax {
            offset: self.pos,
            message: found,
        }
    }

    fn skip_ws(&mut self) {
        loop {
            match self.src.get(self.pos) {
                Some(b' ' | b'\t' | b'\n' | b'\r') => self.pos += 1,
                Some(b'\\') if self.src.get(self.pos + 1) == Some(&b',') => self.pos += 2,
                _ => break,
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<ZPolynomial> {
        let mut acc = ZPolynomial::zero(self.rank);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc = acc.sub(&t)?;
            } else {
                acc.add_assign_unchecked(&t);
            }
            sign = match self.peek() {
                Some(b'-') => -1,
                Some(b'+') => 1,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<ZPolynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul_unchecked(&f);
                }
                Some(b'0'..=b'9' | b'z' | b'(') => {
                    let f = self.factor()?;
                    acc = acc.mul_unchecked(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ZPolynomial> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let c = self.integer()?;
                Ok(ZPolynomial::constant(self.rank, c))
            }
            Some(b'z') => {
                let start = self.pos;
                self.pos += 1;
                let digits = self.digits();
                if digits.is_empty() {
                    return Err(self.error("expected variable index after `z`"));
                }
                let index: usize = digits.parse().map_err(|_| self.error("bad variable index"))?;
                if index == 0 || index > self.rank {
                    return Err(Error::Syntax {
                        offset: start,
                        message: format!("variable z{index} out of range for rank {}", self.rank),
                    });
                }
                let mut exp = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.digits();
                    exp = e.parse().map_err(|_| self.error("expected exponent"))?;
                }
                let mut exps = vec![0u32; self.rank];
                exps[index - 1] = exp;
                Ok(ZPolynomial::monomial(Monomial::new(exps), BigInt::one()))
            }
            Some(b'(') => {
                if self.depth > 0 {
                    return Err(self.error("nested parentheses are not allowed"));
                }
                self.pos += 1;
                self.depth += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                self.depth -= 1;
                Ok(inner)
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.src.get(self.pos), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<BigInt> {
        let d = self.digits();
        d.parse().map_err(|_| self.error("expected an integer"))
    }
}
