//! Recursive-descent parser for the textual syntax used by definition files
//! and reports.
//!
//! One grammar covers scalars, polynomials and rational functions:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := ('+'|'-')* atom ('^' uint)?
//! atom   := uint | 'n' | 'sqrt2' | '(' expr ')' | '[' expr (',' expr)* ']'
//! ```
//!
//! Integer literals are unbounded; `3/4` is division and so yields the
//! rational 3/4. The bracket form is the ascending coefficient list, so
//! `[192, 48, 16, 0, 0, 16]` equals `16*n^5 + 16*n^2 + 48*n + 192`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::SymbError;
use crate::qfield::{BigRational, Qrt2};

/// Parses any expression of the grammar into a rational function.
pub fn parse_ratfunc(text: &str) -> Result<RationalFunction, SymbError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0, src: text };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("trailing input"));
    }
    Ok(value)
}

/// Parses an expression that must reduce to a polynomial.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, SymbError> {
    let rf = parse_ratfunc(text)?;
    if !rf.is_polynomial() {
        return Err(SymbError::Parse(format!("{text:?} is not a polynomial")));
    }
    Ok(rf.num().exact_div(&Polynomial::constant(rf.den().coeff(0))))
}

/// Parses an expression that must reduce to a scalar.
pub fn parse_qrt2(text: &str) -> Result<Qrt2, SymbError> {
    parse_ratfunc(text)?
        .as_constant()
        .ok_or_else(|| SymbError::Parse(format!("{text:?} is not a scalar")))
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> SymbError {
        SymbError::Parse(format!("{msg} at byte {} of {:?}", self.pos, self.src))
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

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, SymbError> {
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

    fn term(&mut self) -> Result<RationalFunction, SymbError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let rhs = self.factor()?;
                acc = acc.checked_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunction, SymbError> {
        let mut negate = false;
        loop {
            if self.eat(b'-') {
                negate = !negate;
            } else if !self.eat(b'+') {
                break;
            }
        }
        let mut value = self.atom()?;
        if self.eat(b'^') {
            let exp = self.uint()?;
            let exp: u32 = exp
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            value = value.pow(exp);
        }
        Ok(if negate { -value } else { value })
    }

    fn atom(&mut self) -> Result<RationalFunction, SymbError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'[') => self.coeff_list(),
            Some(c) if c.is_ascii_digit() => {
                let value = self.uint()?;
                Ok(RationalFunction::constant(Qrt2::from_rational(
                    BigRational::from_integer(value),
                )))
            }
            Some(b's') => {
                if self.src[self.pos..].starts_with("sqrt2") {
                    self.pos += 5;
                    Ok(RationalFunction::constant(Qrt2::sqrt2()))
                } else {
                    Err(self.error("expected 'sqrt2'"))
                }
            }
            Some(b'n') => {
                self.pos += 1;
                Ok(RationalFunction::var())
            }
            _ => Err(self.error("expected a number, 'n', 'sqrt2', '(' or '['")),
        }
    }

    fn coeff_list(&mut self) -> Result<RationalFunction, SymbError> {
        self.pos += 1; // consume '['
        let mut coeffs: Vec<Qrt2> = Vec::new();
        if !self.eat(b']') {
            loop {
                let value = self.expr()?;
                let c = value
                    .as_constant()
                    .ok_or_else(|| self.error("coefficient list entries must be scalars"))?;
                coeffs.push(c);
                if self.eat(b']') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(self.error("expected ',' or ']'"));
                }
            }
        }
        Ok(RationalFunction::from_poly(Polynomial::new(coeffs)))
    }

    fn uint(&mut self) -> Result<BigInt, SymbError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: &str = &self.src[start..self.pos];
        digits
            .parse::<BigInt>()
            .map_err(|_| self.error("bad integer"))
    }
}

/// Parses a trusted expression; panics on error. For built-in definitions.
pub fn must_parse(text: &str) -> RationalFunction {
    match parse_ratfunc(text) {
        Ok(v) => v,
        Err(e) => panic!("bad builtin expression {text:?}: {e}"),
    }
}
