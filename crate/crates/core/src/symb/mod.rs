//! Univariate polynomials and rational functions in the index variable `n`
//! over Q(√2), with canonical forms, integer shifts `n -> n+k`, exact
//! evaluation, and a textual syntax shared by definition files and reports.

mod poly;
mod ratfunc;
mod parse;

pub use parse::{must_parse, parse_polynomial, parse_qrt2, parse_ratfunc};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

use alloc::string::String;
use core::fmt;

use crate::qfield::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbError {
    DivisionByZero,
    /// Evaluation at a point where the denominator vanishes.
    Pole(BigRational),
    Parse(String),
}

impl fmt::Display for SymbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbError::DivisionByZero => write!(f, "division by the zero rational function"),
            SymbError::Pole(at) => write!(f, "pole at n = {at}"),
            SymbError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}
