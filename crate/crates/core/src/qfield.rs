//! Exact scalar arithmetic: arbitrary-precision rationals and the quadratic
//! extension Q(√2).
//!
//! Rationals are `num_rational::BigRational` (always reduced, denominator
//! positive, zero is `0/1`). A [`Qrt2`] is a pair `a + b√2` of rationals;
//! since √2 is irrational, `a + b√2 = 0` forces `a = b = 0`, so the pair
//! representation is already canonical and equality is structural.
//!
//! The sign of `a + b√2` is decided exactly by case analysis on the signs of
//! `a` and `b` and, in the mixed case, by comparing `a²` with `2b²`. No
//! floating point is involved anywhere.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type BigRational = num_rational::BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QfieldError {
    DivisionByZero,
    /// Input text that does not parse as `a`, `b*sqrt2` or `a+b*sqrt2`.
    Parse(String),
}

impl fmt::Display for QfieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QfieldError::DivisionByZero => write!(f, "division by zero"),
            QfieldError::Parse(s) => write!(f, "cannot parse {s:?} as a+b*sqrt2"),
        }
    }
}

/// An element `a + b√2` of Q(√2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Qrt2 {
    rat: BigRational,
    irr: BigRational,
}

impl Qrt2 {
    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        Qrt2 { rat, irr }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Qrt2 { rat: r, irr: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `p/q + (r/s)√2` from machine integers.
    pub fn from_parts(p: i64, q: i64, r: i64, s: i64) -> Self {
        Qrt2 { rat: rat(p, q), irr: rat(r, s) }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn sqrt2() -> Self {
        Qrt2 { rat: BigRational::zero(), irr: BigRational::one() }
    }

    pub fn rat_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn irr_part(&self) -> &BigRational {
        &self.irr
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.irr.is_zero()
    }

    /// True when the element lies in Q (no √2 component).
    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rat)
    }

    /// Exact sign of the real number `a + b√2`: -1, 0 or +1.
    pub fn sign(&self) -> i32 {
        let sa = rational_sign(&self.rat);
        let sb = rational_sign(&self.irr);
        match (sa, sb) {
            (0, 0) => 0,
            (0, s) | (s, 0) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            // a and b have opposite signs: compare a^2 with 2 b^2.
            _ => {
                let a2 = &self.rat * &self.rat;
                let b2 = (&self.irr * &self.irr) * int(2);
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    // a^2 = 2 b^2 with a, b rational forces a = b = 0.
                    Ordering::Equal => unreachable!("sqrt(2) is irrational"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() { -self.clone() } else { self.clone() }
    }

    /// Multiplicative inverse via the conjugate: `1/(a+b√2) = (a-b√2)/(a²-2b²)`.
    pub fn inverse(&self) -> Result<Self, QfieldError> {
        if self.is_zero() {
            return Err(QfieldError::DivisionByZero);
        }
        let norm = &self.rat * &self.rat - (&self.irr * &self.irr) * int(2);
        debug_assert!(!norm.is_zero());
        Ok(Qrt2 { rat: &self.rat / &norm, irr: -(&self.irr / &norm) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QfieldError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Qrt2::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Parses the report syntax: `a`, `b*sqrt2`, or `a+b*sqrt2` with signed
    /// fractions, e.g. `-51/2-18*sqrt2`. A `+-` pair collapses to `-`.
    pub fn parse(text: &str) -> Result<Self, QfieldError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || QfieldError::Parse(String::from(text));
        if compact.is_empty() {
            return Err(err());
        }
        // Split into at most two signed terms at a '+'/'-' that is not the
        // leading sign and not part of a '+-' pair already consumed.
        let bytes = compact.as_bytes();
        let mut split = None;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'+' && bytes[i - 1] != b'-' {
                split = Some(i);
                break;
            }
        }
        let (first, second) = match split {
            Some(i) => (&compact[..i], Some(&compact[i..])),
            None => (&compact[..], None),
        };
        let parse_term = |term: &str| -> Result<(BigRational, bool), QfieldError> {
            // normalize a leading "+-"/"-+"/"--"/"++" pair
            let mut t = term;
            let mut neg = false;
            while let Some(rest) = t.strip_prefix(['+', '-']) {
                if t.starts_with('-') {
                    neg = !neg;
                }
                t = rest;
            }
            let (body, is_sqrt) = match t.strip_suffix("*sqrt2").or_else(|| t.strip_suffix("sqrt2")) {
                Some(stripped) => {
                    let b = stripped.strip_suffix('*').unwrap_or(stripped);
                    (if b.is_empty() { "1" } else { b }, true)
                }
                None => (t, false),
            };
            let mut value: BigRational = body.parse().map_err(|_| err())?;
            if neg {
                value = -value;
            }
            Ok((value, is_sqrt))
        };
        let mut rat = BigRational::zero();
        let mut irr = BigRational::zero();
        let mut seen_rat = false;
        let mut seen_irr = false;
        for term in core::iter::once(first).chain(second) {
            let (value, is_sqrt) = parse_term(term)?;
            if is_sqrt {
                if seen_irr {
                    return Err(err());
                }
                seen_irr = true;
                irr = value;
            } else {
                if seen_rat {
                    return Err(err());
                }
                seen_rat = true;
                rat = value;
            }
        }
        Ok(Qrt2 { rat, irr })
    }
}

fn rational_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl From<BigRational> for Qrt2 {
    fn from(r: BigRational) -> Self {
        Qrt2::from_rational(r)
    }
}

impl From<i64> for Qrt2 {
    fn from(n: i64) -> Self {
        Qrt2::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b Qrt2> for &'a Qrt2 {
            type Output = Qrt2;
            fn $method(self, rhs: &'b Qrt2) -> Qrt2 {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<Qrt2> for Qrt2 {
            type Output = Qrt2;
            fn $method(self, rhs: Qrt2) -> Qrt2 {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'b> $trait<&'b Qrt2> for Qrt2 {
            type Output = Qrt2;
            fn $method(self, rhs: &'b Qrt2) -> Qrt2 {
                $trait::$method(&self, rhs)
            }
        }
        impl<'a> $trait<Qrt2> for &'a Qrt2 {
            type Output = Qrt2;
            fn $method(self, rhs: Qrt2) -> Qrt2 {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Qrt2 { rat: &a.rat + &b.rat, irr: &a.irr + &b.irr });
forward_binop!(Sub, sub, |a, b| Qrt2 { rat: &a.rat - &b.rat, irr: &a.irr - &b.irr });
forward_binop!(Mul, mul, |a, b| Qrt2 {
    rat: &a.rat * &b.rat + (&a.irr * &b.irr) * int(2),
    irr: &a.rat * &b.irr + &a.irr * &b.rat,
});
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("Qrt2 division by zero"));

impl Neg for Qrt2 {
    type Output = Qrt2;
    fn neg(self) -> Qrt2 {
        Qrt2 { rat: -self.rat, irr: -self.irr }
    }
}

impl Neg for &Qrt2 {
    type Output = Qrt2;
    fn neg(self) -> Qrt2 {
        Qrt2 { rat: -self.rat.clone(), irr: -self.irr.clone() }
    }
}

impl PartialOrd for Qrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Qrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for Qrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if self.rat.is_zero() {
            return write!(f, "{}*sqrt2", self.irr);
        }
        if self.irr.is_positive() {
            write!(f, "{}+{}*sqrt2", self.rat, self.irr)
        } else {
            write!(f, "{}-{}*sqrt2", self.rat, -&self.irr)
        }
    }
}

impl fmt::Debug for Qrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
