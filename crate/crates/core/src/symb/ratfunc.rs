//! Rational functions in `n` over Q(√2), kept in a canonical form so that
//! equality is structural.
//!
//! Canonical form: `gcd(num, den) = 1`; every coefficient component is an
//! integer with overall content 1; the denominator's leading coefficient is
//! positive. This representative is unique, reached by dividing out the
//! monic gcd, rescaling by the denominator's leading coefficient, and then
//! by the unique positive rational that clears denominators and content.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::Polynomial;
use super::SymbError;
use crate::qfield::{BigRational, Qrt2};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonicalizing constructor. Panics if `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.exact_div(&g), den.exact_div(&g));
        // Monic denominator fixes the representative up to a rational unit.
        let lc_inv = den.leading().unwrap().inverse().unwrap();
        num = num.scale(&lc_inv);
        den = den.scale(&lc_inv);
        // Clear denominators and content with one positive rational.
        let rho = Polynomial::integer_normalizer(num.rational_parts().chain(den.rational_parts()));
        let rho = Qrt2::from_rational(rho);
        RationalFunction { num: num.scale(&rho), den: den.scale(&rho) }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Qrt2) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Qrt2::from_int(n))
    }

    pub fn var() -> Self {
        Self::from_poly(Polynomial::var())
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The constant value, if both numerator and denominator are constants.
    pub fn as_constant(&self) -> Option<Qrt2> {
        (self.num.is_constant() && self.den.is_constant())
            .then(|| &self.num.coeff(0) / &self.den.coeff(0))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, SymbError> {
        if rhs.is_zero() {
            return Err(SymbError::DivisionByZero);
        }
        Ok(Self::new(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// The substituted function `x(n + k)`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.num.shift(k), self.den.shift(k))
    }

    /// Exact value at a rational point; a vanishing denominator is a pole.
    pub fn eval(&self, at: &BigRational) -> Result<Qrt2, SymbError> {
        let den = self.den.eval_rational(at);
        if den.is_zero() {
            return Err(SymbError::Pole(at.clone()));
        }
        Ok(&self.num.eval_rational(at) / &den)
    }

    pub fn eval_int(&self, at: i64) -> Result<Qrt2, SymbError> {
        self.eval(&BigRational::from_integer(at.into()))
    }

    /// `Some(c)` iff `self = c * other` with `c` a nonzero constant.
    pub fn proportionality(&self, other: &Self) -> Option<Qrt2> {
        if self.is_zero() || other.is_zero() {
            return (self.is_zero() && other.is_zero()).then(Qrt2::one);
        }
        self.checked_div(other).ok().and_then(|q| q.as_constant())
    }

    pub fn pow(&self, exp: u32) -> Self {
        // Canonical inputs have coprime num/den, so powers need no new gcd.
        RationalFunction { num: self.num.pow(exp), den: self.den.pow(exp) }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("rational function division by zero")
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl core::str::FromStr for RationalFunction {
    type Err = SymbError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_ratfunc(s)
    }
}
