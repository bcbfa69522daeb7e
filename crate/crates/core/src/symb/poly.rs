//! Dense univariate polynomials over Q(√2).
//!
//! Coefficients are stored in ascending order with no trailing zeros; the
//! zero polynomial is the empty list. Degrees stay small (the largest
//! polynomial any certificate produces has degree 26), so classical O(d²)
//! algorithms are used throughout: schoolbook multiplication, Horner
//! evaluation, in-place Taylor shift, and a monic Euclidean gcd.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::qfield::{BigRational, Qrt2};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Qrt2>,
}

impl Polynomial {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Qrt2>) -> Self {
        while coeffs.last().is_some_and(Qrt2::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![Qrt2::one()] }
    }

    pub fn constant(c: Qrt2) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * n^k`.
    pub fn monomial(c: Qrt2, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Qrt2::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The variable `n`.
    pub fn var() -> Self {
        Self::monomial(Qrt2::one(), 1)
    }

    /// Convenience: polynomial with integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Qrt2::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Qrt2] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Qrt2 {
        self.coeffs.get(k).cloned().unwrap_or_else(Qrt2::zero)
    }

    pub fn leading(&self) -> Option<&Qrt2> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True when every coefficient lies in Q.
    pub fn has_rational_coeffs(&self) -> bool {
        self.coeffs.iter().all(Qrt2::is_rational)
    }

    pub fn scale(&self, c: &Qrt2) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn eval(&self, x: &Qrt2) -> Qrt2 {
        let mut acc = Qrt2::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> Qrt2 {
        self.eval(&Qrt2::from_rational(x.clone()))
    }

    /// The composed polynomial `p(n + k)` via in-place Taylor shift.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 || self.is_constant() {
            return self.clone();
        }
        let c = Qrt2::from_int(k);
        let d = self.coeffs.len();
        let mut out = self.coeffs.clone();
        for i in (0..d - 1).rev() {
            for j in i..d - 1 {
                let add = &out[j + 1] * &c;
                out[j] = &out[j] + &add;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    ///
    /// Panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc_inv = divisor.leading().unwrap().inverse().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Qrt2::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for j in 0..dd {
                let sub = &q * &divisor.coeffs[j];
                rem[i - dd + j] = &rem[i - dd + j] - &sub;
            }
            rem[i] = Qrt2::zero();
            quot[i - dd] = q;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic gcd via the Euclidean scheme; each remainder is rescaled to
    /// monic to keep coefficient growth down. Returns zero iff both inputs
    /// are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Positive rational `ρ` such that `ρ·self` has integer components with
    /// overall content 1. Returns 1 for the zero polynomial.
    pub(crate) fn integer_normalizer(parts: impl Iterator<Item = BigRational>) -> BigRational {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Signed};
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        let mut any = false;
        for r in parts {
            if r.is_zero() {
                continue;
            }
            any = true;
            den_lcm = den_lcm.lcm(r.denom());
            num_gcd = num_gcd.gcd(&r.numer().abs());
        }
        if !any {
            return BigRational::one();
        }
        BigRational::new(den_lcm, num_gcd)
    }

    /// All rational components (rat and irr parts of every coefficient).
    pub(crate) fn rational_parts(&self) -> impl Iterator<Item = BigRational> + '_ {
        self.coeffs
            .iter()
            .flat_map(|c| [c.rat_part().clone(), c.irr_part().clone()])
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Qrt2::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                out[i + j] = &out[i + j] + &prod;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Descending-power form, e.g. `16*n^5 + 16*n^2 + 48*n + 192`; compound
/// coefficients are parenthesized: `(17+12*sqrt2)*n^3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = coeff_pieces(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, &body, k)?;
        }
        Ok(())
    }
}

/// Splits a coefficient into (is_negative, magnitude text). Mixed
/// coefficients are parenthesized and never treated as negative.
fn coeff_pieces(c: &Qrt2) -> (bool, alloc::string::String) {
    use alloc::format;
    if c.is_rational() || c.rat_part().is_zero() {
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        (neg, format!("{mag}"))
    } else {
        (false, format!("({c})"))
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, body: &str, k: usize) -> fmt::Result {
    let is_one = body == "1";
    match (k, is_one) {
        (0, _) => write!(f, "{body}"),
        (1, true) => write!(f, "n"),
        (1, false) => write!(f, "{body}*n"),
        (_, true) => write!(f, "n^{k}"),
        (_, false) => write!(f, "{body}*n^{k}"),
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::qfield::rat;

    #[test]
    fn canonical_trims_trailing_zeros() {
        let p = Polynomial::new(vec![Qrt2::from_int(1), Qrt2::zero(), Qrt2::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert!(Polynomial::new(vec![Qrt2::zero()]).is_zero());
    }

    #[test]
    fn shift_of_square() {
        // (n+1)^2 = n^2 + 2n + 1
        let p = Polynomial::from_ints(&[0, 0, 1]);
        assert_eq!(p.shift(1), Polynomial::from_ints(&[1, 2, 1]));
        assert_eq!(p.shift(1).shift(-1), p);
    }

    #[test]
    fn shift_composes_additively() {
        let p = Polynomial::from_ints(&[-44, -27, -9, 5, 7]);
        assert_eq!(p.shift(2).shift(3), p.shift(5));
        assert_eq!(p.shift(0), p);
    }

    #[test]
    fn horner_matches_direct_evaluation() {
        let p = Polynomial::from_ints(&[-44, -27, -9, 5, 7]);
        // 7*16 + 5*8 - 9*4 - 27*2 - 44 = 112+40-36-54-44 = 18
        assert_eq!(p.eval_rational(&rat(2, 1)), Qrt2::from_int(18));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (n+1)(n+2) and (n+1)(n+3) share (n+1)
        let a = Polynomial::from_ints(&[2, 3, 1]);
        let b = Polynomial::from_ints(&[3, 4, 1]);
        assert_eq!(a.gcd(&b), Polynomial::from_ints(&[1, 1]));
    }

    #[test]
    fn division_round_trips() {
        let a = Polynomial::from_ints(&[1, 0, -3, 7]);
        let b = Polynomial::from_ints(&[2, 5]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::from_ints(&[192, 48, 16, 0, 0, 16]).to_string(),
                   "16*n^5 + 16*n^2 + 48*n + 192");
        assert_eq!(Polynomial::from_ints(&[-1, 1]).to_string(), "n - 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let mixed = Polynomial::new(vec![Qrt2::zero(), Qrt2::from_parts(17, 1, 12, 1)]);
        assert_eq!(mixed.to_string(), "(17+12*sqrt2)*n");
    }
}
