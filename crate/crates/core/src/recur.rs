//! Order-2 recurrences `S_n = a(n) S_{n-1} + b(n) S_{n-2}` with
//! rational-function coefficients, exact term evaluation, and the two
//! sequence operators used throughout:
//!
//! * `L`: `{S_n} -> {S_{n-1} S_{n+1} - S_n^2}` (first index rises by one);
//! * `R`: `{S_n} -> {S_{n+1} / S_n}` (same first index, one term shorter).
//!
//! All index-alignment conventions live here. A [`SequenceView`] is an
//! immutable snapshot of exactly computed terms; derived views record their
//! derivation chain in `name`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::qfield::{int, BigRational};
use crate::symb::{must_parse, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecurError {
    UnknownBuiltin(String),
    /// Coefficient has a pole at an index the recursion must cross.
    CoefficientPole { name: String, at: i64 },
    /// a or b carries a sqrt2 component; terms would leave Q.
    IrrationalCoefficients,
    NegativeIndex(i64),
    /// Ratio S_n/S_{n-1} at a vanishing predecessor.
    ZeroPredecessor(i64),
    ZeroTerm(i64),
    BadDefinition(String),
}

impl core::fmt::Display for RecurError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RecurError::UnknownBuiltin(s) => write!(f, "unknown builtin sequence {s:?}"),
            RecurError::CoefficientPole { name, at } => {
                write!(f, "coefficient {name} has a pole at n = {at}")
            }
            RecurError::IrrationalCoefficients => {
                write!(f, "recurrence coefficients must be rational-valued")
            }
            RecurError::NegativeIndex(n) => write!(f, "index {n} out of range"),
            RecurError::ZeroPredecessor(n) => {
                write!(f, "ratio undefined: S_{} = 0", n - 1)
            }
            RecurError::ZeroTerm(n) => write!(f, "zero term at index {n}"),
            RecurError::BadDefinition(msg) => write!(f, "bad recurrence definition: {msg}"),
        }
    }
}

/// Names of the built-in sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// Catalan–Larcombe–French numbers 1, 8, 80, 896, ...
    Clf,
    /// Fennessey–Larcombe–French numbers 1, 8, 144, 2432, 40000, ...
    Flf,
    /// Apéry numbers 1, 5, 73, 1445, ...
    Apery,
}

impl core::str::FromStr for Builtin {
    type Err = RecurError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "clf" => Ok(Builtin::Clf),
            "flf" => Ok(Builtin::Flf),
            "apery" => Ok(Builtin::Apery),
            other => Err(RecurError::UnknownBuiltin(String::from(other))),
        }
    }
}

/// An order-2 recurrence with initial values and a validity window.
#[derive(Clone, Debug)]
pub struct Recurrence2 {
    pub name: String,
    pub a: RationalFunction,
    pub b: RationalFunction,
    pub s0: BigRational,
    pub s1: BigRational,
    /// Smallest n at which `S_n = a(n) S_{n-1} + b(n) S_{n-2}` applies.
    pub valid_from: i64,
}

impl Recurrence2 {
    pub fn new(
        name: &str,
        a: RationalFunction,
        b: RationalFunction,
        s0: BigRational,
        s1: BigRational,
        valid_from: i64,
    ) -> Result<Self, RecurError> {
        if !a.num().has_rational_coeffs()
            || !a.den().has_rational_coeffs()
            || !b.num().has_rational_coeffs()
            || !b.den().has_rational_coeffs()
        {
            return Err(RecurError::IrrationalCoefficients);
        }
        Ok(Recurrence2 { name: String::from(name), a, b, s0, s1, valid_from })
    }

    /// The three built-in recurrences, in divided form (leading term solved
    /// for). `flf` divides out the (n-1) factor, which is legitimate for
    /// n >= 2; its b vanishes at n = 2, so criteria that need b < 0 must use
    /// larger windows.
    pub fn builtin(which: Builtin) -> Self {
        let (name, a, b, s1) = match which {
            Builtin::Clf => ("clf", "8*(3*n^2-3*n+1)/n^2", "-128*(n-1)^2/n^2", 8),
            Builtin::Flf => ("flf", "8*(3*n^2-n-1)/n^2", "-128*(n-2)/(n-1)", 8),
            Builtin::Apery => ("apery", "(34*n^3-51*n^2+27*n-5)/n^3", "-(n-1)^3/n^3", 5),
        };
        Recurrence2 {
            name: String::from(name),
            a: must_parse(a),
            b: must_parse(b),
            s0: BigRational::one(),
            s1: int(s1),
            valid_from: 2,
        }
    }

    /// Exact terms `S_0 ..= S_upto`.
    pub fn terms_upto(&self, upto: i64) -> Result<Vec<BigRational>, RecurError> {
        if upto < 0 {
            return Err(RecurError::NegativeIndex(upto));
        }
        if upto >= 2 && self.valid_from > 2 {
            // Two initial values plus a recurrence valid only from
            // valid_from > 2 leave the indices in between undefined.
            return Err(RecurError::BadDefinition(format!(
                "recurrence valid from {} cannot reach index {upto} from two initial values",
                self.valid_from
            )));
        }
        let mut terms = Vec::with_capacity(upto as usize + 1);
        terms.push(self.s0.clone());
        if upto >= 1 {
            terms.push(self.s1.clone());
        }
        for k in 2..=upto {
            let point = int(k);
            let a = self
                .a
                .eval(&point)
                .map_err(|_| RecurError::CoefficientPole { name: String::from("a"), at: k })?;
            let b = self
                .b
                .eval(&point)
                .map_err(|_| RecurError::CoefficientPole { name: String::from("b"), at: k })?;
            // Coefficients were checked rational at construction.
            let a = a.as_rational().ok_or(RecurError::IrrationalCoefficients)?.clone();
            let b = b.as_rational().ok_or(RecurError::IrrationalCoefficients)?.clone();
            let next = &a * &terms[k as usize - 1] + &b * &terms[k as usize - 2];
            terms.push(next);
        }
        Ok(terms)
    }

    /// Exact term `S_n`.
    pub fn term(&self, n: i64) -> Result<BigRational, RecurError> {
        Ok(self.terms_upto(n)?.pop().expect("terms_upto returned n+1 values"))
    }

    /// Exact ratio `S_n / S_{n-1}` for n >= 1.
    pub fn ratio(&self, n: i64) -> Result<BigRational, RecurError> {
        if n < 1 {
            return Err(RecurError::NegativeIndex(n));
        }
        let terms = self.terms_upto(n)?;
        let prev = &terms[n as usize - 1];
        if prev.is_zero() {
            return Err(RecurError::ZeroPredecessor(n));
        }
        Ok(&terms[n as usize] / prev)
    }

    /// Materialized view of `S_0 ..= S_upto`.
    pub fn view(&self, upto: i64) -> Result<SequenceView, RecurError> {
        Ok(SequenceView {
            name: self.name.clone(),
            first_index: 0,
            terms: self.terms_upto(upto)?,
        })
    }
}

/// Immutable snapshot of exactly computed sequence values.
///
/// `terms[i]` is the value at index `first_index + i`; derived views keep
/// their derivation chain in `name` (for example `L(flf)`).
#[derive(Clone, Debug)]
pub struct SequenceView {
    name: String,
    first_index: i64,
    terms: Vec<BigRational>,
}

impl SequenceView {
    pub fn from_terms(name: &str, first_index: i64, terms: Vec<BigRational>) -> Self {
        SequenceView { name: String::from(name), first_index, terms }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn first_index(&self) -> i64 {
        self.first_index
    }

    /// Largest available index.
    pub fn last_index(&self) -> i64 {
        self.first_index + self.terms.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&BigRational> {
        let offset = index.checked_sub(self.first_index)?;
        if offset < 0 {
            return None;
        }
        self.terms.get(offset as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, t)| (self.first_index + i as i64, t))
    }

    /// `L` operator: value at n is `S_{n-1} S_{n+1} - S_n^2`; the first
    /// index rises by one and the last drops by one.
    pub fn l_operator(&self) -> SequenceView {
        let mut terms = Vec::new();
        for w in self.terms.windows(3) {
            terms.push(&w[0] * &w[2] - &w[1] * &w[1]);
        }
        SequenceView {
            name: format!("L({})", self.name),
            first_index: self.first_index + 1,
            terms,
        }
    }

    /// `R` operator: value at n is `S_{n+1} / S_n`; same first index, one
    /// term shorter. Errors on a zero term.
    pub fn r_operator(&self) -> Result<SequenceView, RecurError> {
        let mut terms = Vec::new();
        for (i, w) in self.terms.windows(2).enumerate() {
            if w[0].is_zero() {
                return Err(RecurError::ZeroTerm(self.first_index + i as i64));
            }
            terms.push(&w[1] / &w[0]);
        }
        Ok(SequenceView {
            name: format!("R({})", self.name),
            first_index: self.first_index,
            terms,
        })
    }

    /// Term-wise negation, e.g. to pass from `L` to `{S_n^2 - S_{n-1}S_{n+1}}`.
    pub fn negated(&self) -> SequenceView {
        SequenceView {
            name: format!("neg({})", self.name),
            first_index: self.first_index,
            terms: self.terms.iter().map(|t| -t).collect(),
        }
    }

    /// The sub-view starting at `from` (used for "drop the first k terms").
    pub fn starting_at(&self, from: i64) -> SequenceView {
        let skip = (from - self.first_index).max(0) as usize;
        SequenceView {
            name: format!("{}[{from}..]", self.name),
            first_index: self.first_index + skip as i64,
            terms: self.terms[skip.min(self.terms.len())..].to_vec(),
        }
    }

    pub fn all_positive(&self) -> bool {
        self.terms.iter().all(|t| t.is_positive())
    }
}
