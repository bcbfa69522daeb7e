//! Exact finite-range verification of log-behavior properties on sequence
//! views, plus desk-scale empirical scans of the conjectures.
//!
//! Every comparison is cross-multiplied into exact integer or rational
//! arithmetic: ratio log-concavity as `S_n^3 S_{n-2} >= S_{n-1}^3 S_{n+1}`,
//! the n-th-root comparison as
//! `S_n^(2(n-1)(n+1)) > S_{n-1}^(n(n+1)) * S_{n+1}^(n(n-1))`, and factorial
//! log-convexity as `n S_n^2 < (n+1) S_{n-1} S_{n+1}`. Conjecture scans are
//! evidence, never proofs, and their reports say so.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Signed;

use crate::qfield::BigRational;
use crate::recur::{Builtin, RecurError, Recurrence2, SequenceView};

/// Default cap on n for the n-th-root comparison (operand sizes grow fast).
pub const DEFAULT_NTH_ROOT_CAP: i64 = 200;
/// Default cap on operator-iteration depth in the conjecture scans.
pub const DEFAULT_DEPTH_CAP: i64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    LogConcave { strict: bool },
    LogConvex { strict: bool },
    RatioLogConcave { strict: bool },
    RatioLogConvex { strict: bool },
    NthRootLogConcave,
    FactorialLogConvex,
    LogBalanced,
}

impl Property {
    pub fn name(self) -> String {
        match self {
            Property::LogConcave { strict } => flag("log-concave", strict),
            Property::LogConvex { strict } => flag("log-convex", strict),
            Property::RatioLogConcave { strict } => flag("ratio-log-concave", strict),
            Property::RatioLogConvex { strict } => flag("ratio-log-convex", strict),
            Property::NthRootLogConcave => "nth-root-log-concave".to_string(),
            Property::FactorialLogConvex => "factorial-log-convex".to_string(),
            Property::LogBalanced => "log-balanced".to_string(),
        }
    }

    /// Indices below n that a single check touches.
    fn reach_back(self) -> i64 {
        match self {
            Property::RatioLogConcave { .. } | Property::RatioLogConvex { .. } => 2,
            _ => 1,
        }
    }
}

fn flag(base: &str, strict: bool) -> String {
    if strict {
        format!("strict-{base}")
    } else {
        base.to_string()
    }
}

impl core::str::FromStr for Property {
    type Err = CheckError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (strict, base) = match s.strip_prefix("strict-") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        Ok(match base {
            "log-concave" => Property::LogConcave { strict },
            "log-convex" => Property::LogConvex { strict },
            "ratio-log-concave" => Property::RatioLogConcave { strict },
            "ratio-log-convex" => Property::RatioLogConvex { strict },
            "nth-root-log-concave" if !strict => Property::NthRootLogConcave,
            "factorial-log-convex" if !strict => Property::FactorialLogConvex,
            "log-balanced" if !strict => Property::LogBalanced,
            _ => return Err(CheckError::BadProperty(String::from(s))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckError {
    BadProperty(String),
    /// The view does not hold the indices the requested range touches.
    InsufficientRange { needed_from: i64, needed_to: i64, have_from: i64, have_to: i64 },
    /// n-th-root comparisons above the cap are refused, not silently skipped.
    NthRootCapExceeded { to: i64, cap: i64 },
    NonPositiveTerm(i64),
    Recurrence(RecurError),
}

impl core::fmt::Display for CheckError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CheckError::BadProperty(s) => write!(f, "unknown property {s:?}"),
            CheckError::InsufficientRange { needed_from, needed_to, have_from, have_to } => {
                write!(
                    f,
                    "range needs indices [{needed_from}, {needed_to}] but the view holds [{have_from}, {have_to}]"
                )
            }
            CheckError::NthRootCapExceeded { to, cap } => {
                write!(f, "nth-root check up to {to} exceeds the cap {cap}")
            }
            CheckError::NonPositiveTerm(n) => {
                write!(f, "nth-root comparison needs positive terms; term at {n} is not")
            }
            CheckError::Recurrence(e) => write!(f, "{e}"),
        }
    }
}

impl From<RecurError> for CheckError {
    fn from(e: RecurError) -> Self {
        CheckError::Recurrence(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckVerdict {
    Holds,
    FailsAt(i64),
}

/// The exact violating comparison, kept as canonical decimal-fraction text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub n: i64,
    pub lhs: String,
    pub op: &'static str,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub property: String,
    pub sequence: String,
    pub range: (i64, i64),
    pub verdict: CheckVerdict,
    pub counterexample: Option<Counterexample>,
    /// True for conjecture scans and anything else that is evidence only.
    pub empirical: bool,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.verdict == CheckVerdict::Holds
    }
}

/// One cross-multiplied comparison `lhs op rhs` at index n.
struct Comparison {
    lhs: BigRational,
    rhs: BigRational,
    strict: bool,
    /// true: holds when lhs >= rhs (or >); false: when lhs <= rhs (or <).
    geq: bool,
}

impl Comparison {
    fn holds(&self) -> bool {
        match (self.geq, self.strict) {
            (true, true) => self.lhs > self.rhs,
            (true, false) => self.lhs >= self.rhs,
            (false, true) => self.lhs < self.rhs,
            (false, false) => self.lhs <= self.rhs,
        }
    }

    fn op(&self) -> &'static str {
        match (self.geq, self.strict) {
            (true, true) => ">",
            (true, false) => ">=",
            (false, true) => "<",
            (false, false) => "<=",
        }
    }

    /// Margin oriented so that nonnegative means the comparison holds.
    fn margin(&self) -> BigRational {
        if self.geq {
            &self.lhs - &self.rhs
        } else {
            &self.rhs - &self.lhs
        }
    }
}

fn compare_at(
    s: &SequenceView,
    property: Property,
    n: i64,
) -> Result<Comparison, CheckError> {
    let term = |m: i64| {
        s.get(m).ok_or(CheckError::InsufficientRange {
            needed_from: m,
            needed_to: m,
            have_from: s.first_index(),
            have_to: s.last_index(),
        })
    };
    Ok(match property {
        Property::LogConcave { strict } => Comparison {
            lhs: term(n)? * term(n)?,
            rhs: term(n - 1)? * term(n + 1)?,
            strict,
            geq: true,
        },
        Property::LogConvex { strict } => Comparison {
            lhs: term(n)? * term(n)?,
            rhs: term(n - 1)? * term(n + 1)?,
            strict,
            geq: false,
        },
        Property::RatioLogConcave { strict } => Comparison {
            lhs: term(n)? * term(n)? * term(n)? * term(n - 2)?,
            rhs: term(n - 1)? * term(n - 1)? * term(n - 1)? * term(n + 1)?,
            strict,
            geq: true,
        },
        Property::RatioLogConvex { strict } => Comparison {
            lhs: term(n)? * term(n)? * term(n)? * term(n - 2)?,
            rhs: term(n - 1)? * term(n - 1)? * term(n - 1)? * term(n + 1)?,
            strict,
            geq: false,
        },
        Property::NthRootLogConcave => {
            for m in [n - 1, n, n + 1] {
                if !term(m)?.is_positive() {
                    return Err(CheckError::NonPositiveTerm(m));
                }
            }
            let e = |x: i64| i32::try_from(x).expect("exponent fits i32");
            Comparison {
                lhs: term(n)?.pow(e(2 * (n - 1) * (n + 1))),
                rhs: term(n - 1)?.pow(e(n * (n + 1))) * term(n + 1)?.pow(e(n * (n - 1))),
                strict: true,
                geq: true,
            }
        }
        Property::FactorialLogConvex => Comparison {
            lhs: BigRational::from_integer(n.into()) * term(n)? * term(n)?,
            rhs: BigRational::from_integer((n + 1).into()) * term(n - 1)? * term(n + 1)?,
            strict: true,
            geq: false,
        },
        Property::LogBalanced => {
            // log-convex and {S_n/n!} log-concave, the latter cross-multiplied
            // as (n+1) S_n^2 >= n S_{n-1} S_{n+1}. Encode the conjunction as
            // the minimum margin of the two comparisons.
            let convex = Comparison {
                lhs: term(n)? * term(n)?,
                rhs: term(n - 1)? * term(n + 1)?,
                strict: false,
                geq: false,
            };
            let scaled_concave = Comparison {
                lhs: BigRational::from_integer((n + 1).into()) * term(n)? * term(n)?,
                rhs: BigRational::from_integer(n.into()) * term(n - 1)? * term(n + 1)?,
                strict: false,
                geq: true,
            };
            if convex.margin() <= scaled_concave.margin() {
                convex
            } else {
                scaled_concave
            }
        }
    })
}

/// Checks one property at every index of `[from, to]`, reporting the
/// smallest violation with its exact comparison.
pub fn check_range(
    s: &SequenceView,
    property: Property,
    from: i64,
    to: i64,
    nth_root_cap: i64,
) -> Result<PropertyReport, CheckError> {
    if property == Property::NthRootLogConcave && to > nth_root_cap {
        return Err(CheckError::NthRootCapExceeded { to, cap: nth_root_cap });
    }
    let back = property.reach_back();
    if from - back < s.first_index() || to + 1 > s.last_index() || from > to {
        return Err(CheckError::InsufficientRange {
            needed_from: from - back,
            needed_to: to + 1,
            have_from: s.first_index(),
            have_to: s.last_index(),
        });
    }
    for n in from..=to {
        let cmp = compare_at(s, property, n)?;
        if !cmp.holds() {
            return Ok(PropertyReport {
                property: property.name(),
                sequence: s.name().to_string(),
                range: (from, to),
                verdict: CheckVerdict::FailsAt(n),
                counterexample: Some(Counterexample {
                    n,
                    lhs: cmp.lhs.to_string(),
                    op: cmp.op(),
                    rhs: cmp.rhs.to_string(),
                }),
                empirical: false,
            });
        }
    }
    Ok(PropertyReport {
        property: property.name(),
        sequence: s.name().to_string(),
        range: (from, to),
        verdict: CheckVerdict::Holds,
        counterexample: None,
        empirical: false,
    })
}

/// Per-index margins of the checked comparison, oriented so that a
/// nonnegative margin means the property holds at that index.
pub fn margins(
    s: &SequenceView,
    property: Property,
    from: i64,
    to: i64,
) -> Result<Vec<(i64, BigRational)>, CheckError> {
    let mut out = Vec::new();
    for n in from..=to {
        out.push((n, compare_at(s, property, n)?.margin()));
    }
    Ok(out)
}

/// k-log-convexity: `L^i` applied to the view must be log-convex for
/// `0 <= i <= k-1`, each level checked on its surviving subrange of
/// `[from, to]`.
pub fn check_k_logconvex(
    s: &SequenceView,
    k: i64,
    from: i64,
    to: i64,
) -> Result<PropertyReport, CheckError> {
    assert!(k >= 1, "k-log-convexity needs k >= 1");
    let mut level = s.clone();
    let mut first_failure: Option<(i64, Counterexample)> = None;
    for i in 0..k {
        let lo = (level.first_index() + 1).max(from);
        let hi = (level.last_index() - 1).min(to);
        if lo > hi {
            return Err(CheckError::InsufficientRange {
                needed_from: lo,
                needed_to: hi,
                have_from: level.first_index(),
                have_to: level.last_index(),
            });
        }
        let report = check_range(&level, Property::LogConvex { strict: false }, lo, hi, 0)?;
        if let CheckVerdict::FailsAt(n) = report.verdict {
            first_failure = Some((n, report.counterexample.expect("failure has witness")));
            break;
        }
        if i + 1 < k {
            level = level.l_operator();
        }
    }
    Ok(PropertyReport {
        property: format!("{k}-log-convex"),
        sequence: s.name().to_string(),
        range: (from, to),
        verdict: match &first_failure {
            Some((n, _)) => CheckVerdict::FailsAt(*n),
            None => CheckVerdict::Holds,
        },
        counterexample: first_failure.map(|(_, c)| c),
        empirical: false,
    })
}

/// Empirical scans of the three conjectures at the given caps. Reports are
/// labeled empirical; nothing here proves anything.
pub fn check_conjectures(
    depth_cap: i64,
    range_cap: i64,
) -> Result<Vec<PropertyReport>, CheckError> {
    assert!(depth_cap >= 1 && range_cap >= 10);
    let horizon = range_cap + 2 * depth_cap + 4;
    let v = Recurrence2::builtin(Builtin::Flf).view(horizon)?;
    let p = Recurrence2::builtin(Builtin::Clf).view(horizon)?;
    let mut reports = Vec::new();

    // Infinite log-convexity of {V_n^2 - V_{n-1} V_{n+1}}_{n>=2}: check each
    // L-level of the difference sequence.
    let w = v.l_operator().negated().starting_at(2);
    let mut level = w;
    let mut verdict = CheckVerdict::Holds;
    let mut witness = None;
    for depth in 1..=depth_cap {
        let lo = level.first_index() + 1;
        let hi = (level.last_index() - 1).min(range_cap);
        let report = check_range(&level, Property::LogConvex { strict: false }, lo, hi, 0)?;
        if let CheckVerdict::FailsAt(n) = report.verdict {
            verdict = CheckVerdict::FailsAt(n);
            witness = report.counterexample;
            break;
        }
        if depth < depth_cap {
            level = level.l_operator();
        }
    }
    reports.push(PropertyReport {
        property: format!("difference sequence of flf infinitely log-convex (levels 1..={depth_cap})"),
        sequence: String::from("neg(L(flf))[2..]"),
        range: (2, range_cap),
        verdict,
        counterexample: witness,
        empirical: true,
    });

    // Parity of R-iterates: clf alternates concave/convex starting concave;
    // flf (from index 1) alternates convex/concave starting convex.
    for (seq, base, odd_concave) in [("clf", p.clone(), true), ("flf", v.starting_at(1), false)] {
        let mut iterate = base;
        for k in 1..=depth_cap {
            iterate = iterate.r_operator()?;
            let dropped = iterate.starting_at(iterate.first_index() + k);
            let lo = dropped.first_index() + 1;
            let hi = (dropped.last_index() - 1).min(lo + range_cap);
            let concave = if odd_concave { k % 2 == 1 } else { k % 2 == 0 };
            let property = if concave {
                Property::LogConcave { strict: false }
            } else {
                Property::LogConvex { strict: false }
            };
            let mut report = check_range(&dropped, property, lo, hi, 0)?;
            report.property = format!(
                "R^{k}({seq}) minus first {k} terms {}",
                if concave { "log-concave" } else { "log-convex" }
            );
            report.empirical = true;
            reports.push(report);
        }
    }
    Ok(reports)
}
