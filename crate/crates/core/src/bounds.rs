//! Ratio bounds `f(n) < S_n/S_{n-1}` (or `>`) and their induction-based
//! verification.
//!
//! The induction uses `r(n+1) = a(n+1) + b(n+1)/r(n)` and `b(n+1) < 0`:
//! once `r(n) > f(n) > 0`, the right side is bounded below by
//! `a(n+1) + b(n+1)/f(n)`, so the single step function
//! `G(n) = a(n+1) + b(n+1)/f(n) - f(n+1)` having sign `>= 0` (for lower
//! bounds; `<= 0` for upper) carries the induction. The step function need
//! not hold from the claimed start: the verifier finds the smallest start
//! from which the positivity prover certifies it and covers the gap with
//! exact ratio comparisons, exactly as the hand proofs check small cases
//! before inducting.
//!
//! Upper bounds additionally need `r(n) > 0` throughout, which neither the
//! base case nor the upper induction supplies; the verifier therefore takes
//! a proved lower-bound certificate as a positivity companion.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::posit::{PositError, PositivityCertificate, Prover, Relation, Verdict};
use crate::qfield::{BigRational, Qrt2};
use crate::recur::{RecurError, Recurrence2};
use crate::symb::{must_parse, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// A claimed bound on `S_n/S_{n-1}` for all `n >= valid_from`.
#[derive(Clone, Debug)]
pub struct BoundSpec {
    pub name: String,
    pub side: Side,
    pub f: RationalFunction,
    pub valid_from: i64,
    pub strict: bool,
}

impl BoundSpec {
    pub fn new(name: &str, side: Side, f: RationalFunction, valid_from: i64) -> Self {
        BoundSpec { name: String::from(name), side, f, valid_from, strict: true }
    }

    /// The same bound claimed from a different start.
    pub fn from_n(&self, valid_from: i64) -> Self {
        BoundSpec { valid_from, ..self.clone() }
    }
}

/// Names of the built-in bound functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinBound {
    /// Lower bound for flf ratios from 6.
    S,
    /// Upper bound for flf ratios from 6 (and in fact from 2).
    T,
    /// Lower bound for clf ratios from 1.
    L,
    /// Upper bound for clf ratios from 6.
    Ell,
    /// Lower bound for apery ratios from 2.
    P,
    /// Upper bound for apery ratios from 2, over Q(sqrt2).
    Q,
    /// Weakened lower bound for flf ratios from 2.
    Tau,
}

impl core::str::FromStr for BuiltinBound {
    type Err = BoundError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "s" => BuiltinBound::S,
            "t" => BuiltinBound::T,
            "l" => BuiltinBound::L,
            "ell" => BuiltinBound::Ell,
            "p" => BuiltinBound::P,
            "q" => BuiltinBound::Q,
            "tau" => BuiltinBound::Tau,
            other => return Err(BoundError::UnknownBuiltin(String::from(other))),
        })
    }
}

/// The bound functions used by the built-in certifications.
///
/// `tau` is non-strict: the flf ratio at n = 2 equals `tau(2) = 18` exactly,
/// so the claim from 2 only holds with `<=`; it is strict from 3.
pub fn builtin_bound(which: BuiltinBound) -> BoundSpec {
    let (name, side, expr, from, strict) = match which {
        BuiltinBound::S => ("s", Side::Lower, "16*(n^5 + n^2 + 3*n + 12)/n^5", 6, true),
        BuiltinBound::T => ("t", Side::Upper, "16*(n+1)/n", 6, true),
        BuiltinBound::L => ("l", Side::Lower, "24*(3*n^2 - 3*n + 1)/(5*n^2)", 1, true),
        BuiltinBound::Ell => ("ell", Side::Upper, "16*(n^3 - n^2 - 1)/n^3", 6, true),
        BuiltinBound::P => ("p", Side::Lower, "(33*n^3 - 48*n^2 + 24*n - 4)/n^3", 2, true),
        BuiltinBound::Q => (
            "q",
            Side::Upper,
            "((17+12*sqrt2)*n^3 - (51/2+18*sqrt2)*n^2 + (27/2+609/64*sqrt2)*n - (645/256+225/128*sqrt2))/n^3",
            2,
            true,
        ),
        BuiltinBound::Tau => ("tau", Side::Lower, "16*(n^3 + 1)/n^3", 2, false),
    };
    let mut spec = BoundSpec::new(name, side, must_parse(expr), from);
    spec.strict = strict;
    spec
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundError {
    UnknownBuiltin(String),
    Recurrence(RecurError),
    Positivity(PositError),
    /// Bound function has a pole or returns a nonpositive value where the
    /// claim requires `f > 0`.
    BadBound(String),
    /// Upper-bound verification without a proved positivity companion.
    MissingPositivityCompanion,
}

impl core::fmt::Display for BoundError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BoundError::UnknownBuiltin(s) => write!(f, "unknown builtin bound {s:?}"),
            BoundError::Recurrence(e) => write!(f, "{e}"),
            BoundError::Positivity(e) => write!(f, "{e}"),
            BoundError::BadBound(msg) => write!(f, "{msg}"),
            BoundError::MissingPositivityCompanion => write!(
                f,
                "upper-bound verification needs a proved lower bound as positivity companion"
            ),
        }
    }
}

impl From<RecurError> for BoundError {
    fn from(e: RecurError) -> Self {
        BoundError::Recurrence(e)
    }
}

impl From<PositError> for BoundError {
    fn from(e: PositError) -> Self {
        BoundError::Positivity(e)
    }
}

/// One exact base comparison `ratio(n)` vs `f(n)`.
#[derive(Clone, Debug)]
pub struct BaseCheck {
    pub index: i64,
    pub ratio: BigRational,
    pub bound_value: Qrt2,
    pub holds: bool,
}

/// How sequence positivity over the inductive window is justified.
#[derive(Clone, Debug)]
pub enum PositivitySupport {
    /// Lower bounds: `f > 0` proved symbolically propagates `r(n) > f(n) > 0`.
    SelfPropagating { f_positive: PositivityCertificate },
    /// Upper bounds: a proved lower-bound certificate supplies `r(n) > 0`.
    FromLowerBound { bound_name: String, valid_from: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundVerdict {
    Proved,
    /// An exact base comparison failed at this index.
    RefutedAt(i64),
    /// The positivity prover could not settle a required sign.
    Inconclusive,
}

/// Certificate for `f(n) < S_n/S_{n-1}` (or `>`) for all `n >= valid_from`.
#[derive(Clone, Debug)]
pub struct BoundCertificate {
    pub bound: BoundSpec,
    pub recurrence: String,
    /// Exact comparisons covering `[valid_from, induction_from]`.
    pub base_checks: Vec<BaseCheck>,
    /// Start of the symbolic induction (base checks cover the gap).
    pub induction_from: i64,
    /// Sign certificate for the step function `a(n+1) + b(n+1)/f(n) - f(n+1)`;
    /// absent when verification stopped before the step.
    pub step: Option<PositivityCertificate>,
    /// Certificate for `b(n+1) < 0` over the inductive window.
    pub b_sign: Option<PositivityCertificate>,
    pub positivity: PositivitySupport,
    /// Exactly checked positive terms `S_0 ..= S_valid_from`.
    pub terms_positive_to: i64,
    pub verdict: BoundVerdict,
}

impl BoundCertificate {
    pub fn proved(&self) -> bool {
        self.verdict == BoundVerdict::Proved
    }

    /// The step function whose sign carries the induction.
    pub fn step_function(&self) -> Option<&RationalFunction> {
        self.step.as_ref().map(|c| &c.subject)
    }
}

/// Verifies a ratio bound against a recurrence.
///
/// For upper bounds a proved lower-bound certificate must accompany the call
/// (`companion`); it supplies positivity of the ratios over the window.
pub fn verify_ratio_bound(
    prover: &Prover,
    rec: &Recurrence2,
    bound: &BoundSpec,
    companion: Option<&BoundCertificate>,
) -> Result<BoundCertificate, BoundError> {
    let from = bound.valid_from;

    // Sequence positivity up to the window start, checked exactly.
    let head = rec.terms_upto(from.max(1))?;
    if let Some(k) = head.iter().position(|t| !t.is_positive()) {
        return Err(BoundError::BadBound(format!(
            "sequence {} is not positive at index {k}",
            rec.name
        )));
    }

    let positivity = match bound.side {
        Side::Lower => {
            let f_positive = prover.sign_for_all(&bound.f, from, Relation::Gt0)?;
            match f_positive.verdict {
                Verdict::Proved => {}
                Verdict::RefutedAt(_) => {
                    // f > 0 is an invariant of a usable lower bound.
                    return Err(BoundError::BadBound(format!(
                        "lower bound {} is not positive from {from}",
                        bound.name
                    )));
                }
                Verdict::Inconclusive => {
                    return Ok(unproved(
                        rec,
                        bound,
                        PositivitySupport::SelfPropagating { f_positive },
                        None,
                        BoundVerdict::Inconclusive,
                    ));
                }
            }
            PositivitySupport::SelfPropagating { f_positive }
        }
        Side::Upper => {
            let lower = companion.ok_or(BoundError::MissingPositivityCompanion)?;
            if !lower.proved()
                || lower.bound.side != Side::Lower
                || lower.recurrence != rec.name
                || lower.bound.valid_from > from
            {
                return Err(BoundError::MissingPositivityCompanion);
            }
            PositivitySupport::FromLowerBound {
                bound_name: lower.bound.name.clone(),
                valid_from: lower.bound.valid_from,
            }
        }
    };

    // Base comparison at the window start, before any symbolic work: a
    // claim false at its own start refutes immediately.
    {
        let ratio = rec.ratio(from)?;
        let bound_value = bound.f.eval_int(from).map_err(|_| {
            BoundError::BadBound(format!("bound {} has a pole at {from}", bound.name))
        })?;
        let diff = Qrt2::from_rational(ratio.clone()) - &bound_value;
        let holds = match (bound.side, bound.strict) {
            (Side::Lower, true) => diff.sign() > 0,
            (Side::Lower, false) => diff.sign() >= 0,
            (Side::Upper, true) => diff.sign() < 0,
            (Side::Upper, false) => diff.sign() <= 0,
        };
        if !holds {
            let mut cert = unproved(rec, bound, positivity, None, BoundVerdict::RefutedAt(from));
            cert.base_checks = alloc::vec![BaseCheck { index: from, ratio, bound_value, holds }];
            return Ok(cert);
        }
    }

    // Step function G(n) = a(n+1) + b(n+1)/f(n) - f(n+1).
    let a1 = rec.a.shift(1);
    let b1 = rec.b.shift(1);
    let step_fn = &(&a1 + &b1.checked_div(&bound.f).map_err(|_| {
        BoundError::BadBound(format!("bound {} vanishes identically", bound.name))
    })?) - &bound.f.shift(1);
    let step_rel = match bound.side {
        Side::Lower => Relation::Ge0,
        Side::Upper => Relation::Le0,
    };

    // Find the smallest start >= from at which the symbolic step certifies;
    // every index skipped over becomes an exact base comparison.
    let mut induction_from = from;
    let step = loop {
        match prover.sign_for_all(&step_fn, induction_from, step_rel) {
            Ok(cert) => match cert.verdict {
                Verdict::Proved => break cert,
                Verdict::RefutedAt(k) => {
                    if k - from >= MAX_BASE_PREFIX {
                        return Ok(unproved(
                            rec, bound, positivity,
                            Some(cert),
                            BoundVerdict::Inconclusive,
                        ));
                    }
                    induction_from = k + 1;
                }
                Verdict::Inconclusive => {
                    return Ok(unproved(
                        rec, bound, positivity,
                        Some(cert),
                        BoundVerdict::Inconclusive,
                    ));
                }
            },
            Err(e) => return Err(e.into()),
        }
    };

    // b(n+1) < 0 over the inductive window.
    let b_sign = prover.sign_for_all(&b1, induction_from, Relation::Lt0)?;
    if !b_sign.proved() {
        let mut cert = unproved(rec, bound, positivity, Some(step), BoundVerdict::Inconclusive);
        cert.b_sign = Some(b_sign);
        return Ok(cert);
    }

    // Exact base comparisons on [from, induction_from].
    let terms = rec.terms_upto(induction_from)?;
    let mut base_checks = Vec::new();
    let mut verdict = BoundVerdict::Proved;
    for k in from..=induction_from {
        let prev = &terms[k as usize - 1];
        if prev.is_zero() {
            return Err(BoundError::Recurrence(RecurError::ZeroPredecessor(k)));
        }
        let ratio = &terms[k as usize] / prev;
        let bound_value = bound
            .f
            .eval_int(k)
            .map_err(|_| BoundError::BadBound(format!("bound {} has a pole at {k}", bound.name)))?;
        let diff = Qrt2::from_rational(ratio.clone()) - &bound_value;
        let holds = match (bound.side, bound.strict) {
            (Side::Lower, true) => diff.sign() > 0,
            (Side::Lower, false) => diff.sign() >= 0,
            (Side::Upper, true) => diff.sign() < 0,
            (Side::Upper, false) => diff.sign() <= 0,
        };
        base_checks.push(BaseCheck { index: k, ratio, bound_value, holds });
        if !holds {
            verdict = BoundVerdict::RefutedAt(k);
            break;
        }
    }

    Ok(BoundCertificate {
        bound: bound.clone(),
        recurrence: rec.name.clone(),
        base_checks,
        induction_from,
        step: Some(step),
        b_sign: Some(b_sign),
        positivity,
        terms_positive_to: from.max(1),
        verdict,
    })
}

/// Bound on how many leading indices may be settled exactly before the
/// symbolic step must take over.
const MAX_BASE_PREFIX: i64 = 4096;

fn unproved(
    rec: &Recurrence2,
    bound: &BoundSpec,
    positivity: PositivitySupport,
    step: Option<PositivityCertificate>,
    verdict: BoundVerdict,
) -> BoundCertificate {
    let from = bound.valid_from;
    BoundCertificate {
        bound: bound.clone(),
        recurrence: rec.name.clone(),
        base_checks: Vec::new(),
        induction_from: from,
        step,
        b_sign: None,
        positivity,
        terms_positive_to: from.max(1),
        verdict,
    }
}

/// Convenience: verify a lower bound, then the paired upper bound with the
/// lower certificate as its positivity companion.
pub fn verify_bound_pair(
    prover: &Prover,
    rec: &Recurrence2,
    lower: &BoundSpec,
    upper: &BoundSpec,
) -> Result<(BoundCertificate, BoundCertificate), BoundError> {
    let lower_cert = verify_ratio_bound(prover, rec, lower, None)?;
    let upper_cert = verify_ratio_bound(prover, rec, upper, Some(&lower_cert))?;
    Ok((lower_cert, upper_cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::rat;
    use crate::recur::Builtin;

    fn prover() -> Prover {
        Prover::default()
    }

    #[test]
    fn builtin_bound_values() {
        let s = builtin_bound(BuiltinBound::S);
        assert_eq!(s.f.eval_int(6).unwrap(), Qrt2::from_rational(rat(1307, 81)));
        let p = builtin_bound(BuiltinBound::P);
        assert_eq!(p.f.eval_int(1).unwrap(), Qrt2::from_int(5));
        // tau = s - 48(n+4)/n^5
        let tau = builtin_bound(BuiltinBound::Tau);
        let diff = &s.f - &tau.f;
        assert_eq!(diff, crate::symb::must_parse("48*(n+4)/n^5"));
    }

    #[test]
    fn lemma_lower_bound_proves_from_6() {
        let flf = Recurrence2::builtin(Builtin::Flf);
        let s = builtin_bound(BuiltinBound::S);
        let cert = verify_ratio_bound(&prover(), &flf, &s, None).unwrap();
        assert!(cert.proved());
        assert_eq!(cert.induction_from, 6);
        // step numerator is a positive rational multiple of the hand witness
        let witness = crate::symb::parse_polynomial("7*n^4 + 5*n^3 - 9*n^2 - 27*n - 44").unwrap();
        let step = cert.step_function().expect("proved cert has a step");
        let c = RationalFunction::from_poly(step.num().clone())
            .proportionality(&RationalFunction::from_poly(witness))
            .expect("proportional");
        assert!(c.is_positive() && c.is_rational());
    }

    #[test]
    fn lemma_lower_bound_refuted_from_5() {
        let flf = Recurrence2::builtin(Builtin::Flf);
        let s = builtin_bound(BuiltinBound::S).from_n(5);
        let cert = verify_ratio_bound(&prover(), &flf, &s, None).unwrap();
        assert_eq!(cert.verdict, BoundVerdict::RefutedAt(5));
        let base = &cert.base_checks[0];
        assert_eq!(base.ratio, rat(10152, 625));
        assert_eq!(base.bound_value, Qrt2::from_rational(rat(50832, 3125)));
    }

    #[test]
    fn upper_bound_requires_companion() {
        let flf = Recurrence2::builtin(Builtin::Flf);
        let t = builtin_bound(BuiltinBound::T);
        assert!(matches!(
            verify_ratio_bound(&prover(), &flf, &t, None),
            Err(BoundError::MissingPositivityCompanion)
        ));
        let s = builtin_bound(BuiltinBound::S);
        let (s_cert, t_cert) = verify_bound_pair(&prover(), &flf, &s, &t).unwrap();
        assert!(s_cert.proved() && t_cert.proved());
    }

    #[test]
    fn apery_lower_bound_proves_from_2() {
        let apery = Recurrence2::builtin(Builtin::Apery);
        let p = builtin_bound(BuiltinBound::P);
        let cert = verify_ratio_bound(&prover(), &apery, &p, None).unwrap();
        assert!(cert.proved());
    }

    #[test]
    fn clf_lower_bound_needs_a_base_prefix() {
        // The symbolic step for l(n) only holds from n = 3; indices 1 and 2
        // are settled by exact ratio comparisons.
        let clf = Recurrence2::builtin(Builtin::Clf);
        let l = builtin_bound(BuiltinBound::L);
        let cert = verify_ratio_bound(&prover(), &clf, &l, None).unwrap();
        assert!(cert.proved());
        assert!(cert.induction_from >= 3);
        assert_eq!(cert.base_checks[0].index, 1);
        assert!(cert.base_checks.iter().all(|c| c.holds));
    }

    #[test]
    fn monotone_weakening() {
        let flf = Recurrence2::builtin(Builtin::Flf);
        for start in [7, 10, 25] {
            let s = builtin_bound(BuiltinBound::S).from_n(start);
            let cert = verify_ratio_bound(&prover(), &flf, &s, None).unwrap();
            assert!(cert.proved(), "s should prove from {start}");
        }
    }
}
