//! Decide and certify the sign of a polynomial or rational function at every
//! integer `n >= N`.
//!
//! The decision procedure for a polynomial `p` with positive leading
//! coefficient: find a shift `M >= N` at which every coefficient of `p(n+M)`
//! is nonnegative (such an `M` exists because every derivative of `p` is
//! eventually positive), then evaluate the finitely many integers in
//! `[N, M]` exactly. A violation found while scanning refutes the claim at
//! the smallest violating integer; exceeding the configured shift cap yields
//! an inconclusive verdict, never a silent pass. Rational functions are
//! handled by certifying numerator and denominator signs separately.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::qfield::{BigRational, Qrt2};
use crate::symb::{Polynomial, RationalFunction};

/// Default cap on the coefficient-test shift.
pub const DEFAULT_SHIFT_CAP: i64 = 1_000_000;

/// The claimed sign relation, e.g. `x(n) > 0` for all `n >= N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Gt0,
    Ge0,
    Lt0,
    Le0,
}

impl Relation {
    pub fn strict(self) -> bool {
        matches!(self, Relation::Gt0 | Relation::Lt0)
    }

    /// The relation satisfied by `-x` when `x` satisfies `self`.
    pub fn flipped(self) -> Self {
        match self {
            Relation::Gt0 => Relation::Lt0,
            Relation::Ge0 => Relation::Le0,
            Relation::Lt0 => Relation::Gt0,
            Relation::Le0 => Relation::Ge0,
        }
    }

    /// True if a value of the given exact sign satisfies the relation.
    pub fn admits(self, sign: i32) -> bool {
        match self {
            Relation::Gt0 => sign > 0,
            Relation::Ge0 => sign >= 0,
            Relation::Lt0 => sign < 0,
            Relation::Le0 => sign <= 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Gt0 => ">0",
            Relation::Ge0 => ">=0",
            Relation::Lt0 => "<0",
            Relation::Le0 => "<=0",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Proved,
    RefutedAt(i64),
    Inconclusive,
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, Verdict::Proved)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositError {
    /// The denominator vanishes at an integer in the claimed range.
    PoleAt(i64),
    /// The denominator has no fixed sign over the claimed range, so the
    /// numerator/denominator decomposition cannot certify the relation.
    DenominatorSignChange(i64),
}

impl core::fmt::Display for PositError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PositError::PoleAt(n) => write!(f, "integer pole at n = {n}"),
            PositError::DenominatorSignChange(n) => {
                write!(f, "denominator changes sign at n = {n}")
            }
        }
    }
}

/// Replayable record of one sign claim `subject(n) rel 0` for all `n >= from`.
#[derive(Clone, Debug)]
pub struct PositivityCertificate {
    pub subject: RationalFunction,
    pub from: i64,
    pub relation: Relation,
    /// Shift at which the coefficient test succeeded (meaningful when proved).
    pub shift_used: i64,
    /// Exact evaluations covering `[from, shift_used]`.
    pub prefix_checks: Vec<(i64, Qrt2)>,
    pub verdict: Verdict,
    /// Human-readable notes (cap diagnostics and the like).
    pub notes: Vec<String>,
}

impl PositivityCertificate {
    pub fn proved(&self) -> bool {
        self.verdict.is_proved()
    }
}

/// Positivity prover with a configurable shift cap.
#[derive(Clone, Copy, Debug)]
pub struct Prover {
    pub shift_cap: i64,
}

impl Default for Prover {
    fn default() -> Self {
        Prover { shift_cap: DEFAULT_SHIFT_CAP }
    }
}

/// Denominator analysis outcome: a hard failure or cap exhaustion.
enum DenOutcome {
    DenFailed(PositError),
    DenUndecided,
}
use DenOutcome::{DenFailed, DenUndecided};

/// Outcome of the raw polynomial search, before packaging.
struct Search {
    shift_used: i64,
    checks: Vec<(i64, Qrt2)>,
    verdict: Verdict,
    note: Option<String>,
}

impl Prover {
    pub fn new(shift_cap: i64) -> Self {
        Prover { shift_cap }
    }

    /// Complete decision of `p(n) rel 0` for all integers `n >= from`.
    pub fn prove_positive_poly(
        &self,
        p: &Polynomial,
        from: i64,
        relation: Relation,
    ) -> PositivityCertificate {
        let search = self.search(p, from, relation);
        PositivityCertificate {
            subject: RationalFunction::from_poly(p.clone()),
            from,
            relation,
            shift_used: search.shift_used,
            prefix_checks: search.checks,
            verdict: search.verdict,
            notes: search.note.into_iter().collect(),
        }
    }

    /// Certifies `x(n) rel 0` for all integers `n >= from` by certifying the
    /// numerator and denominator separately. The denominator must be proved
    /// strictly sign-definite, which also rules out integer poles.
    pub fn sign_for_all(
        &self,
        x: &RationalFunction,
        from: i64,
        relation: Relation,
    ) -> Result<PositivityCertificate, PositError> {
        let den_sign = match self.denominator_sign(x.den(), from) {
            Ok(sign) => sign,
            Err(DenUndecided) => {
                return Ok(PositivityCertificate {
                    subject: x.clone(),
                    from,
                    relation,
                    shift_used: from,
                    prefix_checks: Vec::new(),
                    verdict: Verdict::Inconclusive,
                    notes: alloc::vec![String::from(
                        "denominator sign undecided under the shift cap"
                    )],
                });
            }
            Err(DenFailed(e)) => return Err(e),
        };
        // Fold the denominator sign into the numerator's required relation.
        let num_rel = if den_sign > 0 { relation } else { relation.flipped() };
        let num_search = self.search(x.num(), from, num_rel);

        let verdict = num_search.verdict.clone();
        let shift_used = num_search.shift_used;
        // Certificates carry evaluations of x itself, not of its numerator.
        let prefix_checks = match verdict {
            Verdict::Proved => {
                let mut checks = Vec::new();
                for k in from..=shift_used {
                    let v = x.eval_int(k).map_err(|_| PositError::PoleAt(k))?;
                    checks.push((k, v));
                }
                checks
            }
            Verdict::RefutedAt(k) => {
                let v = x.eval_int(k).map_err(|_| PositError::PoleAt(k))?;
                alloc::vec![(k, v)]
            }
            Verdict::Inconclusive => Vec::new(),
        };
        Ok(PositivityCertificate {
            subject: x.clone(),
            from,
            relation,
            shift_used,
            prefix_checks,
            verdict,
            notes: num_search.note.into_iter().collect(),
        })
    }

    /// Proves the denominator strictly positive or strictly negative on
    /// `[from, ∞)`, returning its sign. Cap exhaustion is soft (the caller
    /// downgrades to an inconclusive verdict); poles and sign changes are
    /// hard precondition failures.
    fn denominator_sign(&self, den: &Polynomial, from: i64) -> Result<i32, DenOutcome> {
        let lead = den.leading().expect("canonical denominator is nonzero").sign();
        let target = if lead > 0 { Relation::Gt0 } else { Relation::Lt0 };
        let search = self.search(den, from, target);
        match search.verdict {
            Verdict::Proved => Ok(lead),
            Verdict::RefutedAt(k) => {
                let value = den.eval_rational(&BigRational::from_integer(k.into()));
                if value.is_zero() {
                    return Err(DenFailed(PositError::PoleAt(k)));
                }
                // Wrong sign without a zero hit: march to the crossing back
                // to the eventual sign; a pole sits there if the crossing
                // lands on an integer.
                let wrong = value.sign();
                let bound = cauchy_bound(den).max(k) + 1;
                for m in k + 1..=bound {
                    let v = den.eval_rational(&BigRational::from_integer(m.into()));
                    if v.is_zero() {
                        return Err(DenFailed(PositError::PoleAt(m)));
                    }
                    if v.sign() != wrong {
                        break;
                    }
                }
                Err(DenFailed(PositError::DenominatorSignChange(k)))
            }
            Verdict::Inconclusive => Err(DenUndecided),
        }
    }

    fn search(&self, p: &Polynomial, from: i64, relation: Relation) -> Search {
        // The coefficient test runs on q = ±p so its leading coefficient is
        // positive; exact evaluations always record values of p itself.
        let q = match relation {
            Relation::Lt0 | Relation::Le0 => -p,
            _ => p.clone(),
        };
        if q.is_zero() {
            return if !relation.strict() {
                Search {
                    shift_used: from,
                    checks: alloc::vec![(from, Qrt2::zero())],
                    verdict: Verdict::Proved,
                    note: None,
                }
            } else {
                Search {
                    shift_used: from,
                    checks: Vec::new(),
                    verdict: Verdict::RefutedAt(from),
                    note: None,
                }
            };
        }

        if q.leading().unwrap().sign() < 0 {
            // p is eventually on the wrong side of the relation: a violation
            // exists; scan forward for the first one.
            return self.scan_for_violation(p, relation, from);
        }

        let mut checks: Vec<(i64, Qrt2)> = Vec::new();
        let mut scanned_to = from; // next index whose exact value is still unknown
        let mut shift = from.max(0);
        loop {
            if coefficient_test_passes(&q, shift) {
                // q(n) >= 0 for n >= shift, strictly for n > shift; verify
                // the remaining prefix [scanned_to, shift] exactly.
                for k in scanned_to..=shift {
                    let v = p.eval_rational(&BigRational::from_integer(k.into()));
                    if !relation.admits(v.sign()) {
                        return Search {
                            shift_used: shift,
                            checks,
                            verdict: Verdict::RefutedAt(k),
                            note: None,
                        };
                    }
                    checks.push((k, v));
                }
                return Search { shift_used: shift, checks, verdict: Verdict::Proved, note: None };
            }
            let next = if shift <= 0 { 1 } else { shift.saturating_mul(2) };
            // Evaluate the stretch being skipped past, so refutations surface
            // at the smallest violating integer.
            for k in scanned_to..next.min(self.shift_cap + 1) {
                let v = p.eval_rational(&BigRational::from_integer(k.into()));
                if !relation.admits(v.sign()) {
                    return Search {
                        shift_used: shift,
                        checks,
                        verdict: Verdict::RefutedAt(k),
                        note: None,
                    };
                }
                checks.push((k, v));
            }
            scanned_to = scanned_to.max(next.min(self.shift_cap + 1));
            if next > self.shift_cap {
                return Search {
                    shift_used: shift,
                    checks,
                    verdict: Verdict::Inconclusive,
                    note: Some(format!(
                        "coefficient test failed for every shift up to cap {}",
                        self.shift_cap
                    )),
                };
            }
            shift = next;
        }
    }

    fn scan_for_violation(&self, p: &Polynomial, relation: Relation, from: i64) -> Search {
        let mut checks = Vec::new();
        let mut k = from;
        // The first violation is at most max(from, Cauchy root bound) + 1.
        let bound = cauchy_bound(p).max(from) + 1;
        while k <= bound {
            let v = p.eval_rational(&BigRational::from_integer(k.into()));
            if !relation.admits(v.sign()) {
                return Search { shift_used: from, checks, verdict: Verdict::RefutedAt(k), note: None };
            }
            checks.push((k, v));
            k += 1;
        }
        unreachable!("eventually negative polynomial must violate a positivity relation");
    }
}

/// All coefficients of `p(x + shift)` nonnegative (with the leading one
/// positive by assumption): proves `p >= 0` on `[shift, ∞)` and `p > 0` on
/// `(shift, ∞)`.
fn coefficient_test_passes(p: &Polynomial, shift: i64) -> bool {
    p.shift(shift).coeffs().iter().all(|c| c.sign() >= 0)
}

/// An integer beyond every real root: `1 + max|c_i| / lower(|lead|)`, using
/// the rational over-estimate `|a + b√2| <= |a| + 2|b|` and a rational
/// positive under-estimate for the leading coefficient.
fn cauchy_bound(p: &Polynomial) -> i64 {
    use num_traits::ToPrimitive;
    let zero = BigRational::from_integer(0.into());
    let two = BigRational::from_integer(2.into());
    let abs = |r: &BigRational| if r < &zero { -r.clone() } else { r.clone() };
    let upper = |c: &Qrt2| abs(c.rat_part()) + &two * abs(c.irr_part());

    let lead = p.leading().expect("nonzero polynomial");
    let lead_low = {
        let a = abs(lead.rat_part());
        let b = abs(lead.irr_part());
        if lead.irr_part() >= &zero && lead.rat_part() >= &zero
            || lead.irr_part() <= &zero && lead.rat_part() <= &zero
        {
            // same signs: |a + b sqrt2| >= |a| + |b|
            &a + &b
        } else {
            // mixed signs: |a + b sqrt2| = |a^2 - 2 b^2| / (|a| + sqrt2 |b|)
            //             >= |a^2 - 2 b^2| / (|a| + 2 |b|)
            let norm = abs(&(&(&a * &a) - &(&two * &b * &b)));
            norm / (&a + &two * &b)
        }
    };
    let mut max_mag = zero.clone();
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        let m = upper(c);
        if m > max_mag {
            max_mag = m;
        }
    }
    let bound = max_mag / lead_low + &two;
    bound.ceil().to_integer().to_i64().unwrap_or(i64::MAX)
}

/// Independent re-check of a proved certificate: re-evaluates every prefix
/// point, confirms the prefix covers `[from, shift_used]`, and re-runs the
/// shifted-coefficient condition at the recorded shift — without repeating
/// the search.
pub fn replay(cert: &PositivityCertificate) -> bool {
    if !cert.proved() {
        return false;
    }
    let mut expected = cert.from;
    for (k, recorded) in &cert.prefix_checks {
        if *k != expected {
            return false;
        }
        let actual = match cert.subject.eval_int(*k) {
            Ok(v) => v,
            Err(_) => return false,
        };
        if actual != *recorded || !cert.relation.admits(actual.sign()) {
            return false;
        }
        expected += 1;
    }
    if expected != cert.shift_used + 1 {
        return false;
    }
    let den = cert.subject.den();
    let den_lead_sign = match den.leading() {
        Some(c) => c.sign(),
        None => return false,
    };
    let den_poly = if den_lead_sign > 0 { den.clone() } else { -den };
    if !shifted_coeffs_ok(&den_poly, cert.shift_used) {
        return false;
    }
    let num_rel = if den_lead_sign > 0 { cert.relation } else { cert.relation.flipped() };
    let num_poly = match num_rel {
        Relation::Gt0 | Relation::Ge0 => cert.subject.num().clone(),
        Relation::Lt0 | Relation::Le0 => -cert.subject.num(),
    };
    if num_poly.is_zero() {
        return !num_rel.strict();
    }
    shifted_coeffs_ok(&num_poly, cert.shift_used)
}

fn shifted_coeffs_ok(p: &Polynomial, shift: i64) -> bool {
    let shifted = p.shift(shift);
    shifted.coeffs().iter().all(|c| c.sign() >= 0)
        && shifted.leading().map(|c| c.sign() > 0).unwrap_or(false)
}
