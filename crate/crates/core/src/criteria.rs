//! The four certification schemas, each reducing a log-behavior claim to
//! positivity facts plus exactly checked small cases:
//!
//! * log-convexity of the difference sequence `{S_n^2 - S_{n-1} S_{n+1}}`
//!   via a cubic in the ratio whose coefficients come from the recurrence
//!   (`thm31`);
//! * ratio log-concavity via a quartic sandwiched between two ratio bounds
//!   (`thm41`);
//! * ratio log-convexity via the same quartic with a lower bound alone
//!   (`thm42`);
//! * strict log-convexity of `{n! S_n}` via a bound on `r(n)/r(n+1)`
//!   (`factorial`).
//!
//! Each certify operation resolves its bound inputs to the smallest window
//! from which they actually prove, certifies the schema's conditions from
//! the resulting start, and covers the gap down to the claimed conclusion
//! start with exact term arithmetic, mirroring the "easy to verify for
//! small n" prefaces of the hand proofs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{verify_ratio_bound, BoundCertificate, BoundError, BoundSpec, BoundVerdict, Side};
use crate::posit::{PositError, PositivityCertificate, Prover, Relation, Verdict};
use crate::qfield::BigRational;
use crate::recur::{RecurError, Recurrence2};
use crate::symb::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schema {
    Thm31,
    Thm41,
    Thm42,
    Factorial,
}

impl Schema {
    pub fn as_str(self) -> &'static str {
        match self {
            Schema::Thm31 => "thm31",
            Schema::Thm41 => "thm41",
            Schema::Thm42 => "thm42",
            Schema::Factorial => "factorial",
        }
    }
}

impl core::str::FromStr for Schema {
    type Err = CriteriaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "thm31" => Schema::Thm31,
            "thm41" => Schema::Thm41,
            "thm42" => Schema::Thm42,
            "factorial" => Schema::Factorial,
            other => return Err(CriteriaError::BadInput(format!("unknown schema {other:?}"))),
        })
    }
}

#[derive(Clone, Debug)]
pub enum CriteriaError {
    Bound(BoundError),
    Positivity(PositError),
    Recurrence(RecurError),
    BadInput(String),
}

impl core::fmt::Display for CriteriaError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CriteriaError::Bound(e) => write!(f, "{e}"),
            CriteriaError::Positivity(e) => write!(f, "{e}"),
            CriteriaError::Recurrence(e) => write!(f, "{e}"),
            CriteriaError::BadInput(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<BoundError> for CriteriaError {
    fn from(e: BoundError) -> Self {
        CriteriaError::Bound(e)
    }
}

impl From<PositError> for CriteriaError {
    fn from(e: PositError) -> Self {
        CriteriaError::Positivity(e)
    }
}

impl From<RecurError> for CriteriaError {
    fn from(e: RecurError) -> Self {
        CriteriaError::Recurrence(e)
    }
}

/// The cubic's coefficients in the ratio `x = S_n/S_{n-1}`, built from the
/// shifted recurrence coefficients. `delta` is the discriminant-style
/// combination `4 c2^2 - 12 c1 c3` controlling monotonicity of the cubic.
#[derive(Clone, Debug)]
pub struct CubicCoefficients {
    pub c0: RationalFunction,
    pub c1: RationalFunction,
    pub c2: RationalFunction,
    pub c3: RationalFunction,
    pub delta: RationalFunction,
}

impl CubicCoefficients {
    /// Re-derives `delta` from the stored coefficients and compares
    /// structurally.
    pub fn delta_consistent(&self) -> bool {
        let four = RationalFunction::from_int(4);
        let twelve = RationalFunction::from_int(12);
        self.delta == &(&four * &(&self.c2 * &self.c2)) - &(&twelve * &(&self.c1 * &self.c3))
    }

    /// The cubic `c3 f^3 + c2 f^2 + c1 f + c0` evaluated at a bound function.
    pub fn cubic_at(&self, f: &RationalFunction) -> RationalFunction {
        let f2 = f * f;
        let f3 = &f2 * f;
        &(&(&self.c3 * &f3) + &(&self.c2 * &f2)) + &(&(&self.c1 * f) + &self.c0)
    }
}

/// Builds the four cubic coefficients from `a`, `b` shifted to n+1..n+3.
pub fn cubic_coeffs(rec: &Recurrence2) -> CubicCoefficients {
    let a1 = rec.a.shift(1);
    let a2 = rec.a.shift(2);
    let a3 = rec.a.shift(3);
    let b1 = rec.b.shift(1);
    let b2 = rec.b.shift(2);
    let b3 = rec.b.shift(3);

    let c0 = -&(&(&b1 * &b1) * &(&(&(&a2 * &a2) + &b1) - &(&(&a2 * &a3) + &b3)));

    let c1_inner = &(&(&(&RationalFunction::from_int(2) * &(&a2 * &b1))
        + &(&RationalFunction::from_int(2) * &(&(&a3 * &a2) * &a1)))
        + &(&(&a3 * &b2) + &(&RationalFunction::from_int(2) * &(&a1 * &b3))))
        - &(&(&(&RationalFunction::from_int(2) * &(&(&a2 * &a2) * &a1))
            + &(&RationalFunction::from_int(2) * &(&a2 * &b2)))
            + &(&RationalFunction::from_int(3) * &(&a1 * &b1)));
    let c1 = &b1 * &c1_inner;

    let a1_sq = &a1 * &a1;
    let a2_sq = &a2 * &a2;
    let c2_pos = &(&(&(&RationalFunction::from_int(4) * &(&(&a1 * &a2) * &b1))
        + &(&RationalFunction::from_int(2) * &(&b1 * &b2)))
        + &(&(&a1_sq * &(&a2 * &a3)) + &(&(&a1 * &a3) * &b2)))
        + &(&a1_sq * &b3);
    let c2_neg = &(&(&(&(&RationalFunction::from_int(3) * &(&a1_sq * &b1))
        + &(&(&a3 * &a2) * &b1))
        + &(&(&a2_sq * &a1_sq) + &(&b3 * &b1)))
        + &(&RationalFunction::from_int(2) * &(&(&a2 * &a1) * &b2)))
        + &(&b2 * &b2);
    let c2 = &c2_pos - &c2_neg;

    let c3_pos = &(&RationalFunction::from_int(2) * &(&a1_sq * &a2))
        + &(&RationalFunction::from_int(2) * &(&a1 * &b2));
    let c3_neg = &(&(&(&a1 * &b3) + &(&a1_sq * &a1)) + &(&(&a1 * &a2) * &a3)) + &(&a3 * &b2);
    let c3 = &c3_pos - &c3_neg;

    let delta = &(&RationalFunction::from_int(4) * &(&c2 * &c2))
        - &(&RationalFunction::from_int(12) * &(&c1 * &c3));

    CubicCoefficients { c0, c1, c2, c3, delta }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
    Gt,
    Ge,
}

impl CmpOp {
    pub fn holds(self, lhs: &BigRational, rhs: &BigRational) -> bool {
        match self {
            CmpOp::Lt => lhs < rhs,
            CmpOp::Le => lhs <= rhs,
            CmpOp::Gt => lhs > rhs,
            CmpOp::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
        }
    }
}

/// One exactly-checked instance of the concluded inequality.
#[derive(Clone, Debug)]
pub struct SmallCase {
    pub n: i64,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub op: CmpOp,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriterionVerdict {
    Proved,
    Refuted { at: i64, item: String },
    Inconclusive { item: String },
}

impl CriterionVerdict {
    pub fn is_proved(&self) -> bool {
        matches!(self, CriterionVerdict::Proved)
    }
}

/// Certificate of one schema run: bound inputs, named condition witnesses,
/// the exactly checked small-case prefix, and the merged verdict.
#[derive(Clone, Debug)]
pub struct CriterionCertificate {
    pub schema: Schema,
    pub recurrence: String,
    pub bound_inputs: Vec<BoundCertificate>,
    pub condition_witnesses: Vec<(String, PositivityCertificate)>,
    pub small_cases: Vec<SmallCase>,
    pub verdict: CriterionVerdict,
    /// Start of the concluded inequality after merging small cases.
    pub conclusion_from: i64,
    /// Start from which the symbolic criterion itself certifies.
    pub certified_from: i64,
    /// Statement of the concluded inequality, for reports.
    pub conclusion: String,
}

impl CriterionCertificate {
    pub fn proved(&self) -> bool {
        self.verdict.is_proved()
    }

    pub fn witness(&self, name: &str) -> Option<&PositivityCertificate> {
        self.condition_witnesses
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
    }
}

/// Gap between the requested conclusion start and the certified start that
/// may be closed by exact checks.
const MAX_SMALL_CASE_GAP: i64 = 4096;
/// Rounds of window climbing while resolving a bound.
const MAX_RESOLVE_ROUNDS: usize = 64;

/// Verifies a bound at the smallest window `>= floor` from which it proves,
/// climbing past refuted base cases. Returns the last certificate if the
/// climb stalls (caller maps non-proved to inconclusive).
fn resolve_bound(
    prover: &Prover,
    rec: &Recurrence2,
    spec: &BoundSpec,
    needed_from: i64,
    companion: Option<&BoundCertificate>,
) -> Result<BoundCertificate, CriteriaError> {
    let floor = match companion {
        Some(c) => c.bound.valid_from,
        None => i64::MIN,
    };
    let mut start = spec.valid_from.min(needed_from).max(floor).max(1);
    let mut last = None;
    for _ in 0..MAX_RESOLVE_ROUNDS {
        let cert = verify_ratio_bound(prover, rec, &spec.from_n(start), companion)?;
        match cert.verdict {
            BoundVerdict::Proved => return Ok(cert),
            BoundVerdict::RefutedAt(k) => {
                start = k + 1;
                last = Some(cert);
            }
            BoundVerdict::Inconclusive => return Ok(cert),
        }
    }
    Ok(last.expect("at least one resolution round ran"))
}

/// Collects named positivity sub-proofs, recording the first failure.
struct ConditionSet<'a> {
    prover: &'a Prover,
    witnesses: Vec<(String, PositivityCertificate)>,
    failure: Option<CriterionVerdict>,
}

impl<'a> ConditionSet<'a> {
    fn new(prover: &'a Prover) -> Self {
        ConditionSet { prover, witnesses: Vec::new(), failure: None }
    }

    fn require(
        &mut self,
        name: &str,
        x: &RationalFunction,
        from: i64,
        rel: Relation,
    ) -> Result<(), CriteriaError> {
        if self.failure.is_some() {
            return Ok(());
        }
        let cert = self.prover.sign_for_all(x, from, rel)?;
        match cert.verdict {
            Verdict::Proved => {}
            Verdict::RefutedAt(k) => {
                self.failure =
                    Some(CriterionVerdict::Refuted { at: k, item: String::from(name) });
            }
            Verdict::Inconclusive => {
                self.failure = Some(CriterionVerdict::Inconclusive { item: String::from(name) });
            }
        }
        self.witnesses.push((String::from(name), cert));
        Ok(())
    }
}

fn require_proved_bound(
    cert: &BoundCertificate,
    role: &str,
    failure: &mut Option<CriterionVerdict>,
) {
    if failure.is_some() || cert.proved() {
        return;
    }
    *failure = Some(match cert.verdict {
        BoundVerdict::RefutedAt(at) => CriterionVerdict::Inconclusive {
            item: format!("{role} bound {} refuted at {at}", cert.bound.name),
        },
        _ => CriterionVerdict::Inconclusive {
            item: format!("{role} bound {} not established", cert.bound.name),
        },
    });
}

/// Exactly checks the concluded inequality on `[conclusion_from, certified_from)`.
fn small_case_gap(
    rec: &Recurrence2,
    conclusion_from: i64,
    certified_from: i64,
    lookahead: i64,
    case: impl Fn(&[BigRational], i64) -> SmallCase,
) -> Result<(Vec<SmallCase>, Option<CriterionVerdict>), CriteriaError> {
    if certified_from - conclusion_from > MAX_SMALL_CASE_GAP {
        return Ok((
            Vec::new(),
            Some(CriterionVerdict::Inconclusive {
                item: format!(
                    "gap [{conclusion_from}, {certified_from}) exceeds the exact-check cap"
                ),
            }),
        ));
    }
    if conclusion_from >= certified_from {
        return Ok((Vec::new(), None));
    }
    let terms = rec.terms_upto(certified_from - 1 + lookahead)?;
    let mut cases = Vec::new();
    let mut failure = None;
    for n in conclusion_from..certified_from {
        let c = case(&terms, n);
        if !c.holds && failure.is_none() {
            failure = Some(CriterionVerdict::Refuted {
                at: n,
                item: format!("exact check of the conclusion at n = {n}"),
            });
        }
        cases.push(c);
    }
    Ok((cases, failure))
}

fn at(terms: &[BigRational], n: i64) -> &BigRational {
    &terms[n as usize]
}

/// Schema `thm31`: strict log-convexity of `{S_n^2 - S_{n-1} S_{n+1}}`.
///
/// Proves `c3 > 0` together with either `delta > 0` plus the square-root-free
/// pair `6 c3 f + 2 c2 > 0` and `(6 c3 f + 2 c2)^2 - delta > 0`, or (variant)
/// `delta < 0`, and finally the cubic at `f` positive. The criterion yields
/// the difference-sequence inequality from `certified_from`; the gap down to
/// `conclusion_from` is checked exactly.
pub fn certify_lseq_logconvex(
    prover: &Prover,
    rec: &Recurrence2,
    f: &BoundSpec,
    n_start: i64,
    conclusion_from: i64,
) -> Result<CriterionCertificate, CriteriaError> {
    if f.side != Side::Lower {
        return Err(CriteriaError::BadInput(String::from(
            "the difference-sequence schema takes a lower ratio bound",
        )));
    }
    let f_cert = resolve_bound(prover, rec, f, n_start, None)?;
    let mut failure = None;
    require_proved_bound(&f_cert, "lower", &mut failure);
    let start = n_start.max(f_cert.bound.valid_from);

    let cc = cubic_coeffs(rec);
    debug_assert!(cc.delta_consistent());
    let mut conds = ConditionSet::new(prover);
    conds.failure = failure;
    conds.require("c3 > 0", &cc.c3, start, Relation::Gt0)?;

    // delta > 0 needs condition (II); delta < 0 makes the cubic's derivative
    // root-free and (II) is vacuous.
    if conds.failure.is_none() {
        let delta_pos = prover.sign_for_all(&cc.delta, start, Relation::Gt0)?;
        if delta_pos.proved() {
            conds.witnesses.push((String::from("delta > 0"), delta_pos));
            let two = RationalFunction::from_int(2);
            let six = RationalFunction::from_int(6);
            let linear = &(&six * &(&cc.c3 * &f.f)) + &(&two * &cc.c2);
            conds.require("6*c3*f + 2*c2 > 0", &linear, start, Relation::Gt0)?;
            let square_free = &(&linear * &linear) - &cc.delta;
            conds.require("(6*c3*f + 2*c2)^2 - delta > 0", &square_free, start, Relation::Gt0)?;
        } else {
            let delta_neg = prover.sign_for_all(&cc.delta, start, Relation::Lt0)?;
            if delta_neg.proved() {
                conds.witnesses.push((String::from("delta < 0"), delta_neg));
            } else {
                conds.failure = Some(match delta_pos.verdict {
                    Verdict::RefutedAt(k) => {
                        CriterionVerdict::Refuted { at: k, item: String::from("delta sign") }
                    }
                    _ => CriterionVerdict::Inconclusive { item: String::from("delta sign") },
                });
                conds.witnesses.push((String::from("delta > 0"), delta_pos));
                conds.witnesses.push((String::from("delta < 0"), delta_neg));
            }
        }
    }

    conds.require(
        "c3*f^3 + c2*f^2 + c1*f + c0 > 0",
        &cc.cubic_at(&f.f),
        start,
        Relation::Gt0,
    )?;

    // The criterion gives log-convexity triples (T_n, T_{n+1}, T_{n+2}) for
    // n >= start, i.e. T_n^2 < T_{n-1} T_{n+1} from start + 1.
    let certified_from = start + 1;
    let (small_cases, gap_failure) = small_case_gap(
        rec,
        conclusion_from,
        certified_from,
        2,
        |terms, n| {
            let t = |m: i64| at(terms, m) * at(terms, m) - at(terms, m - 1) * at(terms, m + 1);
            let lhs = {
                let tn = t(n);
                &tn * &tn
            };
            let rhs = t(n - 1) * t(n + 1);
            let holds = CmpOp::Lt.holds(&lhs, &rhs);
            SmallCase { n, lhs, rhs, op: CmpOp::Lt, holds }
        },
    )?;

    let verdict = conds.failure.or(gap_failure).unwrap_or(CriterionVerdict::Proved);
    Ok(CriterionCertificate {
        schema: Schema::Thm31,
        recurrence: rec.name.clone(),
        bound_inputs: alloc::vec![f_cert],
        condition_witnesses: conds.witnesses,
        small_cases,
        verdict,
        conclusion_from,
        certified_from,
        conclusion: format!(
            "(S_n^2 - S_(n-1)*S_(n+1))^2 < (S_(n-1)^2 - S_(n-2)*S_n)*(S_(n+1)^2 - S_n*S_(n+2)) for n >= {conclusion_from}"
        ),
    })
}

/// Shared quartic pieces for the two ratio schemas.
struct Quartic {
    a: RationalFunction,
    a_next_b: RationalFunction,
    b_b_next: RationalFunction,
}

impl Quartic {
    fn new(rec: &Recurrence2) -> Self {
        let a_next_b = &rec.a.shift(1) * &rec.b;
        let b_b_next = &rec.b * &rec.b.shift(1);
        Quartic { a: rec.a.clone(), a_next_b, b_b_next }
    }

    /// `4 g^3 - 3 a g^2 - a(n+1) b`
    fn derivative_at(&self, g: &RationalFunction) -> RationalFunction {
        let g2 = g * g;
        let g3 = &g2 * g;
        &(&(&RationalFunction::from_int(4) * &g3)
            - &(&RationalFunction::from_int(3) * &(&self.a * &g2)))
            - &self.a_next_b
    }

    /// `g^4 - a g^3 - a(n+1) b g - b b(n+1)`
    fn value_at(&self, g: &RationalFunction) -> RationalFunction {
        let g2 = g * g;
        let g3 = &g2 * g;
        let g4 = &g2 * &g2;
        &(&(&g4 - &(&self.a * &g3)) - &(&self.a_next_b * g)) - &self.b_b_next
    }

    /// `g - a/2`
    fn halfway_margin(&self, g: &RationalFunction) -> RationalFunction {
        g - &(&self.a / &RationalFunction::from_int(2))
    }
}

/// Schema `thm41`: ratio log-concavity from a lower and an upper ratio bound.
pub fn certify_ratio_logconcave(
    prover: &Prover,
    rec: &Recurrence2,
    u: &BoundSpec,
    v: &BoundSpec,
    n_start: i64,
    conclusion_from: i64,
) -> Result<CriterionCertificate, CriteriaError> {
    if u.side != Side::Lower || v.side != Side::Upper {
        return Err(CriteriaError::BadInput(String::from(
            "ratio log-concavity takes a lower bound u and an upper bound v",
        )));
    }
    let u_cert = resolve_bound(prover, rec, u, n_start + 2, None)?;
    let mut failure = None;
    require_proved_bound(&u_cert, "lower", &mut failure);
    let v_cert = resolve_bound(prover, rec, v, n_start + 2, Some(&u_cert))?;
    require_proved_bound(&v_cert, "upper", &mut failure);

    let start = (n_start + 2)
        .max(u_cert.bound.valid_from)
        .max(v_cert.bound.valid_from);

    let q = Quartic::new(rec);
    let mut conds = ConditionSet::new(prover);
    conds.failure = failure;
    // Hypotheses of the criterion: a > 0 and b < 0 from the stated N.
    conds.require("a > 0", &rec.a, n_start, Relation::Gt0)?;
    conds.require("b < 0", &rec.b, n_start, Relation::Lt0)?;
    conds.require("u - a/2 >= 0", &q.halfway_margin(&u.f), start, Relation::Ge0)?;
    conds.require(
        "4*u^3 - 3*a*u^2 - a(n+1)*b >= 0",
        &q.derivative_at(&u.f),
        start,
        Relation::Ge0,
    )?;
    conds.require(
        "v^4 - a*v^3 - a(n+1)*b*v - b*b(n+1) <= 0",
        &q.value_at(&v.f),
        start,
        Relation::Le0,
    )?;

    let (small_cases, gap_failure) =
        small_case_gap(rec, conclusion_from, start, 2, |terms, n| {
            let s = |m: i64| at(terms, m);
            let lhs = s(n) * s(n) * s(n) * s(n - 2);
            let rhs = s(n - 1) * s(n - 1) * s(n - 1) * s(n + 1);
            let holds = CmpOp::Ge.holds(&lhs, &rhs);
            SmallCase { n, lhs, rhs, op: CmpOp::Ge, holds }
        })?;

    let verdict = conds.failure.or(gap_failure).unwrap_or(CriterionVerdict::Proved);
    Ok(CriterionCertificate {
        schema: Schema::Thm41,
        recurrence: rec.name.clone(),
        bound_inputs: alloc::vec![u_cert, v_cert],
        condition_witnesses: conds.witnesses,
        small_cases,
        verdict,
        conclusion_from,
        certified_from: start,
        conclusion: format!(
            "(S_n/S_(n-1))^2 >= (S_(n-1)/S_(n-2))*(S_(n+1)/S_n) for n >= {conclusion_from}"
        ),
    })
}

/// Schema `thm42`: ratio log-convexity from a lower ratio bound alone.
pub fn certify_ratio_logconvex(
    prover: &Prover,
    rec: &Recurrence2,
    g: &BoundSpec,
    n_start: i64,
    conclusion_from: i64,
) -> Result<CriterionCertificate, CriteriaError> {
    if g.side != Side::Lower {
        return Err(CriteriaError::BadInput(String::from(
            "ratio log-convexity takes a lower bound g",
        )));
    }
    let g_cert = resolve_bound(prover, rec, g, n_start + 2, None)?;
    let mut failure = None;
    require_proved_bound(&g_cert, "lower", &mut failure);
    let start = (n_start + 2).max(g_cert.bound.valid_from);

    let q = Quartic::new(rec);
    let mut conds = ConditionSet::new(prover);
    conds.failure = failure;
    conds.require("a > 0", &rec.a, n_start, Relation::Gt0)?;
    conds.require("b < 0", &rec.b, n_start, Relation::Lt0)?;
    conds.require("g - a/2 >= 0", &q.halfway_margin(&g.f), start, Relation::Ge0)?;
    conds.require(
        "4*g^3 - 3*a*g^2 - a(n+1)*b >= 0",
        &q.derivative_at(&g.f),
        start,
        Relation::Ge0,
    )?;
    conds.require(
        "g^4 - a*g^3 - a(n+1)*b*g - b*b(n+1) >= 0",
        &q.value_at(&g.f),
        start,
        Relation::Ge0,
    )?;

    let (small_cases, gap_failure) =
        small_case_gap(rec, conclusion_from, start, 2, |terms, n| {
            let s = |m: i64| at(terms, m);
            let lhs = s(n) * s(n) * s(n) * s(n - 2);
            let rhs = s(n - 1) * s(n - 1) * s(n - 1) * s(n + 1);
            let holds = CmpOp::Le.holds(&lhs, &rhs);
            SmallCase { n, lhs, rhs, op: CmpOp::Le, holds }
        })?;

    let verdict = conds.failure.or(gap_failure).unwrap_or(CriterionVerdict::Proved);
    Ok(CriterionCertificate {
        schema: Schema::Thm42,
        recurrence: rec.name.clone(),
        bound_inputs: alloc::vec![g_cert],
        condition_witnesses: conds.witnesses,
        small_cases,
        verdict,
        conclusion_from,
        certified_from: start,
        conclusion: format!(
            "(S_n/S_(n-1))^2 <= (S_(n-1)/S_(n-2))*(S_(n+1)/S_n) for n >= {conclusion_from}"
        ),
    })
}

/// Schema `factorial`: strict log-convexity of `{n! S_n}`, i.e.
/// `n S_n^2 < (n+1) S_{n-1} S_{n+1}`.
///
/// With `b(n+1) < 0` and `L <= r <= U`, the quotient `r(n)/r(n+1)` is at
/// most `U(n) / (a(n+1) + b(n+1)/L(n))` (numerator maximized, denominator
/// minimized), so that expression staying below `(n+1)/n` carries the claim.
pub fn certify_factorial_logconvex(
    prover: &Prover,
    rec: &Recurrence2,
    lower: &BoundSpec,
    upper: &BoundSpec,
    n_start: i64,
    conclusion_from: i64,
) -> Result<CriterionCertificate, CriteriaError> {
    if lower.side != Side::Lower || upper.side != Side::Upper {
        return Err(CriteriaError::BadInput(String::from(
            "the factorial schema takes a lower bound L and an upper bound U",
        )));
    }
    let l_cert = resolve_bound(prover, rec, lower, n_start, None)?;
    let mut failure = None;
    require_proved_bound(&l_cert, "lower", &mut failure);
    let u_cert = resolve_bound(prover, rec, upper, n_start, Some(&l_cert))?;
    require_proved_bound(&u_cert, "upper", &mut failure);

    let start = n_start
        .max(l_cert.bound.valid_from)
        .max(u_cert.bound.valid_from)
        .max(1);

    let mut conds = ConditionSet::new(prover);
    conds.failure = failure;
    let b1 = rec.b.shift(1);
    conds.require("b(n+1) < 0", &b1, start, Relation::Lt0)?;

    // denom(n) = a(n+1) + b(n+1)/L(n) must be positive for the sandwich.
    let denom = &rec.a.shift(1)
        + &b1.checked_div(&lower.f).map_err(|_| {
            CriteriaError::BadInput(format!("lower bound {} vanishes identically", lower.name))
        })?;
    conds.require("a(n+1) + b(n+1)/L > 0", &denom, start, Relation::Gt0)?;

    // Main inequality: U/denom - (n+1)/n < 0.
    let shifted_index = crate::symb::must_parse("(n+1)/n");
    let difference = &upper.f.checked_div(&denom).unwrap_or_else(|_| {
        // denom identically zero would have refuted above; keep a value for
        // the witness list.
        RationalFunction::zero()
    }) - &shifted_index;
    conds.require(
        "U/(a(n+1) + b(n+1)/L) - (n+1)/n < 0",
        &difference,
        start,
        Relation::Lt0,
    )?;

    let (small_cases, gap_failure) =
        small_case_gap(rec, conclusion_from.max(1), start, 2, |terms, n| {
            let s = |m: i64| at(terms, m);
            let lhs = BigRational::from_integer(n.into()) * s(n) * s(n);
            let rhs = BigRational::from_integer((n + 1).into()) * s(n - 1) * s(n + 1);
            let holds = CmpOp::Lt.holds(&lhs, &rhs);
            SmallCase { n, lhs, rhs, op: CmpOp::Lt, holds }
        })?;

    let verdict = conds.failure.or(gap_failure).unwrap_or(CriterionVerdict::Proved);
    Ok(CriterionCertificate {
        schema: Schema::Factorial,
        recurrence: rec.name.clone(),
        bound_inputs: alloc::vec![l_cert, u_cert],
        condition_witnesses: conds.witnesses,
        small_cases,
        verdict,
        conclusion_from: conclusion_from.max(1),
        certified_from: start,
        conclusion: format!(
            "n*S_n^2 < (n+1)*S_(n-1)*S_(n+1) for n >= {}",
            conclusion_from.max(1)
        ),
    })
}
