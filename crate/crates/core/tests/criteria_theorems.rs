//! End-to-end reproduction of the five certified results, witness
//! comparisons against the hand-computed displays, and the two algebraic
//! identities that pin down the transcription of the criterion formulas.

use logcert_core::bounds::{builtin_bound, BuiltinBound};
use logcert_core::criteria::{
    certify_factorial_logconvex, certify_lseq_logconvex, certify_ratio_logconcave,
    certify_ratio_logconvex, cubic_coeffs, CriterionCertificate,
};
use logcert_core::posit::Prover;
use logcert_core::qfield::{int, Qrt2};
use logcert_core::recur::{Builtin, Recurrence2};
use logcert_core::seqcheck::{check_range, Property};
use logcert_core::symb::{must_parse, RationalFunction};

fn assert_positive_rational_multiple(actual: &RationalFunction, display: &str) {
    let display = must_parse(display);
    let c = actual
        .proportionality(&display)
        .unwrap_or_else(|| panic!("not proportional to {display}"));
    assert!(c.is_positive(), "proportionality constant {c} not positive");
    assert!(c.is_rational(), "proportionality constant {c} not rational");
}

fn witness<'a>(cert: &'a CriterionCertificate, name: &str) -> &'a RationalFunction {
    &cert
        .witness(name)
        .unwrap_or_else(|| panic!("missing witness {name:?}"))
        .subject
}

#[test]
fn difference_sequence_log_convexity_of_flf() {
    let prover = Prover::default();
    let flf = Recurrence2::builtin(Builtin::Flf);
    let cert = certify_lseq_logconvex(&prover, &flf, &builtin_bound(BuiltinBound::S), 6, 3).unwrap();
    assert!(cert.proved(), "verdict: {:?}", cert.verdict);

    assert_positive_rational_multiple(
        witness(&cert, "c3 > 0"),
        "512*(n^8 + 17*n^7 + 131*n^6 + 484*n^5 + 872*n^4 + 682*n^3 + 51*n^2 - 177*n - 45)\
         /((n+1)^6*(n+2)^2*(n+3)^2)",
    );
    assert_positive_rational_multiple(
        witness(&cert, "delta > 0"),
        "67108864*(n^18 + 40*n^17 + 752*n^16 + 8732*n^15 + 69566*n^14 + 399108*n^13 \
          + 1687512*n^12 + 5311376*n^11 + 12451223*n^10 + 21531796*n^9 + 26834592*n^8 \
          + 23183984*n^7 + 13750782*n^6 + 8285676*n^5 + 10267104*n^4 + 12477380*n^3 \
          + 9141001*n^2 + 3600576*n + 596160)/((n+1)^8*(n+2)^8*(n+3)^4*n^2)",
    );
    assert_positive_rational_multiple(
        witness(&cert, "6*c3*f + 2*c2 > 0"),
        "8192*(n^15 + 22*n^14 + 235*n^13 + 1362*n^12 + 4663*n^11 + 10794*n^10 + 23419*n^9 \
          + 65264*n^8 + 184207*n^7 + 395220*n^6 + 572275*n^5 + 497880*n^4 + 183150*n^3 \
          - 56592*n^2 - 67176*n - 12960)/((n+1)^6*(n+2)^4*(n+3)^2*n^5)",
    );
    assert_positive_rational_multiple(
        witness(&cert, "(6*c3*f + 2*c2)^2 - delta > 0"),
        "805306368*(3*n^26 + 78*n^25 + 952*n^24 + 7054*n^23 + 37260*n^22 + 172168*n^21 \
          + 821087*n^20 + 3833124*n^19 + 15316869*n^18 + 49491792*n^17 + 130518035*n^16 \
          + 295700768*n^15 + 624334735*n^14 + 1306596402*n^13 + 2645121752*n^12 \
          + 4751027330*n^11 + 6964163254*n^10 + 7754776872*n^9 + 5930725839*n^8 \
          + 2290239180*n^7 - 689241033*n^6 - 1426673628*n^5 - 697884741*n^4 - 39615804*n^3 \
          + 90921852*n^2 + 32775840*n + 3499200)/(n^10*(n+3)^4*(n+2)^6*(n+1)^12)",
    );
    assert_positive_rational_multiple(
        witness(&cert, "c3*f^3 + c2*f^2 + c1*f + c0 > 0"),
        "3145728*(66*n^17 + 900*n^16 + 6674*n^15 + 34000*n^14 + 124157*n^13 + 336864*n^12 \
          + 722550*n^11 + 1356276*n^10 + 2548054*n^9 + 4990502*n^8 + 9033247*n^7 \
          + 13148436*n^6 + 13877382*n^5 + 9189072*n^4 + 2222712*n^3 - 1490400*n^2 \
          - 1178496*n - 207360)/((n+1)^6*(n+2)^4*(n+3)^2*n^15)",
    );

    // small cases 3, 4, 5 (and 6, which the criterion window leaves open)
    let ns: Vec<i64> = cert.small_cases.iter().map(|c| c.n).collect();
    assert!(ns.contains(&3) && ns.contains(&4) && ns.contains(&5));
    assert!(cert.small_cases.iter().all(|c| c.holds));
    assert_eq!(cert.conclusion_from, 3);
}

#[test]
fn ratio_log_concavity_of_clf() {
    let prover = Prover::default();
    let clf = Recurrence2::builtin(Builtin::Clf);
    let cert = certify_ratio_logconcave(
        &prover,
        &clf,
        &builtin_bound(BuiltinBound::L),
        &builtin_bound(BuiltinBound::Ell),
        4,
        2,
    )
    .unwrap();
    assert!(cert.proved(), "verdict: {:?}", cert.verdict);
    assert_eq!(cert.certified_from, 6);

    assert_positive_rational_multiple(
        witness(&cert, "4*u^3 - 3*a*u^2 - a(n+1)*b >= 0"),
        "512*(21*n^8 - 21*n^7 + 229*n^6 - 1208*n^5 + 736*n^4 + 486*n^3 - 513*n^2 + 189*n - 27)\
         /(125*n^6*(n+1)^2)",
    );
    assert_positive_rational_multiple(
        witness(&cert, "v^4 - a*v^3 - a(n+1)*b*v - b*b(n+1) <= 0"),
        "-16384*(4*n^11 - 7*n^10 - 3*n^9 - 5*n^8 + 9*n^7 + 20*n^6 + 10*n^5 - 2*n^4 - 18*n^3 \
          - 18*n^2 - 10*n - 4)/(n^12*(n+1)^2)",
    );

    let ns: Vec<i64> = cert.small_cases.iter().map(|c| c.n).collect();
    assert_eq!(ns, vec![2, 3, 4, 5]);
    assert!(cert.small_cases.iter().all(|c| c.holds));
}

#[test]
fn ratio_log_concavity_of_apery_over_qrt2() {
    let prover = Prover::default();
    let apery = Recurrence2::builtin(Builtin::Apery);
    let cert = certify_ratio_logconcave(
        &prover,
        &apery,
        &builtin_bound(BuiltinBound::P),
        &builtin_bound(BuiltinBound::Q),
        2,
        2,
    )
    .unwrap();
    assert!(cert.proved(), "verdict: {:?}", cert.verdict);
    assert_eq!(cert.certified_from, 4);

    assert_positive_rational_multiple(
        witness(&cert, "4*u^3 - 3*a*u^2 - a(n+1)*b >= 0"),
        "2*(16352*n^12 - 19776*n^11 - 29010*n^10 + 56240*n^9 - 4659*n^8 - 44808*n^7 \
          + 31073*n^6 + 1980*n^5 - 11880*n^4 + 6412*n^3 - 1608*n^2 + 192*n - 8)\
         /(n^9*(n+1)^3)",
    );
    // The (iii) witness carries the sqrt2 leading coefficient of D(n).
    let d_display = "((2478196129792 + 1752346656768*sqrt2)*n^12 \
        - (6433189920768 + 4549729320960*sqrt2)*n^11 \
        + (4079900164096 + 2886570344448*sqrt2)*n^10 \
        + (3923229278208 + 2773725544448*sqrt2)*n^9 \
        - (7091340886016 + 5015144103936*sqrt2)*n^8 \
        + (3059171226624 + 2163345012736*sqrt2)*n^7 \
        + (1220059275776 + 862892127744*sqrt2)*n^6 \
        - (1975723880256 + 1397053488384*sqrt2)*n^5 \
        + (976018184064 + 690149237616*sqrt2)*n^4 \
        - (234159803595 + 165572939880*sqrt2)*n^3 \
        + (19314604575 + 13654607400*sqrt2)*n^2 \
        + (2591409375 + 1833597000*sqrt2)*n \
        - 489436875 - 346275000*sqrt2)";
    let iii = witness(&cert, "v^4 - a*v^3 - a(n+1)*b*v - b*b(n+1) <= 0");
    let display = must_parse(&format!("-3*{d_display}/(4294967296*n^12*(n+1)^3)"));
    let c = iii.proportionality(&display).expect("proportional to -3D/(2^32 ...)");
    assert!(c.is_positive() && c.is_rational());
    let d_lead = must_parse(d_display).num().leading().unwrap().clone();
    assert_eq!(d_lead, Qrt2::from_parts(2478196129792, 1, 1752346656768, 1));

    let ns: Vec<i64> = cert.small_cases.iter().map(|c| c.n).collect();
    assert_eq!(ns, vec![2, 3]);
    assert!(cert.small_cases.iter().all(|c| c.holds));

    // sqrt(A_2)/A_1 > cbrt(A_3)/sqrt(A_2), exactly: 73^6 > 5^6 * 1445^2
    let view = apery.view(5).unwrap();
    let report = check_range(&view, Property::NthRootLogConcave, 2, 2, 200).unwrap();
    assert!(report.holds());
}

#[test]
fn ratio_log_convexity_of_flf() {
    let prover = Prover::default();
    let flf = Recurrence2::builtin(Builtin::Flf);
    let cert =
        certify_ratio_logconvex(&prover, &flf, &builtin_bound(BuiltinBound::S), 4, 3).unwrap();
    assert!(cert.proved(), "verdict: {:?}", cert.verdict);
    assert_eq!(cert.certified_from, 6);

    // (i') margin in closed form, structurally
    assert_eq!(
        witness(&cert, "g - a/2 >= 0"),
        &must_parse("4*(n^5 + n^4 + n^3 + 4*n^2 + 12*n + 48)/n^5")
    );
    assert_positive_rational_multiple(
        witness(&cert, "4*g^3 - 3*a*g^2 - a(n+1)*b >= 0"),
        "1024*(n^18 + 3*n^17 + 5*n^16 + 12*n^15 + 48*n^14 + 222*n^13 + 342*n^12 + 300*n^11 \
          + 960*n^10 + 2902*n^9 + 6142*n^8 + 3956*n^7 - 448*n^6 + 9450*n^5 + 25776*n^4 \
          + 31536*n^3 - 5184*n^2 - 48384*n - 27648)/(n^15*(n-1)*(n+1)^2)",
    );
    assert_positive_rational_multiple(
        witness(&cert, "g^4 - a*g^3 - a(n+1)*b*g - b*b(n+1) >= 0"),
        "16384*(24*n^18 + 57*n^17 + 96*n^16 + 234*n^15 + 706*n^14 + 1908*n^13 + 2616*n^12 \
          + 3126*n^11 + 8130*n^10 + 18198*n^9 + 27248*n^8 + 14970*n^7 + 5478*n^6 + 49572*n^5 \
          + 97308*n^4 + 77760*n^3 - 58752*n^2 - 165888*n - 82944)/(n^20*(n-1)*(n+1)^2)",
    );

    let ns: Vec<i64> = cert.small_cases.iter().map(|c| c.n).collect();
    assert_eq!(ns, vec![3, 4, 5]);
    assert!(cert.small_cases.iter().all(|c| c.holds));
}

#[test]
fn factorial_log_convexity_of_flf() {
    let prover = Prover::default();
    let flf = Recurrence2::builtin(Builtin::Flf);
    let cert = certify_factorial_logconvex(
        &prover,
        &flf,
        &builtin_bound(BuiltinBound::Tau),
        &builtin_bound(BuiltinBound::T).from_n(2),
        2,
        1,
    )
    .unwrap();
    assert!(cert.proved(), "verdict: {:?}", cert.verdict);
    assert_eq!(cert.certified_from, 2);

    // the simplified difference, structurally
    assert_eq!(
        witness(&cert, "U/(a(n+1) + b(n+1)/L) - (n+1)/n < 0"),
        &must_parse("-(2*n^2 + n - 1)/(n*(2*n^4 + 2*n^3 + 4*n + 1))")
    );

    // small case n = 1: V_1^2 = 64 < 288 = 2 V_0 V_2
    assert_eq!(cert.small_cases.len(), 1);
    let case = &cert.small_cases[0];
    assert_eq!(case.n, 1);
    assert_eq!(case.lhs, int(64));
    assert_eq!(case.rhs, int(288));
    assert!(case.holds);

    // empirical check of the conclusion over [1, 1000]
    let view = flf.view(1001).unwrap();
    let report = check_range(&view, Property::FactorialLogConvex, 1, 1000, 0).unwrap();
    assert!(report.holds());
}

#[test]
fn factorial_schema_is_monotone_in_the_lower_bound() {
    // s is tighter than tau but only valid from 6; the schema still proves,
    // with the gap [1, 6) settled exactly.
    let prover = Prover::default();
    let flf = Recurrence2::builtin(Builtin::Flf);
    let cert = certify_factorial_logconvex(
        &prover,
        &flf,
        &builtin_bound(BuiltinBound::S),
        &builtin_bound(BuiltinBound::T),
        2,
        1,
    )
    .unwrap();
    assert!(cert.proved(), "verdict: {:?}", cert.verdict);
    assert_eq!(cert.certified_from, 6);
    assert_eq!(cert.small_cases.len(), 5);
    assert!(cert.small_cases.iter().all(|c| c.holds));
}

#[test]
fn cubic_identity_on_terms_for_all_builtins() {
    // (S_n^2 - S_{n-1}S_{n+1})(S_{n+2}^2 - S_{n+1}S_{n+3}) - (S_{n+1}^2 - S_nS_{n+2})^2
    //   = S_{n+1} (c3 S_n^3 + c2 S_n^2 S_{n-1} + c1 S_n S_{n-1}^2 + c0 S_{n-1}^3)
    for which in [Builtin::Flf, Builtin::Clf, Builtin::Apery] {
        let rec = Recurrence2::builtin(which);
        let cc = cubic_coeffs(&rec);
        let s = rec.terms_upto(503).unwrap();
        for n in 3..=500usize {
            let c = |x: &RationalFunction| {
                x.eval_int(n as i64).unwrap().as_rational().unwrap().clone()
            };
            let (c0, c1, c2, c3) = (c(&cc.c0), c(&cc.c1), c(&cc.c2), c(&cc.c3));
            let lhs = (&s[n] * &s[n] - &s[n - 1] * &s[n + 1])
                * (&s[n + 2] * &s[n + 2] - &s[n + 1] * &s[n + 3])
                - (&s[n + 1] * &s[n + 1] - &s[n] * &s[n + 2])
                    * (&s[n + 1] * &s[n + 1] - &s[n] * &s[n + 2]);
            let rhs = &s[n + 1]
                * (c3 * &s[n] * &s[n] * &s[n]
                    + c2 * &s[n] * &s[n] * &s[n - 1]
                    + c1 * &s[n] * &s[n - 1] * &s[n - 1]
                    + c0 * &s[n - 1] * &s[n - 1] * &s[n - 1]);
            assert_eq!(lhs, rhs, "{} cubic identity fails at n = {n}", rec.name);
        }
    }
}

#[test]
fn quartic_identity_on_terms_for_all_builtins() {
    // S_n^3 S_{n-2} - S_{n-1}^3 S_{n+1}
    //   = (S_{n-1}^4 / b(n)) [r^4 - a(n) r^3 - a(n+1) b(n) r - b(n) b(n+1)]
    for which in [Builtin::Flf, Builtin::Clf, Builtin::Apery] {
        let rec = Recurrence2::builtin(which);
        let s = rec.terms_upto(501).unwrap();
        for n in 3..=500usize {
            let a_n = rec.a.eval_int(n as i64).unwrap().as_rational().unwrap().clone();
            let a_n1 = rec.a.eval_int(n as i64 + 1).unwrap().as_rational().unwrap().clone();
            let b_n = rec.b.eval_int(n as i64).unwrap().as_rational().unwrap().clone();
            let b_n1 = rec.b.eval_int(n as i64 + 1).unwrap().as_rational().unwrap().clone();
            let r = &s[n] / &s[n - 1];
            let lhs = &s[n] * &s[n] * &s[n] * &s[n - 2] - &s[n - 1] * &s[n - 1] * &s[n - 1] * &s[n + 1];
            let quartic = &r * &r * &r * &r - &a_n * &r * &r * &r - &a_n1 * &b_n * &r - &b_n * &b_n1;
            let pow4 = &s[n - 1] * &s[n - 1] * &s[n - 1] * &s[n - 1];
            let rhs = pow4 / &b_n * quartic;
            assert_eq!(lhs, rhs, "{} quartic identity fails at n = {n}", rec.name);
        }
    }
}

#[test]
fn proved_conclusions_hold_termwise_up_to_1000() {
    let prover = Prover::default();
    let flf = Recurrence2::builtin(Builtin::Flf);
    let clf = Recurrence2::builtin(Builtin::Clf);
    let apery = Recurrence2::builtin(Builtin::Apery);
    let view_flf = flf.view(1003).unwrap();
    let view_clf = clf.view(1003).unwrap();
    let view_apery = apery.view(1003).unwrap();

    let c31 = certify_lseq_logconvex(&prover, &flf, &builtin_bound(BuiltinBound::S), 6, 3).unwrap();
    assert!(c31.proved());
    // concluded: difference sequence strictly log-convex from 3 (in the
    // (1.4) indexing); check on the negated L view
    let w = view_flf.l_operator().negated();
    let r = check_range(&w, Property::LogConvex { strict: true }, 3, 1000, 0).unwrap();
    assert!(r.holds());

    let c41 = certify_ratio_logconcave(
        &prover, &clf,
        &builtin_bound(BuiltinBound::L),
        &builtin_bound(BuiltinBound::Ell),
        4, 2,
    )
    .unwrap();
    assert!(c41.proved());
    let r = check_range(&view_clf, Property::RatioLogConcave { strict: false }, 2, 1000, 0).unwrap();
    assert!(r.holds());

    let c44 = certify_ratio_logconcave(
        &prover, &apery,
        &builtin_bound(BuiltinBound::P),
        &builtin_bound(BuiltinBound::Q),
        2, 2,
    )
    .unwrap();
    assert!(c44.proved());
    let r = check_range(&view_apery, Property::RatioLogConcave { strict: false }, 2, 1000, 0).unwrap();
    assert!(r.holds());

    let c42 = certify_ratio_logconvex(&prover, &flf, &builtin_bound(BuiltinBound::S), 4, 3).unwrap();
    assert!(c42.proved());
    let r = check_range(&view_flf, Property::RatioLogConvex { strict: false }, 3, 1000, 0).unwrap();
    assert!(r.holds());

    let c15 = certify_factorial_logconvex(
        &prover, &flf,
        &builtin_bound(BuiltinBound::Tau),
        &builtin_bound(BuiltinBound::T).from_n(2),
        2, 1,
    )
    .unwrap();
    assert!(c15.proved());
    let r = check_range(&view_flf, Property::FactorialLogConvex, 1, 1000, 0).unwrap();
    assert!(r.holds());
}
