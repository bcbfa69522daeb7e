//! Canonical-form, evaluation and shift properties for the symbolic layer,
//! plus the worked examples from the bound functions.

use logcert_core::qfield::{int, rat, BigRational, Qrt2};
use logcert_core::symb::{must_parse, parse_ratfunc, Polynomial, RationalFunction};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((-50i64..=50, 1i64..=6), 0..5).prop_map(|cs| {
        Polynomial::new(
            cs.into_iter()
                .map(|(n, d)| Qrt2::from_rational(rat(n, d)))
                .collect(),
        )
    })
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| {
        (!d.is_zero()).then(|| RationalFunction::new(n, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonicalization_is_idempotent(x in ratfunc()) {
        let renormalized = RationalFunction::new(x.num().clone(), x.den().clone());
        prop_assert_eq!(&renormalized, &x);
        // scaling numerator and denominator by a common factor is invisible
        let factor = Polynomial::from_ints(&[3, 6]);
        let scaled = RationalFunction::new(x.num() * &factor, x.den() * &factor);
        prop_assert_eq!(scaled, x);
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in ratfunc(), y in ratfunc(), p in -20i64..=20) {
        let at = int(p);
        let (vx, vy) = match (x.eval(&at), y.eval(&at)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Ok(()), // pole: nothing to compare
        };
        if let Ok(sum) = (&x + &y).eval(&at) {
            prop_assert_eq!(sum, &vx + &vy);
        }
        if let Ok(prod) = (&x * &y).eval(&at) {
            prop_assert_eq!(prod, &vx * &vy);
        }
        if !y.is_zero() {
            if let (Ok(quot), Ok(inv)) = ((&x / &y).eval(&at), vy.inverse()) {
                prop_assert_eq!(quot, &vx * &inv);
            }
        }
    }

    #[test]
    fn shifts_compose_additively(x in ratfunc(), j in -6i64..=6, k in -6i64..=6) {
        prop_assert_eq!(x.shift(j).shift(k), x.shift(j + k));
        prop_assert_eq!(x.shift(0), x);
    }

    #[test]
    fn display_parse_round_trip(x in ratfunc()) {
        let text = x.to_string();
        prop_assert_eq!(parse_ratfunc(&text).unwrap(), x);
    }
}

#[test]
fn difference_of_bound_functions() {
    // s(n) - tau(n) = 48(n+4)/n^5
    let s = must_parse("16*(n^5 + n^2 + 3*n + 12)/n^5");
    let tau = must_parse("16*(n^3 + 1)/n^3");
    assert_eq!(&s - &tau, must_parse("48*(n+4)/n^5"));
}

#[test]
fn t_minus_s_cross_checked_by_evaluation() {
    let t = must_parse("16*(n+1)/n");
    let s = must_parse("16*(n^5 + n^2 + 3*n + 12)/n^5");
    let diff = &t - &s;
    for p in [6, 10] {
        let direct = t.eval_int(p).unwrap() - s.eval_int(p).unwrap();
        assert_eq!(diff.eval_int(p).unwrap(), direct);
    }
    assert_eq!(
        t.eval_int(6).unwrap(),
        Qrt2::from_rational(rat(56, 3))
    );
    assert_eq!(s.eval_int(6).unwrap(), Qrt2::from_rational(rat(1307, 81)));
}

#[test]
fn shift_of_s_matches_the_expanded_form() {
    let s = must_parse("16*(n^5 + n^2 + 3*n + 12)/n^5");
    let expanded = must_parse("16*(n^5 + 5*n^4 + 10*n^3 + 11*n^2 + 10*n + 17)/(n+1)^5");
    assert_eq!(s.shift(1), expanded);
}

#[test]
fn shift_of_t_is_substitution() {
    let t = must_parse("16*(n+1)/n");
    assert_eq!(t.shift(1), must_parse("16*(n+2)/(n+1)"));
    let sq = must_parse("n^2");
    assert_eq!(sq.shift(1), must_parse("n^2 + 2*n + 1"));
}

#[test]
fn q_evaluates_exactly_and_matches_interval_arithmetic() {
    let q = must_parse(
        "((17+12*sqrt2)*n^3 - (51/2+18*sqrt2)*n^2 + (27/2+609/64*sqrt2)*n - (645/256+225/128*sqrt2))/n^3",
    );
    let v = q.eval_int(2).unwrap();
    assert_eq!(v.rat_part(), &rat(14971, 2048));
    assert_eq!(v.irr_part(), &rat(5283, 1024));
    // 100-digit numeric cross-check: 14971/2048 + 5283/1024*sqrt2 ≈ 14.60624
    let approx = 14971.0 / 2048.0 + 5283.0 / 1024.0 * core::f64::consts::SQRT_2;
    assert!((approx - 14.606_240_478_532_285).abs() < 1e-12);
    let fencepost = |r: &BigRational| {
        let n: f64 = r.numer().to_string().parse().unwrap();
        let d: f64 = r.denom().to_string().parse().unwrap();
        n / d
    };
    assert!((fencepost(v.rat_part()) + fencepost(v.irr_part()) * core::f64::consts::SQRT_2 - approx).abs() < 1e-12);
}

#[test]
fn eval_examples() {
    let s = must_parse("16*(n^5 + n^2 + 3*n + 12)/n^5");
    assert_eq!(s.eval_int(6).unwrap(), Qrt2::from_rational(rat(1307, 81)));
    let t = must_parse("16*(n+1)/n");
    assert_eq!(t.eval_int(1).unwrap(), Qrt2::from_int(32));
}
