use detinv::qcomb::{binomial, qbinom_in, qbinom_oracle};
use detinv::{MPoly, Monomial, Substitution, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

fn exponent() -> impl Strategy<Value = i64> {
    -20i64..=20
}

fn coefficient() -> impl Strategy<Value = i64> {
    -1_000_000i64..=1_000_000
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (exponent(), exponent(), exponent()).prop_map(|(a, b, c)| Monomial::new(a, b, c))
}

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((exponent(), exponent(), exponent()), coefficient()), 0..8)
        .prop_map(|terms| MPoly::from_terms(terms.into_iter().map(|((a, b, c), k)| ([a, b, c], k))))
}

fn var() -> impl Strategy<Value = Var> {
    prop::sample::select(Var::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_is_a_commutative_group(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &MPoly::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&a), MPoly::zero());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &MPoly::one(), a.clone());
        prop_assert!((&a * &MPoly::zero()).is_zero());
    }

    #[test]
    fn multiplication_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn stored_coefficients_are_nonzero(a in poly(), b in poly()) {
        for p in [&a + &b, &a * &b, &a - &a] {
            prop_assert!(p.terms().all(|(_, c)| c != &BigInt::from(0)));
        }
    }

    #[test]
    fn identity_substitution_is_trivial(a in poly()) {
        prop_assert_eq!(a.substitute(&Substitution::identity()), a);
    }

    #[test]
    fn substitution_is_a_ring_map(a in poly(), b in poly(), v in var(), m in monomial()) {
        let s = Substitution::identity().with(v, m);
        prop_assert_eq!((&a * &b).substitute(&s), &a.substitute(&s) * &b.substitute(&s));
        prop_assert_eq!((&a + &b).substitute(&s), &a.substitute(&s) + &b.substitute(&s));
    }

    #[test]
    fn reverse_is_an_involution(a in poly(), v in var(), c in -30i64..=30) {
        prop_assert_eq!(a.reverse(v, c).reverse(v, c), a.clone());
    }

    #[test]
    fn reverse_is_multiplicative(a in poly(), b in poly(), v in var(), c in -10i64..=10, d in -10i64..=10) {
        prop_assert_eq!((&a * &b).reverse(v, c + d), &a.reverse(v, c) * &b.reverse(v, d));
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).eval_all_one(), a.eval_all_one() * b.eval_all_one());
        prop_assert_eq!((&a + &b).eval_all_one(), a.eval_all_one() + b.eval_all_one());
    }

    #[test]
    fn shift_is_multiplication_by_a_monomial(a in poly(), m in monomial()) {
        prop_assert_eq!(a.shift(m), &a * &MPoly::monomial(m));
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: MPoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn qbinomial_properties(a in 0i64..=14, frac in 0.0f64..=1.0, v in var(), step in prop::sample::select(vec![1i64, -1, 2, -2, 4, -4])) {
        let b = (a as f64 * frac).round() as i64;
        let base = Monomial::var_pow(v, step);
        let c = qbinom_in(a, b, base).unwrap();
        prop_assert_eq!(&c, &qbinom_in(a, a - b, base).unwrap());
        prop_assert_eq!(c.eval_all_one(), binomial(a, b));
        prop_assert!(c.is_nonneg());
        let center = step * b * (a - b);
        prop_assert_eq!(c.reverse(v, center), c.clone());
        if a > 0 && b > 0 && b < a {
            // the mirrored recurrence C(a,b) = C(a-1,b) + x^(a-b) C(a-1,b-1)
            let rhs = qbinom_in(a - 1, b, base).unwrap()
                + qbinom_in(a - 1, b - 1, base).unwrap().shift(base.pow(a - b));
            prop_assert_eq!(c, rhs);
        }
    }

    #[test]
    fn qbinomial_matches_partitions(a in 0i64..=12, frac in 0.0f64..=1.0) {
        let b = (a as f64 * frac).round() as i64;
        prop_assert_eq!(qbinom_in(a, b, Monomial::var(Var::Q)).unwrap(), qbinom_oracle(a, b).unwrap());
    }
}

#[test]
fn malformed_json_is_rejected() {
    for bad in [
        r#"[{"e":[1,2],"c":"1"}]"#,
        r#"[{"e":[1,2,3],"c":"x"}]"#,
        r#"[{"e":[1,2,3],"c":"1"},{"e":[1,2,3],"c":"2"}]"#,
        r#"{"e":[1,2,3],"c":"1"}"#,
    ] {
        assert!(serde_json::from_str::<MPoly>(bad).is_err(), "{bad}");
    }
}
