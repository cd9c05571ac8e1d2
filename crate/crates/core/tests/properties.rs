use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use salem_core::roots;
use salem_core::{compose_trace_lift, gcd_over_rationals, resultant, trace_extract, IntPoly, Rational};

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..=max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonconstant(max_len: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_len).prop_filter("degree >= 1", |p| p.degree().unwrap_or(0) >= 1)
}

fn nonzero(max_len: usize) -> impl Strategy<Value = IntPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// Monic trace polynomial of degree 1..=6.
fn trace_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-15i64..=15, 1..=6).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn ring_laws(a in poly(6), b in poly(6), c in poly(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &IntPoly::one(), a);
    }

    #[test]
    fn product_degree_adds(a in nonzero(6), b in nonzero(6)) {
        prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
    }

    #[test]
    fn text_round_trip(a in poly(8)) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<IntPoly>().unwrap(), a);
    }

    #[test]
    fn resultant_symmetry(p in nonconstant(5), q in nonconstant(5)) {
        let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
        let sign = if dp * dq % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        prop_assert_eq!(resultant(&q, &p).unwrap(), sign * resultant(&p, &q).unwrap());
    }

    #[test]
    fn resultant_matches_split_oracle(
        rts in prop::collection::vec(-6i64..=6, 1..=5),
        q in nonconstant(5),
    ) {
        // p = prod (x - r) gives Res(p, q) = prod q(r)
        let p: IntPoly = rts.iter().map(|&r| IntPoly::from_i64s(&[-r, 1])).product();
        let expect: BigInt = rts.iter().map(|&r| q.eval_int(&BigInt::from(r))).product();
        prop_assert_eq!(resultant(&p, &q).unwrap(), expect);
    }

    #[test]
    fn resultant_multiplicative(a in nonconstant(4), b in nonconstant(4), q in nonconstant(4)) {
        let lhs = resultant(&(&a * &b), &q).unwrap();
        prop_assert_eq!(lhs, resultant(&a, &q).unwrap() * resultant(&b, &q).unwrap());
    }

    #[test]
    fn resultant_zero_iff_common_factor(a in nonconstant(4), b in nonconstant(4)) {
        let common = gcd_over_rationals(&a, &b).unwrap().degree().unwrap() > 0;
        prop_assert_eq!(resultant(&a, &b).unwrap().is_zero(), common);
    }

    #[test]
    fn lift_is_reciprocal_and_invertible(t in trace_poly()) {
        let d = t.degree().unwrap();
        let s = compose_trace_lift(&t, d).unwrap();
        prop_assert_eq!(s.degree(), Some(2 * d));
        prop_assert!(s.is_reciprocal());
        prop_assert!(s.is_monic());
        prop_assert_eq!(trace_extract(&s).unwrap(), t);
    }

    #[test]
    fn lift_evaluation_identity(t in trace_poly(), num in -9i64..=9, den in 1i64..=7) {
        prop_assume!(num != 0);
        let d = t.degree().unwrap();
        let s = compose_trace_lift(&t, d).unwrap();
        let c = Rational::new(num.into(), den.into());
        let inner = &c + &(Rational::one() / &c);
        let mut ct = Rational::one();
        for _ in 0..d {
            ct *= &c;
        }
        prop_assert_eq!(s.eval_rational(&c), ct * t.eval_rational(&inner));
    }

    #[test]
    fn gcd_divides_both(a in nonzero(6), b in nonzero(6), r in nonzero(3)) {
        let pa = &a * &r;
        let pb = &b * &r;
        let g = gcd_over_rationals(&pa, &pb).unwrap();
        prop_assert!(pa.pseudo_rem(&g).is_zero());
        prop_assert!(pb.pseudo_rem(&g).is_zero());
        prop_assert!(g.degree().unwrap() >= r.degree().unwrap());
        prop_assert!(g.leading_coeff().unwrap() > &BigInt::zero());
        prop_assert_eq!(g.content(), BigInt::one());
    }

    #[test]
    fn sturm_count_is_additive(p in nonconstant(7), mid in -8i64..=8) {
        let chain = roots::SturmChain::new(&p);
        let m = Rational::from_integer(mid.into());
        let total = chain.count(None, None);
        prop_assert_eq!(chain.count(None, Some(&m)) + chain.count(Some(&m), None), total);
        prop_assert!(total <= p.degree().unwrap());
    }

    #[test]
    fn isolating_intervals_hold_one_root(p in nonconstant(7)) {
        prop_assume!(roots::is_separable(&p));
        let ivs = roots::isolate_all(&p).unwrap();
        prop_assert_eq!(ivs.len(), roots::SturmChain::new(&p).count(None, None));
        for iv in &ivs {
            prop_assert!(roots::isolates_one_root(&p, iv));
        }
    }
}
