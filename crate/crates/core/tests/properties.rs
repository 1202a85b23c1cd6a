//! Property tests for structural invariants of the ring operations.

use proptest::prelude::*;

use orebit_core::algebra::qpoly::QPoly;
use orebit_core::algebra::{Domain, Quaternion, RatFunc, Rational, Scalar, Twist};
use orebit_core::skewpoly::SkewPoly;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(arb_rational(), 0..4).prop_map(QPoly::new)
}

fn arb_scalar(domain: Domain) -> BoxedStrategy<Scalar> {
    match domain {
        Domain::Rational => arb_rational().prop_map(Scalar::Rational).boxed(),
        Domain::RatFunc => (arb_qpoly(), arb_qpoly())
            .prop_map(|(num, den)| {
                let den = if den.is_zero() { QPoly::one() } else { den };
                Scalar::RatFunc(RatFunc::new(num, den).unwrap())
            })
            .boxed(),
        Domain::Quaternion => (arb_rational(), arb_rational(), arb_rational(), arb_rational())
            .prop_map(|(w, x, y, z)| Scalar::Quaternion(Quaternion::new(w, x, y, z)))
            .boxed(),
    }
}

fn arb_poly(tw: Twist) -> impl Strategy<Value = SkewPoly> {
    let domain = tw.domain();
    prop::collection::vec(arb_scalar(domain), 0..4)
        .prop_map(move |coeffs| SkewPoly::new(tw.clone(), coeffs).unwrap())
}

fn arb_twist() -> impl Strategy<Value = Twist> {
    prop_oneof![
        Just(Twist::untwisted(Domain::Rational)),
        Just(Twist::untwisted(Domain::Quaternion)),
        Just(Twist::shift_difference()),
        Just(Twist::derivation()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_normalization_is_idempotent(s in arb_scalar(Domain::RatFunc)) {
        if let Scalar::RatFunc(v) = &s {
            let rebuilt = RatFunc::new(v.numerator().clone(), v.denominator().clone()).unwrap();
            prop_assert_eq!(&rebuilt, v);
            prop_assert!(v.denominator().is_monic());
        }
    }

    #[test]
    fn poly_addition_commutes_and_cancels(tw in arb_twist(), seed in any::<u64>()) {
        let mut runner = orebit_core::algebra::rng_from_seed(seed);
        let f = orebit_core::skewpoly::random_poly(&mut runner, &tw, 3);
        let g = orebit_core::skewpoly::random_poly(&mut runner, &tw, 3);
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn degree_adds_under_multiplication(tw in arb_twist(), seed in any::<u64>()) {
        let mut runner = orebit_core::algebra::rng_from_seed(seed);
        let f = orebit_core::skewpoly::random_poly(&mut runner, &tw, 3);
        let g = orebit_core::skewpoly::random_poly(&mut runner, &tw, 3);
        let fg = f.mul(&g).unwrap();
        prop_assert_eq!(fg.degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
    }

    #[test]
    fn eval_paths_agree(tw in arb_twist(), a_seed in any::<u64>()) {
        let mut runner = orebit_core::algebra::rng_from_seed(a_seed);
        let f = orebit_core::skewpoly::random_poly(&mut runner, &tw, 4);
        let a = orebit_core::algebra::random_scalar(&mut runner, tw.domain());
        prop_assert_eq!(f.eval(&a).unwrap(), f.eval_via_remainder(&a).unwrap());
    }
}

// Right division soundness gets a hand-rolled generator: the divisor must be
// monic, which is easiest to arrange directly.
#[test]
fn division_reconstructs_and_remainder_is_small() {
    let mut rng = orebit_core::algebra::rng_from_seed(9001);
    for tw in [
        Twist::untwisted(Domain::Rational),
        Twist::untwisted(Domain::Quaternion),
        Twist::shift_difference(),
        Twist::derivation(),
    ] {
        for _ in 0..60 {
            let f = orebit_core::skewpoly::random_poly(&mut rng, &tw, 4);
            let mut g = orebit_core::skewpoly::random_poly(&mut rng, &tw, 2);
            // force monic by replacing the leading coefficient
            let mut coeffs = g.coeffs().to_vec();
            *coeffs.last_mut().unwrap() = Scalar::one(tw.domain());
            g = SkewPoly::new(tw.clone(), coeffs).unwrap();
            let (q, r) = f.right_divide(&g).unwrap();
            assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
            assert!(r.degree() < g.degree() || r.is_zero());
        }
    }
}

#[test]
fn compose_unit_laws_hold() {
    let mut rng = orebit_core::algebra::rng_from_seed(9002);
    for tw in [
        Twist::untwisted(Domain::Rational),
        Twist::untwisted(Domain::Quaternion),
        Twist::shift_difference(),
        Twist::derivation(),
    ] {
        let x = SkewPoly::var(tw.clone());
        for _ in 0..100 {
            let f = orebit_core::skewpoly::random_poly(&mut rng, &tw, 3);
            assert_eq!(f.compose(&x).unwrap(), f);
            assert_eq!(x.compose(&f).unwrap(), f);
        }
    }
}
