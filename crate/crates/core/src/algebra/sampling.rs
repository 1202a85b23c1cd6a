//! Seeded random generation of small scalars.
//!
//! Every randomized check in the crate draws from these generators with an
//! explicit seed; there is no hidden RNG state. Values are kept small so
//! that exact arithmetic stays fast inside the large seeded suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::qpoly::QPoly;
use super::quaternion::Quaternion;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::scalar::{Domain, Scalar};

/// Deterministic RNG for a seed; all suites in this crate use ChaCha8.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=4);
    Rational::new(num.into(), den.into())
}

/// Polynomial in `t` of degree at most `max_deg` with small coefficients.
pub fn random_qpoly(rng: &mut impl Rng, max_deg: usize) -> QPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg)
        .map(|_| {
            let num: i64 = rng.gen_range(-5..=5);
            let den: i64 = rng.gen_range(1..=2);
            Rational::new(num.into(), den.into())
        })
        .collect();
    QPoly::new(coeffs)
}

/// Rational function with a small numerator; one in four draws carries a
/// nontrivial (monic, degree-one) denominator.
pub fn random_ratfunc(rng: &mut impl Rng) -> RatFunc {
    let num = random_qpoly(rng, 2);
    if rng.gen_range(0..4) == 0 {
        let c: i64 = rng.gen_range(-3..=3);
        let den = QPoly::new(vec![Rational::from_integer(c.into()), Rational::from_integer(1.into())]);
        RatFunc::new(num, den).expect("denominator is monic of degree one")
    } else {
        RatFunc::from_poly(num)
    }
}

pub fn random_quaternion(rng: &mut impl Rng) -> Quaternion {
    let mut part = || {
        let num: i64 = rng.gen_range(-5..=5);
        let den: i64 = rng.gen_range(1..=2);
        Rational::new(num.into(), den.into())
    };
    Quaternion::new(part(), part(), part(), part())
}

pub fn random_scalar(rng: &mut impl Rng, domain: Domain) -> Scalar {
    match domain {
        Domain::Rational => Scalar::Rational(random_rational(rng)),
        Domain::RatFunc => Scalar::RatFunc(random_ratfunc(rng)),
        Domain::Quaternion => Scalar::Quaternion(random_quaternion(rng)),
    }
}

pub fn random_nonzero_scalar(rng: &mut impl Rng, domain: Domain) -> Scalar {
    loop {
        let s = random_scalar(rng, domain);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Draws a partner `b` that interchanges with `a`, for twist families where
/// a constructive recipe exists. Returns `None` for families without one
/// (blind sampling essentially never satisfies the interchange equation).
///
/// Recipes, each checkable by substituting into
/// `sigma(a) b + delta(a) = sigma(b) a + delta(b)`:
/// - untwisted commutative domain: any `b` (everything commutes);
/// - untwisted quaternions: `b = p + q a` with rational `p`, `q`;
/// - shift/difference on Q(t): `b = rho (a + 1) - 1` with rational `rho`;
/// - shift with zero derivation on Q(t): `b = rho a`;
/// - identity/derivative on Q(t): `b = a + c` with rational `c`.
pub fn interchange_partner(
    rng: &mut impl Rng,
    tw: &super::twist::Twist,
    a: &Scalar,
) -> Option<Scalar> {
    use super::twist::{DeltaMap, SigmaMap};
    let small_rat = |rng: &mut dyn rand::RngCore| {
        let n: i64 = rng.gen_range(-4..=4);
        Scalar::from_int(tw.domain(), n)
    };
    match (tw.domain(), tw.sigma_map(), tw.delta_map()) {
        (Domain::Rational, SigmaMap::Identity, DeltaMap::Zero) => {
            Some(random_scalar(rng, Domain::Rational))
        }
        (Domain::RatFunc, SigmaMap::Identity, DeltaMap::Zero) => {
            Some(random_scalar(rng, Domain::RatFunc))
        }
        (Domain::Quaternion, SigmaMap::Identity, DeltaMap::Zero) => {
            let p = small_rat(rng);
            let q = small_rat(rng);
            Some(&p + &(&q * a))
        }
        (Domain::RatFunc, SigmaMap::Shift, DeltaMap::Difference) => {
            let rho = small_rat(rng);
            let one = Scalar::one(Domain::RatFunc);
            Some(&(&rho * &(a + &one)) - &one)
        }
        (Domain::RatFunc, SigmaMap::Shift, DeltaMap::Zero) => {
            let rho = small_rat(rng);
            Some(&rho * a)
        }
        (Domain::RatFunc, SigmaMap::Identity, DeltaMap::Derivative) => {
            Some(a + &small_rat(rng))
        }
        _ => None,
    }
}
