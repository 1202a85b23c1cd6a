//! Formal iteration and orbit machinery: formal powers `f^{on}`, naive
//! pointwise iterates `f^{*n}(a)`, orbit reports, the fixed-point and
//! interchange checks, and bounded periodicity certificates.
//!
//! Unbounded "for all n" statements are attested up to an explicit bound
//! that is recorded in every report and certificate; a certificate never
//! claims more than what was computed.

use serde::Serialize;

use crate::algebra::ops::{conjugate, genpow_sequence, interchanges};
use crate::algebra::{Scalar, Twist};
use crate::error::{Error, Result};
use crate::skewpoly::SkewPoly;

/// Default ceiling on the coefficient count of any formal power.
pub const DEFAULT_MAX_COEFFS: usize = 4096;
/// Default bound for the stability component of interchange checks.
pub const DEFAULT_STABILITY_BOUND: u32 = 16;

/// Formal power `f^{o0} = x`, `f^{o(n+1)} = f . f^{on}`.
pub fn formal_power(f: &SkewPoly, n: u32) -> SkewPoly {
    let mut p = SkewPoly::var(f.twist().clone());
    for _ in 0..n {
        p = f.compose(&p).expect("same twist by construction");
    }
    p
}

/// All formal powers `f^{o0} .. f^{o upto}`, guarded by a coefficient
/// ceiling.
pub fn formal_powers(f: &SkewPoly, upto: u32, max_coeffs: usize) -> Result<Vec<SkewPoly>> {
    let mut out = Vec::with_capacity(upto as usize + 1);
    out.push(SkewPoly::var(f.twist().clone()));
    for _ in 0..upto {
        let next = f.compose_capped(out.last().expect("nonempty"), max_coeffs)?;
        out.push(next);
    }
    Ok(out)
}

/// Pointwise iteration `f^{*0}(a) = a`, `f^{*(n+1)}(a) = f(f^{*n}(a))`.
pub fn naive_iterate(f: &SkewPoly, a: &Scalar, n: u32) -> Result<Scalar> {
    let mut x = f.twist().sigma(a).map(|_| a.clone())?;
    for _ in 0..n {
        x = f.eval(&x)?;
    }
    Ok(x)
}

/// The polynomial generalized powers `f^{[0]} .. f^{[upto]}`, computed
/// incrementally.
fn poly_genpow_sequence(f: &SkewPoly, upto: u32) -> Vec<SkewPoly> {
    let mut out = Vec::with_capacity(upto as usize + 1);
    out.push(SkewPoly::one(f.twist().clone()));
    for _ in 0..upto {
        let last = out.last().expect("nonempty");
        let next = last
            .sigma_lift()
            .mul(f)
            .and_then(|p| p.add(&last.delta_lift()))
            .expect("same twist by construction");
        out.push(next);
    }
    out
}

/// The constant-term adjustment `g - (g(a) - a)`, which satisfies
/// `f(a) = a` by construction. This is the canonical generator of
/// fixed-point instances, since `f(a) = a` is essentially never hit by
/// blind sampling.
pub fn constant_adjusted(g: &SkewPoly, a: &Scalar) -> Result<SkewPoly> {
    let offset = &g.eval(a)? - a;
    let shift = SkewPoly::constant(g.twist().clone(), offset)?;
    g.sub(&shift)
}

/// Parallel formal and naive orbit of `a` under `f`.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub point: Scalar,
    pub steps: u32,
    pub stability_bound: u32,
    /// `f^{oi}(a)` for `i = 0..=steps`.
    pub formal: Vec<Scalar>,
    /// `f^{*i}(a)` for `i = 0..=steps`.
    pub naive: Vec<Scalar>,
    /// Largest index `i` such that the two sequences agree on `0..=i`.
    pub agree_upto: u32,
    /// Whether `a` interchanges with `formal[i]`, per index.
    pub interchange_flags: Vec<bool>,
}

/// Fills both orbit sequences, their agreement prefix, and per-index
/// interchange flags.
pub fn formal_orbit(
    f: &SkewPoly,
    a: &Scalar,
    steps: u32,
    stability_bound: u32,
    max_coeffs: usize,
) -> Result<OrbitReport> {
    let tw = f.twist();
    let powers = formal_powers(f, steps, max_coeffs)?;
    let mut formal = Vec::with_capacity(steps as usize + 1);
    for p in &powers {
        formal.push(p.eval(a)?);
    }
    let mut naive = Vec::with_capacity(steps as usize + 1);
    naive.push(a.clone());
    for _ in 0..steps {
        naive.push(f.eval(naive.last().expect("nonempty"))?);
    }
    let mut agree_upto = 0;
    while (agree_upto as usize) < formal.len() - 1
        && formal[agree_upto as usize + 1] == naive[agree_upto as usize + 1]
    {
        agree_upto += 1;
    }
    let mut interchange_flags = Vec::with_capacity(formal.len());
    for v in &formal {
        interchange_flags.push(interchanges(tw, a, v, stability_bound)?);
    }
    Ok(OrbitReport {
        point: a.clone(),
        steps,
        stability_bound,
        formal,
        naive,
        agree_upto,
        interchange_flags,
    })
}

fn require_fixed(f: &SkewPoly, a: &Scalar) -> Result<()> {
    if f.eval(a)? == *a {
        Ok(())
    } else {
        Err(Error::HypothesisUnmet(format!(
            "f(a) = {} differs from a = {}",
            f.eval(a)?,
            a
        )))
    }
}

/// Under the hypothesis `f(a) = a`, checks `f^{[n]}(a) = a^{[n]}` for
/// `1 <= n <= upto`.
pub fn check_lemma_good(f: &SkewPoly, a: &Scalar, upto: u32) -> Result<bool> {
    require_fixed(f, a)?;
    let tw = f.twist();
    let poly_powers = poly_genpow_sequence(f, upto);
    let scalar_powers = genpow_sequence(tw, a, upto)?;
    for n in 1..=upto as usize {
        if poly_powers[n].eval(a)? != scalar_powers[n] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Under the hypothesis `f(a) = a`, checks that the formal powers keep
/// fixing `a`: `f^{on}(a) = a` for `1 <= n <= upto`.
pub fn check_fixed_point(f: &SkewPoly, a: &Scalar, upto: u32) -> Result<bool> {
    require_fixed(f, a)?;
    let mut p = SkewPoly::var(f.twist().clone());
    for _ in 1..=upto {
        p = f.compose(&p)?;
        if p.eval(a)? != *a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Under the hypothesis that `a` interchanges with `b != 0`, checks the
/// conjugation-power identity
/// `(a^b)^{[n]} b = sigma(a^{[n]}) b + delta(a^{[n]})` for `0 <= n <= upto`.
pub fn check_phew(tw: &Twist, a: &Scalar, b: &Scalar, upto: u32) -> Result<bool> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !interchanges(tw, a, b, upto)? {
        return Err(Error::HypothesisUnmet(format!(
            "{a} does not interchange with {b}"
        )));
    }
    let conj = conjugate(tw, a, b)?;
    let conj_powers = genpow_sequence(tw, &conj, upto)?;
    let powers = genpow_sequence(tw, a, upto)?;
    for n in 0..=upto as usize {
        let lhs = &conj_powers[n] * b;
        let rhs = &(&tw.sigma(&powers[n])? * b) + &tw.delta(&powers[n])?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Under the hypothesis that `a` interchanges with `f(a)`, checks
/// `f^{[n]}(a) = (f(a))^{[n]}` for `1 <= n <= upto`.
pub fn check_cor1(f: &SkewPoly, a: &Scalar, upto: u32, stability_bound: u32) -> Result<bool> {
    let tw = f.twist();
    let b = f.eval(a)?;
    if !interchanges(tw, a, &b, stability_bound)? {
        return Err(Error::HypothesisUnmet(format!(
            "{a} does not interchange with f(a) = {b}"
        )));
    }
    let poly_powers = poly_genpow_sequence(f, upto);
    let value_powers = genpow_sequence(tw, &b, upto)?;
    for n in 1..=upto as usize {
        if poly_powers[n].eval(a)? != value_powers[n] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Under the hypothesis that `a` interchanges with the formal orbit prefix
/// `(f^{o0}(a), .., f^{o(n-1)}(a))` or with the naive prefix
/// `(f^{*0}(a), .., f^{*(n-1)}(a))`, checks `f^{on}(a) = f^{*n}(a)`.
pub fn check_thm1(f: &SkewPoly, a: &Scalar, n: u32, stability_bound: u32) -> Result<bool> {
    let tw = f.twist();
    let powers = formal_powers(f, n, usize::MAX)?;
    let mut formal_prefix_ok = true;
    for p in powers.iter().take(n as usize) {
        if !interchanges(tw, a, &p.eval(a)?, stability_bound)? {
            formal_prefix_ok = false;
            break;
        }
    }
    if !formal_prefix_ok {
        let mut naive_prefix_ok = true;
        let mut x = a.clone();
        for i in 0..n {
            if !interchanges(tw, a, &x, stability_bound)? {
                naive_prefix_ok = false;
                break;
            }
            if i + 1 < n {
                x = f.eval(&x)?;
            }
        }
        if !naive_prefix_ok {
            return Err(Error::HypothesisUnmet(
                "a interchanges with neither orbit prefix".into(),
            ));
        }
    }
    let formal_value = powers[n as usize].eval(a)?;
    Ok(formal_value == naive_iterate(f, a, n)?)
}

/// Outcome class of a periodicity certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMode {
    /// Both hypotheses hold; periodicity and orbit interchange are then
    /// guaranteed (and independently re-checked up to the bound).
    TheoremApplies,
    /// `f^{or}(a) = a` and bounded periodicity was observed, but the
    /// interchange prefix fails, so the sufficient condition does not
    /// explain it.
    PeriodicWithoutHypothesis,
    /// Bounded iteration disproves `r`-periodicity.
    NotPeriodic,
}

/// Result of a bounded `r`-periodicity verification.
///
/// `orbit_checked_upto` records how far the orbit was actually examined:
/// `r * steps` when the return hypothesis holds, otherwise just `r` (a
/// failed return already refutes periodicity at `n = 1`, so nothing past
/// it is computed).
#[derive(Debug, Clone, Serialize)]
pub struct PeriodicityCertificate {
    pub r: u32,
    pub steps: u32,
    pub stability_bound: u32,
    pub orbit_checked_upto: u32,
    /// `f^{or}(a) = a`.
    pub hypothesis_return: bool,
    /// `a` interchanges with `f^{o0}(a), .., f^{o(r-1)}(a)`.
    pub hypothesis_interchange_prefix: bool,
    /// `f^{o(nr)}(a) = a` for all `1 <= n <= steps`.
    pub conclusion_periodic_upto: bool,
    /// `a` interchanges with `f^{oi}(a)` for `1 <= i <= orbit_checked_upto`.
    pub conclusion_orbit_interchange: bool,
    pub mode: CertificateMode,
}

/// Checks the bounded `r`-periodicity statement for `a` under `f`.
pub fn verify_periodicity(
    f: &SkewPoly,
    a: &Scalar,
    r: u32,
    steps: u32,
    stability_bound: u32,
    max_coeffs: usize,
) -> Result<PeriodicityCertificate> {
    if r == 0 {
        return Err(Error::InvalidParameter("period r must be positive".into()));
    }
    if steps == 0 {
        return Err(Error::InvalidParameter(
            "verification bound must be positive".into(),
        ));
    }
    let tw = f.twist();
    let mut powers = formal_powers(f, r, max_coeffs)?;
    let mut values = Vec::with_capacity(powers.len());
    for p in &powers {
        values.push(p.eval(a)?);
    }
    let hypothesis_return = values[r as usize] == *a;
    let mut hypothesis_interchange_prefix = true;
    for v in values.iter().take(r as usize) {
        if !interchanges(tw, a, v, stability_bound)? {
            hypothesis_interchange_prefix = false;
            break;
        }
    }

    let orbit_checked_upto = if hypothesis_return { r * steps } else { r };
    if hypothesis_return {
        for _ in r..r * steps {
            let next = f.compose_capped(powers.last().expect("nonempty"), max_coeffs)?;
            values.push(next.eval(a)?);
            powers.push(next);
        }
    }

    let conclusion_periodic_upto = hypothesis_return
        && (1..=steps).all(|n| values[(n * r) as usize] == *a);
    let mut conclusion_orbit_interchange = true;
    for v in values.iter().take(orbit_checked_upto as usize + 1).skip(1) {
        if !interchanges(tw, a, v, stability_bound)? {
            conclusion_orbit_interchange = false;
            break;
        }
    }

    let mode = if hypothesis_return && hypothesis_interchange_prefix {
        CertificateMode::TheoremApplies
    } else if hypothesis_return && conclusion_periodic_upto {
        CertificateMode::PeriodicWithoutHypothesis
    } else {
        CertificateMode::NotPeriodic
    };

    Ok(PeriodicityCertificate {
        r,
        steps,
        stability_bound,
        orbit_checked_upto,
        hypothesis_return,
        hypothesis_interchange_prefix,
        conclusion_periodic_upto,
        conclusion_orbit_interchange,
        mode,
    })
}

#[cfg(test)]
mod tests {
    use crate::algebra::qpoly::QPoly;
    use crate::algebra::sampling::{random_scalar, rng_from_seed};
    use crate::algebra::{Domain, Quaternion, RatFunc};
    use crate::skewpoly::random_poly;

    use super::*;

    fn quat(w: i64, x: i64, y: i64, z: i64) -> Scalar {
        Scalar::Quaternion(Quaternion::from_ints(w, x, y, z))
    }

    fn rf(coeffs: &[i64]) -> Scalar {
        Scalar::RatFunc(RatFunc::from_poly(QPoly::from_ints(coeffs)))
    }

    fn t_scalar() -> Scalar {
        Scalar::RatFunc(RatFunc::var())
    }

    /// f = j + k - x over the plain quaternion ring.
    fn remark_poly() -> SkewPoly {
        let tw = Twist::untwisted(Domain::Quaternion);
        SkewPoly::new(tw, vec![quat(0, 0, 1, 1), quat(-1, 0, 0, 0)]).unwrap()
    }

    /// f = x^2 - (t^2 + 1) fixes t under shift/difference.
    fn ratfunc_fixed_point_poly() -> SkewPoly {
        let tw = Twist::shift_difference();
        SkewPoly::new(tw, vec![rf(&[-1, 0, -1]), rf(&[]), rf(&[1])]).unwrap()
    }

    #[test]
    fn zeroth_formal_power_is_x() {
        for f in [
            SkewPoly::zero(Twist::untwisted(Domain::Rational)),
            remark_poly(),
        ] {
            assert_eq!(formal_power(&f, 0), SkewPoly::var(f.twist().clone()));
        }
    }

    #[test]
    fn remark_powers_alternate() {
        let f = remark_poly();
        let x = SkewPoly::var(f.twist().clone());
        for n in 0..=10u32 {
            let p = formal_power(&f, n);
            if n % 2 == 0 {
                assert_eq!(p, x);
            } else {
                assert_eq!(p, f);
            }
        }
    }

    #[test]
    fn commutative_power_tower() {
        let tw = Twist::untwisted(Domain::Rational);
        let sq = SkewPoly::monomial(tw.clone(), Scalar::one(Domain::Rational), 2).unwrap();
        let p3 = formal_power(&sq, 3);
        assert_eq!(
            p3,
            SkewPoly::monomial(tw, Scalar::one(Domain::Rational), 8).unwrap()
        );
    }

    #[test]
    fn naive_iteration_examples() {
        // arithmetic progression over Q
        let tw = Twist::untwisted(Domain::Rational);
        let one = Scalar::one(Domain::Rational);
        let f = SkewPoly::new(tw.clone(), vec![one.clone(), one.clone()]).unwrap();
        let zero = Scalar::zero(Domain::Rational);
        assert_eq!(naive_iterate(&f, &zero, 0).unwrap(), zero);
        assert_eq!(
            naive_iterate(&f, &zero, 5).unwrap(),
            Scalar::from_int(Domain::Rational, 5)
        );
        // the 2-cycle k -> j -> k
        let f = remark_poly();
        let k = quat(0, 0, 0, 1);
        let j = quat(0, 0, 1, 0);
        assert_eq!(naive_iterate(&f, &k, 1).unwrap(), j);
        assert_eq!(naive_iterate(&f, &k, 2).unwrap(), k);
        assert_eq!(naive_iterate(&f, &k, 7).unwrap(), j);
    }

    #[test]
    fn orbit_of_identity_polynomial_is_constant() {
        let tw = Twist::untwisted(Domain::Rational);
        let x = SkewPoly::var(tw.clone());
        let a = Scalar::from_int(Domain::Rational, 4);
        let report = formal_orbit(&x, &a, 6, 8, DEFAULT_MAX_COEFFS).unwrap();
        assert_eq!(report.agree_upto, 6);
        assert!(report.formal.iter().all(|v| v == &a));
        assert!(report.naive.iter().all(|v| v == &a));
        assert!(report.interchange_flags.iter().all(|&b| b));
    }

    #[test]
    fn remark_orbit_report() {
        let f = remark_poly();
        let k = quat(0, 0, 0, 1);
        let j = quat(0, 0, 1, 0);
        let report = formal_orbit(&f, &k, 6, 8, DEFAULT_MAX_COEFFS).unwrap();
        let expect: Vec<Scalar> = (0..=6)
            .map(|i| if i % 2 == 0 { k.clone() } else { j.clone() })
            .collect();
        assert_eq!(report.formal, expect);
        assert_eq!(report.naive, expect);
        assert_eq!(report.agree_upto, 6);
        // k interchanges with itself but not with j
        let flags: Vec<bool> = (0..=6).map(|i| i % 2 == 0).collect();
        assert_eq!(report.interchange_flags, flags);
    }

    #[test]
    fn ratfunc_fixed_point_has_constant_orbit() {
        let f = ratfunc_fixed_point_poly();
        let t = t_scalar();
        assert_eq!(f.eval(&t).unwrap(), t);
        let report = formal_orbit(&f, &t, 5, 16, DEFAULT_MAX_COEFFS).unwrap();
        assert_eq!(report.agree_upto, 5);
        assert!(report.formal.iter().all(|v| v == &t));
        assert!(report.interchange_flags.iter().all(|&b| b));
    }

    #[test]
    fn lemma_good_and_fixed_point_on_spec_instance() {
        let f = ratfunc_fixed_point_poly();
        let t = t_scalar();
        assert!(check_lemma_good(&f, &t, 6).unwrap());
        assert!(check_fixed_point(&f, &t, 5).unwrap());
    }

    #[test]
    fn hypothesis_rejection_when_not_fixed() {
        let tw = Twist::untwisted(Domain::Rational);
        let one = Scalar::one(Domain::Rational);
        let f = SkewPoly::new(tw, vec![one.clone(), one]).unwrap(); // x + 1
        let zero = Scalar::zero(Domain::Rational);
        assert!(matches!(
            check_lemma_good(&f, &zero, 4),
            Err(Error::HypothesisUnmet(_))
        ));
        assert!(matches!(
            check_fixed_point(&f, &zero, 4),
            Err(Error::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn constant_adjustment_fixes_the_point() {
        let mut rng = rng_from_seed(61);
        for tw in [
            Twist::untwisted(Domain::Rational),
            Twist::shift_difference(),
            Twist::untwisted(Domain::Quaternion),
        ] {
            for _ in 0..20 {
                let g = random_poly(&mut rng, &tw, 2);
                let a = random_scalar(&mut rng, tw.domain());
                let f = constant_adjusted(&g, &a).unwrap();
                assert_eq!(f.eval(&a).unwrap(), a);
            }
        }
    }

    #[test]
    fn lemma_good_on_adjusted_quaternion_instances() {
        let mut rng = rng_from_seed(67);
        let tw = Twist::untwisted(Domain::Quaternion);
        for _ in 0..25 {
            let g = random_poly(&mut rng, &tw, 2);
            let a = random_scalar(&mut rng, Domain::Quaternion);
            let f = constant_adjusted(&g, &a).unwrap();
            assert!(check_lemma_good(&f, &a, 8).unwrap());
        }
    }

    #[test]
    fn fixed_point_on_nonlinear_adjusted_instances() {
        let mut rng = rng_from_seed(71);
        for tw in [
            Twist::untwisted(Domain::Rational),
            Twist::shift_difference(),
            Twist::untwisted(Domain::Quaternion),
        ] {
            for _ in 0..3 {
                let g = random_poly(&mut rng, &tw, 2);
                let a = random_scalar(&mut rng, tw.domain());
                let f = constant_adjusted(&g, &a).unwrap();
                assert!(check_fixed_point(&f, &a, 5).unwrap());
            }
        }
    }

    #[test]
    fn phew_identity_examples() {
        // n = 0: both sides are b
        let tw = Twist::shift_difference();
        let a = t_scalar();
        let b = a.clone();
        assert!(check_phew(&tw, &a, &b, 0).unwrap());
        // b = a in every shipped twist family, including a non-commuting one
        for tw in [
            Twist::untwisted(Domain::Quaternion),
            Twist::shift_difference(),
            Twist::inner(Quaternion::from_ints(1, 1, 0, 0), Quaternion::j(), 0).unwrap(),
        ] {
            let a = crate::algebra::sampling::random_nonzero_scalar(
                &mut rng_from_seed(73),
                tw.domain(),
            );
            assert!(check_phew(&tw, &a, &a, 8).unwrap());
        }
        // commutative untwisted rationals: identity reads a^n b = a^n b
        let tw = Twist::untwisted(Domain::Rational);
        let a = Scalar::Rational(crate::algebra::rational::rat(2, 3));
        let b = Scalar::Rational(crate::algebra::rational::rat(-5, 7));
        assert!(check_phew(&tw, &a, &b, 8).unwrap());
    }

    #[test]
    fn phew_guards() {
        let tw = Twist::untwisted(Domain::Quaternion);
        let k = quat(0, 0, 0, 1);
        let j = quat(0, 0, 1, 0);
        assert_eq!(
            check_phew(&tw, &k, &Scalar::zero(Domain::Quaternion), 4),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            check_phew(&tw, &k, &j, 4),
            Err(Error::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn cor1_reduces_to_lemma_when_fixed() {
        let f = ratfunc_fixed_point_poly();
        let t = t_scalar();
        assert!(check_cor1(&f, &t, 6, 16).unwrap());
    }

    #[test]
    fn cor1_zero_branch() {
        // f = x^2 at a = 0: f(a) = 0, a interchanges with 0 trivially,
        // and both sides vanish for n >= 1
        let tw = Twist::shift_difference();
        let f = SkewPoly::monomial(tw, rf(&[1]), 2).unwrap();
        let zero = Scalar::zero(Domain::RatFunc);
        assert!(check_cor1(&f, &zero, 6, 16).unwrap());
    }

    #[test]
    fn thm1_trivial_and_commutative() {
        let mut rng = rng_from_seed(79);
        let tw = Twist::untwisted(Domain::Rational);
        for _ in 0..20 {
            let f = random_poly(&mut rng, &tw, 2);
            let a = random_scalar(&mut rng, Domain::Rational);
            assert!(check_thm1(&f, &a, 1, 8).unwrap());
            for n in 2..=5u32 {
                assert!(check_thm1(&f, &a, n, 8).unwrap());
            }
        }
    }

    #[test]
    fn thm1_rejects_when_no_prefix_interchanges() {
        let f = remark_poly();
        let k = quat(0, 0, 0, 1);
        // prefix (k, j): k does not interchange with j, and the naive
        // prefix is the same sequence
        assert!(matches!(
            check_thm1(&f, &k, 2, 8),
            Err(Error::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn certificate_for_remark_point() {
        let f = remark_poly();
        let k = quat(0, 0, 0, 1);
        let cert = verify_periodicity(&f, &k, 2, 5, 16, DEFAULT_MAX_COEFFS).unwrap();
        assert!(cert.hypothesis_return);
        assert!(!cert.hypothesis_interchange_prefix);
        assert!(cert.conclusion_periodic_upto);
        assert!(!cert.conclusion_orbit_interchange);
        assert_eq!(cert.mode, CertificateMode::PeriodicWithoutHypothesis);
        assert_eq!(cert.orbit_checked_upto, 10);
    }

    #[test]
    fn certificate_identity_polynomial() {
        let tw = Twist::untwisted(Domain::Quaternion);
        let x = SkewPoly::var(tw.clone());
        let a = quat(1, -2, 0, 3);
        let cert = verify_periodicity(&x, &a, 1, 5, 8, DEFAULT_MAX_COEFFS).unwrap();
        assert_eq!(cert.mode, CertificateMode::TheoremApplies);
        assert!(cert.hypothesis_return && cert.hypothesis_interchange_prefix);
        assert!(cert.conclusion_periodic_upto && cert.conclusion_orbit_interchange);
    }

    #[test]
    fn certificate_fixed_point_r1_theorem_applies() {
        let f = ratfunc_fixed_point_poly();
        let t = t_scalar();
        let cert = verify_periodicity(&f, &t, 1, 4, 16, DEFAULT_MAX_COEFFS).unwrap();
        assert_eq!(cert.mode, CertificateMode::TheoremApplies);
        assert!(cert.conclusion_periodic_upto);
        assert!(cert.conclusion_orbit_interchange);
    }

    #[test]
    fn certificate_not_periodic() {
        let tw = Twist::untwisted(Domain::Rational);
        let one = Scalar::one(Domain::Rational);
        // x + 1 never returns
        let f = SkewPoly::new(tw, vec![one.clone(), one]).unwrap();
        let cert = verify_periodicity(
            &f,
            &Scalar::zero(Domain::Rational),
            2,
            4,
            8,
            DEFAULT_MAX_COEFFS,
        )
        .unwrap();
        assert_eq!(cert.mode, CertificateMode::NotPeriodic);
        assert!(!cert.hypothesis_return);
        assert!(!cert.conclusion_periodic_upto);
        assert_eq!(cert.orbit_checked_upto, 2);
    }

    #[test]
    fn certificate_parameter_guards() {
        let f = remark_poly();
        let k = quat(0, 0, 0, 1);
        assert!(matches!(
            verify_periodicity(&f, &k, 0, 5, 8, DEFAULT_MAX_COEFFS),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            verify_periodicity(&f, &k, 2, 0, 8, DEFAULT_MAX_COEFFS),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn resource_ceiling_propagates() {
        let tw = Twist::untwisted(Domain::Rational);
        let sq = SkewPoly::monomial(tw, Scalar::one(Domain::Rational), 2).unwrap();
        assert!(matches!(
            formal_powers(&sq, 6, 16),
            Err(Error::ResourceCeiling { .. })
        ));
    }

    #[test]
    fn certificate_serializes_with_mode_string() {
        let f = remark_poly();
        let k = quat(0, 0, 0, 1);
        let cert = verify_periodicity(&f, &k, 2, 5, 16, DEFAULT_MAX_COEFFS).unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["mode"], "periodic-without-hypothesis");
        assert_eq!(json["r"], 2);
        assert_eq!(json["orbit_checked_upto"], 10);
    }
}
