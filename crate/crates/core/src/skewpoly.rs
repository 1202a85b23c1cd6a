//! The skew polynomial ring `D[x, sigma, delta]`.
//!
//! Polynomials store left coefficients: `f = sum f_i x^i`. Multiplication
//! is driven by the commutation rule `x a = sigma(a) x + delta(a)`, which
//! because `sigma` is injective on the shipped domains gives
//! `deg(fg) = deg f + deg g` for nonzero operands.
//!
//! Substitution has two independent paths: `eval` sums `f_i a^{[i]}` over
//! generalized powers, while `eval_via_remainder` divides by `x - a` on the
//! right and reads off the constant remainder. The two must agree; tests
//! and the acceptance suite cross-check them throughout.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::ops::{conjugate, genpow_sequence};
use crate::algebra::sampling::{random_nonzero_scalar, random_scalar};
use crate::algebra::{Scalar, Twist};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPoly {
    twist: Twist,
    coeffs: Vec<Scalar>,
}

impl SkewPoly {
    /// Builds a polynomial from left coefficients (`coeffs[i]` multiplies
    /// `x^i`); trailing zeros are trimmed. Every coefficient must live in
    /// the twist's domain.
    pub fn new(twist: Twist, coeffs: Vec<Scalar>) -> Result<Self> {
        for c in &coeffs {
            if c.domain() != twist.domain() {
                return Err(Error::DomainMismatch {
                    expected: twist.domain(),
                    found: c.domain(),
                });
            }
        }
        Ok(Self::from_normalized(twist, coeffs))
    }

    fn from_normalized(twist: Twist, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        SkewPoly { twist, coeffs }
    }

    pub fn zero(twist: Twist) -> Self {
        SkewPoly {
            twist,
            coeffs: Vec::new(),
        }
    }

    pub fn one(twist: Twist) -> Self {
        let c = Scalar::one(twist.domain());
        SkewPoly {
            twist,
            coeffs: vec![c],
        }
    }

    /// The variable `x`.
    pub fn var(twist: Twist) -> Self {
        let zero = Scalar::zero(twist.domain());
        let one = Scalar::one(twist.domain());
        SkewPoly {
            twist,
            coeffs: vec![zero, one],
        }
    }

    pub fn constant(twist: Twist, c: Scalar) -> Result<Self> {
        SkewPoly::new(twist, vec![c])
    }

    /// `c * x^power`.
    pub fn monomial(twist: Twist, c: Scalar, power: usize) -> Result<Self> {
        let mut coeffs = vec![Scalar::zero(twist.domain()); power];
        coeffs.push(c);
        SkewPoly::new(twist, coeffs)
    }

    /// The divisor `x - a` used by the remainder evaluation path.
    pub fn x_minus(twist: Twist, a: &Scalar) -> Result<Self> {
        let one = Scalar::one(twist.domain());
        SkewPoly::new(twist, vec![-a, one])
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.twist.domain()))
    }

    /// Degree; `None` marks the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Scalar::is_one)
    }

    /// Coefficients as canonical literals, index = power of `x`.
    pub fn coefficient_literals(&self) -> Vec<String> {
        self.coeffs.iter().map(Scalar::to_string).collect()
    }

    fn ensure_same_twist(&self, other: &SkewPoly) -> Result<()> {
        if self.twist == other.twist {
            Ok(())
        } else {
            Err(Error::TwistMismatch)
        }
    }

    fn ensure_domain(&self, a: &Scalar) -> Result<()> {
        if a.domain() == self.twist.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                expected: self.twist.domain(),
                found: a.domain(),
            })
        }
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.ensure_same_twist(other)?;
        Ok(self.add_raw(other))
    }

    fn add_raw(&self, other: &SkewPoly) -> SkewPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Scalar::zero(self.twist.domain());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            out.push(a + b);
        }
        SkewPoly::from_normalized(self.twist.clone(), out)
    }

    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SkewPoly {
        SkewPoly {
            twist: self.twist.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Left multiplication by a scalar: multiplies every coefficient on the
    /// left.
    pub fn scale_left(&self, c: &Scalar) -> Result<SkewPoly> {
        self.ensure_domain(c)?;
        Ok(self.scale_left_raw(c))
    }

    fn scale_left_raw(&self, c: &Scalar) -> SkewPoly {
        if c.is_zero() {
            return SkewPoly::zero(self.twist.clone());
        }
        SkewPoly::from_normalized(
            self.twist.clone(),
            self.coeffs.iter().map(|a| c * a).collect(),
        )
    }

    /// Ring product. Schoolbook: expands `x^i g` by repeated application of
    /// the commutation rule, reusing the expansion row across ascending `i`.
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.ensure_same_twist(other)?;
        Ok(self.mul_raw(other))
    }

    fn mul_raw(&self, other: &SkewPoly) -> SkewPoly {
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero(self.twist.clone());
        }
        let tw = &self.twist;
        let zero = Scalar::zero(tw.domain());
        let mut acc = vec![zero.clone(); self.coeffs.len() + other.coeffs.len() - 1];
        // row holds the coefficients of x^i * other
        let mut row = other.coeffs.clone();
        for (i, fi) in self.coeffs.iter().enumerate() {
            if !fi.is_zero() {
                for (k, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        acc[k] = &acc[k] + &(fi * c);
                    }
                }
            }
            if i + 1 < self.coeffs.len() {
                let mut next = vec![zero.clone(); row.len() + 1];
                for (k, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    next[k + 1] = &next[k + 1] + &tw.sigma_raw(c);
                    next[k] = &next[k] + &tw.delta_raw(c);
                }
                row = next;
            }
        }
        SkewPoly::from_normalized(tw.clone(), acc)
    }

    /// Right division by a monic divisor: `self = q * g + r` with
    /// `deg r < deg g`; the pair is unique.
    pub fn right_divide(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.ensure_same_twist(g)?;
        let dg = match g.degree() {
            Some(d) if g.is_monic() => d,
            _ => return Err(Error::NonMonicDivisor),
        };
        let zero = Scalar::zero(self.twist.domain());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![zero; self.coeffs.len().saturating_sub(dg)];
        while rem.len() > dg {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !c.is_zero() {
                let s = k - dg;
                let term = SkewPoly::monomial(self.twist.clone(), c.clone(), s)
                    .expect("coefficient domain already validated");
                let prod = term.mul_raw(g);
                for (idx, pc) in prod.coeffs.iter().enumerate() {
                    rem[idx] = &rem[idx] - pc;
                }
                debug_assert!(rem[k].is_zero(), "monic leading term must cancel");
                quot[s] = c;
            }
            rem.pop();
        }
        Ok((
            SkewPoly::from_normalized(self.twist.clone(), quot),
            SkewPoly::from_normalized(self.twist.clone(), rem),
        ))
    }

    /// Substitution `f(a) = sum f_i a^{[i]}` over generalized powers.
    pub fn eval(&self, a: &Scalar) -> Result<Scalar> {
        self.ensure_domain(a)?;
        let mut acc = Scalar::zero(self.twist.domain());
        if self.is_zero() {
            return Ok(acc);
        }
        let powers = genpow_sequence(&self.twist, a, self.coeffs.len() as u32 - 1)?;
        for (c, p) in self.coeffs.iter().zip(&powers) {
            if !c.is_zero() {
                acc = &acc + &(c * p);
            }
        }
        Ok(acc)
    }

    /// Independent evaluation path: the constant remainder of right
    /// division by `x - a`.
    pub fn eval_via_remainder(&self, a: &Scalar) -> Result<Scalar> {
        self.ensure_domain(a)?;
        let divisor = SkewPoly::x_minus(self.twist.clone(), a)?;
        let (_, r) = self.right_divide(&divisor)?;
        Ok(r.coeff(0))
    }

    /// Coefficientwise application of the endomorphism.
    pub fn sigma_lift(&self) -> SkewPoly {
        SkewPoly::from_normalized(
            self.twist.clone(),
            self.coeffs.iter().map(|c| self.twist.sigma_raw(c)).collect(),
        )
    }

    /// Coefficientwise application of the derivation.
    pub fn delta_lift(&self) -> SkewPoly {
        SkewPoly::from_normalized(
            self.twist.clone(),
            self.coeffs.iter().map(|c| self.twist.delta_raw(c)).collect(),
        )
    }

    /// Polynomial generalized power: `f^{[0]} = 1`,
    /// `f^{[n+1]} = sigma(f^{[n]}) f + delta(f^{[n]})`. Collapses to the
    /// ring power `f^n` when `sigma = id` and `delta = 0`.
    pub fn genpow(&self, n: u32) -> SkewPoly {
        let mut acc = SkewPoly::one(self.twist.clone());
        for _ in 0..n {
            acc = acc.sigma_lift().mul_raw(self).add_raw(&acc.delta_lift());
        }
        acc
    }

    /// Formal composition `f . g = sum f_i g^{[i]}`. For a constant `g = a`
    /// this agrees with substitution: `f . a = f(a)`.
    pub fn compose(&self, g: &SkewPoly) -> Result<SkewPoly> {
        self.compose_capped(g, usize::MAX)
    }

    /// `compose` with a resource guard: errors if the worst-case result
    /// size `deg f * deg g + 1` exceeds `max_coeffs`.
    pub fn compose_capped(&self, g: &SkewPoly, max_coeffs: usize) -> Result<SkewPoly> {
        self.ensure_same_twist(g)?;
        if let (Some(df), Some(dg)) = (self.degree(), g.degree()) {
            let needed = df.saturating_mul(dg).saturating_add(1);
            if needed > max_coeffs {
                return Err(Error::ResourceCeiling {
                    needed,
                    limit: max_coeffs,
                });
            }
        }
        let mut acc = SkewPoly::zero(self.twist.clone());
        let mut gpow = SkewPoly::one(self.twist.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add_raw(&gpow.scale_left_raw(c));
            }
            if i + 1 < self.coeffs.len() {
                gpow = gpow.sigma_lift().mul_raw(g).add_raw(&gpow.delta_lift());
            }
        }
        Ok(acc)
    }
}

impl Serialize for SkewPoly {
    /// JSON array of coefficient literals, index = power of `x`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Evaluation of a product via twisted conjugation:
/// `(pq)(a) = 0` when `q(a) = 0`, otherwise `p(a^{q(a)}) q(a)`.
/// Must agree with evaluating the ring product directly.
pub fn product_eval(p: &SkewPoly, q: &SkewPoly, a: &Scalar) -> Result<Scalar> {
    if p.twist() != q.twist() {
        return Err(Error::TwistMismatch);
    }
    let qa = q.eval(a)?;
    if qa.is_zero() {
        return Ok(Scalar::zero(p.twist().domain()));
    }
    let shifted = conjugate(p.twist(), a, &qa)?;
    Ok(&p.eval(&shifted)? * &qa)
}

/// Whether the lifted endomorphism is multiplicative on the pair:
/// `sigma(fg) = sigma(f) sigma(g)`. Guaranteed when `sigma` and `delta`
/// commute on `D`; a non-commuting twist is a hypothesis failure.
pub fn check_extend_endo(tw: &Twist, f: &SkewPoly, g: &SkewPoly) -> Result<bool> {
    if f.twist() != tw || g.twist() != tw {
        return Err(Error::TwistMismatch);
    }
    if !tw.commuting() {
        return Err(Error::HypothesisUnmet(
            "lifted endomorphism law requires a commuting twist".into(),
        ));
    }
    let lhs = f.mul(g)?.sigma_lift();
    let rhs = f.sigma_lift().mul(&g.sigma_lift())?;
    Ok(lhs == rhs)
}

/// Whether the lifted derivation satisfies the Leibniz rule on the pair:
/// `delta(fg) = sigma(f) delta(g) + delta(f) g`. Same hypothesis as
/// [`check_extend_endo`].
pub fn check_extend_deriv(tw: &Twist, f: &SkewPoly, g: &SkewPoly) -> Result<bool> {
    if f.twist() != tw || g.twist() != tw {
        return Err(Error::TwistMismatch);
    }
    if !tw.commuting() {
        return Err(Error::HypothesisUnmet(
            "lifted derivation law requires a commuting twist".into(),
        ));
    }
    let lhs = f.mul(g)?.delta_lift();
    let rhs = f.sigma_lift().mul(&g.delta_lift())?.add(&f.delta_lift().mul(g)?)?;
    Ok(lhs == rhs)
}

/// Random polynomial of degree at most `max_deg` with a nonzero leading
/// coefficient (so the drawn degree is the actual degree).
pub fn random_poly(rng: &mut impl rand::Rng, tw: &Twist, max_deg: usize) -> SkewPoly {
    let deg = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<Scalar> = (0..deg)
        .map(|_| random_scalar(rng, tw.domain()))
        .collect();
    coeffs.push(random_nonzero_scalar(rng, tw.domain()));
    SkewPoly::new(tw.clone(), coeffs).expect("sampled coefficients share the twist domain")
}
