//! Twist structures: an endomorphism `sigma` together with a
//! `sigma`-derivation `delta` of the active division ring.
//!
//! Construction is validating: unit laws and the generalized Leibniz rule
//! `delta(ab) = sigma(a) delta(b) + delta(a) b` are checked on fixed probe
//! pairs followed by a seeded random sample, and an invalid pairing (for
//! example the shift endomorphism with the ordinary `d/dt`) is rejected
//! with the first counterexample found.

use serde::Serialize;

use crate::error::{Error, Result};

use super::quaternion::Quaternion;
use super::ratfunc::RatFunc;
use super::sampling::{random_scalar, rng_from_seed};
use super::scalar::{Domain, Scalar};

/// Number of seeded random pairs checked against the Leibniz rule at
/// construction, after the fixed probes.
pub const LEIBNIZ_SAMPLES: usize = 64;
/// Number of seeded random elements used to classify an inner pair as
/// commuting or not.
pub const COMMUTING_SAMPLES: usize = 128;

/// Endomorphism descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaMap {
    /// `a -> a`, any domain.
    Identity,
    /// `t -> t + 1` on the rational function field.
    Shift,
    /// `a -> u a u^{-1}` for a fixed nonzero quaternion `u`.
    Inner(Quaternion),
}

/// Derivation descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaMap {
    /// `a -> 0`, any domain.
    Zero,
    /// `a -> sigma(a) - a` for the shift endomorphism.
    Difference,
    /// Formal `d/dt` on the rational function field (pairs with the
    /// identity endomorphism).
    Derivative,
    /// `a -> c a - sigma(a) c` for a fixed quaternion `c`.
    Inner(Quaternion),
}

/// How the commuting flag was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommutingProvenance {
    /// Known for the whole family: `delta = 0`, `sigma = id`, or
    /// shift-with-difference.
    ByConstruction,
    /// Determined by a seeded randomized check.
    Empirical,
}

#[derive(Debug, Clone)]
pub struct Twist {
    domain: Domain,
    sigma: SigmaMap,
    delta: DeltaMap,
    /// `u^{-1}` for an inner endomorphism, cached at construction.
    sigma_inner_inv: Option<Quaternion>,
    commuting: bool,
    provenance: CommutingProvenance,
}

impl PartialEq for Twist {
    /// Twists are equal when their descriptors agree; the commuting flag is
    /// derived metadata.
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.sigma == other.sigma && self.delta == other.delta
    }
}

impl Eq for Twist {}

impl Twist {
    /// Validating constructor. The seed drives the randomized law checks.
    pub fn new(domain: Domain, sigma: SigmaMap, delta: DeltaMap, seed: u64) -> Result<Twist> {
        let sigma_inner_inv = match &sigma {
            SigmaMap::Identity => None,
            SigmaMap::Shift => {
                if domain != Domain::RatFunc {
                    return Err(Error::InvalidDescriptor(format!(
                        "shift endomorphism requires the ratfunc domain, got {domain}"
                    )));
                }
                None
            }
            SigmaMap::Inner(u) => {
                if domain != Domain::Quaternion {
                    return Err(Error::InvalidDescriptor(format!(
                        "inner endomorphism requires the quaternion domain, got {domain}"
                    )));
                }
                Some(u.inv().map_err(|_| {
                    Error::InvalidDescriptor("inner endomorphism unit must be nonzero".into())
                })?)
            }
        };
        match &delta {
            DeltaMap::Zero => {}
            DeltaMap::Difference | DeltaMap::Derivative => {
                if domain != Domain::RatFunc {
                    return Err(Error::InvalidDescriptor(format!(
                        "{} requires the ratfunc domain, got {domain}",
                        if delta == DeltaMap::Difference {
                            "difference operator"
                        } else {
                            "formal derivative"
                        }
                    )));
                }
            }
            DeltaMap::Inner(_) => {
                if domain != Domain::Quaternion {
                    return Err(Error::InvalidDescriptor(format!(
                        "inner derivation requires the quaternion domain, got {domain}"
                    )));
                }
            }
        }

        let mut tw = Twist {
            domain,
            sigma,
            delta,
            sigma_inner_inv,
            commuting: false,
            provenance: CommutingProvenance::ByConstruction,
        };
        tw.validate(seed)?;

        match (&tw.sigma, &tw.delta) {
            (_, DeltaMap::Zero) | (SigmaMap::Identity, _) | (SigmaMap::Shift, DeltaMap::Difference) => {
                tw.commuting = true;
                tw.provenance = CommutingProvenance::ByConstruction;
            }
            _ => {
                tw.commuting = tw.classify_commuting(seed);
                tw.provenance = CommutingProvenance::Empirical;
            }
        }
        Ok(tw)
    }

    /// `sigma = id`, `delta = 0`: the plain polynomial ring over `domain`.
    pub fn untwisted(domain: Domain) -> Twist {
        Twist::new(domain, SigmaMap::Identity, DeltaMap::Zero, 0)
            .expect("identity twist always validates")
    }

    /// Shift endomorphism with the difference operator on Q(t).
    pub fn shift_difference() -> Twist {
        Twist::new(Domain::RatFunc, SigmaMap::Shift, DeltaMap::Difference, 0)
            .expect("shift/difference always validates")
    }

    /// Identity endomorphism with the formal derivative on Q(t).
    pub fn derivation() -> Twist {
        Twist::new(Domain::RatFunc, SigmaMap::Identity, DeltaMap::Derivative, 0)
            .expect("identity/derivative always validates")
    }

    /// Inner endomorphism by `u` and inner derivation by `c` on the
    /// quaternions.
    pub fn inner(u: Quaternion, c: Quaternion, seed: u64) -> Result<Twist> {
        Twist::new(
            Domain::Quaternion,
            SigmaMap::Inner(u),
            DeltaMap::Inner(c),
            seed,
        )
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn sigma_map(&self) -> &SigmaMap {
        &self.sigma
    }

    pub fn delta_map(&self) -> &DeltaMap {
        &self.delta
    }

    pub fn commuting(&self) -> bool {
        self.commuting
    }

    pub fn commuting_provenance(&self) -> CommutingProvenance {
        self.provenance
    }

    fn ensure_domain(&self, a: &Scalar) -> Result<()> {
        if a.domain() == self.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                expected: self.domain,
                found: a.domain(),
            })
        }
    }

    /// Applies the endomorphism.
    pub fn sigma(&self, a: &Scalar) -> Result<Scalar> {
        self.ensure_domain(a)?;
        Ok(self.sigma_raw(a))
    }

    /// Applies the derivation.
    pub fn delta(&self, a: &Scalar) -> Result<Scalar> {
        self.ensure_domain(a)?;
        Ok(self.delta_raw(a))
    }

    pub(crate) fn sigma_raw(&self, a: &Scalar) -> Scalar {
        match (&self.sigma, a) {
            (SigmaMap::Identity, _) => a.clone(),
            (SigmaMap::Shift, Scalar::RatFunc(v)) => Scalar::RatFunc(v.shift_by_one()),
            (SigmaMap::Inner(u), Scalar::Quaternion(q)) => {
                let u_inv = self.sigma_inner_inv.as_ref().expect("cached at construction");
                Scalar::Quaternion(&(u * q) * u_inv)
            }
            _ => unreachable!("descriptor/domain compatibility checked at construction"),
        }
    }

    pub(crate) fn delta_raw(&self, a: &Scalar) -> Scalar {
        match (&self.delta, a) {
            (DeltaMap::Zero, _) => Scalar::zero(self.domain),
            (DeltaMap::Difference, Scalar::RatFunc(v)) => {
                Scalar::RatFunc(&v.shift_by_one() - v)
            }
            (DeltaMap::Derivative, Scalar::RatFunc(v)) => Scalar::RatFunc(v.derivative()),
            (DeltaMap::Inner(c), Scalar::Quaternion(q)) => {
                let conj = match self.sigma_raw(a) {
                    Scalar::Quaternion(s) => s,
                    _ => unreachable!(),
                };
                Scalar::Quaternion(&(c * q) - &(&conj * c))
            }
            _ => unreachable!("descriptor/domain compatibility checked at construction"),
        }
    }

    /// Fixed probe pairs per domain, checked before the random sample so
    /// rejections are deterministic and carry a canonical counterexample.
    fn probe_pairs(&self) -> Vec<(Scalar, Scalar)> {
        match self.domain {
            Domain::Rational => {
                let v = |p, q| Scalar::Rational(super::rational::rat(p, q));
                vec![(v(2, 3), v(5, 7)), (v(-1, 2), v(4, 1))]
            }
            Domain::RatFunc => {
                let t = Scalar::RatFunc(RatFunc::var());
                let t_sq = &t * &t;
                let inv_t = Scalar::RatFunc(RatFunc::var().inv().expect("t is nonzero"));
                vec![
                    (t.clone(), t.clone()),
                    (t.clone(), t_sq.clone()),
                    (t_sq, t.clone()),
                    (inv_t, t),
                ]
            }
            Domain::Quaternion => {
                let i = Scalar::Quaternion(Quaternion::i());
                let j = Scalar::Quaternion(Quaternion::j());
                let k = Scalar::Quaternion(Quaternion::k());
                let u = Scalar::Quaternion(Quaternion::from_ints(1, 1, 0, 0));
                vec![(i.clone(), j.clone()), (j, k.clone()), (k, u.clone()), (u, i)]
            }
        }
    }

    fn leibniz_sides(&self, a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        let lhs = self.delta_raw(&(a * b));
        let rhs = &(&self.sigma_raw(a) * &self.delta_raw(b)) + &(&self.delta_raw(a) * b);
        (lhs, rhs)
    }

    fn validate(&self, seed: u64) -> Result<()> {
        let one = Scalar::one(self.domain);
        if self.sigma_raw(&one) != one {
            return Err(Error::TwistRejected {
                law: "endomorphism-unit",
                a: one.to_string(),
                b: one.to_string(),
                lhs: self.sigma_raw(&one).to_string(),
                rhs: one.to_string(),
            });
        }
        if !self.delta_raw(&one).is_zero() {
            return Err(Error::TwistRejected {
                law: "derivation-unit",
                a: one.to_string(),
                b: one.to_string(),
                lhs: self.delta_raw(&one).to_string(),
                rhs: Scalar::zero(self.domain).to_string(),
            });
        }
        let mut rng = rng_from_seed(seed);
        let random_pairs = (0..LEIBNIZ_SAMPLES).map(|_| {
            (
                random_scalar(&mut rng, self.domain),
                random_scalar(&mut rng, self.domain),
            )
        });
        for (a, b) in self.probe_pairs().into_iter().chain(random_pairs) {
            let (lhs, rhs) = self.leibniz_sides(&a, &b);
            if lhs != rhs {
                return Err(Error::TwistRejected {
                    law: "Leibniz",
                    a: a.to_string(),
                    b: b.to_string(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
        Ok(())
    }

    fn classify_commuting(&self, seed: u64) -> bool {
        let mut rng = rng_from_seed(seed.wrapping_add(1));
        let probes = self.probe_pairs().into_iter().map(|(a, _)| a);
        let samples = (0..COMMUTING_SAMPLES).map(|_| random_scalar(&mut rng, self.domain));
        probes.chain(samples).all(|a| {
            self.sigma_raw(&self.delta_raw(&a)) == self.delta_raw(&self.sigma_raw(&a))
        })
    }
}
