//! Concrete division rings with exact arithmetic, twist structures, and the
//! scalar-level machinery they support: generalized powers, twisted
//! conjugation, stability and interchange.
//!
//! Three domains ship: the rationals, the rational function field Q(t), and
//! the rational quaternions. Elements are tagged [`Scalar`] values kept in
//! canonical form; a [`Twist`] pairs an endomorphism descriptor with a
//! matching derivation descriptor and is validated at construction.

pub mod ops;
pub mod qpoly;
pub mod quaternion;
pub mod ratfunc;
pub mod rational;
pub mod sampling;
pub mod scalar;
pub mod twist;

pub use ops::{
    check_commuting, check_leibniz, check_power_commute, conjugate, genpow, genpow_sequence,
    interchanges, is_stable_upto,
};
pub use sampling::{interchange_partner, random_nonzero_scalar, random_scalar, rng_from_seed};
pub use qpoly::QPoly;
pub use quaternion::Quaternion;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use scalar::{Domain, Scalar};
pub use twist::{CommutingProvenance, DeltaMap, SigmaMap, Twist, COMMUTING_SAMPLES, LEIBNIZ_SAMPLES};
