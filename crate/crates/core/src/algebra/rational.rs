//! Arbitrary-precision rationals, re-exported from `num-rational`.
//!
//! `BigRational` already maintains the canonical form this crate relies on:
//! reduced to lowest terms, positive denominator, zero stored as 0/1.

use num_bigint::BigInt;

pub use num_rational::BigRational as Rational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}
