//! Exact arithmetic in skew polynomial rings over division rings.
//!
//! The crate implements the ring `D[x, sigma, delta]` whose multiplication
//! is governed by the commutation rule `x a = sigma(a) x + delta(a)`, for
//! three concrete coefficient division rings: the rationals, the rational
//! function field Q(t), and the rational quaternions. On top of the ring it
//! provides substitution through generalized powers, an independent
//! evaluation path through right division, formal composition and formal
//! powers, orbit iteration, and machine-checked certificates for fixed
//! points and bounded periodicity.

pub mod algebra;
pub mod dynamics;
pub mod error;
pub mod skewpoly;

pub use error::{Error, Result};
