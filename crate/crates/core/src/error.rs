//! Error type shared across the crate.

use crate::algebra::Domain;
use thiserror::Error;

/// Errors reported by library operations.
///
/// Operations that cannot fail return plain values; everything that can be
/// provoked by caller input returns `Result<_, Error>`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different coefficient domains.
    #[error("domain mismatch: expected {expected}, found {found}")]
    DomainMismatch { expected: Domain, found: Domain },

    /// Inversion of zero, or a zero denominator in a constructor.
    #[error("division by zero")]
    DivisionByZero,

    /// A binary polynomial operation received operands over different twists.
    #[error("twist mismatch between operands")]
    TwistMismatch,

    /// Right division requires a monic nonzero divisor.
    #[error("right division requires a monic nonzero divisor")]
    NonMonicDivisor,

    /// A descriptor does not apply to the requested domain (e.g. the shift
    /// endomorphism outside the rational function field).
    #[error("invalid twist descriptor: {0}")]
    InvalidDescriptor(String),

    /// A numeric parameter outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Twist construction found a law violation; the counterexample is
    /// carried verbatim so callers can surface it.
    #[error("invalid twist: {law} law fails at a = {a}, b = {b}: lhs = {lhs}, rhs = {rhs}")]
    TwistRejected {
        law: &'static str,
        a: String,
        b: String,
        lhs: String,
        rhs: String,
    },

    /// A check was invoked with its hypothesis not satisfied.
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),

    /// A computation would exceed the configured coefficient ceiling.
    #[error("coefficient ceiling exceeded: needed {needed}, limit {limit}")]
    ResourceCeiling { needed: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
