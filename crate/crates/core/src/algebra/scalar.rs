//! Tagged elements of the active coefficient division ring.
//!
//! A `Scalar` is an element of exactly one of the three shipped domains.
//! The `+ - *` operators panic on mixed domains (an internal invariant —
//! public entry points validate domains first and return errors); the
//! `try_*` methods and `inv` expose the checked contract.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::quaternion::Quaternion;
use super::ratfunc::RatFunc;
use super::rational::Rational;

/// Which division ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Rational,
    RatFunc,
    Quaternion,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Domain::Rational => "rational",
            Domain::RatFunc => "ratfunc",
            Domain::Quaternion => "quaternion",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    RatFunc(RatFunc),
    Quaternion(Quaternion),
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Rational(_) => Domain::Rational,
            Scalar::RatFunc(_) => Domain::RatFunc,
            Scalar::Quaternion(_) => Domain::Quaternion,
        }
    }

    pub fn zero(domain: Domain) -> Scalar {
        match domain {
            Domain::Rational => Scalar::Rational(Rational::zero()),
            Domain::RatFunc => Scalar::RatFunc(RatFunc::zero()),
            Domain::Quaternion => Scalar::Quaternion(Quaternion::zero()),
        }
    }

    pub fn one(domain: Domain) -> Scalar {
        match domain {
            Domain::Rational => Scalar::Rational(Rational::one()),
            Domain::RatFunc => Scalar::RatFunc(RatFunc::one()),
            Domain::Quaternion => Scalar::Quaternion(Quaternion::one()),
        }
    }

    /// The integer `n` embedded in `domain`.
    pub fn from_int(domain: Domain, n: i64) -> Scalar {
        let r = Rational::from_integer(n.into());
        match domain {
            Domain::Rational => Scalar::Rational(r),
            Domain::RatFunc => Scalar::RatFunc(RatFunc::from_rational(r)),
            Domain::Quaternion => Scalar::Quaternion(Quaternion::from_rational(r)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(v) => v.is_zero(),
            Scalar::RatFunc(v) => v.is_zero(),
            Scalar::Quaternion(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(v) => v.is_one(),
            Scalar::RatFunc(v) => v.is_one(),
            Scalar::Quaternion(v) => &Quaternion::one() == v,
        }
    }

    /// Errors with `DomainMismatch` unless `other` shares this domain.
    pub fn ensure_same_domain(&self, other: &Scalar) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                expected: self.domain(),
                found: other.domain(),
            })
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.ensure_same_domain(rhs)?;
        Ok(self + rhs)
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.ensure_same_domain(rhs)?;
        Ok(self - rhs)
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.ensure_same_domain(rhs)?;
        Ok(self * rhs)
    }

    /// Multiplicative inverse; zero is an error, never a sentinel.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(v) => {
                if v.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(v.recip()))
                }
            }
            Scalar::RatFunc(v) => Ok(Scalar::RatFunc(v.inv()?)),
            Scalar::Quaternion(v) => Ok(Scalar::Quaternion(v.inv()?)),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.$method(b)),
                    (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Scalar::RatFunc(a.$method(b)),
                    (Scalar::Quaternion(a), Scalar::Quaternion(b)) => {
                        Scalar::Quaternion(a.$method(b))
                    }
                    (a, b) => panic!(
                        "scalar domain mismatch: {} vs {}",
                        a.domain(),
                        b.domain()
                    ),
                }
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(v) => Scalar::Rational(-v),
            Scalar::RatFunc(v) => Scalar::RatFunc(-v),
            Scalar::Quaternion(v) => Scalar::Quaternion(-v),
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical literal: `p/q`, an infix expression in `t`, or `[w,x,y,z]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(v) => write!(f, "{v}"),
            Scalar::RatFunc(v) => write!(f, "{v}"),
            Scalar::Quaternion(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
