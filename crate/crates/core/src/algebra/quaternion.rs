//! Rational quaternions: `w + x*i + y*j + z*k` with `i^2 = j^2 = k^2 = -1`
//! and `ij = k`. The reduced norm `w^2+x^2+y^2+z^2` vanishes only at zero,
//! so every nonzero element is invertible and the ring is a division ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_rational(w: Rational) -> Self {
        Quaternion::new(w, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Quaternion::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn j() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    pub fn k() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |n: i64| Rational::from_integer(n.into());
        Quaternion::new(r(w), r(x), r(y), r(z))
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm_sq(&self) -> Rational {
        &(&self.w * &self.w) + &(&self.x * &self.x) + &(&self.y * &self.y) + &(&self.z * &self.z)
    }

    pub fn inv(&self) -> Result<Quaternion> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq().recip();
        let c = self.conj();
        Ok(Quaternion::new(
            &c.w * &n,
            &c.x * &n,
            &c.y * &n,
            &c.z * &n,
        ))
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a, b) = (self, rhs);
        Quaternion::new(
            &(&(&a.w * &b.w) - &(&a.x * &b.x)) - &(&(&a.y * &b.y) + &(&a.z * &b.z)),
            &(&(&a.w * &b.x) + &(&a.x * &b.w)) + &(&(&a.y * &b.z) - &(&a.z * &b.y)),
            &(&(&a.w * &b.y) - &(&a.x * &b.z)) + &(&(&a.y * &b.w) + &(&a.z * &b.x)),
            &(&(&a.w * &b.z) + &(&a.x * &b.y)) - &(&(&a.y * &b.x) - &(&a.z * &b.w)),
        )
    }
}

impl fmt::Display for Quaternion {
    /// Component form `[w,x,y,z]` from the literal grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.w, self.x, self.y, self.z)
    }
}
