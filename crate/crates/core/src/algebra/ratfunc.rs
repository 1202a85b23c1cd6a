//! The rational function field Q(t): quotients of `QPoly` kept in canonical
//! form (monic denominator, numerator and denominator coprime, zero = 0/1).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::{Error, Result};

use super::qpoly::QPoly;
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    /// Builds `num / den` in canonical form. Errors if `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFunc::from_poly(QPoly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(QPoly::one())
    }

    /// The variable `t` as a rational function.
    pub fn var() -> Self {
        RatFunc::from_poly(QPoly::var())
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    /// The substitution `t -> t + 1` on numerator and denominator.
    ///
    /// Shifting preserves the canonical form: the shifted denominator stays
    /// monic and the gcd of the shifted pair is the shifted gcd.
    pub fn shift_by_one(&self) -> RatFunc {
        RatFunc {
            num: self.num.shift_by_one(),
            den: self.den.shift_by_one(),
        }
    }

    /// Formal derivative via the quotient rule.
    pub fn derivative(&self) -> RatFunc {
        if self.den.is_one() {
            return RatFunc::from_poly(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(num, &self.den * &self.den)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            let g = num.gcd(&self.den);
            return if g.is_one() {
                RatFunc {
                    num,
                    den: self.den.clone(),
                }
            } else {
                RatFunc {
                    num: num.div_rem(&g).0,
                    den: self.den.div_rem(&g).0,
                }
            };
        }
        // Add over the lcm of the denominators. Any common factor of the
        // resulting numerator and denominator divides gcd(d1, d2), so only
        // that small gcd needs to be cancelled.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let d1g = self.den.div_rem(&g).0;
        let d2g = rhs.den.div_rem(&g).0;
        let num = &(&self.num * &d2g) + &(&rhs.num * &d1g);
        let den = &self.den * &d2g;
        let h = num.gcd(&g);
        if h.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.div_rem(&h).0,
                den: den.div_rem(&h).0,
            }
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // Cancel across the pair first; the leftover product is then
        // already in lowest terms and only needs a monic denominator.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_rem(&g1).0
        };
        let d2 = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.div_rem(&g1).0
        };
        let n2 = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.div_rem(&g2).0
        };
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_rem(&g2).0
        };
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl fmt::Display for RatFunc {
    /// Canonical rendering in the literal grammar: the numerator polynomial
    /// when the denominator is 1, otherwise `num/den` with sums
    /// parenthesized, e.g. `(t^2+1)/(t-1)` or `1/t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &QPoly| {
            let s = p.to_string();
            let terms = p.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
            if terms > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
