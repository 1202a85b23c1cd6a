//! Dense univariate polynomials over the rationals, in the variable `t`.
//!
//! This is the coefficient workhorse behind the rational function field:
//! exact ring arithmetic, Euclidean division, monic gcd, the `t -> t+1`
//! substitution and the formal derivative.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Polynomial in `t` with rational coefficients; `coeffs[i]` is the
/// coefficient of `t^i` and the last entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    /// The variable `t`.
    pub fn var() -> Self {
        QPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(
            coeffs
                .iter()
                .map(|&n| Rational::from_integer(n.into()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by the leading one; zero stays zero.
    pub fn make_monic(&self) -> QPoly {
        match self.leading_coeff() {
            None => QPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics if `div` is zero.
    pub fn div_rem(&self, div: &QPoly) -> (QPoly, QPoly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        let lead_inv = div.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = &rem[k] * &lead_inv;
            if !c.is_zero() {
                let shift = k - dd;
                for (i, dc) in div.coeffs.iter().enumerate() {
                    let sub = &c * dc;
                    rem[shift + i] -= sub;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Computed by the primitive polynomial remainder sequence over the
    /// integers: pseudo-remainders with the content cleared at every step.
    /// This keeps coefficient sizes tame where the naive rational Euclid
    /// blows up.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        // nonzero constants divide everything
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return QPoly::one();
        }
        let mut a = self.primitive_integral();
        let mut b = other.primitive_integral();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_integral();
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Scales to integer coefficients with content 1 and a positive leading
    /// coefficient; zero stays zero.
    fn primitive_integral(&self) -> QPoly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut den_lcm = BigInt::from(1);
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::from(0);
        for n in &nums {
            content = content.gcd(n);
        }
        if nums.last().expect("nonzero").sign() == num_bigint::Sign::Minus {
            content = -content;
        }
        for n in &mut nums {
            *n = &*n / &content;
        }
        QPoly {
            coeffs: nums.into_iter().map(Rational::from_integer).collect(),
        }
    }

    /// Pseudo-remainder of integral polynomials: the remainder of
    /// `lc(div)^(deg self - deg div + 1) * self` under `div`, which stays
    /// integral throughout. Requires `deg self >= deg div` and `div != 0`.
    fn pseudo_rem(&self, div: &QPoly) -> QPoly {
        let dd = div.degree().expect("nonzero divisor");
        let lead = div.leading_coeff().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            for (i, v) in rem.iter_mut().enumerate().take(k) {
                *v = &*v * &lead;
                if i >= k - dd {
                    *v -= &c * &div.coeffs[i - (k - dd)];
                }
            }
            rem.pop();
        }
        QPoly::new(rem)
    }

    /// Formal derivative with respect to `t`.
    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    /// The substitution `t -> t + 1`, evaluated by Horner's rule.
    pub fn shift_by_one(&self) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            // acc = acc * (t + 1) + c
            let mut next = vec![Rational::zero(); acc.coeffs.len() + 1];
            for (i, a) in acc.coeffs.iter().enumerate() {
                next[i + 1] += a;
                next[i] += a;
            }
            if !next.is_empty() || !c.is_zero() {
                if next.is_empty() {
                    next.push(c.clone());
                } else {
                    next[0] += c;
                }
            }
            acc = QPoly::new(next);
        }
        acc
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly::new(out)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

/// Renders one monomial `c * t^d` in the literal grammar, without sign.
fn push_term(out: &mut String, c: &Rational, d: usize) {
    let abs = c.abs();
    match d {
        0 => out.push_str(&abs.to_string()),
        _ => {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push('t');
            if d > 1 {
                out.push_str(&format!("^{d}"));
            }
        }
    }
}

impl fmt::Display for QPoly {
    /// Canonical rendering in the scalar literal grammar, highest degree
    /// first, e.g. `t^3-1/2*t+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push(if c.is_negative() { '-' } else { '+' });
            }
            push_term(&mut s, c, d);
        }
        write!(f, "{s}")
    }
}
