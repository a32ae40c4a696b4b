//! Exact scalars of the form `a + b*sqrt(d)` over the rationals.
//!
//! A single squarefree extension is enough for everything this crate
//! produces: Gaussian rationals (`d = -1`) for complex partial fractions,
//! `sqrt(5)` for Fibonacci-type closed forms, `sqrt(3)` for trigonometric
//! values at thirds of pi, and so on. Values from *different* extensions
//! never meet in one computation; mixing them is reported as an error at
//! the boundaries that could introduce a new radicand.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::{rat_i64, Rat};

/// `re + im * sqrt(d)` with `d` a squarefree integer, `d = 0` meaning a
/// plain rational (then `im = 0`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    pub re: Rat,
    pub im: Rat,
    pub d: i64,
}

fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    // n = square * free with free squarefree; trial division is fine for
    // the small radicands that actually occur.
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut m = n.abs();
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += 1u32;
        if p.bits() > 24 {
            // Give up factoring huge radicands; treat the rest as free.
            break;
        }
    }
    free *= m;
    if n.is_negative() {
        free = -free;
    }
    (square, free)
}

impl Scalar {
    pub fn from_rat(r: Rat) -> Self {
        Scalar { re: r, im: Rat::zero(), d: 0 }
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar::from_rat(rat_i64(n))
    }

    pub fn zero() -> Self {
        Scalar::from_i64(0)
    }

    pub fn one() -> Self {
        Scalar::from_i64(1)
    }

    /// The imaginary unit (`sqrt(-1)`).
    pub fn i() -> Self {
        Scalar { re: Rat::zero(), im: Rat::one(), d: -1 }
    }

    /// `b * sqrt(d)` after normalizing `d` squarefree.
    pub fn surd(b: Rat, d: i64) -> Self {
        if b.is_zero() || d == 0 {
            return Scalar::zero();
        }
        if d == 1 {
            return Scalar::from_rat(b);
        }
        let (sq, free) = squarefree_split(&BigInt::from(d));
        let free_i = i64::try_from(&free).expect("radicand fits in i64");
        if free_i == 1 {
            return Scalar::from_rat(b * Rat::from_integer(sq));
        }
        Scalar { re: Rat::zero(), im: b * Rat::from_integer(sq), d: free_i }.normalized()
    }

    /// Exact square root of a rational, if it stays inside a single
    /// quadratic extension: `sqrt(p/q) = sqrt(p*q)/q`.
    pub fn sqrt_rat(r: &Rat) -> Self {
        if r.is_zero() {
            return Scalar::zero();
        }
        let pq = r.numer() * r.denom();
        let (sq, free) = squarefree_split(&pq);
        let free_i = i64::try_from(&free).expect("radicand fits in i64");
        let b = Rat::new(sq, r.denom().clone());
        if free_i == 1 {
            Scalar::from_rat(b)
        } else {
            Scalar { re: Rat::zero(), im: b, d: free_i }
        }
    }

    fn normalized(mut self) -> Self {
        if self.im.is_zero() {
            self.d = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        if self.im.is_zero() {
            Some(&self.re)
        } else {
            None
        }
    }

    /// Checks that two scalars can be combined arithmetically.
    pub fn compatible(&self, other: &Scalar) -> bool {
        self.d == 0 || other.d == 0 || self.d == other.d
    }

    fn joint_d(&self, other: &Scalar) -> i64 {
        assert!(
            self.compatible(other),
            "incompatible quadratic extensions: sqrt({}) vs sqrt({})",
            self.d,
            other.d
        );
        if self.d != 0 {
            self.d
        } else {
            other.d
        }
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone(), d: self.d }.normalized()
    }

    /// Field norm `a^2 - d b^2` (a rational).
    pub fn norm(&self) -> Rat {
        &self.re * &self.re - rat_i64(self.d) * &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = self.norm();
        let c = self.conj();
        Scalar { re: c.re / &n, im: c.im / &n, d: c.d }.normalized()
    }

    pub fn pow_i64(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow_i64(-e);
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Deterministic sign used for canonical normalization: the sign of the
    /// rational part, falling back to the radical part.
    pub fn canonical_sign_negative(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let d = self.joint_d(rhs);
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im, d }.normalized()
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let d = self.joint_d(rhs);
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im, d }.normalized()
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let d = self.joint_d(rhs);
        let re = &self.re * &rhs.re + rat_i64(d) * &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Scalar { re, im, d }.normalized()
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone(), d: self.d }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::from_rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let radical = if self.d == -1 {
            "I".to_string()
        } else {
            format!("Sqrt[{}]", self.d)
        };
        let im_part = if self.im.is_one() {
            radical
        } else if (-self.im.clone()).is_one() {
            format!("-{}", radical)
        } else {
            format!("{}*{}", self.im, radical)
        };
        if self.re.is_zero() {
            write!(f, "{}", im_part)
        } else if self.im.is_negative() {
            write!(f, "{}{}", self.re, im_part.replacen('-', " - ", 1))
        } else {
            write!(f, "{} + {}", self.re, im_part)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn sqrt_extracts_square_part() {
        assert_eq!(Scalar::sqrt_rat(&rat(4, 1)), Scalar::from_i64(2));
        assert_eq!(Scalar::sqrt_rat(&rat(9, 4)), Scalar::from_rat(rat(3, 2)));
        let s12 = Scalar::sqrt_rat(&rat(12, 1));
        assert_eq!(s12.d, 3);
        assert_eq!(s12.im, rat(2, 1));
        let half = Scalar::sqrt_rat(&rat(1, 2));
        assert_eq!(half.d, 2);
        assert_eq!(half.im, rat(1, 2));
    }

    #[test]
    fn gaussian_and_real_surd_arithmetic() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_i64(-1));
        let s3 = Scalar::sqrt_rat(&rat(3, 1));
        assert_eq!(&s3 * &s3, Scalar::from_i64(3));
        let x = &Scalar::from_i64(1) + &s3;
        assert_eq!(&x * &x.inv(), Scalar::one());
        // (1 + sqrt3)^2 = 4 + 2 sqrt3
        let sq = &x * &x;
        assert_eq!(sq.re, rat(4, 1));
        assert_eq!(sq.im, rat(2, 1));
    }

    #[test]
    fn golden_ratio_power_identity() {
        // phi = (1+sqrt5)/2 satisfies phi^2 = phi + 1.
        let s5 = Scalar::sqrt_rat(&rat(5, 1));
        let phi = &(&Scalar::one() + &s5) * &Scalar::from_rat(rat(1, 2));
        assert_eq!(phi.pow_i64(2), &phi + &Scalar::one());
        assert_eq!(phi.pow_i64(-1), &phi - &Scalar::one());
    }
}
