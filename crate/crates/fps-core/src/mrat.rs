//! The fraction field of [`MPoly`]: multivariate rational functions.
//!
//! Normal form: numerator and denominator coprime, denominator monic with
//! respect to the graded-lex leading coefficient.

use std::fmt;

use crate::mpoly::{gcd, MPoly};
use crate::rat::Rat;
use crate::surd::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct MRat {
    pub num: MPoly,
    pub den: MPoly,
}

impl MRat {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        MRat { num, den }.reduce()
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            return MRat { num: MPoly::zero(), den: MPoly::one() };
        }
        if !self.den.is_constant() {
            let g = gcd(&self.num, &self.den);
            if !g.is_constant() {
                self.num = self.num.div_exact(&g).expect("gcd divides");
                self.den = self.den.div_exact(&g).expect("gcd divides");
            }
        }
        let lc = self.den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        self
    }

    pub fn from_poly(p: MPoly) -> Self {
        MRat { num: p, den: MPoly::one() }
    }

    pub fn from_scalar(s: Scalar) -> Self {
        MRat::from_poly(MPoly::constant(s))
    }

    pub fn from_rat(r: Rat) -> Self {
        MRat::from_scalar(Scalar::from_rat(r))
    }

    pub fn from_i64(n: i64) -> Self {
        MRat::from_rat(crate::rat::rat_i64(n))
    }

    pub fn var(name: &str) -> Self {
        MRat::from_poly(MPoly::var(name))
    }

    pub fn zero() -> Self {
        MRat::from_poly(MPoly::zero())
    }

    pub fn one() -> Self {
        MRat::from_poly(MPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(&n / &d),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<MPoly> {
        if self.den.is_constant() {
            let c = self.den.as_constant().unwrap();
            Some(self.num.scale(&c.inv()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &MRat) -> MRat {
        MRat::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &MRat) -> MRat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MRat {
        MRat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &MRat) -> MRat {
        MRat::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &MRat) -> MRat {
        assert!(!other.is_zero(), "division by zero rational function");
        MRat::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> MRat {
        assert!(!self.is_zero(), "inverse of zero");
        MRat::new(self.den.clone(), self.num.clone())
    }

    pub fn pow_i64(&self, e: i64) -> MRat {
        if e < 0 {
            return self.inv().pow_i64(-e);
        }
        MRat::new(self.num.pow(e as u32), self.den.pow(e as u32))
    }

    pub fn scale(&self, s: &Scalar) -> MRat {
        MRat::new(self.num.scale(s), self.den.clone())
    }

    pub fn contains_var(&self, var: &str) -> bool {
        self.num.contains_var(var) || self.den.contains_var(var)
    }

    /// Substitute a polynomial value for a variable.
    pub fn substitute(&self, var: &str, value: &MPoly) -> MRat {
        MRat::new(self.num.substitute(var, value), self.den.substitute(var, value))
    }

    /// Substitute a rational-function value for a variable.
    pub fn substitute_rat(&self, var: &str, value: &MRat) -> MRat {
        let dn = self.num.degree_in(var);
        let dd = self.den.degree_in(var);
        let d = dn.max(dd);
        // f(num/den) with common denominator value.den^d
        let evaluate = |p: &MPoly, deg: u32| -> MPoly {
            let cs = p.coeffs_in(var);
            let mut acc = MPoly::zero();
            for (e, c) in cs {
                let t = c
                    .mul(&value.num.pow(e))
                    .mul(&value.den.pow(deg - e));
                acc = acc.add(&t);
            }
            acc
        };
        MRat::new(evaluate(&self.num, d), evaluate(&self.den, d))
    }

    /// Evaluate one variable at an exact scalar.
    pub fn eval_var(&self, var: &str, value: &Scalar) -> MRat {
        let den = self.den.eval_var(var, value);
        assert!(!den.is_zero(), "pole encountered evaluating {var}");
        MRat::new(self.num.eval_var(var, value), den)
    }

    /// Integer points where the denominator vanishes (over the rationals).
    pub fn denominator_integer_roots(&self, var: &str) -> Vec<i64> {
        self.den.integer_roots_in(var)
    }
}

impl fmt::Display for MRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for MRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> MPoly {
        MPoly::var("k")
    }

    #[test]
    fn reduction_and_field_ops() {
        // (k^2-1)/(k+1) reduces to k-1
        let num = k().mul(&k()).sub(&MPoly::one());
        let den = k().add(&MPoly::one());
        let r = MRat::new(num, den);
        assert_eq!(r.den, MPoly::one());
        assert_eq!(r.num, k().sub(&MPoly::one()));

        let a = MRat::new(MPoly::one(), k());
        let b = MRat::new(MPoly::one(), k().add(&MPoly::one()));
        // 1/k - 1/(k+1) = 1/(k(k+1))
        let d = a.sub(&b);
        assert_eq!(d.num, MPoly::one());
        assert_eq!(d.den, k().mul(&k().add(&MPoly::one())));
    }

    #[test]
    fn substitution_shifts() {
        // r(k) = 1/(k+1); r(k+1) = 1/(k+2)
        let r = MRat::new(MPoly::one(), k().add(&MPoly::one()));
        let shifted = r.substitute("k", &k().add(&MPoly::one()));
        assert_eq!(shifted.den, k().add(&MPoly::from_i64(2)));
    }
}
