//! Arbitrary-precision rational numbers and small helpers.
//!
//! `num_rational::BigRational` already maintains the invariants we need
//! (reduced fraction, positive denominator), so it is used directly.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn to_i64(r: &Rat) -> Option<i64> {
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Floor of a rational as a BigInt.
pub fn floor_int(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// `n!` for small non-negative `n`.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// All divisors of `|n|`, ascending. Used for rational root candidates.
pub fn divisors(n: &Int) -> Vec<Int> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = Int::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1u32;
        if d.bits() > 22 {
            break; // cap the search; callers treat missing roots as "none found"
        }
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_list() {
        let ds = divisors(&Int::from(12));
        let vals: Vec<i64> = ds.iter().map(|d| d.to_i64().unwrap()).collect();
        assert_eq!(vals, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(5), Int::from(120));
        assert_eq!(factorial(0), Int::from(1));
    }
}
