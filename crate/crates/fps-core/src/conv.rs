//! Conversions between expression trees and the polynomial domain.
//!
//! Variables, parameters, and Pi all become polynomial symbols; `I` and
//! surd constants become quadratic-extension scalars. The reverse mapping
//! needs the list of main-variable names to reconstruct `Var` vs `Param`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::mpoly::MPoly;
use crate::mrat::MRat;
use crate::rat::{is_integer, rat, to_i64, Rat};
use crate::surd::Scalar;

/// Name used for Pi in the polynomial domain. The parser reserves `Pi`,
/// so this cannot collide with a user symbol.
pub const PI_SYMBOL: &str = "Pi";

/// Lower an expression into the rational-function domain. Fails on
/// transcendental function applications and non-quadratic radicals.
pub fn expr_to_mrat(e: &Expr) -> Result<MRat> {
    Ok(match e {
        Expr::Const(c) => MRat::from_rat(c.clone()),
        Expr::I => MRat::from_scalar(Scalar::i()),
        Expr::Pi => MRat::var(PI_SYMBOL),
        Expr::Var(v) | Expr::Param(v) => MRat::var(v),
        Expr::Add(xs) => {
            let mut acc = MRat::zero();
            for x in xs {
                acc = acc.add(&expr_to_mrat(x)?);
            }
            acc
        }
        Expr::Mul(xs) => {
            let mut acc = MRat::one();
            for x in xs {
                acc = acc.mul(&expr_to_mrat(x)?);
            }
            acc
        }
        Expr::Pow(b, ex) => {
            if let Some(n) = ex.as_integer() {
                expr_to_mrat(b)?.pow_i64(n)
            } else if let (Expr::Const(c), Some(q)) = (&**b, half_integer(ex)) {
                // c^(p/2): rational times sqrt(c)^(p mod 2)
                let (ip, odd) = q;
                let mut s = Scalar::from_rat(power_rat(c, ip));
                if odd {
                    s = &s * &Scalar::sqrt_rat(c);
                }
                MRat::from_scalar(s)
            } else {
                return Err(Error::Unsupported(format!(
                    "cannot lower {} to the rational domain",
                    e
                )));
            }
        }
        Expr::App(_, _) => {
            return Err(Error::Unsupported(format!(
                "cannot lower {} to the rational domain",
                e
            )))
        }
    })
}

/// exponent = ip + odd/2 for integer ip
fn half_integer(e: &Expr) -> Option<(i64, bool)> {
    let c = e.as_const()?;
    if is_integer(c) {
        return to_i64(c).map(|n| (n, false));
    }
    let doubled = c * rat(2, 1);
    if is_integer(&doubled) {
        let n = to_i64(&doubled)?;
        Some((n.div_euclid(2), true))
    } else {
        None
    }
}

fn power_rat(c: &Rat, n: i64) -> Rat {
    let mut acc = Rat::one();
    let mut b = if n < 0 { c.recip() } else { c.clone() };
    let mut m = n.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc *= &b;
        }
        m >>= 1;
        if m > 0 {
            b = &b * &b;
        }
    }
    acc
}

pub fn expr_to_mpoly(e: &Expr, _main_vars: &[&str]) -> Result<MPoly> {
    let r = expr_to_mrat(e)?;
    r.as_poly()
        .ok_or_else(|| Error::Unsupported(format!("{e} is not polynomial")))
}

pub fn scalar_to_expr(s: &Scalar) -> Expr {
    let mut terms = Vec::new();
    if !s.re.is_zero() {
        terms.push(Expr::Const(s.re.clone()));
    }
    if !s.im.is_zero() {
        let radical = if s.d == -1 {
            Expr::I
        } else if s.d < 0 {
            Expr::mul(vec![
                Expr::I,
                Expr::pow(Expr::int(-s.d), Expr::frac(1, 2)),
            ])
        } else {
            Expr::pow(Expr::int(s.d), Expr::frac(1, 2))
        };
        terms.push(Expr::mul(vec![Expr::Const(s.im.clone()), radical]));
    }
    Expr::add(terms)
}

pub fn mpoly_to_expr(p: &MPoly, main_vars: &[&str]) -> Expr {
    let mut terms = Vec::new();
    for (m, c) in &p.terms {
        let mut factors = vec![scalar_to_expr(c)];
        for (v, e) in &m.0 {
            let sym = if v == PI_SYMBOL {
                Expr::Pi
            } else if main_vars.contains(&v.as_str()) {
                Expr::var(v)
            } else {
                Expr::param(v)
            };
            factors.push(Expr::pow(sym, Expr::int(*e as i64)));
        }
        terms.push(Expr::mul(factors));
    }
    Expr::add(terms)
}

pub fn mrat_to_expr(r: &MRat, main_vars: &[&str]) -> Expr {
    let num = mpoly_to_expr(&r.num, main_vars);
    if r.den.is_constant() {
        let c = r.den.as_constant().unwrap();
        if c.is_one() {
            return num;
        }
        return Expr::mul(vec![num, scalar_to_expr(&c.inv())]);
    }
    let den = mpoly_to_expr(&r.den, main_vars);
    Expr::mul(vec![num, Expr::pow(den, Expr::int(-1))])
}

/// Evaluate a constant expression to an exact scalar, if possible.
/// Handles rationals, `I`, quadratic radicals, and arithmetic on them.
pub fn expr_to_scalar(e: &Expr) -> Result<Scalar> {
    let r = expr_to_mrat(e)?;
    r.as_scalar()
        .ok_or_else(|| Error::NonExactConstant(format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn lower_and_raise() {
        // raising expands products over sums
        let e = parse("(1 - x^2)*alpha + 3/2", &["x"]).unwrap();
        let p = expr_to_mpoly(&e, &["x"]).unwrap();
        let back = mpoly_to_expr(&p, &["x"]);
        let expanded = parse("alpha - alpha*x^2 + 3/2", &["x"]).unwrap();
        assert_eq!(back, expanded);
    }

    #[test]
    fn surd_constants() {
        let e = parse("Sqrt[3]*x/2", &["x"]).unwrap();
        let r = expr_to_mrat(&e).unwrap();
        let back = mrat_to_expr(&r, &["x"]);
        assert_eq!(e, back);
    }

    #[test]
    fn gaussian() {
        let e = parse("I*x + 1", &["x"]).unwrap();
        let r = expr_to_mrat(&e).unwrap();
        assert!(r.as_poly().is_some());
    }
}
