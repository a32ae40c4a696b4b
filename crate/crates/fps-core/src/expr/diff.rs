//! Symbolic differentiation.
//!
//! Special functions differentiate into index-shifted members of the same
//! family, so repeated derivatives stay inside a finite set of kernels
//! (after the window normalization in `normalize`).

use crate::error::{Error, Result};

use super::{normalize, Expr, Head};

/// d/d`var`, canonicalized.
pub fn differentiate(e: &Expr, var: &str) -> Result<Expr> {
    let d = diff_inner(e, var)?;
    Ok(normalize(&d))
}

fn diff_inner(e: &Expr, var: &str) -> Result<Expr> {
    Ok(match e {
        Expr::Const(_) | Expr::I | Expr::Pi | Expr::Param(_) => Expr::int(0),
        Expr::Var(v) => {
            if v == var {
                Expr::int(1)
            } else {
                Expr::int(0)
            }
        }
        Expr::Add(xs) => {
            let mut parts = Vec::new();
            for x in xs {
                parts.push(diff_inner(x, var)?);
            }
            Expr::Add(parts)
        }
        Expr::Mul(xs) => {
            let mut terms = Vec::new();
            for (i, x) in xs.iter().enumerate() {
                let dx = diff_inner(x, var)?;
                if dx.is_zero() {
                    continue;
                }
                let mut factors: Vec<Expr> = xs
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, f)| f.clone())
                    .collect();
                factors.push(dx);
                terms.push(Expr::Mul(factors));
            }
            Expr::Add(terms)
        }
        Expr::Pow(b, ex) => {
            let db = diff_inner(b, var)?;
            let de = diff_inner(ex, var)?;
            let mut terms = Vec::new();
            if !db.is_zero() {
                // e * b^(e-1) * b'
                terms.push(Expr::Mul(vec![
                    (**ex).clone(),
                    Expr::Pow(
                        b.clone(),
                        Box::new(Expr::Add(vec![(**ex).clone(), Expr::int(-1)])),
                    ),
                    db,
                ]));
            }
            if !de.is_zero() {
                // log(b) * b^e * e'
                terms.push(Expr::Mul(vec![
                    Expr::App(Head::Log, vec![(**b).clone()]),
                    e.clone(),
                    de,
                ]));
            }
            Expr::Add(terms)
        }
        Expr::App(h, args) => diff_app(*h, args, var)?,
    })
}

fn diff_app(h: Head, args: &[Expr], var: &str) -> Result<Expr> {
    // index arguments must not depend on the differentiation variable
    let inner_pos = args.len() - 1;
    for (i, a) in args.iter().enumerate() {
        if i != inner_pos && a.depends_on_var(var) {
            return Err(Error::UnknownDerivativeRule(format!(
                "{} with variable-dependent index",
                h.name()
            )));
        }
    }
    let u = args[inner_pos].clone();
    let du = diff_inner(&u, var)?;
    if du.is_zero() {
        return Ok(Expr::int(0));
    }
    let inv = |x: Expr| Expr::Pow(Box::new(x), Box::new(Expr::int(-1)));
    let body = match h {
        Head::Exp => Expr::App(Head::Exp, vec![u]),
        Head::Log => inv(u),
        Head::Sin => Expr::App(Head::Cos, vec![u]),
        Head::Cos => Expr::Mul(vec![Expr::int(-1), Expr::App(Head::Sin, vec![u])]),
        Head::Tan => {
            // 1 + tan^2
            Expr::Add(vec![
                Expr::int(1),
                Expr::Pow(Box::new(Expr::App(Head::Tan, vec![u])), Box::new(Expr::int(2))),
            ])
        }
        Head::ArcSin => {
            // (1-u^2)^(-1/2)
            Expr::Pow(
                Box::new(Expr::Add(vec![
                    Expr::int(1),
                    Expr::Mul(vec![
                        Expr::int(-1),
                        Expr::Pow(Box::new(u), Box::new(Expr::int(2))),
                    ]),
                ])),
                Box::new(Expr::frac(-1, 2)),
            )
        }
        Head::ArcTan => inv(Expr::Add(vec![
            Expr::int(1),
            Expr::Pow(Box::new(u), Box::new(Expr::int(2))),
        ])),
        Head::ArcSinh => Expr::Pow(
            Box::new(Expr::Add(vec![
                Expr::int(1),
                Expr::Pow(Box::new(u), Box::new(Expr::int(2))),
            ])),
            Box::new(Expr::frac(-1, 2)),
        ),
        Head::Erf => {
            // 2/sqrt(pi) * exp(-u^2)
            Expr::Mul(vec![
                Expr::int(2),
                Expr::Pow(Box::new(Expr::Pi), Box::new(Expr::frac(-1, 2))),
                Expr::App(
                    Head::Exp,
                    vec![Expr::Mul(vec![
                        Expr::int(-1),
                        Expr::Pow(Box::new(u), Box::new(Expr::int(2))),
                    ])],
                ),
            ])
        }
        Head::AiryAi => Expr::App(Head::AiryAiPrime, vec![u]),
        Head::AiryAiPrime => Expr::Mul(vec![u.clone(), Expr::App(Head::AiryAi, vec![u])]),
        Head::BesselJ | Head::BesselY => {
            // F_nu' = (nu/u) F_nu - F_{nu+1}
            let nu = args[0].clone();
            Expr::Add(vec![
                Expr::Mul(vec![
                    nu.clone(),
                    inv(u.clone()),
                    Expr::App(h, vec![nu.clone(), u.clone()]),
                ]),
                Expr::Mul(vec![
                    Expr::int(-1),
                    Expr::App(h, vec![Expr::Add(vec![nu, Expr::int(1)]), u]),
                ]),
            ])
        }
        Head::BesselI => {
            // I_nu' = (nu/u) I_nu + I_{nu+1}
            let nu = args[0].clone();
            Expr::Add(vec![
                Expr::Mul(vec![
                    nu.clone(),
                    inv(u.clone()),
                    Expr::App(h, vec![nu.clone(), u.clone()]),
                ]),
                Expr::App(h, vec![Expr::Add(vec![nu, Expr::int(1)]), u]),
            ])
        }
        Head::LaguerreL => {
            // u * dL_n^(a)(u) = n L_n^(a)(u) - (n+a) L_{n-1}^(a)(u)
            let n = args[0].clone();
            let a = if args.len() == 3 { args[1].clone() } else { Expr::int(0) };
            let down = {
                let mut v = args.to_vec();
                v[0] = Expr::Add(vec![n.clone(), Expr::int(-1)]);
                Expr::App(h, v)
            };
            Expr::Mul(vec![
                inv(u),
                Expr::Add(vec![
                    Expr::Mul(vec![n.clone(), Expr::App(h, args.to_vec())]),
                    Expr::Mul(vec![
                        Expr::int(-1),
                        Expr::Add(vec![n, a]),
                        down,
                    ]),
                ]),
            ])
        }
        Head::ChebyshevT => {
            // (1-u^2) T_n' = n (T_{n-1} - u T_n)
            let n = args[0].clone();
            orth_deriv_body(h, &n, &u, n.clone(), n.clone())
        }
        Head::ChebyshevU => {
            // (1-u^2) U_n' = (n+1) U_{n-1} - n u U_n
            let n = args[0].clone();
            let np1 = Expr::Add(vec![n.clone(), Expr::int(1)]);
            orth_deriv_body(h, &n, &u, np1, n.clone())
        }
        Head::LegendreP => {
            // (1-u^2) P_n' = n (P_{n-1} - u P_n)
            let n = args[0].clone();
            orth_deriv_body(h, &n, &u, n.clone(), n.clone())
        }
        Head::HermiteH => {
            // H_n' = 2n H_{n-1}
            let n = args[0].clone();
            Expr::Mul(vec![
                Expr::int(2),
                n.clone(),
                Expr::App(h, vec![Expr::Add(vec![n, Expr::int(-1)]), u]),
            ])
        }
        Head::Sqrt => unreachable!("sqrt is normalized away"),
        Head::Factorial | Head::Pochhammer | Head::Product | Head::Sum => {
            return Err(Error::UnknownDerivativeRule(h.name().to_string()))
        }
    };
    Ok(Expr::Mul(vec![body, du]))
}

/// `(c_down * F_{n-1} - c_same * u * F_n) / (1 - u^2)`
fn orth_deriv_body(h: Head, n: &Expr, u: &Expr, c_down: Expr, c_same: Expr) -> Expr {
    let down = Expr::App(h, vec![Expr::Add(vec![n.clone(), Expr::int(-1)]), u.clone()]);
    let here = Expr::App(h, vec![n.clone(), u.clone()]);
    Expr::Mul(vec![
        Expr::Pow(
            Box::new(Expr::Add(vec![
                Expr::int(1),
                Expr::Mul(vec![
                    Expr::int(-1),
                    Expr::Pow(Box::new(u.clone()), Box::new(Expr::int(2))),
                ]),
            ])),
            Box::new(Expr::int(-1)),
        ),
        Expr::Add(vec![
            Expr::Mul(vec![c_down, down]),
            Expr::Mul(vec![Expr::int(-1), c_same, u.clone(), here]),
        ]),
    ])
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn d(src: &str) -> Expr {
        let e = parse(src, &["x"]).unwrap();
        differentiate(&e, "x").unwrap()
    }

    #[test]
    fn arctan_derivative_is_rational() {
        let got = d("ArcTan[x]");
        let want = parse("1/(1 + x^2)", &["x"]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn variable_and_polynomial() {
        assert_eq!(d("x"), Expr::int(1));
        assert_eq!(d("x^3"), parse("3*x^2", &["x"]).unwrap());
    }

    #[test]
    fn product_and_chain() {
        let got = d("Sin[x]*Exp[x]");
        let want = parse("Sin[x]*Exp[x] + Cos[x]*Exp[x]", &["x"]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn symbolic_power() {
        // d/dx x^n = n x^(n-1)
        let got = d("x^n");
        let want = parse("n*x^(n - 1)", &["x"]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn bessel_shift() {
        let got = d("BesselJ[n, x]");
        let want = parse("n*BesselJ[n, x]/x - BesselJ[n + 1, x]", &["x"]).unwrap();
        assert_eq!(got, want);
    }
}
