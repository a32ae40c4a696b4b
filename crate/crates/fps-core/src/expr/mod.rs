//! Immutable expression trees over exact rationals.
//!
//! Canonical form (produced by [`normalize`]): n-ary `Add`/`Mul` flattened
//! and sorted, constants folded, like powers merged, function-specific
//! index windows applied. Equality of canonical forms is the structural
//! equality used throughout the crate.

mod diff;
mod emit;
mod json;
mod normalize;
mod parse;

pub use diff::differentiate;
pub use emit::{display, emit_latex, emit_text};
pub use json::{expr_from_json, expr_to_json};
pub use normalize::normalize;
pub use parse::parse;

use std::fmt;

use crate::rat::{rat, rat_i64, Rat};

/// Supported function heads.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Head {
    Exp,
    Log,
    Sin,
    Cos,
    Tan,
    ArcSin,
    ArcTan,
    ArcSinh,
    Sqrt,
    Factorial,
    Pochhammer,
    Product,
    Sum,
    BesselJ,
    BesselI,
    BesselY,
    AiryAi,
    /// Derivative of the Airy function; internal kernel, not parseable.
    AiryAiPrime,
    LaguerreL,
    ChebyshevT,
    ChebyshevU,
    LegendreP,
    HermiteH,
    Erf,
}

impl Head {
    /// Grammar spelling (Mathematica-style), used by the parser/emitters.
    pub fn name(&self) -> &'static str {
        match self {
            Head::Exp => "Exp",
            Head::Log => "Log",
            Head::Sin => "Sin",
            Head::Cos => "Cos",
            Head::Tan => "Tan",
            Head::ArcSin => "ArcSin",
            Head::ArcTan => "ArcTan",
            Head::ArcSinh => "ArcSinh",
            Head::Sqrt => "Sqrt",
            Head::Factorial => "Factorial",
            Head::Pochhammer => "Pochhammer",
            Head::Product => "Product",
            Head::Sum => "Sum",
            Head::BesselJ => "BesselJ",
            Head::BesselI => "BesselI",
            Head::BesselY => "BesselY",
            Head::AiryAi => "AiryAi",
            Head::AiryAiPrime => "AiryAiPrime",
            Head::LaguerreL => "LaguerreL",
            Head::ChebyshevT => "ChebyshevT",
            Head::ChebyshevU => "ChebyshevU",
            Head::LegendreP => "LegendreP",
            Head::HermiteH => "HermiteH",
            Head::Erf => "Erf",
        }
    }

    /// Identifier used in the JSON AST schema.
    pub fn json_name(&self) -> &'static str {
        match self {
            Head::Exp => "exp",
            Head::Log => "log",
            Head::Sin => "sin",
            Head::Cos => "cos",
            Head::Tan => "tan",
            Head::ArcSin => "arcsin",
            Head::ArcTan => "arctan",
            Head::ArcSinh => "arcsinh",
            Head::Sqrt => "sqrt",
            Head::Factorial => "factorial",
            Head::Pochhammer => "pochhammer",
            Head::Product => "product",
            Head::Sum => "sum",
            Head::BesselJ => "bessel_j",
            Head::BesselI => "bessel_i",
            Head::BesselY => "bessel_y",
            Head::AiryAi => "airy_ai",
            Head::AiryAiPrime => "airy_ai_prime",
            Head::LaguerreL => "laguerre",
            Head::ChebyshevT => "chebyshev_t",
            Head::ChebyshevU => "chebyshev_u",
            Head::LegendreP => "legendre_p",
            Head::HermiteH => "hermite_h",
            Head::Erf => "erf",
        }
    }

    pub fn from_name(s: &str) -> Option<Head> {
        Some(match s {
            "Exp" => Head::Exp,
            "Log" => Head::Log,
            "Sin" => Head::Sin,
            "Cos" => Head::Cos,
            "Tan" => Head::Tan,
            "ArcSin" => Head::ArcSin,
            "ArcTan" => Head::ArcTan,
            "ArcSinh" => Head::ArcSinh,
            "Sqrt" => Head::Sqrt,
            "Factorial" => Head::Factorial,
            "Pochhammer" => Head::Pochhammer,
            "Product" => Head::Product,
            "Sum" => Head::Sum,
            "BesselJ" => Head::BesselJ,
            "BesselI" => Head::BesselI,
            "BesselY" => Head::BesselY,
            "AiryAi" => Head::AiryAi,
            "LaguerreL" => Head::LaguerreL,
            "ChebyshevT" => Head::ChebyshevT,
            "ChebyshevU" => Head::ChebyshevU,
            "LegendreP" => Head::LegendreP,
            "HermiteH" => Head::HermiteH,
            "Erf" => Head::Erf,
            _ => return None,
        })
    }

    pub fn from_json_name(s: &str) -> Option<Head> {
        Some(match s {
            "exp" => Head::Exp,
            "log" => Head::Log,
            "sin" => Head::Sin,
            "cos" => Head::Cos,
            "tan" => Head::Tan,
            "arcsin" => Head::ArcSin,
            "arctan" => Head::ArcTan,
            "arcsinh" => Head::ArcSinh,
            "sqrt" => Head::Sqrt,
            "factorial" => Head::Factorial,
            "pochhammer" => Head::Pochhammer,
            "product" => Head::Product,
            "sum" => Head::Sum,
            "bessel_j" => Head::BesselJ,
            "bessel_i" => Head::BesselI,
            "bessel_y" => Head::BesselY,
            "airy_ai" => Head::AiryAi,
            "airy_ai_prime" => Head::AiryAiPrime,
            "laguerre" => Head::LaguerreL,
            "chebyshev_t" => Head::ChebyshevT,
            "chebyshev_u" => Head::ChebyshevU,
            "legendre_p" => Head::LegendreP,
            "hermite_h" => Head::HermiteH,
            "erf" => Head::Erf,
            _ => return None,
        })
    }

    /// Accepted argument counts.
    pub fn arities(&self) -> &'static [usize] {
        match self {
            Head::Exp | Head::Log | Head::Sin | Head::Cos | Head::Tan | Head::ArcSin
            | Head::ArcTan | Head::ArcSinh | Head::Sqrt | Head::Factorial | Head::AiryAi
            | Head::AiryAiPrime | Head::Erf => &[1],
            Head::Pochhammer | Head::BesselJ | Head::BesselI | Head::BesselY
            | Head::ChebyshevT | Head::ChebyshevU | Head::LegendreP | Head::HermiteH => &[2],
            Head::LaguerreL => &[2, 3],
            Head::Product | Head::Sum => &[3],
        }
    }
}

impl fmt::Display for Head {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An expression tree node. `Add`/`Mul` are n-ary and kept flattened and
/// sorted in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Expr {
    Const(Rat),
    I,
    Pi,
    Var(String),
    Param(String),
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    App(Head, Vec<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Const(rat_i64(n))
    }

    pub fn frac(n: i64, d: i64) -> Expr {
        Expr::Const(rat(n, d))
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn param(name: &str) -> Expr {
        Expr::Param(name.to_string())
    }

    pub fn add(terms: Vec<Expr>) -> Expr {
        normalize(&Expr::Add(terms))
    }

    pub fn mul(factors: Vec<Expr>) -> Expr {
        normalize(&Expr::Mul(factors))
    }

    pub fn pow(base: Expr, exp: Expr) -> Expr {
        normalize(&Expr::Pow(Box::new(base), Box::new(exp)))
    }

    pub fn app(head: Head, args: Vec<Expr>) -> Expr {
        normalize(&Expr::App(head, args))
    }

    pub fn neg(self) -> Expr {
        Expr::mul(vec![Expr::int(-1), self])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Expr::Const(c) if num_traits::Zero::is_zero(c))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Expr::Const(c) if num_traits::One::is_one(c))
    }

    pub fn as_const(&self) -> Option<&Rat> {
        match self {
            Expr::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_const().and_then(crate::rat::to_i64)
    }

    /// Does any node mention this variable?
    pub fn depends_on_var(&self, name: &str) -> bool {
        match self {
            Expr::Var(v) => v == name,
            Expr::Const(_) | Expr::I | Expr::Pi | Expr::Param(_) => false,
            Expr::Add(xs) | Expr::Mul(xs) | Expr::App(_, xs) => {
                xs.iter().any(|x| x.depends_on_var(name))
            }
            Expr::Pow(b, e) => b.depends_on_var(name) || e.depends_on_var(name),
        }
    }

    pub fn depends_on_param(&self, name: &str) -> bool {
        match self {
            Expr::Param(v) => v == name,
            Expr::Const(_) | Expr::I | Expr::Pi | Expr::Var(_) => false,
            Expr::Add(xs) | Expr::Mul(xs) | Expr::App(_, xs) => {
                xs.iter().any(|x| x.depends_on_param(name))
            }
            Expr::Pow(b, e) => b.depends_on_param(name) || e.depends_on_param(name),
        }
    }

    /// Collect the names of all parameters appearing in the tree.
    pub fn params(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Param(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Expr::Add(xs) | Expr::Mul(xs) | Expr::App(_, xs) => {
                    for x in xs {
                        walk(x, out);
                    }
                }
                Expr::Pow(b, e2) => {
                    walk(b, out);
                    walk(e2, out);
                }
                _ => {}
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out
    }

    /// Substitute an expression for a variable, renormalizing.
    pub fn subst_var(&self, name: &str, value: &Expr) -> Expr {
        fn walk(e: &Expr, name: &str, value: &Expr) -> Expr {
            match e {
                Expr::Var(v) if v == name => value.clone(),
                Expr::Add(xs) => Expr::Add(xs.iter().map(|x| walk(x, name, value)).collect()),
                Expr::Mul(xs) => Expr::Mul(xs.iter().map(|x| walk(x, name, value)).collect()),
                Expr::App(h, xs) => {
                    Expr::App(*h, xs.iter().map(|x| walk(x, name, value)).collect())
                }
                Expr::Pow(b, ex) => Expr::Pow(
                    Box::new(walk(b, name, value)),
                    Box::new(walk(ex, name, value)),
                ),
                other => other.clone(),
            }
        }
        normalize(&walk(self, name, value))
    }

    /// Substitute an expression for a parameter, renormalizing.
    pub fn subst_param(&self, name: &str, value: &Expr) -> Expr {
        fn walk(e: &Expr, name: &str, value: &Expr) -> Expr {
            match e {
                Expr::Param(v) if v == name => value.clone(),
                Expr::Add(xs) => Expr::Add(xs.iter().map(|x| walk(x, name, value)).collect()),
                Expr::Mul(xs) => Expr::Mul(xs.iter().map(|x| walk(x, name, value)).collect()),
                Expr::App(h, xs) => {
                    Expr::App(*h, xs.iter().map(|x| walk(x, name, value)).collect())
                }
                Expr::Pow(b, ex) => Expr::Pow(
                    Box::new(walk(b, name, value)),
                    Box::new(walk(ex, name, value)),
                ),
                other => other.clone(),
            }
        }
        normalize(&walk(self, name, value))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_text(self))
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_text(self))
    }
}

impl std::ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::add(vec![self, rhs])
    }
}

impl std::ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::add(vec![self, rhs.neg()])
    }
}

impl std::ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::mul(vec![self, rhs])
    }
}

impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::neg(self)
    }
}
