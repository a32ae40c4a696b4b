//! Text, display, and LaTeX emitters.
//!
//! `emit_text` is the strict form: parsing its output reproduces the
//! canonical expression exactly. `display` is the human-facing form used
//! by the CLI (fraction bars, postfix factorial). `emit_latex` targets
//! typeset output with inert factorials and \prod for finite products.

use num_traits::{One, Signed};

use crate::rat::{is_integer, rat, Rat};

use super::{Expr, Head};

fn const_str(c: &Rat) -> String {
    if is_integer(c) {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn is_sqrt_exponent(e: &Expr) -> bool {
    e.as_const().map(|c| *c == rat(1, 2)).unwrap_or(false)
}

/// Strict single-line form; round-trips through the parser.
pub fn emit_text(e: &Expr) -> String {
    text_prec(e, 0)
}

// precedence levels: 0 add, 1 mul, 2 pow operands, 3 atoms
fn text_prec(e: &Expr, prec: u8) -> String {
    let (s, level) = match e {
        Expr::Const(c) => {
            let lvl = if c.is_negative() || !is_integer(c) { 1 } else { 3 };
            (const_str(c), lvl)
        }
        Expr::I => ("I".to_string(), 3),
        Expr::Pi => ("Pi".to_string(), 3),
        Expr::Var(v) | Expr::Param(v) => (v.clone(), 3),
        Expr::Add(xs) => {
            let mut out = String::new();
            for (i, t) in xs.iter().enumerate() {
                let ts = text_prec(t, 1);
                if i == 0 {
                    out.push_str(&ts);
                } else if let Some(rest) = ts.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                } else {
                    out.push_str(" + ");
                    out.push_str(&ts);
                }
            }
            (out, 0)
        }
        Expr::Mul(xs) => {
            let mut parts = Vec::new();
            for (i, t) in xs.iter().enumerate() {
                // A leading constant needs no parentheses: `-3/2*x` parses
                // back to the same canonical product.
                if i == 0 {
                    if let Expr::Const(c) = t {
                        parts.push(const_str(c));
                        continue;
                    }
                }
                parts.push(text_prec(t, 2));
            }
            (parts.join("*"), 1)
        }
        Expr::Pow(b, ex) => {
            if is_sqrt_exponent(ex) {
                (format!("Sqrt[{}]", text_prec(b, 0)), 3)
            } else {
                let bs = text_prec(b, 3);
                let es = text_prec(ex, 3);
                (format!("{bs}^{es}"), 2)
            }
        }
        Expr::App(h, args) => {
            let inner: Vec<String> = args.iter().map(|a| text_prec(a, 0)).collect();
            (format!("{}[{}]", h.name(), inner.join(", ")), 3)
        }
    };
    if level < prec {
        format!("({s})")
    } else {
        s
    }
}

/// Human-facing rendering: denominators with `/`, postfix factorial.
pub fn display(e: &Expr) -> String {
    match e {
        Expr::Add(xs) => {
            let mut out = String::new();
            for (i, t) in xs.iter().enumerate() {
                let ts = display_mul(t);
                if i == 0 {
                    out.push_str(&ts);
                } else if let Some(rest) = ts.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                } else {
                    out.push_str(" + ");
                    out.push_str(&ts);
                }
            }
            out
        }
        other => display_mul(other),
    }
}

fn display_mul(e: &Expr) -> String {
    let factors: Vec<Expr> = match e {
        Expr::Mul(xs) => xs.clone(),
        other => vec![other.clone()],
    };
    let mut num = Vec::new();
    let mut den = Vec::new();
    for f in &factors {
        match f {
            Expr::Pow(b, ex) => {
                if let Some(c) = ex.as_const() {
                    if c.is_negative() {
                        let inv_exp = -c.clone();
                        if inv_exp.is_one() {
                            den.push((**b).clone());
                        } else {
                            den.push(Expr::Pow(b.clone(), Box::new(Expr::Const(inv_exp))));
                        }
                        continue;
                    }
                }
                num.push(f.clone());
            }
            Expr::Const(c) if !is_integer(c) => {
                num.push(Expr::Const(Rat::from_integer(c.numer().clone())));
                den.push(Expr::Const(Rat::from_integer(c.denom().clone())));
            }
            _ => num.push(f.clone()),
        }
    }
    let fmt_side = |fs: &[Expr], top: bool| -> String {
        let shown: Vec<&Expr> = fs
            .iter()
            .filter(|f| !(top && f.is_one() && fs.len() > 1))
            .collect();
        if shown.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = shown.iter().map(|f| display_atom(f)).collect();
        let joined = parts.join("*");
        joined
    };
    if den.is_empty() {
        let mut parts: Vec<String> = num.iter().map(display_atom).collect();
        if parts.len() > 1 && parts[0] == "1" {
            parts.remove(0);
        }
        if parts.len() > 1 && parts[0] == "-1" {
            parts.remove(0);
            return format!("-{}", parts.join("*"));
        }
        parts.join("*")
    } else {
        let n = if num.is_empty() { "1".to_string() } else { fmt_side(&num, true) };
        let n = if num.len() > 1 && n.starts_with("1*") { n[2..].to_string() } else { n };
        let d = fmt_side(&den, false);
        let d = if den.len() > 1 || matches!(den.first(), Some(Expr::Add(_))) {
            format!("({d})")
        } else {
            d
        };
        format!("{n}/{d}")
    }
}

fn display_atom(e: &Expr) -> String {
    match e {
        Expr::Const(c) => {
            if is_integer(c) {
                const_str(c)
            } else {
                format!("({})", const_str(c))
            }
        }
        Expr::Add(_) => format!("({})", display(e)),
        Expr::Mul(_) => format!("({})", display(e)),
        Expr::Pow(b, ex) => {
            if is_sqrt_exponent(ex) {
                format!("Sqrt[{}]", display(b))
            } else {
                let bs = display_atom(b);
                let es = match &**ex {
                    Expr::Const(c) if is_integer(c) && !c.is_negative() => const_str(c),
                    Expr::Var(v) | Expr::Param(v) => v.clone(),
                    other => format!("({})", display(other)),
                };
                format!("{bs}^{es}")
            }
        }
        Expr::App(Head::Factorial, args) => match &args[0] {
            Expr::Var(v) | Expr::Param(v) => format!("{v}!"),
            a => format!("({})!", display(a)),
        },
        Expr::App(h, args) => {
            let inner: Vec<String> = args.iter().map(display).collect();
            format!("{}[{}]", h.name(), inner.join(", "))
        }
        Expr::Var(v) | Expr::Param(v) => v.clone(),
        Expr::I => "I".to_string(),
        Expr::Pi => "Pi".to_string(),
    }
}

/// LaTeX rendering.
pub fn emit_latex(e: &Expr) -> String {
    latex_add(e)
}

fn latex_add(e: &Expr) -> String {
    match e {
        Expr::Add(xs) => {
            let mut out = String::new();
            for (i, t) in xs.iter().enumerate() {
                let ts = latex_mul(t);
                if i == 0 {
                    out.push_str(&ts);
                } else if let Some(rest) = ts.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                } else {
                    out.push_str(" + ");
                    out.push_str(&ts);
                }
            }
            out
        }
        other => latex_mul(other),
    }
}

fn latex_mul(e: &Expr) -> String {
    let factors: Vec<Expr> = match e {
        Expr::Mul(xs) => xs.clone(),
        other => vec![other.clone()],
    };
    let mut num = Vec::new();
    let mut den = Vec::new();
    for f in &factors {
        match f {
            Expr::Pow(b, ex) => {
                if let Some(c) = ex.as_const() {
                    if c.is_negative() {
                        let inv = -c.clone();
                        if inv.is_one() {
                            den.push((**b).clone());
                        } else {
                            den.push(Expr::Pow(b.clone(), Box::new(Expr::Const(inv))));
                        }
                        continue;
                    }
                }
                num.push(f.clone());
            }
            Expr::Const(c) if !is_integer(c) => {
                num.push(Expr::Const(Rat::from_integer(c.numer().clone())));
                den.push(Expr::Const(Rat::from_integer(c.denom().clone())));
            }
            _ => num.push(f.clone()),
        }
    }
    let join = |fs: &[Expr]| -> String {
        let mut parts: Vec<String> = fs.iter().map(latex_atom).collect();
        if parts.len() > 1 && parts[0] == "1" {
            parts.remove(0);
        }
        let neg = parts.len() > 1 && parts[0] == "-1";
        if neg {
            parts.remove(0);
        }
        let body = parts.join(" \\, ");
        if neg {
            format!("-{body}")
        } else {
            body
        }
    };
    if den.is_empty() {
        join(&num)
    } else {
        let n = if num.is_empty() { "1".to_string() } else { join(&num) };
        format!("\\frac{{{}}}{{{}}}", n, join(&den))
    }
}

fn latex_atom(e: &Expr) -> String {
    match e {
        Expr::Const(c) => {
            if is_integer(c) {
                format!("{}", c.numer())
            } else {
                format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
            }
        }
        Expr::I => "i".to_string(),
        Expr::Pi => "\\pi".to_string(),
        Expr::Var(v) | Expr::Param(v) => latex_symbol(v),
        Expr::Add(_) => format!("\\left({}\\right)", latex_add(e)),
        Expr::Mul(_) => format!("\\left({}\\right)", latex_add(e)),
        Expr::Pow(b, ex) => {
            if is_sqrt_exponent(ex) {
                format!("\\sqrt{{{}}}", latex_add(b))
            } else {
                format!("{{{}}}^{{{}}}", latex_atom(b), latex_add(ex))
            }
        }
        Expr::App(Head::Factorial, args) => match &args[0] {
            Expr::Var(v) | Expr::Param(v) => format!("{}!", latex_symbol(v)),
            a => format!("\\left({}\\right)!", latex_add(a)),
        },
        Expr::App(Head::Product, args) => {
            let idx = latex_add(&args[1]);
            format!(
                "\\prod_{{{}=1}}^{{{}}}\\left({}\\right)",
                idx,
                latex_add(&args[2]),
                latex_add(&args[0])
            )
        }
        Expr::App(Head::Pochhammer, args) => {
            format!("\\left({}\\right)_{{{}}}", latex_add(&args[0]), latex_add(&args[1]))
        }
        Expr::App(h, args) => {
            let name = match h {
                Head::Exp => "\\exp",
                Head::Log => "\\log",
                Head::Sin => "\\sin",
                Head::Cos => "\\cos",
                Head::Tan => "\\tan",
                Head::ArcSin => "\\arcsin",
                Head::ArcTan => "\\arctan",
                Head::ArcSinh => "\\operatorname{arcsinh}",
                Head::Erf => "\\operatorname{erf}",
                Head::BesselJ => "J",
                Head::BesselI => "I",
                Head::BesselY => "Y",
                Head::AiryAi => "\\operatorname{Ai}",
                Head::AiryAiPrime => "\\operatorname{Ai}'",
                Head::LaguerreL => "L",
                Head::ChebyshevT => "T",
                Head::ChebyshevU => "U",
                Head::LegendreP => "P",
                Head::HermiteH => "H",
                _ => return format!("\\operatorname{{{}}}", h.name()),
            };
            match h {
                Head::BesselJ | Head::BesselI | Head::BesselY | Head::ChebyshevT
                | Head::ChebyshevU | Head::LegendreP | Head::HermiteH => format!(
                    "{}_{{{}}}\\left({}\\right)",
                    name,
                    latex_add(&args[0]),
                    latex_add(&args[1])
                ),
                Head::LaguerreL if args.len() == 3 => format!(
                    "L_{{{}}}^{{({})}}\\left({}\\right)",
                    latex_add(&args[0]),
                    latex_add(&args[1]),
                    latex_add(&args[2])
                ),
                Head::LaguerreL => format!(
                    "L_{{{}}}\\left({}\\right)",
                    latex_add(&args[0]),
                    latex_add(&args[1])
                ),
                _ => format!(
                    "{}\\left({}\\right)",
                    name,
                    args.iter().map(latex_add).collect::<Vec<_>>().join(", ")
                ),
            }
        }
    }
}

fn latex_symbol(v: &str) -> String {
    match v {
        "alpha" => "\\alpha".to_string(),
        "beta" => "\\beta".to_string(),
        "gamma" => "\\gamma".to_string(),
        "lambda" => "\\lambda".to_string(),
        "mu" => "\\mu".to_string(),
        "theta" => "\\theta".to_string(),
        _ => v.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn roundtrip(src: &str, vars: &[&str]) {
        let e = parse(src, vars).unwrap();
        let emitted = emit_text(&e);
        let back = parse(&emitted, vars).unwrap();
        assert_eq!(e, back, "roundtrip failed for {src} -> {emitted}");
    }

    #[test]
    fn text_roundtrips() {
        for src in [
            "x^2 + 3*x - 1/2",
            "Sin[x]*Exp[x]",
            "ArcTan[x]^3",
            "Sqrt[1 - x^2]",
            "BesselJ[n, x]*Sin[m*x]",
            "(1 + x)^n*(1 - x)^(-1)",
            "Exp[-x]*LaguerreL[n, alpha, 2*x]",
            "x^(-3)",
            "Factorial[1 + 2*k]",
            "Pochhammer[1/2, k]",
            "-x + Pi*I",
        ] {
            roundtrip(src, &["x"]);
        }
    }

    #[test]
    fn display_fraction_bar() {
        let e = parse("x^(-1)*Sin[x]", &["x"]).unwrap();
        assert_eq!(display(&e), "Sin[x]/x");
        let e = parse("Factorial[k]^(-1)", &["x"]).unwrap();
        assert_eq!(display(&e), "1/k!");
    }
}
