//! Canonicalization.
//!
//! The rewrite system is deliberately structural: flatten and sort n-ary
//! sums/products, fold constants, merge like powers, evaluate concrete
//! orthogonal polynomials, and keep special-function index shifts inside a
//! fixed window. There are no trigonometric multiple-angle rules and no
//! radical denesting; transcendental zero-testing is handled elsewhere by
//! the series oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rat::{is_integer, rat, to_i64, Rat};

use super::{Expr, Head};

pub fn normalize(e: &Expr) -> Expr {
    match e {
        Expr::Const(_) | Expr::I | Expr::Pi | Expr::Var(_) | Expr::Param(_) => e.clone(),
        Expr::Add(xs) => norm_add(xs.iter().map(normalize).collect()),
        Expr::Mul(xs) => norm_mul(xs.iter().map(normalize).collect()),
        Expr::Pow(b, ex) => norm_pow(normalize(b), normalize(ex)),
        Expr::App(h, args) => norm_app(*h, args.iter().map(normalize).collect()),
    }
}

fn one() -> Expr {
    Expr::Const(Rat::one())
}

fn zero() -> Expr {
    Expr::Const(Rat::zero())
}

/// Split a canonical term into (rational coefficient, core).
fn split_coeff(e: &Expr) -> (Rat, Expr) {
    match e {
        Expr::Const(c) => (c.clone(), one()),
        Expr::Mul(xs) => {
            if let Some(Expr::Const(c)) = xs.first() {
                let rest: Vec<Expr> = xs[1..].to_vec();
                let core = if rest.len() == 1 {
                    rest.into_iter().next().unwrap()
                } else {
                    Expr::Mul(rest)
                };
                (c.clone(), core)
            } else {
                (Rat::one(), e.clone())
            }
        }
        _ => (Rat::one(), e.clone()),
    }
}

/// Rebuild coeff * core with canonical shape (inputs canonical).
fn with_coeff(coeff: Rat, core: Expr) -> Expr {
    if coeff.is_zero() {
        return zero();
    }
    if core.is_one() {
        return Expr::Const(coeff);
    }
    if coeff.is_one() {
        return core;
    }
    match core {
        Expr::Mul(mut xs) => {
            xs.insert(0, Expr::Const(coeff));
            Expr::Mul(xs)
        }
        other => Expr::Mul(vec![Expr::Const(coeff), other]),
    }
}

pub(super) fn norm_add(terms: Vec<Expr>) -> Expr {
    let mut flat = Vec::new();
    for t in terms {
        match t {
            Expr::Add(xs) => flat.extend(xs),
            other => flat.push(other),
        }
    }
    let mut acc: BTreeMap<Expr, Rat> = BTreeMap::new();
    let mut const_acc = Rat::zero();
    for t in flat {
        let (c, core) = split_coeff(&t);
        if core.is_one() {
            const_acc += c;
        } else {
            let entry = acc.entry(core).or_insert_with(Rat::zero);
            *entry += c;
        }
    }
    let mut out: Vec<Expr> = Vec::new();
    if !const_acc.is_zero() {
        out.push(Expr::Const(const_acc));
    }
    for (core, c) in acc {
        if c.is_zero() {
            continue;
        }
        out.push(with_coeff(c, core));
    }
    out.sort();
    match out.len() {
        0 => zero(),
        1 => out.into_iter().next().unwrap(),
        _ => Expr::Add(out),
    }
}

pub(super) fn norm_mul(factors: Vec<Expr>) -> Expr {
    norm_mul_depth(factors, 0)
}

fn norm_mul_depth(factors: Vec<Expr>, depth: u32) -> Expr {
    assert!(depth < 16, "norm_mul failed to stabilize");
    let mut flat = Vec::new();
    for f in factors {
        match f {
            Expr::Mul(xs) => flat.extend(xs),
            other => flat.push(other),
        }
    }
    let mut const_acc = Rat::one();
    let mut i_count: u64 = 0;
    let mut pows: BTreeMap<Expr, Vec<Expr>> = BTreeMap::new();
    for f in flat {
        match f {
            Expr::Const(c) => {
                if c.is_zero() {
                    return zero();
                }
                const_acc *= c;
            }
            Expr::I => i_count += 1,
            Expr::Pow(b, e) if *b == Expr::I && e.as_integer().is_some() => {
                let n = e.as_integer().unwrap();
                i_count += n.rem_euclid(4) as u64;
            }
            Expr::Pow(b, e) => pows.entry(*b).or_default().push(*e),
            other => pows.entry(other).or_default().push(one()),
        }
    }
    let mut out: Vec<Expr> = Vec::new();
    let mut changed = false;
    for (base, exps) in pows {
        let total = norm_add(exps.clone());
        let folded = norm_pow(base.clone(), total.clone());
        let plain = if total.is_one() {
            base.clone()
        } else {
            Expr::Pow(Box::new(base.clone()), Box::new(total.clone()))
        };
        if exps.len() > 1 || folded != plain {
            changed = true;
        }
        match folded {
            Expr::Const(c) => {
                if c.is_zero() {
                    return zero();
                }
                const_acc *= c;
            }
            Expr::I => i_count += 1,
            Expr::Mul(xs) => {
                changed = true;
                out.extend(xs);
            }
            other => out.push(other),
        }
    }
    match i_count % 4 {
        0 => {}
        1 => out.push(Expr::I),
        2 => const_acc = -const_acc,
        _ => {
            const_acc = -const_acc;
            out.push(Expr::I);
        }
    }
    if changed {
        // A fold produced new factors that may merge further.
        out.push(Expr::Const(const_acc));
        return norm_mul_depth(out, depth + 1);
    }
    out.sort();
    if const_acc.is_zero() {
        return zero();
    }
    if !const_acc.is_one() {
        out.insert(0, Expr::Const(const_acc));
    }
    match out.len() {
        0 => one(),
        1 => out.into_iter().next().unwrap(),
        _ => Expr::Mul(out),
    }
}

/// `c^(p/q)` for rational c: extract the exact part, keep the rest as a
/// root of a positive integer. `None` means the power is already in its
/// simplest (inert) form.
fn rational_pow(c: &Rat, p: &BigInt, q: &BigInt) -> Option<Expr> {
    let qi = q.to_u32()?;
    let pi = p.to_i64()?;
    if c.is_zero() {
        if pi > 0 {
            return Some(zero());
        }
        return None;
    }
    let negative = c.is_negative();
    let abs = c.abs();
    if abs.is_one() {
        // c = -1 (c = 1 handled by the caller): only square roots fold
        if !negative || qi != 2 {
            return None;
        }
    }
    // factor numerator and denominator
    let mut factors: Vec<(BigInt, i64)> = Vec::new();
    for (n, sign) in [(abs.numer().clone(), 1i64), (abs.denom().clone(), -1i64)] {
        let mut m = n;
        let mut d = BigInt::from(2u32);
        while &d * &d <= m {
            let mut e = 0i64;
            while (&m % &d).is_zero() {
                m /= &d;
                e += 1;
            }
            if e > 0 {
                factors.push((d.clone(), e * sign));
            }
            d += 1u32;
            if d.bits() > 20 {
                return None; // too large to factor; keep inert
            }
        }
        if m > BigInt::one() {
            factors.push((m, sign));
        }
    }
    let mut extracted = Rat::one();
    let mut remainder = BigInt::one();
    let qe = qi as i64;
    for (prime, e) in factors {
        let tot = e * pi;
        let outer = tot.div_euclid(qe);
        let inner = tot.rem_euclid(qe) as u32;
        if outer >= 0 {
            extracted *= Rat::from_integer(prime.pow(outer as u32));
        } else {
            extracted /= Rat::from_integer(prime.pow((-outer) as u32));
        }
        remainder *= prime.pow(inner);
    }
    if !negative && extracted.is_one() && pi == 1 && Rat::from_integer(remainder.clone()) == abs {
        return None; // already in simplest form
    }
    let mut parts: Vec<Expr> = vec![Expr::Const(extracted)];
    if !remainder.is_one() {
        parts.push(Expr::Pow(
            Box::new(Expr::Const(Rat::from_integer(remainder))),
            Box::new(Expr::Const(rat(1, qe))),
        ));
    }
    if negative {
        if qi == 2 {
            // (-1)^(p/2) = I^p
            match pi.rem_euclid(4) {
                1 => parts.push(Expr::I),
                3 => {
                    parts.push(Expr::I);
                    parts.push(Expr::Const(-Rat::one()));
                }
                _ => unreachable!("p/q reduced, q = 2 means p odd"),
            }
        } else {
            // keep (-1)^(p/q) inert
            parts.push(Expr::Pow(
                Box::new(Expr::Const(-Rat::one())),
                Box::new(Expr::Const(rat(pi, qe))),
            ));
        }
    }
    Some(norm_mul(parts))
}

pub(super) fn norm_pow(base: Expr, exp: Expr) -> Expr {
    if exp.is_zero() {
        return one();
    }
    if exp.is_one() {
        return base;
    }
    if base.is_one() {
        return one();
    }
    if base.is_zero() {
        if let Some(c) = exp.as_const() {
            if c.is_positive() {
                return zero();
            }
        }
        return Expr::Pow(Box::new(base), Box::new(exp));
    }
    if let (Expr::Const(c), Expr::Const(e)) = (&base, &exp) {
        if is_integer(e) {
            if let Some(n) = to_i64(e) {
                if n >= 0 {
                    return Expr::Const(power_rat(c, n));
                } else if !c.is_zero() {
                    return Expr::Const(power_rat(&c.recip(), -n));
                }
            }
        } else if let Some(folded) = rational_pow(c, e.numer(), e.denom()) {
            return folded;
        }
    }
    if base == Expr::I {
        if let Some(n) = exp.as_integer() {
            return match n.rem_euclid(4) {
                0 => one(),
                1 => Expr::I,
                2 => Expr::Const(-Rat::one()),
                _ => norm_mul(vec![Expr::Const(-Rat::one()), Expr::I]),
            };
        }
    }
    if let Expr::Pow(b2, e2) = &base {
        let inner_exp = e2.as_const();
        let outer_int = exp.as_integer().is_some();
        let inner_pos_const_base = matches!(&**b2, Expr::Const(c) if c.is_positive());
        if outer_int || (inner_exp.is_some() && inner_pos_const_base && exp.as_const().is_some()) {
            let new_exp = norm_mul(vec![(**e2).clone(), exp]);
            return norm_pow((**b2).clone(), new_exp);
        }
    }
    if let Expr::App(Head::Exp, args) = &base {
        let new_arg = norm_mul(vec![args[0].clone(), exp]);
        return norm_app(Head::Exp, vec![new_arg]);
    }
    if let Expr::Mul(xs) = &base {
        if exp.as_integer().is_some() {
            let n = exp.clone();
            return norm_mul(xs.iter().map(|f| norm_pow(f.clone(), n.clone())).collect());
        }
        // fractional or symbolic power: extract a positive rational factor
        if let Some(Expr::Const(c)) = xs.first() {
            if c.is_positive() && !c.is_one() {
                let rest: Vec<Expr> = xs[1..].to_vec();
                let rest_core = if rest.len() == 1 {
                    rest.into_iter().next().unwrap()
                } else {
                    Expr::Mul(rest)
                };
                return norm_mul(vec![
                    norm_pow(Expr::Const(c.clone()), exp.clone()),
                    norm_pow(rest_core, exp),
                ]);
            }
        }
    }
    Expr::Pow(Box::new(base), Box::new(exp))
}

fn power_rat(c: &Rat, n: i64) -> Rat {
    let mut acc = Rat::one();
    let mut b = c.clone();
    let mut n = n as u64;
    while n > 0 {
        if n & 1 == 1 {
            acc *= &b;
        }
        n >>= 1;
        if n > 0 {
            b = &b * &b;
        }
    }
    acc
}

fn extract_negated(arg: &Expr) -> Option<Expr> {
    match arg {
        Expr::Const(c) if c.is_negative() => Some(Expr::Const(-c.clone())),
        Expr::Mul(xs) => match xs.first() {
            Some(Expr::Const(c)) if c.is_negative() => {
                let mut ys = xs.clone();
                ys[0] = Expr::Const(-c.clone());
                Some(norm_mul(ys))
            }
            _ => None,
        },
        _ => None,
    }
}

/// Affine index form `param + integer offset` (or a bare integer).
pub(crate) fn affine_index(idx: &Expr) -> Option<(Option<String>, i64)> {
    match idx {
        Expr::Const(c) => to_i64(c).map(|v| (None, v)),
        Expr::Param(p) => Some((Some(p.clone()), 0)),
        Expr::Add(xs) if xs.len() == 2 => match (&xs[0], &xs[1]) {
            (Expr::Const(c), Expr::Param(p)) => to_i64(c).map(|v| (Some(p.clone()), v)),
            _ => None,
        },
        _ => None,
    }
}

fn index_expr(base: &Option<String>, offset: i64) -> Expr {
    match base {
        None => Expr::int(offset),
        Some(p) => norm_add(vec![Expr::int(offset), Expr::param(p)]),
    }
}

pub(super) fn norm_app(head: Head, args: Vec<Expr>) -> Expr {
    debug_assert!(head.arities().contains(&args.len()), "bad arity for {head}");
    match head {
        Head::Sqrt => return norm_pow(args.into_iter().next().unwrap(), Expr::frac(1, 2)),
        Head::Exp => {
            if args[0].is_zero() {
                return one();
            }
        }
        Head::Log => {
            if args[0].is_one() {
                return zero();
            }
        }
        Head::Sin | Head::Tan | Head::ArcSin | Head::ArcTan | Head::ArcSinh | Head::Erf => {
            if args[0].is_zero() {
                return zero();
            }
            if let Some(pos) = extract_negated(&args[0]) {
                return norm_mul(vec![
                    Expr::Const(-Rat::one()),
                    norm_app(head, vec![pos]),
                ]);
            }
        }
        Head::Cos => {
            if args[0].is_zero() {
                return one();
            }
            if let Some(pos) = extract_negated(&args[0]) {
                return norm_app(Head::Cos, vec![pos]);
            }
        }
        Head::Factorial => {
            if let Some(n) = args[0].as_integer() {
                if (0..=1000).contains(&n) {
                    return Expr::Const(Rat::from_integer(crate::rat::factorial(n as u64)));
                }
            }
        }
        Head::Pochhammer => {
            if let (Some(a), Some(n)) = (args[0].as_const(), args[1].as_integer()) {
                if (0..=1000).contains(&n) {
                    let mut acc = Rat::one();
                    for j in 0..n {
                        acc *= a + crate::rat::rat_i64(j);
                    }
                    return Expr::Const(acc);
                }
            }
        }
        Head::BesselJ | Head::BesselI | Head::BesselY => {
            if let Some(r) = bessel_window(head, &args) {
                return r;
            }
        }
        Head::LaguerreL | Head::ChebyshevT | Head::ChebyshevU | Head::LegendreP
        | Head::HermiteH => {
            if let Some(r) = orthopoly_rewrite(head, &args) {
                return r;
            }
        }
        _ => {}
    }
    Expr::App(head, args)
}

/// Keep Bessel indices inside the window {0,1} (concrete) or
/// {base, base+1} (symbolic base).
fn bessel_window(head: Head, args: &[Expr]) -> Option<Expr> {
    let (pbase, off) = affine_index(&args[0])?;
    let u = args[1].clone();
    let reflected = |v: i64| -> Expr {
        // J_{-n} = (-1)^n J_n ; I_{-n} = I_n ; Y_{-n} = (-1)^n Y_n
        let inner = Expr::App(head, vec![Expr::int(-v), u.clone()]);
        if head == Head::BesselI || v % 2 == 0 {
            inner
        } else {
            norm_mul(vec![Expr::Const(-Rat::one()), inner])
        }
    };
    let lower = if pbase.is_some() { 0 } else { 0 };
    let upper = 1;
    if pbase.is_none() && off < 0 {
        return Some(normalize(&reflected(off)));
    }
    if off >= lower && off <= upper {
        return None; // already canonical
    }
    let at = |o: i64| Expr::App(head, vec![index_expr(&pbase, o), u.clone()]);
    let two_nu_over_u = |o: i64| {
        norm_mul(vec![
            Expr::int(2),
            index_expr(&pbase, o),
            norm_pow(u.clone(), Expr::int(-1)),
        ])
    };
    let out = if off > upper {
        // step down: nu = off-1
        match head {
            Head::BesselJ | Head::BesselY => norm_add(vec![
                norm_mul(vec![two_nu_over_u(off - 1), at(off - 1)]),
                norm_mul(vec![Expr::Const(-Rat::one()), at(off - 2)]),
            ]),
            Head::BesselI => norm_add(vec![
                at(off - 2),
                norm_mul(vec![Expr::Const(-Rat::one()), two_nu_over_u(off - 1), at(off - 1)]),
            ]),
            _ => unreachable!(),
        }
    } else {
        // off < lower, step up: nu = off+1
        match head {
            Head::BesselJ | Head::BesselY => norm_add(vec![
                norm_mul(vec![two_nu_over_u(off + 1), at(off + 1)]),
                norm_mul(vec![Expr::Const(-Rat::one()), at(off + 2)]),
            ]),
            Head::BesselI => norm_add(vec![
                at(off + 2),
                norm_mul(vec![two_nu_over_u(off + 1), at(off + 1)]),
            ]),
            _ => unreachable!(),
        }
    };
    Some(normalize(&out))
}

/// Concrete orthogonal polynomials expand to explicit polynomials;
/// symbolic indices are shifted into the window {base-1, base}.
fn orthopoly_rewrite(head: Head, args: &[Expr]) -> Option<Expr> {
    let idx = &args[0];
    let (alpha, u) = match (head, args.len()) {
        (Head::LaguerreL, 3) => (Some(args[1].clone()), args[2].clone()),
        (Head::LaguerreL, 2) => (None, args[1].clone()),
        _ => (None, args[1].clone()),
    };
    let (pbase, off) = affine_index(idx)?;
    match pbase {
        None => {
            let n = off;
            let expanded = match head {
                Head::ChebyshevT => {
                    let n = n.abs(); // T_{-n} = T_n
                    expand_three_term(n, one(), u.clone(), |_j| {
                        (norm_mul(vec![Expr::int(2), u.clone()]), Expr::int(-1), one())
                    })
                }
                Head::ChebyshevU => {
                    if n == -1 {
                        return Some(zero());
                    }
                    let (n, sign) = if n < -1 { (-n - 2, true) } else { (n, false) };
                    let e = expand_three_term(n, one(), norm_mul(vec![Expr::int(2), u.clone()]), |_j| {
                        (norm_mul(vec![Expr::int(2), u.clone()]), Expr::int(-1), one())
                    })?;
                    if sign {
                        return Some(norm_mul(vec![Expr::int(-1), e]));
                    }
                    return Some(e);
                }
                Head::LegendreP => {
                    let n = if n < 0 { -n - 1 } else { n }; // P_{-n} = P_{n-1}
                    expand_three_term(n, one(), u.clone(), |j| {
                        // (j+1) P_{j+1} = (2j+1) u P_j - j P_{j-1}
                        (
                            norm_mul(vec![Expr::int(2 * j + 1), u.clone()]),
                            Expr::int(-j),
                            Expr::int(j + 1),
                        )
                    })
                }
                Head::HermiteH => {
                    if n < 0 {
                        return None;
                    }
                    expand_three_term(n, one(), norm_mul(vec![Expr::int(2), u.clone()]), |j| {
                        (
                            norm_mul(vec![Expr::int(2), u.clone()]),
                            Expr::int(-2 * j),
                            one(),
                        )
                    })
                }
                Head::LaguerreL => {
                    if n < 0 {
                        return None;
                    }
                    let a = alpha.clone().unwrap_or_else(zero);
                    let l1 = norm_add(vec![one(), a.clone(), norm_mul(vec![Expr::int(-1), u.clone()])]);
                    expand_three_term(n, one(), l1, |j| {
                        // (j+1) L_{j+1} = (2j+1+a-u) L_j - (j+a) L_{j-1}
                        (
                            norm_add(vec![
                                Expr::int(2 * j + 1),
                                a.clone(),
                                norm_mul(vec![Expr::int(-1), u.clone()]),
                            ]),
                            norm_mul(vec![Expr::int(-1), norm_add(vec![Expr::int(j), a.clone()])]),
                            Expr::int(j + 1),
                        )
                    })
                }
                _ => None,
            };
            expanded
        }
        Some(p) => {
            if off == 0 || off == -1 {
                return None; // canonical window
            }
            let rebuild = |o: i64| {
                let mut new_args = args.to_vec();
                new_args[0] = index_expr(&Some(p.clone()), o);
                Expr::App(head, new_args)
            };
            let a = match (head, args.len()) {
                (Head::LaguerreL, 3) => args[1].clone(),
                _ => zero(),
            };
            let expr = if off >= 1 {
                // step down with three-term recurrence at nu = off-1
                let nu = index_expr(&Some(p.clone()), off - 1);
                three_term_down(head, &a, &u, &nu, rebuild(off - 1), rebuild(off - 2))
            } else {
                // off <= -2: step up, solving the recurrence at nu = off+1
                let nu = index_expr(&Some(p.clone()), off + 1);
                three_term_up(head, &a, &u, &nu, rebuild(off + 1), rebuild(off + 2))
            };
            Some(normalize(&expr))
        }
    }
}

/// s_{j+1} = (A(j) s_j + B(j) s_{j-1}) / C(j), starting from s_0, s_1.
fn expand_three_term(
    n: i64,
    s0: Expr,
    s1: Expr,
    rule: impl Fn(i64) -> (Expr, Expr, Expr),
) -> Option<Expr> {
    if n < 0 {
        return None;
    }
    if n == 0 {
        return Some(s0);
    }
    let mut prev = s0;
    let mut cur = s1;
    for j in 1..n {
        let (a, b, c) = rule(j);
        let next = norm_mul(vec![
            norm_add(vec![
                norm_mul(vec![a, cur.clone()]),
                norm_mul(vec![b, prev.clone()]),
            ]),
            norm_pow(c, Expr::int(-1)),
        ]);
        prev = cur;
        cur = next;
    }
    Some(cur)
}

/// Express head_{nu+1} via head_nu and head_{nu-1} (three-term recurrence).
fn three_term_down(head: Head, a: &Expr, u: &Expr, nu: &Expr, at_nu: Expr, at_num1: Expr) -> Expr {
    match head {
        Head::ChebyshevT | Head::ChebyshevU => norm_add(vec![
            norm_mul(vec![Expr::int(2), u.clone(), at_nu]),
            norm_mul(vec![Expr::int(-1), at_num1]),
        ]),
        Head::LegendreP => {
            // (nu+1) P_{nu+1} = (2nu+1) u P_nu - nu P_{nu-1}
            let den = norm_add(vec![nu.clone(), one()]);
            norm_mul(vec![
                norm_add(vec![
                    norm_mul(vec![
                        norm_add(vec![norm_mul(vec![Expr::int(2), nu.clone()]), one()]),
                        u.clone(),
                        at_nu,
                    ]),
                    norm_mul(vec![Expr::int(-1), nu.clone(), at_num1]),
                ]),
                norm_pow(den, Expr::int(-1)),
            ])
        }
        Head::HermiteH => norm_add(vec![
            norm_mul(vec![Expr::int(2), u.clone(), at_nu]),
            norm_mul(vec![Expr::int(-2), nu.clone(), at_num1]),
        ]),
        Head::LaguerreL => {
            // (nu+1) L_{nu+1} = (2nu+1+a-u) L_nu - (nu+a) L_{nu-1}
            let den = norm_add(vec![nu.clone(), one()]);
            norm_mul(vec![
                norm_add(vec![
                    norm_mul(vec![
                        norm_add(vec![
                            norm_mul(vec![Expr::int(2), nu.clone()]),
                            one(),
                            a.clone(),
                            norm_mul(vec![Expr::int(-1), u.clone()]),
                        ]),
                        at_nu,
                    ]),
                    norm_mul(vec![
                        Expr::int(-1),
                        norm_add(vec![nu.clone(), a.clone()]),
                        at_num1,
                    ]),
                ]),
                norm_pow(den, Expr::int(-1)),
            ])
        }
        _ => unreachable!(),
    }
}

/// Express head_{nu-1} via head_nu and head_{nu+1} (the recurrence solved
/// for its lowest index).
fn three_term_up(head: Head, a: &Expr, u: &Expr, nu: &Expr, at_nu: Expr, at_nup1: Expr) -> Expr {
    match head {
        Head::ChebyshevT | Head::ChebyshevU => norm_add(vec![
            norm_mul(vec![Expr::int(2), u.clone(), at_nu]),
            norm_mul(vec![Expr::int(-1), at_nup1]),
        ]),
        Head::LegendreP => {
            // nu P_{nu-1} = (2nu+1) u P_nu - (nu+1) P_{nu+1}
            norm_mul(vec![
                norm_add(vec![
                    norm_mul(vec![
                        norm_add(vec![norm_mul(vec![Expr::int(2), nu.clone()]), one()]),
                        u.clone(),
                        at_nu,
                    ]),
                    norm_mul(vec![
                        Expr::int(-1),
                        norm_add(vec![nu.clone(), one()]),
                        at_nup1,
                    ]),
                ]),
                norm_pow(nu.clone(), Expr::int(-1)),
            ])
        }
        Head::HermiteH => {
            // 2 nu H_{nu-1} = 2 u H_nu - H_{nu+1}
            norm_mul(vec![
                norm_add(vec![
                    norm_mul(vec![Expr::int(2), u.clone(), at_nu]),
                    norm_mul(vec![Expr::int(-1), at_nup1]),
                ]),
                norm_pow(norm_mul(vec![Expr::int(2), nu.clone()]), Expr::int(-1)),
            ])
        }
        Head::LaguerreL => {
            // (nu+a) L_{nu-1} = (2nu+1+a-u) L_nu - (nu+1) L_{nu+1}
            let den = norm_add(vec![nu.clone(), a.clone()]);
            norm_mul(vec![
                norm_add(vec![
                    norm_mul(vec![
                        norm_add(vec![
                            norm_mul(vec![Expr::int(2), nu.clone()]),
                            one(),
                            a.clone(),
                            norm_mul(vec![Expr::int(-1), u.clone()]),
                        ]),
                        at_nu,
                    ]),
                    norm_mul(vec![
                        Expr::int(-1),
                        norm_add(vec![nu.clone(), one()]),
                        at_nup1,
                    ]),
                ]),
                norm_pow(den, Expr::int(-1)),
            ])
        }
        _ => unreachable!(),
    }
}
