//! Multivariate polynomials over quadratic-extension scalars.
//!
//! These carry every polynomial object in the pipeline: differential
//! equation coefficients in the main variable plus symbolic parameters,
//! recurrence coefficients in the index variable, and the parameter-field
//! numerators/denominators inside [`crate::mrat::MRat`]. Pi is tracked as
//! an ordinary (transcendental) symbol.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rat::{divisors, to_i64, Int, Rat};
use crate::surd::Scalar;

/// A monomial: sorted `(variable, exponent)` pairs, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub Vec<(String, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(name: &str, exp: u32) -> Self {
        if exp == 0 {
            Mono::one()
        } else {
            Mono(vec![(name.to_string(), exp)])
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|(_, e)| *e as u64).sum()
    }

    pub fn degree_of(&self, var: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| v == var)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut map: BTreeMap<&str, u32> = BTreeMap::new();
        for (v, e) in self.0.iter().chain(other.0.iter()) {
            *map.entry(v.as_str()).or_insert(0) += *e;
        }
        Mono(map.into_iter().map(|(v, e)| (v.to_string(), e)).collect())
    }

    /// Divide, returning None when not divisible.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::new();
        let mut it = self.0.iter().peekable();
        for (v, e) in &other.0 {
            loop {
                let (sv, se) = it.next()?;
                if sv == v {
                    if se < e {
                        return None;
                    }
                    if se > e {
                        out.push((sv.clone(), se - e));
                    }
                    break;
                } else if sv < v {
                    out.push((sv.clone(), *se));
                } else {
                    return None;
                }
            }
        }
        for (sv, se) in it {
            out.push((sv.clone(), *se));
        }
        Some(Mono(out))
    }

    fn without(&self, var: &str) -> Mono {
        Mono(self.0.iter().filter(|(v, _)| v != var).cloned().collect())
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded order: total degree first, then lexicographic on the pair list.
/// Any total order works for canonicalization; this one keeps "leading
/// term" meaning the highest-degree one, which drives sign normalization.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    /// monomial -> nonzero coefficient
    pub terms: BTreeMap<Mono, Scalar>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        MPoly { terms }
    }

    pub fn one() -> Self {
        MPoly::constant(Scalar::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        MPoly::constant(Scalar::from_rat(r))
    }

    pub fn from_i64(n: i64) -> Self {
        MPoly::constant(Scalar::from_i64(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(name, 1), Scalar::one());
        MPoly { terms }
    }

    pub fn var_pow(name: &str, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(name, exp), Scalar::one());
        MPoly { terms }
    }

    pub fn monomial(m: Mono, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().0.is_empty())
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn vars(&self) -> Vec<String> {
        let mut vs: Vec<String> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in &m.0 {
                if !vs.contains(v) {
                    vs.push(v.clone());
                }
            }
        }
        vs.sort();
        vs
    }

    pub fn contains_var(&self, var: &str) -> bool {
        self.terms.keys().any(|m| m.degree_of(var) > 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        self.terms.keys().map(|m| m.degree_of(var)).max().unwrap_or(0)
    }

    fn insert_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading (graded-lex greatest) monomial and coefficient.
    pub fn leading(&self) -> Option<(&Mono, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
    }

    /// Exact multivariate division; None when `self` is not a multiple.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.inv()));
        }
        let (dm, dc) = divisor.leading().unwrap();
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        while !rem.is_zero() {
            let (lm, lc) = rem.leading().unwrap();
            let qm = lm.div(&dm)?;
            let qc = lc / &dc;
            let t = MPoly::monomial(qm, qc);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(divisor));
        }
        Some(quo)
    }

    pub fn derivative(&self, var: &str) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.degree_of(var);
            if e == 0 {
                continue;
            }
            let mut nm = m.without(var);
            if e > 1 {
                nm = nm.mul(&Mono::var(var, e - 1));
            }
            out.insert_term(nm, c * &Scalar::from_i64(e as i64));
        }
        out
    }

    /// Coefficients with respect to one variable: exponent -> polynomial
    /// in the remaining variables.
    pub fn coeffs_in(&self, var: &str) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.degree_of(var);
            out.entry(e)
                .or_insert_with(MPoly::zero)
                .insert_term(m.without(var), c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn from_univariate(var: &str, coeffs: &BTreeMap<u32, MPoly>) -> MPoly {
        let mut out = MPoly::zero();
        for (e, p) in coeffs {
            out = out.add(&p.mul(&MPoly::var_pow(var, *e)));
        }
        out
    }

    /// Substitute a polynomial for a variable.
    pub fn substitute(&self, var: &str, value: &MPoly) -> MPoly {
        let cs = self.coeffs_in(var);
        let mut out = MPoly::zero();
        for (e, p) in cs {
            out = out.add(&p.mul(&value.pow(e)));
        }
        out
    }

    /// Evaluate fully; every variable must be assigned.
    pub fn eval(&self, env: &BTreeMap<String, Scalar>) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                let val = env
                    .get(v)
                    .unwrap_or_else(|| panic!("unbound variable {v} in evaluation"));
                t = &t * &val.pow_i64(*e as i64);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Evaluate one variable at a scalar, keeping the rest symbolic.
    pub fn eval_var(&self, var: &str, value: &Scalar) -> MPoly {
        let cs = self.coeffs_in(var);
        let mut out = MPoly::zero();
        for (e, p) in cs {
            out = out.add(&p.scale(&value.pow_i64(e as i64)));
        }
        out
    }

    /// Canonical form up to a unit: divide by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Integer roots with respect to `var`. Coefficients in `var` that are
    /// not rational constants make root detection impossible; such
    /// polynomials report no roots.
    pub fn integer_roots_in(&self, var: &str) -> Vec<i64> {
        let mut roots = Vec::new();
        let cs = self.coeffs_in(var);
        if cs.is_empty() {
            return roots;
        }
        let mut consts: BTreeMap<u32, Rat> = BTreeMap::new();
        for (e, p) in &cs {
            match p.as_constant().and_then(|s| s.as_rat().cloned()) {
                Some(r) => {
                    consts.insert(*e, r);
                }
                None => return roots,
            }
        }
        let min_exp = *consts.keys().next().unwrap();
        if min_exp > 0 {
            roots.push(0);
        }
        let max_exp = *consts.keys().next_back().unwrap();
        if max_exp == min_exp {
            roots.sort();
            return roots;
        }
        // Clear denominators: integer roots divide the trailing integer
        // coefficient of the deflated polynomial.
        let mut den = Int::from(1);
        for c in consts.values() {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let trail = consts[&min_exp].clone() * Rat::from_integer(den.clone());
        let trail_int = trail.to_integer();
        let eval_at = |r: &Int| -> bool {
            let mut acc = Rat::from_integer(Int::from(0));
            for (e, c) in &consts {
                let mut t = c.clone();
                for _ in min_exp..*e {
                    t *= Rat::from_integer(r.clone());
                }
                acc += t;
            }
            acc.is_zero()
        };
        for d in divisors(&trail_int) {
            for cand in [d.clone(), -d.clone()] {
                if eval_at(&cand) {
                    if let Some(v) = to_i64(&Rat::from_integer(cand.clone())) {
                        if !roots.contains(&v) {
                            roots.push(v);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

// ---- gcd machinery ----

/// Pseudo-division of `a` by `b` viewed as univariate in `var` with MPoly
/// coefficients: returns the pseudo-remainder of lc(b)^(da-db+1) * a by b.
fn pseudo_rem(a: &MPoly, b: &MPoly, var: &str) -> MPoly {
    let db = b.degree_in(var);
    let bc = b.coeffs_in(var);
    let blead = bc.get(&db).cloned().unwrap_or_else(MPoly::zero);
    let mut r = a.clone();
    loop {
        let dr = r.degree_in(var);
        if r.is_zero() || dr < db {
            return r;
        }
        let rc = r.coeffs_in(var);
        let rlead = rc.get(&dr).cloned().unwrap_or_else(MPoly::zero);
        // r = r*blead - rlead * x^(dr-db) * b
        r = r
            .mul(&blead)
            .sub(&rlead.mul(&MPoly::var_pow(var, dr - db)).mul(b));
    }
}

/// Content of `a` as a univariate polynomial in `var` (gcd of coefficients).
fn content_in(a: &MPoly, var: &str) -> MPoly {
    let cs = a.coeffs_in(var);
    let mut g = MPoly::zero();
    for p in cs.values() {
        g = gcd(&g, p);
        if g.is_constant() && !g.is_zero() {
            return MPoly::one();
        }
    }
    g
}

/// Multivariate gcd (primitive PRS), normalized monic in the leading
/// coefficient. Over a field of scalars the result is defined up to a
/// unit; monic normalization makes it canonical.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    // Choose the variable of lowest name present in either operand.
    let mut vars = a.vars();
    for v in b.vars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    let var = vars[0].clone();

    if !a.contains_var(&var) || !b.contains_var(&var) {
        // var only in one operand: gcd divides the other's content
        let (with, without) = if a.contains_var(&var) { (a, b) } else { (b, a) };
        let c = content_in(with, &var);
        return gcd(&c, without);
    }

    let ca = content_in(a, &var);
    let cb = content_in(b, &var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let cg = gcd(&ca, &cb);

    let (mut f, mut g) = if pa.degree_in(&var) >= pb.degree_in(&var) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g, &var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(&var) == 0 {
            return cg; // coprime primitive parts
        }
        let rc = content_in(&r, &var);
        f = g;
        g = r.div_exact(&rc).expect("content divides");
    }
    let gc = content_in(&g, &var);
    let gp = g.div_exact(&gc).expect("content divides");
    cg.mul(&gp).monic()
}

/// gcd of a list.
pub fn gcd_many<'a, I: IntoIterator<Item = &'a MPoly>>(polys: I) -> MPoly {
    let mut g = MPoly::zero();
    for p in polys {
        g = gcd(&g, p);
        if g.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            break;
        }
    }
    g
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest monomial first
        for (m, c) in self.terms.iter().rev() {
            let mono = m
                .0
                .iter()
                .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
            let piece = if mono.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{mono}")
            } else if c.is_rational() {
                format!("{c}*{mono}")
            } else {
                format!("({c})*{mono}")
            };
            if first {
                write!(f, "{piece}")?;
                first = false;
            } else if let Some(rest) = piece.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {piece}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn x() -> MPoly {
        MPoly::var("x")
    }

    fn n() -> MPoly {
        MPoly::var("n")
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let p = x().add(&MPoly::one()); // x+1
        let q = x().sub(&MPoly::one()); // x-1
        let prod = p.mul(&q); // x^2-1
        assert_eq!(prod.degree_in("x"), 2);
        assert_eq!(prod.div_exact(&p).unwrap(), q);
        assert!(prod.div_exact(&x().add(&MPoly::from_i64(2))).is_none());
    }

    #[test]
    fn gcd_univariate_and_multivariate() {
        let p = x().add(&MPoly::one());
        let q = x().sub(&n());
        let a = p.pow(2).mul(&q);
        let b = p.mul(&q.pow(2));
        let g = gcd(&a, &b);
        // g should be p*q up to normalization
        let expect = p.mul(&q).monic();
        assert_eq!(g, expect);
    }

    #[test]
    fn gcd_coprime() {
        let a = x().add(&MPoly::one());
        let b = x().add(&MPoly::from_i64(2));
        assert_eq!(gcd(&a, &b), MPoly::one());
    }

    #[test]
    fn integer_roots() {
        // (k+1)(k-3)k
        let k = MPoly::var("k");
        let p = k
            .add(&MPoly::one())
            .mul(&k.sub(&MPoly::from_i64(3)))
            .mul(&k);
        let mut r = p.integer_roots_in("k");
        r.sort();
        assert_eq!(r, vec![-1, 0, 3]);
    }

    #[test]
    fn eval_and_substitute() {
        let p = x().mul(&n()).add(&MPoly::from_rat(rat(1, 2)));
        let mut env = BTreeMap::new();
        env.insert("x".to_string(), Scalar::from_i64(2));
        env.insert("n".to_string(), Scalar::from_rat(rat(3, 1)));
        assert_eq!(p.eval(&env), Scalar::from_rat(rat(13, 2)));
        let sub = p.substitute("x", &n());
        assert_eq!(sub.degree_in("n"), 2);
    }
}
