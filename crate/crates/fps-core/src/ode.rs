//! Homogeneous linear ODEs with polynomial coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mpoly::{gcd_many, MPoly};
use crate::surd::Scalar;

/// `sum_j coeffs[j] * F^(j)(var) = 0`, with `coeffs[order]` nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearODE {
    pub var: String,
    /// dense by derivative order, length = order + 1
    pub coeffs: Vec<MPoly>,
}

impl LinearODE {
    pub fn new(var: &str, coeffs: Vec<MPoly>) -> Self {
        LinearODE { var: var.to_string(), coeffs: coeffs }.normalized()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Remove common polynomial content and fix the sign so the leading
    /// coefficient's leading scalar is positive.
    pub fn normalized(mut self) -> Self {
        while self.coeffs.len() > 1 && self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        let g = gcd_many(self.coeffs.iter().filter(|c| !c.is_zero()));
        if !g.is_zero() && !g.is_constant() {
            for c in &mut self.coeffs {
                *c = c.div_exact(&g).expect("content divides");
            }
        }
        // scale so some coefficient is "nice": clear scalar denominators is
        // impossible in general (parameter field), so divide by the leading
        // scalar of the highest-order coefficient and then clear rationals.
        if let Some(last) = self.coeffs.last() {
            let lc = last.leading_coeff();
            if !lc.is_zero() {
                let inv = lc.inv();
                for c in &mut self.coeffs {
                    *c = c.scale(&inv);
                }
            }
        }
        // multiply by the lcm of rational denominators to get integer-ish output
        let mut den = num_bigint::BigInt::from(1);
        for c in &self.coeffs {
            for s in c.terms.values() {
                if let Some(r) = s.as_rat() {
                    den = num_integer::lcm(den, r.denom().clone());
                } else {
                    den = num_integer::lcm(den.clone(), r_den(s));
                }
            }
        }
        if den != num_bigint::BigInt::from(1) {
            let m = Scalar::from_rat(crate::rat::Rat::from_integer(den));
            for c in &mut self.coeffs {
                *c = c.scale(&m);
            }
        }
        self
    }

    /// Structural equality modulo overall content and sign.
    pub fn equivalent(&self, other: &LinearODE) -> bool {
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        let a = self.clone().normalized();
        let b = other.clone().normalized();
        a.coeffs == b.coeffs
            || a.coeffs
                .iter()
                .zip(&b.coeffs)
                .all(|(x, y)| x.neg() == *y)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(OdeDto::from(self)).expect("serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LinearODE> {
        let dto: OdeDto = serde_json::from_value(v.clone())
            .map_err(|e| Error::Unsupported(format!("bad ODE JSON: {e}")))?;
        dto.try_into()
    }
}

fn r_den(s: &Scalar) -> num_bigint::BigInt {
    num_integer::lcm(s.re.denom().clone(), s.im.denom().clone())
}

impl fmt::Display for LinearODE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let fterm = match j {
                0 => format!("F[{}]", self.var),
                1 => format!("F'[{}]", self.var),
                2 => format!("F''[{}]", self.var),
                3 => format!("F'''[{}]", self.var),
                _ => format!("F^({j})[{}]", self.var),
            };
            let cs = format!("{c}");
            let piece = if cs == "1" {
                fterm
            } else if cs == "-1" {
                format!("-{fterm}")
            } else if c.terms.len() > 1 {
                format!("({cs})*{fterm}")
            } else {
                format!("{cs}*{fterm}")
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
        if first {
            write!(f, "0")?;
        }
        write!(f, " == 0")
    }
}

impl fmt::Debug for LinearODE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- JSON DTO ----

#[derive(Serialize, Deserialize)]
struct OdeDto {
    variable: String,
    /// coefficient polynomials as expression ASTs, dense by derivative order
    coefficients: Vec<serde_json::Value>,
}

impl From<&LinearODE> for OdeDto {
    fn from(ode: &LinearODE) -> Self {
        OdeDto {
            variable: ode.var.clone(),
            coefficients: ode
                .coeffs
                .iter()
                .map(|c| crate::expr::expr_to_json(&crate::conv::mpoly_to_expr(c, &[&ode.var])))
                .collect(),
        }
    }
}

impl TryFrom<OdeDto> for LinearODE {
    type Error = Error;
    fn try_from(dto: OdeDto) -> Result<LinearODE> {
        let mut coeffs = Vec::new();
        for v in &dto.coefficients {
            let e = crate::expr::expr_from_json(v)?;
            let p = crate::conv::expr_to_mpoly(&e, &[&dto.variable])?;
            coeffs.push(p);
        }
        if coeffs.is_empty() || coeffs.last().unwrap().is_zero() {
            return Err(Error::Unsupported(
                "ODE needs a nonzero leading coefficient".to_string(),
            ));
        }
        Ok(LinearODE { var: dto.variable, coeffs })
    }
}
