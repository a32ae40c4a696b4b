//! Homogeneous linear recurrences with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mpoly::{gcd_many, MPoly};

/// Where the recurrence relation is known to hold.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Validity {
    ForAllK,
    ForKGe(i64),
}

/// `sum_j coeffs[j](k) * a_{k+j} = 0`, shifts re-based so the minimum
/// stored shift is 0; coefficients share no polynomial factor.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    pub index: String,
    /// shift -> coefficient polynomial in the index variable
    pub coeffs: BTreeMap<i64, MPoly>,
    pub validity: Validity,
}

impl LinearRecurrence {
    pub fn new(index: &str, coeffs: BTreeMap<i64, MPoly>, validity: Validity) -> Self {
        LinearRecurrence { index: index.to_string(), coeffs, validity }.normalized()
    }

    pub fn span(&self) -> i64 {
        match (self.coeffs.keys().next(), self.coeffs.keys().next_back()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn shifts(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    /// Re-base shifts to start at zero, drop zero coefficients, remove
    /// common polynomial content (adjusting validity for any integer roots
    /// of the removed content), and normalize the sign.
    pub fn normalized(mut self) -> Self {
        self.coeffs.retain(|_, c| !c.is_zero());
        if self.coeffs.is_empty() {
            return self;
        }
        let min = *self.coeffs.keys().next().unwrap();
        if min != 0 {
            let k = MPoly::var(&self.index);
            let shift_poly = |p: &MPoly| -> MPoly {
                p.substitute(&self.index, &k.add(&MPoly::from_i64(-min)))
            };
            let mut nc = BTreeMap::new();
            for (s, c) in &self.coeffs {
                nc.insert(s - min, shift_poly(c));
            }
            self.coeffs = nc;
            self.validity = match self.validity {
                Validity::ForAllK => Validity::ForAllK,
                Validity::ForKGe(v) => Validity::ForKGe(v + min),
            };
        }
        let g = gcd_many(self.coeffs.values());
        if !g.is_zero() && !g.is_constant() {
            // Removing content with integer roots can break validity at
            // exactly those points; account for it.
            let roots = g.integer_roots_in(&self.index);
            for c in self.coeffs.values_mut() {
                *c = c.div_exact(&g).expect("content divides");
            }
            if let Some(max_root) = roots.iter().max() {
                let floor = max_root + 1;
                self.validity = match self.validity {
                    Validity::ForAllK => Validity::ForKGe(floor),
                    Validity::ForKGe(v) => Validity::ForKGe(v.max(floor)),
                };
            }
        }
        // sign/scale normalization as for ODEs
        if let Some(last) = self.coeffs.values().next_back() {
            let lc = last.leading_coeff();
            if !lc.is_zero() {
                let inv = lc.inv();
                for c in self.coeffs.values_mut() {
                    *c = c.scale(&inv);
                }
            }
        }
        let mut den = num_bigint::BigInt::from(1);
        for c in self.coeffs.values() {
            for s in c.terms.values() {
                den = num_integer::lcm(
                    den,
                    num_integer::lcm(s.re.denom().clone(), s.im.denom().clone()),
                );
            }
        }
        if den != num_bigint::BigInt::from(1) {
            let m = crate::surd::Scalar::from_rat(crate::rat::Rat::from_integer(den));
            for c in self.coeffs.values_mut() {
                *c = c.scale(&m);
            }
        }
        self
    }

    /// Equality modulo overall content, re-basing, and sign.
    pub fn equivalent(&self, other: &LinearRecurrence) -> bool {
        let a = self.clone().normalized();
        let b = other.clone().normalized();
        if a.shifts() != b.shifts() {
            return false;
        }
        a.coeffs == b.coeffs
            || a.coeffs
                .values()
                .zip(b.coeffs.values())
                .all(|(x, y)| x.neg() == *y)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReDto::from(self)).expect("serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LinearRecurrence> {
        let dto: ReDto = serde_json::from_value(v.clone())
            .map_err(|e| Error::Unsupported(format!("bad recurrence JSON: {e}")))?;
        dto.try_into()
    }

    /// Render with shifts descending to `a[k]` (the style used for found
    /// recurrences) when `max_at_zero`, else ascending from `a[k]`.
    pub fn render(&self, max_at_zero: bool) -> String {
        let hi = *self.coeffs.keys().next_back().unwrap_or(&0);
        let display_shift = |s: i64| -> String {
            let off = if max_at_zero { s - hi } else { s };
            if off == 0 {
                format!("a[{}]", self.index)
            } else {
                format!("a[{} + {}]", off, self.index)
            }
        };
        let k = MPoly::var(&self.index);
        let mut out = String::new();
        let mut first = true;
        for (s, c) in &self.coeffs {
            let shown_c = if max_at_zero {
                c.substitute(&self.index, &k.add(&MPoly::from_i64(-hi)))
            } else {
                c.clone()
            };
            let cs = format!("{shown_c}");
            let at = display_shift(*s);
            let piece = if cs == "1" {
                at
            } else if cs == "-1" {
                format!("-{at}")
            } else if shown_c.terms.len() > 1 {
                format!("({cs})*{at}")
            } else {
                format!("{cs}*{at}")
            };
            if first {
                out.push_str(&piece);
                first = false;
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        if first {
            out.push('0');
        }
        out.push_str(" == 0");
        out
    }
}

impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{:?}]", self.validity)
    }
}

// ---- JSON DTO ----

#[derive(Serialize, Deserialize)]
struct ReDto {
    index: String,
    /// shift (as decimal string) -> coefficient polynomial AST
    coefficients: BTreeMap<String, serde_json::Value>,
    validity: ValidityDto,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ValidityDto {
    All(String),
    Ge { for_k_ge: i64 },
}

impl From<&LinearRecurrence> for ReDto {
    fn from(re: &LinearRecurrence) -> Self {
        ReDto {
            index: re.index.clone(),
            coefficients: re
                .coeffs
                .iter()
                .map(|(s, c)| {
                    (
                        s.to_string(),
                        crate::expr::expr_to_json(&crate::conv::mpoly_to_expr(
                            c,
                            &[&re.index],
                        )),
                    )
                })
                .collect(),
            validity: match re.validity {
                Validity::ForAllK => ValidityDto::All("for_all_k".to_string()),
                Validity::ForKGe(v) => ValidityDto::Ge { for_k_ge: v },
            },
        }
    }
}

impl TryFrom<ReDto> for LinearRecurrence {
    type Error = Error;
    fn try_from(dto: ReDto) -> Result<LinearRecurrence> {
        let mut coeffs = BTreeMap::new();
        for (s, v) in &dto.coefficients {
            let shift: i64 = s
                .parse()
                .map_err(|_| Error::Unsupported(format!("bad shift `{s}`")))?;
            let e = crate::expr::expr_from_json(v)?;
            coeffs.insert(shift, crate::conv::expr_to_mpoly(&e, &[&dto.index])?);
        }
        let validity = match dto.validity {
            ValidityDto::All(s) if s == "for_all_k" => Validity::ForAllK,
            ValidityDto::All(s) => {
                return Err(Error::Unsupported(format!("bad validity `{s}`")))
            }
            ValidityDto::Ge { for_k_ge } => Validity::ForKGe(for_k_ge),
        };
        if coeffs.is_empty() {
            return Err(Error::Unsupported("empty recurrence".to_string()));
        }
        Ok(LinearRecurrence { index: dto.index, coeffs, validity })
    }
}
