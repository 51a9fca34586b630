use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{FieldContext, Fq2Element};

/// Canonical exponent of x^e as a function on GF(q^2): positive exponents go
/// to ((e - 1) mod (q^2 - 1)) + 1, zero stays zero.
pub fn reduce_exponent(ctx: &FieldContext, e: u128) -> u64 {
    if e == 0 {
        0
    } else {
        ((e - 1) % ctx.fq2_units() as u128 + 1) as u64
    }
}

/// A polynomial over GF(q^2) as exponent -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePoly {
    terms: BTreeMap<u64, Fq2Element>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(e: u64) -> Self {
        Self {
            terms: BTreeMap::from([(e, Fq2Element::ONE)]),
        }
    }

    /// Adds `c x^e`, merging with an existing term of the same exponent.
    pub fn add_term(&mut self, ctx: &FieldContext, e: u64, c: Fq2Element) {
        let sum = match self.terms.get(&e) {
            Some(&old) => ctx.fq2_add(old, c),
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn from_terms(
        ctx: &FieldContext,
        terms: impl IntoIterator<Item = (u64, Fq2Element)>,
    ) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(ctx, e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, Fq2Element)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn exponents(&self) -> Vec<u64> {
        self.terms.keys().rev().copied().collect()
    }

    pub fn coefficient(&self, e: u64) -> Fq2Element {
        self.terms.get(&e).copied().unwrap_or(Fq2Element::ZERO)
    }

    pub fn all_coefficients_one(&self) -> bool {
        self.terms.values().all(|&c| c == Fq2Element::ONE)
    }

    pub fn is_reduced(&self, ctx: &FieldContext) -> bool {
        self.terms.keys().all(|&e| e < ctx.q2())
    }

    /// Representative modulo x^(q^2) + x: same function on GF(q^2), every
    /// positive exponent in [1, q^2 - 1].
    pub fn reduce_mod_field(&self, ctx: &FieldContext) -> Self {
        Self::from_terms(
            ctx,
            self.terms()
                .map(|(e, c)| (reduce_exponent(ctx, e as u128), c)),
        )
    }

    /// Value at x, with x^0 = 1 and 0^e = 0 for e >= 1.
    pub fn eval(&self, ctx: &FieldContext, x: Fq2Element) -> Fq2Element {
        self.terms().fold(Fq2Element::ZERO, |acc, (e, c)| {
            ctx.fq2_add(acc, ctx.fq2_mul(c, ctx.fq2_pow(x, e)))
        })
    }
}

impl fmt::Display for SparsePoly {
    /// Descending exponents joined by " + ", coefficient 1 omitted, other
    /// coefficients as `(c0+c1*b)*x^e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono = match e {
                0 => None,
                1 => Some("x".to_string()),
                _ => Some(format!("x^{e}")),
            };
            match (c == Fq2Element::ONE, mono) {
                (true, Some(m)) => f.write_str(&m)?,
                (true, None) => f.write_str("1")?,
                (false, Some(m)) => write!(f, "({c})*{m}")?,
                (false, None) => write!(f, "({c})")?,
            }
        }
        Ok(())
    }
}

/// Parses the [`Display`](fmt::Display) form. Coefficients are not
/// range-checked, and exponents must be strictly descending.
impl FromStr for SparsePoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut terms = BTreeMap::new();
        if s == "0" {
            return Ok(Self { terms });
        }
        let mut last: Option<u64> = None;
        for raw in s.split(" + ") {
            let raw = raw.trim();
            let bad = || Error::Parse(format!("bad polynomial term {raw:?}"));
            let (coef, mono) = match raw.strip_prefix('(') {
                Some(rest) => {
                    let (c, tail) = rest.split_once(')').ok_or_else(bad)?;
                    let c: Fq2Element = c.parse()?;
                    match tail.strip_prefix('*') {
                        Some(m) => (c, Some(m)),
                        None if tail.is_empty() => (c, None),
                        None => return Err(bad()),
                    }
                }
                None if raw == "1" => (Fq2Element::ONE, None),
                None => (Fq2Element::ONE, Some(raw)),
            };
            let e = match mono {
                None => 0,
                Some("x") => 1,
                Some(m) => m
                    .strip_prefix("x^")
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(bad)?,
            };
            if last.is_some_and(|l| l <= e) || coef.is_zero() {
                return Err(bad());
            }
            last = Some(e);
            terms.insert(e, coef);
        }
        Ok(Self { terms })
    }
}
