//! Polynomials over GF(2) and the numerator/denominator pair of the
//! characteristic-2 Redei function.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldContext, Fq2Element};

/// C(n, i) mod 2 by Lucas' theorem: odd iff the bits of `i` are a submask of `n`.
pub fn binom_parity(n: u64, i: u64) -> bool {
    i & n == i
}

/// a_i = b^i + (b+1)^i, which is 0 when 3 | i and 1 otherwise.
pub fn a_coeff(i: u64) -> bool {
    !i.is_multiple_of(3)
}

/// Which half of the Redei pair a construction is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Denominator M_n = (x+b+1)^n + (x+b)^n.
    M,
    /// Numerator N_n = b(x+b+1)^n + (b+1)(x+b)^n.
    N,
}

impl Family {
    /// Coefficient filter for the term C(n, i) x^(n-i).
    fn filter(self, i: u64) -> bool {
        match self {
            Family::M => a_coeff(i),
            Family::N => a_coeff(i + 2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::M => "M",
            Family::N => "N",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "M" | "m" => Ok(Family::M),
            "N" | "n" => Ok(Family::N),
            other => Err(Error::Parse(format!(
                "family must be M or N, got {other:?}"
            ))),
        }
    }
}

/// A polynomial over GF(2), stored as its strictly descending exponents.
/// The empty list is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawParityPoly")]
pub struct ParityPoly {
    exponents: Vec<u64>,
}

#[derive(Deserialize)]
struct RawParityPoly {
    exponents: Vec<u64>,
}

impl TryFrom<RawParityPoly> for ParityPoly {
    type Error = Error;

    fn try_from(raw: RawParityPoly) -> Result<Self> {
        Self::from_descending(raw.exponents)
    }
}

impl ParityPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { exponents: vec![0] }
    }

    pub fn x() -> Self {
        Self { exponents: vec![1] }
    }

    pub fn from_descending(exponents: Vec<u64>) -> Result<Self> {
        if exponents.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Parse(format!(
                "exponents must be strictly descending, got {exponents:?}"
            )));
        }
        Ok(Self { exponents })
    }

    /// Builds from exponents in any order; repeated exponents cancel in pairs.
    pub fn from_exponents(exps: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = exps.into_iter().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut out: Vec<u64> = Vec::with_capacity(v.len());
        for e in v {
            if out.last() == Some(&e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        Self { exponents: out }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.exponents.first().copied()
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Sum over GF(2): symmetric difference of the exponent sets.
    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (&self.exponents, &other.exponents);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self { exponents: out }
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: u64) -> Self {
        Self {
            exponents: self.exponents.iter().map(|e| e + k).collect(),
        }
    }

    /// Evaluates at a point of GF(q^2), with coefficients promoted from GF(2).
    pub fn eval(&self, ctx: &FieldContext, x: Fq2Element) -> Fq2Element {
        // Horner over the exponent gaps.
        let mut acc = Fq2Element::ZERO;
        let mut prev: Option<u64> = None;
        for &e in &self.exponents {
            if let Some(p) = prev {
                acc = ctx.fq2_mul(acc, ctx.fq2_pow(x, p - e));
            }
            acc = ctx.fq2_add(acc, Fq2Element::ONE);
            prev = Some(e);
        }
        match prev {
            Some(last) => ctx.fq2_mul(acc, ctx.fq2_pow(x, last)),
            None => Fq2Element::ZERO,
        }
    }
}

impl fmt::Display for ParityPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("0");
        }
        for (k, &e) in self.exponents.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for ParityPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let exps = s
            .split('+')
            .map(|term| match term.trim() {
                "1" => Ok(0),
                "x" => Ok(1),
                t => t
                    .strip_prefix("x^")
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad term {t:?}"))),
            })
            .collect::<Result<Vec<u64>>>()?;
        Self::from_descending(exps)
    }
}

/// The pair (M_n, N_n) for a given n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedeiPair {
    pub index: u64,
    pub m_poly: ParityPoly,
    pub n_poly: ParityPoly,
}

impl RedeiPair {
    pub fn get(&self, family: Family) -> &ParityPoly {
        match family {
            Family::M => &self.m_poly,
            Family::N => &self.n_poly,
        }
    }
}

/// Family polynomial sum_i f(i) C(n, i) x^(n-i), visiting only the i with
/// C(n, i) odd (the submasks of n).
pub fn family_poly(n: u64, family: Family) -> ParityPoly {
    let mut exps = Vec::with_capacity(1 << n.count_ones().min(20));
    // Submasks of n in descending order give exponents n - i in ascending order.
    let mut i = n;
    loop {
        debug_assert!(binom_parity(n, i));
        if family.filter(i) {
            exps.push(n - i);
        }
        if i == 0 {
            break;
        }
        i = (i - 1) & n;
    }
    exps.reverse();
    ParityPoly { exponents: exps }
}

/// (M_n, N_n) from the closed form with Lucas-parity binomials.
pub fn mn_closed(n: u64) -> RedeiPair {
    RedeiPair {
        index: n,
        m_poly: family_poly(n, Family::M),
        n_poly: family_poly(n, Family::N),
    }
}

/// Iterator over (M_k, N_k) for k = 0, 1, 2, ... via
/// M_k = (x+1) M_(k-1) + N_(k-1), N_k = x N_(k-1) + M_(k-1).
#[derive(Debug, Clone)]
pub struct RedeiRecursion {
    next: RedeiPair,
}

impl Default for RedeiRecursion {
    fn default() -> Self {
        Self {
            next: RedeiPair {
                index: 0,
                m_poly: ParityPoly::zero(),
                n_poly: ParityPoly::one(),
            },
        }
    }
}

impl Iterator for RedeiRecursion {
    type Item = RedeiPair;

    fn next(&mut self) -> Option<RedeiPair> {
        let cur = &self.next;
        let m = cur.m_poly.shift(1).add(&cur.m_poly).add(&cur.n_poly);
        let n = cur.n_poly.shift(1).add(&cur.m_poly);
        let succ = RedeiPair {
            index: cur.index + 1,
            m_poly: m,
            n_poly: n,
        };
        Some(std::mem::replace(&mut self.next, succ))
    }
}

/// (M_n, N_n) by iterating the recursion from (M_0, N_0) = (0, 1).
pub fn mn_recursive(n: u64) -> RedeiPair {
    RedeiRecursion::default()
        .nth(n as usize)
        .expect("recursion is infinite")
}
