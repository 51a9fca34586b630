use std::fmt;

use crate::error::{Error, Result};

/// Largest supported extension degree. Keeps `q^2` inside a `u64`.
pub const MAX_DEGREE: u32 = 31;

/// Degree of a nonzero GF(2) polynomial packed into bits, `None` for zero.
pub(crate) fn gf2_degree(p: u64) -> Option<u32> {
    (p != 0).then(|| 63 - p.leading_zeros())
}

/// Remainder of `a` modulo `b` over GF(2). `b` must be nonzero.
pub(crate) fn gf2_rem(mut a: u64, b: u64) -> u64 {
    let db = gf2_degree(b).expect("division by the zero polynomial");
    while let Some(da) = gf2_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility over GF(2) by trial division against every polynomial of
/// degree 1..=deg/2.
pub fn is_irreducible_gf2(poly: u64) -> bool {
    let Some(deg) = gf2_degree(poly) else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for divisor in (1u64 << d)..(1u64 << (d + 1)) {
            if gf2_rem(poly, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

/// Smallest (by integer value) irreducible polynomial of exact degree `t`.
pub fn least_irreducible(t: u32) -> u64 {
    ((1u64 << t) + 1..(1u64 << (t + 1)))
        .step_by(2)
        .find(|&p| is_irreducible_gf2(p))
        .expect("an irreducible polynomial exists in every degree")
}

/// Big-endian 0/1 rendering of a GF(2) polynomial, e.g. `1011` for x^3+x+1.
pub fn modulus_to_bits(poly: u64) -> String {
    format!("{poly:b}")
}

pub fn modulus_from_bits(s: &str) -> Result<u64> {
    let s = s.trim();
    if s.is_empty() || s.len() > 64 || !s.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::Parse(format!(
            "modulus must be a 0/1 bit-string, got {s:?}"
        )));
    }
    u64::from_str_radix(s, 2).map_err(|e| Error::Parse(e.to_string()))
}

/// The field GF(2^t) with a verified irreducible modulus, and the tower
/// GF(q^2) = GF(q)(b) with b^2 = b + 1 built over it.
///
/// Immutable after construction. Every arithmetic operation in the crate takes
/// a context by reference.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldContext {
    t: u32,
    modulus: u64,
}

impl FieldContext {
    /// Builds a context for GF(2^t). With `modulus = None` the lexicographically
    /// least irreducible polynomial of degree `t` is used.
    pub fn new(t: u32, modulus: Option<u64>) -> Result<Self> {
        if t < 3 || t.is_multiple_of(2) || t > MAX_DEGREE {
            return Err(Error::InvalidDegree(t));
        }
        let modulus = match modulus {
            None => least_irreducible(t),
            Some(m) => {
                let invalid = |reason| Error::InvalidModulus {
                    modulus: modulus_to_bits(m),
                    reason,
                };
                if gf2_degree(m) != Some(t) {
                    return Err(invalid("degree differs from t"));
                }
                if m & 1 == 0 {
                    return Err(invalid("reducible: divisible by x"));
                }
                if !is_irreducible_gf2(m) {
                    return Err(invalid("reducible over GF(2)"));
                }
                m
            }
        };
        Ok(Self { t, modulus })
    }

    /// Context from a big-endian bit-string modulus such as `"1011"`.
    pub fn with_modulus_bits(t: u32, bits: &str) -> Result<Self> {
        Self::new(t, Some(modulus_from_bits(bits)?))
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn modulus_bits(&self) -> String {
        modulus_to_bits(self.modulus)
    }

    /// q = 2^t
    pub fn q(&self) -> u64 {
        1u64 << self.t
    }

    /// q^2 = |GF(q^2)|
    pub fn q2(&self) -> u64 {
        1u64 << (2 * self.t)
    }

    /// Order of the unit circle mu_(q+1).
    pub fn mu_order(&self) -> u64 {
        self.q() + 1
    }

    /// Order of GF(q)*.
    pub fn fq_units(&self) -> u64 {
        self.q() - 1
    }

    /// Order of GF(q^2)*.
    pub fn fq2_units(&self) -> u64 {
        self.q2() - 1
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {}", self.t, self.modulus_bits())
    }
}
