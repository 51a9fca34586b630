use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of GF(2^t): a polynomial of degree < t packed into bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElement(pub(crate) u64);

impl FqElement {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

/// `c0 + c1*b` in GF(q^2) = GF(q)(b), where b^2 = b + 1.
///
/// Ordering is by `(c1, c0)`, which is also the order of [`Fq2Element::index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fq2Element {
    pub c0: FqElement,
    pub c1: FqElement,
}

impl Fq2Element {
    pub const ZERO: Self = Self {
        c0: FqElement::ZERO,
        c1: FqElement::ZERO,
    };
    pub const ONE: Self = Self {
        c0: FqElement::ONE,
        c1: FqElement::ZERO,
    };
    /// The tower generator b.
    pub const BETA: Self = Self {
        c0: FqElement::ZERO,
        c1: FqElement::ONE,
    };
    /// b + 1, the other root of z^2 + z + 1.
    pub const BETA_PLUS_ONE: Self = Self {
        c0: FqElement::ONE,
        c1: FqElement::ONE,
    };

    pub fn from_base(c: FqElement) -> Self {
        Self {
            c0: c,
            c1: FqElement::ZERO,
        }
    }

    pub fn is_zero(self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// True iff the element lies in the base field GF(q).
    pub fn is_base(self) -> bool {
        self.c1.is_zero()
    }

    /// Dense index `c1 * q + c0` in `0..q^2`.
    pub fn index(self, t: u32) -> u64 {
        (self.c1.0 << t) | self.c0.0
    }

    pub(crate) fn from_index(i: u64, t: u32) -> Self {
        let mask = (1u64 << t) - 1;
        Self {
            c0: FqElement(i & mask),
            c1: FqElement(i >> t),
        }
    }
}

impl PartialOrd for Fq2Element {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fq2Element {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.c1, self.c0).cmp(&(other.c1, other.c0))
    }
}

impl From<FqElement> for Fq2Element {
    fn from(c: FqElement) -> Self {
        Self::from_base(c)
    }
}

impl fmt::Display for Fq2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*b", self.c0, self.c1)
    }
}

fn parse_hex(s: &str) -> Result<u64> {
    let s = s.trim();
    let s = s.strip_prefix("0x").unwrap_or(s);
    u64::from_str_radix(s, 16).map_err(|_| Error::Parse(format!("bad hex value {s:?}")))
}

/// Parses the `c0+c1*b` form, or a bare hex value for a base-field element.
///
/// The result is not range-checked against a context; use
/// [`FieldContext::check_fq2`](crate::FieldContext::check_fq2) for that.
impl FromStr for Fq2Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('+') {
            Some((c0, rest)) => {
                let c1 = rest
                    .trim()
                    .strip_suffix("*b")
                    .ok_or_else(|| Error::Parse(format!("expected c0+c1*b, got {s:?}")))?;
                Ok(Self {
                    c0: FqElement(parse_hex(c0)?),
                    c1: FqElement(parse_hex(c1)?),
                })
            }
            None => Ok(Self::from_base(FqElement(parse_hex(s)?))),
        }
    }
}

/// A point of the projective line GF(q) + {inf}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjectivePoint {
    Finite(FqElement),
    Infinity,
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(x) => x.fmt(f),
            Self::Infinity => f.write_str("inf"),
        }
    }
}
