use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::redei::Family;

/// One cell of a construction table: x^(n + m(q+1)) P_n(x^(q-1)) with
/// P = M or N over GF(2^2t).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub t: u32,
    pub n: u64,
    pub m: u64,
    pub family: Family,
}

impl ConstructionParams {
    /// Rejects n = 0 and m = 0. The family-N congruence on n is not enforced
    /// here; it is part of [`theorem_predicate`].
    pub fn new(t: u32, n: u64, m: u64, family: Family) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParams(format!(
                "n and m must be positive, got n = {n}, m = {m}"
            )));
        }
        if t == 0 || t > crate::field::MAX_DEGREE {
            return Err(Error::InvalidDegree(t));
        }
        Ok(Self { t, n, m, family })
    }

    pub fn q(&self) -> u64 {
        1u64 << self.t
    }

    /// The monomial exponent n + m(q+1), unreduced.
    pub fn shift_exponent(&self) -> u128 {
        self.n as u128 + self.m as u128 * (self.q() as u128 + 1)
    }
}

impl fmt::Display for ConstructionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t={} n={} m={} family={}",
            self.t, self.n, self.m, self.family
        )
    }
}

/// The condition that rules a cell out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exclusion {
    /// gcd(n, q^2 - 1) = d > 1
    NGroupGcd(u64),
    /// family N with n mod 3 = r != 1
    NResidue(u64),
    /// gcd(n + m(q+1), q - 1) = d > 1
    ShiftGcd(u64),
}

impl Exclusion {
    /// Compact machine form used in JSON, e.g. `gcd(n+m(q+1),q-1)=7`.
    pub fn code(&self) -> String {
        match self {
            Self::NGroupGcd(d) => format!("gcd(n,q^2-1)={d}"),
            Self::NResidue(r) => format!("n mod 3={r}"),
            Self::ShiftGcd(d) => format!("gcd(n+m(q+1),q-1)={d}"),
        }
    }

    /// True for conditions that depend only on n (whole table rows).
    pub fn is_row_condition(&self) -> bool {
        !matches!(self, Self::ShiftGcd(_))
    }
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NGroupGcd(d) => write!(f, "gcd(n, q^2-1) = {d}"),
            Self::NResidue(r) => write!(f, "n mod 3 = {r}, family N needs n = 1 (mod 3)"),
            Self::ShiftGcd(d) => write!(f, "gcd(n+m(q+1), q-1) = {d}"),
        }
    }
}

impl FromStr for Exclusion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |rest: &str| {
            rest.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad exclusion reason {s:?}")))
        };
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("gcd(n,q^2-1)=") {
            Ok(Self::NGroupGcd(num(rest)?))
        } else if let Some(rest) = s.strip_prefix("n mod 3=") {
            Ok(Self::NResidue(num(rest)?))
        } else if let Some(rest) = s.strip_prefix("gcd(n+m(q+1),q-1)=") {
            Ok(Self::ShiftGcd(num(rest)?))
        } else {
            Err(Error::Parse(format!("unknown exclusion reason {s:?}")))
        }
    }
}

/// Conditions on n alone: gcd(n, q^2-1) = 1, and n = 1 (mod 3) for family N.
pub fn row_exclusion(t: u32, n: u64, family: Family) -> Option<Exclusion> {
    let q = 1u64 << t;
    let d = n.gcd(&(q * q - 1));
    if d != 1 {
        return Some(Exclusion::NGroupGcd(d));
    }
    if family == Family::N && n % 3 != 1 {
        return Some(Exclusion::NResidue(n % 3));
    }
    None
}

/// The permutation criterion: gcd(n + m(q+1), q-1) = 1 and gcd(n, q^2-1) = 1,
/// plus n = 1 (mod 3) for family N. `Ok(())` means the cell permutes.
///
/// For rows passing [`row_exclusion`] this is exact in m. A row that fails it
/// may still yield permutations (e.g. t = 5, family M, 11 | n), so a row-level
/// `Err` means "not covered", not "not a permutation".
pub fn theorem_predicate(params: &ConstructionParams) -> std::result::Result<(), Exclusion> {
    if let Some(ex) = row_exclusion(params.t, params.n, params.family) {
        return Err(ex);
    }
    let q = params.q() as u128;
    let d = params.shift_exponent().gcd(&(q - 1)) as u64;
    if d != 1 {
        return Err(Exclusion::ShiftGcd(d));
    }
    Ok(())
}

/// Representative with n in [1, 3(q-1)] and m in [1, q-1] that builds the
/// same reduced polynomial. The predicate need not be preserved: gcd(n, q^2-1)
/// is not periodic modulo 3(q-1).
pub fn canonical_params(params: &ConstructionParams) -> ConstructionParams {
    let q1 = params.q() - 1;
    ConstructionParams {
        n: (params.n - 1) % (3 * q1) + 1,
        m: (params.m - 1) % q1 + 1,
        ..*params
    }
}
