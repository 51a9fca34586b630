//! Exhaustive checks of the identities the construction rests on. Each check
//! returns a report listing the offending points instead of a bare bool.

use std::fmt;

use super::parity::{a_coeff, family_poly, mn_closed, Family};
use super::rational::{g_map, gprime_map, phi, phi_inv, projective_line, redei_eval};
use crate::error::{Error, Result};
use crate::field::{FieldContext, Fq2Element, ProjectivePoint};

const BETA: Fq2Element = Fq2Element::BETA;
const BETA1: Fq2Element = Fq2Element::BETA_PLUS_ONE;

/// Roots of M_n or N_n found on a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    pub family: Family,
    pub n: u64,
    pub checked: usize,
    pub roots: Vec<Fq2Element>,
}

impl RootReport {
    pub fn has_roots(&self) -> bool {
        !self.roots.is_empty()
    }
}

fn roots_on(
    ctx: &FieldContext,
    family: Family,
    n: u64,
    domain: impl Iterator<Item = Fq2Element>,
) -> RootReport {
    let poly = family_poly(n, family);
    let mut checked = 0;
    let roots = domain
        .inspect(|_| checked += 1)
        .filter(|&x| poly.eval(ctx, x).is_zero())
        .collect();
    RootReport {
        family,
        n,
        checked,
        roots,
    }
}

/// Evaluates the family polynomial on all of mu_(q+1).
pub fn no_root_on_mu(ctx: &FieldContext, family: Family, n: u64) -> RootReport {
    roots_on(ctx, family, n, ctx.enumerate_mu().into_iter())
}

/// Same search over all of GF(q^2)*.
pub fn no_root_on_units(ctx: &FieldContext, family: Family, n: u64) -> RootReport {
    roots_on(ctx, family, n, ctx.fq2_nonzero())
}

/// The four identities for x^(n + m(q+1)) P(x)^(q-1) on mu_(q+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircleCase {
    /// n = 1 (mod 3): x^k M_n(x)^(q-1) = R_n(x)
    One,
    /// n = 2 (mod 3): x^k M_n(x)^(q-1) = R_n(x) + 1
    Two,
    /// n = 0 (mod 3): x^k N_n(x)^(q-1) = 1 + 1/R_n(x)
    Three,
    /// n = 1 (mod 3): x^k N_n(x)^(q-1) = 1/R_n(x)
    Four,
}

impl CircleCase {
    pub const ALL: [Self; 4] = [Self::One, Self::Two, Self::Three, Self::Four];

    pub fn from_number(k: u8) -> Result<Self> {
        match k {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            4 => Ok(Self::Four),
            _ => Err(Error::InvalidParams(format!(
                "identity case must be 1..=4, got {k}"
            ))),
        }
    }

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    /// Required residue of n mod 3.
    pub fn residue(self) -> u64 {
        match self {
            Self::One | Self::Four => 1,
            Self::Two => 2,
            Self::Three => 0,
        }
    }

    pub fn family(self) -> Family {
        match self {
            Self::One | Self::Two => Family::M,
            Self::Three | Self::Four => Family::N,
        }
    }

    /// Cases applicable to a given n.
    pub fn for_n(n: u64) -> impl Iterator<Item = Self> {
        Self::ALL.into_iter().filter(move |c| c.residue() == n % 3)
    }
}

impl fmt::Display for CircleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: u64,
    pub m: u64,
    pub case: CircleCase,
    /// Points where both sides were defined and compared.
    pub checked: usize,
    /// Points where M_n and N_n both vanish, so R_n(x) is 0/0.
    pub skipped: Vec<Fq2Element>,
    pub mismatches: Vec<Fq2Element>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks one of the four identities at every point of mu_(q+1).
pub fn circle_identity(
    ctx: &FieldContext,
    n: u64,
    m: u64,
    case: CircleCase,
) -> Result<IdentityReport> {
    if n == 0 || n % 3 != case.residue() {
        return Err(Error::InvalidParams(format!(
            "{case} needs n = {} (mod 3), got n = {n}",
            case.residue()
        )));
    }
    let pair = mn_closed(n);
    // x^(m(q+1)) = 1 on the circle, but keep the full exponent so the check
    // does not silently rely on that.
    let k = ((n as u128 + m as u128 * ctx.mu_order() as u128) % ctx.fq2_units() as u128) as u64;

    let mut report = IdentityReport {
        n,
        m,
        case,
        checked: 0,
        skipped: Vec::new(),
        mismatches: Vec::new(),
    };
    for x in ctx.enumerate_mu() {
        let mv = pair.m_poly.eval(ctx, x);
        let nv = pair.n_poly.eval(ctx, x);
        // Right-hand side as a projective ratio num/den, with R_n = N_n/M_n.
        let (num, den) = match case {
            CircleCase::One => (nv, mv),
            CircleCase::Two => (ctx.fq2_add(nv, mv), mv),
            CircleCase::Three => (ctx.fq2_add(nv, mv), nv),
            CircleCase::Four => (mv, nv),
        };
        if num.is_zero() && den.is_zero() {
            report.skipped.push(x);
            continue;
        }
        let p = match case.family() {
            Family::M => mv,
            Family::N => nv,
        };
        let lhs = ctx.fq2_mul(ctx.fq2_pow(x, k), ctx.fq2_pow(p, ctx.fq_units()));
        report.checked += 1;
        if den.is_zero() || ctx.fq2_mul(lhs, den) != num {
            report.mismatches.push(x);
        }
    }
    Ok(report)
}

/// Points where phi^-1 . R_n . phi (n = 1 mod 3), or phi^-1 . (R_n + 1) . phi
/// (n = 2 mod 3), disagrees with g, resp. g', on GF(q) + {inf}.
pub fn conjugation_mismatches(ctx: &FieldContext, n: u64) -> Result<Vec<ProjectivePoint>> {
    let shift = match n % 3 {
        1 => Fq2Element::ZERO,
        2 => Fq2Element::ONE,
        _ => {
            return Err(Error::InvalidParams(format!(
                "conjugation identity needs n != 0 (mod 3), got {n}"
            )))
        }
    };
    let mut bad = Vec::new();
    for p in projective_line(ctx) {
        let y = ctx.fq2_add(redei_eval(ctx, phi(ctx, p), n)?, shift);
        let lhs = phi_inv(ctx, y)?;
        let rhs = match p {
            ProjectivePoint::Infinity => ProjectivePoint::Infinity,
            ProjectivePoint::Finite(x) if n % 3 == 1 => ProjectivePoint::Finite(g_map(ctx, x, n)?),
            ProjectivePoint::Finite(x) => ProjectivePoint::Finite(gprime_map(ctx, x, n)?),
        };
        if lhs != rhs {
            bad.push(p);
        }
    }
    Ok(bad)
}

/// Indices i <= i_max where a_i or a_(i+2) disagrees with its tower value
/// b^i + (b+1)^i, resp. (b+1) b^i + b (b+1)^i.
pub fn a_sequence_mismatches(ctx: &FieldContext, i_max: u64) -> Vec<u64> {
    let as_bit = |v: Fq2Element| -> Option<bool> {
        match v {
            Fq2Element::ZERO => Some(false),
            Fq2Element::ONE => Some(true),
            _ => None,
        }
    };
    (0..=i_max)
        .filter(|&i| {
            let bi = ctx.fq2_pow(BETA, i);
            let b1i = ctx.fq2_pow(BETA1, i);
            let a = as_bit(ctx.fq2_add(bi, b1i));
            let b = as_bit(ctx.fq2_add(ctx.fq2_mul(BETA1, bi), ctx.fq2_mul(BETA, b1i)));
            a != Some(a_coeff(i)) || b != Some(a_coeff(i + 2))
        })
        .collect()
}

/// Points x where (x + b)^n != N_n(x) + b M_n(x) or
/// (x + b + 1)^n != N_n(x) + (b + 1) M_n(x).
pub fn splitting_mismatches(ctx: &FieldContext, n: u64) -> Vec<Fq2Element> {
    let pair = mn_closed(n);
    ctx.fq2_elements()
        .filter(|&x| {
            let mv = pair.m_poly.eval(ctx, x);
            let nv = pair.n_poly.eval(ctx, x);
            let lhs0 = ctx.fq2_pow(ctx.fq2_add(x, BETA), n);
            let lhs1 = ctx.fq2_pow(ctx.fq2_add(x, BETA1), n);
            lhs0 != ctx.fq2_add(nv, ctx.fq2_mul(BETA, mv))
                || lhs1 != ctx.fq2_add(nv, ctx.fq2_mul(BETA1, mv))
        })
        .collect()
}
