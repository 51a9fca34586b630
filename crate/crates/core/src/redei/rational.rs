//! The Redei rational function on GF(q^2), its projective form on
//! GF(q) + {inf}, and the auxiliary maps used to analyse it.

use crate::error::{Error, Result};
use crate::field::{FieldContext, Fq2Element, FqElement, ProjectivePoint};

const BETA: Fq2Element = Fq2Element::BETA;
const BETA1: Fq2Element = Fq2Element::BETA_PLUS_ONE;

/// Point of P^1(GF(q^2)) as a homogeneous pair (x : z).
#[derive(Debug, Clone, Copy)]
struct Homogeneous(Fq2Element, Fq2Element);

impl Homogeneous {
    fn lift(p: ProjectivePoint) -> Self {
        match p {
            ProjectivePoint::Finite(x) => Self(x.into(), Fq2Element::ONE),
            ProjectivePoint::Infinity => Self(Fq2Element::ONE, Fq2Element::ZERO),
        }
    }

    /// Applies the Moebius map (a x + b z : c x + d z).
    fn moebius(self, ctx: &FieldContext, [a, b, c, d]: [Fq2Element; 4]) -> Self {
        let Self(x, z) = self;
        Self(
            ctx.fq2_add(ctx.fq2_mul(a, x), ctx.fq2_mul(b, z)),
            ctx.fq2_add(ctx.fq2_mul(c, x), ctx.fq2_mul(d, z)),
        )
    }

    /// Affine value, or `None` at infinity.
    fn affine(self, ctx: &FieldContext) -> Option<Fq2Element> {
        let Self(x, z) = self;
        (!z.is_zero()).then(|| ctx.fq2_div(x, z).expect("z is nonzero"))
    }

    /// Back to GF(q) + {inf}. Panics if the point is not defined over GF(q).
    fn to_projective(self, ctx: &FieldContext) -> ProjectivePoint {
        match self.affine(ctx) {
            None => ProjectivePoint::Infinity,
            Some(v) => {
                assert!(v.is_base(), "point {v} is not in GF(q)");
                ProjectivePoint::Finite(v.c0)
            }
        }
    }
}

/// rho(x) = (x + b + 1) / (x + b)
const RHO: [Fq2Element; 4] = [Fq2Element::ONE, BETA1, Fq2Element::ONE, BETA];
/// rho^-1(y) = (b y + b + 1) / (y + 1)
const RHO_INV: [Fq2Element; 4] = [BETA, BETA1, Fq2Element::ONE, Fq2Element::ONE];
/// phi(x) = (x + b) / (x + b + 1)
const PHI: [Fq2Element; 4] = [Fq2Element::ONE, BETA, Fq2Element::ONE, BETA1];
/// phi^-1(y) = ((b + 1) y + b) / (y + 1)
const PHI_INV: [Fq2Element; 4] = [BETA1, BETA, Fq2Element::ONE, Fq2Element::ONE];

/// R_n(x) = (b(x+b+1)^n + (b+1)(x+b)^n) / ((x+b+1)^n + (x+b)^n), evaluated
/// directly in the tower.
pub fn redei_eval(ctx: &FieldContext, x: Fq2Element, n: u64) -> Result<Fq2Element> {
    let u = ctx.fq2_pow(ctx.fq2_add(x, BETA1), n);
    let v = ctx.fq2_pow(ctx.fq2_add(x, BETA), n);
    let num = ctx.fq2_add(ctx.fq2_mul(BETA, u), ctx.fq2_mul(BETA1, v));
    let den = ctx.fq2_add(u, v);
    if den.is_zero() {
        return Err(Error::PoleEncountered(x.to_string()));
    }
    ctx.fq2_div(num, den)
}

/// rho restricted to GF(q) + {inf}; lands in mu_(q+1), with rho(inf) = 1.
pub fn rho(ctx: &FieldContext, p: ProjectivePoint) -> Fq2Element {
    Homogeneous::lift(p)
        .moebius(ctx, RHO)
        .affine(ctx)
        .expect("x + b never vanishes on GF(q)")
}

/// rho^-1 on mu_(q+1); rho^-1(1) = inf.
pub fn rho_inv(ctx: &FieldContext, y: Fq2Element) -> Result<ProjectivePoint> {
    if !ctx.is_on_unit_circle(y) {
        return Err(Error::NotOnUnitCircle(y.to_string()));
    }
    Ok(Homogeneous(y, Fq2Element::ONE)
        .moebius(ctx, RHO_INV)
        .to_projective(ctx))
}

/// R_n as rho^-1 . x^n . rho on GF(q) + {inf}. Total: poles map to inf.
pub fn redei_projective(ctx: &FieldContext, p: ProjectivePoint, n: u64) -> ProjectivePoint {
    let y = ctx.fq2_pow(rho(ctx, p), n);
    Homogeneous(y, Fq2Element::ONE)
        .moebius(ctx, RHO_INV)
        .to_projective(ctx)
}

/// phi(x) = (x + b) / (x + b + 1), a bijection GF(q) + {inf} -> mu_(q+1) with
/// phi(inf) = 1.
pub fn phi(ctx: &FieldContext, p: ProjectivePoint) -> Fq2Element {
    Homogeneous::lift(p)
        .moebius(ctx, PHI)
        .affine(ctx)
        .expect("x + b + 1 never vanishes on GF(q)")
}

/// phi^-1(y) = ((b + 1) y + b) / (y + 1), with phi^-1(1) = inf.
pub fn phi_inv(ctx: &FieldContext, y: Fq2Element) -> Result<ProjectivePoint> {
    if !ctx.is_on_unit_circle(y) {
        return Err(Error::NotOnUnitCircle(y.to_string()));
    }
    Ok(Homogeneous(y, Fq2Element::ONE)
        .moebius(ctx, PHI_INV)
        .to_projective(ctx))
}

fn g_parts(ctx: &FieldContext, x: FqElement, n: u64) -> Result<(FqElement, FqElement, FqElement)> {
    let xn = ctx.fq_pow(x, n);
    let x1n = ctx.fq_pow(ctx.fq_add(x, FqElement::ONE), n);
    let den = ctx.fq_add(xn, x1n);
    if den.is_zero() {
        return Err(Error::PoleEncountered(x.to_string()));
    }
    Ok((xn, x1n, ctx.fq_inv(den)?))
}

/// g(x) = x^n / (x^n + (x+1)^n) on GF(q).
pub fn g_map(ctx: &FieldContext, x: FqElement, n: u64) -> Result<FqElement> {
    let (xn, _, inv) = g_parts(ctx, x, n)?;
    Ok(ctx.fq_mul(xn, inv))
}

/// g'(x) = (x+1)^n / (x^n + (x+1)^n) on GF(q).
pub fn gprime_map(ctx: &FieldContext, x: FqElement, n: u64) -> Result<FqElement> {
    let (_, x1n, inv) = g_parts(ctx, x, n)?;
    Ok(ctx.fq_mul(x1n, inv))
}

/// All of GF(q) + {inf}, finite points first in ascending order.
pub fn projective_line(ctx: &FieldContext) -> impl Iterator<Item = ProjectivePoint> + '_ {
    ctx.fq_elements()
        .map(ProjectivePoint::Finite)
        .chain(std::iter::once(ProjectivePoint::Infinity))
}
