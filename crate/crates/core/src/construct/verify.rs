//! Ground-truth permutation checks by exhaustive evaluation, and the AGW
//! reduction to the unit circle as an independent route.

use std::collections::HashSet;

use num_integer::Integer;

use super::build::build_poly;
use super::params::ConstructionParams;
use super::sparse::SparsePoly;
use crate::error::{Error, Result};
use crate::field::{FieldContext, Fq2Element};
use crate::redei::family_poly;

/// Default limit on the number of field elements an exhaustive check may visit.
pub const DEFAULT_EXHAUST_CAP: u64 = 1 << 20;

/// Environment variable overriding [`DEFAULT_EXHAUST_CAP`].
pub const EXHAUST_CAP_ENV: &str = "REDEI_EXHAUST_CAP";

/// Cap from the environment, falling back to the default.
pub fn exhaust_cap_from_env() -> Result<u64> {
    match std::env::var(EXHAUST_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{EXHAUST_CAP_ENV} must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_EXHAUST_CAP),
    }
}

pub fn check_cap(ctx: &FieldContext, cap: u64) -> Result<()> {
    if ctx.q2() > cap {
        return Err(Error::RefusedTooLarge {
            size: ctx.q2(),
            cap,
        });
    }
    Ok(())
}

/// Evaluates `p` on all of GF(q^2) and reports whether the values are
/// pairwise distinct. Stops at the first collision.
pub fn brute_force_is_permutation(ctx: &FieldContext, p: &SparsePoly) -> bool {
    let mut seen = vec![0u64; (ctx.q2() as usize).div_ceil(64)];
    for x in ctx.fq2_elements() {
        let i = p.eval(ctx, x).index(ctx.t()) as usize;
        let (word, bit) = (i / 64, 1u64 << (i % 64));
        if seen[word] & bit != 0 {
            return false;
        }
        seen[word] |= bit;
    }
    true
}

/// The induced map on the unit circle, u -> u^k P_n(u)^(q-1) with
/// k = n + m(q+1).
fn circle_map<'a>(
    ctx: &'a FieldContext,
    params: &ConstructionParams,
) -> impl Fn(Fq2Element) -> Fq2Element + 'a {
    let poly = family_poly(params.n, params.family);
    let k = (params.shift_exponent() % ctx.fq2_units() as u128) as u64;
    move |u| {
        ctx.fq2_mul(
            ctx.fq2_pow(u, k),
            ctx.fq2_pow(poly.eval(ctx, u), ctx.fq_units()),
        )
    }
}

/// Points x of GF(q^2)* where f(x)^(q-1) differs from h(x^(q-1)), with f the
/// reduced construction and h the induced circle map.
pub fn agw_commutation_failures(
    ctx: &FieldContext,
    params: &ConstructionParams,
) -> Result<Vec<Fq2Element>> {
    let f = build_poly(ctx, params)?;
    let h = circle_map(ctx, params);
    Ok(ctx
        .fq2_nonzero()
        .filter(|&x| {
            let lhs = ctx.fq2_pow(f.eval(ctx, x), ctx.fq_units());
            let rhs = h(ctx.fq2_pow(x, ctx.fq_units()));
            lhs != rhs
        })
        .collect())
}

/// Permutation test through the AGW criterion: gcd(k, q-1) = 1 and the
/// induced map permutes mu_(q+1). Visits only q+1 points.
pub fn agw_is_permutation(ctx: &FieldContext, params: &ConstructionParams) -> bool {
    let q1 = ctx.fq_units() as u128;
    if params.shift_exponent().gcd(&q1) != 1 {
        return false;
    }
    let h = circle_map(ctx, params);
    let mu = ctx.enumerate_mu();
    let image: HashSet<Fq2Element> = mu.iter().map(|&u| h(u)).collect();
    image.len() == mu.len() && image.iter().all(|&v| ctx.is_on_unit_circle(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::redei::Family;

    #[test]
    fn monomial_examples() {
        let ctx = FieldContext::new(3, None).unwrap();
        assert!(brute_force_is_permutation(&ctx, &SparsePoly::monomial(10)));
        assert!(brute_force_is_permutation(&ctx, &SparsePoly::monomial(2)));
        assert!(!brute_force_is_permutation(&ctx, &SparsePoly::monomial(9)));
        for e in 1..ctx.q2() {
            let expected = e.gcd(&ctx.fq2_units()) == 1;
            assert_eq!(
                brute_force_is_permutation(&ctx, &SparsePoly::monomial(e)),
                expected
            );
        }
    }

    #[test]
    fn cap() {
        let ctx = FieldContext::new(13, None).unwrap();
        assert_eq!(
            check_cap(&ctx, DEFAULT_EXHAUST_CAP),
            Err(Error::RefusedTooLarge {
                size: 1 << 26,
                cap: 1 << 20
            })
        );
        assert!(check_cap(&FieldContext::new(9, None).unwrap(), DEFAULT_EXHAUST_CAP).is_ok());
    }

    #[test]
    fn agw_routes_agree_with_brute_force() {
        let ctx = FieldContext::new(3, None).unwrap();
        for n in 1..=21 {
            for m in 1..=7 {
                for family in [Family::M, Family::N] {
                    let params = ConstructionParams::new(3, n, m, family).unwrap();
                    assert!(agw_commutation_failures(&ctx, &params).unwrap().is_empty());
                    let f = build_poly(&ctx, &params).unwrap();
                    assert_eq!(
                        agw_is_permutation(&ctx, &params),
                        brute_force_is_permutation(&ctx, &f),
                        "{params}"
                    );
                }
            }
        }
    }
}
