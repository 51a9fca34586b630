use super::params::ConstructionParams;
use super::sparse::{reduce_exponent, SparsePoly};
use crate::error::{Error, Result};
use crate::field::{FieldContext, Fq2Element};
use crate::redei::family_poly;

fn check_degree(ctx: &FieldContext, params: &ConstructionParams) -> Result<()> {
    if ctx.t() != params.t {
        return Err(Error::InvalidParams(format!(
            "context has t = {} but parameters have t = {}",
            ctx.t(),
            params.t
        )));
    }
    Ok(())
}

/// Raw exponents n + m(q+1) + (q-1) e for each e in the family polynomial.
fn raw_exponents(ctx: &FieldContext, params: &ConstructionParams) -> impl Iterator<Item = u128> {
    let shift = params.shift_exponent();
    let step = ctx.fq_units() as u128;
    family_poly(params.n, params.family)
        .exponents()
        .to_vec()
        .into_iter()
        .map(move |e| shift + step * e as u128)
}

/// x^(n + m(q+1)) P_n(x^(q-1)) reduced modulo x^(q^2) + x.
pub fn build_poly(ctx: &FieldContext, params: &ConstructionParams) -> Result<SparsePoly> {
    check_degree(ctx, params)?;
    Ok(SparsePoly::from_terms(
        ctx,
        raw_exponents(ctx, params).map(|e| (reduce_exponent(ctx, e), Fq2Element::ONE)),
    ))
}

/// The same polynomial before reduction. Fails if an exponent does not fit
/// in 64 bits.
pub fn build_unreduced(ctx: &FieldContext, params: &ConstructionParams) -> Result<SparsePoly> {
    check_degree(ctx, params)?;
    let terms = raw_exponents(ctx, params)
        .map(|e| {
            u64::try_from(e)
                .map(|e| (e, Fq2Element::ONE))
                .map_err(|_| Error::InvalidParams(format!("exponent {e} overflows u64")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SparsePoly::from_terms(ctx, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::redei::Family;

    fn built(t: u32, n: u64, m: u64, family: Family) -> String {
        let ctx = FieldContext::new(t, None).unwrap();
        let params = ConstructionParams::new(t, n, m, family).unwrap();
        build_poly(&ctx, &params).unwrap().to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(built(3, 1, 1, Family::M), "x^10");
        assert_eq!(built(3, 5, 2, Family::M), "x^51 + x^30 + x^23");
        assert_eq!(built(3, 10, 1, Family::N), "x^33 + x^26 + x^12");
        assert_eq!(built(5, 34, 1, Family::M), "x^129 + x^67 + x^36");
        assert_eq!(built(7, 20, 1, Family::M), "x^2181 + x^657 + x^149");
        assert_eq!(built(3, 1, 1, Family::N), "x^17");
    }

    #[test]
    fn unreduced_reduces_to_built() {
        let ctx = FieldContext::new(3, None).unwrap();
        for n in 1..=30 {
            for m in 1..=9 {
                for family in [Family::M, Family::N] {
                    let params = ConstructionParams::new(3, n, m, family).unwrap();
                    let raw = build_unreduced(&ctx, &params).unwrap();
                    let red = build_poly(&ctx, &params).unwrap();
                    assert_eq!(raw.reduce_mod_field(&ctx), red);
                    assert!(red.all_coefficients_one());
                    for x in ctx.fq2_elements().step_by(3) {
                        assert_eq!(raw.eval(&ctx, x), red.eval(&ctx, x));
                    }
                }
            }
        }
    }

    #[test]
    fn context_mismatch() {
        let ctx = FieldContext::new(5, None).unwrap();
        let params = ConstructionParams::new(3, 1, 1, Family::M).unwrap();
        assert!(build_poly(&ctx, &params).is_err());
    }
}
