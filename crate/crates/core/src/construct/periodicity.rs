//! Why n only matters modulo 3(q-1): the products
//! x^(3(q-1)) (x^(q-1) + c)^(3(q-1)) for c in {b, b+1}.

use crate::field::{FieldContext, Fq2Element};

/// Outcome of evaluating both products at every x in GF(q^2)*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIdentityReport {
    pub points: usize,
    /// Points where both products equal 1.
    pub both_one: usize,
    /// x with x^(q-1) = b: the b-product has a zero factor.
    pub vanishing_beta: Vec<Fq2Element>,
    /// x with x^(q-1) = b + 1: the (b+1)-product has a zero factor.
    pub vanishing_beta_plus_one: Vec<Fq2Element>,
    /// Points where a product is neither 1 nor explained by a zero factor.
    pub failures: Vec<Fq2Element>,
}

impl UnitIdentityReport {
    /// Both products equal 1 at every point of GF(q^2)*.
    pub fn holds_everywhere(&self) -> bool {
        self.both_one == self.points
    }

    /// Both products equal 1 wherever x^(q-1) + c is nonzero.
    pub fn holds_off_vanishing_locus(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn vanishing_count(&self) -> usize {
        self.vanishing_beta.len() + self.vanishing_beta_plus_one.len()
    }
}

pub fn unit_identity(ctx: &FieldContext) -> UnitIdentityReport {
    let e = 3 * ctx.fq_units();
    let mut report = UnitIdentityReport {
        points: 0,
        both_one: 0,
        vanishing_beta: Vec::new(),
        vanishing_beta_plus_one: Vec::new(),
        failures: Vec::new(),
    };
    for x in ctx.fq2_nonzero() {
        report.points += 1;
        let u = ctx.fq2_pow(x, ctx.fq_units());
        let x3 = ctx.fq2_pow(x, e);
        let mut ok = true;
        for (c, vanishing) in [
            (Fq2Element::BETA, &mut report.vanishing_beta),
            (
                Fq2Element::BETA_PLUS_ONE,
                &mut report.vanishing_beta_plus_one,
            ),
        ] {
            let factor = ctx.fq2_add(u, c);
            let product = ctx.fq2_mul(x3, ctx.fq2_pow(factor, e));
            if product != Fq2Element::ONE {
                ok = false;
                if factor.is_zero() {
                    vanishing.push(x);
                } else if !report.failures.contains(&x) {
                    report.failures.push(x);
                }
            }
        }
        if ok {
            report.both_one += 1;
        }
    }
    report
}
