//! Arithmetic in GF(2^t) and the tower GF(q^2) = GF(q)(b), b^2 + b + 1 = 0.

use redei::{FieldContext, Fq2Element};

fn main() -> redei::Result<()> {
    let ctx = FieldContext::new(5, None)?;
    println!("{ctx}");
    println!(
        "q = {}, q^2 = {}, |mu_(q+1)| = {}",
        ctx.q(),
        ctx.q2(),
        ctx.mu_order()
    );

    let a = ctx.fq(0b10110)?;
    let b = ctx.fq(0b00111)?;
    println!(
        "base field: {a} * {b} = {}, {a}^-1 = {}",
        ctx.fq_mul(a, b),
        ctx.fq_inv(a)?
    );

    let x: Fq2Element = "3+1f*b".parse()?;
    let x = ctx.check_fq2(x)?;
    let xq = ctx.frobenius(x);
    println!("x = {x}, x^q = {xq}, norm = {}", ctx.norm(x));
    println!("x^-1 = {}", ctx.fq2_inv(x)?);

    let beta = Fq2Element::BETA;
    println!(
        "b^3 = {}, b^q = {}",
        ctx.fq2_pow(beta, 3),
        ctx.frobenius(beta)
    );

    let mu = ctx.enumerate_mu();
    println!(
        "unit circle has {} points; first few: {:?}",
        mu.len(),
        mu.iter()
            .take(4)
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}
