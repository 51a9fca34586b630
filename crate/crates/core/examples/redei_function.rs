//! The Redei function R_n = N_n / M_n as a map of GF(q) plus infinity, and its
//! conjugate onto the unit circle.

use std::collections::BTreeSet;

use num_integer::Integer;
use redei::redei::{phi, projective_line, redei_projective};
use redei::FieldContext;

fn main() -> redei::Result<()> {
    let ctx = FieldContext::new(3, None)?;
    let line: Vec<_> = projective_line(&ctx).collect();
    for n in 1..=10u64 {
        let image: BTreeSet<_> = line.iter().map(|&p| redei_projective(&ctx, p, n)).collect();
        let values: Vec<String> = line
            .iter()
            .map(|&p| redei_projective(&ctx, p, n).to_string())
            .collect();
        println!(
            "n = {n:>2} gcd(n, q+1) = {}  bijective = {:<5}  [{}]",
            n.gcd(&ctx.mu_order()),
            image.len() == line.len(),
            values.join(" ")
        );
    }

    println!("\nphi sends the projective line onto the unit circle:");
    for p in &line {
        println!("  {p:>3} -> {}", phi(&ctx, *p));
    }
    Ok(())
}
