//! Build one polynomial, evaluate the predicate, and confirm by brute force.
//!
//! cargo run --example construct_permutation -- 5 13 2 N

use redei::construct::agw_is_permutation;
use redei::{
    brute_force_is_permutation, build_poly, theorem_predicate, ConstructionParams, Family,
    FieldContext,
};

fn main() -> redei::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, d: u64| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let t = num(0, 3) as u32;
    let (n, m) = (num(1, 5), num(2, 2));
    let family: Family = args.get(3).map_or(Ok(Family::M), |s| s.parse())?;

    let ctx = FieldContext::new(t, None)?;
    let params = ConstructionParams::new(t, n, m, family)?;
    let poly = build_poly(&ctx, &params)?;
    println!("{params}");
    println!("f(x) = {poly}");
    match theorem_predicate(&params) {
        Ok(()) => println!("predicate: permutes"),
        Err(ex) => println!("predicate: excluded ({ex})"),
    }
    println!("unit-circle test: {}", agw_is_permutation(&ctx, &params));
    println!(
        "brute force over {} elements: {}",
        ctx.q2(),
        brute_force_is_permutation(&ctx, &poly)
    );
    Ok(())
}
