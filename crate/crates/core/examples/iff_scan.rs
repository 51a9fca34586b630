//! Compare the predicate with brute force on every (n, m) with
//! n <= 3(q-1), m <= q-1, both families, and tally by exclusion reason.
//! Inside the predicate's domain (rows passing the n-only conditions) the two
//! must agree; outside it the predicate only claims sufficiency.
//!
//! cargo run --release --example iff_scan -- 5

use std::collections::BTreeMap;

use redei::construct::row_exclusion;
use redei::{
    brute_force_is_permutation, build_poly, theorem_predicate, ConstructionParams, Family,
    FieldContext,
};

fn main() -> redei::Result<()> {
    let t = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let ctx = FieldContext::new(t, None)?;
    // (family, reason) -> (cells, cells that permute anyway)
    let mut tally: BTreeMap<(Family, String), (u64, u64)> = BTreeMap::new();
    let mut in_domain_disagreements = 0;
    for family in [Family::M, Family::N] {
        for n in 1..=3 * ctx.fq_units() {
            for m in 1..=ctx.fq_units() {
                let params = ConstructionParams::new(t, n, m, family)?;
                let brute = brute_force_is_permutation(&ctx, &build_poly(&ctx, &params)?);
                let reason = match theorem_predicate(&params) {
                    Ok(()) => "predicate true".to_string(),
                    Err(ex) => ex.code(),
                };
                let entry = tally.entry((family, reason)).or_default();
                entry.0 += 1;
                entry.1 += brute as u64;
                let in_domain = row_exclusion(t, n, family).is_none();
                if in_domain && brute != theorem_predicate(&params).is_ok() {
                    in_domain_disagreements += 1;
                    println!("disagreement inside the domain: {params}");
                }
            }
        }
    }
    println!("t = {t}: family, predicate outcome -> cells, permutations by brute force");
    for ((family, reason), (cells, perms)) in &tally {
        println!("  {family}  {reason:<26} {cells:>6} {perms:>6}");
    }
    println!("disagreements inside the domain: {in_domain_disagreements}");
    Ok(())
}
