//! Run the lemma-level identity suites and print one line per check.
//!
//! cargo run --example lemma_checks -- 5

use redei::suite::lemma_checks;
use redei::FieldContext;

fn main() -> redei::Result<()> {
    let t = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let ctx = FieldContext::new(t, None)?;
    for check in lemma_checks(&ctx, 3 * ctx.fq_units()) {
        println!(
            "[{}] {}: {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    Ok(())
}
