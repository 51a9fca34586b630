//! Named, exhaustive check suites behind `redei lemmas` and `redei selftest`.
//! Every check is deterministic; details never include timings.

use std::collections::BTreeSet;
use std::path::Path;

use num_integer::Integer;

use crate::construct::{
    agw_commutation_failures, brute_force_is_permutation, build_poly, build_unreduced,
    canonical_params, cells_from_json, diff_tables, full_table, theorem_predicate, unit_identity,
    CellStatus, ConstructionParams,
};
use crate::error::Result;
use crate::field::{FieldContext, Fq2Element, FqElement};
use crate::redei::lemmas::{
    a_sequence_mismatches, circle_identity, conjugation_mismatches, no_root_on_mu,
    no_root_on_units, splitting_mismatches, CircleCase,
};
use crate::redei::{
    binom_parity, mn_closed, projective_line, redei_projective, Family, RedeiRecursion,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Invariant,
    Golden,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            kind: CheckKind::Invariant,
            passed,
            detail: detail.into(),
        }
    }

    /// Passes iff `failures` is empty; lists up to eight of them otherwise.
    fn from_failures<T: std::fmt::Display>(
        name: impl Into<String>,
        total: usize,
        failures: &[T],
    ) -> Self {
        let detail = if failures.is_empty() {
            format!("{total} cases")
        } else {
            let shown: Vec<String> = failures.iter().take(8).map(|f| f.to_string()).collect();
            format!("{} of {total} failed: {}", failures.len(), shown.join("; "))
        };
        Self::new(name, failures.is_empty(), detail)
    }
}

fn coprime_rows(ctx: &FieldContext, n_max: u64) -> Vec<u64> {
    (1..=n_max)
        .filter(|n| n.gcd(&ctx.fq2_units()) == 1)
        .collect()
}

/// Root-freeness, the four circle identities, the conjugation to g and g',
/// the a/b sequence cross-check, and the unit identity behind periodicity.
pub fn lemma_checks(ctx: &FieldContext, n_max: u64) -> Vec<Check> {
    let t = ctx.t();
    let rows = coprime_rows(ctx, n_max);
    let mut checks = Vec::new();

    for family in [Family::M, Family::N] {
        let ns: Vec<u64> = rows
            .iter()
            .copied()
            .filter(|n| family == Family::M || n % 3 == 1)
            .collect();
        let bad: Vec<u64> = ns
            .iter()
            .copied()
            .filter(|&n| no_root_on_mu(ctx, family, n).has_roots())
            .collect();
        checks.push(Check::from_failures(
            format!("t={t} {family}_n has no root on mu_(q+1)"),
            ns.len(),
            &bad,
        ));
    }

    for case in CircleCase::ALL {
        let mut total = 0;
        let mut skipped = 0;
        let mut bad = Vec::new();
        for n in (1..=n_max).filter(|n| n % 3 == case.residue()) {
            for m in [1, 2] {
                let r = circle_identity(ctx, n, m, case).expect("residue matches");
                total += 1;
                skipped += r.skipped.len();
                if !r.holds() {
                    bad.push(format!("n={n} m={m}"));
                }
            }
        }
        let mut c = Check::from_failures(format!("t={t} circle identity {case}"), total, &bad);
        if skipped > 0 {
            c.detail
                .push_str(&format!(", {skipped} undefined points skipped"));
        }
        checks.push(c);
    }

    let bad: Vec<u64> = rows
        .iter()
        .copied()
        .filter(|&n| {
            !conjugation_mismatches(ctx, n)
                .map(|v| v.is_empty())
                .unwrap_or(false)
        })
        .collect();
    checks.push(Check::from_failures(
        format!("t={t} phi^-1 R_n phi equals g (n=1 mod 3) or g' (n=2 mod 3)"),
        rows.len(),
        &bad,
    ));

    let bad = a_sequence_mismatches(ctx, 200);
    checks.push(Check::from_failures(
        format!("t={t} a_i and a_(i+2) match tower values, i <= 200"),
        201,
        &bad,
    ));

    let r = unit_identity(ctx);
    checks.push(Check::new(
        format!("t={t} x^(3(q-1)) (x^(q-1) + c)^(3(q-1)) = 1 for c in {{b, b+1}}"),
        r.holds_off_vanishing_locus(),
        format!(
            "both products 1 at {}/{} points; a factor vanishes at {} points (x^(q-1) in {{b, b+1}}); {} other failures",
            r.both_one,
            r.points,
            r.vanishing_count(),
            r.failures.len()
        ),
    ));
    checks
}

fn pascal_mod2(rows: usize) -> Vec<Vec<bool>> {
    let mut tri: Vec<Vec<bool>> = vec![vec![true]];
    for r in 1..rows {
        let row = (0..=r)
            .map(|i| (i > 0 && tri[r - 1][i - 1]) ^ (i < r && tri[r - 1][i]))
            .collect();
        tri.push(row);
    }
    tri
}

/// Field, kernel and constructor invariants at the given context (t = 3 in
/// `selftest`), plus the t = 5 items that are cheap.
pub fn invariant_checks(ctx: &FieldContext) -> Result<Vec<Check>> {
    let t = ctx.t();
    let all: Vec<Fq2Element> = ctx.fq2_elements().collect();
    let mut checks = Vec::new();

    // field
    let mut bad = Vec::new();
    for &a in &all {
        for &b in &all {
            let ab = ctx.fq2_mul(a, b);
            if ab != ctx.fq2_mul(b, a)
                || ctx.frobenius(ab) != ctx.fq2_mul(ctx.frobenius(a), ctx.frobenius(b))
            {
                bad.push(format!("{a},{b}"));
            }
            let c = ctx.fq2_add(a, Fq2Element::BETA);
            if ctx.fq2_mul(ab, c) != ctx.fq2_mul(a, ctx.fq2_mul(b, c))
                || ctx.fq2_mul(a, ctx.fq2_add(b, c)) != ctx.fq2_add(ab, ctx.fq2_mul(a, c))
            {
                bad.push(format!("{a},{b},{c}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("t={t} commutativity, associativity, distributivity, Frobenius multiplicative"),
        all.len() * all.len(),
        &bad,
    ));

    let bad: Vec<Fq2Element> = ctx
        .fq2_nonzero()
        .filter(|&a| ctx.fq2_pow(a, ctx.fq2_units()) != Fq2Element::ONE)
        .chain(
            ctx.fq_elements()
                .skip(1)
                .filter(|&a| ctx.fq_pow(a, ctx.fq_units()) != FqElement::ONE)
                .map(Fq2Element::from_base),
        )
        .collect();
    checks.push(Check::from_failures(
        format!("t={t} Lagrange: a^(q^2-1) = 1, a^(q-1) = 1"),
        all.len(),
        &bad,
    ));

    for tt in [3, 5] {
        let c = FieldContext::new(tt, ctx.modulus_hint(tt))?;
        let bad: Vec<Fq2Element> = c
            .fq2_nonzero()
            .filter(|&x| {
                let on = c.fq2_pow(x, c.mu_order()) == Fq2Element::ONE;
                on != (c.frobenius(x) == c.fq2_inv(x).expect("nonzero"))
            })
            .collect();
        checks.push(Check::from_failures(
            format!("t={tt} x in mu_(q+1) iff x^q = 1/x"),
            c.fq2_units() as usize,
            &bad,
        ));
        let roots: Vec<Fq2Element> = c
            .fq2_elements()
            .filter(|&z| c.fq2_add(c.fq2_square(z), z) == Fq2Element::ONE)
            .collect();
        checks.push(Check::new(
            format!("t={tt} roots of z^2 + z + 1 are exactly b, b+1, outside GF(q)"),
            roots == [Fq2Element::BETA, Fq2Element::BETA_PLUS_ONE]
                && roots.iter().all(|r| !r.is_base()),
            format!("{} roots", roots.len()),
        ));
        let bad = a_sequence_mismatches(&c, 200);
        checks.push(Check::from_failures(
            format!("t={tt} a_i = b^i + (b+1)^i, i <= 200"),
            201,
            &bad,
        ));
    }

    // kernel
    let tri = pascal_mod2(65);
    let mut bad = Vec::new();
    for n in 0..=64u64 {
        for i in 0..=64u64 {
            if binom_parity(n, i) != (i <= n && tri[n as usize][i as usize]) {
                bad.push(format!("C({n},{i})"));
            }
        }
    }
    checks.push(Check::from_failures(
        "Lucas parity matches Pascal triangle mod 2, n, i <= 64",
        65 * 65,
        &bad,
    ));

    let bad: Vec<u64> = RedeiRecursion::default()
        .take(1025)
        .filter(|p| *p != mn_closed(p.index))
        .map(|p| p.index)
        .collect();
    checks.push(Check::from_failures(
        "closed form equals recursion, n <= 1024",
        1025,
        &bad,
    ));

    let bad: Vec<u64> = (0..=50)
        .filter(|&n| !splitting_mismatches(ctx, n).is_empty())
        .collect();
    checks.push(Check::from_failures(
        format!("t={t} (x+b)^n = N_n + b M_n and (x+b+1)^n = N_n + (b+1) M_n, n <= 50"),
        51,
        &bad,
    ));

    let bad: Vec<u64> = (1..=300u64)
        .filter(|&n| {
            let p = mn_closed(n);
            p.n_poly.degree() != Some(n) || (n % 2 == 1 && p.m_poly.degree() != Some(n - 1))
        })
        .collect();
    checks.push(Check::from_failures(
        "deg N_n = n; deg M_n = n-1 for odd n; n <= 300",
        300,
        &bad,
    ));

    let rows = coprime_rows(ctx, 3 * ctx.fq_units());
    let mut bad = Vec::new();
    for &n in &rows {
        for family in [Family::M, Family::N] {
            if family == Family::N && n % 3 != 1 {
                continue;
            }
            if no_root_on_mu(ctx, family, n).has_roots()
                || no_root_on_units(ctx, family, n).has_roots()
            {
                bad.push(format!("{family}_{n}"));
            }
        }
    }
    checks.push(Check::from_failures(
        format!("t={t} no roots on mu_(q+1) or GF(q^2)* for gcd(n, q^2-1) = 1"),
        rows.len(),
        &bad,
    ));

    let line: Vec<_> = projective_line(ctx).collect();
    let bad: Vec<u64> = (1..=3 * ctx.fq_units())
        .filter(|&n| {
            let image: BTreeSet<_> = line.iter().map(|&p| redei_projective(ctx, p, n)).collect();
            (image.len() == line.len()) != (n.gcd(&ctx.mu_order()) == 1)
        })
        .collect();
    checks.push(Check::from_failures(
        format!("t={t} R_n permutes GF(q) + inf iff gcd(n, q+1) = 1"),
        3 * ctx.fq_units() as usize,
        &bad,
    ));

    checks.extend(lemma_checks(ctx, 3 * ctx.fq_units()));

    // constructor
    let q1 = ctx.fq_units();
    let mut iff_bad = Vec::new();
    let mut coef_bad = Vec::new();
    let mut agw_bad = Vec::new();
    let mut total = 0;
    for family in [Family::M, Family::N] {
        for &n in rows.iter().filter(|&&n| family == Family::M || n % 3 == 1) {
            for m in 1..=q1 {
                let params = ConstructionParams::new(t, n, m, family)?;
                let f = build_poly(ctx, &params)?;
                total += 1;
                let predicted = theorem_predicate(&params).is_ok();
                if brute_force_is_permutation(ctx, &f) != predicted {
                    iff_bad.push(params.to_string());
                }
                if !f.all_coefficients_one() {
                    coef_bad.push(params.to_string());
                }
                if !agw_commutation_failures(ctx, &params)?.is_empty() {
                    agw_bad.push(params.to_string());
                }
            }
        }
    }
    checks.push(Check::from_failures(
        format!("t={t} brute-force bijectivity iff predicate"),
        total,
        &iff_bad,
    ));
    checks.push(Check::from_failures(
        format!("t={t} constructed coefficients all 1"),
        total,
        &coef_bad,
    ));
    checks.push(Check::from_failures(
        format!("t={t} f(x)^(q-1) = h(x^(q-1)) on GF(q^2)*"),
        total,
        &agw_bad,
    ));

    let mut bad = Vec::new();
    for n in [1, 5, 13, 20] {
        for m in [1, 3, 7] {
            let params = ConstructionParams::new(t, n, m, Family::M)?;
            let raw = build_unreduced(ctx, &params)?;
            let red = raw.reduce_mod_field(ctx);
            if all.iter().any(|&x| raw.eval(ctx, x) != red.eval(ctx, x)) {
                bad.push(params.to_string());
            }
        }
    }
    checks.push(Check::from_failures(
        format!("t={t} reduction preserves the function"),
        12,
        &bad,
    ));

    let mut bad = Vec::new();
    let mut total = 0;
    for family in [Family::M, Family::N] {
        for n in 1..=100 {
            for m in (1..=30).step_by(3) {
                let params = ConstructionParams::new(t, n, m, family)?;
                total += 1;
                if build_poly(ctx, &params)? != build_poly(ctx, &canonical_params(&params))? {
                    bad.push(params.to_string());
                }
            }
        }
    }
    checks.push(Check::from_failures(
        format!("t={t} canonical parameters build the same polynomial"),
        total,
        &bad,
    ));

    let mut bad = Vec::new();
    let mut total = 0;
    for family in [Family::M, Family::N] {
        for cell in full_table(ctx, family)? {
            total += 1;
            let ok = match &cell.status {
                CellStatus::Permutes(p) => brute_force_is_permutation(ctx, p),
                CellStatus::Excluded(_) => {
                    !brute_force_is_permutation(ctx, &build_poly(ctx, &cell.params)?)
                }
            };
            if !ok {
                bad.push(cell.params.to_string());
            }
        }
    }
    checks.push(Check::from_failures(
        format!("t={t} table cells agree with brute force"),
        total,
        &bad,
    ));

    Ok(checks)
}

/// Compares `table1.json` and `table2.json` under `data_dir` with freshly
/// generated t = 3 tables.
pub fn golden_checks(data_dir: &Path) -> Vec<Check> {
    let ctx = FieldContext::new(3, None).expect("t = 3 is valid");
    [("table1.json", Family::M), ("table2.json", Family::N)]
        .into_iter()
        .map(|(file, family)| {
            let path = data_dir.join(file);
            let name = format!("golden {}", path.display());
            let outcome = std::fs::read_to_string(&path)
                .map_err(|e| e.to_string())
                .and_then(|s| cells_from_json(&s).map_err(|e| e.to_string()))
                .and_then(|expected| {
                    let actual = full_table(&ctx, family).map_err(|e| e.to_string())?;
                    Ok(diff_tables(&expected, &actual))
                });
            let mut check = match outcome {
                Ok(diffs) if diffs.is_empty() => Check::new(name, true, "exact match"),
                Ok(diffs) => Check::new(name, false, diffs.join("; ")),
                Err(e) => Check::new(name, false, e),
            };
            check.kind = CheckKind::Golden;
            check
        })
        .collect()
}

impl FieldContext {
    /// Keeps the modulus when asked for the same degree, default otherwise.
    fn modulus_hint(&self, t: u32) -> Option<u64> {
        (t == self.t()).then(|| self.modulus())
    }
}
