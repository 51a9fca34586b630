use proptest::prelude::*;

use redei::construct::{
    agw_is_permutation, build_unreduced, reduce_exponent, row_exclusion, CellRecord,
};
use redei::redei::{mn_closed, projective_line, redei_projective, ParityPoly};
use redei::{
    brute_force_is_permutation, build_poly, canonical_params, theorem_predicate,
    ConstructionParams, Family, FieldContext, Fq2Element, SparsePoly, TableCell,
};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::M), Just(Family::N)]
}

fn ctx(t: u32) -> FieldContext {
    FieldContext::new(t, None).unwrap()
}

fn element(c: &FieldContext, raw: u64) -> Fq2Element {
    c.fq2_from_index(raw % c.q2())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_params_preserve_polynomial(
        t in prop::sample::select(vec![3u32, 5, 7]),
        n in 1u64..1_000_000,
        m in 1u64..1_000_000,
        family in family(),
    ) {
        let c = ctx(t);
        let p = ConstructionParams::new(t, n, m, family).unwrap();
        let k = canonical_params(&p);
        prop_assert!(k.n <= 3 * c.fq_units() && k.m <= c.fq_units());
        prop_assert_eq!(build_poly(&c, &p).unwrap(), build_poly(&c, &k).unwrap());
        prop_assert_eq!(agw_is_permutation(&c, &p), agw_is_permutation(&c, &k));
        // gcd(n, q^2-1) is not periodic in n mod 3(q-1) when q+1 has a prime
        // factor other than 3, so only the other two conditions must carry over.
        let shift = |p: &ConstructionParams| {
            num_integer::gcd(p.shift_exponent(), u128::from(c.fq_units()))
        };
        prop_assert_eq!(shift(&p), shift(&k));
        prop_assert_eq!(p.n % 3, k.n % 3);
    }

    #[test]
    fn predicate_is_exact_on_qualifying_rows(
        t in prop::sample::select(vec![3u32, 5]),
        n in 1u64..200,
        m in 1u64..200,
        family in family(),
    ) {
        prop_assume!(row_exclusion(t, n, family).is_none());
        let c = ctx(t);
        let p = ConstructionParams::new(t, n, m, family).unwrap();
        let f = build_poly(&c, &p).unwrap();
        let predicate = theorem_predicate(&p).is_ok();
        prop_assert_eq!(brute_force_is_permutation(&c, &f), predicate);
        prop_assert_eq!(agw_is_permutation(&c, &p), predicate);
        prop_assert!(f.all_coefficients_one() && f.is_reduced(&c));
    }

    #[test]
    fn reduction_preserves_values(
        n in 1u64..64,
        m in 1u64..64,
        family in family(),
        xs in prop::collection::vec(any::<u64>(), 8),
    ) {
        let c = ctx(3);
        let p = ConstructionParams::new(3, n, m, family).unwrap();
        let raw = build_unreduced(&c, &p).unwrap();
        let reduced = build_poly(&c, &p).unwrap();
        for x in xs {
            let x = element(&c, x);
            prop_assert_eq!(raw.eval(&c, x), reduced.eval(&c, x));
        }
    }

    #[test]
    fn reduced_exponent_is_canonical_residue(t in 3u32..=31, e in any::<u128>()) {
        prop_assume!(t % 2 == 1);
        let c = ctx(t);
        let r = reduce_exponent(&c, e);
        if e == 0 {
            prop_assert_eq!(r, 0);
        } else {
            prop_assert!((1..c.q2()).contains(&r));
            prop_assert_eq!(u128::from(r) % u128::from(c.fq2_units()), e % u128::from(c.fq2_units()));
        }
    }

    #[test]
    fn recursion_step_holds(n in 1u64..20_000) {
        let prev = mn_closed(n - 1);
        let cur = mn_closed(n);
        let m = prev.m_poly.shift(1).add(&prev.m_poly).add(&prev.n_poly);
        let nn = prev.n_poly.shift(1).add(&prev.m_poly);
        prop_assert_eq!(cur.m_poly, m);
        prop_assert_eq!(cur.n_poly, nn);
    }

    #[test]
    fn parity_eval_is_additive(
        a in prop::collection::vec(0u64..500, 0..12),
        b in prop::collection::vec(0u64..500, 0..12),
        x in any::<u64>(),
    ) {
        let c = ctx(5);
        let x = element(&c, x);
        let (p, q) = (ParityPoly::from_exponents(a), ParityPoly::from_exponents(b));
        prop_assert_eq!(p.add(&q).eval(&c, x), c.fq2_add(p.eval(&c, x), q.eval(&c, x)));
        let text = p.to_string();
        prop_assert_eq!(text.parse::<ParityPoly>().unwrap(), p);
    }

    #[test]
    fn redei_functions_compose(
        t in prop::sample::select(vec![3u32, 5]),
        a in 1u64..200,
        b in 1u64..200,
    ) {
        let c = ctx(t);
        for p in projective_line(&c) {
            let lhs = redei_projective(&c, redei_projective(&c, p, b), a);
            prop_assert_eq!(lhs, redei_projective(&c, p, a * b));
        }
    }

    #[test]
    fn cells_round_trip_through_json(
        t in prop::sample::select(vec![3u32, 5, 7]),
        n in 1u64..500,
        m in 1u64..500,
        family in family(),
    ) {
        let c = ctx(t);
        let cell = TableCell::evaluate(&c, ConstructionParams::new(t, n, m, family).unwrap()).unwrap();
        let json = serde_json::to_string(&cell.to_record()).unwrap();
        let rec: CellRecord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(TableCell::from_record(&rec).unwrap(), cell.clone());
        if let Some(poly) = cell.poly() {
            prop_assert_eq!(&poly.to_string().parse::<SparsePoly>().unwrap(), poly);
        }
    }
}
