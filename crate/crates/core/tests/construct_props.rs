mod common;

use common::group;
use proptest::prelude::*;
use so5_core::construct::catalog::catalog;
use so5_core::construct::presentation::todd_coxeter;
use so5_core::construct::{central_product, parse, DEFAULT_TC_BUDGET};
use so5_core::orthomodels::{
    diagonal_sign_changes, elementary_abelian_fixed_profile, model, preserves, MODEL_NAMES,
};
use so5_core::subgroups::center;
use so5_core::{build, Error};

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn family_orders() {
    for n in 1..=12u64 {
        assert_eq!(group(&format!("cyclic({n})")).order(), n);
    }
    for n in 3..=10u64 {
        assert_eq!(group(&format!("dihedral({n})")).order(), 2 * n);
    }
    for n in 2..=7u64 {
        assert_eq!(group(&format!("sym({n})")).order(), factorial(n));
    }
    for n in 3..=8u64 {
        assert_eq!(group(&format!("alt({n})")).order(), factorial(n) / 2);
    }
    for n in [8u64, 12, 16, 20, 24, 28] {
        assert_eq!(group(&format!("binary_dihedral({n})")).order(), n);
    }
    for (p, k) in [(2u64, 1u32), (2, 4), (3, 3), (5, 2), (7, 1)] {
        assert_eq!(group(&format!("elem_ab({p},{k})")).order(), p.pow(k));
    }
    for n in 1..=5u64 {
        assert_eq!(group(&format!("wreath_z2({n})")).order(), (1 << n) * factorial(n));
    }
    for (a, b, c) in [(3u64, 1u64, 1u64), (5, 3, 1), (7, 5, 3), (7, 3, 1)] {
        assert_eq!(group(&format!("milnor_Q({a},{b},{c})")).order(), 8 * a * b * c);
    }
    for (a, b) in [(3u64, 1u64), (3, 5), (5, 3)] {
        assert_eq!(group(&format!("question_group({a},{b})")).order(), 16 * a * b);
    }
    for (e, n) in [
        ("binary_tetrahedral", 24),
        ("binary_octahedral", 48),
        ("binary_icosahedral", 120),
        ("psl2(7)", 168),
        ("psl2(11)", 660),
        ("weyl_w0", 960),
        ("weyl_w", 1920),
        ("weyl_wtilde", 3840),
        ("simplex_s6", 720),
    ] {
        assert_eq!(group(e).order(), n, "{e}");
    }
}

#[test]
fn central_product_center() {
    for (a, b) in [("q8", "q8"), ("binary_tetrahedral", "q8"), ("binary_icosahedral", "binary_icosahedral"), ("binary_dihedral(12)", "cyclic(4)")] {
        let (ga, gb) = (group(a), group(b));
        let cp = central_product(&ga, &gb).unwrap();
        assert_eq!(cp.group.order(), ga.order() * gb.order() / 2, "{a}∘{b}");
        let z = center(&cp.group).unwrap().order();
        let want = center(&ga).unwrap().order() * center(&gb).unwrap().order() / 2;
        assert_eq!(z, want, "{a}∘{b}");
    }
}

#[test]
fn bad_expressions_are_rejected() {
    for src in ["sym(", "cyclic(0)", "elem_ab(4,2)", "nope", "product(q8)", "semidirect(q8, q8, deleted_perm)", "from_perms(\"(1 1)\")"] {
        assert!(build(src).is_err(), "{src}");
    }
    assert!(matches!(build("sym(3"), Err(Error::Parse { .. })));
}

#[test]
fn coset_enumeration_recovers_catalog_orders() {
    for entry in catalog() {
        let t = todd_coxeter(&entry.presentation, &[], DEFAULT_TC_BUDGET).unwrap();
        assert_eq!(t.index() as u64, entry.order, "{}", entry.name);
        assert_eq!(t.group().unwrap().order(), entry.order, "{}", entry.name);
    }
}

#[test]
fn orthogonal_models_are_faithful_and_invariant() {
    for name in MODEL_NAMES {
        let rep = model(name).unwrap();
        for m in rep.generators() {
            assert!(preserves(m, rep.gram()), "{name}");
        }
        assert_eq!(rep.matrix_group_order() as u64, rep.group().order(), "{name}");
    }
    assert!(!model("wtilde").unwrap().is_orientation_preserving());
    assert!(model("w").unwrap().is_orientation_preserving());
    assert!(model("w0").unwrap().is_orientation_preserving());

    let w = model("w").unwrap();
    let mut profile = elementary_abelian_fixed_profile(&w, &diagonal_sign_changes()).unwrap();
    profile.dedup();
    assert_eq!(profile, [0, 2]);
    let full = elementary_abelian_fixed_profile(&w, &diagonal_sign_changes()).unwrap();
    assert_eq!(full.iter().filter(|&&d| d == 0).count(), 5);
    assert_eq!(full.iter().filter(|&&d| d == 2).count(), 10);
}

fn arb_expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (1..9usize).prop_map(|n| format!("cyclic({n})")),
        (3..6usize).prop_map(|n| format!("dihedral({n})")),
        (2..5usize).prop_map(|n| format!("sym({n})")),
        Just("q8".to_string()),
        Just("alt(4)".to_string()),
        (1..3usize).prop_map(|k| format!("elem_ab(2,{k})")),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| {
        proptest::collection::vec(inner, 2..3).prop_map(|v| format!("product({})", v.join(",  ")))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn printing_round_trips(src in arb_expr()) {
        let e = parse(&src).unwrap();
        let printed = e.to_string();
        let again = parse(&printed).unwrap();
        prop_assert_eq!(again.to_string(), printed.clone());
        prop_assert_eq!(build(&printed).unwrap().order(), build(&src).unwrap().order());
    }

    #[test]
    fn product_orders_multiply(a in 1..7usize, b in 2..5usize) {
        let g = build(&format!("product(cyclic({a}), sym({b}))")).unwrap();
        prop_assert_eq!(g.order(), a as u64 * factorial(b as u64));
    }
}
