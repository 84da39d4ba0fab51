mod common;

use std::collections::HashMap;

use common::{closure, group, CORPUS};
use proptest::prelude::*;
use so5_core::{conjugacy_classes, PermGroup, Permutation};

#[test]
fn order_and_membership_match_enumeration() {
    for expr in CORPUS {
        let g = group(expr);
        let all = closure(&g);
        assert_eq!(g.order(), all.len() as u64, "{expr}");
        for x in all.iter().take(200) {
            assert!(g.contains(x).unwrap(), "{expr}: {x}");
        }
        // a transposition lies in G iff it shows up in the closure
        let n = g.degree();
        for a in 0..n.min(6) {
            for b in a + 1..n.min(6) {
                let t = Permutation::from_cycles(n, &[&[a, b]]).unwrap();
                assert_eq!(g.contains(&t).unwrap(), all.contains(&t), "{expr}: {t}");
            }
        }
    }
}

#[test]
fn class_data_matches_brute_force() {
    for expr in CORPUS.iter().filter(|e| group(e).order() <= 1000) {
        let g = group(expr);
        let c = conjugacy_classes(&g).unwrap();
        let all: Vec<Permutation> = closure(&g).into_iter().collect();
        let mut class_of: HashMap<&Permutation, usize> = HashMap::new();
        for (k, rep) in c.representatives.iter().enumerate() {
            for x in &all {
                if class_of.contains_key(x) {
                    continue;
                }
                if all.iter().any(|y| &rep.conjugate_by(y) == x) {
                    class_of.insert(x, k);
                }
            }
        }
        assert_eq!(class_of.len(), all.len(), "{expr}: classes cover G");
        for k in 0..c.len() {
            let size = class_of.values().filter(|&&j| j == k).count() as u64;
            assert_eq!(size, c.sizes[k], "{expr}: class {k}");
            assert_eq!(c.representatives[k].order(), c.element_orders[k]);
        }
        for x in all.iter().take(100) {
            assert_eq!(c.class_of(x), Some(class_of[x]), "{expr}: {x}");
        }
        assert!(c.representatives[0].is_identity());
    }
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_groups_match_closure(gens in proptest::collection::vec(arb_perm(7), 1..4), probe in arb_perm(7)) {
        let g = PermGroup::new(7, gens).unwrap();
        let all = closure(&g);
        prop_assert_eq!(g.order(), all.len() as u64);
        prop_assert_eq!(g.contains(&probe).unwrap(), all.contains(&probe));
        prop_assert_eq!(g.order() % g.orbit(0).len() as u64, 0);
    }

    #[test]
    fn composition_laws(a in arb_perm(9), b in arb_perm(9), c in arb_perm(9)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
        prop_assert!(a.pow(a.order() as i64).is_identity());
        let cyc = a.cycles().iter().map(|c| c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")).map(|s| format!("({s})")).collect::<String>();
        let back = Permutation::parse_cycles(if cyc.is_empty() { "()" } else { &cyc }, Some(9)).unwrap();
        prop_assert_eq!(back, a);
    }
}
