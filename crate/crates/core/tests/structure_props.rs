mod common;

use std::collections::{HashMap, HashSet};

use common::{closure, group};
use so5_core::structure::{automorphism_group, e_type, subgroup_classes_isomorphic_to, ETYPE_NAMES};
use so5_core::subgroups::{center, centralizer, intersection};
use so5_core::{isomorphic, normal_structure, splits, PermGroup, Permutation};

/// |Aut(G)| by trying every tuple of generator images.
fn aut_order_brute(g: &PermGroup) -> u64 {
    let els: Vec<Permutation> = closure(g).into_iter().collect();
    let gens = g.generators();
    let mut count = 0;
    let mut idx = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<&Permutation> = idx.iter().map(|&i| &els[i]).collect();
        let mut map: HashMap<Permutation, Permutation> = HashMap::from([(g.identity(), g.identity())]);
        let mut queue = vec![g.identity()];
        let mut ok = true;
        'bfs: while let Some(x) = queue.pop() {
            let fx = map[&x].clone();
            for (s, gen) in gens.iter().enumerate() {
                let y = x.then(gen);
                let fy = fx.then(imgs[s]);
                match map.get(&y) {
                    Some(old) if *old != fy => {
                        ok = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                    None => {
                        map.insert(y.clone(), fy);
                        queue.push(y);
                    }
                }
            }
        }
        if ok && map.values().collect::<HashSet<_>>().len() == els.len() {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return count;
            }
            idx[k] += 1;
            if idx[k] < els.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn automorphism_orders_match_enumeration() {
    for (expr, want) in [
        ("cyclic(5)", 4),
        ("cyclic(8)", 4),
        ("cyclic(12)", 4),
        ("sym(3)", 6),
        ("dihedral(4)", 8),
        ("q8", 24),
        ("elem_ab(2,2)", 6),
        ("alt(4)", 24),
        ("sym(4)", 24),
        ("product(cyclic(2), cyclic(4))", 8),
    ] {
        let g = group(expr);
        let a = automorphism_group(&g).unwrap();
        assert!(a.full, "{expr}");
        assert_eq!(a.order, aut_order_brute(&g), "{expr}");
        assert_eq!(a.order, want, "{expr}");
        assert_eq!(a.inner_order * center(&g).unwrap().order(), g.order(), "{expr}");
    }
}

#[test]
fn isomorphism_is_reflexive_and_symmetric() {
    let pairs = [
        ("binary_dihedral(8)", "q8", true),
        ("dihedral(3)", "sym(3)", true),
        ("psl2(7)", "psl27_presented", true),
        ("binary_tetrahedral", "sym(4)", false),
        ("alt(4)", "dihedral(6)", false),
        ("product(cyclic(2), cyclic(3))", "cyclic(6)", true),
        ("wreath_z2(2)", "dihedral(4)", true),
        ("elem_ab(2,3)", "product(cyclic(2), cyclic(4))", false),
        ("semidirect(elem_ab(2,4), alt(5), deleted_perm)", "weyl_w0", true),
        ("semidirect(elem_ab(2,4), alt(5), deleted_perm)", "semidirect(elem_ab(2,4), alt(5), natural_sl24)", false),
    ];
    for (a, b, want) in pairs {
        let (g, h) = (group(a), group(b));
        assert!(isomorphic(&g, &g).unwrap().is_some(), "{a}");
        let gh = isomorphic(&g, &h).unwrap();
        let hg = isomorphic(&h, &g).unwrap();
        assert_eq!(gh.is_some(), want, "{a} vs {b}");
        assert_eq!(hg.is_some(), want, "{b} vs {a}");
        if let Some(f) = gh {
            // generator images generate the target
            let img = h.subgroup(f.gen_images.clone()).unwrap();
            assert!(img.same_group(&h));
        }
    }
}

#[test]
fn complements_are_complements() {
    for (expr, normal) in [
        ("sym(4)", "alt(4)"),
        ("sym(3)", "alt(3)"),
        ("weyl_w0", "fitting"),
        ("product(alt(5), cyclic(2))", "center"),
    ] {
        let g = group(expr);
        let n = match normal {
            "fitting" => so5_core::subgroups::fitting(&g).unwrap(),
            "center" => center(&g).unwrap(),
            e => g.subgroup(group(e).generators().iter().map(|x| x.resize(g.degree()).unwrap()).collect()).unwrap(),
        };
        let h = splits(&g, &n).unwrap().unwrap();
        assert!(intersection(&h, &n).unwrap().is_trivial(), "{expr}");
        assert_eq!(h.order() * n.order(), g.order(), "{expr}");
    }
    // Q8 does not split over its center
    let q = group("q8");
    assert!(splits(&q, &center(&q).unwrap()).unwrap().is_none());
}

#[test]
fn generalized_fitting_is_self_centralizing() {
    for expr in [
        "alt(5)",
        "sym(5)",
        "q8",
        "binary_icosahedral",
        "weyl_w0",
        "product(alt(5), cyclic(2))",
        "central_product(q8, q8)",
        "milnor_Q(5,3,1)",
        "sym(4)",
    ] {
        let g = group(expr);
        let ns = normal_structure(&g).unwrap();
        assert!(ns.self_centralizing, "{expr}");
        let c = centralizer(&g, ns.f_star.generators()).unwrap();
        assert!(c.is_subgroup_of(&ns.f_star), "{expr}");
        assert!(ns.f.is_normal_in(&g) && ns.e.is_normal_in(&g), "{expr}");
        let t = e_type(&g).unwrap();
        assert!(ETYPE_NAMES.contains(&t.as_str()), "{expr}: {t}");
    }
}

#[test]
fn a5_subgroup_classes() {
    let a5 = group("alt(5)");
    assert_eq!(subgroup_classes_isomorphic_to(&a5, &group("sym(5)")).unwrap().count(), 1);
    assert_eq!(subgroup_classes_isomorphic_to(&a5, &group("sym(6)")).unwrap().count(), 2);
    assert_eq!(subgroup_classes_isomorphic_to(&a5, &group("alt(6)")).unwrap().count(), 2);
    let c = subgroup_classes_isomorphic_to(&a5, &group("alt(8)")).unwrap();
    assert_eq!(c.count(), 2);
    assert!(c.class_sizes.iter().all(|&n| n > 0));
}
