//! Named checks used by the fact manifest. Each returns an observed value, compared against
//! the manifest's expectation, and free-form supporting detail.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use so5_core::chartab::real::real_irreducibles;
use so5_core::cohom::named_module;
use so5_core::construct::central_product;
use so5_core::orthomodels::{
    self, build_w, build_wtilde, diagonal_sign_changes, elementary_abelian_fixed_profile,
    fixed_sphere_dim, normalizer_in_signed_perms,
};
use so5_core::structure::{
    automorphism_group, factorwise_and_swap, subgroup_classes_isomorphic_to, verify_automorphisms,
};
use so5_core::subgroups::{centralizer, fitting, intersection, is_nilpotent, is_perfect};
use so5_core::{
    character_table, classify_theorem, conjugacy_classes, embeds_orthogonally, h1, h2, isomorphic,
    normal_structure, splits, Error, PermGroup, Permutation, Result, Variant,
};

use crate::presentations::presentation_for;
use crate::Settings;

pub(crate) const PREDICATES: &[&str] = &[
    "a5_classes",
    "aut",
    "aut_central_product",
    "brauer_real_5",
    "classify",
    "complement",
    "embeds",
    "fitting",
    "fixed_dim_occurs",
    "fixed_profile",
    "h1",
    "h2",
    "has_klein_four",
    "irreducible_degrees",
    "is_nilpotent",
    "is_perfect",
    "isomorphic",
    "minus_identity_factor",
    "normal_structure",
    "normalizer_signed",
    "order",
    "twisted_simplex",
];

fn str_arg<'a>(args: &'a Value, key: &str) -> Result<&'a str> {
    args.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::arg(format!("missing string argument {key:?}")))
}

fn usize_arg(args: &Value, key: &str) -> Result<usize> {
    args.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| Error::arg(format!("missing integer argument {key:?}")))
}

fn str_list<'a>(args: &'a Value, key: &str) -> Result<Vec<&'a str>> {
    args.get(key)
        .and_then(Value::as_array)
        .and_then(|a| a.iter().map(Value::as_str).collect::<Option<Vec<_>>>())
        .ok_or_else(|| Error::arg(format!("missing string list argument {key:?}")))
}

fn group(s: &Settings, args: &Value) -> Result<PermGroup> {
    s.build(str_arg(args, "expr")?)
}

/// Signed permutation of five coordinates for a diagonal sign vector: point i is +e_{i+1}
/// and point i + 5 is −e_{i+1}.
fn sign_change(signs: &[i64]) -> Result<Permutation> {
    if signs.len() != 5 || signs.iter().any(|&x| x != 1 && x != -1) {
        return Err(Error::arg("sign vectors have five entries ±1"));
    }
    let mut images: Vec<u32> = (0..10).collect();
    for (i, &x) in signs.iter().enumerate() {
        if x == -1 {
            images.swap(i, i + 5);
        }
    }
    Permutation::from_images(images)
}

fn profile_group(rep: &orthomodels::OrthRep, args: &Value) -> Result<PermGroup> {
    match args.get("signs") {
        None => Ok(diagonal_sign_changes()),
        Some(v) => {
            let vecs: Vec<Vec<i64>> = serde_json::from_value(v.clone())
                .map_err(|e| Error::arg(format!("signs: {e}")))?;
            let gens = vecs.iter().map(|s| sign_change(s)).collect::<Result<Vec<_>>>()?;
            rep.group().subgroup(gens)
        }
    }
}

fn fixed_histogram(args: &Value) -> Result<BTreeMap<String, usize>> {
    let rep = orthomodels::model(str_arg(args, "model")?)?;
    let a = profile_group(&rep, args)?;
    let mut hist = BTreeMap::new();
    for d in elementary_abelian_fixed_profile(&rep, &a)? {
        *hist.entry(d.to_string()).or_insert(0) += 1;
    }
    Ok(hist)
}

fn has_klein_four(g: &PermGroup) -> Result<bool> {
    let c = conjugacy_classes(g)?;
    for (k, x) in c.representatives.iter().enumerate() {
        if c.element_orders[k] != 2 {
            continue;
        }
        let cent = centralizer(g, std::slice::from_ref(x))?;
        if cent.elements()?.iter().any(|y| y.order() == 2 && y != x) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn coordinate_permutations() -> Vec<Permutation> {
    ["(1 2)(6 7)", "(1 2 3 4 5)(6 7 8 9 10)"]
        .iter()
        .map(|s| Permutation::parse_cycles(s, Some(10)).expect("static"))
        .collect()
}

fn minus_identity() -> Permutation {
    Permutation::parse_cycles("(1 6)(2 7)(3 8)(4 9)(5 10)", Some(10)).expect("static")
}

pub(crate) fn evaluate(name: &str, args: &Value, s: &Settings) -> Result<(Value, Value)> {
    let none = Value::Null;
    Ok(match name {
        "order" => (json!(group(s, args)?.order()), none),
        "is_perfect" => (json!(is_perfect(&group(s, args)?)?), none),
        "is_nilpotent" => (json!(is_nilpotent(&group(s, args)?)?), none),
        "fitting" => {
            let f = fitting(&group(s, args)?)?;
            let elementary = f.is_abelian() && f.generators().iter().all(|x| x.order() <= 2);
            (json!({"order": f.order(), "elementary_abelian": elementary}), none)
        }
        "normal_structure" => {
            let ns = normal_structure(&group(s, args)?)?;
            (
                json!({
                    "E": ns.e.order(),
                    "F": ns.f.order(),
                    "F_star": ns.f_star.order(),
                    "F_star_contains_centralizer": ns.self_centralizing,
                }),
                ns.to_json(),
            )
        }
        "has_klein_four" => (json!(has_klein_four(&group(s, args)?)?), none),
        "embeds" => {
            let g = group(s, args)?;
            let variant: Variant = str_arg(args, "variant")?.parse()?;
            let w = embeds_orthogonally(&g, usize_arg(args, "dim")?, variant)?;
            let detail = match &w {
                Some(w) => w.to_json(&real_irreducibles(&*character_table(&g)?)),
                None => none,
            };
            (json!(w.is_some()), detail)
        }
        "isomorphic" => {
            let g = group(s, args)?;
            let h = s.build(str_arg(args, "other")?)?;
            let iso = isomorphic(&g, &h)?;
            let detail = iso.as_ref().map_or(Value::Null, |f| {
                json!(f.gen_images.iter().map(ToString::to_string).collect::<Vec<_>>())
            });
            (json!(iso.is_some()), detail)
        }
        "minus_identity_factor" => {
            let wt = build_wtilde();
            let w = build_w();
            let z = minus_identity();
            let m = wt
                .matrix_of(&z)
                .ok_or_else(|| Error::arg("−I is not a signed permutation of the model"))?;
            // an orthogonal involution without fixed vectors is −I
            let is_minus_identity = z.order() == 2 && fixed_sphere_dim(&wt, m)? == -1;
            let central = wt.group().generators().iter().all(|x| x.commutes_with(&z));
            let outside = !w.group().has(&z);
            let normal = w.group().is_normal_in(wt.group());
            let index_two = wt.group().order() == 2 * w.group().order();
            (
                json!({
                    "minus_identity": is_minus_identity,
                    "central": central,
                    "outside_W": outside,
                    "W_normal_of_index_2": normal && index_two,
                }),
                none,
            )
        }
        "twisted_simplex" => {
            let rep = orthomodels::simplex_s6(true);
            (
                json!({
                    "order": rep.group().order(),
                    "orientation_preserving": rep.is_orientation_preserving(),
                    "faithful": rep.matrix_group_order() as u64 == rep.group().order(),
                }),
                none,
            )
        }
        "fixed_profile" => (json!(fixed_histogram(args)?), none),
        "fixed_dim_occurs" => {
            let hist = fixed_histogram(args)?;
            let d = usize_arg(args, "dim")?.to_string();
            (json!(hist.contains_key(&d)), json!(hist))
        }
        "h1" | "h2" => {
            let g = s.build(str_arg(args, "group")?)?;
            let p = presentation_for(&g, None, s.tc_budget)?;
            let mut out = BTreeMap::new();
            for m in str_list(args, "modules")? {
                let module = named_module(m, &g)?;
                let d = if name == "h1" {
                    h1(&module, &p)?.dimension
                } else {
                    h2(&module, &p)?
                };
                out.insert(m.to_string(), d);
            }
            (json!(out), none)
        }
        "a5_classes" => {
            let sub = s.build(str_arg(args, "sub")?)?;
            let c = subgroup_classes_isomorphic_to(&sub, &group(s, args)?)?;
            (json!(c.count()), json!({"conjugates": c.class_sizes}))
        }
        "aut" => {
            let a = automorphism_group(&group(s, args)?)?;
            (
                json!({"order": a.order, "inner_order": a.inner_order, "outer_order": a.outer_order()}),
                a.to_json(),
            )
        }
        "aut_central_product" => {
            let f = s.build(str_arg(args, "factor")?)?;
            let cp = central_product(&f, &f)?;
            let claimed = factorwise_and_swap(&f, &cp)?;
            let a = verify_automorphisms(&cp.group, &claimed)?;
            (
                json!({
                    "validated": claimed.len(),
                    "inner_order": a.inner_order,
                    "order_at_least": a.order,
                }),
                a.to_json(),
            )
        }
        "complement" => {
            let g = group(s, args)?;
            let n = match str_arg(args, "normal")? {
                "fitting" => fitting(&g)?,
                other => return Err(Error::arg(format!("unknown normal subgroup {other:?}"))),
            };
            let want = s.build(str_arg(args, "iso_to")?)?;
            match splits(&g, &n)? {
                None => (json!({"splits": false}), none),
                Some(h) => {
                    let meet = intersection(&h, &n)?.order();
                    let iso = isomorphic(&h, &want)?.is_some();
                    (
                        json!({
                            "splits": true,
                            "trivial_intersection": meet == 1,
                            "orders_multiply": h.order() * n.order() == g.order(),
                            "isomorphic": iso,
                        }),
                        json!({"complement": h.generators().iter().map(ToString::to_string).collect::<Vec<_>>()}),
                    )
                }
            }
        }
        "classify" => {
            let r = classify_theorem(&group(s, args)?)?;
            (json!(r.matched()), r.to_json())
        }
        "irreducible_degrees" => (json!(character_table(&group(s, args)?)?.degrees), none),
        "brauer_real_5" => {
            let mut out = BTreeMap::new();
            for e in str_list(args, "exprs")? {
                let g = s.build(e)?;
                let t = character_table(&g)?;
                out.insert(
                    e.to_string(),
                    json!({
                        "complex_irreducible_5": t.degrees.contains(&5),
                        "faithful_real_5": embeds_orthogonally(&g, 5, Variant::O)?.is_some(),
                    }),
                );
            }
            (json!(out), none)
        }
        "normalizer_signed" => {
            let f = diagonal_sign_changes();
            let n = normalizer_in_signed_perms(&f)?;
            let wt = build_wtilde();
            let mut gens = f.generators().to_vec();
            gens.extend(coordinate_permutations());
            let fp = wt.group().subgroup(gens.clone())?;
            gens.push(minus_identity());
            let fpm = wt.group().subgroup(gens)?;
            (
                json!({
                    "order": n.order(),
                    "all_signed_permutations": n.same_group(wt.group()),
                    "F_and_permutations": fp.order(),
                    "F_permutations_and_minus_identity": fpm.order(),
                }),
                none,
            )
        }
        _ => return Err(Error::arg(format!("unknown predicate {name:?}"))),
    })
}
