//! Acceptance criteria, one line each. Exits nonzero when any criterion fails.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use num_rational::Ratio;
use so5_cli::facts::{parse_manifest, run_suite, Report, Status, BUILTIN_MANIFEST};
use so5_cli::Settings;
use so5_core::cohom::named_module;
use so5_core::construct::catalog::{catalog, verified_a5, verified_a5_alt, witness};
use so5_core::orthomodels::{diagonal_sign_changes, elementary_abelian_fixed_profile, model, simplex_s6};
use so5_core::structure::{automorphism_group, subgroup_classes_isomorphic_to};
use so5_core::subgroups::{fitting, intersection, is_perfect};
use so5_core::{
    build, character_table, embeds_orthogonally, h1, h2, isomorphic, splits, Cyclotomic, GModule, PermGroup,
    Permutation, Variant,
};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn g(expr: &str) -> Result<PermGroup, String> {
    build(expr).map_err(|e| format!("{expr}: {e}"))
}

fn e<T>(r: so5_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn closure(g: &PermGroup) -> HashSet<Permutation> {
    let mut seen = HashSet::from([g.identity()]);
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

fn suite(filter: Option<&str>) -> Result<Report, String> {
    let facts = e(parse_manifest(BUILTIN_MANIFEST))?;
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    e(run_suite(&facts, filter, jobs, &Settings::default()))
}

fn failures(r: &Report) -> Vec<String> {
    r.results
        .iter()
        .filter(|f| f.status == Status::Fail || f.status == Status::Inconclusive)
        .map(|f| format!("{} (expected {}, observed {})", f.id, f.expected, f.observed))
        .collect()
}

fn c1() -> Check {
    let mut slowest = Duration::ZERO;
    for (expr, n) in [
        ("weyl_wtilde", 3840),
        ("weyl_w", 1920),
        ("weyl_w0", 960),
        ("central_product(binary_icosahedral, binary_icosahedral)", 7200),
        ("milnor_Q(3,1,1)", 24),
    ] {
        let t = Instant::now();
        let order = g(expr)?.order();
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        ensure(order == n, format!("{expr}: order {order}, expected {n}"))?;
        ensure(dt < Duration::from_secs(1), format!("{expr}: {dt:?}"))?;
    }
    Ok(format!("slowest {slowest:.2?}"))
}

fn c2() -> Check {
    let a = e(automorphism_group(&g("alt(5)")?))?;
    ensure(a.order == 120 && a.outer_order() == 2, format!("|Aut| {}, |Out| {}", a.order, a.outer_order()))?;
    Ok("|Aut(A5)| = 120, |Out(A5)| = 2".into())
}

fn c3() -> Check {
    let x = g("semidirect(elem_ab(2,4), alt(5), deleted_perm)")?;
    let y = g("semidirect(elem_ab(2,4), alt(5), natural_sl24)")?;
    ensure(e(is_perfect(&x))? && e(is_perfect(&y))?, "not both perfect")?;
    ensure(x.order() == 960 && y.order() == 960, "orders")?;
    ensure(e(isomorphic(&x, &y))?.is_none(), "the two perfect groups are isomorphic")?;
    let p = e(verified_a5())?;
    let dp = e(named_module("deleted_perm", p.target()))?;
    let sl = e(named_module("natural_sl24", p.target()))?;
    ensure(e(h1(&dp, &p))?.dimension == 0, "h1(deleted_perm) ≠ 0")?;
    ensure(e(h2(&dp, &p))? == 0 && e(h2(&sl, &p))? == 0, "h2 ≠ 0")?;
    for (expr, comp) in [("weyl_w", "sym(5)"), ("weyl_w0", "alt(5)")] {
        let w = g(expr)?;
        let f = e(fitting(&w))?;
        ensure(f.order() == 16, format!("{expr}: |F| = {}", f.order()))?;
        let h = e(splits(&w, &f))?.ok_or(format!("{expr}: no complement"))?;
        ensure(e(intersection(&h, &f))?.is_trivial() && h.order() * 16 == w.order(), "not a complement")?;
        ensure(e(isomorphic(&h, &g(comp)?))?.is_some(), format!("{expr}: complement is not {comp}"))?;
    }
    Ok("non-isomorphic, h1 = 0, h2 = 0, 0; both split".into())
}

fn c4() -> Check {
    let a5 = g("alt(5)")?;
    let n8 = e(subgroup_classes_isomorphic_to(&a5, &g("alt(8)")?))?.count();
    let nw = e(subgroup_classes_isomorphic_to(&a5, &g("weyl_w0")?))?.count();
    ensure(n8 == 2 && nw == 1, format!("A8: {n8}, W0: {nw}"))?;
    Ok("A8: 2 classes, W0: 1 class".into())
}

fn c5() -> Check {
    let prof = e(elementary_abelian_fixed_profile(&e(model("w"))?, &diagonal_sign_changes()))?;
    let zeros = prof.iter().filter(|&&d| d == 0).count();
    let twos = prof.iter().filter(|&&d| d == 2).count();
    ensure(zeros == 5 && twos == 10 && prof.len() == 15, format!("profile {prof:?}"))?;
    Ok("5 of dimension 0, 10 of dimension 2".into())
}

fn c6() -> Check {
    let mut wrong = Vec::new();
    let cases: &[(&str, usize, Variant, bool)] = &[
        ("alt(5)", 5, Variant::SO, true),
        ("alt(6)", 5, Variant::SO, true),
        ("sym(6)", 5, Variant::SO, true),
        ("product(sym(5), cyclic(2))", 4, Variant::O, true),
        ("product(alt(5), cyclic(2), cyclic(2))", 4, Variant::O, true),
        ("psl27_presented", 5, Variant::O, false),
        ("milnor_Q(3,1,1)", 4, Variant::O, false),
        ("question_group(3,5)", 4, Variant::SO, false),
        ("psl2(11)", 5, Variant::O, false),
    ];
    for &(expr, n, v, want) in cases {
        let t = Instant::now();
        let got = e(embeds_orthogonally(&g(expr)?, n, v))?.is_some();
        let limit = if expr == "psl2(11)" { 300 } else { 120 };
        if got != want || t.elapsed() > Duration::from_secs(limit) {
            wrong.push(format!("{expr} in {v:?}({n}): {got}"));
        }
    }
    let tw = simplex_s6(true);
    if !(tw.is_orientation_preserving() && tw.group().order() == 720 && tw.matrix_group_order() == 720) {
        wrong.push("twisted simplex model is not a faithful SO(5) action of S6".into());
    }
    let deg = character_table(&g("psl2(11)")?).map_err(|e| e.to_string())?.degrees.contains(&5);
    if !deg {
        wrong.push("psl2(11) has no complex irreducible of degree 5".into());
    }
    ensure(wrong.is_empty(), wrong.join("; "))?;
    Ok(format!("{} embedding decisions", cases.len()))
}

fn corpus() -> Vec<&'static str> {
    vec![
        "cyclic(1)", "cyclic(7)", "cyclic(12)", "dihedral(3)", "dihedral(4)", "dihedral(6)", "sym(3)",
        "sym(4)", "sym(5)", "sym(6)", "alt(4)", "alt(5)", "alt(6)", "q8", "elem_ab(2,3)", "elem_ab(3,2)",
        "binary_dihedral(8)", "binary_dihedral(12)", "binary_dihedral(16)", "binary_dihedral(20)",
        "binary_tetrahedral", "binary_octahedral", "binary_icosahedral", "psl2(7)", "psl27_presented",
        "product(sym(3), cyclic(2))", "product(alt(5), cyclic(2))", "product(alt(4), cyclic(3))",
        "semidirect(elem_ab(2,4), alt(5), deleted_perm)", "semidirect(elem_ab(2,4), alt(5), natural_sl24)",
        "semidirect(cyclic(5), cyclic(4), dihedral_inv)", "wreath_z2(2)", "wreath_z2(3)", "wreath_z2(4)",
        "weyl_w0", "weyl_w", "milnor_Q(3,1,1)", "milnor_Q(5,3,1)", "question_group(3,5)",
        "central_product(q8, q8)", "central_product(binary_icosahedral, binary_icosahedral)",
    ]
}

fn c7() -> Check {
    let exprs = corpus();
    for expr in &exprs {
        let t = e(character_table(&g(expr)?))?;
        let sq: u64 = t.degrees.iter().map(|d| d * d).sum();
        ensure(sq == t.order(), format!("{expr}: Σd² = {sq}"))?;
        let weight = |j: usize| Ratio::from_integer(t.classes.sizes[j] as i128);
        for a in 0..t.len() {
            for b in a..t.len() {
                let s = (0..t.len()).fold(Cyclotomic::zero(), |acc, j| {
                    &acc + &(t.value(a, j) * &t.value(b, j).conj()).scale(weight(j))
                });
                let want = if a == b { Cyclotomic::int(t.order() as i128) } else { Cyclotomic::zero() };
                ensure(s == want, format!("{expr}: rows {a}, {b}"))?;
            }
        }
        for j in 0..t.len() {
            for k in j..t.len() {
                let s = (0..t.len()).fold(Cyclotomic::zero(), |acc, r| &acc + &(t.value(r, j) * &t.value(r, k).conj()));
                let want = if j == k {
                    Cyclotomic::int(t.classes.centralizer_order(j) as i128)
                } else {
                    Cyclotomic::zero()
                };
                ensure(s == want, format!("{expr}: columns {j}, {k}"))?;
            }
        }
    }
    Ok(format!("{} groups", exprs.len()))
}

fn act(m: &GModule, v: &[bool], x: &Permutation) -> Vec<bool> {
    m.matrix_of(x).expect("element").transpose().mul_vec(v).expect("dimension")
}

/// dim H¹ from the full list of crossed homomorphisms.
fn h1_brute(m: &GModule) -> usize {
    let gr = m.group();
    let gens = gr.generators();
    let d = m.dim();
    let bits = gens.len() * d;
    let mut count = 0u64;
    for mask in 0u64..1 << bits {
        let val = |s: usize| (0..d).map(|i| mask >> (s * d + i) & 1 == 1).collect::<Vec<_>>();
        let mut map: HashMap<Permutation, Vec<bool>> = HashMap::from([(gr.identity(), vec![false; d])]);
        let mut queue = vec![gr.identity()];
        let mut ok = true;
        'bfs: while let Some(x) = queue.pop() {
            let dx = map[&x].clone();
            for (s, gen) in gens.iter().enumerate() {
                let y = x.then(gen);
                let dy: Vec<bool> = act(m, &dx, gen).iter().zip(val(s)).map(|(a, b)| a ^ b).collect();
                match map.get(&y) {
                    Some(old) if *old != dy => {
                        ok = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                    None => {
                        map.insert(y.clone(), dy);
                        queue.push(y);
                    }
                }
            }
        }
        count += u64::from(ok);
    }
    count.trailing_zeros() as usize - (d - m.fixed_space().len())
}

fn c8() -> Check {
    let mut checked = 0;
    for expr in corpus() {
        let gr = g(expr)?;
        if gr.order() > 10_000 {
            continue;
        }
        let all = closure(&gr);
        ensure(all.len() as u64 == gr.order(), format!("{expr}: order"))?;
        for x in all.iter().step_by(7).take(50) {
            ensure(e(gr.contains(x))?, format!("{expr}: {x} not a member"))?;
        }
        let t = e(character_table(&gr))?;
        for r in 0..t.len() {
            let s = (0..t.len()).fold(Cyclotomic::zero(), |acc, j| {
                &acc + &t.value(r, t.classes.power_class(j, 2)).scale(Ratio::from_integer(t.classes.sizes[j] as i128))
            });
            let nu = s.scale(Ratio::new(1, t.order() as i128));
            ensure(nu == Cyclotomic::int(t.fs_indicator(r) as i128), format!("{expr}: indicator of row {r}"))?;
        }
        checked += 1;
    }
    let mut h1s = 0;
    for p in [e(verified_a5())?, e(verified_a5_alt())?] {
        for name in ["trivial", "deleted_perm", "natural_sl24"] {
            let m = e(named_module(name, p.target()))?;
            ensure(e(h1(&m, &p))?.dimension == h1_brute(&m), format!("h1 of {name}"))?;
            h1s += 1;
        }
    }
    for entry in catalog() {
        let p = e(witness(&entry))?;
        let m = e(GModule::trivial(p.target(), 1))?;
        ensure(e(h1(&m, &p))?.dimension == h1_brute(&m), format!("h1 for {}", entry.name))?;
        h1s += 1;
    }
    Ok(format!("{checked} groups enumerated, {h1s} h1 values"))
}

fn c9() -> Check {
    let a = suite(Some("classify-*"))?;
    let b = suite(Some("classify-*"))?;
    let (ja, jb) = (a.to_json().to_string(), b.to_json().to_string());
    ensure(ja == jb, "reports differ between runs")?;
    let bad = failures(&a);
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!("{} classifications, identical JSON", a.results.len()))
}

fn c10() -> Check {
    let r = suite(None)?;
    let trusted = r.count(Status::TrustedInput);
    let bad = failures(&r);
    ensure(trusted <= 2, format!("{trusted} trusted-input notices"))?;
    ensure(bad.is_empty(), format!("{} failing: {}", bad.len(), bad.join("; ")))?;
    Ok(format!("{} facts, {} trusted-input", r.results.len(), trusted))
}

fn main() {
    let criteria: [(u32, &str, u64, fn() -> Check); 10] = [
        (1, "orders", 5, c1),
        (2, "Aut(A5)", 10, c2),
        (3, "order-960 extensions", 300, c3),
        (4, "A5 conjugacy classes", 600, c4),
        (5, "fixed-sphere profile", 1, c5),
        (6, "orthogonal embeddings", 1500, c6),
        (7, "character table orthogonality", 600, c7),
        (8, "oracle equivalences", 1800, c8),
        (9, "classifier regression", 1800, c9),
        (10, "fact suite", 1800, c10),
    ];
    let wanted: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (n, name, limit, f) in criteria {
        if !wanted.is_empty() && !wanted.iter().any(|w| name.contains(w.as_str()) || *w == n.to_string()) {
            continue;
        }
        let t = Instant::now();
        let result = f();
        let dt = t.elapsed();
        let result = match result {
            Ok(_) if dt > Duration::from_secs(limit) => Err(format!("took {dt:.2?}, limit {limit}s")),
            other => other,
        };
        match result {
            Ok(msg) => println!("criterion {n:>2} PASS  {name}: {msg} ({dt:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {msg} ({dt:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
