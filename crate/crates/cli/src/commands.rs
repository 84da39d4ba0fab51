use std::fmt::Write as _;

use serde_json::{json, Value};
use so5_core::chartab::real::{embeds_with_table, real_irreducibles};
use so5_core::cohom::named_module;
use so5_core::orthomodels::{self, MODEL_NAMES};
use so5_core::subgroups::{center, is_nilpotent, is_perfect, is_solvable};
use so5_core::{
    character_table, classify_theorem, conjugacy_classes, h1, h2, normal_structure, PermGroup,
    Result, Variant,
};

use crate::presentations::presentation_for;
use crate::{Output, Settings};

fn generators_json(g: &PermGroup) -> Value {
    json!(g.generators().iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn construct(s: &Settings, expr: &str) -> Result<Output> {
    let g = s.build(expr)?;
    let json = json!({
        "expr": expr,
        "order": g.order(),
        "degree": g.degree(),
        "generators": generators_json(&g),
    });
    let mut text = format!("{expr}\n  order   {}\n  degree  {}\n", g.order(), g.degree());
    for x in g.generators() {
        let _ = writeln!(text, "  gen     {x}");
    }
    Ok(Output::ok(text, json))
}

pub fn info(s: &Settings, expr: &str) -> Result<Output> {
    let g = s.build(expr)?;
    let c = conjugacy_classes(&g)?;
    let ns = normal_structure(&g)?;
    let json = json!({
        "expr": expr,
        "order": g.order(),
        "degree": g.degree(),
        "abelian": g.is_abelian(),
        "perfect": is_perfect(&g)?,
        "solvable": is_solvable(&g)?,
        "nilpotent": is_nilpotent(&g)?,
        "center_order": center(&g)?.order(),
        "class_count": c.len(),
        "class_sizes": c.sizes,
        "element_orders": c.element_orders,
        "exponent": c.exponent(),
        "normal_structure": ns.to_json(),
    });
    let text = format!(
        "{expr}\n  order {}  classes {}  exponent {}\n  abelian {}  nilpotent {}  solvable {}  perfect {}\n  |Z| {}  |E| {}  |F| {}  |F*| {}  C(F*) ≤ F*: {}\n",
        g.order(),
        c.len(),
        c.exponent(),
        json["abelian"],
        json["nilpotent"],
        json["solvable"],
        json["perfect"],
        json["center_order"],
        ns.e.order(),
        ns.f.order(),
        ns.f_star.order(),
        ns.self_centralizing,
    );
    Ok(Output::ok(text, json))
}

pub fn chartab(s: &Settings, expr: &str) -> Result<Output> {
    let g = s.build(expr)?;
    let t = character_table(&g)?;
    let mut json = t.to_json();
    json["expr"] = json!(expr);
    let mut text = format!("{expr}: {} classes\n", t.len());
    let width = t
        .irreducibles
        .iter()
        .flatten()
        .map(|v| v.to_string().chars().count())
        .max()
        .unwrap_or(1)
        .max(4);
    let _ = write!(text, "{:>6}", "");
    for k in 0..t.len() {
        let _ = write!(text, " {:>width$}", format!("{}{}", t.classes.element_orders[k], (b'a' + (k % 26) as u8) as char));
    }
    text.push_str("    ind\n");
    for (i, row) in t.irreducibles.iter().enumerate() {
        let _ = write!(text, "{:>6}", format!("χ{}", i + 1));
        for v in row {
            let _ = write!(text, " {:>width$}", v.to_string());
        }
        let _ = writeln!(text, "    {:>3}", t.indicators[i]);
    }
    Ok(Output::ok(text, json))
}

pub fn embed(s: &Settings, expr: &str, dim: usize, variant: &str) -> Result<Output> {
    let variant: Variant = variant.parse()?;
    let g = s.build(expr)?;
    let t = character_table(&g)?;
    let w = embeds_with_table(&t, dim, variant)?;
    let blocks = real_irreducibles(&t);
    let json = json!({
        "expr": expr,
        "dim": dim,
        "variant": variant.to_string(),
        "embeds": w.is_some(),
        "witness": w.as_ref().map(|w| w.to_json(&blocks)),
    });
    let mut text = format!("{expr} → {variant}({dim}): {}\n", w.is_some());
    if let Some(w) = &w {
        for (i, part) in w.parts.iter().enumerate() {
            let desc: Vec<String> = part
                .iter()
                .map(|&(b, m)| {
                    let r = &blocks[b];
                    format!("{}×[dim {} from χ{:?}]", m, r.real_dimension, r.characters.iter().map(|c| c + 1).collect::<Vec<_>>())
                })
                .collect();
            let _ = writeln!(text, "  factor {}: {}", i + 1, desc.join(" + "));
        }
    }
    Ok(Output::ok(text, json))
}

pub fn classify(s: &Settings, expr: &str) -> Result<Output> {
    let g = s.build(expr)?;
    let r = classify_theorem(&g)?;
    let mut json = r.to_json();
    json["expr"] = json!(expr);
    let text = format!(
        "{expr} (order {})\n  cases  {{{}}}\n  E      {}\n  note   case iv: {}\n",
        r.order,
        r.matched().join(", "),
        r.e_type,
        so5_core::structure::IV_READING,
    );
    Ok(Output::ok(text, json))
}

pub fn cohom(
    s: &Settings,
    group: &str,
    module: &str,
    degree: u8,
    presentation: Option<&str>,
) -> Result<Output> {
    let g = s.build(group)?;
    let m = named_module(module, &g)?;
    let p = presentation_for(&g, presentation, s.tc_budget)?;
    let pres = p.presentation();
    let pres_json = json!({
        "generators": pres.generators,
        "relators": pres.relators.iter().map(|r| pres.format_word(r)).collect::<Vec<_>>(),
    });
    let (dim, extra) = match degree {
        1 => {
            let r = h1(&m, &p)?;
            (
                r.dimension,
                json!({"derivations": r.dim_derivations, "principal": r.dim_principal}),
            )
        }
        2 => (h2(&m, &p)?, json!({"method": "dimension shift through the coinduced module"})),
        _ => return Err(so5_core::Error::arg("degree must be 1 or 2")),
    };
    let json = json!({
        "group": group,
        "module": module,
        "module_dimension": m.dim(),
        "degree": degree,
        "dimension": dim,
        "presentation": pres_json,
        "detail": extra,
    });
    let text = format!(
        "dim H^{degree}({group}; {module}) = {dim}   (module dimension {}, presentation ⟨{} | {}⟩)\n",
        m.dim(),
        pres.generators.join(", "),
        pres.relators.iter().map(|r| pres.format_word(r)).collect::<Vec<_>>().join(", "),
    );
    Ok(Output::ok(text, json))
}

pub fn model(name: &str) -> Result<Output> {
    let rep = orthomodels::model(name)?;
    let mut json = rep.to_json();
    json["order"] = json!(rep.group().order());
    json["orientation_preserving"] = json!(rep.is_orientation_preserving());
    json["faithful"] = json!(rep.matrix_group_order() as u64 == rep.group().order());
    let text = format!(
        "{name}: dimension {}, order {}, orientation-preserving {}, faithful {}\n",
        rep.dim(),
        rep.group().order(),
        json["orientation_preserving"],
        json["faithful"],
    );
    Ok(Output::ok(text, json))
}

pub fn model_names() -> &'static [&'static str] {
    MODEL_NAMES
}
