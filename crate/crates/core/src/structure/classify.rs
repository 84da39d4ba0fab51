//! Membership tests for the cases of the classification of finite groups acting on
//! homology 4-spheres, each backed by a checkable witness.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{isomorphic, monomorphisms, normal_structure};
use crate::chartab::real::embeds_with_table;
use crate::chartab::{character_table, real_irreducibles, Variant};
use crate::construct::{alt, binary_polyhedral, central_product, sym, BinaryKind};
use crate::error::Result;
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::orthomodels::build_w;

pub const ETYPE_NAMES: &[&str] = &["trivial", "A5", "A6", "A5*", "A5* x_Z2 A5*"];

/// How case iv's "2-fold extension" is decided.
pub const IV_READING: &str =
    "G or a subgroup of index 2 in G embeds in SO(4) (subgroup reading of 2-fold extension)";

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub order: u64,
    /// Matched cases with their witnesses, keyed by case label.
    pub cases: BTreeMap<String, Value>,
    pub e_type: String,
}

impl ClassificationReport {
    pub fn matched(&self) -> Vec<&str> {
        self.cases.keys().map(String::as_str).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "cases": self.matched(),
            "witnesses": self.cases,
            "E": self.e_type,
            "iv_reading": IV_READING,
        })
    }
}

fn hom_json(h: &Homomorphism) -> Value {
    json!(h
        .domain
        .generators()
        .iter()
        .zip(&h.gen_images)
        .map(|(a, b)| json!({"generator": a.to_string(), "image": b.to_string()}))
        .collect::<Vec<_>>())
}

fn embedding(g: &PermGroup, n: usize, variant: Variant) -> Result<Option<Value>> {
    let t = character_table(g)?;
    Ok(embeds_with_table(&t, n, variant)?.map(|w| w.to_json(&real_irreducibles(&t))))
}

/// Index-2 subgroups, as kernels of the real linear characters of order 2.
pub fn index_two_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let t = character_table(g)?;
    let mut out = Vec::new();
    for row in 1..t.len() {
        if t.degrees[row] != 1 {
            continue;
        }
        let signs = t.irreducibles[row]
            .iter()
            .all(|v| matches!(v.to_integer(), Some(1) | Some(-1)));
        if signs {
            out.push(t.kernel(row)?);
        }
    }
    Ok(out)
}

/// Isomorphism type of the maximal semisimple normal subgroup.
pub fn e_type(g: &PermGroup) -> Result<String> {
    let e = normal_structure(g)?.e;
    let candidates: Vec<(&str, PermGroup)> = match e.order() {
        1 => return Ok("trivial".into()),
        60 => vec![("A5", alt(5)?)],
        360 => vec![("A6", alt(6)?)],
        120 => vec![("A5*", binary_polyhedral(BinaryKind::Icosahedral)?)],
        7200 => {
            let a = binary_polyhedral(BinaryKind::Icosahedral)?;
            vec![("A5* x_Z2 A5*", central_product(&a, &a)?.group)]
        }
        _ => vec![],
    };
    for (name, h) in candidates {
        if isomorphic(&e, &h)?.is_some() {
            return Ok(name.into());
        }
    }
    Ok(format!("other (order {})", e.order()))
}

pub fn classify_theorem(g: &PermGroup) -> Result<ClassificationReport> {
    let mut cases = BTreeMap::new();
    let w = build_w().group().clone();
    if let Some(h) = monomorphisms(g, &w)? {
        cases.insert("i".to_string(), json!({"embedding_into_W": hom_json(&h)}));
    }
    let named = [
        ("A5", 60u64, 5usize, false),
        ("S5", 120, 5, true),
        ("A6", 360, 6, false),
        ("S6", 720, 6, true),
    ];
    for (name, order, n, symmetric) in named {
        if g.order() != order {
            continue;
        }
        let h = if symmetric { sym(n)? } else { alt(n)? };
        if let Some(iso) = isomorphic(g, &h)? {
            cases.insert("ii".to_string(), json!({"isomorphic_to": name, "isomorphism": hom_json(&iso)}));
        }
    }
    if let Some(wit) = embedding(g, 5, Variant::Split(3, 2))? {
        cases.insert("iii".to_string(), wit);
    }
    if let Some(wit) = embedding(g, 4, Variant::SO)? {
        cases.insert("iv".to_string(), json!({"subgroup": "G", "embedding": wit}));
    } else {
        for k in index_two_subgroups(g)? {
            if let Some(wit) = embedding(&k, 4, Variant::SO)? {
                cases.insert(
                    "iv".to_string(),
                    json!({"subgroup": k.to_json().generators, "index": 2, "embedding": wit}),
                );
                break;
            }
        }
    }
    if let Some(wit) = embedding(g, 4, Variant::O)? {
        cases.insert("iv'".to_string(), wit);
    }
    Ok(ClassificationReport {
        order: g.order(),
        cases,
        e_type: e_type(g)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::cyclic;

    #[test]
    fn small_reports() {
        let r = classify_theorem(&alt(5).unwrap()).unwrap();
        assert_eq!(r.matched(), vec!["i", "ii", "iii", "iv", "iv'"]);
        assert_eq!(r.e_type, "A5");
        let r = classify_theorem(&cyclic(7).unwrap()).unwrap();
        assert_eq!(r.matched(), vec!["iii", "iv", "iv'"]);
        assert_eq!(r.e_type, "trivial");
    }
}
