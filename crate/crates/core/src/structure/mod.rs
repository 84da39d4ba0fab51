//! Normal structure, isomorphism and embedding search, automorphism groups, complements,
//! conjugacy classes of A5-subgroups and the classification report.

mod aut;
mod classify;
pub(crate) mod search;
mod subclasses;

use serde_json::{json, Value};

use crate::classes::conjugacy_classes;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::{validate_hom, Homomorphism};
use crate::perm::Permutation;
use crate::subgroups::{
    center, centralizer, fitting, is_perfect, join, normal_closure, quotient, solvable_residual,
};

pub use aut::{
    automorphism_group, automorphisms, factorwise_and_swap, is_inner, verify_automorphisms,
    AutomorphismGroup, FULL_AUT_BOUND,
};
pub use classify::{
    classify_theorem, e_type, index_two_subgroups, ClassificationReport, ETYPE_NAMES, IV_READING,
};
pub use search::SEARCH_BUDGET;
pub use subclasses::{subgroup_classes_isomorphic_to, SubgroupClasses, A5_CLASS_BOUND};

use search::{images_of_generators, search, small_generating_set, Mode, Side};

/// Normal closures of the nontrivial class representatives, without repetitions.
pub fn class_closures(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let c = conjugacy_classes(g)?;
    let mut out: Vec<PermGroup> = Vec::new();
    for x in c.representatives.iter().skip(1) {
        let n = normal_closure(g, std::slice::from_ref(x))?;
        if !out.iter().any(|m| m.same_group(&n)) {
            out.push(n);
        }
    }
    Ok(out)
}

pub fn is_simple(g: &PermGroup) -> Result<bool> {
    if g.order() == 1 {
        return Ok(false);
    }
    Ok(class_closures(g)?.iter().all(|n| n.order() == g.order()))
}

pub fn is_quasisimple(g: &PermGroup) -> Result<bool> {
    if g.order() == 1 || !is_perfect(g)? {
        return Ok(false);
    }
    let z = center(g)?;
    let (q, _) = quotient(g, &z)?;
    is_simple(&q)
}

/// Minimal normal subgroups: the minimal ones among normal closures of single elements.
pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let all = class_closures(g)?;
    Ok(all
        .iter()
        .filter(|n| {
            !all.iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect())
}

/// Quasisimple subnormal subgroups.
pub fn components(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut out = Vec::new();
    let mut visited = Vec::new();
    collect_components(g, &mut visited, &mut out)?;
    out.sort_by_key(|k: &PermGroup| (k.order(), k.generators().to_vec()));
    Ok(out)
}

fn collect_components(g: &PermGroup, visited: &mut Vec<PermGroup>, out: &mut Vec<PermGroup>) -> Result<()> {
    if g.order() == 1 || visited.iter().any(|v| v.same_group(g)) {
        return Ok(());
    }
    visited.push(g.clone());
    let r = solvable_residual(g)?;
    if r.order() != g.order() {
        return collect_components(&r, visited, out);
    }
    if is_quasisimple(g)? {
        if !out.iter().any(|k: &PermGroup| k.same_group(g)) {
            out.push(g.clone());
        }
        return Ok(());
    }
    // a component of a perfect, non-quasisimple group lies in a proper normal closure
    for n in class_closures(g)? {
        if n.order() < g.order() {
            collect_components(&n, visited, out)?;
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct NormalStructure {
    pub minimal_normal: Vec<PermGroup>,
    pub components: Vec<PermGroup>,
    pub e: PermGroup,
    pub f: PermGroup,
    pub f_star: PermGroup,
    /// C_G(F*) ≤ F*.
    pub self_centralizing: bool,
}

pub fn normal_structure(g: &PermGroup) -> Result<NormalStructure> {
    g.check_order(g.limits().materialize)?;
    let comps = components(g)?;
    let mut e = g.subgroup(vec![])?;
    for k in &comps {
        e = join(&e, k)?;
    }
    let f = fitting(g)?;
    let f_star = join(&e, &f)?;
    let c = centralizer(g, f_star.generators())?;
    Ok(NormalStructure {
        minimal_normal: minimal_normal_subgroups(g)?,
        self_centralizing: c.is_subgroup_of(&f_star),
        components: comps,
        e,
        f,
        f_star,
    })
}

impl NormalStructure {
    pub fn to_json(&self) -> Value {
        let desc = |h: &PermGroup| json!({"order": h.order(), "generators": h.to_json().generators});
        json!({
            "minimal_normal": self.minimal_normal.iter().map(desc).collect::<Vec<_>>(),
            "components": self.components.iter().map(desc).collect::<Vec<_>>(),
            "E": desc(&self.e),
            "F": desc(&self.f),
            "F_star": desc(&self.f_star),
            "F_star_contains_centralizer": self.self_centralizing,
        })
    }
}

/// An isomorphism `g → h` as a validated homomorphism, or `None`.
pub fn isomorphic(g: &PermGroup, h: &PermGroup) -> Result<Option<Homomorphism>> {
    let bound = g.limits().materialize;
    g.check_order(bound)?;
    h.check_order(bound)?;
    if g.order() != h.order() {
        return Ok(None);
    }
    let (dg, dh) = (Side::new(g)?, Side::new(h)?);
    if dg.fingerprint() != dh.fingerprint() {
        return Ok(None);
    }
    let gens = small_generating_set(&dg)?;
    let found = search(&dg, &gens, &dh, Mode::Iso, 1)?;
    finish(&dg, &dh, found.first())
}

/// An injective homomorphism `g → h`, or `None`.
pub fn monomorphisms(g: &PermGroup, h: &PermGroup) -> Result<Option<Homomorphism>> {
    let bound = h.limits().materialize;
    g.check_order(bound)?;
    h.check_order(bound)?;
    if h.order() % g.order() != 0 {
        return Ok(None);
    }
    let (dg, dh) = (Side::new(g)?, Side::new(h)?);
    // every element order of g must occur in h
    let have: std::collections::HashSet<u64> = dh.classes.element_orders.iter().copied().collect();
    if dg.classes.element_orders.iter().any(|o| !have.contains(o)) {
        return Ok(None);
    }
    let gens = small_generating_set(&dg)?;
    let found = search(&dg, &gens, &dh, Mode::Mono, 1)?;
    finish(&dg, &dh, found.first())
}

fn finish(dg: &Side, dh: &Side, found: Option<&search::Found>) -> Result<Option<Homomorphism>> {
    let Some(f) = found else {
        return Ok(None);
    };
    let images = images_of_generators(dg, dh, f);
    let hom = validate_hom(Homomorphism::new(dg.group.clone(), dh.group.clone(), images)?)?;
    debug_assert!(hom.is_injective());
    Ok(Some(hom))
}

/// A complement to the normal subgroup `n` of `g`, or `None` if the extension does not split.
pub fn splits(g: &PermGroup, n: &PermGroup) -> Result<Option<PermGroup>> {
    g.check_order(g.limits().materialize)?;
    if !n.is_subgroup_of(g) || !n.is_normal_in(g) {
        return Err(Error::arg("splits: N must be a normal subgroup of G"));
    }
    let target = g.order() / n.order();
    let (q, q_images) = quotient(g, n)?;
    let lifts: Vec<(Permutation, Permutation)> = g
        .generators()
        .iter()
        .zip(&q_images)
        .filter(|(s, _)| !n.has(s))
        .map(|(s, qi)| (s.clone(), qi.clone()))
        .collect();
    let n_els = n.elements()?;
    let mut chosen: Vec<Permutation> = Vec::new();
    let mut steps = 0usize;
    fn go(
        g: &PermGroup,
        q: &PermGroup,
        lifts: &[(Permutation, Permutation)],
        n_els: &[Permutation],
        target: u64,
        chosen: &mut Vec<Permutation>,
        steps: &mut usize,
    ) -> Result<Option<PermGroup>> {
        let level = chosen.len();
        if level == lifts.len() {
            let h = g.subgroup(chosen.clone())?;
            return Ok((h.order() == target).then_some(h));
        }
        let q_part = q.subgroup(lifts[..=level].iter().map(|l| l.1.clone()).collect())?.order();
        for m in n_els {
            *steps += 1;
            if *steps > SEARCH_BUDGET {
                return Err(Error::BudgetExhausted { budget: SEARCH_BUDGET });
            }
            chosen.push(lifts[level].0.then(m));
            // the partial subgroup meets N trivially iff it maps isomorphically into G/N
            if g.subgroup(chosen.clone())?.order() == q_part {
                if let Some(h) = go(g, q, lifts, n_els, target, chosen, steps)? {
                    return Ok(Some(h));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }
    let n_list: Vec<Permutation> = n_els.iter().cloned().collect();
    go(g, &q, &lifts, &n_list, target, &mut chosen, &mut steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        alt, binary_polyhedral, central_product, cyclic, direct_product, q8, sym, BinaryKind,
    };

    #[test]
    fn simplicity() {
        let a5 = alt(5).unwrap();
        assert!(is_simple(&a5).unwrap());
        assert!(is_quasisimple(&a5).unwrap());
        let a5s = binary_polyhedral(BinaryKind::Icosahedral).unwrap();
        assert!(!is_simple(&a5s).unwrap());
        assert!(is_quasisimple(&a5s).unwrap());
        let s5 = sym(5).unwrap();
        assert!(!is_simple(&s5).unwrap());
        assert!(!is_quasisimple(&s5).unwrap());
    }

    #[test]
    fn normal_structure_of_products() {
        let g = direct_product(&sym(5).unwrap(), &cyclic(2).unwrap()).unwrap();
        let ns = normal_structure(&g).unwrap();
        assert_eq!(ns.e.order(), 60);
        assert_eq!(ns.f.order(), 2);
        assert!(ns.self_centralizing);
        let a5s = binary_polyhedral(BinaryKind::Icosahedral).unwrap();
        let cp = central_product(&a5s, &a5s).unwrap().group;
        let ns = normal_structure(&cp).unwrap();
        assert_eq!(ns.components.len(), 2);
        assert_eq!(ns.e.order(), 7200);
        assert_eq!(ns.f.order(), 2);
    }

    #[test]
    fn isomorphism_and_embedding() {
        let q = q8().unwrap();
        let bd8 = binary_polyhedral(BinaryKind::Dihedral(8)).unwrap();
        let iso = isomorphic(&q, &bd8).unwrap().unwrap();
        assert!(iso.is_injective());
        assert!(isomorphic(&q, &crate::construct::dihedral_2n(4).unwrap()).unwrap().is_none());
        assert!(monomorphisms(&sym(4).unwrap(), &sym(5).unwrap()).unwrap().is_some());
        assert!(monomorphisms(&alt(5).unwrap(), &sym(4).unwrap()).unwrap().is_none());
        assert!(monomorphisms(&cyclic(6).unwrap(), &alt(5).unwrap()).unwrap().is_none());
    }

    #[test]
    fn complements() {
        let z4 = cyclic(4).unwrap();
        let z2 = z4.subgroup(vec![z4.generators()[0].pow(2)]).unwrap();
        assert!(splits(&z4, &z2).unwrap().is_none());
        let s4 = sym(4).unwrap();
        let v4 = crate::subgroups::p_core(&s4, 2).unwrap();
        let h = splits(&s4, &v4).unwrap().unwrap();
        assert_eq!(h.order(), 6);
    }
}
