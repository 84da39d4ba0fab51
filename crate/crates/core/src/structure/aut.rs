//! Automorphism groups acting on the nontrivial elements.

use serde_json::{json, Value};

use super::search::{images_of_generators, search, small_generating_set, Mode, Side};
use crate::construct::CentralProduct;
use crate::error::{Error, Result};
use crate::group::{Elements, PermGroup};
use crate::hom::{validate_hom, Homomorphism};
use crate::perm::Permutation;
use crate::subgroups::center;

/// Largest group whose automorphism group is enumerated in full.
pub const FULL_AUT_BOUND: u64 = 500;

#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    /// Acting on the nontrivial elements of G, labelled in element-enumeration order.
    pub group: PermGroup,
    pub order: u64,
    pub inner_order: u64,
    /// `false` in verification mode, where `order` is only a lower bound for |Aut(G)|.
    pub full: bool,
}

impl AutomorphismGroup {
    /// |Out(G)|, or a lower bound in verification mode.
    pub fn outer_order(&self) -> u64 {
        self.order / self.inner_order
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "inner_order": self.inner_order,
            "outer_order": self.outer_order(),
            "mode": if self.full { "full" } else { "verification (lower bound)" },
        })
    }
}

fn label_permutation(els: &Elements, map: impl Fn(usize) -> usize) -> Result<Permutation> {
    let id = els.identity_index();
    let label = |i: usize| if i > id { i - 1 } else { i };
    let mut images = vec![0u32; els.len() - 1];
    for i in (0..els.len()).filter(|&i| i != id) {
        images[label(i)] = label(map(i)) as u32;
    }
    Permutation::from_images(images)
}

fn inner_group(g: &PermGroup, els: &Elements) -> Result<PermGroup> {
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            label_permutation(els, |i| {
                els.index_of(&els.get(i).conjugate_by(s)).expect("closed")
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(els.len() - 1, gens)
}

/// Aut(G) by enumerating every automorphism, for |G| ≤ 500.
pub fn automorphism_group(g: &PermGroup) -> Result<AutomorphismGroup> {
    if g.order() > FULL_AUT_BOUND {
        return Err(Error::OrderBound {
            order: g.order(),
            bound: FULL_AUT_BOUND,
        });
    }
    if g.order() < 3 {
        let t = PermGroup::trivial(1);
        return Ok(AutomorphismGroup {
            group: t,
            order: 1,
            inner_order: 1,
            full: true,
        });
    }
    let side = Side::new(g)?;
    let gens = small_generating_set(&side)?;
    let found = search(&side, &gens, &side, Mode::AllIso, usize::MAX)?;
    let perms = found
        .iter()
        .map(|f| label_permutation(&side.els, |i| f.map[i] as usize))
        .collect::<Result<Vec<_>>>()?;
    let degree = side.els.len() - 1;
    let all = PermGroup::new(degree, vec![])?;
    let aut = crate::subgroups::subgroup_from_elements(&all, &perms)?;
    if aut.order() != found.len() as u64 {
        return Err(Error::Unsupported("automorphisms do not close up".into()));
    }
    let inner = inner_group(g, &side.els)?;
    debug_assert_eq!(inner.order(), g.order() / center(g)?.order());
    Ok(AutomorphismGroup {
        order: aut.order(),
        inner_order: inner.order(),
        group: aut,
        full: true,
    })
}

/// Every automorphism of `g` as images of `g`'s generators, for |G| ≤ 500.
pub fn automorphisms(g: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    if g.order() > FULL_AUT_BOUND {
        return Err(Error::OrderBound {
            order: g.order(),
            bound: FULL_AUT_BOUND,
        });
    }
    let side = Side::new(g)?;
    let gens = small_generating_set(&side)?;
    let found = search(&side, &gens, &side, Mode::AllIso, usize::MAX)?;
    Ok(found.iter().map(|f| images_of_generators(&side, &side, f)).collect())
}

/// True if the automorphism given by generator images is conjugation by an element.
pub fn is_inner(g: &PermGroup, images: &[Permutation]) -> Result<bool> {
    let els = g.elements_within(g.limits().materialize)?;
    Ok(els.iter().any(|x| {
        g.generators()
            .iter()
            .zip(images)
            .all(|(s, t)| &s.conjugate_by(x) == t)
    }))
}

/// Automorphisms of `A ×_{Z2} A` (built from `a` twice): an outer automorphism of `a` applied
/// to either factor, and the swap of the factors. Generator images are for `cp.group`, whose
/// generators are the left copies of `a`'s generators followed by the right copies.
pub fn factorwise_and_swap(a: &PermGroup, cp: &CentralProduct) -> Result<Vec<Vec<Permutation>>> {
    let mut outer = None;
    for imgs in automorphisms(a)? {
        if !is_inner(a, &imgs)? {
            outer = Some(imgs);
            break;
        }
    }
    let outer = outer.ok_or_else(|| Error::arg("factor has no outer automorphism"))?;
    let gens = a.generators();
    let left = |v: &[Permutation]| v.iter().map(|x| cp.left(x)).collect::<Vec<_>>();
    let right = |v: &[Permutation]| v.iter().map(|x| cp.right(x)).collect::<Vec<_>>();
    let cat = |mut x: Vec<Permutation>, y: Vec<Permutation>| {
        x.extend(y);
        x
    };
    Ok(vec![
        cat(left(&outer), right(gens)),
        cat(left(gens), right(&outer)),
        cat(right(gens), left(gens)),
    ])
}

/// Validates claimed automorphisms (generator images) and reports the group they generate
/// together with the inner automorphisms.
pub fn verify_automorphisms(g: &PermGroup, claimed: &[Vec<Permutation>]) -> Result<AutomorphismGroup> {
    let els = g.elements_within(g.limits().materialize)?;
    let mut gens = Vec::new();
    for imgs in claimed {
        let h = validate_hom(Homomorphism::new(g.clone(), g.clone(), imgs.clone())?)?;
        if !h.is_injective() {
            return Err(Error::NotHomomorphism("claimed automorphism is not bijective".into()));
        }
        gens.push(label_permutation(&els, |i| {
            els.index_of(h.image(els.get(i)).expect("exhaustively validated"))
                .expect("closed")
        })?);
    }
    let inner = inner_group(g, &els)?;
    gens.extend(inner.generators().iter().cloned());
    let aut = PermGroup::new(els.len() - 1, gens)?;
    Ok(AutomorphismGroup {
        order: aut.order(),
        inner_order: inner.order(),
        group: aut,
        full: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{alt, cyclic, q8, sym};

    #[test]
    fn small_automorphism_groups() {
        let a = automorphism_group(&alt(5).unwrap()).unwrap();
        assert_eq!((a.order, a.outer_order()), (120, 2));
        let a = automorphism_group(&q8().unwrap()).unwrap();
        assert_eq!((a.order, a.outer_order()), (24, 6));
        let a = automorphism_group(&cyclic(7).unwrap()).unwrap();
        assert_eq!((a.order, a.inner_order), (6, 1));
        let a = automorphism_group(&sym(4).unwrap()).unwrap();
        assert_eq!((a.order, a.outer_order()), (24, 1));
    }

    #[test]
    fn inner_and_outer() {
        let a5 = alt(5).unwrap();
        let all = automorphisms(&a5).unwrap();
        assert_eq!(all.len(), 120);
        let inner = all.iter().filter(|v| is_inner(&a5, v).unwrap()).count();
        assert_eq!(inner, 60);
    }

    #[test]
    fn central_product_lower_bound() {
        let a = crate::construct::binary_polyhedral(crate::construct::BinaryKind::Icosahedral).unwrap();
        let cp = crate::construct::central_product(&a, &a).unwrap();
        let claimed = factorwise_and_swap(&a, &cp).unwrap();
        let aut = verify_automorphisms(&cp.group, &claimed).unwrap();
        assert_eq!((aut.inner_order, aut.order), (3600, 28800));
        assert!(!aut.full);
    }
}
