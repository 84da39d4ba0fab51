//! Homomorphisms between permutation groups given by generator images.

use std::collections::HashMap;

use crate::cayley::CayleyGraph;
use crate::construct::presentation::VerifiedPresentation;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest domain validated by checking the multiplication table.
pub const EXHAUSTIVE_HOM_BOUND: u64 = 10_000;

#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub domain: PermGroup,
    pub codomain: PermGroup,
    pub gen_images: Vec<Permutation>,
    validated: bool,
    /// Full element map, present after exhaustive validation.
    table: Option<HashMap<Permutation, Permutation>>,
}

impl Homomorphism {
    pub fn new(domain: PermGroup, codomain: PermGroup, gen_images: Vec<Permutation>) -> Result<Self> {
        if gen_images.len() != domain.generators().len() {
            return Err(Error::arg(format!(
                "{} generator images for {} generators",
                gen_images.len(),
                domain.generators().len()
            )));
        }
        for x in &gen_images {
            if !codomain.contains(x)? {
                return Err(Error::arg(format!("image {x} is not in the codomain")));
            }
        }
        Ok(Homomorphism {
            domain,
            codomain,
            gen_images,
            validated: false,
            table: None,
        })
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn image(&self, x: &Permutation) -> Option<&Permutation> {
        self.table.as_ref().and_then(|t| t.get(x))
    }

    /// Order of the image subgroup.
    pub fn image_order(&self) -> u64 {
        self.codomain
            .subgroup(self.gen_images.clone())
            .map(|h| h.order())
            .unwrap_or(0)
    }

    pub fn is_injective(&self) -> bool {
        self.validated && self.image_order() == self.domain.order()
    }
}

/// Exhaustive validation over the domain's multiplication (domains up to 10^4 elements).
pub fn validate_hom(h: Homomorphism) -> Result<Homomorphism> {
    let order = h.domain.order();
    if order > EXHAUSTIVE_HOM_BOUND {
        return Err(Error::OrderBound {
            order,
            bound: EXHAUSTIVE_HOM_BOUND,
        });
    }
    let image_group = h.codomain.subgroup(h.gen_images.clone())?;
    image_group.check_order(h.codomain.limits().enumeration.max(EXHAUSTIVE_HOM_BOUND))?;
    let cod_els = image_group.elements_within(u64::MAX)?;
    let graph = CayleyGraph::new(&h.domain, h.domain.generators())?;
    let idx: Vec<usize> = h
        .gen_images
        .iter()
        .map(|x| cod_els.index_of(x).expect("image generates image group"))
        .collect();
    match graph.extend(&cod_els, &idx) {
        Ok(map) => {
            let dom = graph.elements();
            let table = (0..dom.len())
                .map(|i| (dom.get(i).clone(), cod_els.get(map[i] as usize).clone()))
                .collect();
            Ok(Homomorphism {
                validated: true,
                table: Some(table),
                ..h
            })
        }
        Err((g, s)) => {
            let dom = graph.elements();
            Err(Error::NotHomomorphism(format!(
                "images disagree on the product of {} and {}",
                dom.get(g),
                h.domain.generators()[s]
            )))
        }
    }
}

/// Validation by relators of a verified presentation whose generators are the domain's
/// generators.
pub fn validate_hom_by_presentation(h: Homomorphism, p: &VerifiedPresentation) -> Result<Homomorphism> {
    if !p.target().same_group(&h.domain) || p.gen_images() != h.domain.generators() {
        return Err(Error::arg(
            "presentation generators must be the domain generators".to_string(),
        ));
    }
    for (k, rel) in p.presentation().relators.iter().enumerate() {
        let v = rel.evaluate(&h.gen_images, h.codomain.degree());
        if !v.is_identity() {
            return Err(Error::NotHomomorphism(format!(
                "relator {k} maps to {v}, not the identity"
            )));
        }
    }
    Ok(Homomorphism {
        validated: true,
        ..h
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(n, gens).unwrap()
    }

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    #[test]
    fn identity_on_a5_validates() {
        let a5 = grp(5, &["(1 2)(3 4)", "(1 3 5)"]);
        let h = Homomorphism::new(a5.clone(), a5.clone(), a5.generators().to_vec()).unwrap();
        let v = validate_hom(h).unwrap();
        assert!(v.is_validated());
        assert!(v.is_injective());
    }

    #[test]
    fn swapping_generators_of_different_order_fails() {
        let a5 = grp(5, &["(1 2)(3 4)", "(1 3 5)"]);
        let imgs = vec![a5.generators()[1].clone(), a5.generators()[0].clone()];
        let h = Homomorphism::new(a5.clone(), a5, imgs).unwrap();
        assert!(matches!(validate_hom(h), Err(Error::NotHomomorphism(_))));
    }

    #[test]
    fn sign_map_validates() {
        let s5 = grp(5, &["(1 2 3 4 5)", "(1 2)"]);
        let z2 = grp(2, &["(1 2)"]);
        let imgs = vec![Permutation::identity(2), p("(1 2)", 2)];
        let v = validate_hom(Homomorphism::new(s5, z2, imgs).unwrap()).unwrap();
        assert!(v.is_validated());
        assert!(!v.is_injective());
        assert_eq!(v.image(&p("(1 3)", 5)).unwrap(), &p("(1 2)", 2));
    }
}
