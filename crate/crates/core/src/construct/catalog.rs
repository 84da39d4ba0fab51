//! Built-in presentations, each paired with an independently constructed witness group.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::families::{alt, cyclic, psl27_presentation, psl2, sl2p_on_vectors, BinaryKind};
use super::presentation::{verify_presentation, Presentation, VerifiedPresentation};

/// `⟨a, b | a², b³, (ab)⁵⟩`.
pub fn a5_presentation() -> Presentation {
    Presentation::parse(&["a", "b"], "a^2; b^3; (a b)^5").expect("static presentation")
}

/// `⟨a, b | a⁵, b², (ab)³⟩`.
pub fn a5_presentation_alt() -> Presentation {
    Presentation::parse(&["a", "b"], "a^5; b^2; (a b)^3").expect("static presentation")
}

/// A5 generated by a = (1 2)(3 4), b = (1 3 5); the generators match [`a5_presentation`].
pub fn a5_standard() -> PermGroup {
    PermGroup::from_cycle_strings(5, &["(1 2)(3 4)", "(1 3 5)"]).expect("static group")
}

pub fn verified_a5() -> Result<VerifiedPresentation> {
    let g = a5_standard();
    verify_presentation(&a5_presentation(), &g, g.generators())
}

pub fn verified_a5_alt() -> Result<VerifiedPresentation> {
    let g = PermGroup::from_cycle_strings(5, &["(1 2 3 4 5)", "(1 2)(3 4)"])?;
    verify_presentation(&a5_presentation_alt(), &g, g.generators())
}

/// `⟨a | aⁿ⟩` verified against Z_n.
pub fn verified_cyclic(n: usize) -> Result<VerifiedPresentation> {
    let p = Presentation::parse(&["a"], &format!("a^{n}"))?;
    let g = cyclic(n)?;
    let imgs = if n == 1 {
        vec![Permutation::identity(1)]
    } else {
        g.generators().to_vec()
    };
    verify_presentation(&p, &g, &imgs)
}

/// Dicyclic group of order 4n in its regular representation, built from its
/// multiplication rule: `(k, e)` is `x^k y^e` with `x^{2n} = 1`, `y² = x^n`, `y x y⁻¹ = x⁻¹`.
pub fn dicyclic_regular(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::arg("dicyclic: n must be positive"));
    }
    let m = 2 * n;
    let idx = |k: usize, e: usize| k % m + m * e;
    let mul = |(k1, e1): (usize, usize), (k2, e2): (usize, usize)| match (e1, e2) {
        (0, e) => (k1 + k2, e),
        (1, 0) => (k1 + m - k2 % m, 1),
        _ => (k1 + m - k2 % m + n, 0),
    };
    let right = |g: (usize, usize)| {
        Permutation::from_images(
            (0..2 * m)
                .map(|i| {
                    let (k, e) = mul((i % m, i / m), g);
                    idx(k, e) as u32
                })
                .collect(),
        )
    };
    PermGroup::new(2 * m, vec![right((1, 0))?, right((0, 1))?])
}

/// First pair of elements of `target` satisfying every relator and generating a
/// subgroup of order `want`; the search order is the group's element order.
pub fn find_images(p: &Presentation, target: &PermGroup, want: u64) -> Result<Option<Vec<Permutation>>> {
    if p.generators.len() != 2 {
        return Err(Error::arg("witness search handles two-generator presentations"));
    }
    let els = target.elements()?;
    let degree = target.degree();
    for x in els.iter() {
        for y in els.iter() {
            let imgs = [x.clone(), y.clone()];
            if p.relators.iter().all(|r| r.evaluate(&imgs, degree).is_identity())
                && target.subgroup(imgs.to_vec())?.order() == want
            {
                return Ok(Some(imgs.to_vec()));
            }
        }
    }
    Ok(None)
}

pub struct CatalogEntry {
    pub name: String,
    pub presentation: Presentation,
    pub order: u64,
}

pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = vec![
        CatalogEntry {
            name: "alternating_5".into(),
            presentation: a5_presentation(),
            order: 60,
        },
        CatalogEntry {
            name: "alternating_5_alt".into(),
            presentation: a5_presentation_alt(),
            order: 60,
        },
        CatalogEntry {
            name: "psl_2_7".into(),
            presentation: psl27_presentation(),
            order: 168,
        },
    ];
    for kind in [
        BinaryKind::Dihedral(4),
        BinaryKind::Dihedral(8),
        BinaryKind::Dihedral(12),
        BinaryKind::Dihedral(24),
        BinaryKind::Tetrahedral,
        BinaryKind::Octahedral,
        BinaryKind::Icosahedral,
    ] {
        out.push(CatalogEntry {
            name: format!("{kind:?}").to_lowercase(),
            presentation: kind.presentation().expect("valid kind"),
            order: kind.order(),
        });
    }
    out
}

/// Independent witness for a catalog entry: a group of the right order not built from
/// the presentation, with generator images found by search.
pub fn witness(entry: &CatalogEntry) -> Result<VerifiedPresentation> {
    let ambient = match entry.name.as_str() {
        "alternating_5" | "alternating_5_alt" => alt(5)?,
        "psl_2_7" => psl2(7)?,
        "tetrahedral" => sl2p_on_vectors(3)?,
        "icosahedral" => sl2p_on_vectors(5)?,
        "octahedral" => sl2p_on_vectors(7)?,
        name => {
            let order: usize = name
                .trim_start_matches("dihedral(")
                .trim_end_matches(')')
                .parse()
                .map_err(|_| Error::arg(format!("unknown catalog entry {name}")))?;
            dicyclic_regular(order / 4)?
        }
    };
    let imgs = find_images(&entry.presentation, &ambient, entry.order)?
        .ok_or_else(|| Error::UnverifiedPresentation(format!("no witness for {}", entry.name)))?;
    let target = ambient.subgroup(imgs.clone())?;
    verify_presentation(&entry.presentation, &target, &imgs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::presentation::{check_presentation, todd_coxeter, Verdict};

    #[test]
    fn every_catalog_entry_has_a_witness() {
        for entry in catalog() {
            let v = witness(&entry).unwrap_or_else(|e| panic!("{}: {e}", entry.name));
            assert_eq!(v.target().order(), entry.order, "{}", entry.name);
            let t = todd_coxeter(&entry.presentation, &[], 1_000_000).unwrap();
            assert_eq!(t.index() as u64, entry.order);
        }
    }

    #[test]
    fn a5_presentations() {
        assert!(verified_a5().is_ok());
        assert!(verified_a5_alt().is_ok());
        for n in [1, 2, 6] {
            assert!(verified_cyclic(n).is_ok());
        }
    }

    #[test]
    fn wrong_target_fails_every_condition() {
        let s5 = crate::construct::families::sym(5).unwrap();
        let imgs = [
            Permutation::parse_cycles("(1 2)", Some(5)).unwrap(),
            Permutation::parse_cycles("(1 3 5)", Some(5)).unwrap(),
        ];
        let check = check_presentation(&a5_presentation(), &s5, &imgs, 100_000).unwrap();
        // a² and b³ hold but (ab)⁵ does not, the images only generate S4, and 60 ≠ 120
        assert!(!check.relators_hold);
        assert!(!check.images_generate);
        assert_eq!(check.enumerated_index, Some(60));
        assert_eq!(check.verdict(), Verdict::Failed);
        let z2 = cyclic(2).unwrap();
        let p = Presentation::parse(&["a"], "a^2").unwrap();
        assert!(check_presentation(&p, &z2, z2.generators(), 100).unwrap().is_verified());
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let g = a5_standard();
        let check = check_presentation(&a5_presentation(), &g, g.generators(), 10).unwrap();
        assert_eq!(check.verdict(), Verdict::Inconclusive);
    }

    #[test]
    fn dicyclic_is_binary_dihedral() {
        for n in 1..7 {
            let d = dicyclic_regular(n).unwrap();
            assert_eq!(d.order(), 4 * n as u64);
            let invs = d.elements().unwrap().iter().filter(|x| x.order() == 2).count();
            assert_eq!(invs, 1);
        }
    }
}
