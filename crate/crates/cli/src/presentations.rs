//! Finding a verified presentation of a given permutation group.

use so5_core::construct::catalog::{catalog, find_images};
use so5_core::construct::{verify_presentation_within, Presentation, VerifiedPresentation};
use so5_core::{Error, PermGroup, Result};

fn cyclic_presentation(n: u64) -> Result<Presentation> {
    Presentation::parse(&["a"], &format!("a^{n}"))
}

fn images(p: &Presentation, g: &PermGroup) -> Result<Option<Vec<so5_core::Permutation>>> {
    if p.generators.len() == 1 {
        let els = g.elements()?;
        return Ok(els
            .iter()
            .find(|x| x.order() == g.order())
            .map(|x| vec![x.clone()]));
    }
    find_images(p, g, g.order())
}

/// A presentation verified against `g`: the one in `text` if given, otherwise the first
/// matching entry of the built-in catalog (cyclic groups included).
pub fn presentation_for(g: &PermGroup, text: Option<&str>, budget: usize) -> Result<VerifiedPresentation> {
    let candidates: Vec<Presentation> = match text {
        Some(t) => vec![Presentation::parse_file(t)?],
        None => {
            let mut v = Vec::new();
            let els = g.elements()?;
            if g.order() == 1 || els.iter().any(|x| x.order() == g.order()) {
                v.push(cyclic_presentation(g.order())?);
            }
            v.extend(
                catalog()
                    .into_iter()
                    .filter(|e| e.order == g.order())
                    .map(|e| e.presentation),
            );
            v
        }
    };
    for p in &candidates {
        if let Some(imgs) = images(p, g)? {
            match verify_presentation_within(p, g, &imgs, budget) {
                Ok(v) => return Ok(v),
                Err(Error::UnverifiedPresentation(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Err(Error::arg(if text.is_some() {
        "the presentation has no generating images in the group satisfying its relators"
    } else {
        "no catalog presentation matches this group; pass --presentation"
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_catalog_presentations() {
        let a5 = so5_core::build("alt(5)").unwrap();
        let p = presentation_for(&a5, None, 100_000).unwrap();
        assert_eq!(p.target().order(), 60);
        let z6 = so5_core::build("cyclic(6)").unwrap();
        assert!(presentation_for(&z6, None, 100_000).is_ok());
        let s3 = so5_core::build("sym(3)").unwrap();
        assert!(presentation_for(&s3, None, 100_000).is_err());
        let text = "a b\na^2\nb^3\na b a b";
        assert!(presentation_for(&s3, Some(text), 100_000).is_ok());
    }
}
