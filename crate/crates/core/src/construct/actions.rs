//! The named actions usable in `semidirect(N, H, action)`.
//!
//! Each returns, per generator `h` of `H`, the images of `N`'s generators under
//! `n ↦ h⁻¹ n h`.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Rank of `n` if its generators form a basis of an elementary abelian p-group.
fn basis_rank(n: &PermGroup, p: u64) -> Option<usize> {
    let k = n.generators().len();
    let basis = n.is_abelian()
        && n.generators().iter().all(|g| g.order() == p)
        && n.order() == p.checked_pow(k as u32)?;
    basis.then_some(k)
}

fn combine(n: &PermGroup, bits: impl IntoIterator<Item = usize>) -> Permutation {
    bits.into_iter()
        .fold(n.identity(), |acc, i| acc.then(&n.generators()[i]))
}

pub fn named_action(name: &str, n: &PermGroup, h: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    match name {
        "coordinate_perm" => coordinate_perm(n, h),
        "deleted_perm" => deleted_perm(n, h),
        "dihedral_inv" => dihedral_inv(n, h),
        "natural_sl24" => natural_sl24(n, h),
        _ => Err(Error::arg(format!("unknown action {name:?}"))),
    }
}

/// `H ≤ S_k` permuting the k basis generators of `N`.
pub fn coordinate_perm(n: &PermGroup, h: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    let p = n.generators().first().map_or(1, |g| g.order());
    let k = basis_rank(n, p)
        .ok_or_else(|| Error::arg("coordinate_perm: N's generators must be a basis of (Z_p)^k"))?;
    if h.degree() != k {
        return Err(Error::arg(format!(
            "coordinate_perm: H must act on {k} points, it acts on {}",
            h.degree()
        )));
    }
    Ok(h.generators()
        .iter()
        .map(|s| (0..k).map(|i| n.generators()[s.image(i)].clone()).collect())
        .collect())
}

/// `H ≤ S_m` on the even-weight part of F2^m, basis `e_i + e_m` (i < m).
pub fn deleted_perm(n: &PermGroup, h: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    let m = h.degree();
    if basis_rank(n, 2) != Some(m.saturating_sub(1)) || m < 2 {
        return Err(Error::arg(format!(
            "deleted_perm: N must be (Z2)^{} with its standard basis",
            m.saturating_sub(1)
        )));
    }
    let last = m - 1;
    Ok(h.generators()
        .iter()
        .map(|s| {
            (0..last)
                .map(|i| {
                    let bits = [s.image(i), s.image(last)].into_iter().filter(|&j| j != last);
                    combine(n, bits)
                })
                .collect()
        })
        .collect())
}

/// Every generator of `H` inverts the abelian group `N`.
pub fn dihedral_inv(n: &PermGroup, h: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    if !n.is_abelian() {
        return Err(Error::arg("dihedral_inv: N must be abelian"));
    }
    let inv: Vec<Permutation> = n.generators().iter().map(|g| g.inverse()).collect();
    Ok(vec![inv; h.generators().len()])
}

/// `H ≅ A5 ≅ SL(2,4)` acting naturally on F4² = (Z2)^4.
pub fn natural_sl24(n: &PermGroup, h: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    if basis_rank(n, 2) != Some(4) {
        return Err(Error::arg("natural_sl24: N must be (Z2)^4 with its standard basis"));
    }
    let module = crate::cohom::module_sl24()?;
    let iso = crate::structure::isomorphic(h, module.group())?
        .ok_or_else(|| Error::arg("natural_sl24: H is not isomorphic to A5"))?;
    iso.gen_images
        .iter()
        .map(|q| {
            let m = module.matrix_of(&q.inverse())?;
            Ok((0..4)
                .map(|i| combine(n, (0..4).filter(|&r| m.get(r, i))))
                .collect())
        })
        .collect()
}
