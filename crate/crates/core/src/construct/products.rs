//! Direct, semidirect and central products, Z2 ≀ S_n, Milnor groups and question groups.

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{Elements, PermGroup};
use crate::hom::{validate_hom, Homomorphism};
use crate::perm::Permutation;
use crate::subgroups::center;

use super::families::{binary_dihedral, cyclic, q8};

/// `p` acting on points `offset..offset+p.degree()` of a larger set.
pub fn shift(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &x) in p.images().iter().enumerate() {
        images[offset + i] = offset as u32 + x;
    }
    Permutation::from_images_unchecked(images)
}

/// A × B on the disjoint union of the point sets; A's generators come first.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let degree = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|x| shift(x, 0, degree))
        .chain(b.generators().iter().map(|y| shift(y, a.degree(), degree)))
        .collect();
    Ok(PermGroup::new(degree, gens)?.with_limits(a.limits()))
}

/// Image of `(x, y)` in `direct_product(a, b)`.
pub fn direct_pair(a: &PermGroup, b: &PermGroup, x: &Permutation, y: &Permutation) -> Permutation {
    let degree = a.degree() + b.degree();
    shift(x, 0, degree).then(&shift(y, a.degree(), degree))
}

/// The action of `N ⋊ H` is given per generator `h` of `H` as the images of `N`'s
/// generators under `n ↦ h⁻¹ n h`.
///
/// The group is realized on the elements of `N` (right multiplication, twisted by the
/// automorphisms) together with the points of `H`; the `H` points are dropped when the
/// action on `N` alone is already faithful. Generators: those of `N`, then those of `H`.
pub fn semidirect_product(n: &PermGroup, h: &PermGroup, action: &[Vec<Permutation>]) -> Result<PermGroup> {
    if action.len() != h.generators().len() {
        return Err(Error::arg("one automorphism per generator of H is required"));
    }
    let n_els = n.elements()?;
    let size = n_els.len();
    let mut autos = Vec::with_capacity(action.len());
    for imgs in action {
        let phi = validate_hom(Homomorphism::new(n.clone(), n.clone(), imgs.clone())?)?;
        if !phi.is_injective() {
            return Err(Error::NotHomomorphism(
                "action image is not an automorphism of N".into(),
            ));
        }
        let images: Vec<u32> = n_els
            .iter()
            .map(|x| n_els.index_of(phi.image(x).expect("validated table")).expect("in N") as u32)
            .collect();
        autos.push(Permutation::from_images(images)?);
    }
    let right_mul: Vec<Permutation> = n
        .generators()
        .iter()
        .map(|g| {
            Permutation::from_images(
                n_els
                    .iter()
                    .map(|x| n_els.index_of(&x.then(g)).expect("closed") as u32)
                    .collect(),
            )
        })
        .collect::<Result<_>>()?;
    let target = n.order() * h.order();

    let compact = PermGroup::new(
        size,
        right_mul.iter().chain(autos.iter()).cloned().collect(),
    )?;
    if compact.order() == target {
        return Ok(compact.with_limits(n.limits()));
    }
    let degree = size + h.degree();
    let gens: Vec<Permutation> = right_mul
        .iter()
        .map(|r| shift(r, 0, degree))
        .chain(
            autos
                .iter()
                .zip(h.generators())
                .map(|(t, hg)| shift(t, 0, degree).then(&shift(hg, size, degree))),
        )
        .collect();
    let g = PermGroup::new(degree, gens)?.with_limits(n.limits());
    if g.order() != target {
        return Err(Error::NotHomomorphism(format!(
            "the given automorphisms do not define an action of H (order {} instead of {target})",
            g.order()
        )));
    }
    Ok(g)
}

/// The unique central involution of `g`.
pub fn central_involution(g: &PermGroup) -> Result<Permutation> {
    let z = center(g)?;
    let invs: Vec<Permutation> = z
        .elements()?
        .iter()
        .filter(|x| x.order() == 2)
        .cloned()
        .collect();
    match invs.as_slice() {
        [z] => Ok(z.clone()),
        _ => Err(Error::arg(format!(
            "expected a unique central involution, found {}",
            invs.len()
        ))),
    }
}

/// `A ×_{Z2} B` with its factor maps.
#[derive(Clone, Debug)]
pub struct CentralProduct {
    pub group: PermGroup,
    factors: [Factor; 2],
    classes: HashMap<(u32, u32), u32>,
    count: usize,
}

#[derive(Clone, Debug)]
struct Factor {
    degree: usize,
    /// `Some` when the factor was replaced by its right regular representation.
    regular: Option<Arc<Elements>>,
}

impl Factor {
    fn realize(&self, x: &Permutation) -> Permutation {
        match &self.regular {
            None => x.clone(),
            Some(els) => Permutation::from_images_unchecked(
                els.iter()
                    .map(|y| els.index_of(&y.then(x)).expect("element of the factor") as u32)
                    .collect(),
            ),
        }
    }
}

impl CentralProduct {
    /// The image of `(x, y)` for `x ∈ A`, `y ∈ B`.
    pub fn pair(&self, x: &Permutation, y: &Permutation) -> Permutation {
        let x = self.factors[0].realize(x);
        let y = self.factors[1].realize(y);
        let mut images = vec![0u32; self.count];
        for (&(p, q), &c) in &self.classes {
            images[c as usize] = self.classes[&(x.images()[p as usize], y.images()[q as usize])];
        }
        Permutation::from_images_unchecked(images)
    }

    pub fn left(&self, x: &Permutation) -> Permutation {
        self.pair(x, &Permutation::identity(self.factors[1].degree))
    }

    pub fn right(&self, y: &Permutation) -> Permutation {
        self.pair(&Permutation::identity(self.factors[0].degree), y)
    }
}

fn prepare(g: &PermGroup) -> Result<(Permutation, Factor)> {
    let z = central_involution(g)?;
    let regular = if z.images().iter().enumerate().all(|(i, &x)| i as u32 != x) {
        None
    } else {
        Some(g.elements()?)
    };
    let f = Factor {
        degree: g.degree(),
        regular,
    };
    Ok((f.realize(&z), f))
}

/// `(A × B)/⟨(z_A, z_B)⟩`, acting on pairs of points modulo the paired involution.
///
/// A factor whose central involution has fixed points is first replaced by its regular
/// representation so the pair action is faithful.
pub fn central_product(a: &PermGroup, b: &PermGroup) -> Result<CentralProduct> {
    let (za, fa) = prepare(a)?;
    let (zb, fb) = prepare(b)?;
    let mut classes = HashMap::new();
    let mut count = 0u32;
    for p in 0..za.degree() as u32 {
        for q in 0..zb.degree() as u32 {
            if classes.contains_key(&(p, q)) {
                continue;
            }
            classes.insert((p, q), count);
            classes.insert((za.images()[p as usize], zb.images()[q as usize]), count);
            count += 1;
        }
    }
    let mut cp = CentralProduct {
        group: PermGroup::trivial(1),
        factors: [fa, fb],
        classes,
        count: count as usize,
    };
    let gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|x| cp.left(x))
        .chain(b.generators().iter().map(|y| cp.right(y)))
        .collect();
    let g = PermGroup::new(cp.count, gens)?.with_limits(a.limits());
    let want = a.order() * b.order() / 2;
    if g.order() != want {
        return Err(Error::Unsupported(format!(
            "pair action has order {}, expected {want}",
            g.order()
        )));
    }
    cp.group = g;
    Ok(cp)
}

/// Z2 ≀ S_n on 2n signed points: point i is +e_{i+1}, point n+i is −e_{i+1}.
pub fn wreath_z2(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::arg("wreath_z2: n must be at least 1"));
    }
    let degree = 2 * n;
    let signed = |perm: &dyn Fn(usize) -> usize, flip: Option<usize>| {
        let mut images = vec![0u32; degree];
        for i in 0..n {
            let j = perm(i);
            let f = flip == Some(i);
            images[i] = (if f { j + n } else { j }) as u32;
            images[i + n] = (if f { j } else { j + n }) as u32;
        }
        Permutation::from_images_unchecked(images)
    };
    let mut gens = vec![signed(&|i| i, Some(0))];
    if n >= 2 {
        gens.push(signed(&|i| (i + 1) % n, None));
        gens.push(signed(&|i| if i < 2 { 1 - i } else { i }, None));
    }
    PermGroup::new(degree, gens)
}

fn crt_unit(moduli: [usize; 3], residues: [i64; 3]) -> usize {
    let m: usize = moduli.iter().product();
    (0..m)
        .find(|&u| {
            moduli
                .iter()
                .zip(residues)
                .all(|(&mi, r)| (u as i64 - r).rem_euclid(mi as i64) == 0)
        })
        .expect("moduli are pairwise coprime")
}

/// `Z_{abc} ⋊ Q8` where i, j, k centralize Z_a, Z_b, Z_c respectively and invert the other
/// two factors.
///
/// Requires odd pairwise coprime `a > b > c ≥ 1`; the degenerate `b = c = 1` is accepted.
pub fn milnor_q(a: usize, b: usize, c: usize) -> Result<PermGroup> {
    let ordered = a > b && (b > c || (b == 1 && c == 1)) && c >= 1;
    if !ordered {
        return Err(Error::arg(format!(
            "milnor_Q({a},{b},{c}): need a > b > c ≥ 1"
        )));
    }
    if [a, b, c].iter().any(|x| x % 2 == 0) {
        return Err(Error::arg(format!("milnor_Q({a},{b},{c}): parameters must be odd")));
    }
    if a.gcd(&b) != 1 || a.gcd(&c) != 1 || b.gcd(&c) != 1 {
        return Err(Error::arg(format!(
            "milnor_Q({a},{b},{c}): parameters must be pairwise coprime"
        )));
    }
    let m = a * b * c;
    let n = cyclic(m)?;
    let q = q8()?;
    let g = &n.generators().first().cloned().unwrap_or_else(|| Permutation::identity(1));
    let u_i = crt_unit([a, b, c], [1, -1, -1]);
    let u_j = crt_unit([a, b, c], [-1, 1, -1]);
    let action = if m == 1 {
        vec![vec![], vec![]]
    } else {
        vec![vec![g.pow(u_i as i64)], vec![g.pow(u_j as i64)]]
    };
    semidirect_product(&n, &q, &action)
}

/// `D*_8 ×_{Z2} D*_{4a} × Z_b`.
pub fn question_group(a: usize, b: usize) -> Result<PermGroup> {
    if a < 3 || a % 2 == 0 || b % 2 == 0 || a.gcd(&b) != 1 {
        return Err(Error::arg(format!(
            "question_group({a},{b}): need odd coprime a ≥ 3 and odd b"
        )));
    }
    let cp = central_product(&binary_dihedral(8)?, &binary_dihedral(4 * a)?)?;
    if b == 1 {
        return Ok(cp.group);
    }
    direct_product(&cp.group, &cyclic(b)?)
}
