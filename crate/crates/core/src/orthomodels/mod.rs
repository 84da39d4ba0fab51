//! Exact orthogonal models: signed permutation groups, S6 on the 5-simplex, the
//! icosahedral and cube groups, planar rotations and their block sums.
//!
//! Matrices act on row vectors from the right, so the map from a permutation group
//! (composed left to right) to matrices is a homomorphism for the usual matrix product.
//! Invariance of the Gram form `Q` is therefore `M Q Mᵀ = Q`.

pub mod field;
pub mod matrix;

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::construct::{cyclic, direct_product, sym, wreath_z2};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subgroups::normalizer;

pub use field::{Q5, Rational};
pub use matrix::Mat;

/// A faithful orthogonal representation of a permutation group.
#[derive(Clone, Debug)]
pub struct OrthRep {
    name: String,
    group: PermGroup,
    generators: Vec<Mat>,
    gram: Mat,
    table: Arc<HashMap<Permutation, Mat>>,
}

fn is_positive_definite(q: &Mat) -> bool {
    q == &q.transpose() && (1..=q.dim()).all(|k| q.leading_minor(k).signum() == Ordering::Greater)
}

/// Whether `m` preserves the form `q`.
pub fn preserves(m: &Mat, q: &Mat) -> bool {
    &(m * q) * &m.transpose() == *q
}

impl OrthRep {
    /// Validates the Gram form, invariance, the homomorphism (over every element) and
    /// faithfulness.
    pub fn new(name: impl Into<String>, group: PermGroup, generators: Vec<Mat>, gram: Mat) -> Result<Self> {
        let name = name.into();
        if generators.len() != group.generators().len() {
            return Err(Error::arg(format!("{name}: one matrix per generator is required")));
        }
        let n = gram.dim();
        if generators.iter().any(|g| g.dim() != n) {
            return Err(Error::arg(format!("{name}: matrix dimensions disagree")));
        }
        if !is_positive_definite(&gram) {
            return Err(Error::arg(format!("{name}: Gram form is not positive definite")));
        }
        if let Some(k) = generators.iter().position(|g| !preserves(g, &gram)) {
            return Err(Error::arg(format!("{name}: generator {k} does not preserve the form")));
        }
        let els = group.elements()?;
        let idx = els.identity_index();
        let mut mats: Vec<Option<Mat>> = vec![None; els.len()];
        mats[idx] = Some(Mat::identity(n));
        let mut queue = vec![idx];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let mx = mats[x].clone().expect("visited");
            for (s, gen) in group.generators().iter().enumerate() {
                let y = els.index_of(&els.get(x).then(gen)).expect("closed");
                let my = &mx * &generators[s];
                match &mats[y] {
                    Some(old) if *old != my => {
                        return Err(Error::NotHomomorphism(format!(
                            "{name}: matrices disagree at {} * {}",
                            els.get(x),
                            gen
                        )))
                    }
                    Some(_) => {}
                    None => {
                        mats[y] = Some(my);
                        queue.push(y);
                    }
                }
            }
        }
        let table: HashMap<Permutation, Mat> = els
            .iter()
            .cloned()
            .zip(mats.into_iter().map(|m| m.expect("generators generate")))
            .collect();
        let distinct: HashSet<&Mat> = table.values().collect();
        if distinct.len() != table.len() {
            return Err(Error::arg(format!(
                "{name}: representation is not faithful ({} matrices for {} elements)",
                distinct.len(),
                table.len()
            )));
        }
        Ok(OrthRep {
            name,
            group,
            generators,
            gram,
            table: Arc::new(table),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn matrix_of(&self, x: &Permutation) -> Option<&Mat> {
        self.table.get(x)
    }

    /// Order of the matrix group (equal to the abstract order by faithfulness).
    pub fn matrix_group_order(&self) -> usize {
        self.table.values().collect::<HashSet<_>>().len()
    }

    pub fn is_orientation_preserving(&self) -> bool {
        self.generators.iter().all(|g| g.det() == Q5::one())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "dimension": self.dim(),
            "group": self.group.to_json(),
            "gram": mat_json(&self.gram),
            "generators": self.generators.iter().map(mat_json).collect::<Vec<_>>(),
        })
    }
}

fn entry_json(x: &Q5) -> Value {
    if x.is_rational() {
        Value::String(field::rational_string(&x.a))
    } else {
        json!({"a": field::rational_string(&x.a), "b": field::rational_string(&x.b)})
    }
}

/// Row-major array of entries: rational strings, or `{a, b}` for a + b√5.
pub fn mat_json(m: &Mat) -> Value {
    Value::Array(
        m.rows()
            .map(|r| Value::Array(r.iter().map(entry_json).collect()))
            .collect(),
    )
}

/// Matrix of a signed permutation on `2n` points (point `i` is `+e_i`, `n+i` is `−e_i`).
pub fn signed_perm_matrix(p: &Permutation) -> Result<Mat> {
    let n = p.degree() / 2;
    let mut m = Mat::zero(n);
    for i in 0..n {
        let j = p.image(i);
        let (col, sign) = if j < n { (j, 1) } else { (j - n, -1) };
        if p.image(i + n) != if j < n { j + n } else { j - n } {
            return Err(Error::arg(format!("{p} is not a signed permutation")));
        }
        m.set(i, col, Q5::int(sign));
    }
    Ok(m)
}

fn signed_rep(name: &str, gens: &[&str]) -> Result<OrthRep> {
    let g = PermGroup::from_cycle_strings(10, gens)?;
    let mats = g
        .generators()
        .iter()
        .map(signed_perm_matrix)
        .collect::<Result<Vec<_>>>()?;
    OrthRep::new(name, g, mats, Mat::identity(5))
}

macro_rules! memo {
    ($cell:ident, $body:expr) => {{
        static $cell: OnceLock<OrthRep> = OnceLock::new();
        $cell.get_or_init(|| $body.expect("static model is valid")).clone()
    }};
}

/// All signed permutation matrices of size 5, order 3840.
pub fn build_wtilde() -> OrthRep {
    memo!(WTILDE, {
        wreath_z2(5).and_then(|g| {
            let mats = g
                .generators()
                .iter()
                .map(signed_perm_matrix)
                .collect::<Result<Vec<_>>>()?;
            OrthRep::new("wtilde", g, mats, Mat::identity(5))
        })
    })
}

/// The determinant-one signed permutations, order 1920: generated by −P(12), P(12345)
/// and diag(−1,−1,1,1,1).
pub fn build_w() -> OrthRep {
    memo!(W, signed_rep("w", &["(1 7)(2 6)(3 8)(4 9)(5 10)", "(1 2 3 4 5)(6 7 8 9 10)", "(1 6)(2 7)"]))
}

/// The perfect index-2 subgroup of W, order 960: P(123), P(12345), diag(−1,−1,1,1,1).
pub fn build_w0() -> OrthRep {
    memo!(W0, signed_rep("w0", &["(1 2 3)(6 7 8)", "(1 2 3 4 5)(6 7 8 9 10)", "(1 6)(2 7)"]))
}

/// S6 on the sum-zero hyperplane of Q⁶ in the basis `v_i = e_i − e_6`, Gram form
/// `1 + δ_ij`. With `twisted`, odd permutations are composed with −I.
pub fn simplex_s6(twisted: bool) -> OrthRep {
    fn build(twisted: bool) -> Result<OrthRep> {
        let g = sym(6)?;
        let mats = g
            .generators()
            .iter()
            .map(|s| {
                let mut m = Mat::zero(5);
                for i in 0..5 {
                    // v_i ↦ v_{s(i)} − v_{s(5)}, with v_5 = 0
                    if s.image(i) < 5 {
                        m.set(i, s.image(i), Q5::int(1));
                    }
                    if s.image(5) < 5 {
                        let v = m.get(i, s.image(5)) - Q5::int(1);
                        m.set(i, s.image(5), v);
                    }
                }
                if twisted && s.sign() < 0 {
                    m.scale(-Q5::one())
                } else {
                    m
                }
            })
            .collect();
        let mut q = Mat::zero(5);
        for i in 0..5 {
            for j in 0..5 {
                q.set(i, j, Q5::int(if i == j { 2 } else { 1 }));
            }
        }
        OrthRep::new(if twisted { "simplex_s6_twisted" } else { "simplex_s6" }, g, mats, q)
    }
    if twisted {
        memo!(TWISTED, build(true))
    } else {
        memo!(PLAIN, build(false))
    }
}

/// Every product of the given matrices.
pub fn matrix_closure(gens: &[Mat], limit: usize) -> Result<Vec<Mat>> {
    let n = gens.first().map_or(0, Mat::dim);
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut out = vec![Mat::identity(n)];
    seen.insert(Mat::identity(n));
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for g in gens {
            let y = &x * g;
            if seen.insert(y.clone()) {
                if out.len() >= limit {
                    return Err(Error::OrderBound {
                        order: out.len() as u64 + 1,
                        bound: limit as u64,
                    });
                }
                out.push(y);
            }
        }
    }
    Ok(out)
}

/// Finds matrix images for the generators of `group` inside the matrix group generated by
/// `matrix_gens`, giving a faithful representation; candidates are tried in closure order.
pub fn rep_by_search(name: &str, group: &PermGroup, matrix_gens: &[Mat], gram: Mat) -> Result<OrthRep> {
    let all = matrix_closure(matrix_gens, 10_000)?;
    if all.len() as u64 != group.order() {
        return Err(Error::arg(format!(
            "{name}: matrix group has order {}, abstract group {}",
            all.len(),
            group.order()
        )));
    }
    let orders: Vec<u64> = group.generators().iter().map(Permutation::order).collect();
    let by_order: Vec<Vec<&Mat>> = orders
        .iter()
        .map(|&o| {
            all.iter()
                .filter(|m| m.order(o as u32) == Some(o as u32))
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; orders.len()];
    loop {
        if by_order.iter().any(Vec::is_empty) {
            break;
        }
        let mats: Vec<Mat> = choice
            .iter()
            .zip(&by_order)
            .map(|(&c, opts)| opts[c].clone())
            .collect();
        if let Ok(rep) = OrthRep::new(name, group.clone(), mats, gram.clone()) {
            return Ok(rep);
        }
        // odometer over the candidate lists
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Err(Error::arg(format!("{name}: no faithful matrix images found")));
            }
            choice[k] += 1;
            if choice[k] < by_order[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
    Err(Error::arg(format!("{name}: no matrices of the required orders")))
}

/// The rotation group of the icosahedron as A5 = ⟨(1 2)(3 4), (1 3 5)⟩ over Q(√5).
pub fn icosahedral_a5() -> OrthRep {
    memo!(ICO, {
        let half = Q5::frac(1, 2);
        let phi = Q5::phi();
        let iphi = phi.inv().expect("nonzero");
        let r = Mat::from_rows(vec![
            vec![Q5::one(), -phi, iphi],
            vec![phi, iphi, -Q5::one()],
            vec![iphi, Q5::one(), phi],
        ])
        .scale(half);
        let d = Mat::from_ints(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        let c = Mat::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let a5 = PermGroup::from_cycle_strings(5, &["(1 2)(3 4)", "(1 3 5)"]).expect("static");
        rep_by_search("icosahedral_a5", &a5, &[d, c, r], Mat::identity(3))
    })
}

/// The rotation group of the cube as S4 = ⟨(1 2 3 4), (1 2)⟩.
pub fn cube_s4() -> OrthRep {
    memo!(CUBE, {
        let quarter = Mat::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]]);
        let flip = Mat::from_ints(&[&[-1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        sym(4).and_then(|g| rep_by_search("cube_s4", &g, &[quarter, flip], Mat::identity(3)))
    })
}

/// Z_n rotating a plane by 2π/n, in the basis (e, Re) with Gram form [[1, c], [c, 1]],
/// c = cos(2π/n). Supported for n ∈ {1,…,6, 10}, where c ∈ Q(√5).
pub fn rotation(n: usize) -> Result<OrthRep> {
    let g = cyclic(n)?;
    if n <= 2 {
        let m = if n == 1 { Mat::identity(2) } else { Mat::identity(2).scale(-Q5::one()) };
        let mats = if n == 1 { vec![] } else { vec![m] };
        return OrthRep::new(format!("rotation_{n}"), g, mats, Mat::identity(2));
    }
    // t = 2 cos(2π/n)
    let t = match n {
        3 => Q5::int(-1),
        4 => Q5::zero(),
        5 => Q5::phi() - Q5::one(),
        6 => Q5::one(),
        10 => Q5::phi(),
        _ => return Err(Error::arg(format!("rotation({n}): cos(2π/{n}) is not in Q(√5)"))),
    };
    // row convention: e ↦ Re, Re ↦ −e + t·Re
    let m = Mat::from_rows(vec![vec![Q5::zero(), Q5::one()], vec![-Q5::one(), t]]);
    let c = t * Q5::frac(1, 2);
    let q = Mat::from_rows(vec![vec![Q5::one(), c], vec![c, Q5::one()]]);
    OrthRep::new(format!("rotation_{n}"), g, vec![m], q)
}

/// `g ↦ s(g)·I_dim` with `s` a ±1 character given on the generators; the representation
/// is not required to be faithful, so it is returned as raw generator matrices.
pub fn scalar_blocks(group: &PermGroup, dim: usize, signs: &[i32]) -> Vec<Mat> {
    group
        .generators()
        .iter()
        .zip(signs)
        .map(|(_, &s)| Mat::identity(dim).scale(Q5::int(s as i128)))
        .collect()
}

/// Block structure for [`block_embed`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Blocks {
    /// All blocks represent the same group; generator matrices are summed blockwise.
    Diagonal,
    /// The group is the direct product of the blocks' groups.
    Product,
}

/// One block: generator matrices for the block's group plus its Gram form. Blocks need
/// not be faithful on their own.
#[derive(Clone, Debug)]
pub struct Block {
    pub group: PermGroup,
    pub generators: Vec<Mat>,
    pub gram: Mat,
}

impl From<&OrthRep> for Block {
    fn from(r: &OrthRep) -> Self {
        Block {
            group: r.group.clone(),
            generators: r.generators.clone(),
            gram: r.gram.clone(),
        }
    }
}

impl Block {
    /// `dim` copies of a ±1 character of `group` given on its generators.
    pub fn scalar(group: &PermGroup, dim: usize, signs: &[i32]) -> Self {
        Block {
            group: group.clone(),
            generators: scalar_blocks(group, dim, signs),
            gram: Mat::identity(dim),
        }
    }

    pub fn trivial(group: &PermGroup, dim: usize) -> Self {
        Block::scalar(group, dim, &vec![1; group.generators().len()])
    }

    /// The sign character of a permutation group, on one coordinate.
    pub fn sign(group: &PermGroup) -> Self {
        let signs: Vec<i32> = group.generators().iter().map(Permutation::sign).collect();
        Block::scalar(group, 1, &signs)
    }
}

/// Block-diagonal sum; the result is validated (faithfulness included).
pub fn block_embed(name: &str, blocks: &[Block], structure: Blocks) -> Result<OrthRep> {
    let Some(first) = blocks.first() else {
        return Err(Error::arg("block_embed needs at least one block"));
    };
    let gram = blocks[1..]
        .iter()
        .fold(first.gram.clone(), |acc, b| acc.block(&b.gram));
    match structure {
        Blocks::Diagonal => {
            if blocks.iter().any(|b| b.group.generators() != first.group.generators()) {
                return Err(Error::arg(
                    "diagonal block_embed needs the same group and generators in every block",
                ));
            }
            let gens = (0..first.group.generators().len())
                .map(|k| {
                    blocks[1..]
                        .iter()
                        .fold(first.generators[k].clone(), |acc, b| acc.block(&b.generators[k]))
                })
                .collect();
            OrthRep::new(name, first.group.clone(), gens, gram)
        }
        Blocks::Product => {
            let mut group = first.group.clone();
            for b in &blocks[1..] {
                group = direct_product(&group, &b.group)?;
            }
            let mut gens = Vec::new();
            for (i, b) in blocks.iter().enumerate() {
                for m in &b.generators {
                    let mut full = Mat::zero(0);
                    for (j, other) in blocks.iter().enumerate() {
                        let piece = if i == j { m.clone() } else { Mat::identity(other.gram.dim()) };
                        full = full.block(&piece);
                    }
                    gens.push(full);
                }
            }
            OrthRep::new(name, group, gens, gram)
        }
    }
}

/// `dim ker(M − I) − 1`: the dimension of the fixed subsphere (−1 when empty).
pub fn fixed_sphere_dim(rep: &OrthRep, m: &Mat) -> Result<i32> {
    if m.dim() != rep.dim() || !preserves(m, rep.gram()) {
        return Err(Error::arg("matrix does not preserve the representation's form"));
    }
    Ok(m.sub(&Mat::identity(m.dim())).nullity() as i32 - 1)
}

/// Sorted fixed-sphere dimensions over the nontrivial elements of an elementary abelian
/// 2-subgroup (linear analogue only).
pub fn elementary_abelian_fixed_profile(rep: &OrthRep, a: &PermGroup) -> Result<Vec<i32>> {
    if !a.is_subgroup_of(rep.group()) {
        return Err(Error::arg("subgroup does not lie in the represented group"));
    }
    let els = a.elements()?;
    if !a.is_abelian() || els.iter().any(|x| !x.is_identity() && x.order() != 2) {
        return Err(Error::arg("subgroup is not an elementary abelian 2-group"));
    }
    let mut out = els
        .iter()
        .filter(|x| !x.is_identity())
        .map(|x| fixed_sphere_dim(rep, rep.matrix_of(x).expect("element of the group")))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

/// The diagonal (Z2)⁴ of determinant-one sign changes inside W.
pub fn diagonal_sign_changes() -> PermGroup {
    build_w()
        .group()
        .subgroup(
            ["(1 6)(2 7)", "(2 7)(3 8)", "(3 8)(4 9)", "(4 9)(5 10)"]
                .iter()
                .map(|s| Permutation::parse_cycles(s, Some(10)).expect("static"))
                .collect(),
        )
        .expect("degree 10")
}

/// The normalizer of `f` in the group of all signed permutations of five coordinates.
pub fn normalizer_in_signed_perms(f: &PermGroup) -> Result<PermGroup> {
    let wt = build_wtilde();
    if f.degree() != 10 || !f.is_subgroup_of(wt.group()) {
        return Err(Error::arg("F is not a group of signed permutations of 5 coordinates"));
    }
    normalizer(wt.group(), f)
}

/// A named model for the command line.
pub fn model(name: &str) -> Result<OrthRep> {
    Ok(match name {
        "wtilde" | "weyl_wtilde" => build_wtilde(),
        "w" | "weyl_w" => build_w(),
        "w0" | "weyl_w0" => build_w0(),
        "simplex_s6" => simplex_s6(false),
        "simplex_s6_twisted" => simplex_s6(true),
        "icosahedral_a5" => icosahedral_a5(),
        "cube_s4" => cube_s4(),
        "rotation_5" => rotation(5)?,
        _ => return Err(Error::arg(format!("unknown model {name:?}"))),
    })
}

pub const MODEL_NAMES: &[&str] = &[
    "wtilde",
    "w",
    "w0",
    "simplex_s6",
    "simplex_s6_twisted",
    "icosahedral_a5",
    "cube_s4",
    "rotation_5",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroups::is_perfect;

    #[test]
    fn weyl_orders() {
        assert_eq!(build_wtilde().group().order(), 3840);
        assert_eq!(build_w().group().order(), 1920);
        assert_eq!(build_w0().group().order(), 960);
        assert_eq!(build_w().matrix_group_order(), 1920);
        assert!(build_w().is_orientation_preserving());
        assert!(!build_wtilde().is_orientation_preserving());
        assert!(is_perfect(build_w0().group()).unwrap());
    }

    #[test]
    fn all_signs_flip_is_outside_w() {
        let minus = Permutation::parse_cycles("(1 6)(2 7)(3 8)(4 9)(5 10)", Some(10)).unwrap();
        assert!(!build_w().group().has(&minus));
        assert!(build_wtilde().group().has(&minus));
        assert_eq!(
            build_wtilde().matrix_of(&minus).unwrap(),
            &Mat::identity(5).scale(-Q5::one())
        );
    }

    #[test]
    fn simplex_models() {
        let plain = simplex_s6(false);
        let t = Permutation::parse_cycles("(1 2)", Some(6)).unwrap();
        assert_eq!(plain.matrix_of(&t).unwrap().det(), Q5::int(-1));
        let tw = simplex_s6(true);
        assert!(tw.is_orientation_preserving());
        assert_eq!(tw.matrix_group_order(), 720);
    }

    #[test]
    fn icosahedral_and_cube() {
        let ico = icosahedral_a5();
        assert_eq!(ico.matrix_group_order(), 60);
        assert!(ico.is_orientation_preserving());
        let cube = cube_s4();
        assert_eq!(cube.matrix_group_order(), 24);
        assert!(cube.is_orientation_preserving());
    }

    #[test]
    fn rotations() {
        for n in [1, 2, 3, 4, 5, 6, 10] {
            let r = rotation(n).unwrap();
            assert_eq!(r.matrix_group_order(), n);
        }
        assert!(rotation(7).is_err());
    }

    #[test]
    fn block_sums() {
        let ico = icosahedral_a5();
        let b = block_embed(
            "ico+2",
            &[Block::from(&ico), Block::trivial(ico.group(), 2)],
            Blocks::Diagonal,
        )
        .unwrap();
        assert_eq!(b.dim(), 5);
        assert!(b.is_orientation_preserving());

        let z2 = cyclic(2).unwrap();
        let r5 = rotation(5).unwrap();
        let z1 = cyclic(1).unwrap();
        let p = block_embed(
            "neg+rot5+2",
            &[
                Block::scalar(&z2, 1, &[-1]),
                Block::from(&r5),
                Block::trivial(&z1, 2),
            ],
            Blocks::Product,
        )
        .unwrap();
        assert_eq!(p.dim(), 5);
        assert_eq!(p.group().order(), 10);
        assert!(!p.is_orientation_preserving());

        let cube = cube_s4();
        let s = block_embed(
            "cube+sign+1",
            &[
                Block::from(&cube),
                Block::sign(cube.group()),
                Block::trivial(cube.group(), 1),
            ],
            Blocks::Diagonal,
        )
        .unwrap();
        assert_eq!(s.matrix_group_order(), 24);
        assert!(block_embed("bad", &[Block::from(&cube), Block::from(&ico)], Blocks::Diagonal).is_err());
    }

    #[test]
    fn fixed_spheres() {
        let w = build_w();
        assert_eq!(fixed_sphere_dim(&w, &Mat::identity(5)).unwrap(), 4);
        let d = Mat::diagonal(&[-1, -1, -1, -1, 1].map(Q5::int));
        assert_eq!(fixed_sphere_dim(&w, &d).unwrap(), 0);
        let profile = elementary_abelian_fixed_profile(&w, &diagonal_sign_changes()).unwrap();
        assert_eq!(profile.iter().filter(|&&d| d == 0).count(), 5);
        assert_eq!(profile.iter().filter(|&&d| d == 2).count(), 10);
        assert_eq!(profile.len(), 15);
    }

    #[test]
    fn signed_perm_normalizers() {
        let wt = build_wtilde();
        assert_eq!(normalizer_in_signed_perms(&diagonal_sign_changes()).unwrap().order(), 3840);
        assert_eq!(normalizer_in_signed_perms(wt.group()).unwrap().order(), 3840);
        assert_eq!(normalizer_in_signed_perms(&PermGroup::trivial(10)).unwrap().order(), 3840);
    }
}
