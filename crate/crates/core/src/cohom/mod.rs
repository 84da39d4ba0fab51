//! F2-modules for permutation groups and their first and second cohomology.
//!
//! A module is a homomorphism `ρ` into GL(k,2) with `ρ(xy) = ρ(x)ρ(y)` for the group's
//! left-to-right product, acting on column vectors.

pub mod f2;

use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::construct::catalog::a5_standard;
use crate::construct::VerifiedPresentation;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub use f2::F2Matrix;

#[derive(Clone, Debug)]
pub struct GModule {
    name: String,
    group: PermGroup,
    dim: usize,
    generators: Vec<F2Matrix>,
    table: Arc<HashMap<Permutation, F2Matrix>>,
}

impl GModule {
    /// Validated over every element of the group.
    pub fn new(name: impl Into<String>, group: PermGroup, generators: Vec<F2Matrix>) -> Result<Self> {
        let name = name.into();
        if generators.len() != group.generators().len() {
            return Err(Error::arg(format!("{name}: one matrix per generator is required")));
        }
        let dim = generators.first().map_or(0, F2Matrix::rows);
        for g in &generators {
            if g.rows() != dim || g.cols() != dim || g.inverse().is_none() {
                return Err(Error::arg(format!("{name}: action matrices must be invertible {dim}x{dim}")));
            }
        }
        let els = group.elements()?;
        let mut mats: Vec<Option<F2Matrix>> = vec![None; els.len()];
        let id = els.identity_index();
        mats[id] = Some(F2Matrix::identity(dim));
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let mx = mats[x].clone().expect("visited");
            for (s, gen) in group.generators().iter().enumerate() {
                let y = els.index_of(&els.get(x).then(gen)).expect("closed");
                let my = mx.mul(&generators[s])?;
                match &mats[y] {
                    Some(old) if *old != my => {
                        return Err(Error::NotHomomorphism(format!(
                            "{name}: action disagrees at {} * {gen}",
                            els.get(x)
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
        let table = els
            .iter()
            .cloned()
            .zip(mats.into_iter().map(|m| m.expect("generators generate")))
            .collect();
        Ok(GModule {
            name,
            group,
            dim,
            generators,
            table: Arc::new(table),
        })
    }

    pub fn trivial(group: &PermGroup, dim: usize) -> Result<Self> {
        let gens = vec![F2Matrix::identity(dim); group.generators().len()];
        GModule::new(format!("trivial_{dim}"), group.clone(), gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[F2Matrix] {
        &self.generators
    }

    pub fn matrix_of(&self, x: &Permutation) -> Result<F2Matrix> {
        self.table
            .get(x)
            .cloned()
            .ok_or_else(|| Error::arg(format!("{x} is not in the module's group")))
    }

    /// `M^Q`, as a basis.
    pub fn fixed_space(&self) -> Vec<Vec<bool>> {
        let id = F2Matrix::identity(self.dim);
        let blocks: Vec<F2Matrix> = self
            .generators
            .iter()
            .map(|g| g.add(&id).expect("square"))
            .collect();
        if blocks.is_empty() {
            return F2Matrix::zeros(0, self.dim).kernel();
        }
        F2Matrix::vstack(&blocks).expect("same width").kernel()
    }

    /// The submodule generated by `v`, as the dimension of its span.
    pub fn spin(&self, v: &[bool]) -> usize {
        let mut basis: Vec<Vec<bool>> = Vec::new();
        let mut queue = vec![v.to_vec()];
        let rank_of = |b: &Vec<Vec<bool>>| F2Matrix::from_columns(self.dim, b).rank();
        while let Some(w) = queue.pop() {
            let mut trial = basis.clone();
            trial.push(w.clone());
            if rank_of(&trial) > basis.len() {
                basis = trial;
                for g in &self.generators {
                    queue.push(g.mul_vec(&w).expect("dimension"));
                }
            }
        }
        basis.len()
    }

    /// No proper nonzero submodule: every nonzero vector spins up to the whole space.
    pub fn is_irreducible(&self) -> bool {
        assert!(self.dim < 20, "exhaustive irreducibility test is for small modules");
        (1u32..1 << self.dim).all(|bits| {
            let v: Vec<bool> = (0..self.dim).map(|i| bits >> i & 1 == 1).collect();
            self.spin(&v) == self.dim
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "group": serde_json::to_value(self.group.to_json()).expect("serializable"),
            "dimension": self.dim,
            "action": self.generators.iter().map(F2Matrix::bit_rows).collect::<Vec<_>>(),
        })
    }
}

/// Dimension of the space of module maps `X` with `ρ_a(g) X = X ρ_b(g)`.
pub fn intertwiner_dim(a: &GModule, b: &GModule) -> Result<usize> {
    if a.group.generators() != b.group.generators() {
        return Err(Error::arg("modules must be for the same generators"));
    }
    let (m, n) = (a.dim, b.dim);
    // unknown X[i][j] at index i*n + j; equation rows (g, i, j)
    let mut blocks = Vec::new();
    for (ga, gb) in a.generators.iter().zip(&b.generators) {
        let mut eq = F2Matrix::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                let row = i * n + j;
                for k in 0..m {
                    if ga.get(i, k) {
                        let c = k * n + j;
                        eq.set(row, c, !eq.get(row, c));
                    }
                }
                for k in 0..n {
                    if gb.get(k, j) {
                        let c = i * n + k;
                        eq.set(row, c, !eq.get(row, c));
                    }
                }
            }
        }
        blocks.push(eq);
    }
    Ok(F2Matrix::vstack(&blocks)?.kernel().len())
}

/// The even-weight part of the permutation module F2⁵ of A5 = ⟨(1 2)(3 4), (1 3 5)⟩, in the
/// basis `e_i + e_5`.
pub fn module_deleted_perm() -> Result<GModule> {
    deleted_perm_module(&a5_standard())
}

/// The even-weight part of F2^n for a permutation group of degree n.
pub fn deleted_perm_module(group: &PermGroup) -> Result<GModule> {
    let n = group.degree();
    if n < 2 {
        return Err(Error::arg("deleted permutation module needs degree ≥ 2"));
    }
    let k = n - 1;
    let gens = group
        .generators()
        .iter()
        .map(|s| {
            // ρ(s) e_i = e_{s⁻¹(i)} makes ρ a homomorphism for left-to-right products
            let inv = s.inverse();
            let mut m = F2Matrix::zeros(k, k);
            for i in 0..k {
                for j in [inv.image(i), inv.image(k)] {
                    if j < k {
                        m.set(j, i, !m.get(j, i));
                    }
                }
            }
            m
        })
        .collect();
    GModule::new("deleted_perm", group.clone(), gens)
}

/// F4 = F2[ω]/(ω² + ω + 1); the pair (x, y) ∈ F4² is the F2-vector (x₀, x₁, y₀, y₁).
fn f4_mul(a: u8, b: u8) -> u8 {
    let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
    // (a0 + a1ω)(b0 + b1ω) with ω² = ω + 1
    let c0 = (a0 & b0) ^ (a1 & b1);
    let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    c0 | c1 << 1
}

fn f4_matrix(m: [[u8; 2]; 2]) -> F2Matrix {
    let mut out = F2Matrix::zeros(4, 4);
    // column for basis vector (bit c of coordinate j)
    for j in 0..2 {
        for c in 0..2u8 {
            let unit = 1u8 << c;
            for i in 0..2 {
                let v = f4_mul(m[i][j], unit);
                out.set(2 * i, 2 * j + c as usize, v & 1 == 1);
                out.set(2 * i + 1, 2 * j + c as usize, v & 2 == 2);
            }
        }
    }
    out
}

fn closure(gens: &[F2Matrix]) -> Vec<F2Matrix> {
    let n = gens[0].rows();
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![F2Matrix::identity(n)];
    seen.insert(out[0].clone());
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for g in gens {
            let y = x.mul(g).expect("square");
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
    }
    out
}

fn order_of(m: &F2Matrix) -> usize {
    let id = F2Matrix::identity(m.rows());
    let mut p = m.clone();
    let mut k = 1;
    while p != id {
        p = p.mul(m).expect("square");
        k += 1;
    }
    k
}

/// A5 ≅ SL(2,4) acting on F4² viewed as F2⁴: images of a = (1 2)(3 4) and b = (1 3 5) are
/// the first pair in SL(2,4) with a² = b³ = (ab)⁵ = 1 generating the whole group.
pub fn module_sl24() -> Result<GModule> {
    let sl = closure(&[
        f4_matrix([[1, 1], [0, 1]]),
        f4_matrix([[0, 1], [1, 0]]),
        f4_matrix([[2, 0], [0, 3]]),
    ]);
    debug_assert_eq!(sl.len(), 60);
    let twos: Vec<&F2Matrix> = sl.iter().filter(|m| order_of(m) == 2).collect();
    let threes: Vec<&F2Matrix> = sl.iter().filter(|m| order_of(m) == 3).collect();
    for a in &twos {
        for b in &threes {
            let ab = a.mul(b)?;
            if order_of(&ab) == 5 && closure(&[(*a).clone(), (*b).clone()]).len() == 60 {
                return GModule::new("natural_sl24", a5_standard(), vec![(*a).clone(), (*b).clone()]);
            }
        }
    }
    Err(Error::Unsupported("no (2,3,5)-generating pair in SL(2,4)".into()))
}

pub fn named_module(name: &str, group: &PermGroup) -> Result<GModule> {
    match name {
        "deleted_perm" => deleted_perm_module(group),
        "natural_sl24" => {
            let m = module_sl24()?;
            if group.generators() == m.group().generators() {
                return Ok(m);
            }
            let iso = crate::structure::isomorphic(group, m.group())?
                .ok_or_else(|| Error::arg("natural_sl24 needs a group isomorphic to A5"))?;
            let gens = iso
                .gen_images
                .iter()
                .map(|q| m.matrix_of(q))
                .collect::<Result<Vec<_>>>()?;
            GModule::new("natural_sl24", group.clone(), gens)
        }
        "trivial" => GModule::trivial(group, 1),
        _ => Err(Error::arg(format!("unknown module {name:?}"))),
    }
}

/// Module matrices for a presentation's generator images.
fn presentation_matrices(m: &GModule, p: &VerifiedPresentation) -> Result<Vec<F2Matrix>> {
    if !p.target().same_group(&m.group) {
        return Err(Error::arg("presentation is verified for a different group"));
    }
    p.gen_images().iter().map(|x| m.matrix_of(x)).collect()
}

/// Linear system whose kernel is the space of derivations, unknowns being the values on
/// the presentation generators (generator-major).
fn derivation_system(m: &GModule, p: &VerifiedPresentation) -> Result<F2Matrix> {
    let gens = presentation_matrices(m, p)?;
    let invs: Vec<F2Matrix> = gens
        .iter()
        .map(|g| g.inverse().expect("invertible"))
        .collect();
    let k = m.dim;
    let ngens = gens.len();
    let rels = &p.presentation().relators;
    let mut sys = F2Matrix::zeros(rels.len() * k, ngens * k);
    for (r, rel) in rels.iter().enumerate() {
        // Fox calculus: d(u x) = d(u) + u·d(x), d(x⁻¹) = −x⁻¹·d(x)
        let mut prefix = F2Matrix::identity(k);
        let mut coeff = vec![F2Matrix::zeros(k, k); ngens];
        for &l in &rel.0 {
            let g = l.unsigned_abs() as usize - 1;
            if l > 0 {
                coeff[g] = coeff[g].add(&prefix)?;
                prefix = prefix.mul(&gens[g])?;
            } else {
                prefix = prefix.mul(&invs[g])?;
                coeff[g] = coeff[g].add(&prefix)?;
            }
        }
        for (g, c) in coeff.iter().enumerate() {
            for i in 0..k {
                for j in 0..k {
                    if c.get(i, j) {
                        sys.set(r * k + i, g * k + j, true);
                    }
                }
            }
        }
    }
    Ok(sys)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1 {
    pub dimension: usize,
    pub dim_derivations: usize,
    pub dim_principal: usize,
    /// Derivations (values on generators) completing the principal ones to all derivations.
    pub class_basis: Vec<Vec<bool>>,
}

pub fn h1(m: &GModule, p: &VerifiedPresentation) -> Result<H1> {
    let sys = derivation_system(m, p)?;
    let der = sys.kernel();
    let k = m.dim;
    let gens = presentation_matrices(m, p)?;
    let id = F2Matrix::identity(k);
    // principal derivation of e_j: g ↦ (ρ(g) − 1) e_j
    let principal: Vec<Vec<bool>> = (0..k)
        .map(|j| {
            gens.iter()
                .flat_map(|g| g.add(&id).expect("square").column(j))
                .collect()
        })
        .collect();
    let width = gens.len() * k;
    let dim_principal = F2Matrix::from_columns(width, &principal).rank();
    let mut basis = principal.clone();
    let mut rank = dim_principal;
    let mut class_basis = Vec::new();
    for d in &der {
        basis.push(d.clone());
        let r = F2Matrix::from_columns(width, &basis).rank();
        if r > rank {
            rank = r;
            class_basis.push(d.clone());
        } else {
            basis.pop();
        }
    }
    Ok(H1 {
        dimension: der.len() - dim_principal,
        dim_derivations: der.len(),
        dim_principal,
        class_basis,
    })
}

/// Largest coinduced dimension k·|Q| accepted.
pub const COINDUCED_BOUND: u64 = 10_000;

pub struct Coinduced {
    /// Functions Q → M with `(q·f)(x) = f(xq)`; coordinate `(x, i)` at `x·k + i`.
    pub module: GModule,
    /// Columns are the images `x ↦ x·e_j` of the basis of M.
    pub embed: F2Matrix,
    pub quotient: GModule,
}

pub fn coinduced(m: &GModule) -> Result<Coinduced> {
    let q = &m.group;
    let k = m.dim;
    let size = q.order() * k as u64;
    if size > COINDUCED_BOUND {
        return Err(Error::OrderBound {
            order: size,
            bound: COINDUCED_BOUND,
        });
    }
    let els = q.elements()?;
    let n = els.len();
    let dim = n * k;
    let c_gens: Vec<F2Matrix> = q
        .generators()
        .iter()
        .map(|g| {
            let mut mat = F2Matrix::zeros(dim, dim);
            for x in 0..n {
                let xq = els.index_of(&els.get(x).then(g)).expect("closed");
                for i in 0..k {
                    mat.set(x * k + i, xq * k + i, true);
                }
            }
            mat
        })
        .collect();
    let c = GModule::new(format!("coind({})", m.name), q.clone(), c_gens)?;

    let mut embed = F2Matrix::zeros(dim, k);
    for x in 0..n {
        let rho = m.matrix_of(els.get(x))?;
        for i in 0..k {
            for j in 0..k {
                embed.set(x * k + i, j, rho.get(i, j));
            }
        }
    }
    if embed.rank() != k {
        return Err(Error::Unsupported("coinduced embedding is not injective".into()));
    }

    // Complement coordinates: everything except the pivot coordinates of embed's column space.
    let mut et = embed.transpose();
    let pivots = {
        let mut reduced = et.clone();
        let p = rref_pivots(&mut reduced);
        et = reduced;
        p
    };
    let keep: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let project = |v: &[bool]| -> Vec<bool> {
        // subtract the combination of reduced rows that clears the pivot coordinates
        let mut w = v.to_vec();
        for (r, &p) in pivots.iter().enumerate() {
            if w[p] {
                for c in 0..dim {
                    if et.get(r, c) {
                        w[c] = !w[c];
                    }
                }
            }
        }
        keep.iter().map(|&c| w[c]).collect()
    };
    let n_gens: Vec<F2Matrix> = c
        .generators()
        .iter()
        .map(|g| {
            let cols: Vec<Vec<bool>> = keep
                .iter()
                .map(|&c| project(&g.column(c)))
                .collect();
            F2Matrix::from_columns(keep.len(), &cols)
        })
        .collect();
    let quotient = GModule::new(format!("coind({})/{}", m.name, m.name), q.clone(), n_gens)?;
    Ok(Coinduced {
        module: c,
        embed,
        quotient,
    })
}

fn rref_pivots(m: &mut F2Matrix) -> Vec<usize> {
    // RREF through the kernel machinery's elimination: rebuild row by row
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m.get(i, c)) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let (a, b) = (m.get(p, j), m.get(r, j));
                m.set(p, j, b);
                m.set(r, j, a);
            }
        }
        for i in 0..rows {
            if i != r && m.get(i, c) {
                for j in 0..cols {
                    if m.get(r, j) {
                        m.set(i, j, !m.get(i, j));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// H²(Q; M) as H¹(Q; Coind(M)/M).
pub fn h2(m: &GModule, p: &VerifiedPresentation) -> Result<usize> {
    let c = coinduced(m)?;
    Ok(h1(&c.quotient, p)?.dimension)
}
