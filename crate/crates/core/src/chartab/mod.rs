//! Exact complex character tables by Dixon's method.
//!
//! The class-multiplication coefficients are diagonalized simultaneously over a prime field
//! F_p with p ≡ 1 (mod exponent), which yields each character modulo p. Because p exceeds
//! every character degree, the eigenvalue multiplicities of each class representative can
//! be read off exactly by a discrete Fourier transform, and the characters are assembled
//! from these multiplicities as sums of roots of unity.

pub mod cyclotomic;
mod modp;
pub mod real;

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::Zero;
use serde_json::{json, Value};

use crate::classes::{conjugacy_classes, is_prime, ConjugacyClasses};
use crate::error::{Error, Result};
use crate::group::PermGroup;

pub use cyclotomic::{Cyclotomic, Rational};
pub use real::{embeds_orthogonally, real_irreducibles, EmbeddingWitness, RealIrreducible, Variant};

use modp::Fp;

#[derive(Debug)]
pub struct CharacterTable {
    pub classes: ConjugacyClasses,
    /// Rows are irreducible characters, columns are classes, all with conductor = exponent.
    pub irreducibles: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<u64>,
    pub indicators: Vec<i8>,
    /// `eigen[row][class][k]`: multiplicity of ζ_o^k as an eigenvalue, o the class's
    /// element order.
    eigen: Vec<Vec<Vec<u32>>>,
}

static CACHE: LazyLock<Mutex<HashMap<(usize, Vec<Vec<u32>>), Arc<CharacterTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Cached per group (keyed by degree and sorted generator list).
pub fn character_table(g: &PermGroup) -> Result<Arc<CharacterTable>> {
    let mut gens: Vec<Vec<u32>> = g.generators().iter().map(|p| p.images().to_vec()).collect();
    gens.sort();
    gens.dedup();
    let key = (g.degree(), gens);
    if let Some(t) = CACHE.lock().expect("poisoned").get(&key) {
        return Ok(t.clone());
    }
    let t = Arc::new(dixon(g)?);
    CACHE.lock().expect("poisoned").insert(key, t.clone());
    Ok(t)
}

/// Smallest prime p ≡ 1 (mod e) with p > 2|G|.
fn dixon_prime(e: u64, order: u64) -> u64 {
    let mut p = (2 * order / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

fn dixon(g: &PermGroup) -> Result<CharacterTable> {
    let bound = g.limits().materialize;
    g.check_order(bound)?;
    let classes = conjugacy_classes(g)?;
    let r = classes.len();
    let order = classes.group_order();
    let e = classes.exponent();
    let f = Fp::new(dixon_prime(e, order));
    let els = classes.elements().clone();
    let members: Vec<Vec<usize>> = (0..r).map(|k| classes.members(k)).collect();
    let inverses: Vec<usize> = (0..els.len())
        .map(|i| els.index_of(&els.get(i).inverse()).expect("closed"))
        .collect();
    let rep_idx: Vec<usize> = classes
        .representatives
        .iter()
        .map(|x| els.index_of(x).expect("member"))
        .collect();

    // (A_j)[k][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut a = vec![vec![0u64; r]; r];
        for &x in &members[j] {
            let xi = inverses[x];
            for (l, &z) in rep_idx.iter().enumerate() {
                let k = classes.class_of_index(els.mul(xi, z));
                a[k][l] += 1;
            }
        }
        for row in &mut a {
            for v in row.iter_mut() {
                *v = f.reduce(*v);
            }
        }
        a
    };

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![modp::identity_basis(r)];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = class_matrix(j);
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
                continue;
            }
            next.extend(modp::split(&f, &a, s)?);
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Unsupported(
            "class matrices failed to split into one-dimensional eigenspaces".into(),
        ));
    }

    let powers: Vec<Vec<usize>> = (0..r)
        .map(|j| {
            (0..classes.element_orders[j] as i64)
                .map(|l| classes.power_class(j, l))
                .collect()
        })
        .collect();
    let ord_p = f.reduce(order);
    let mut rows = Vec::with_capacity(r);
    for s in &spaces {
        let v = &s[0];
        let w0 = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, w0)).collect();
        // χ(1)² · Σ ω_j ω_{j*} / |C_j| = |G|
        let mut sum = 0;
        for j in 0..r {
            let t = f.mul(omega[j], omega[classes.inverse_class(j)]);
            sum = f.add(sum, f.mul(t, f.inv(f.reduce(classes.sizes[j]))));
        }
        let d2 = f.mul(ord_p, f.inv(sum));
        let d = (1..=order)
            .take_while(|d| d * d <= order)
            .find(|d| d * d % f.p == d2)
            .ok_or_else(|| Error::Unsupported("no integral degree found".into()))?;
        let chi_p: Vec<u64> = (0..r)
            .map(|j| f.mul(f.mul(omega[j], d), f.inv(f.reduce(classes.sizes[j]))))
            .collect();
        rows.push((d, lift_row(&f, &classes, &powers, e, &chi_p, d)?));
    }

    let mut built: Vec<(u64, Vec<Cyclotomic>, Vec<Vec<u32>>)> = rows
        .into_iter()
        .map(|(d, eig)| {
            let vals = eig
                .iter()
                .enumerate()
                .map(|(j, m)| value_from_multiplicities(e as u32, classes.element_orders[j] as u32, m))
                .collect();
            (d, vals, eig)
        })
        .collect();
    built.sort_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| {
            let ka: Vec<&[Rational]> = a.1.iter().map(Cyclotomic::coeffs).collect();
            let kb: Vec<&[Rational]> = b.1.iter().map(Cyclotomic::coeffs).collect();
            kb.cmp(&ka)
        })
    });

    let mut table = CharacterTable {
        classes,
        irreducibles: Vec::with_capacity(r),
        degrees: Vec::with_capacity(r),
        indicators: Vec::new(),
        eigen: Vec::with_capacity(r),
    };
    for (d, vals, eig) in built {
        table.degrees.push(d);
        table.irreducibles.push(vals);
        table.eigen.push(eig);
    }
    table.indicators = (0..r).map(|i| table.compute_indicator(i)).collect::<Result<_>>()?;
    Ok(table)
}

/// Eigenvalue multiplicities per class from the character modulo p.
fn lift_row(
    f: &Fp,
    classes: &ConjugacyClasses,
    powers: &[Vec<usize>],
    e: u64,
    chi_p: &[u64],
    d: u64,
) -> Result<Vec<Vec<u32>>> {
    let z = f.root_of_unity(e);
    (0..classes.len())
        .map(|j| {
            let o = classes.element_orders[j];
            let zo = f.pow(z, e / o);
            let vals: Vec<u64> = powers[j].iter().map(|&c| chi_p[c]).collect();
            let inv_o = f.inv(f.reduce(o));
            let mut mult = Vec::with_capacity(o as usize);
            for k in 0..o {
                let zk = f.inv(f.pow(zo, k));
                let mut s = 0;
                let mut t = 1;
                for &v in &vals {
                    s = f.add(s, f.mul(v, t));
                    t = f.mul(t, zk);
                }
                let m = f.mul(s, inv_o);
                if m > d {
                    return Err(Error::Unsupported(format!(
                        "eigenvalue multiplicity {m} exceeds degree {d}"
                    )));
                }
                mult.push(m as u32);
            }
            if mult.iter().map(|&m| m as u64).sum::<u64>() != d {
                return Err(Error::Unsupported("eigenvalue multiplicities do not sum to the degree".into()));
            }
            Ok(mult)
        })
        .collect()
}

fn value_from_multiplicities(e: u32, o: u32, mult: &[u32]) -> Cyclotomic {
    let step = (e / o) as usize;
    let mut raw = vec![Rational::zero(); e as usize];
    for (k, &m) in mult.iter().enumerate() {
        raw[k * step] += Rational::from_integer(m as i128);
    }
    Cyclotomic::from_powers(e, raw)
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn exponent(&self) -> u32 {
        self.classes.exponent() as u32
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.irreducibles[row][class]
    }

    pub fn eigenvalue_multiplicities(&self, row: usize, class: usize) -> &[u32] {
        &self.eigen[row][class]
    }

    /// ⟨χ, ψ⟩ for class functions given as value rows.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut s = Cyclotomic::zero();
        for j in 0..self.classes.len() {
            let t = (&a[j] * &b[j].conj()).scale(Rational::from_integer(self.classes.sizes[j] as i128));
            s = &s + &t;
        }
        s.scale(Rational::new(1, self.order() as i128))
    }

    /// Decomposition of a class function into irreducible multiplicities.
    pub fn decompose(&self, values: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.irreducibles
            .iter()
            .map(|chi| self.inner_product(values, chi))
            .collect()
    }

    fn compute_indicator(&self, row: usize) -> Result<i8> {
        let mut s = Cyclotomic::zero();
        for j in 0..self.classes.len() {
            let sq = self.square_class(j);
            let t = self.irreducibles[row][sq].scale(Rational::from_integer(self.classes.sizes[j] as i128));
            s = &s + &t;
        }
        let nu = s.scale(Rational::new(1, self.order() as i128));
        match nu.to_integer() {
            Some(v @ -1..=1) => Ok(v as i8),
            _ => Err(Error::Unsupported(format!("indicator {nu} is not in {{-1, 0, 1}}"))),
        }
    }

    fn square_class(&self, j: usize) -> usize {
        match self.classes.power_map.get(&2) {
            Some(map) => map[j],
            // odd exponent: squaring permutes classes
            None => self.classes.power_class(j, 2),
        }
    }

    pub fn fs_indicator(&self, row: usize) -> i8 {
        self.indicators[row]
    }

    /// det ρ_χ on each class, read off from the eigenvalue multiplicities.
    pub fn det_character(&self, row: usize) -> Vec<Cyclotomic> {
        let e = self.exponent();
        (0..self.classes.len())
            .map(|j| {
                let o = self.classes.element_orders[j] as u32;
                let s: u64 = self.eigen[row][j]
                    .iter()
                    .enumerate()
                    .map(|(k, &m)| k as u64 * m as u64)
                    .sum();
                Cyclotomic::root(e, ((s % o as u64) * (e / o) as u64) as i64)
            })
            .collect()
    }

    /// Classes on which χ takes the value χ(1).
    pub fn kernel_classes(&self, row: usize) -> Vec<usize> {
        let d = self.degrees[row] as u32;
        (0..self.classes.len())
            .filter(|&j| self.eigen[row][j][0] == d)
            .collect()
    }

    pub fn kernel(&self, row: usize) -> Result<PermGroup> {
        self.subgroup_of_classes(&self.kernel_classes(row))
    }

    pub(crate) fn subgroup_of_classes(&self, cls: &[usize]) -> Result<PermGroup> {
        let els = self.classes.elements();
        let g = PermGroup::new(
            els.get(0).degree(),
            self.classes.representatives.clone(),
        )?;
        let picked: Vec<_> = cls
            .iter()
            .flat_map(|&k| self.classes.members(k))
            .map(|i| els.get(i))
            .collect();
        crate::subgroups::subgroup_from_elements(&g, picked)
    }

    pub fn is_faithful(&self, row: usize) -> bool {
        self.kernel_classes(row) == [0]
    }

    /// Column and row orthogonality, Σ d² = |G|, degrees dividing |G|.
    pub fn verify(&self) -> bool {
        let r = self.len();
        let order = self.order();
        if self.degrees.iter().map(|d| d * d).sum::<u64>() != order
            || self.degrees.iter().any(|d| order % d != 0)
        {
            return false;
        }
        for i in 0..r {
            for j in i..r {
                let ip = self.inner_product(&self.irreducibles[i], &self.irreducibles[j]);
                if ip != Cyclotomic::int((i == j) as i128) {
                    return false;
                }
            }
        }
        for a in 0..r {
            for b in a..r {
                let mut s = Cyclotomic::zero();
                for chi in &self.irreducibles {
                    s = &s + &(&chi[a] * &chi[b].conj());
                }
                let expect = if a == b {
                    self.classes.centralizer_order(a) as i128
                } else {
                    0
                };
                if s != Cyclotomic::int(expect) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "classes": (0..self.classes.len()).map(|k| json!({
                "rep": self.classes.representatives[k].to_string(),
                "size": self.classes.sizes[k],
                "element_order": self.classes.element_orders[k],
            })).collect::<Vec<_>>(),
            "irreducibles": self.irreducibles.iter()
                .map(|row| row.iter().map(Cyclotomic::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "degrees": self.degrees,
            "indicators": self.indicators,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{alt, cyclic, q8, sym};

    fn degrees(g: &PermGroup) -> Vec<u64> {
        character_table(g).unwrap().degrees.clone()
    }

    #[test]
    fn small_tables() {
        assert_eq!(degrees(&alt(5).unwrap()), vec![1, 3, 3, 4, 5]);
        assert_eq!(degrees(&q8().unwrap()), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees(&cyclic(4).unwrap()), vec![1, 1, 1, 1]);
        let t = character_table(&sym(4).unwrap()).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2, 3, 3]);
        assert!(t.verify());
    }

    #[test]
    fn indicators_and_determinants() {
        let t = character_table(&q8().unwrap()).unwrap();
        assert_eq!(t.indicators, vec![1, 1, 1, 1, -1]);
        let t = character_table(&cyclic(3).unwrap()).unwrap();
        assert_eq!(t.indicators, vec![1, 0, 0]);
        let t = character_table(&alt(5).unwrap()).unwrap();
        assert!(t.indicators.iter().all(|&i| i == 1));
        for row in 0..t.len() {
            assert!(t.det_character(row).iter().all(|v| *v == Cyclotomic::one()));
        }
    }

    #[test]
    fn a5_irrationalities() {
        let t = character_table(&alt(5).unwrap()).unwrap();
        // the two 3-dimensional characters take (1 ± √5)/2 on 5-cycles
        let fives: Vec<usize> = (0..t.classes.len())
            .filter(|&k| t.classes.element_orders[k] == 5)
            .collect();
        let v = t.value(1, fives[0]);
        assert!(v.to_rational().is_none());
        let (re, im) = v.to_complex();
        assert!(im.abs() < 1e-12);
        assert!((re - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9 || (re - (1.0 - 5f64.sqrt()) / 2.0).abs() < 1e-9);
    }
}
