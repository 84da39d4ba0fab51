//! Finitely generated permutation groups with memoized stabilizer chains.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::schreier::StabilizerChain;

/// Order bounds shared by every exhaustive algorithm.
///
/// `enumeration` caps algorithms that walk the group once (classes, centralizers);
/// `materialize` caps algorithms that keep the full element set around for repeated
/// lookups (automorphisms, isomorphism search, character tables).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub enumeration: u64,
    pub materialize: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 100_000,
            materialize: 10_000,
        }
    }
}

/// Indexed element list of a small group.
#[derive(Debug)]
pub struct Elements {
    list: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl Elements {
    fn new(list: Vec<Permutation>) -> Self {
        let index = list
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Elements { list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.list[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.list.iter()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Index of `list[a] * list[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.list[a].then(&self.list[b]))
            .expect("group is closed under multiplication")
    }

    pub fn identity_index(&self) -> usize {
        self.list
            .iter()
            .position(|p| p.is_identity())
            .expect("identity is an element")
    }
}

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    limits: Limits,
    chain: Arc<OnceLock<StabilizerChain>>,
    elements: Arc<OnceLock<Arc<Elements>>>,
}

impl PermGroup {
    /// An empty generator list denotes the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::arg("degree must be positive"));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            limits: Limits::default(),
            chain: Arc::new(OnceLock::new()),
            elements: Arc::new(OnceLock::new()),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Parses 1-based cycle strings, e.g. `["(1 2 3)", "(1 2)"]`.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, Some(degree)))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, perms)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// The subgroup generated by `gens`, inheriting this group's limits.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        Ok(PermGroup::new(self.degree, gens)?.with_limits(self.limits))
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| {
            StabilizerChain::new(self.degree, &self.generators).expect("degrees validated")
        })
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    /// Membership for elements known to have the right degree.
    pub fn has(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn check_order(&self, bound: u64) -> Result<u64> {
        let order = self.order();
        if order > bound {
            return Err(Error::OrderBound { order, bound });
        }
        Ok(order)
    }

    /// The full element list, bounded by `limits().materialize`.
    pub fn elements(&self) -> Result<Arc<Elements>> {
        self.elements_within(self.limits.materialize)
    }

    pub fn elements_within(&self, bound: u64) -> Result<Arc<Elements>> {
        if let Some(e) = self.elements.get() {
            return Ok(e.clone());
        }
        self.check_order(bound)?;
        Ok(self
            .elements
            .get_or_init(|| Arc::new(Elements::new(self.chain().elements())))
            .clone())
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    /// Same set of elements.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && self.order() == other.order()
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|s| {
                self.generators
                    .iter()
                    .all(|g| self.has(&g.conjugate_by(s)))
            })
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            for g in &self.generators {
                let q = g.image(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Evaluates a word given as (generator index, exponent) pairs, left to right.
    pub fn evaluate_word(&self, word: &[(usize, i64)]) -> Permutation {
        word.iter().fold(self.identity(), |acc, &(g, e)| {
            acc.then(&self.generators[g].pow(e))
        })
    }

    /// Deterministic pseudo-random element: a product of generators driven by an LCG.
    pub fn pseudo_random_element(&self, seed: u64, length: usize) -> Permutation {
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut acc = self.identity();
        if self.generators.is_empty() {
            return acc;
        }
        for _ in 0..length {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let k = (state >> 33) as usize % self.generators.len();
            acc = acc.then(&self.generators[k]);
        }
        acc
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn from_json(json: &GroupJson) -> Result<Self> {
        let refs: Vec<&str> = json.generators.iter().map(|s| s.as_str()).collect();
        PermGroup::from_cycle_strings(json.degree, &refs)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Wire form of a group: degree plus 1-based cycle strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let g = PermGroup::from_cycle_strings(5, &["(1 2 3 4 5)", "(1 2)"]).unwrap();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(json, r#"{"degree":5,"generators":["(1 2 3 4 5)","(1 2)"]}"#);
        let back: GroupJson = serde_json::from_str(&json).unwrap();
        let h = PermGroup::from_json(&back).unwrap();
        assert_eq!(h.order(), 120);
    }

    #[test]
    fn memoized_chain_is_shared_across_threads() {
        let g = PermGroup::from_cycle_strings(6, &["(1 2 3 4 5 6)", "(1 2)"]).unwrap();
        let orders: Vec<u64> = std::thread::scope(|s| {
            let hs: Vec<_> = (0..4).map(|_| s.spawn(|| g.order())).collect();
            hs.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(orders.iter().all(|&o| o == 720));
    }

    #[test]
    fn element_bound_is_a_hard_error() {
        let g = PermGroup::from_cycle_strings(8, &["(1 2 3 4 5 6 7 8)", "(1 2)"]).unwrap();
        let small = Limits {
            enumeration: 1000,
            materialize: 1000,
        };
        let err = g.with_limits(small).elements().unwrap_err();
        assert!(matches!(err, Error::OrderBound { order: 40320, bound: 1000 }));
    }

    #[test]
    fn membership_degree_mismatch() {
        let g = PermGroup::from_cycle_strings(5, &["(1 2 3)"]).unwrap();
        assert!(g.contains(&Permutation::identity(4)).is_err());
    }
}
