//! Backtracking search for homomorphisms given by generator images.
//!
//! Images are assigned one generator at a time. Each partial assignment is extended over
//! the subgroup generated so far by breadth-first search, which rejects it as soon as the
//! map is not well defined (or not injective, when required). Up to an automorphism of the
//! codomain only one image per orbit of the centralizer of the earlier images is tried.

use std::collections::HashMap;
use std::sync::Arc;

use crate::classes::{conjugacy_classes, ConjugacyClasses};
use crate::error::{Error, Result};
use crate::group::{Elements, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Bijections; the codomain has the same order.
    Iso,
    /// Injections.
    Mono,
    /// Every bijection, without symmetry reduction.
    AllIso,
}

/// Largest number of partial assignments examined before giving up.
pub const SEARCH_BUDGET: usize = 5_000_000;

pub(crate) struct Side {
    pub group: PermGroup,
    pub els: Arc<Elements>,
    pub orders: Vec<u64>,
    pub classes: ConjugacyClasses,
}

impl Side {
    pub fn new(g: &PermGroup) -> Result<Self> {
        let els = g.elements_within(g.limits().materialize)?;
        let orders = els.iter().map(Permutation::order).collect();
        let classes = conjugacy_classes(g)?;
        Ok(Side {
            group: g.clone(),
            els,
            orders,
            classes,
        })
    }

    fn centralizer_order(&self, i: usize) -> u64 {
        self.classes.centralizer_order(self.classes.class_of_index(i))
    }

    /// Multiset of (element order, centralizer order) over classes.
    pub fn fingerprint(&self) -> Vec<(u64, u64, u64)> {
        let c = &self.classes;
        let mut f: Vec<_> = (0..c.len())
            .map(|k| (c.element_orders[k], c.sizes[k], c.centralizer_order(k)))
            .collect();
        f.sort();
        f
    }
}

/// A few generators of `g`: one if cyclic, two if a short search finds a generating pair,
/// otherwise the given generators with redundant ones dropped.
pub(crate) fn small_generating_set(side: &Side) -> Result<Vec<Permutation>> {
    let g = &side.group;
    let n = g.order();
    if n == 1 {
        return Ok(vec![]);
    }
    let c = &side.classes;
    let mut reps: Vec<usize> = (0..c.len()).collect();
    reps.sort_by_key(|&k| std::cmp::Reverse(c.element_orders[k]));
    if c.element_orders[reps[0]] == n {
        return Ok(vec![c.representatives[reps[0]].clone()]);
    }
    let mut trials = 0;
    for &k in reps.iter().take(6) {
        let x = &c.representatives[k];
        for y in side.els.iter() {
            if x.commutes_with(y) {
                continue;
            }
            trials += 1;
            if trials > 400 {
                break;
            }
            if g.subgroup(vec![x.clone(), y.clone()])?.order() == n {
                return Ok(vec![x.clone(), y.clone()]);
            }
        }
    }
    let mut gens: Vec<Permutation> = Vec::new();
    for s in g.generators() {
        if !g.subgroup(gens.clone())?.has(s) {
            gens.push(s.clone());
        }
    }
    // drop generators that became redundant
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if g.subgroup(rest.clone())?.order() == n {
            gens = rest;
        } else {
            i += 1;
        }
    }
    Ok(gens)
}

pub(crate) struct Found {
    /// Element map, domain index → codomain index.
    pub map: Vec<u32>,
}

struct Search<'a> {
    dom: &'a Side,
    cod: &'a Side,
    gens: Vec<usize>,
    mode: Mode,
    limit: usize,
    steps: usize,
    found: Vec<Found>,
}

const NONE: u32 = u32::MAX;

impl Search<'_> {
    /// Extends the assignment over ⟨gens[0..=level]⟩; `None` if inconsistent.
    fn extend(&self, images: &[usize]) -> Option<Vec<u32>> {
        let (dom, cod) = (self.dom, self.cod);
        let mut map = vec![NONE; dom.els.len()];
        let mut hit = vec![false; cod.els.len()];
        let id = dom.els.identity_index();
        map[id] = cod.els.identity_index() as u32;
        hit[cod.els.identity_index()] = true;
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fx = map[x] as usize;
            for (s, &gs) in self.gens[..images.len()].iter().enumerate() {
                let y = dom.els.mul(x, gs);
                let fy = cod.els.mul(fx, images[s]) as u32;
                if map[y] == NONE {
                    if hit[fy as usize] {
                        return None;
                    }
                    hit[fy as usize] = true;
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn candidates(&self, level: usize, images: &[usize]) -> Result<Vec<usize>> {
        let (dom, cod) = (self.dom, self.cod);
        let g = self.gens[level];
        let want_order = dom.orders[g];
        let want_cent = dom.centralizer_order(g);
        let matches = |h: usize| {
            cod.orders[h] == want_order
                && (self.mode == Mode::Mono || cod.centralizer_order(h) == want_cent)
        };
        let mut all: Vec<usize> = (0..cod.els.len()).filter(|&h| matches(h)).collect();
        // orders of products with earlier generators are preserved
        all.retain(|&h| {
            (0..level).all(|j| {
                let gp = dom.els.mul(self.gens[j], g);
                let hp = cod.els.mul(images[j], h);
                dom.orders[gp] == cod.orders[hp]
            })
        });
        if self.mode == Mode::AllIso {
            return Ok(all);
        }
        // one candidate per orbit of the centralizer of the earlier images
        let fixed: Vec<Permutation> = images.iter().map(|&i| cod.els.get(i).clone()).collect();
        let cent = if fixed.is_empty() {
            cod.group.clone()
        } else {
            crate::subgroups::centralizer(&cod.group, &fixed)?
        };
        let pos: HashMap<usize, usize> = all.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        let mut seen = vec![false; all.len()];
        let mut reps = Vec::new();
        for start in 0..all.len() {
            if seen[start] {
                continue;
            }
            reps.push(all[start]);
            seen[start] = true;
            let mut stack = vec![all[start]];
            while let Some(h) = stack.pop() {
                for c in cent.generators() {
                    let conj = cod.els.get(h).conjugate_by(c);
                    let j = cod.els.index_of(&conj).expect("closed");
                    if let Some(&p) = pos.get(&j) {
                        if !seen[p] {
                            seen[p] = true;
                            stack.push(j);
                        }
                    }
                }
            }
        }
        Ok(reps)
    }

    fn run(&mut self, images: &mut Vec<usize>) -> Result<()> {
        if self.found.len() >= self.limit {
            return Ok(());
        }
        let level = images.len();
        if level == self.gens.len() {
            let map = self.extend(images).expect("checked at the previous level");
            self.found.push(Found { map });
            return Ok(());
        }
        for h in self.candidates(level, images)? {
            self.steps += 1;
            if self.steps > SEARCH_BUDGET {
                return Err(Error::BudgetExhausted { budget: SEARCH_BUDGET });
            }
            images.push(h);
            if self.extend(images).is_some() {
                self.run(images)?;
            }
            images.pop();
            if self.found.len() >= self.limit {
                break;
            }
        }
        Ok(())
    }
}

/// Homomorphisms from `dom` to `cod` of the requested kind, at most `limit` of them.
pub(crate) fn search(dom: &Side, gens: &[Permutation], cod: &Side, mode: Mode, limit: usize) -> Result<Vec<Found>> {
    let gens: Vec<usize> = gens
        .iter()
        .map(|g| dom.els.index_of(g).expect("generator lies in the group"))
        .collect();
    let mut s = Search {
        dom,
        cod,
        gens,
        mode,
        limit,
        steps: 0,
        found: Vec::new(),
    };
    s.run(&mut Vec::new())?;
    Ok(s.found)
}

/// Images of `g`'s own generators under an element map found by [`search`].
pub(crate) fn images_of_generators(dom: &Side, cod: &Side, found: &Found) -> Vec<Permutation> {
    dom.group
        .generators()
        .iter()
        .map(|s| {
            let i = dom.els.index_of(s).expect("generator");
            cod.els.get(found.map[i] as usize).clone()
        })
        .collect()
}
