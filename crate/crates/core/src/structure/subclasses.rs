//! Conjugacy classes of subgroups isomorphic to A5, via (2,3,5)-generation.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use crate::classes::conjugacy_classes;
use crate::error::{Error, Result};
use crate::group::{Elements, PermGroup};
use crate::subgroups::is_perfect;

/// Order bound for the ambient group; large enough for A8.
pub const A5_CLASS_BOUND: u64 = 30_000;

#[derive(Clone, Debug)]
pub struct SubgroupClasses {
    pub representatives: Vec<PermGroup>,
    /// Number of conjugates in each class.
    pub class_sizes: Vec<usize>,
}

impl SubgroupClasses {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "count": self.count(),
            "classes": self.representatives.iter().zip(&self.class_sizes).map(|(r, &n)| json!({
                "generators": r.to_json().generators,
                "conjugates": n,
            })).collect::<Vec<_>>(),
        })
    }
}

fn closure(els: &Elements, gens: &[usize]) -> Vec<u32> {
    let mut seen = HashSet::new();
    let id = els.identity_index();
    seen.insert(id);
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = els.mul(x, s);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    let mut v: Vec<u32> = queue.into_iter().map(|i| i as u32).collect();
    v.sort_unstable();
    v
}

/// Subgroups of `g` isomorphic to `h` up to conjugacy in `g`; `h` must be A5.
pub fn subgroup_classes_isomorphic_to(h: &PermGroup, g: &PermGroup) -> Result<SubgroupClasses> {
    if h.order() != 60 || !is_perfect(h)? {
        return Err(Error::Unsupported(
            "subgroup class enumeration is implemented for A5 only".into(),
        ));
    }
    let els = g.elements_within(A5_CLASS_BOUND)?;
    let classes = conjugacy_classes(g)?;
    let orders: Vec<u64> = els.iter().map(|x| x.order()).collect();
    let threes: Vec<usize> = (0..els.len()).filter(|&i| orders[i] == 3).collect();

    // Every A5 contains a (2,3,5) pair (x, y) with x a chosen class representative.
    let mut found: Vec<(Vec<u32>, [usize; 2])> = Vec::new();
    let mut known: HashSet<Vec<u32>> = HashSet::new();
    for (k, rep) in classes.representatives.iter().enumerate() {
        if classes.element_orders[k] != 2 {
            continue;
        }
        let x = els.index_of(rep).expect("member");
        for &y in &threes {
            if orders[els.mul(x, y)] != 5 {
                continue;
            }
            // ⟨a, b | a², b³, (ab)⁵⟩ is A5, which is simple, so ⟨x, y⟩ ≅ A5
            let sub = closure(&els, &[x, y]);
            debug_assert_eq!(sub.len(), 60);
            if known.insert(sub.clone()) {
                found.push((sub, [x, y]));
            }
        }
    }

    let gen_idx: Vec<usize> = g
        .generators()
        .iter()
        .map(|s| els.index_of(s).expect("generator"))
        .collect();
    let inv_idx: Vec<usize> = gen_idx
        .iter()
        .map(|&s| els.index_of(&els.get(s).inverse()).expect("closed"))
        .collect();
    let conj = |sub: &[u32], s: usize, si: usize| -> Vec<u32> {
        let mut v: Vec<u32> = sub
            .iter()
            .map(|&a| els.mul(els.mul(si, a as usize), s) as u32)
            .collect();
        v.sort_unstable();
        v
    };
    let mut orbit_of: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for (sub, [x, y]) in &found {
        if orbit_of.contains_key(sub) {
            continue;
        }
        let id = reps.len();
        orbit_of.insert(sub.clone(), id);
        let mut queue = vec![sub.clone()];
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head].clone();
            head += 1;
            for (&s, &si) in gen_idx.iter().zip(&inv_idx) {
                let next = conj(&cur, s, si);
                if !orbit_of.contains_key(&next) {
                    orbit_of.insert(next.clone(), id);
                    queue.push(next);
                }
            }
        }
        sizes.push(queue.len());
        reps.push(g.subgroup(vec![els.get(*x).clone(), els.get(*y).clone()])?);
    }
    Ok(SubgroupClasses {
        representatives: reps,
        class_sizes: sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{alt, sym};

    #[test]
    fn a5_classes_in_small_groups() {
        let a5 = alt(5).unwrap();
        assert_eq!(subgroup_classes_isomorphic_to(&a5, &a5).unwrap().count(), 1);
        assert_eq!(subgroup_classes_isomorphic_to(&a5, &sym(5).unwrap()).unwrap().count(), 1);
        // A6 has two classes, swapped by its outer automorphism
        assert_eq!(subgroup_classes_isomorphic_to(&a5, &alt(6).unwrap()).unwrap().count(), 2);
        assert!(subgroup_classes_isomorphic_to(&sym(4).unwrap(), &a5).is_err());
    }
}
