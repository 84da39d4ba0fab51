//! Conjugacy classes with power maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::Result;
use crate::group::{Elements, PermGroup};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    pub representatives: Vec<Permutation>,
    pub sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    /// For each prime `p` dividing the exponent, `power_map[p][k]` is the class of `rep_k^p`.
    pub power_map: BTreeMap<u64, Vec<usize>>,
    group_order: u64,
    elements: Arc<Elements>,
    class_of: Vec<u32>,
}

/// Classes sorted by element order, then class size, then lexicographically smallest member,
/// which is also the representative. The identity class comes first.
pub fn conjugacy_classes(g: &PermGroup) -> Result<ConjugacyClasses> {
    let elements = g.elements_within(g.limits().enumeration)?;
    let n = elements.len();
    let mut class_of = vec![u32::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != u32::MAX {
            continue;
        }
        let id = raw.len() as u32;
        class_of[start] = id;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let x = elements.get(members[i]).clone();
            for s in g.generators() {
                let y = elements
                    .index_of(&x.conjugate_by(s))
                    .expect("conjugate lies in the group");
                if class_of[y] == u32::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            i += 1;
        }
        raw.push(members);
    }

    let mut keyed: Vec<(u64, u64, Permutation, usize)> = raw
        .iter()
        .enumerate()
        .map(|(k, members)| {
            let rep = members
                .iter()
                .map(|&i| elements.get(i))
                .min()
                .expect("class is nonempty")
                .clone();
            (rep.order(), members.len() as u64, rep, k)
        })
        .collect();
    keyed.sort();
    let mut relabel = vec![0u32; raw.len()];
    for (new, (_, _, _, old)) in keyed.iter().enumerate() {
        relabel[*old] = new as u32;
    }
    for c in &mut class_of {
        *c = relabel[*c as usize];
    }

    let representatives: Vec<Permutation> = keyed.iter().map(|k| k.2.clone()).collect();
    let sizes: Vec<u64> = keyed.iter().map(|k| k.1).collect();
    let element_orders: Vec<u64> = keyed.iter().map(|k| k.0).collect();
    let exponent = element_orders.iter().fold(1u64, |a, &b| a.lcm(&b));

    let mut classes = ConjugacyClasses {
        representatives,
        sizes,
        element_orders,
        power_map: BTreeMap::new(),
        group_order: n as u64,
        elements,
        class_of,
    };
    for p in primes_up_to(exponent) {
        if exponent % p != 0 {
            continue;
        }
        let map = (0..classes.len()).map(|k| classes.power_class(k, p as i64)).collect();
        classes.power_map.insert(p, map);
    }
    Ok(classes)
}

pub(crate) fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders.iter().fold(1u64, |a, &b| a.lcm(&b))
    }

    pub fn elements(&self) -> &Arc<Elements> {
        &self.elements
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.index_of(p).map(|i| self.class_of_index(i))
    }

    /// Class of `rep_k^m`.
    pub fn power_class(&self, k: usize, m: i64) -> usize {
        let x = self.representatives[k].pow(m);
        self.class_of(&x).expect("power lies in the group")
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.power_class(k, -1)
    }

    pub fn centralizer_order(&self, k: usize) -> u64 {
        self.group_order / self.sizes[k]
    }

    /// Element indices belonging to class `k`.
    pub fn members(&self, k: usize) -> Vec<usize> {
        (0..self.class_of.len())
            .filter(|&i| self.class_of[i] as usize == k)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let cyc: Vec<usize> = (0..n).collect();
        PermGroup::new(
            n,
            vec![
                Permutation::from_cycles(n, &[&cyc]).unwrap(),
                Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn s4_classes() {
        let c = conjugacy_classes(&sym(4)).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.sizes, vec![1, 3, 6, 8, 6]);
        assert_eq!(c.element_orders, vec![1, 2, 2, 3, 4]);
        assert!(c.representatives[0].is_identity());
        // squares of 4-cycles are double transpositions
        assert_eq!(c.power_map[&2][4], 1);
    }

    #[test]
    fn s6_has_eleven_classes() {
        let c = conjugacy_classes(&sym(6)).unwrap();
        assert_eq!(c.len(), 11);
        assert_eq!(c.sizes.iter().sum::<u64>(), 720);
    }
}
