//! Cayley graph of a small group over a chosen generating list, used to extend generator
//! maps to full homomorphisms without re-deriving words.

use std::sync::Arc;

use crate::error::Result;
use crate::group::{Elements, PermGroup};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    elements: Arc<Elements>,
    generators: Vec<Permutation>,
    /// `right_mul[s][i]` = index of `element_i * gen_s`.
    right_mul: Vec<Vec<u32>>,
    /// BFS spanning tree: (element, parent, generator) in discovery order, root excluded.
    tree: Vec<(u32, u32, u32)>,
    identity: usize,
}

impl CayleyGraph {
    /// `generators` must generate `group`.
    pub fn new(group: &PermGroup, generators: &[Permutation]) -> Result<Self> {
        let elements = group.elements()?;
        let n = elements.len();
        let right_mul: Vec<Vec<u32>> = generators
            .iter()
            .map(|s| {
                (0..n)
                    .map(|i| {
                        elements
                            .index_of(&elements.get(i).then(s))
                            .expect("generator lies in the group") as u32
                    })
                    .collect()
            })
            .collect();
        let identity = elements.identity_index();
        let mut seen = vec![false; n];
        seen[identity] = true;
        let mut queue = vec![identity as u32];
        let mut tree = Vec::with_capacity(n.saturating_sub(1));
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (s, row) in right_mul.iter().enumerate() {
                let y = row[x as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    tree.push((y, x, s as u32));
                    queue.push(y);
                }
            }
        }
        debug_assert_eq!(queue.len(), n, "generators must generate the group");
        Ok(CayleyGraph {
            elements,
            generators: generators.to_vec(),
            right_mul,
            tree,
            identity,
        })
    }

    pub fn elements(&self) -> &Arc<Elements> {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Spans the whole group.
    pub fn is_spanning(&self) -> bool {
        self.tree.len() + 1 == self.elements.len()
    }

    /// Extends `gen_images` (elements of `codomain`) to a map on all elements.
    ///
    /// Returns `Err((g, s))` with element indices when `phi(g) * phi(s) != phi(g * s)`.
    pub fn extend(
        &self,
        codomain: &Elements,
        gen_images: &[usize],
    ) -> std::result::Result<Vec<u32>, (usize, usize)> {
        let n = self.elements.len();
        let mut img = vec![u32::MAX; n];
        img[self.identity] = codomain.identity_index() as u32;
        let gen_perms: Vec<&Permutation> = gen_images.iter().map(|&i| codomain.get(i)).collect();
        for &(y, x, s) in &self.tree {
            let p = codomain.get(img[x as usize] as usize).then(gen_perms[s as usize]);
            img[y as usize] = codomain.index_of(&p).expect("codomain closed") as u32;
        }
        for (s, row) in self.right_mul.iter().enumerate() {
            for x in 0..n {
                let y = row[x] as usize;
                let p = codomain.get(img[x] as usize).then(gen_perms[s]);
                if codomain.index_of(&p) != Some(img[y] as usize) {
                    return Err((x, s));
                }
            }
        }
        Ok(img)
    }
}
