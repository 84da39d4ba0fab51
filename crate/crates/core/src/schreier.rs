//! Deterministic Schreier-Sims.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
    inverses: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        let inverses = transversal.clone();
        Level {
            base_point,
            gens: Vec::new(),
            transversal,
            inverses,
            orbit: vec![base_point],
        }
    }

    /// Extends the orbit after `gens` grew; old orbit points keep their representatives.
    fn extend_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            let rep = self.transversal[p].clone().expect("orbit point has a representative");
            for g in &self.gens {
                let q = g.image(p);
                if self.transversal[q].is_none() {
                    let u = rep.then(g);
                    self.inverses[q] = Some(u.inverse());
                    self.transversal[q] = Some(u);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            if g.is_identity() {
                continue;
            }
            let (residue, _) = chain.strip(g, 0);
            if !residue.is_identity() {
                chain.schreier_sims_from(residue);
            }
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn transversal(&self, level: usize) -> impl Iterator<Item = (usize, &Permutation)> {
        let l = &self.levels[level];
        l.orbit
            .iter()
            .map(move |&p| (p, l.transversal[p].as_ref().expect("orbit point")))
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.strip(p, 0).0.is_identity()
    }

    /// Sifts `g` from `start` down. Returns the residue and the level where sifting stopped
    /// (`levels.len()` if it went through every level).
    fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = h.image(level.base_point);
            match &level.inverses[beta] {
                None => return (h, i),
                Some(u_inv) => h = h.then(u_inv),
            }
        }
        (h, self.levels.len())
    }

    /// Inserts a new generator and restores the chain property.
    fn schreier_sims_from(&mut self, first: Permutation) {
        let (residue, stop) = self.strip(&first, 0);
        if residue.is_identity() {
            return;
        }
        self.insert(residue, stop);
        // Levels deeper than `i` are known to be complete.
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            match self.find_failing_schreier_generator(lvl) {
                Some((h, j)) => {
                    self.insert(h, j);
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
    }

    /// `h` fixes the base points of all levels `< at`; it becomes a strong generator of
    /// levels `0..=at`, opening a new level if `at` is past the end.
    fn insert(&mut self, h: Permutation, at: usize) {
        if at == self.levels.len() {
            let bp = h.first_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(bp, self.degree));
        }
        for level in &mut self.levels[..=at] {
            level.gens.push(h.clone());
            level.extend_orbit();
        }
    }

    /// Looks for a Schreier generator at `lvl` that does not sift through the deeper levels.
    fn find_failing_schreier_generator(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &beta in &level.orbit {
            let u_beta = level.transversal[beta].as_ref().expect("orbit point");
            for s in &level.gens {
                let gamma = s.image(beta);
                let u_gamma_inv = level.inverses[gamma].as_ref().expect("orbit closed");
                let h = u_beta.then(s).then(u_gamma_inv);
                if h.is_identity() {
                    continue;
                }
                let (residue, stop) = self.strip(&h, lvl + 1);
                if !residue.is_identity() {
                    return Some((residue, stop));
                }
            }
        }
        None
    }

    /// Every element exactly once, in a fixed order determined by the chain.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<&Permutation> = level
                .orbit
                .iter()
                .map(|&p| level.transversal[p].as_ref().expect("orbit point"))
                .collect();
            let mut next = Vec::with_capacity(acc.len() * reps.len());
            for u in &reps {
                for a in &acc {
                    next.push(a.then(u));
                }
            }
            acc = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=8 {
            let cyc: Vec<usize> = (0..n).collect();
            let c = Permutation::from_cycles(n, &[&cyc]).unwrap();
            let t = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
            let ch = StabilizerChain::new(n, &[c, t]).unwrap();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(ch.order(), fact, "S{n}");
        }
    }

    #[test]
    fn trivial_and_membership() {
        let ch = StabilizerChain::new(5, &[Permutation::identity(5)]).unwrap();
        assert_eq!(ch.order(), 1);
        let a5 = StabilizerChain::new(5, &[p("(1 2 3)", 5), p("(1 2 3 4 5)", 5)]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(a5.contains(&p("(2 4 5)", 5)));
        assert!(!a5.contains(&p("(1 2)", 5)));
        let els = a5.elements();
        assert_eq!(els.len(), 60);
        let set: std::collections::HashSet<_> = els.iter().collect();
        assert_eq!(set.len(), 60);
    }

    #[test]
    fn degree_mismatch() {
        assert!(StabilizerChain::new(5, &[p("(1 2)", 4)]).is_err());
    }
}
