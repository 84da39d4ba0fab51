//! Permutations on `{0, .., degree-1}`, composed left to right.
//!
//! `a * b` applies `a` first and then `b`, so `i^(ab) = (i^a)^b`. Words in
//! generators are therefore evaluated in reading order, which matches the
//! coset tables produced by Todd-Coxeter.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree || touched[p] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut out = vec![0u32; self.degree()];
        for i in 0..self.degree() {
            out[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i32 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        (0..self.degree()).all(|i| other.image(self.image(i)) == self.image(other.image(i)))
    }

    /// Parses 1-based disjoint-cycle notation such as `"(1 2 3)(4 5)"`.
    ///
    /// With `degree = None` the degree is the largest point mentioned (at least 1).
    pub fn parse_cycles(s: &str, degree: Option<usize>) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = match degree {
            Some(d) if d < max_point => {
                return Err(Error::InvalidPermutation(format!(
                    "point {max_point} exceeds degree {d}"
                )))
            }
            Some(d) => d,
            None => max_point.max(1),
        };
        let zero_based: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|&p| p - 1).collect())
            .collect();
        let refs: Vec<&[usize]> = zero_based.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(n, &refs)
    }

    pub fn resize(&self, degree: usize) -> Result<Self> {
        if degree >= self.degree() {
            let mut images = self.images.to_vec();
            images.extend(self.degree() as u32..degree as u32);
            return Ok(Permutation::from_images_unchecked(images));
        }
        if self.images[degree..]
            .iter()
            .enumerate()
            .any(|(i, &x)| x as usize != degree + i)
        {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: self.degree(),
            });
        }
        Ok(Permutation::from_images_unchecked(self.images[..degree].to_vec()))
    }
}

fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(Error::InvalidPermutation(format!("expected '(' in {s:?}")));
        };
        let Some(close) = stripped.find(')') else {
            return Err(Error::InvalidPermutation(format!("unclosed cycle in {s:?}")));
        };
        let body = &stripped[..close];
        let points: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&p| p >= 1)
                    .ok_or_else(|| Error::InvalidPermutation(format!("bad point {t:?}")))
            })
            .collect::<Result<_>>()?;
        if points.len() > 1 {
            out.push(points);
        }
        rest = stripped[close + 1..].trim_start();
    }
    Ok(out)
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl Mul for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        self.then(&rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse_cycles(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_roundtrip() {
        let p = Permutation::parse_cycles("(1 2 3)(4 5)", Some(6)).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.order(), 6);
        assert_eq!(p.sign(), -1);
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(Permutation::parse_cycles("()", Some(3)).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse_cycles("(1 2)", Some(3)).unwrap();
        let b = Permutation::parse_cycles("(2 3)", Some(3)).unwrap();
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        assert_eq!((&a * &b).to_string(), "(1 3 2)");
        assert_eq!(a.conjugate_by(&b), &(&b.inverse() * &a) * &b);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::parse_cycles("(1 2", None).is_err());
        assert!(Permutation::parse_cycles("(1 1)", None).is_err());
        assert!(Permutation::parse_cycles("(0 1)", None).is_err());
        assert!(Permutation::parse_cycles("(1 5)", Some(3)).is_err());
    }

    #[test]
    fn powers() {
        let c = Permutation::parse_cycles("(1 2 3 4 5)", None).unwrap();
        assert!(c.pow(5).is_identity());
        assert_eq!(c.pow(-1), c.inverse());
        assert_eq!(c.pow(7), c.pow(2));
    }
}
