//! Real irreducible representations and orthogonal embeddings decided from characters.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use super::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::group::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealIrreducible {
    pub real_dimension: usize,
    /// One row for indicator +1, a conjugate pair for 0, the row itself for −1.
    pub characters: Vec<usize>,
    pub indicator: i8,
    pub kernel_classes: Vec<usize>,
    /// Sign of the determinant on each class.
    pub det_character: Vec<i8>,
}

impl RealIrreducible {
    pub fn is_faithful(&self) -> bool {
        self.kernel_classes == [0]
    }

    pub fn kernel(&self, t: &CharacterTable) -> Result<PermGroup> {
        t.subgroup_of_classes(&self.kernel_classes)
    }
}

/// Real irreducibles in the order of their first complex constituent.
pub fn real_irreducibles(t: &CharacterTable) -> Vec<RealIrreducible> {
    let r = t.len();
    let mut used = vec![false; r];
    let mut out = Vec::new();
    for row in 0..r {
        if used[row] {
            continue;
        }
        used[row] = true;
        let d = t.degrees[row] as usize;
        let kernel_classes = t.kernel_classes(row);
        let ind = t.indicators[row];
        let (dim, chars, det) = match ind {
            1 => {
                let det = t
                    .det_character(row)
                    .iter()
                    .map(|v| match v.to_integer() {
                        Some(1) => 1,
                        Some(-1) => -1,
                        _ => unreachable!("real character has real determinant"),
                    })
                    .collect();
                (d, vec![row], det)
            }
            0 => {
                let conj: Vec<_> = t.irreducibles[row].iter().map(|v| v.conj()).collect();
                let partner = (0..r)
                    .find(|&o| t.irreducibles[o] == conj)
                    .expect("complex conjugate is irreducible");
                used[partner] = true;
                // realification of a complex representation has determinant |det|² = 1
                (2 * d, vec![row, partner], vec![1; t.classes.len()])
            }
            _ => (2 * d, vec![row], vec![1; t.classes.len()]),
        };
        out.push(RealIrreducible {
            real_dimension: dim,
            characters: chars,
            indicator: ind,
            kernel_classes,
            det_character: det,
        });
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    O,
    SO,
    /// Orientation-preserving elements of O(a) × O(b).
    Split(usize, usize),
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" => Ok(Variant::O),
            "SO" => Ok(Variant::SO),
            _ => {
                let bad = || Error::arg(format!("unknown variant {s:?}; expected O, SO, O3xO2 or O4xO1"));
                let rest = s.strip_prefix('O').ok_or_else(bad)?;
                let (a, b) = rest.split_once("xO").ok_or_else(bad)?;
                let a: usize = a.parse().map_err(|_| bad())?;
                let b: usize = b.parse().map_err(|_| bad())?;
                if a == 0 || b == 0 {
                    return Err(bad());
                }
                Ok(Variant::Split(a, b))
            }
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::O => write!(f, "O"),
            Variant::SO => write!(f, "SO"),
            Variant::Split(a, b) => write!(f, "O{a}xO{b}"),
        }
    }
}

/// One multiset of real irreducibles per factor, as (block index, multiplicity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub variant: Variant,
    pub parts: Vec<Vec<(usize, usize)>>,
    /// Determinant of the whole representation on each class.
    pub det: Vec<i8>,
}

impl EmbeddingWitness {
    /// Re-checks dimension, faithfulness and determinant from the blocks alone.
    pub fn check(&self, blocks: &[RealIrreducible], dims: &[usize], classes: usize) -> bool {
        if self.parts.len() != dims.len() {
            return false;
        }
        let mut in_kernel = vec![true; classes];
        let mut det = vec![1i8; classes];
        for (part, &want) in self.parts.iter().zip(dims) {
            let mut dim = 0;
            for &(b, m) in part {
                let blk = &blocks[b];
                dim += blk.real_dimension * m;
                for c in 0..classes {
                    if !blk.kernel_classes.contains(&c) {
                        in_kernel[c] = false;
                    }
                    if m % 2 == 1 {
                        det[c] *= blk.det_character[c];
                    }
                }
            }
            if dim != want {
                return false;
            }
        }
        let faithful = (1..classes).all(|c| !in_kernel[c]);
        let orientation = match self.variant {
            Variant::O => true,
            _ => det.iter().all(|&d| d == 1),
        };
        faithful && orientation && det == self.det
    }

    pub fn to_json(&self, blocks: &[RealIrreducible]) -> Value {
        json!({
            "variant": self.variant.to_string(),
            "parts": self.parts.iter().map(|p| p.iter().map(|&(b, m)| json!({
                "block": b,
                "characters": blocks[b].characters,
                "real_dimension": blocks[b].real_dimension,
                "multiplicity": m,
            })).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "determinant": self.det,
        })
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn of(classes: &[usize], n: usize) -> Self {
        let mut b = vec![0u64; n.div_ceil(64)];
        for &c in classes {
            b[c / 64] |= 1 << (c % 64);
        }
        Bits(b)
    }
    fn full(n: usize) -> Self {
        Bits::of(&(0..n).collect::<Vec<_>>(), n)
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn xor(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a ^ b).collect())
    }
    fn is_only_identity(&self) -> bool {
        self.0[0] == 1 && self.0[1..].iter().all(|&w| w == 0)
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

/// Multisets of `dim` total real dimension with `count` summands, in lexicographic order.
fn multisets(dims: &[usize], dim: usize, count: usize, out: &mut Vec<Vec<usize>>) {
    fn go(dims: &[usize], start: usize, left: usize, count: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if count == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for b in start..dims.len() {
            if dims[b] <= left {
                cur.push(b);
                go(dims, b, left - dims[b], count - 1, cur, out);
                cur.pop();
            }
        }
    }
    go(dims, 0, dim, count, &mut Vec::new(), out);
}

fn compress(ms: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &b in ms {
        match out.last_mut() {
            Some((x, m)) if *x == b => *m += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

/// Candidate summands for one factor, fewest blocks first.
fn candidates(dims: &[usize], dim: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for count in 1..=dim {
        multisets(dims, dim, count, &mut out);
    }
    out
}

/// Decides whether `g` is isomorphic to a subgroup of O(n), SO(n) or of the orientation
/// preserving part of O(a) × O(b), returning a witness built from real irreducibles.
pub fn embeds_orthogonally(g: &PermGroup, n: usize, variant: Variant) -> Result<Option<EmbeddingWitness>> {
    let t = character_table(g)?;
    embeds_with_table(&t, n, variant)
}

pub fn embeds_with_table(t: &CharacterTable, n: usize, variant: Variant) -> Result<Option<EmbeddingWitness>> {
    let factor_dims = match variant {
        Variant::O | Variant::SO => vec![n],
        Variant::Split(a, b) => {
            if a + b != n {
                return Err(Error::arg(format!("variant {variant} does not have dimension {n}")));
            }
            vec![a, b]
        }
    };
    let blocks = real_irreducibles(t);
    let classes = t.classes.len();
    let dims: Vec<usize> = blocks.iter().map(|b| b.real_dimension).collect();
    let kern: Vec<Bits> = blocks.iter().map(|b| Bits::of(&b.kernel_classes, classes)).collect();
    let neg: Vec<Bits> = blocks
        .iter()
        .map(|b| {
            let c: Vec<usize> = (0..classes).filter(|&c| b.det_character[c] == -1).collect();
            Bits::of(&c, classes)
        })
        .collect();
    let summary = |ms: &[usize]| -> (Bits, Bits) {
        let mut k = Bits::full(classes);
        let mut d = Bits::of(&[], classes);
        for &b in ms {
            k = k.and(&kern[b]);
            d = d.xor(&neg[b]);
        }
        (k, d)
    };
    let need_det = variant != Variant::O;
    let per_factor: Vec<Vec<(Vec<usize>, Bits, Bits)>> = factor_dims
        .iter()
        .map(|&d| {
            candidates(&dims, d)
                .into_iter()
                .map(|ms| {
                    let (k, de) = summary(&ms);
                    (ms, k, de)
                })
                .collect()
        })
        .collect();

    let finish = |chosen: &[&Vec<usize>], det: &Bits| -> EmbeddingWitness {
        EmbeddingWitness {
            variant,
            parts: chosen.iter().map(|ms| compress(ms)).collect(),
            det: (0..classes)
                .map(|c| if det.0[c / 64] >> (c % 64) & 1 == 1 { -1 } else { 1 })
                .collect(),
        }
    };
    match per_factor.as_slice() {
        [only] => {
            for (ms, k, d) in only {
                if k.is_only_identity() && (!need_det || d.is_zero()) {
                    return Ok(Some(finish(&[ms], d)));
                }
            }
        }
        [first, second] => {
            for (m1, k1, d1) in first {
                for (m2, k2, d2) in second {
                    let d = d1.xor(d2);
                    if k1.and(k2).is_only_identity() && d.is_zero() {
                        return Ok(Some(finish(&[m1, m2], &d)));
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{alt, cyclic, q8};

    fn real_dims(g: &PermGroup) -> Vec<usize> {
        let t = character_table(g).unwrap();
        real_irreducibles(&t).iter().map(|b| b.real_dimension).collect()
    }

    #[test]
    fn real_dimensions() {
        assert_eq!(real_dims(&alt(5).unwrap()), vec![1, 3, 3, 4, 5]);
        assert_eq!(real_dims(&q8().unwrap()), vec![1, 1, 1, 1, 4]);
        assert_eq!(real_dims(&cyclic(5).unwrap()), vec![1, 2, 2]);
    }

    #[test]
    fn small_embeddings() {
        let a5 = alt(5).unwrap();
        let w = embeds_orthogonally(&a5, 5, Variant::SO).unwrap().unwrap();
        assert_eq!(w.parts, vec![vec![(4, 1)]]);
        assert!(embeds_orthogonally(&cyclic(7).unwrap(), 2, Variant::SO).unwrap().is_some());
        assert!(embeds_orthogonally(&cyclic(7).unwrap(), 1, Variant::O).unwrap().is_none());
        assert!(embeds_orthogonally(&q8().unwrap(), 3, Variant::O).unwrap().is_none());
        assert!(embeds_orthogonally(&q8().unwrap(), 4, Variant::SO).unwrap().is_some());
        assert_eq!("O3xO2".parse::<Variant>().unwrap(), Variant::Split(3, 2));
        assert!("O3x".parse::<Variant>().is_err());
    }
}
