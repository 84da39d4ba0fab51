//! Concrete group families in their natural permutation representations.

use crate::classes::is_prime;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::presentation::{todd_coxeter, Presentation, Word, DEFAULT_TC_BUDGET};

fn cycle_on(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (k, &p) in pts.iter().enumerate() {
        images[p] = pts[(k + 1) % pts.len()] as u32;
    }
    Permutation::from_images(images).expect("a cycle is a bijection")
}

fn check_pos(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::arg(format!("{what}: n must be at least 1")));
    }
    Ok(())
}

/// Z_n on n points.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    check_pos(n, "cyclic")?;
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    PermGroup::new(n, vec![cycle_on(n, 0..n)])
}

/// D_{2n}, the dihedral group of order 2n. Degree n for n ≥ 3; Z2 and Z2×Z2 for n = 1, 2.
pub fn dihedral_2n(n: usize) -> Result<PermGroup> {
    check_pos(n, "dihedral")?;
    match n {
        1 => cyclic(2),
        2 => PermGroup::from_cycle_strings(4, &["(1 2)", "(3 4)"]),
        _ => {
            let rot = cycle_on(n, 0..n);
            let refl: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
            PermGroup::new(n, vec![rot, Permutation::from_images(refl)?])
        }
    }
}

pub fn sym(n: usize) -> Result<PermGroup> {
    check_pos(n, "sym")?;
    match n {
        1 => Ok(PermGroup::trivial(1)),
        2 => PermGroup::new(2, vec![cycle_on(2, 0..2)]),
        _ => PermGroup::new(n, vec![cycle_on(n, 0..n), cycle_on(n, 0..2)]),
    }
}

pub fn alt(n: usize) -> Result<PermGroup> {
    check_pos(n, "alt")?;
    match n {
        1 | 2 => Ok(PermGroup::trivial(n)),
        3 => PermGroup::new(3, vec![cycle_on(3, 0..3)]),
        _ => {
            let long = if n % 2 == 1 {
                cycle_on(n, 0..n)
            } else {
                cycle_on(n, 1..n)
            };
            PermGroup::new(n, vec![cycle_on(n, 0..3), long])
        }
    }
}

/// Quaternion units are labelled `4s + u` for ±(1, i, j, k).
fn quaternion_mul(x: usize, y: usize) -> usize {
    // unit table: TABLE[u][v] = (sign, unit) of e_u e_v
    const TABLE: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (sx, ux) = (x / 4, x % 4);
    let (sy, uy) = (y / 4, y % 4);
    let (s, u) = TABLE[ux][uy];
    4 * ((sx + sy + s) % 2) + u
}

/// Q8 in its right regular representation, generated by i and j.
///
/// Point `4s + u` is the unit ±(1, i, j, k)[u]; −1 is point 4.
pub fn q8() -> Result<PermGroup> {
    let right = |g: usize| {
        Permutation::from_images((0..8).map(|x| quaternion_mul(x, g) as u32).collect())
    };
    PermGroup::new(8, vec![right(1)?, right(2)?])
}

/// (Z_p)^k as k disjoint p-cycles.
pub fn elem_ab(p: usize, k: usize) -> Result<PermGroup> {
    if !is_prime(p as u64) {
        return Err(Error::arg(format!("elem_ab: {p} is not prime")));
    }
    check_pos(k, "elem_ab")?;
    let degree = p * k;
    let gens = (0..k).map(|i| cycle_on(degree, i * p..(i + 1) * p)).collect();
    PermGroup::new(degree, gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryKind {
    /// Binary dihedral group of the given order 4n.
    Dihedral(usize),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl BinaryKind {
    pub fn order(self) -> u64 {
        match self {
            BinaryKind::Dihedral(m) => m as u64,
            BinaryKind::Tetrahedral => 24,
            BinaryKind::Octahedral => 48,
            BinaryKind::Icosahedral => 120,
        }
    }

    /// `⟨a, b | a^p = b^q = (ab)^2⟩`, with `(p, q) = (n, 2)` for the dihedral case.
    pub fn presentation(self) -> Result<Presentation> {
        let (p, q) = match self {
            BinaryKind::Dihedral(m) => {
                if m < 4 || m % 4 != 0 {
                    return Err(Error::arg(format!(
                        "binary_dihedral: order {m} is not a positive multiple of 4"
                    )));
                }
                (m / 4, 2)
            }
            BinaryKind::Tetrahedral => (3, 3),
            BinaryKind::Octahedral => (4, 3),
            BinaryKind::Icosahedral => (5, 3),
        };
        let a = Word::gen(0);
        let b = Word::gen(1);
        let bq = b.power(-(q as i64));
        Presentation::new(
            vec!["a".into(), "b".into()],
            vec![
                a.power(p as i64).concat(&bq),
                a.concat(&b).power(2).concat(&bq),
            ],
        )
    }

    /// A core-free subgroup whose cosets give a small faithful action.
    fn subgroup(self) -> Vec<Word> {
        match self {
            BinaryKind::Dihedral(_) => vec![],
            BinaryKind::Tetrahedral | BinaryKind::Icosahedral => vec![Word::gen(0).power(2)],
            BinaryKind::Octahedral => vec![Word::gen(1).power(2)],
        }
    }
}

/// Binary polyhedral groups from their presentations, acting on cosets of a core-free
/// subgroup. Faithfulness is confirmed by the order of the resulting group.
pub fn binary_polyhedral(kind: BinaryKind) -> Result<PermGroup> {
    let p = kind.presentation()?;
    let table = todd_coxeter(&p, &kind.subgroup(), DEFAULT_TC_BUDGET)?;
    let g = table.group()?;
    if g.order() != kind.order() {
        return Err(Error::Unsupported(format!(
            "coset action of {kind:?} has order {}, expected {}",
            g.order(),
            kind.order()
        )));
    }
    Ok(g)
}

pub fn binary_dihedral(order: usize) -> Result<PermGroup> {
    binary_polyhedral(BinaryKind::Dihedral(order))
}

fn check_odd_prime(p: usize, what: &str) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::arg(format!("{what}: {p} is not an odd prime")));
    }
    Ok(())
}

/// SL(2,p) acting on the p²−1 nonzero row vectors of F_p² (point `x + p·y − 1`).
pub fn sl2p_on_vectors(p: usize) -> Result<PermGroup> {
    check_odd_prime(p, "sl2p_on_vectors")?;
    let act = |m: [[usize; 2]; 2]| {
        let images = (1..p * p)
            .map(|v| {
                let (x, y) = (v % p, v / p);
                let nx = (x * m[0][0] + y * m[1][0]) % p;
                let ny = (x * m[0][1] + y * m[1][1]) % p;
                (nx + p * ny - 1) as u32
            })
            .collect();
        Permutation::from_images(images)
    };
    PermGroup::new(
        p * p - 1,
        vec![act([[1, 1], [0, 1]])?, act([[0, p - 1], [1, 0]])?],
    )
}

/// PSL(2,p) on the projective line (point p is ∞), generated by z ↦ z+1 and z ↦ −1/z.
pub fn psl2(p: usize) -> Result<PermGroup> {
    check_odd_prime(p, "psl2")?;
    let inf = p;
    let inv = |z: usize| (1..p).find(|&w| z * w % p == 1).expect("field inverse");
    let shift: Vec<u32> = (0..=p)
        .map(|z| if z == inf { inf } else { (z + 1) % p } as u32)
        .collect();
    let flip: Vec<u32> = (0..=p)
        .map(|z| {
            if z == inf {
                0
            } else if z == 0 {
                inf
            } else {
                (p - inv(z)) % p
            }
        } as u32)
        .collect();
    PermGroup::new(
        p + 1,
        vec![Permutation::from_images(shift)?, Permutation::from_images(flip)?],
    )
}

/// `⟨a, b | a², b³, (ab)⁷, [a,b]⁴⟩`, the von Dyck presentation of PSL(2,7).
pub fn psl27_presentation() -> Presentation {
    Presentation::parse(&["a", "b"], "a^2; b^3; (a b)^7; (a^-1 b^-1 a b)^4")
        .expect("static presentation")
}

/// PSL(2,7) built by coset enumeration over ⟨ab⟩ (index 24).
pub fn psl27_from_presentation() -> Result<PermGroup> {
    let p = psl27_presentation();
    let ab = p.parse_word("a b")?;
    let g = todd_coxeter(&p, &[ab], DEFAULT_TC_BUDGET)?.group()?;
    if g.order() != 168 {
        return Err(Error::Unsupported(format!(
            "coset action has order {}, expected 168",
            g.order()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroups::{center, derived_subgroup, is_perfect, quotient};

    fn involutions(g: &PermGroup) -> usize {
        g.elements().unwrap().iter().filter(|x| x.order() == 2).count()
    }

    #[test]
    fn small_families() {
        assert_eq!(cyclic(6).unwrap().order(), 6);
        assert!(cyclic(6).unwrap().is_abelian());
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let d10 = dihedral_2n(5).unwrap();
        assert_eq!(d10.order(), 10);
        assert!(!d10.is_abelian());
        assert_eq!(dihedral_2n(1).unwrap().order(), 2);
        assert_eq!(dihedral_2n(2).unwrap().order(), 4);
        for n in 1..8 {
            let f: u64 = (1..=n as u64).product();
            assert_eq!(sym(n).unwrap().order(), f);
            assert_eq!(alt(n).unwrap().order(), if n < 2 { 1 } else { f / 2 });
        }
        assert_eq!(elem_ab(2, 4).unwrap().order(), 16);
        assert!(elem_ab(4, 2).is_err());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn q8_has_one_involution() {
        let q = q8().unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(involutions(&q), 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn binary_polyhedral_orders() {
        let a5s = binary_polyhedral(BinaryKind::Icosahedral).unwrap();
        assert_eq!(a5s.order(), 120);
        let z = center(&a5s).unwrap();
        assert_eq!(z.order(), 2);
        let (q, _) = quotient(&a5s, &z).unwrap();
        assert_eq!(q.order(), 60);
        assert!(is_perfect(&q).unwrap());

        let d12 = binary_dihedral(12).unwrap();
        assert_eq!(d12.order(), 12);
        assert_eq!(involutions(&d12), 1);

        let s4s = binary_polyhedral(BinaryKind::Octahedral).unwrap();
        assert_eq!(s4s.order(), 48);
        assert!(!is_perfect(&s4s).unwrap());
        assert_eq!(derived_subgroup(&s4s).unwrap().order(), 24);

        assert_eq!(binary_polyhedral(BinaryKind::Tetrahedral).unwrap().order(), 24);
        assert_eq!(binary_dihedral(4).unwrap().order(), 4);
        assert!(binary_dihedral(6).is_err());
    }

    #[test]
    fn linear_groups() {
        assert_eq!(sl2p_on_vectors(5).unwrap().order(), 120);
        assert_eq!(sl2p_on_vectors(3).unwrap().order(), 24);
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(psl2(11).unwrap().order(), 660);
        assert_eq!(psl27_from_presentation().unwrap().order(), 168);
    }
}
