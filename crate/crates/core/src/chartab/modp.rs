//! Arithmetic and linear algebra modulo a word-sized prime.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    /// A primitive e-th root of unity; requires e | p − 1.
    pub fn root_of_unity(&self, e: u64) -> u64 {
        let n = self.p - 1;
        assert_eq!(n % e, 0);
        let primes = crate::subgroups::prime_divisors(n);
        let g = (2..self.p)
            .find(|&g| primes.iter().all(|&q| self.pow(g, n / q) != 1))
            .expect("F_p* is cyclic");
        self.pow(g, n / e)
    }
}

pub(crate) fn identity_basis(r: usize) -> Vec<Vec<u64>> {
    (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(f: &Fp, m: &mut [Vec<u64>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(p, r);
        let inv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let t = m[i][c];
                for k in 0..cols {
                    let v = f.mul(t, m[r][k]);
                    m[i][k] = f.sub(m[i][k], v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel of `m` (rows × cols).
pub(crate) fn kernel(f: &Fp, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let pivots = rref(f, &mut a);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.sub(0, a[r][free]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial (constant term first) via reduction to Hessenberg form.
pub(crate) fn charpoly(f: &Fp, m: &[Vec<u64>]) -> Vec<u64> {
    let n = m.len();
    let mut h = m.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]);
        for k in j + 2..n {
            if h[k][j] == 0 {
                continue;
            }
            let t = f.mul(h[k][j], inv);
            for c in 0..n {
                let v = f.mul(t, h[j + 1][c]);
                h[k][c] = f.sub(h[k][c], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(t, row[k]);
                row[j + 1] = f.add(row[j + 1], v);
            }
        }
    }
    // p_m = (x − h_mm) p_{m−1} − Σ_i h_im (h_{m,m−1} ⋯ h_{i+1,i}) p_{i−1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = f.add(next[k + 1], c);
            next[k] = f.sub(next[k], f.mul(h[m][m], c));
        }
        let mut t = 1;
        for i in (0..m).rev() {
            t = f.mul(t, h[i + 1][i]);
            let coef = f.mul(h[i][m], t);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = f.sub(next[k], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}

fn eval(f: &Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Splits the `a`-invariant subspace spanned by `basis` into eigenspaces of `a`.
pub(crate) fn split(f: &Fp, a: &[Vec<u64>], basis: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let n = a.len();
    let mut b = basis;
    let pivots = rref(f, &mut b);
    let apply = |v: &[u64]| -> Vec<u64> {
        (0..n)
            .map(|k| {
                a[k].iter()
                    .zip(v)
                    .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
            })
            .collect()
    };
    // restriction: column i holds the coordinates of A b_i
    let images: Vec<Vec<u64>> = b.iter().map(|v| apply(v)).collect();
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|row| (0..d).map(|col| images[col][pivots[row]]).collect())
        .collect();
    let poly = charpoly(f, &restricted);
    let roots: Vec<u64> = (0..f.p).filter(|&x| eval(f, &poly, x) == 0).collect();
    if roots.len() == 1 {
        return Ok(vec![b]);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let mut shifted = restricted.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = f.sub(row[i], lambda);
        }
        let ker = kernel(f, &shifted, d);
        total += ker.len();
        let space: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| {
                (0..n)
                    .map(|k| {
                        c.iter()
                            .zip(&b)
                            .fold(0, |acc, (&ci, bi)| f.add(acc, f.mul(ci, bi[k])))
                    })
                    .collect()
            })
            .collect();
        out.push(space);
    }
    if total != d {
        return Err(Error::Unsupported("class matrix is not diagonalizable mod p".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_small_matrices() {
        let f = Fp::new(101);
        // [[2,1],[1,2]] has x² − 4x + 3
        let m = vec![vec![2, 1], vec![1, 2]];
        assert_eq!(charpoly(&f, &m), vec![3, 101 - 4, 1]);
        let m = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        assert_eq!(charpoly(&f, &m), vec![100, 0, 0, 1]);
        let z = f.root_of_unity(20);
        assert_eq!(f.pow(z, 20), 1);
        assert_ne!(f.pow(z, 10), 1);
        assert_ne!(f.pow(z, 4), 1);
    }
}
