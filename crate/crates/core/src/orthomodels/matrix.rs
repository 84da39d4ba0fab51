//! Square matrices over Q(√5).

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::field::Q5;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    n: usize,
    data: Vec<Q5>,
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Mat {
            n,
            data: vec![Q5::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.set(i, i, Q5::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q5>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Mat {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(rows: &[&[i128]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Q5::int(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[Q5]) -> Self {
        let mut m = Mat::zero(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Q5 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q5) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Q5]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Mat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn scale(&self, s: Q5) -> Self {
        Mat {
            n: self.n,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Self {
        Mat {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(&x, &y)| x - y).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }

    /// `self ⊕ other`.
    pub fn block(&self, other: &Mat) -> Self {
        let n = self.n + other.n;
        let mut m = Mat::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m.set(self.n + i, self.n + j, other.get(i, j));
            }
        }
        m
    }

    /// Row echelon form by Gaussian elimination; returns (rank, determinant).
    fn eliminate(&self) -> (usize, Q5) {
        let n = self.n;
        let mut a: Vec<Vec<Q5>> = self.rows().map(|r| r.to_vec()).collect();
        let mut det = Q5::one();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                det = Q5::zero();
                continue;
            };
            if p != rank {
                a.swap(p, rank);
                det = -det;
            }
            let pivot = a[rank][col];
            det = det * pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in rank + 1..n {
                let f = a[r][col] * inv;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a[rank][c];
                    a[r][c] = a[r][c] - f * v;
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().0
    }

    pub fn det(&self) -> Q5 {
        self.eliminate().1
    }

    /// Dimension of `{v : v·self = 0}`, equal to that of the right kernel.
    pub fn nullity(&self) -> usize {
        self.n - self.rank()
    }

    /// Leading principal minor of size k.
    pub fn leading_minor(&self, k: usize) -> Q5 {
        let mut m = Mat::zero(k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self.get(i, j));
            }
        }
        m.det()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Mat::identity(self.n), |acc, _| &acc * self)
    }

    pub fn order(&self, max: u32) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=max {
            if p.is_identity() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, o: &Mat) -> Mat {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let n = self.n;
        let mut m = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = m.get(i, j) + x * o.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(Q5::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_rank() {
        let m = Mat::from_ints(&[&[2, 1], &[1, 2]]);
        assert_eq!(m.det(), Q5::int(3));
        assert_eq!(m.rank(), 2);
        let s = Mat::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.det(), Q5::zero());
        assert_eq!(s.nullity(), 1);
        let d = Mat::diagonal(&[Q5::int(-1), Q5::int(-1), Q5::int(1)]);
        assert_eq!(d.order(10), Some(2));
        assert_eq!(d.block(&Mat::identity(2)).dim(), 5);
    }
}
