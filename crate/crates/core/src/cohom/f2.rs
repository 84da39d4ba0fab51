//! Dense bit-packed matrices over F2.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

fn words_for(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = words_for(cols);
        F2Matrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Rows given as 0/1 slices.
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::arg("ragged F2 matrix rows"));
        }
        let mut m = F2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x & 1 == 1);
            }
        }
        Ok(m)
    }

    /// Columns given as vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<bool>]) -> Self {
        let mut m = F2Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// `row[dst] ^= row[src]`.
    fn xor_row(&mut self, dst: usize, src: usize) {
        let w = self.words;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * w);
            (&mut lo[dst * w..(dst + 1) * w], &hi[..w])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * w);
            (&mut hi[..w], &lo[src * w..(src + 1) * w])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.data.swap(a * self.words + k, b * self.words + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn add(&self, o: &F2Matrix) -> Result<Self> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::DegreeMismatch {
                expected: self.cols,
                found: o.cols,
            });
        }
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&o.data) {
            *x ^= y;
        }
        Ok(m)
    }

    pub fn mul(&self, o: &F2Matrix) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DegreeMismatch {
                expected: self.cols,
                found: o.rows,
            });
        }
        let mut m = F2Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let src = o.row_words(k);
                    let dst = &mut m.data[i * m.words..(i + 1) * m.words];
                    for (x, y) in dst.iter_mut().zip(src) {
                        *x ^= y;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[bool]) -> Result<Vec<bool>> {
        if v.len() != self.cols {
            return Err(Error::DegreeMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| v[j] && self.get(i, j)).count() % 2 == 1)
            .collect())
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Reduced row echelon form in place; returns pivot columns in order.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(p, r);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column in increasing order.
    pub fn kernel(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![false; self.cols];
                v[f] = true;
                for (r, &p) in pivots.iter().enumerate() {
                    if m.get(r, f) {
                        v[p] = true;
                    }
                }
                v
            })
            .collect()
    }

    /// Some `x` with `M x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[bool]) -> Result<Option<Vec<bool>>> {
        if b.len() != self.rows {
            return Err(Error::DegreeMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = F2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![false; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = F2Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, true);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = F2Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Stack matrices vertically.
    pub fn vstack(blocks: &[F2Matrix]) -> Result<Self> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::arg("vstack: column counts differ"));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = F2Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            m.data[r0 * m.words..(r0 + b.rows) * m.words].copy_from_slice(&b.data);
            r0 += b.rows;
        }
        Ok(m)
    }

    /// Rows as strings of 0/1.
    pub fn bit_rows(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| if self.get(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in self.bit_rows() {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        assert_eq!(F2Matrix::identity(4).rank(), 4);
        let z = F2Matrix::zeros(3, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().len(), 5);
        let m = F2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        let k = m.kernel();
        assert_eq!(k, vec![vec![true, true, true]]);
        assert_eq!(m.solve(&[true, false]).unwrap(), Some(vec![true, false, false]));
        let inconsistent = F2Matrix::from_rows(&[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(inconsistent.solve(&[true, false]).unwrap(), None);
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let n = 150;
        let mut m = F2Matrix::identity(n);
        for i in 0..n - 1 {
            m.set(i, i + 1, true);
        }
        assert_eq!(m.rank(), n);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), F2Matrix::identity(n));
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = F2Matrix> {
        proptest::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
            let mut m = F2Matrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, bits[i * c + j]);
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(7, 70)) {
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.len(), 70);
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|&x| !x));
            }
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn solve_is_correct(m in arb_matrix(6, 9), x in proptest::collection::vec(any::<bool>(), 9)) {
            let b = m.mul_vec(&x).unwrap();
            let y = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
        }

        #[test]
        fn product_associates(a in arb_matrix(5, 6), b in arb_matrix(6, 4), c in arb_matrix(4, 3)) {
            let l = a.mul(&b).unwrap().mul(&c).unwrap();
            let r = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }
    }
}
