//! Dense linear algebra over GF(2) with bit-packed rows.
//!
//! Every cohomology dimension in this crate is a rank or nullity computed
//! here. Rows are packed into `u64` words so elimination is word-parallel
//! XOR; matrices of a few thousand rows reduce in well under a second.

use std::fmt;

/// A dense matrix over GF(2), stored row-major with bit-packed rows.
///
/// All operations are total on any shape, including `0 x n` and `n x 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    /// Words per row.
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// Creates a zero matrix of the given shape.
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    /// Creates an identity matrix.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from a function giving each entry.
    #[must_use]
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    #[must_use]
    pub const fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub const fn cols(&self) -> usize {
        self.cols
    }

    /// Returns entry `(i, j)`.
    ///
    /// # Panics
    /// Panics if the indices are out of range.
    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    /// Sets entry `(i, j)`.
    ///
    /// # Panics
    /// Panics if the indices are out of range.
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        let w = &mut self.data[i * self.stride + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = (src * self.stride, dst * self.stride);
        for k in 0..self.stride {
            let v = self.data[a + k];
            self.data[b + k] ^= v;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.stride {
            self.data.swap(i * self.stride + k, j * self.stride + k);
        }
    }

    /// Returns the transpose.
    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for (w, &word) in self.row(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = w * 64 + bits.trailing_zeros() as usize;
                    t.set(j, i, true);
                    bits &= bits - 1;
                }
            }
        }
        t
    }

    /// Matrix product over GF(2).
    ///
    /// # Panics
    /// Panics if the inner dimensions disagree.
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (w, &word) in self.row(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let k = w * 64 + bits.trailing_zeros() as usize;
                    let (a, b) = (i * out.stride, k * other.stride);
                    for t in 0..out.stride {
                        let v = other.data[b + t];
                        out.data[a + t] ^= v;
                    }
                    bits &= bits - 1;
                }
            }
        }
        out
    }

    /// Applies the matrix to a vector given as a slice of bits.
    ///
    /// # Panics
    /// Panics if `x.len() != self.cols()`.
    #[must_use]
    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        let mut packed = vec![0u64; self.stride];
        for (j, &b) in x.iter().enumerate() {
            if b {
                packed[j / 64] |= 1 << (j % 64);
            }
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (k, &w) in self.row(i).iter().enumerate() {
                    acc ^= w & packed[k];
                }
                acc.count_ones() % 2 == 1
            })
            .collect()
    }

    /// Row-reduces a copy of the matrix and returns `(rank, pivot columns, reduced rows)`.
    fn echelon(&self) -> (usize, Vec<usize>, Self) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| m.get(i, j)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.get(i, j) {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push(j);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (r, pivots, m)
    }

    /// Rank over GF(2).
    #[must_use]
    pub fn rank(&self) -> usize {
        self.echelon().0
    }

    /// A basis of the right kernel `{v : M v = 0}`.
    ///
    /// The returned vectors are linearly independent and there are exactly
    /// `cols - rank` of them.
    #[must_use]
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let (_, pivots, m) = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &j in &pivots {
            is_pivot[j] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![false; self.cols];
            v[free] = true;
            // Back-substitute: pivot row r has its pivot at pivots[r].
            for (r, &pj) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    v[pj] = true;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `M x = b`, returning an arbitrary solution if one exists.
    ///
    /// # Errors
    /// Returns [`Gf2Error::DimensionMismatch`] when `b.len() != rows`.
    pub fn solve(&self, b: &[bool]) -> Result<Option<Vec<bool>>, Gf2Error> {
        if b.len() != self.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        // Eliminate on the augmented matrix.
        let mut m = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for (k, &w) in self.row(i).iter().enumerate() {
                m.data[i * m.stride + k] = w;
            }
            // The augmented column may share a word with data columns when
            // cols % 64 != 0, so set it bit-wise.
            m.set(i, self.cols, b[i]);
        }
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for j in 0..self.cols {
            let Some(p) = (r..m.rows).find(|&i| m.get(i, j)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.get(i, j) {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push((r, j));
            r += 1;
            if r == m.rows {
                break;
            }
        }
        // Inconsistent iff some zero row has a 1 in the augmented column.
        for i in r..self.rows {
            if m.get(i, self.cols) {
                return Ok(None);
            }
        }
        let mut x = vec![false; self.cols];
        for &(row, col) in &pivots {
            x[col] = m.get(row, self.cols);
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Errors from GF(2) linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_rows(rows: &[&[u8]]) -> BitMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        BitMatrix::from_fn(r, c, |i, j| rows[i][j] == 1)
    }

    #[test]
    fn rank_identity() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn rank_all_ones() {
        let m = BitMatrix::from_fn(3, 3, |_, _| true);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_empty_shapes() {
        assert_eq!(BitMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(BitMatrix::zeros(5, 0).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn kernel_zero_map() {
        let m = BitMatrix::zeros(2, 3);
        assert_eq!(m.kernel_basis().len(), 3);
    }

    #[test]
    fn kernel_injective() {
        assert!(BitMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_forced_vector() {
        let m = from_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![true, true, false]);
    }

    #[test]
    fn solve_identity() {
        let m = BitMatrix::identity(3);
        let b = [true, false, true];
        assert_eq!(m.solve(&b).unwrap(), Some(b.to_vec()));
    }

    #[test]
    fn solve_zero_matrix_no_solution() {
        let m = BitMatrix::zeros(2, 3);
        assert_eq!(m.solve(&[true, false]).unwrap(), None);
    }

    #[test]
    fn solve_underdetermined_residual() {
        let m = from_rows(&[&[1, 1]]);
        let b = [true];
        let x = m.solve(&b).unwrap().expect("solvable");
        assert_eq!(m.mul_vec(&x), b.to_vec());
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = BitMatrix::zeros(2, 3);
        assert!(m.solve(&[true]).is_err());
    }

    #[test]
    fn transpose_round_trip() {
        let m = from_rows(&[&[1, 0, 1, 1], &[0, 1, 1, 0]]);
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn mul_identity() {
        let m = from_rows(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(m.mul(&BitMatrix::identity(3)), m);
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(rows in 0usize..12, cols in 0usize..12, seed: u64) {
            let mut s = seed;
            let m = BitMatrix::from_fn(rows, cols, |_, _| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (s >> 33) & 1 == 1
            });
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), cols);
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(|&b| !b));
            }
        }

        #[test]
        fn rank_transpose_invariant(rows in 0usize..10, cols in 0usize..10, seed: u64) {
            let mut s = seed;
            let m = BitMatrix::from_fn(rows, cols, |_, _| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (s >> 33) & 1 == 1
            });
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn solve_residual_exact(rows in 1usize..10, cols in 1usize..10, seed: u64) {
            let mut s = seed;
            let mut next = || {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (s >> 33) & 1 == 1
            };
            let m = BitMatrix::from_fn(rows, cols, |_, _| next());
            let b: Vec<bool> = (0..rows).map(|_| next()).collect();
            if let Some(x) = m.solve(&b).unwrap() {
                prop_assert_eq!(m.mul_vec(&x), b);
            }
        }
    }
}
