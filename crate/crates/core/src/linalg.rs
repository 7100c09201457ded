//! Dense matrices over `ℚ` with exact Gaussian elimination.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Row-major construction from integers.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(n_rows, n_cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.as_ref().len(), n_cols, "ragged rows");
            for (j, &v) in r.as_ref().iter().enumerate() {
                m.set(i, j, v);
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

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.cols + j] = BigRational::from_integer(v.into());
    }

    pub fn set_rational(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !v[j].is_zero())
                    .map(|j| self.get(i, j) * &v[j])
                    .sum()
            })
            .collect()
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&Matrix], cols: usize) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            out.data[r0 * cols..(r0 + m.rows) * cols].clone_from_slice(&m.data);
            r0 += m.rows;
        }
        out
    }

    /// Side-by-side concatenation of matrices with equal row counts.
    pub fn hstack(parts: &[&Matrix], rows: usize) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            for i in 0..rows {
                for j in 0..m.cols {
                    out.data[i * cols + c0 + j] = m.get(i, j).clone();
                }
            }
            c0 += m.cols;
        }
        out
    }

    /// Reduced row echelon form; returns the pivot columns.
    ///
    /// Within each column the pivot is the candidate entry with the smallest
    /// bit-length, which keeps intermediate fractions small.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let best = (row..self.rows)
                .filter(|&i| !self.get(i, col).is_zero())
                .min_by_key(|&i| bit_size(self.get(i, col)));
            let Some(p) = best else { continue };
            self.swap_rows(row, p);
            let inv = self.get(row, col).recip();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set_rational(row, j, v);
            }
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let factor = self.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let delta = &factor * self.get(row, j);
                    if !delta.is_zero() {
                        self.data[i * self.cols + j] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the right null space `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let mut r = self.clone();
        let pivots = r.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }
}

fn bit_size(q: &BigRational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_rows(&[[1, 2, 3], [2, 4, 6], [1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn fractions_stay_exact() {
        let m = Matrix::from_rows(&[[3, 7, 1, 0], [5, 11, 0, 1]]);
        for v in m.kernel() {
            assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(3, 5).kernel().len(), 5);
        assert_eq!(Matrix::zeros(0, 2).kernel().len(), 2);
    }

    #[test]
    fn stacking() {
        let a = Matrix::from_rows(&[[1, 2]]);
        let b = Matrix::from_rows(&[[3, 4]]);
        assert_eq!(Matrix::vstack(&[&a, &b], 2), Matrix::from_rows(&[[1, 2], [3, 4]]));
        assert_eq!(Matrix::hstack(&[&a, &b], 1), Matrix::from_rows(&[[1, 2, 3, 4]]));
        let p = Matrix::from_rows(&[[1, 1], [0, 1]]);
        assert_eq!(p.mul(&p), Matrix::from_rows(&[[1, 2], [0, 1]]));
    }
}
