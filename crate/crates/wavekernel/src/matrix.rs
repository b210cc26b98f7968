//! Dense matrices over Gaussian rationals. Row-major storage; all
//! operations are exact. Shape mismatches are programming errors and
//! panic with the offending dimensions.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        assert!(nrows > 0, "matrix needs at least one row");
        let ncols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Integer-entry constructor for hand-written tables.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
    }

    /// Column vector from scalars.
    pub fn col(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Self::new(n, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        Self::new(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        Self::new(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        self.map(|v| v * k)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch {}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let term = a * &rhs[(k, c)];
                    out[(r, c)] = &out[(r, c)] + &term;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = Scalar::zero();
        for k in 0..self.rows {
            t = &t + &self[(k, k)];
        }
        t
    }

    /// `AB - BA`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).add(&rhs.mul(self))
    }

    /// Kronecker product; row/column index of the result is
    /// `(i_left * rows_right + i_right)`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let (rl, rr) = (r / rhs.rows, r % rhs.rows);
            let (cl, cr) = (c / rhs.cols, c % rhs.cols);
            &self[(rl, cl)] * &rhs[(rr, cr)]
        })
    }

    /// Stacks matrices vertically; all must share a column count.
    pub fn vstack(parts: &[&Self]) -> Self {
        assert!(!parts.is_empty(), "vstack of nothing");
        let cols = parts[0].cols;
        assert!(parts.iter().all(|m| m.cols == cols), "vstack column mismatch");
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            data.extend(m.data.iter().cloned());
        }
        Self::new(rows, cols, data)
    }

    /// Stacks matrices horizontally; all must share a row count.
    pub fn hstack(parts: &[&Self]) -> Self {
        assert!(!parts.is_empty(), "hstack of nothing");
        let rows = parts[0].rows;
        assert!(parts.iter().all(|m| m.rows == rows), "hstack row mismatch");
        let cols = parts.iter().map(|m| m.cols).sum();
        Self::from_fn(rows, cols, |r, c| {
            let mut off = c;
            for m in parts {
                if off < m.cols {
                    return m[(r, off)].clone();
                }
                off -= m.cols;
            }
            unreachable!()
        })
    }

    /// Column vectors assembled into a matrix.
    pub fn from_columns(cols: &[Matrix]) -> Self {
        assert!(!cols.is_empty(), "from_columns of nothing");
        assert!(cols.iter().all(|c| c.cols == 1), "from_columns wants column vectors");
        let refs: Vec<&Matrix> = cols.iter().collect();
        Self::hstack(&refs)
    }

    pub fn row_vector(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self[(r, c)].clone()).collect()
    }

    pub fn column(&self, c: usize) -> Self {
        Self::from_fn(self.rows, 1, |r, _| self[(r, c)].clone())
    }

    /// Contiguous sub-block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        Self::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    /// Flattens column-by-column into an `rows*cols × 1` vector, so that
    /// `vec(XQY) = (Yᵀ ⊗ X)·vec(Q)`.
    pub fn vec_col_major(&self) -> Self {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self[(r, c)].clone());
            }
        }
        Self::new(self.rows * self.cols, 1, data)
    }

    /// Inverse of [`Matrix::vec_col_major`] for a known shape.
    pub fn from_vec_col_major(rows: usize, cols: usize, v: &Self) -> Self {
        assert_eq!((v.rows, v.cols), (rows * cols, 1), "vector shape mismatch");
        Self::from_fn(rows, cols, |r, c| v[(c * rows + r, 0)].clone())
    }

    /// Flattens row-by-row into an `rows*cols × 1` vector, so that
    /// `vec(XQYᵀ) = (X ⊗ Y)·vec(Q)`.
    pub fn vec_row_major(&self) -> Self {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                data.push(self[(r, c)].clone());
            }
        }
        Self::new(self.rows * self.cols, 1, data)
    }

    pub fn from_vec_row_major(rows: usize, cols: usize, v: &Self) -> Self {
        assert_eq!((v.rows, v.cols), (rows * cols, 1), "vector shape mismatch");
        Self::from_fn(rows, cols, |r, c| v[(r * cols + c, 0)].clone())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}x{}", self.rows, self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}x{}", self.rows, self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix {
        Matrix::from_i64_rows(&[&[a, b], &[c, d]])
    }

    #[test]
    fn product_and_identity() {
        let a = m2(1, 2, 3, 4);
        let id = Matrix::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
        assert_eq!(a.mul(&m2(0, 1, 1, 0)), m2(2, 1, 4, 3));
    }

    #[test]
    fn kron_matches_block_structure() {
        let a = m2(1, 2, 3, 4);
        let b = m2(0, 1, -1, 0);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.block(0, 2, 2, 2), b.scale(&Scalar::from_int(2)));
        assert_eq!(k.block(2, 0, 2, 2), b.scale(&Scalar::from_int(3)));
    }

    #[test]
    fn dagger_reverses_products() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::i(), Scalar::from_int(2)],
            vec![Scalar::from_ratio(1, 2), Scalar::new(rat(1, 3), rat(-2, 5))],
        ]);
        let b = m2(1, -1, 2, 0);
        assert_eq!(a.mul(&b).dagger(), b.dagger().mul(&a.dagger()));
        assert_eq!(a.dagger().dagger(), a);
    }

    #[test]
    fn vec_conventions() {
        let q = m2(1, 2, 3, 4);
        let x = m2(0, 1, 2, 0);
        let y = m2(1, 1, 0, 1);
        // vec_c(XQY) = (Yᵀ ⊗ X) vec_c(Q)
        let lhs = x.mul(&q).mul(&y).vec_col_major();
        let rhs = y.transpose().kron(&x).mul(&q.vec_col_major());
        assert_eq!(lhs, rhs);
        // vec_r(XQYᵀ) = (X ⊗ Y) vec_r(Q)
        let lhs_r = x.mul(&q).mul(&y.transpose()).vec_row_major();
        let rhs_r = x.kron(&y).mul(&q.vec_row_major());
        assert_eq!(lhs_r, rhs_r);
        assert_eq!(Matrix::from_vec_col_major(2, 2, &q.vec_col_major()), q);
        assert_eq!(Matrix::from_vec_row_major(2, 2, &q.vec_row_major()), q);
    }

    #[test]
    fn stacking() {
        let a = m2(1, 2, 3, 4);
        let b = m2(5, 6, 7, 8);
        let v = Matrix::vstack(&[&a, &b]);
        assert_eq!(v.rows(), 4);
        assert_eq!(v.block(2, 0, 2, 2), b);
        let h = Matrix::hstack(&[&a, &b]);
        assert_eq!(h.cols(), 4);
        assert_eq!(h.block(0, 2, 2, 2), b);
    }
}
