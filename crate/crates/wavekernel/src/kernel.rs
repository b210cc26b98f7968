//! Exact rank and kernel computation.
//!
//! Elimination is fraction-free (Bareiss one-step): rows are first scaled
//! to Gaussian-integer entries, then each update divides exactly by the
//! previous pivot, which keeps intermediate entries integral and bounded
//! by minors of the input. Back-substitution over the field produces a
//! deterministic reduced kernel basis: free coordinates in increasing
//! column order, each basis vector carrying 1 at its own free column and
//! 0 at every other free column.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

/// Outcome of an exact elimination run. `rank + kernel_dim == cols` and
/// every basis vector satisfies `M·v = 0` (checked by multiplication
/// before the report is returned).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub rank: usize,
    pub kernel_dim: usize,
    /// Column vectors in reduced normal form, ordered by free column.
    pub kernel_basis: Vec<Matrix>,
    /// Pivot columns of the row echelon form, increasing.
    pub pivot_columns: Vec<usize>,
}

struct Echelon {
    m: Matrix,
    pivot_columns: Vec<usize>,
    swap_sign: bool,
}

/// Scales each row by the least common multiple of its denominators so
/// every entry becomes a Gaussian integer. Row scaling by a nonzero
/// rational preserves rank and kernel.
fn clear_row_denominators(m: &mut Matrix) {
    for r in 0..m.rows() {
        let mut lcm = BigInt::one();
        for c in 0..m.cols() {
            let s = &m[(r, c)];
            lcm = lcm.lcm(s.re().denom());
            lcm = lcm.lcm(s.im().denom());
        }
        if lcm.is_one() {
            continue;
        }
        let k = Scalar::from_rational(Rational::from_integer(lcm));
        for c in 0..m.cols() {
            m[(r, c)] = &m[(r, c)] * &k;
        }
    }
}

fn bareiss_echelon(mut m: Matrix, clear: bool) -> Echelon {
    if clear {
        clear_row_denominators(&mut m);
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivot_columns = Vec::new();
    let mut swap_sign = false;
    let mut prev = Scalar::one();
    let mut pr = 0; // next pivot row
    for pc in 0..cols {
        let Some(hit) = (pr..rows).find(|&r| !m[(r, pc)].is_zero()) else {
            continue;
        };
        if hit != pr {
            for c in 0..cols {
                let a = m[(pr, c)].clone();
                let b = m[(hit, c)].clone();
                m[(pr, c)] = b;
                m[(hit, c)] = a;
            }
            swap_sign = !swap_sign;
        }
        let pivot = m[(pr, pc)].clone();
        for r in pr + 1..rows {
            let below = m[(r, pc)].clone();
            for c in pc + 1..cols {
                let num = &(&pivot * &m[(r, c)]) - &(&below * &m[(pr, c)]);
                let q = num.checked_div(&prev).expect("previous pivot is nonzero");
                m[(r, c)] = q;
            }
            m[(r, pc)] = Scalar::zero();
        }
        prev = pivot;
        pivot_columns.push(pc);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    Echelon { m, pivot_columns, swap_sign }
}

/// Computes rank, pivot columns and the reduced kernel basis of `m`.
pub fn rank_and_kernel(m: &Matrix) -> KernelReport {
    let ech = bareiss_echelon(m.clone(), true);
    let rank = ech.pivot_columns.len();
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !ech.pivot_columns.contains(c)).collect();
    let mut kernel_basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Scalar::zero(); cols];
        x[f] = Scalar::one();
        // Pivot rows are solved bottom-up; entries right of the pivot are
        // already fixed (free columns) or already solved (later pivots).
        for row in (0..rank).rev() {
            let pc = ech.pivot_columns[row];
            let mut acc = Scalar::zero();
            for c in pc + 1..cols {
                if x[c].is_zero() {
                    continue;
                }
                acc = &acc + &(&ech.m[(row, c)] * &x[c]);
            }
            x[pc] = (-&acc)
                .checked_div(&ech.m[(row, pc)])
                .expect("pivot entries are nonzero");
        }
        kernel_basis.push(Matrix::col(x));
    }
    for v in &kernel_basis {
        assert!(m.mul(v).is_zero(), "kernel vector failed verification by multiplication");
    }
    KernelReport {
        rank,
        kernel_dim: free.len(),
        kernel_basis,
        pivot_columns: ech.pivot_columns,
    }
}

/// Rank of `m`.
pub fn rank(m: &Matrix) -> usize {
    bareiss_echelon(m.clone(), true).pivot_columns.len()
}

/// Kernel of the transposed matrix: vectors `u` with `uᵀ·m = 0`, returned
/// as column vectors.
pub fn left_kernel(m: &Matrix) -> KernelReport {
    rank_and_kernel(&m.transpose())
}

/// Determinant of a square matrix via the same fraction-free elimination,
/// without denominator clearing so the final pivot is the determinant up
/// to the row-swap sign.
pub fn det(m: &Matrix) -> Scalar {
    assert!(m.is_square(), "determinant of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Scalar::one();
    }
    let ech = bareiss_echelon(m.clone(), false);
    if ech.pivot_columns.len() < n {
        return Scalar::zero();
    }
    let d = ech.m[(n - 1, n - 1)].clone();
    if ech.swap_sign {
        -&d
    } else {
        d
    }
}

/// Stacks column vectors as rows of a matrix with `dim` columns.
fn rows_from_vectors(vs: &[Matrix], dim: usize) -> Matrix {
    let mut out = Matrix::zeros(vs.len(), dim);
    for (i, v) in vs.iter().enumerate() {
        assert_eq!((v.rows(), v.cols()), (dim, 1), "subspace vector shape mismatch");
        for c in 0..dim {
            out[(i, c)] = v[(c, 0)].clone();
        }
    }
    out
}

/// How two spanned subspaces relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceRelation {
    Equal,
    LeftInsideRight,
    RightInsideLeft,
    Incomparable,
}

/// Compares the spans of two families of column vectors living in the
/// same ambient space, by rank of the individual and stacked row sets.
pub fn subspace_relation(a: &[Matrix], b: &[Matrix], dim: usize) -> SubspaceRelation {
    let ma = rows_from_vectors(a, dim);
    let mb = rows_from_vectors(b, dim);
    let ra = rank(&ma);
    let rb = rank(&mb);
    let rab = rank(&Matrix::vstack(&[&ma, &mb]));
    match (ra == rab, rb == rab) {
        (true, true) => SubspaceRelation::Equal,
        (false, true) => SubspaceRelation::LeftInsideRight,
        (true, false) => SubspaceRelation::RightInsideLeft,
        (false, false) => SubspaceRelation::Incomparable,
    }
}

/// True when both vector families span the same subspace.
pub fn same_subspace(a: &[Matrix], b: &[Matrix], dim: usize) -> bool {
    subspace_relation(a, b, dim) == SubspaceRelation::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn full_rank_has_empty_kernel() {
        let m = Matrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let rep = rank_and_kernel(&m);
        assert_eq!(rep.rank, 2);
        assert_eq!(rep.kernel_dim, 0);
        assert_eq!(rep.pivot_columns, vec![0, 1]);
        assert!(rep.kernel_basis.is_empty());
    }

    #[test]
    fn rank_one_projector_kernel_normal_form() {
        // Rows are proportional; the single relation x + 2y = 0 gives
        // basis (-2, 1) in reduced form.
        let m = Matrix::from_i64_rows(&[&[1, 2], &[2, 4], &[3, 6]]);
        let rep = rank_and_kernel(&m);
        assert_eq!(rep.rank, 1);
        assert_eq!(rep.kernel_dim, 1);
        assert_eq!(rep.pivot_columns, vec![0]);
        let v = &rep.kernel_basis[0];
        assert_eq!(v[(0, 0)], Scalar::from_int(-2));
        assert_eq!(v[(1, 0)], Scalar::one());
    }

    #[test]
    fn complex_rational_entries() {
        // Second column is i·(first) + third·(1/2).
        let c0 = Matrix::col(vec![Scalar::from_int(1), Scalar::from_ratio(1, 3)]);
        let c2 = Matrix::col(vec![Scalar::from_int(2), Scalar::i()]);
        let mix = c0.scale(&Scalar::i()).add(&c2.scale(&Scalar::from_ratio(1, 2)));
        let m = Matrix::from_columns(&[c0, mix, c2]);
        let rep = rank_and_kernel(&m);
        assert_eq!(rep.rank, 2);
        assert_eq!(rep.kernel_dim, 1);
        // Normal form: free column 2 carries coefficient 1.
        let v = &rep.kernel_basis[0];
        assert_eq!(v[(2, 0)], Scalar::one());
        assert!(m.mul(v).is_zero());
    }

    #[test]
    fn free_column_pattern_is_reduced() {
        // One pivot (column 0), free columns 1 and 2.
        let m = Matrix::from_i64_rows(&[&[1, 1, 1]]);
        let rep = rank_and_kernel(&m);
        assert_eq!(rep.kernel_dim, 2);
        let b0 = &rep.kernel_basis[0];
        let b1 = &rep.kernel_basis[1];
        assert_eq!(b0[(1, 0)], Scalar::one());
        assert_eq!(b0[(2, 0)], Scalar::zero());
        assert_eq!(b1[(1, 0)], Scalar::zero());
        assert_eq!(b1[(2, 0)], Scalar::one());
    }

    #[test]
    fn zero_and_empty_matrices() {
        let z = Matrix::zeros(3, 2);
        let rep = rank_and_kernel(&z);
        assert_eq!(rep.rank, 0);
        assert_eq!(rep.kernel_dim, 2);
        let none = Matrix::zeros(0, 3);
        let rep = rank_and_kernel(&none);
        assert_eq!(rep.rank, 0);
        assert_eq!(rep.kernel_dim, 3);
    }

    #[test]
    fn left_kernel_matches_transpose() {
        let m = Matrix::from_i64_rows(&[&[1, 2], &[2, 4], &[0, 1]]);
        let rep = left_kernel(&m);
        assert_eq!(rep.kernel_dim, 1);
        let u = rep.kernel_basis[0].transpose();
        assert!(u.mul(&m).is_zero());
    }

    #[test]
    fn determinant_values() {
        assert_eq!(det(&Matrix::identity(3)), Scalar::one());
        let m = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(&m), Scalar::from_int(-1));
        let m = Matrix::from_rows(vec![
            vec![Scalar::from_ratio(1, 2), Scalar::i()],
            vec![Scalar::from_int(3), Scalar::from_int(2)],
        ]);
        // det = 1 - 3i
        assert_eq!(det(&m), Scalar::new(rat(1, 1), rat(-3, 1)));
        let singular = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(det(&singular), Scalar::zero());
    }

    #[test]
    fn subspace_comparison() {
        let e1 = Matrix::col(vec![Scalar::one(), Scalar::zero(), Scalar::zero()]);
        let e2 = Matrix::col(vec![Scalar::zero(), Scalar::one(), Scalar::zero()]);
        let sum = e1.add(&e2);
        assert_eq!(
            subspace_relation(&[e1.clone(), e2.clone()], &[sum.clone(), e1.clone()], 3),
            SubspaceRelation::Equal
        );
        assert_eq!(
            subspace_relation(std::slice::from_ref(&e1), &[e1.clone(), e2.clone()], 3),
            SubspaceRelation::LeftInsideRight
        );
        assert_eq!(
            subspace_relation(&[e1.clone(), e2.clone()], std::slice::from_ref(&e2), 3),
            SubspaceRelation::RightInsideLeft
        );
        let e3 = Matrix::col(vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
        assert_eq!(
            subspace_relation(&[e1], &[e3], 3),
            SubspaceRelation::Incomparable
        );
        assert!(same_subspace(&[], &[], 3));
    }
}
