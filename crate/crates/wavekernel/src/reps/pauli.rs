//! Pauli matrices and 2x2 block helpers.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Pauli matrix with 1-based index.
pub fn sigma(k: usize) -> Matrix {
    match k {
        1 => Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
        2 => Matrix::from_rows(vec![
            vec![Scalar::zero(), -Scalar::i()],
            vec![Scalar::i(), Scalar::zero()],
        ]),
        3 => Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]),
        _ => panic!("pauli index must be 1, 2 or 3"),
    }
}

pub fn identity2() -> Matrix {
    Matrix::identity(2)
}

/// Assembles a 4x4 matrix from four 2x2 blocks.
pub fn block2(tl: &Matrix, tr: &Matrix, bl: &Matrix, br: &Matrix) -> Matrix {
    for b in [tl, tr, bl, br] {
        assert_eq!((b.rows(), b.cols()), (2, 2), "block2 wants 2x2 blocks");
    }
    Matrix::from_fn(4, 4, |r, c| {
        let src = match (r < 2, c < 2) {
            (true, true) => tl,
            (true, false) => tr,
            (false, true) => bl,
            (false, false) => br,
        };
        src[(r % 2, c % 2)].clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::levi_civita3;

    #[test]
    fn pauli_products() {
        // sigma_p sigma_q = i e_{pqr} sigma_r + delta_{pq} I
        for p in 1..=3 {
            for q in 1..=3 {
                let mut expect = if p == q { identity2() } else { Matrix::zeros(2, 2) };
                for r in 1..=3 {
                    let e = levi_civita3(p, q, r);
                    if e != 0 {
                        expect = expect.add(&sigma(r).scale(&Scalar::i().scale_int(e)));
                    }
                }
                assert_eq!(sigma(p).mul(&sigma(q)), expect, "sigma_{p} sigma_{q}");
            }
        }
    }

    #[test]
    fn pauli_are_traceless_hermitian() {
        for k in 1..=3 {
            assert!(sigma(k).trace().is_zero());
            assert_eq!(sigma(k).dagger(), sigma(k));
        }
    }

    #[test]
    fn block_assembly() {
        let m = block2(&identity2(), &sigma(1), &sigma(3), &identity2());
        assert_eq!(m[(0, 0)], Scalar::one());
        assert_eq!(m[(0, 3)], Scalar::one());
        assert_eq!(m[(2, 0)], Scalar::one());
        assert_eq!(m[(3, 1)], -Scalar::one());
    }
}
