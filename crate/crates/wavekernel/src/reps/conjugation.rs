//! Conjugation-action representations on matrix-valued fields, realized
//! on column-major vectorizations: vec(XQY) = (Yᵀ ⊗ X)·vec(Q).

use crate::matrix::Matrix;
use crate::scalar::Scalar;

use super::{gamma, weyl};

/// Generator of the adjoint action Q -> (1/2)(Sigma^{ab} Q - Q Sigma^{ab})
/// on vectorized 4x4 matrices.
pub fn slash_generator(a: usize, b: usize) -> Matrix {
    let s = gamma::sigma(a, b);
    let i4 = Matrix::identity(4);
    let left = i4.kron(&s);
    let right = s.transpose().kron(&i4);
    left.sub(&right).scale(&Scalar::from_ratio(1, 2))
}

/// Generator of the adjoint action Q -> -(1/2)(Sigma^{ab} Q - Q Sigma^{ab})
/// on vectorized 2x2 matrices, with the two-spinor generator table.
pub fn spinor2_generator(a: usize, b: usize) -> Matrix {
    let s = weyl::sigma_upper(a, b);
    let i2 = Matrix::identity(2);
    let left = i2.kron(&s);
    let right = s.transpose().kron(&i2);
    left.sub(&right).scale(&Scalar::from_ratio(-1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::metric_sign;
    use crate::reps::so3c;

    #[test]
    fn slash_action_reproduces_vector_rotation_of_gamma() {
        // (1/2)[Sigma^{ab}, gamma^l] = g^{bl} gamma^a - g^{al} gamma^b
        for a in 0..4 {
            for b in 0..4 {
                let gen = slash_generator(a, b);
                for l in 0..4 {
                    let lhs = gen.mul(&gamma::gamma(l).vec_col_major());
                    let mut expect = Matrix::zeros(4, 4);
                    if b == l {
                        expect = expect.add(&gamma::gamma(a).scale(&Scalar::from_int(metric_sign(b))));
                    }
                    if a == l {
                        expect = expect.sub(&gamma::gamma(b).scale(&Scalar::from_int(metric_sign(a))));
                    }
                    assert_eq!(lhs, expect.vec_col_major(), "slash action at ({a},{b}) on gamma^{l}");
                }
            }
        }
    }

    #[test]
    fn spinor2_action_matches_three_vector_table() {
        // [M^{ab}, sigma_p] = (Sigma_3x3^{ab})ᵀ_{pq} sigma_q; with the
        // transpose, sigma·F transforms exactly like the three-vector F.
        // The identity matrix is annihilated.
        for a in 0..4 {
            for b in 0..4 {
                let gen = spinor2_generator(a, b);
                let table = so3c::sigma(a, b);
                for p in 1..=3usize {
                    let lhs = gen.mul(&crate::reps::pauli::sigma(p).vec_col_major());
                    let mut expect = Matrix::zeros(2, 2);
                    for q in 1..=3usize {
                        let coeff = table[(q - 1, p - 1)].clone();
                        if !coeff.is_zero() {
                            expect = expect.add(&crate::reps::pauli::sigma(q).scale(&coeff));
                        }
                    }
                    assert_eq!(lhs, expect.vec_col_major(), "spinor2 action at ({a},{b}) on sigma_{p}");
                }
                assert!(gen.mul(&Matrix::identity(2).vec_col_major()).is_zero());
            }
        }
    }
}
