//! Symmetric second-rank tensors packed into ten coordinates.
//!
//! Basis order: (00, 01, 02, 03, 11, 12, 13, 22, 23, 33). The embedding
//! E maps the ten coordinates to a full row-major 16-vector with both
//! off-diagonal positions filled; the projection P reads the upper
//! triangle back. P·E is the identity on the ten coordinates.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

use super::vector4;

pub const SYM_BASIS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

/// Position of the upper-triangle pair in [`SYM_BASIS`].
pub fn basis_index(mu: usize, nu: usize) -> usize {
    let key = if mu <= nu { (mu, nu) } else { (nu, mu) };
    SYM_BASIS.iter().position(|&p| p == key).expect("valid index pair")
}

/// E: 16x10, ten coordinates to the full row-major tensor.
pub fn embed() -> Matrix {
    Matrix::from_fn(16, 10, |flat, k| {
        let (mu, nu) = (flat / 4, flat % 4);
        if basis_index(mu, nu) == k {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// P: 10x16, reads the upper-triangle entry of a row-major tensor.
pub fn project() -> Matrix {
    Matrix::from_fn(10, 16, |k, flat| {
        let (mu, nu) = (flat / 4, flat % 4);
        if mu <= nu && SYM_BASIS[k] == (mu, nu) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// Ten-coordinate generator: P·(m ⊗ I + I ⊗ m)·E, the restriction of
/// A -> mA + A mᵀ to symmetric tensors.
pub fn generator(a: usize, b: usize) -> Matrix {
    let m = vector4::fundamental_generator(a, b);
    let i4 = Matrix::identity(4);
    let full = m.kron(&i4).add(&i4.kron(&m));
    project().mul(&full).mul(&embed())
}

/// Packs a symmetric 4x4 matrix into ten coordinates.
pub fn sym_vec(t: &Matrix) -> Matrix {
    assert_eq!((t.rows(), t.cols()), (4, 4));
    assert_eq!(t, &t.transpose(), "sym_vec wants a symmetric tensor");
    Matrix::from_fn(10, 1, |k, _| {
        let (mu, nu) = SYM_BASIS[k];
        t[(mu, nu)].clone()
    })
}

/// Expands ten coordinates back to the symmetric 4x4 matrix.
pub fn sym_unvec(v: &Matrix) -> Matrix {
    assert_eq!((v.rows(), v.cols()), (10, 1));
    Matrix::from_fn(4, 4, |mu, nu| v[(basis_index(mu, nu), 0)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projector_identities() {
        assert_eq!(project().mul(&embed()), Matrix::identity(10));
        // E produces symmetric tensors on every basis coordinate.
        for k in 0..10 {
            let mut coords = Matrix::zeros(10, 1);
            coords[(k, 0)] = Scalar::one();
            let t = Matrix::from_vec_row_major(4, 4, &embed().mul(&coords));
            assert_eq!(t, t.transpose());
            assert_eq!(sym_vec(&t), coords);
        }
    }

    #[test]
    fn generator_matches_unrestricted_action() {
        // On a symmetric tensor u·uᵀ the packed generator agrees with
        // m·T + T·mᵀ computed directly.
        let u = Matrix::from_i64_rows(&[&[3], &[1], &[2], &[0]]);
        let t = u.mul(&u.transpose());
        for a in 0..4 {
            for b in 0..4 {
                let m = vector4::fundamental_generator(a, b);
                let direct = m.mul(&t).add(&t.mul(&m.transpose()));
                let packed = generator(a, b).mul(&sym_vec(&t));
                assert_eq!(sym_unvec(&packed), direct, "generator ({a},{b})");
            }
        }
    }

    #[test]
    fn round_trip() {
        let t = Matrix::from_i64_rows(&[
            &[1, 2, 3, 4],
            &[2, 5, 6, 7],
            &[3, 6, 8, 9],
            &[4, 7, 9, 10],
        ]);
        assert_eq!(sym_unvec(&sym_vec(&t)), t);
    }
}
