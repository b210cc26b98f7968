//! Generators of the fundamental (four-vector) representation.

use crate::matrix::Matrix;
use crate::minkowski::{metric_sign, DIM};
use crate::scalar::Scalar;

/// (m^{ab})^mu_nu = g^{a mu} delta^b_nu - g^{b mu} delta^a_nu; the row is
/// the upper index.
pub fn fundamental_generator(a: usize, b: usize) -> Matrix {
    assert!(a < DIM && b < DIM);
    Matrix::from_fn(DIM, DIM, |mu, nu| {
        let mut val = 0;
        if a == mu && b == nu {
            val += metric_sign(a);
        }
        if b == mu && a == nu {
            val -= metric_sign(b);
        }
        Scalar::from_int(val)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boost_generator_block() {
        let m01 = fundamental_generator(0, 1);
        assert_eq!(m01[(0, 1)], Scalar::one());
        assert_eq!(m01[(1, 0)], Scalar::one());
        assert_eq!(m01[(0, 0)], Scalar::zero());
        assert!(m01.block(2, 2, 2, 2).is_zero());
    }

    #[test]
    fn rotation_generator_block() {
        let m12 = fundamental_generator(1, 2);
        assert_eq!(m12[(1, 2)], Scalar::from_int(-1));
        assert_eq!(m12[(2, 1)], Scalar::one());
        assert!(m12.column(0).is_zero());
    }

    #[test]
    fn antisymmetry() {
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(fundamental_generator(a, b), fundamental_generator(b, a).neg());
            }
        }
    }
}
