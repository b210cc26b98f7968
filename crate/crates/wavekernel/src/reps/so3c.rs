//! Complex-orthogonal three-vector machinery: the real rotation
//! generators s_k, the associated generator table, and the quaternion
//! multiplication matrices used by one of the first-order field forms.

use crate::matrix::Matrix;
use crate::minkowski::{levi_civita3, DIM};
use crate::scalar::Scalar;

/// Real antisymmetric rotation generator (s_k)_{pq} = -e_{kpq} on
/// 1-based spatial labels.
pub fn s_matrix(k: usize) -> Matrix {
    assert!((1..=3).contains(&k));
    Matrix::from_fn(3, 3, |p, q| {
        Scalar::from_int(-levi_civita3(k, p + 1, q + 1))
    })
}

/// Generator table: Sigma^{0q} = i s_q, Sigma^{p0} = -i s_p,
/// Sigma^{pq} = e_{pqr} s_r.
pub fn sigma(mu: usize, nu: usize) -> Matrix {
    assert!(mu < DIM && nu < DIM);
    match (mu, nu) {
        (0, 0) => Matrix::zeros(3, 3),
        (0, q) => s_matrix(q).scale(&Scalar::i()),
        (p, 0) => s_matrix(p).scale(&-Scalar::i()),
        (p, q) => {
            let mut out = Matrix::zeros(3, 3);
            for r in 1..=3 {
                let e = levi_civita3(p, q, r);
                if e != 0 {
                    out = out.add(&s_matrix(r).scale(&Scalar::from_int(e)));
                }
            }
            out
        }
    }
}

/// Quaternion-form matrices: (J_p)_{0q} = -delta_{pq},
/// (J_p)_{q0} = +delta_{pq}, (J_p)_{qr} = i e_{pqr}.
pub fn j_matrix(p: usize) -> Matrix {
    assert!((1..=3).contains(&p));
    Matrix::from_fn(4, 4, |r, c| match (r, c) {
        (0, 0) => Scalar::zero(),
        (0, q) => Scalar::from_int(if q == p { -1 } else { 0 }),
        (q, 0) => Scalar::from_int(i64::from(q == p)),
        (q, t) => Scalar::imag_ratio(levi_civita3(p, q, t), 1),
    })
}
