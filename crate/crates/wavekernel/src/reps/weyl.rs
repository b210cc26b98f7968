//! Two-component spinor generator tables and the sigma four-vector.

use crate::matrix::Matrix;
use crate::minkowski::{levi_civita3, metric_sign, DIM};
use crate::scalar::Scalar;

use super::pauli::{identity2, sigma as pauli_sigma};

/// Upper-index table: Sigma^{0q} = -sigma_q, Sigma^{p0} = sigma_p,
/// Sigma^{pq} = i e_{pqr} sigma_r.
pub fn sigma_upper(mu: usize, nu: usize) -> Matrix {
    assert!(mu < DIM && nu < DIM);
    match (mu, nu) {
        (0, 0) => Matrix::zeros(2, 2),
        (0, q) => pauli_sigma(q).neg(),
        (p, 0) => pauli_sigma(p),
        (p, q) => {
            let mut out = Matrix::zeros(2, 2);
            for r in 1..=3 {
                let e = levi_civita3(p, q, r);
                if e != 0 {
                    out = out.add(&pauli_sigma(r).scale(&Scalar::imag_ratio(e, 1)));
                }
            }
            out
        }
    }
}

/// Both indices lowered with the metric.
pub fn sigma_lower(mu: usize, nu: usize) -> Matrix {
    sigma_upper(mu, nu).scale(&Scalar::from_int(metric_sign(mu) * metric_sign(nu)))
}

/// The four-vector of Pauli matrices sigma^mu = (I, sigma_k).
pub fn sigma_four(mu: usize) -> Matrix {
    assert!(mu < DIM);
    if mu == 0 {
        identity2()
    } else {
        pauli_sigma(mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::levi_civita_lower;

    #[test]
    fn explicit_table_values() {
        assert_eq!(sigma_upper(0, 1), pauli_sigma(1).neg());
        assert_eq!(sigma_upper(2, 0), pauli_sigma(2));
        assert_eq!(sigma_upper(1, 2), pauli_sigma(3).scale(&Scalar::i()));
        assert_eq!(sigma_lower(0, 1), pauli_sigma(1));
        assert_eq!(sigma_lower(3, 0), pauli_sigma(3).neg());
        assert_eq!(sigma_lower(1, 2), sigma_upper(1, 2));
        for mu in 0..4 {
            for nu in 0..4 {
                assert_eq!(sigma_upper(mu, nu), sigma_upper(nu, mu).neg());
            }
        }
    }

    #[test]
    fn self_duality() {
        // e_{mu nu s t} Sigma^{s t} = 2i Sigma_{mu nu}
        for mu in 0..4 {
            for nu in 0..4 {
                let mut lhs = Matrix::zeros(2, 2);
                for s in 0..4 {
                    for t in 0..4 {
                        let e = levi_civita_lower(mu, nu, s, t);
                        if e != 0 {
                            lhs = lhs.add(&sigma_upper(s, t).scale(&Scalar::from_int(e)));
                        }
                    }
                }
                let rhs = sigma_lower(mu, nu).scale(&Scalar::imag_ratio(2, 1));
                assert_eq!(lhs, rhs, "duality at ({mu},{nu})");
            }
        }
    }
}
