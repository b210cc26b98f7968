//! Dirac matrices in the standard basis, their sigma commutators and the
//! derived spin/boost three-vector matrices.

use crate::matrix::Matrix;
use crate::minkowski::DIM;
use crate::scalar::Scalar;

use super::pauli::{block2, identity2, sigma as pauli_sigma};

/// Dirac matrix with upper index: gamma^0 = diag(I, -I),
/// gamma^k = offdiag(sigma_k, -sigma_k).
pub fn gamma(mu: usize) -> Matrix {
    assert!(mu < DIM);
    let z = Matrix::zeros(2, 2);
    if mu == 0 {
        block2(&identity2(), &z, &z, &identity2().neg())
    } else {
        let s = pauli_sigma(mu);
        block2(&z, &s, &s.neg(), &z)
    }
}

/// gamma^5 = offdiag(I, I); squares to the identity and anticommutes
/// with every gamma^mu. Equal to i·gamma^0 gamma^1 gamma^2 gamma^3.
pub fn gamma5_upper() -> Matrix {
    let z = Matrix::zeros(2, 2);
    block2(&z, &identity2(), &identity2(), &z)
}

/// The lower-index variant, fixed as gamma_5 = -gamma^5.
pub fn gamma5_lower() -> Matrix {
    gamma5_upper().neg()
}

/// Sigma^{mu nu} = (1/2)[gamma^mu, gamma^nu].
pub fn sigma(mu: usize, nu: usize) -> Matrix {
    gamma(mu).commutator(&gamma(nu)).scale(&Scalar::from_ratio(1, 2))
}

/// Boost-direction matrix alpha_k = Sigma^{0k} = gamma^0 gamma^k,
/// offdiag(sigma_k, sigma_k).
pub fn alpha(k: usize) -> Matrix {
    assert!((1..=3).contains(&k));
    let z = Matrix::zeros(2, 2);
    let s = pauli_sigma(k);
    block2(&z, &s, &s, &z)
}

/// Spin matrix Sigma_k = diag(sigma_k, sigma_k).
pub fn spin_sigma(k: usize) -> Matrix {
    assert!((1..=3).contains(&k));
    let z = Matrix::zeros(2, 2);
    let s = pauli_sigma(k);
    block2(&s, &z, &z, &s)
}

/// Rotation generators M_k = (i/2)·Sigma_k of the spin three-vector
/// split; squares to -(3/4)I when summed.
pub fn rotation_generator(k: usize) -> Matrix {
    spin_sigma(k).scale(&Scalar::imag_ratio(1, 2))
}

/// Boost generators N_k = (1/2)·alpha_k of the same split.
pub fn boost_generator(k: usize) -> Matrix {
    alpha(k).scale(&Scalar::from_ratio(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::{levi_civita3, metric_sign};

    #[test]
    fn clifford_relations() {
        for mu in 0..4 {
            for nu in 0..4 {
                let expect = if mu == nu {
                    Matrix::identity(4).scale(&Scalar::from_int(2 * metric_sign(mu)))
                } else {
                    Matrix::zeros(4, 4)
                };
                assert_eq!(gamma(mu).anticommutator(&gamma(nu)), expect);
            }
        }
    }

    #[test]
    fn gamma5_product_sign() {
        let prod = gamma(0).mul(&gamma(1)).mul(&gamma(2)).mul(&gamma(3));
        assert_eq!(prod.scale(&Scalar::i()), gamma5_upper());
        assert_eq!(gamma5_lower(), gamma5_upper().neg());
        for mu in 0..4 {
            assert!(gamma5_upper().anticommutator(&gamma(mu)).is_zero());
        }
        assert_eq!(gamma5_upper().mul(&gamma5_upper()), Matrix::identity(4));
    }

    #[test]
    fn sigma_table_blocks() {
        for k in 1..=3 {
            assert_eq!(sigma(0, k), alpha(k));
        }
        // Spatial entries: Sigma^{jk} = -i e_{jkr} Sigma_r.
        for j in 1..=3usize {
            for k in 1..=3usize {
                let mut expect = Matrix::zeros(4, 4);
                for r in 1..=3 {
                    let e = levi_civita3(j, k, r);
                    if e != 0 {
                        expect = expect.add(&spin_sigma(r).scale(&Scalar::imag_ratio(-e, 1)));
                    }
                }
                assert_eq!(sigma(j, k), expect, "Sigma^{{{j}{k}}}");
            }
        }
    }

    #[test]
    fn alpha_sigma_algebra() {
        let g5 = gamma5_upper();
        for p in 1..=3usize {
            for q in 1..=3usize {
                let delta = if p == q { Matrix::identity(4) } else { Matrix::zeros(4, 4) };
                let mut eps_sigma = Matrix::zeros(4, 4);
                let mut eps_alpha = Matrix::zeros(4, 4);
                for r in 1..=3 {
                    let e = levi_civita3(p, q, r);
                    if e != 0 {
                        eps_sigma = eps_sigma.add(&spin_sigma(r).scale(&Scalar::imag_ratio(e, 1)));
                        eps_alpha = eps_alpha.add(&alpha(r).scale(&Scalar::imag_ratio(e, 1)));
                    }
                }
                let delta_g5 = if p == q { g5.clone() } else { Matrix::zeros(4, 4) };
                assert_eq!(spin_sigma(p).mul(&spin_sigma(q)), eps_sigma.add(&delta));
                assert_eq!(alpha(p).mul(&alpha(q)), eps_sigma.add(&delta));
                assert_eq!(alpha(p).mul(&spin_sigma(q)), eps_alpha.add(&delta_g5));
                assert_eq!(spin_sigma(p).mul(&alpha(q)), eps_alpha.add(&delta_g5));
            }
        }
        for k in 1..=3 {
            // alpha_k gamma^0 = -gamma^k
            assert_eq!(alpha(k).mul(&gamma(0)), gamma(k).neg());
        }
    }

    #[test]
    fn casimir_split_values() {
        let mut m_sq = Matrix::zeros(4, 4);
        let mut n_sq = Matrix::zeros(4, 4);
        let mut mn = Matrix::zeros(4, 4);
        for k in 1..=3 {
            m_sq = m_sq.add(&rotation_generator(k).mul(&rotation_generator(k)));
            n_sq = n_sq.add(&boost_generator(k).mul(&boost_generator(k)));
            mn = mn.add(&rotation_generator(k).mul(&boost_generator(k)));
        }
        assert_eq!(m_sq, Matrix::identity(4).scale(&Scalar::from_ratio(-3, 4)));
        assert_eq!(n_sq, Matrix::identity(4).scale(&Scalar::from_ratio(3, 4)));
        assert_eq!(mn, gamma5_upper().scale(&Scalar::imag_ratio(3, 4)));
    }
}
