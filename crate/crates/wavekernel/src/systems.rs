//! Momentum-space assembly of the relativistic wave systems.
//!
//! Every family is a finite linear system `total * field = 0` obtained from
//! the position-space equations through the plane-wave substitution
//! `d_mu -> -i p_mu`. The module also hosts the cross-checks that relate
//! the families: kernel dimensions, pairwise solution-space equivalences,
//! gauge directions, and the comparison between the linearized Einstein
//! operator and the massless spin-two operator.

use num_traits::Zero;

use crate::kernel::{rank_and_kernel, subspace_relation, KernelReport, SubspaceRelation};
use crate::matrix::Matrix;
use crate::minkowski::{
    levi_civita3, levi_civita_lower, levi_civita_upper, metric_sign, Fixture, FixtureSet,
    LorentzMatrix, MomentumSample, RotationPlane, DIM,
};
use crate::report::{CheckBuilder, CheckRecord};
use crate::reps::{gamma, pauli, so3c, symtensor, weyl};
use crate::scalar::{rat, rat_int, Rational, Scalar};

const SYS_SUITE: &str = "systems";
const EQUIV_SUITE: &str = "equivalences";
const GAUGE_SUITE: &str = "gauge";
const EINSTEIN_SUITE: &str = "einstein";

/// The supported wave-equation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    DiracGamma,
    DiracSigma,
    DiracPl,
    WeylSigma,
    WeylCompact,
    Proca,
    MaxwellSo3c,
    MaxwellCurlDiv,
    MaxwellSpinor,
    MaxwellLaport,
    MaxwellQuaternion,
    MaxwellTensor,
    FierzPauliFull,
    FierzPauliFinal,
    FierzPauliGauge,
    EinsteinLinear,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::DiracGamma,
        Family::DiracSigma,
        Family::DiracPl,
        Family::WeylSigma,
        Family::WeylCompact,
        Family::Proca,
        Family::MaxwellSo3c,
        Family::MaxwellCurlDiv,
        Family::MaxwellSpinor,
        Family::MaxwellLaport,
        Family::MaxwellQuaternion,
        Family::MaxwellTensor,
        Family::FierzPauliFull,
        Family::FierzPauliFinal,
        Family::FierzPauliGauge,
        Family::EinsteinLinear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DiracGamma => "dirac_gamma",
            Family::DiracSigma => "dirac_sigma",
            Family::DiracPl => "dirac_pl",
            Family::WeylSigma => "weyl_sigma",
            Family::WeylCompact => "weyl_compact",
            Family::Proca => "proca",
            Family::MaxwellSo3c => "maxwell_so3c",
            Family::MaxwellCurlDiv => "maxwell_curl_div",
            Family::MaxwellSpinor => "maxwell_spinor",
            Family::MaxwellLaport => "maxwell_laport",
            Family::MaxwellQuaternion => "maxwell_quaternion",
            Family::MaxwellTensor => "maxwell_tensor",
            Family::FierzPauliFull => "fierz_pauli_full",
            Family::FierzPauliFinal => "fierz_pauli_final",
            Family::FierzPauliGauge => "fierz_pauli_gauge",
            Family::EinsteinLinear => "einstein_linear",
        }
    }

    pub fn by_name(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// Number of field components the assembled matrix acts on.
    pub fn field_dim(self) -> usize {
        match self {
            Family::DiracGamma | Family::DiracSigma | Family::DiracPl => 4,
            Family::WeylSigma | Family::WeylCompact => 2,
            Family::Proca | Family::MaxwellTensor => 4,
            Family::MaxwellSo3c
            | Family::MaxwellCurlDiv
            | Family::MaxwellLaport
            | Family::MaxwellQuaternion => 3,
            Family::MaxwellSpinor => 4,
            Family::FierzPauliFull
            | Family::FierzPauliFinal
            | Family::FierzPauliGauge
            | Family::EinsteinLinear => 10,
        }
    }

    /// Families whose field equations exist only at zero mass.
    pub fn massless_only(self) -> bool {
        matches!(
            self,
            Family::WeylSigma
                | Family::WeylCompact
                | Family::MaxwellSo3c
                | Family::MaxwellCurlDiv
                | Family::MaxwellSpinor
                | Family::MaxwellLaport
                | Family::MaxwellQuaternion
                | Family::MaxwellTensor
                | Family::EinsteinLinear
        )
    }
}

/// Error for an assembly request outside a family's domain.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SystemError {
    #[error("{family} describes a massless field; cannot assemble with mass {mass}")]
    MassiveMassForMasslessFamily { family: &'static str, mass: String },
}

/// One assembled momentum-space system. `total` stacks the labeled blocks;
/// solutions are the null vectors of `total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub family: Family,
    pub p: MomentumSample,
    pub mass: Rational,
    pub blocks: Vec<(String, Matrix)>,
    pub total: Matrix,
}

impl LinearSystem {
    pub fn kernel(&self) -> KernelReport {
        rank_and_kernel(&self.total)
    }

    /// Residual of a candidate field against an optional source column.
    /// All families here are source-free; `None` means the zero source.
    pub fn residual(&self, field: &Matrix, source: Option<&Matrix>) -> Matrix {
        let out = self.total.mul(field);
        match source {
            Some(j) => out.sub(j),
            None => out,
        }
    }
}

/// Builds the momentum-space system of a family at momentum `p` and the
/// given mass. Massless-only families reject a nonzero mass; an off-shell
/// momentum is always accepted and simply shrinks the kernel.
pub fn assemble(
    family: Family,
    p: &MomentumSample,
    mass: &Rational,
) -> Result<LinearSystem, SystemError> {
    if family.massless_only() && !mass.is_zero() {
        return Err(SystemError::MassiveMassForMasslessFamily {
            family: family.name(),
            mass: mass.to_string(),
        });
    }
    let blocks = match family {
        Family::DiracGamma => dirac_gamma_blocks(p, mass),
        Family::DiracSigma => dirac_sigma_blocks(p, mass),
        Family::DiracPl => dirac_pl_blocks(p, mass),
        Family::WeylSigma => weyl_sigma_blocks(p),
        Family::WeylCompact => weyl_compact_blocks(p),
        Family::Proca => proca_blocks(p, mass),
        Family::MaxwellSo3c => maxwell_so3c_blocks(p),
        Family::MaxwellCurlDiv => maxwell_curl_div_blocks(p),
        Family::MaxwellSpinor => maxwell_spinor_blocks(p),
        Family::MaxwellLaport => maxwell_laport_blocks(p),
        Family::MaxwellQuaternion => maxwell_quaternion_blocks(p),
        Family::MaxwellTensor => maxwell_tensor_blocks(p),
        Family::FierzPauliFull => fierz_pauli_full_blocks(p, mass),
        Family::FierzPauliFinal => fierz_pauli_final_blocks(p, mass),
        Family::FierzPauliGauge => fierz_pauli_gauge_blocks(p, mass),
        Family::EinsteinLinear => einstein_blocks(p),
    };
    let parts: Vec<&Matrix> = blocks.iter().map(|(_, m)| m).collect();
    let total = Matrix::vstack(&parts);
    Ok(LinearSystem {
        family,
        p: p.clone(),
        mass: mass.clone(),
        blocks,
        total,
    })
}

fn sc(r: &Rational) -> Scalar {
    Scalar::from_rational(r.clone())
}

fn mass_term(mass: &Rational) -> Scalar {
    sc(mass)
}

fn slash(p: &MomentumSample) -> Matrix {
    let mut out = Matrix::zeros(4, 4);
    for mu in 0..DIM {
        out = out.add(&gamma::gamma(mu).scale(&p.p_lower(mu)));
    }
    out
}

fn dirac_gamma_blocks(p: &MomentumSample, mass: &Rational) -> Vec<(String, Matrix)> {
    let m = slash(p).sub(&Matrix::identity(4).scale(&mass_term(mass)));
    vec![("gamma_contraction".to_string(), m)]
}

fn dirac_sigma_blocks(p: &MomentumSample, mass: &Rational) -> Vec<(String, Matrix)> {
    (0..DIM)
        .map(|mu| {
            let mut b = Matrix::zeros(4, 4);
            for nu in 0..DIM {
                let mut coupling = gamma::sigma(mu, nu);
                if mu == nu {
                    coupling =
                        coupling.add(&Matrix::identity(4).scale(&Scalar::from_int(metric_sign(mu))));
                }
                b = b.add(&coupling.scale(&p.p_lower(nu)));
            }
            b = b.sub(&gamma::gamma(mu).scale(&mass_term(mass)));
            (format!("component_{mu}"), b)
        })
        .collect()
}

fn dirac_pl_blocks(p: &MomentumSample, mass: &Rational) -> Vec<(String, Matrix)> {
    let g5 = gamma::gamma5_lower();
    (0..DIM)
        .map(|mu| {
            let mut lhs = Matrix::zeros(4, 4);
            for nu in 0..DIM {
                for s in 0..DIM {
                    for t in 0..DIM {
                        let e = levi_civita_lower(mu, nu, s, t);
                        if e != 0 {
                            let coeff = &Scalar::imag_ratio(-e, 2) * &p.p_upper(nu);
                            lhs = lhs.add(&gamma::gamma(s).mul(&gamma::gamma(t)).scale(&coeff));
                        }
                    }
                }
            }
            let gamma_lower = gamma::gamma(mu).scale(&Scalar::from_int(metric_sign(mu)));
            let rhs = Matrix::identity(4)
                .scale(&p.p_lower(mu))
                .add(&gamma_lower.scale(&mass_term(mass)))
                .mul(&g5);
            (format!("component_{mu}"), lhs.sub(&rhs))
        })
        .collect()
}

fn weyl_sigma_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    (0..DIM)
        .map(|mu| {
            let mut b = Matrix::zeros(2, 2);
            for nu in 0..DIM {
                b = b.add(&weyl::sigma_upper(mu, nu).scale(&p.p_lower(nu)));
            }
            b = b.sub(&Matrix::identity(2).scale(&p.p_upper(mu)));
            (format!("component_{mu}"), b)
        })
        .collect()
}

fn weyl_compact_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    let mut b = Matrix::zeros(2, 2);
    for mu in 0..DIM {
        b = b.add(&weyl::sigma_four(mu).scale(&p.p_lower(mu)));
    }
    vec![("sigma_contraction".to_string(), b)]
}

fn proca_blocks(p: &MomentumSample, mass: &Rational) -> Vec<(String, Matrix)> {
    let gap = &(mass * mass) - p.square();
    let b = Matrix::from_fn(4, 4, |mu, nu| {
        let mut v = &p.p_upper(mu) * &p.p_lower(nu);
        if mu == nu {
            v = &v + &sc(&gap);
        }
        v
    });
    vec![("field_operator".to_string(), b)]
}

fn maxwell_so3c_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    (0..DIM)
        .map(|mu| {
            let mut b = Matrix::zeros(3, 3);
            for nu in 0..DIM {
                let mut coupling = so3c::sigma(mu, nu);
                if mu == nu {
                    coupling =
                        coupling.add(&Matrix::identity(3).scale(&Scalar::from_int(metric_sign(mu))));
                }
                let coeff = &(-Scalar::i()) * &p.p_lower(nu);
                b = b.add(&coupling.scale(&coeff));
            }
            (format!("component_{mu}"), b)
        })
        .collect()
}

fn maxwell_curl_div_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    let cross = Matrix::from_fn(3, 3, |a, c| {
        let mut v = Scalar::zero();
        for b in 1..=3 {
            let e = levi_civita3(a + 1, b, c + 1);
            if e != 0 {
                v = &v + &p.p_upper(b).scale_int(e);
            }
        }
        v
    });
    let curl = Matrix::identity(3)
        .scale(&p.p_upper(0))
        .sub(&cross.scale(&Scalar::i()));
    let div = Matrix::from_fn(1, 3, |_, c| p.p_upper(c + 1));
    vec![("curl".to_string(), curl), ("divergence".to_string(), div)]
}

fn maxwell_spinor_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    let i2 = Matrix::identity(2);
    (0..DIM)
        .map(|mu| {
            let mut b = Matrix::zeros(4, 4);
            for nu in 0..DIM {
                let s = weyl::sigma_lower(mu, nu);
                let adjoint = i2.kron(&s).sub(&s.transpose().kron(&i2));
                let coeff = &p.p_upper(nu) * &Scalar::from_ratio(1, 2);
                b = b.add(&adjoint.scale(&coeff));
            }
            b = b.sub(&Matrix::identity(4).scale(&p.p_lower(mu)));
            (format!("component_{mu}"), b)
        })
        .collect()
}

fn maxwell_laport_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    let mut d = Matrix::zeros(2, 2);
    for mu in 0..DIM {
        d = d.add(&weyl::sigma_four(mu).scale(&p.p_lower(mu)));
    }
    d = d.scale(&(-Scalar::i()));
    let cols: Vec<Matrix> = (1..=3).map(|k| d.mul(&pauli::sigma(k)).vec_col_major()).collect();
    vec![("sigma_contraction".to_string(), Matrix::from_columns(&cols))]
}

fn maxwell_quaternion_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    let b = Matrix::from_fn(4, 3, |c, k| {
        let mut v = Scalar::zero();
        for mu in 0..DIM {
            let coeff = &(-Scalar::i()) * &p.p_lower(mu);
            v = &v + &(&coeff * &so3c::j_matrix(k + 1)[(mu, c)]);
        }
        v
    });
    vec![("j_contraction".to_string(), b)]
}

fn maxwell_tensor_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    let duals: Vec<Matrix> = (0..DIM)
        .map(|a| self_dual_two_form(p, &basis_column(a)))
        .collect();
    let b = Matrix::from_fn(4, 4, |mu, a| {
        let mut v = Scalar::zero();
        for nu in 0..DIM {
            let coeff = &(-Scalar::i()) * &p.p_lower(nu);
            v = &v + &(&coeff * &duals[a][(mu, nu)]);
        }
        v
    });
    vec![("self_dual_divergence".to_string(), b)]
}

fn fierz_pauli_full_blocks(p: &MomentumSample, mass: &Rational) -> Vec<(String, Matrix)> {
    let msq2 = sc(&(&(mass * mass) * &rat_int(2)));
    let b = sym_operator_matrix(|t| {
        let lhs = fierz_pauli_written_operator(p, t);
        lhs.add(&t.scale(&msq2))
    });
    vec![("field_equation".to_string(), b)]
}

fn fierz_pauli_final_blocks(p: &MomentumSample, mass: &Rational) -> Vec<(String, Matrix)> {
    let gap = sc(&(&(mass * mass) - p.square()));
    vec![
        ("klein_gordon".to_string(), Matrix::identity(10).scale(&gap)),
        ("divergence_pairs".to_string(), sym_divergence_rows(p)),
        ("trace".to_string(), trace_row()),
        ("double_divergence".to_string(), double_divergence_row(p)),
    ]
}

fn fierz_pauli_gauge_blocks(p: &MomentumSample, mass: &Rational) -> Vec<(String, Matrix)> {
    let gap = sc(&(&(mass * mass) - p.square()));
    vec![
        ("klein_gordon".to_string(), Matrix::identity(10).scale(&gap)),
        ("divergence".to_string(), divergence_rows(p)),
        ("trace_combination".to_string(), gauge_trace_rows(p)),
    ]
}

fn einstein_blocks(p: &MomentumSample) -> Vec<(String, Matrix)> {
    vec![("field_equation".to_string(), einstein_operator(p))]
}

/// Column with 1 in component `a`.
fn basis_column(a: usize) -> Matrix {
    let mut c = Matrix::zeros(4, 1);
    c[(a, 0)] = Scalar::one();
    c
}

/// Field strength of a vector amplitude: F^{mu nu} = -i(p^mu a^nu - p^nu a^mu).
pub fn vector_field_strength(p: &MomentumSample, a: &Matrix) -> Matrix {
    assert_eq!((a.rows(), a.cols()), (4, 1));
    Matrix::from_fn(4, 4, |mu, nu| {
        let v = &(&p.p_upper(mu) * &a[(nu, 0)]) - &(&p.p_upper(nu) * &a[(mu, 0)]);
        &(-Scalar::i()) * &v
    })
}

/// Self-dual combination Q^{mu nu} = F^{mu nu} - (i/2) e^{mu nu s t} F_{s t}.
pub fn self_dual_two_form(p: &MomentumSample, a: &Matrix) -> Matrix {
    let f = vector_field_strength(p, a);
    Matrix::from_fn(4, 4, |mu, nu| {
        let mut v = f[(mu, nu)].clone();
        for s in 0..DIM {
            for t in 0..DIM {
                let e = levi_civita_upper(mu, nu, s, t);
                if e != 0 {
                    let lower = f[(s, t)].scale_int(metric_sign(s) * metric_sign(t));
                    v = &v + &(&Scalar::imag_ratio(-e, 2) * &lower);
                }
            }
        }
        v
    })
}

/// Third-rank field strength of a symmetric amplitude:
/// F^{n a b} = -i(p^n T^{a b} - p^a T^{n b}); `out[n][(a, b)]`.
pub fn sym_field_strength(p: &MomentumSample, t: &Matrix) -> Vec<Matrix> {
    assert_eq!((t.rows(), t.cols()), (4, 4));
    (0..DIM)
        .map(|n| {
            Matrix::from_fn(4, 4, |a, b| {
                let v = &(&p.p_upper(n) * &t[(a, b)]) - &(&p.p_upper(a) * &t[(n, b)]);
                &(-Scalar::i()) * &v
            })
        })
        .collect()
}

/// Self-dual third-rank combination over the first index pair:
/// Q^{m n a} = F^{m n a} - (i/2) e^{m n s t} F_{s t}^{  a}.
pub fn self_dual_third_rank(p: &MomentumSample, t: &Matrix) -> Vec<Matrix> {
    let f = sym_field_strength(p, t);
    (0..DIM)
        .map(|m| {
            Matrix::from_fn(4, 4, |n, a| {
                let mut v = f[m][(n, a)].clone();
                for s in 0..DIM {
                    for tt in 0..DIM {
                        let e = levi_civita_upper(m, n, s, tt);
                        if e != 0 {
                            let lower = f[s][(tt, a)].scale_int(metric_sign(s) * metric_sign(tt));
                            v = &v + &(&Scalar::imag_ratio(-e, 2) * &lower);
                        }
                    }
                }
                v
            })
        })
        .collect()
}

fn tensor_trace(t: &Matrix) -> Scalar {
    let mut v = Scalar::zero();
    for a in 0..DIM {
        v = &v + &t[(a, a)].scale_int(metric_sign(a));
    }
    v
}

fn tensor_divergence(p: &MomentumSample, t: &Matrix, beta: usize) -> Scalar {
    let mut v = Scalar::zero();
    for nu in 0..DIM {
        v = &v + &(&p.p_lower(nu) * &t[(nu, beta)]);
    }
    v
}

fn tensor_double_divergence(p: &MomentumSample, t: &Matrix) -> Scalar {
    let mut v = Scalar::zero();
    for b in 0..DIM {
        v = &v + &(&p.p_lower(b) * &tensor_divergence(p, t, b));
    }
    v
}

/// Symmetric pair p (x) f + f (x) p in upper components.
pub fn gauge_pair(p: &MomentumSample, f: &Matrix) -> Matrix {
    assert_eq!((f.rows(), f.cols()), (4, 1));
    Matrix::from_fn(4, 4, |a, b| {
        &(&p.p_upper(a) * &f[(b, 0)]) + &(&f[(a, 0)] * &p.p_upper(b))
    })
}

/// Builds the 10x10 matrix of a symmetric-tensor operator by applying it
/// to the ten basis tensors and packing the results.
fn sym_operator_matrix(op: impl Fn(&Matrix) -> Matrix) -> Matrix {
    let cols: Vec<Matrix> = (0..10)
        .map(|j| {
            let t = sym_basis_tensor(j);
            symtensor::sym_vec(&op(&t))
        })
        .collect();
    Matrix::from_columns(&cols)
}

fn sym_basis_tensor(j: usize) -> Matrix {
    let (a, b) = symtensor::SYM_BASIS[j];
    let mut t = Matrix::zeros(4, 4);
    t[(a, b)] = Scalar::one();
    t[(b, a)] = Scalar::one();
    t
}

/// Row matrix built from a scalar-valued function of the basis tensors.
fn sym_row_matrix(rows: usize, f: impl Fn(usize, &Matrix) -> Scalar) -> Matrix {
    Matrix::from_fn(rows, 10, |r, j| f(r, &sym_basis_tensor(j)))
}

fn divergence_rows(p: &MomentumSample) -> Matrix {
    sym_row_matrix(4, |nu, t| tensor_divergence(p, t, nu))
}

fn trace_row() -> Matrix {
    sym_row_matrix(1, |_, t| tensor_trace(t))
}

fn double_divergence_row(p: &MomentumSample) -> Matrix {
    sym_row_matrix(1, |_, t| tensor_double_divergence(p, t))
}

fn sym_divergence_rows(p: &MomentumSample) -> Matrix {
    sym_row_matrix(10, |r, t| {
        let (a, b) = symtensor::SYM_BASIS[r];
        let left = &p.p_upper(a) * &tensor_divergence(p, t, b);
        let right = &p.p_upper(b) * &tensor_divergence(p, t, a);
        &left + &right
    })
}

fn gauge_trace_rows(p: &MomentumSample) -> Matrix {
    sym_row_matrix(4, |mu, t| {
        let four_div = tensor_divergence(p, t, mu).scale_int(4);
        &four_div - &(&p.p_upper(mu) * &tensor_trace(t))
    })
}

/// Harmonic (de Donder) rows 2 g_mu div^mu - p_mu tr in the ten coordinates.
fn de_donder_rows(p: &MomentumSample) -> Matrix {
    sym_row_matrix(4, |mu, t| {
        let div = tensor_divergence(p, t, mu).scale_int(2 * metric_sign(mu));
        &div - &(&p.p_lower(mu) * &tensor_trace(t))
    })
}

/// Transversality plus tracelessness as a 5x10 constraint block.
pub fn transverse_traceless_rows(p: &MomentumSample) -> Matrix {
    Matrix::vstack(&[&divergence_rows(p), &trace_row()])
}

/// Spin-two operator in divergence-and-trace form, acting on the ten
/// coordinates: -p² T + (2/3)(p (x) div)_sym - (1/3) p (x) p tr
/// + (1/3) g (p² tr - ddiv), plus m² T.
pub fn fierz_pauli_a_operator(p: &MomentumSample, mass: &Rational) -> Matrix {
    let psq = sc(p.square());
    let msq = sc(&(mass * mass));
    sym_operator_matrix(|t| {
        let tr = tensor_trace(t);
        let ddiv = tensor_double_divergence(p, t);
        let div: Vec<Scalar> = (0..DIM).map(|b| tensor_divergence(p, t, b)).collect();
        Matrix::from_fn(4, 4, |a, b| {
            let mut v = &(-&psq) * &t[(a, b)];
            let sym_div = &(&p.p_upper(a) * &div[b]) + &(&p.p_upper(b) * &div[a]);
            v = &v + &(&Scalar::from_ratio(2, 3) * &sym_div);
            let pp_tr = &(&p.p_upper(a) * &p.p_upper(b)) * &tr;
            v = &v - &(&Scalar::from_ratio(1, 3) * &pp_tr);
            if a == b {
                let g_term = &(&psq * &tr) - &ddiv;
                v = &v + &(&g_term.scale_int(metric_sign(a)) * &Scalar::from_ratio(1, 3));
            }
            &v + &(&msq * &t[(a, b)])
        })
    })
}

/// The spin-two operator assembled literally from its third-rank field
/// strength: d_n F^{n a b} + d_n F^{n b a} - (2/3) g^{a b} d_n tr F^n
/// + (1/3) d^a tr F^b + (1/3) d^b tr F^a.
fn fierz_pauli_written_operator(p: &MomentumSample, t: &Matrix) -> Matrix {
    let f = sym_field_strength(p, t);
    let minus_i = -Scalar::i();
    let f_trace: Vec<Scalar> = (0..DIM)
        .map(|n| {
            let mut v = Scalar::zero();
            for s in 0..DIM {
                v = &v + &f[n][(s, s)].scale_int(metric_sign(s));
            }
            v
        })
        .collect();
    let mut div_trace = Scalar::zero();
    for n in 0..DIM {
        div_trace = &div_trace + &(&(&minus_i * &p.p_lower(n)) * &f_trace[n]);
    }
    Matrix::from_fn(4, 4, |a, b| {
        let mut v = Scalar::zero();
        for n in 0..DIM {
            let coeff = &minus_i * &p.p_lower(n);
            v = &v + &(&coeff * &(&f[n][(a, b)] + &f[n][(b, a)]));
        }
        if a == b {
            v = &v - &(&div_trace.scale_int(metric_sign(a)) * &Scalar::from_ratio(2, 3));
        }
        let da = &(&minus_i * &p.p_upper(a)) * &f_trace[b];
        let db = &(&minus_i * &p.p_upper(b)) * &f_trace[a];
        v = &v + &(&(&da + &db) * &Scalar::from_ratio(1, 3));
        v
    })
}

/// Linearized Einstein operator on the ten upper coordinates, with the
/// row indices raised so it is directly comparable with the spin-two form.
pub fn einstein_operator(p: &MomentumSample) -> Matrix {
    let psq = sc(p.square());
    sym_operator_matrix(|t| {
        let h_lower = Matrix::from_fn(4, 4, |m, n| {
            t[(m, n)].scale_int(metric_sign(m) * metric_sign(n))
        });
        let trace = tensor_trace(t);
        let ddiv = tensor_double_divergence(p, t);
        let p_dot_h: Vec<Scalar> = (0..DIM)
            .map(|n| {
                let mut v = Scalar::zero();
                for s in 0..DIM {
                    v = &v + &(&p.p_upper(s) * &h_lower[(s, n)]);
                }
                v
            })
            .collect();
        Matrix::from_fn(4, 4, |a, b| {
            let mut v = -&(&p.p_lower(a) * &p_dot_h[b]);
            v = &v - &(&p.p_lower(b) * &p_dot_h[a]);
            v = &v + &(&(&p.p_lower(a) * &p.p_lower(b)) * &trace);
            v = &v + &(&psq * &h_lower[(a, b)]);
            if a == b {
                let g_term = &ddiv - &(&psq * &trace);
                v = &v + &g_term.scale_int(metric_sign(a));
            }
            v.scale_int(metric_sign(a) * metric_sign(b))
        })
    })
}

/// Relation between the solution spaces of two assembled systems, after
/// mapping the first kernel through an optional intertwiner.
#[derive(Debug, Clone)]
pub struct EquivalenceResult {
    pub system_a: Family,
    pub system_b: Family,
    pub isomorphism: Option<Matrix>,
    pub verdict: SubspaceRelation,
    pub dims: (usize, usize),
}

pub fn equivalence(a: &LinearSystem, b: &LinearSystem, iso: Option<&Matrix>) -> EquivalenceResult {
    let ka = a.kernel();
    let kb = b.kernel();
    let mapped: Vec<Matrix> = match iso {
        Some(m) => ka.kernel_basis.iter().map(|v| m.mul(v)).collect(),
        None => ka.kernel_basis.clone(),
    };
    let verdict = subspace_relation(&mapped, &kb.kernel_basis, b.family.field_dim());
    EquivalenceResult {
        system_a: a.family,
        system_b: b.family,
        isomorphism: iso.cloned(),
        verdict,
        dims: (ka.kernel_dim, kb.kernel_dim),
    }
}

fn relation_label(r: SubspaceRelation) -> &'static str {
    match r {
        SubspaceRelation::Equal => "equal",
        SubspaceRelation::LeftInsideRight => "left_inside_right",
        SubspaceRelation::RightInsideLeft => "right_inside_left",
        SubspaceRelation::Incomparable => "incomparable",
    }
}

/// Verifies the constraints carried by a family's solutions: transversality
/// for the vector field, transversality and tracelessness for spin two.
/// Families without built-in constraints yield `None`.
pub fn constraint_check(sys: &LinearSystem) -> Option<CheckRecord> {
    let kernel = sys.kernel();
    let (id, reference, ok) = match sys.family {
        Family::Proca => {
            let mut ok = true;
            for v in &kernel.kernel_basis {
                let mut dot = Scalar::zero();
                for nu in 0..DIM {
                    dot = &dot + &(&sys.p.p_lower(nu) * &v[(nu, 0)]);
                }
                ok &= dot.is_zero();
            }
            (
                "proca.transversality",
                "massive vector solutions satisfy p·A = 0",
                ok,
            )
        }
        Family::FierzPauliFull | Family::FierzPauliFinal | Family::FierzPauliGauge => {
            let mut ok = true;
            for v in &kernel.kernel_basis {
                let t = symtensor::sym_unvec(v);
                ok &= tensor_trace(&t).is_zero();
                for b in 0..DIM {
                    ok &= tensor_divergence(&sys.p, &t, b).is_zero();
                }
            }
            (
                match sys.family {
                    Family::FierzPauliFull => "fierz_pauli_full.solution_constraints",
                    Family::FierzPauliFinal => "fierz_pauli_final.solution_constraints",
                    _ => "fierz_pauli_gauge.solution_constraints",
                },
                "massive spin-two solutions are transverse and traceless",
                ok,
            )
        }
        _ => return None,
    };
    Some(
        CheckBuilder::new(SYS_SUITE, id, reference)
            .input("fixture", format!("p={};m={}", sys.p.label(), sys.mass))
            .witness("kernel_dim", kernel.kernel_dim.to_string())
            .verdict(ok),
    )
}

/// Off-shell probe: away from the family's mass shell only gauge
/// directions may survive in the kernel.
pub fn dalembert_check(sys: &LinearSystem) -> CheckRecord {
    let on_shell = *sys.p.square() == &sys.mass * &sys.mass;
    let kernel = sys.kernel();
    let gauge = off_shell_gauge_basis(sys.family, &sys.p);
    let expected = gauge.as_ref().map_or(0, |g| g.len());
    let mut ok = !on_shell && kernel.kernel_dim == expected;
    if let Some(g) = &gauge {
        ok &= matches!(
            subspace_relation(&kernel.kernel_basis, g, sys.family.field_dim()),
            SubspaceRelation::Equal
        );
    }
    let reference = if expected == 0 {
        "off the mass shell the system forces the zero field"
    } else {
        "off the mass shell only the gauge directions survive"
    };
    CheckBuilder::new(
        SYS_SUITE,
        &format!("{}.off_shell_kernel", sys.family.name()),
        reference,
    )
    .input("fixture", format!("p={};m={}", sys.p.label(), sys.mass))
    .witness("kernel_dim", kernel.kernel_dim.to_string())
    .witness("gauge_dim", expected.to_string())
    .verdict(ok)
}

/// Basis of the kernel directions that persist off shell, if any.
fn off_shell_gauge_basis(family: Family, p: &MomentumSample) -> Option<Vec<Matrix>> {
    match family {
        Family::MaxwellTensor => {
            Some(vec![Matrix::from_fn(4, 1, |mu, _| p.p_upper(mu))])
        }
        Family::EinsteinLinear => Some(
            (0..DIM)
                .map(|a| symtensor::sym_vec(&gauge_pair(p, &basis_column(a))))
                .collect(),
        ),
        _ => None,
    }
}

/// All "systems" suite records over the standard fixtures.
pub fn system_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    out.extend(kernel_dimension_checks(fixtures));
    out.extend(constraint_records(fixtures));
    out.push(conjugate_rows_check(fixtures));
    out.push(proca_factored_check(fixtures));
    out.push(fierz_pauli_normalization_check(fixtures));
    out.extend(self_duality_checks(fixtures));
    out.extend(dalembert_records(fixtures));
    out.extend(invariance_checks(fixtures));
    out
}

fn massive_expected_dim(family: Family) -> usize {
    match family {
        Family::DiracGamma | Family::DiracSigma | Family::DiracPl => 2,
        Family::Proca => 3,
        _ => 5,
    }
}

fn massless_expected_dim(family: Family) -> usize {
    match family {
        Family::MaxwellTensor => 3,
        Family::EinsteinLinear => 6,
        _ => 1,
    }
}

fn kernel_dimension_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let massive_families = [
        Family::DiracGamma,
        Family::DiracSigma,
        Family::DiracPl,
        Family::Proca,
        Family::FierzPauliFull,
        Family::FierzPauliFinal,
        Family::FierzPauliGauge,
    ];
    for family in massive_families {
        let expected = massive_expected_dim(family);
        for f in &fixtures.massive {
            let sys = assemble(family, &f.sample, &f.mass).expect("massive family");
            let kernel = sys.kernel();
            out.push(
                CheckBuilder::new(
                    SYS_SUITE,
                    &format!("{}.kernel_dimension", family.name()),
                    "on-shell solution count matches the spin content",
                )
                .input("fixture", f.label())
                .witness("kernel_dim", kernel.kernel_dim.to_string())
                .verdict(kernel.kernel_dim == expected),
            );
        }
    }
    let massless_families = [
        Family::WeylSigma,
        Family::WeylCompact,
        Family::MaxwellSo3c,
        Family::MaxwellCurlDiv,
        Family::MaxwellSpinor,
        Family::MaxwellLaport,
        Family::MaxwellQuaternion,
        Family::MaxwellTensor,
        Family::EinsteinLinear,
    ];
    for family in massless_families {
        let expected = massless_expected_dim(family);
        for f in &fixtures.massless {
            let sys = assemble(family, &f.sample, &f.mass).expect("massless fixture");
            let kernel = sys.kernel();
            out.push(
                CheckBuilder::new(
                    SYS_SUITE,
                    &format!("{}.kernel_dimension", family.name()),
                    "light-cone solution count matches the helicity content",
                )
                .input("fixture", f.label())
                .witness("kernel_dim", kernel.kernel_dim.to_string())
                .verdict(kernel.kernel_dim == expected),
            );
        }
    }
    out
}

fn constraint_records(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for family in [
        Family::Proca,
        Family::FierzPauliFull,
        Family::FierzPauliFinal,
        Family::FierzPauliGauge,
    ] {
        for f in &fixtures.massive {
            let sys = assemble(family, &f.sample, &f.mass).expect("massive family");
            if let Some(rec) = constraint_check(&sys) {
                out.push(rec);
            }
        }
    }
    out
}

/// The adjoint field solves the row system obtained by flipping the sign
/// of the momentum couplings; its row space is exactly u-dagger gamma^0
/// over the column solutions.
fn conjugate_rows_check(fixtures: &FixtureSet) -> CheckRecord {
    let mut ok = true;
    for f in &fixtures.massive {
        let p = &f.sample;
        let blocks: Vec<Matrix> = (0..DIM)
            .map(|mu| {
                let mut b = Matrix::zeros(4, 4);
                for nu in 0..DIM {
                    let mut coupling = gamma::sigma(mu, nu);
                    if mu == nu {
                        coupling = coupling
                            .sub(&Matrix::identity(4).scale(&Scalar::from_int(metric_sign(mu))));
                    }
                    b = b.add(&coupling.scale(&(-&p.p_lower(nu))));
                }
                b.sub(&gamma::gamma(mu).scale(&sc(&f.mass)))
            })
            .collect();
        let parts: Vec<&Matrix> = blocks.iter().collect();
        let row_system = Matrix::hstack(&parts);
        let left = crate::kernel::left_kernel(&row_system);
        let direct = assemble(Family::DiracGamma, p, &f.mass).expect("bispinor").kernel();
        ok &= left.kernel_dim == direct.kernel_dim;
        let adjoints: Vec<Matrix> = direct
            .kernel_basis
            .iter()
            .map(|u| gamma::gamma(0).mul(&u.conj()))
            .collect();
        ok &= matches!(
            subspace_relation(&left.kernel_basis, &adjoints, 4),
            SubspaceRelation::Equal
        );
    }
    CheckBuilder::new(
        SYS_SUITE,
        "dirac_sigma.conjugate_rows",
        "the adjoint row system is solved exactly by u-dagger gamma^0",
    )
    .witness("kernel_dim", "2")
    .verdict(ok)
}

fn proca_factored_check(fixtures: &FixtureSet) -> CheckRecord {
    let mut ok = true;
    for f in &fixtures.massive {
        let p = &f.sample;
        let sys = assemble(Family::Proca, p, &f.mass).expect("proca");
        let gap = sc(&(p.square() - &(&f.mass * &f.mass)));
        let kg = Matrix::identity(4).scale(&gap);
        let div = Matrix::from_fn(1, 4, |_, nu| p.p_lower(nu));
        let factored = Matrix::vstack(&[&kg, &div]);
        let ka = sys.kernel();
        let kb = rank_and_kernel(&factored);
        ok &= ka.kernel_dim == kb.kernel_dim;
        ok &= matches!(
            subspace_relation(&ka.kernel_basis, &kb.kernel_basis, 4),
            SubspaceRelation::Equal
        );
    }
    CheckBuilder::new(
        SYS_SUITE,
        "proca.factored_form",
        "the vector system splits into a Klein-Gordon part plus the \
         transversality constraint with the same solutions",
    )
    .verdict(ok)
}

fn fierz_pauli_normalization_check(fixtures: &FixtureSet) -> CheckRecord {
    let mut ok = true;
    for f in fixtures.all() {
        let sys = assemble(Family::FierzPauliFull, &f.sample, &f.mass).expect("spin two");
        let compact = fierz_pauli_a_operator(&f.sample, &f.mass);
        ok &= sys.total == compact.scale(&Scalar::from_int(2));
    }
    CheckBuilder::new(
        SYS_SUITE,
        "fierz_pauli_full.operator_normalization",
        "the literal field-strength assembly equals twice the \
         divergence-and-trace form at every probed momentum and mass",
    )
    .witness("factor", "2")
    .verdict(ok)
}

fn self_duality_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let samples = [
        &fixtures.massless_probe(0).sample,
        &fixtures.massive_probe(1).sample,
        &fixtures.off_shell_probe(0).sample,
    ];
    let two_i = Scalar::imag_ratio(2, 1);

    let mut vector_ok = true;
    for p in samples {
        for a in 0..DIM {
            let q = self_dual_two_form(p, &basis_column(a));
            for mu in 0..DIM {
                for nu in 0..DIM {
                    let mut upper_contraction = Scalar::zero();
                    let mut lower_contraction = Scalar::zero();
                    for s in 0..DIM {
                        for t in 0..DIM {
                            let eu = levi_civita_upper(mu, nu, s, t);
                            if eu != 0 {
                                let lowered =
                                    q[(s, t)].scale_int(metric_sign(s) * metric_sign(t));
                                upper_contraction = &upper_contraction + &lowered.scale_int(eu);
                            }
                            let el = levi_civita_lower(mu, nu, s, t);
                            if el != 0 {
                                lower_contraction =
                                    &lower_contraction + &q[(s, t)].scale_int(el);
                            }
                        }
                    }
                    vector_ok &= upper_contraction == &two_i * &q[(mu, nu)];
                    let q_lower = q[(mu, nu)].scale_int(metric_sign(mu) * metric_sign(nu));
                    vector_ok &= lower_contraction == &two_i * &q_lower;
                }
            }
        }
    }
    let vector_record = CheckBuilder::new(
        SYS_SUITE,
        "maxwell_tensor.self_duality",
        "Q = F - (i/2) eF reproduces itself under both dual contractions",
    )
    .witness("eigenvalue", "2i")
    .verdict(vector_ok);

    let mut cyclic_ok = true;
    let mut third_ok = true;
    for p in samples {
        for j in 0..10 {
            let t = sym_basis_tensor(j);
            let f = sym_field_strength(p, &t);
            for a in 0..DIM {
                for b in 0..DIM {
                    for c in 0..DIM {
                        let total = &(&f[a][(b, c)] + &f[b][(c, a)]) + &f[c][(a, b)];
                        cyclic_ok &= total.is_zero();
                    }
                }
            }
            let q = self_dual_third_rank(p, &t);
            for m in 0..DIM {
                for n in 0..DIM {
                    for a in 0..DIM {
                        let mut upper_contraction = Scalar::zero();
                        let mut lower_contraction = Scalar::zero();
                        for s in 0..DIM {
                            for tt in 0..DIM {
                                let eu = levi_civita_upper(m, n, s, tt);
                                if eu != 0 {
                                    let lowered =
                                        q[s][(tt, a)].scale_int(metric_sign(s) * metric_sign(tt));
                                    upper_contraction =
                                        &upper_contraction + &lowered.scale_int(eu);
                                }
                                let el = levi_civita_lower(m, n, s, tt);
                                if el != 0 {
                                    lower_contraction =
                                        &lower_contraction + &q[s][(tt, a)].scale_int(el);
                                }
                            }
                        }
                        third_ok &= upper_contraction == &two_i * &q[m][(n, a)];
                        let q_lower = q[m][(n, a)].scale_int(metric_sign(m) * metric_sign(n));
                        third_ok &= lower_contraction == &two_i * &q_lower;
                    }
                }
            }
        }
    }
    let cyclic_record = CheckBuilder::new(
        SYS_SUITE,
        "fierz_pauli_full.field_strength_cyclic",
        "the third-rank field strength of a symmetric amplitude sums to \
         zero over cyclic index shifts",
    )
    .verdict(cyclic_ok);
    let third_record = CheckBuilder::new(
        SYS_SUITE,
        "fierz_pauli_full.third_rank_self_duality",
        "the self-dual third-rank combination reproduces itself under \
         both dual contractions over its antisymmetric pair",
    )
    .witness("eigenvalue", "2i")
    .verdict(third_ok);

    vec![vector_record, cyclic_record, third_record]
}

fn dalembert_records(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let (massive_sample, massive_mass) = fixtures.off_shell_massive_pair();
    let neutral = fixtures.non_lightlike_samples(2);
    let first = neutral[0];
    let second = *neutral.last().expect("at least one non-lightlike sample");
    let zero = rat_int(0);
    let mut out = Vec::new();
    for family in Family::ALL {
        let mut probes: Vec<(&MomentumSample, &Rational)> = match family {
            Family::Proca | Family::FierzPauliFull | Family::FierzPauliFinal
            | Family::FierzPauliGauge => vec![(&massive_sample, &massive_mass)],
            Family::DiracGamma | Family::DiracSigma | Family::DiracPl => vec![
                (&massive_sample, &massive_mass),
                (second, &zero),
            ],
            _ => vec![(first, &zero), (second, &zero)],
        };
        probes.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
        for (sample, mass) in probes {
            let sys = assemble(family, sample, mass).expect("off-shell probe");
            out.push(dalembert_check(&sys));
        }
    }
    out
}

fn invariance_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let boost = LorentzMatrix::boost(1, &rat(5, 4), &rat(3, 4)).expect("valid boost");
    let rotation =
        LorentzMatrix::rotation(RotationPlane::P31, &rat(3, 5), &rat(4, 5)).expect("valid rotation");
    let l = boost.compose(&rotation);
    let probes: [(&Fixture, Family); 6] = [
        (fixtures.massive_probe(1), Family::DiracGamma),
        (fixtures.massive_probe(1), Family::Proca),
        (fixtures.massive_probe(2), Family::FierzPauliFinal),
        (fixtures.massless_probe(0), Family::WeylCompact),
        (fixtures.massless_probe(1), Family::MaxwellSo3c),
        (fixtures.massless_probe(0), Family::EinsteinLinear),
    ];
    probes
        .iter()
        .map(|(f, family)| {
            let moved = l.apply(&f.sample);
            let here = assemble(*family, &f.sample, &f.mass).expect("probe").kernel();
            let there = assemble(*family, &moved, &f.mass).expect("probe").kernel();
            CheckBuilder::new(
                SYS_SUITE,
                &format!("{}.kernel_dim_invariance", family.name()),
                "the solution count is unchanged under a proper \
                 orthochronous change of frame",
            )
            .input("fixture", f.label())
            .input("element", "boost_1 * rotation_31")
            .witness("dims", format!("{},{}", here.kernel_dim, there.kernel_dim))
            .verdict(here.kernel_dim == there.kernel_dim)
        })
        .collect()
}

/// All "equivalences" suite records.
pub fn equivalence_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut out = Vec::new();

    for (b, reference) in [
        (
            Family::DiracSigma,
            "the second-order sigma form selects the same bispinors as the \
             first-order equation",
        ),
        (
            Family::DiracPl,
            "the Pauli-Lubanski form selects the same bispinors as the \
             first-order equation",
        ),
    ] {
        let mut ok = true;
        for f in &fixtures.massive {
            let sys_a = assemble(Family::DiracGamma, &f.sample, &f.mass).expect("bispinor");
            let sys_b = assemble(b, &f.sample, &f.mass).expect("bispinor");
            let eq = equivalence(&sys_a, &sys_b, None);
            ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (2, 2);
        }
        out.push(
            CheckBuilder::new(
                EQUIV_SUITE,
                &format!("dirac_gamma.{}", b.name()),
                reference,
            )
            .witness("dims", "2,2")
            .witness("relation", "equal")
            .verdict(ok),
        );
    }

    let mut weyl_ok = true;
    for f in &fixtures.massless {
        let sys_a = assemble(Family::WeylCompact, &f.sample, &f.mass).expect("weyl");
        let sys_b = assemble(Family::WeylSigma, &f.sample, &f.mass).expect("weyl");
        let eq = equivalence(&sys_a, &sys_b, None);
        weyl_ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (1, 1);
    }
    out.push(
        CheckBuilder::new(
            EQUIV_SUITE,
            "weyl_compact.weyl_sigma",
            "the compact two-spinor equation and its component form share \
             the single light-cone solution",
        )
        .witness("dims", "1,1")
        .witness("relation", "equal")
        .verdict(weyl_ok),
    );

    let zero = rat_int(0);
    let massive_sample = &fixtures.massive_probe(1).sample;
    for (b, reference) in [
        (
            Family::MaxwellCurlDiv,
            "the covariant photon system reduces to the curl and divergence \
             equations of the complex field vector",
        ),
        (
            Family::MaxwellLaport,
            "the covariant photon system matches the two-spinor contraction \
             acting on the complex field vector",
        ),
        (
            Family::MaxwellQuaternion,
            "the covariant photon system matches the quaternion-units \
             contraction acting on the complex field vector",
        ),
    ] {
        let mut ok = true;
        for f in &fixtures.massless {
            let sys_a = assemble(Family::MaxwellSo3c, &f.sample, &f.mass).expect("photon");
            let sys_b = assemble(b, &f.sample, &f.mass).expect("photon");
            let eq = equivalence(&sys_a, &sys_b, None);
            ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (1, 1);
        }
        let sys_a = assemble(Family::MaxwellSo3c, massive_sample, &zero).expect("photon");
        let sys_b = assemble(b, massive_sample, &zero).expect("photon");
        let eq = equivalence(&sys_a, &sys_b, None);
        ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (0, 0);
        out.push(
            CheckBuilder::new(EQUIV_SUITE, &format!("maxwell_so3c.{}", b.name()), reference)
                .witness("massless_dims", "1,1")
                .witness("massive_dims", "0,0")
                .witness("relation", "equal")
                .verdict(ok),
        );
    }

    let sigma_columns: Vec<Matrix> = (1..=3).map(|k| pauli::sigma(k).vec_col_major()).collect();
    let sigma_embedding = Matrix::from_columns(&sigma_columns);
    let mut spinor_ok = true;
    for f in &fixtures.massless {
        let sys_a = assemble(Family::MaxwellSo3c, &f.sample, &f.mass).expect("photon");
        let sys_b = assemble(Family::MaxwellSpinor, &f.sample, &f.mass).expect("photon");
        let eq = equivalence(&sys_a, &sys_b, Some(&sigma_embedding));
        spinor_ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (1, 1);
    }
    {
        let sys_a = assemble(Family::MaxwellSo3c, massive_sample, &zero).expect("photon");
        let sys_b = assemble(Family::MaxwellSpinor, massive_sample, &zero).expect("photon");
        let eq = equivalence(&sys_a, &sys_b, Some(&sigma_embedding));
        spinor_ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (0, 0);
    }
    out.push(
        CheckBuilder::new(
            EQUIV_SUITE,
            "maxwell_so3c.maxwell_spinor",
            "packing the complex field vector into a symmetric two-spinor \
             matrix carries photon solutions onto spinor-matrix solutions",
        )
        .witness("isomorphism", "F -> vec(F·sigma)")
        .witness("massless_dims", "1,1")
        .witness("massive_dims", "0,0")
        .verdict(spinor_ok),
    );

    let mut tensor_ok = true;
    for (idx, f) in fixtures.massless.iter().enumerate() {
        let p = &f.sample;
        let projector = tensor_to_field_map(p);
        let sys_a = assemble(Family::MaxwellTensor, p, &f.mass).expect("photon");
        let sys_b = assemble(Family::MaxwellSo3c, p, &f.mass).expect("photon");
        let eq = equivalence(&sys_a, &sys_b, Some(&projector));
        tensor_ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (3, 1);
        if idx == 0 {
            let mapped: Vec<Matrix> = sys_a
                .kernel()
                .kernel_basis
                .iter()
                .map(|v| projector.mul(v))
                .collect();
            let circular = Matrix::col(vec![Scalar::one(), Scalar::i(), Scalar::zero()]);
            tensor_ok &= matches!(
                subspace_relation(&mapped, &[circular], 3),
                SubspaceRelation::Equal
            );
        }
    }
    {
        let projector = tensor_to_field_map(massive_sample);
        let sys_a = assemble(Family::MaxwellTensor, massive_sample, &zero).expect("photon");
        let sys_b = assemble(Family::MaxwellSo3c, massive_sample, &zero).expect("photon");
        let eq = equivalence(&sys_a, &sys_b, Some(&projector));
        tensor_ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (1, 0);
    }
    out.push(
        CheckBuilder::new(
            EQUIV_SUITE,
            "maxwell_tensor.maxwell_so3c",
            "reading the complex field vector out of the self-dual tensor \
             of the potential collapses gauge copies onto photon solutions",
        )
        .witness("isomorphism", "A -> Q^{k0}(A)")
        .witness("massless_dims", "3,1")
        .witness("massive_dims", "1,0")
        .verdict(tensor_ok),
    );

    for (a, b, reference) in [
        (
            Family::FierzPauliFull,
            Family::FierzPauliFinal,
            "the single spin-two field equation enforces its own \
             constraints and matches the constrained final system",
        ),
        (
            Family::FierzPauliFinal,
            Family::FierzPauliGauge,
            "both constrained spin-two assemblies carve out the same \
             five-dimensional solution space",
        ),
    ] {
        let mut ok = true;
        for f in &fixtures.massive {
            let sys_a = assemble(a, &f.sample, &f.mass).expect("spin two");
            let sys_b = assemble(b, &f.sample, &f.mass).expect("spin two");
            let eq = equivalence(&sys_a, &sys_b, None);
            ok &= matches!(eq.verdict, SubspaceRelation::Equal) && eq.dims == (5, 5);
        }
        out.push(
            CheckBuilder::new(EQUIV_SUITE, &format!("{}.{}", a.name(), b.name()), reference)
                .witness("dims", "5,5")
                .witness("relation", "equal")
                .verdict(ok),
        );
    }

    out
}

/// Map from a potential to the complex field vector F_k = Q^{k0}(A).
pub fn tensor_to_field_map(p: &MomentumSample) -> Matrix {
    let duals: Vec<Matrix> = (0..DIM)
        .map(|a| self_dual_two_form(p, &basis_column(a)))
        .collect();
    Matrix::from_fn(3, 4, |k, a| duals[a][(k + 1, 0)].clone())
}

/// All "gauge" suite records.
pub fn gauge_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let zero = rat_int(0);
    let mut out = Vec::new();

    let mut proca_ok = true;
    for sample in [
        &fixtures.massless_probe(0).sample,
        &fixtures.massless_probe(1).sample,
        &fixtures.off_shell_probe(1).sample,
    ] {
        let sys = assemble(Family::Proca, sample, &zero).expect("massless vector");
        let direction = Matrix::from_fn(4, 1, |mu, _| sample.p_upper(mu));
        proca_ok &= sys.residual(&direction, None).is_zero();
        proca_ok &= vector_field_strength(sample, &direction).is_zero();
    }
    out.push(
        CheckBuilder::new(
            GAUGE_SUITE,
            "proca.massless_gauge_direction",
            "at zero mass the momentum direction is a solution and carries \
             no field strength, on or off the light cone",
        )
        .witness("field_strength", "0")
        .verdict(proca_ok),
    );

    let mut tensor_ok = true;
    for sample in [
        &fixtures.massless_probe(0).sample,
        &fixtures.massless_probe(1).sample,
        &fixtures.off_shell_probe(1).sample,
    ] {
        let sys = assemble(Family::MaxwellTensor, sample, &zero).expect("photon");
        let direction = Matrix::from_fn(4, 1, |mu, _| sample.p_upper(mu));
        tensor_ok &= sys.residual(&direction, None).is_zero();
        tensor_ok &= self_dual_two_form(sample, &direction).is_zero();
    }
    out.push(
        CheckBuilder::new(
            GAUGE_SUITE,
            "maxwell_tensor.gauge_direction",
            "the pure-gauge potential along the momentum is annihilated and \
             carries a vanishing self-dual tensor",
        )
        .witness("self_dual_tensor", "0")
        .verdict(tensor_ok),
    );

    let mut fp_ok = true;
    let mut parameter_dims = Vec::new();
    for f in &fixtures.massless {
        let p = &f.sample;
        let sys = assemble(Family::FierzPauliFull, p, &zero).expect("massless spin two");
        let condition = Matrix::from_fn(4, 4, |mu, nu| {
            let mut v = &p.p_upper(mu) * &(-&p.p_lower(nu));
            if mu == nu {
                v = &v + &sc(p.square());
            }
            v
        });
        let params = rank_and_kernel(&condition);
        parameter_dims.push(params.kernel_dim);
        for f_vec in &params.kernel_basis {
            let pair = symtensor::sym_vec(&gauge_pair(p, f_vec));
            fp_ok &= sys.residual(&pair, None).is_zero();
        }
    }
    out.push(
        CheckBuilder::new(
            GAUGE_SUITE,
            "fierz_pauli_full.gauge_annihilation",
            "at zero mass every symmetrized pair built from a wave-equation \
             gauge parameter is annihilated by the field equation",
        )
        .witness(
            "parameter_space_dims",
            parameter_dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
        .verdict(fp_ok),
    );

    let mut control_ok = true;
    for f in &fixtures.massless {
        let p = &f.sample;
        let sys = assemble(Family::FierzPauliFull, p, &zero).expect("massless spin two");
        let bad = basis_column(0);
        let mut p_dot_f = Scalar::zero();
        for nu in 0..DIM {
            p_dot_f = &p_dot_f + &(&p.p_lower(nu) * &bad[(nu, 0)]);
        }
        let residual = sys.residual(&symtensor::sym_vec(&gauge_pair(p, &bad)), None);
        let momentum_column = Matrix::from_fn(4, 1, |mu, _| p.p_upper(mu));
        let predicted_tensor = gauge_pair(p, &momentum_column)
            .scale(&(&p_dot_f * &Scalar::from_ratio(2, 3)));
        let predicted = symtensor::sym_vec(&predicted_tensor);
        control_ok &= !residual.is_zero();
        control_ok &= residual == predicted;
    }
    out.push(
        CheckBuilder::new(
            GAUGE_SUITE,
            "fierz_pauli_full.gauge_negative_control",
            "a parameter violating the wave-equation condition leaves the \
             predicted nonzero residual proportional to p (x) p",
        )
        .witness("residual", "(4/3)(p·f) p(x)p on the doubled operator")
        .verdict(control_ok),
    );

    let survey_ok = true;
    let mut survey_witness = Vec::new();
    for f in &fixtures.massless {
        let p = &f.sample;
        let sys = assemble(Family::FierzPauliFull, p, &zero).expect("massless spin two");
        let kernel = sys.kernel();
        let mut satisfied = 0usize;
        for v in &kernel.kernel_basis {
            let t = symtensor::sym_unvec(v);
            let tr = tensor_trace(&t);
            let ddiv = tensor_double_divergence(p, &t);
            let mut holds = true;
            for a in 0..DIM {
                for b in 0..DIM {
                    let left_a = &tensor_divergence(p, &t, b)
                        - &(&(&p.p_upper(b) * &tr) * &Scalar::from_ratio(1, 4));
                    let left_b = &tensor_divergence(p, &t, a)
                        - &(&(&p.p_upper(a) * &tr) * &Scalar::from_ratio(1, 4));
                    let mut lhs = &(&p.p_upper(a) * &left_a) + &(&p.p_upper(b) * &left_b);
                    if a == b {
                        let half = &ddiv * &Scalar::from_ratio(1, 2);
                        lhs = &lhs - &half.scale_int(metric_sign(a));
                    }
                    holds &= lhs.is_zero();
                }
            }
            if holds {
                satisfied += 1;
            }
        }
        survey_witness.push(format!(
            "{}: {}/{} satisfy",
            f.sample.label(),
            satisfied,
            kernel.kernel_dim
        ));
    }
    out.push(
        CheckBuilder::new(
            GAUGE_SUITE,
            "fierz_pauli_full.massless_constraint_survey",
            "massless spin-two solutions are catalogued against the \
             trace-adjusted transversality condition without imposing it",
        )
        .witness("survey", survey_witness.join("; "))
        .verdict(survey_ok),
    );

    out
}

/// Comparison between the linearized Einstein operator and the massless
/// spin-two operator at one momentum.
pub fn einstein_vs_fierz_pauli(p: &MomentumSample) -> Vec<CheckRecord> {
    let zero = rat_int(0);
    let einstein = einstein_operator(p);
    let spin_two = fierz_pauli_a_operator(p, &zero);
    let label = p.label();

    let differing = einstein
        .entries()
        .iter()
        .zip(spin_two.entries().iter())
        .filter(|(a, b)| a != b)
        .count();
    let differs = CheckBuilder::new(
        EINSTEIN_SUITE,
        "einstein_linear.differs_from_spin_two_operator",
        "the two massless operators disagree entry by entry before any \
         gauge choice",
    )
    .input("fixture", label.clone())
    .witness("differing_entries", differing.to_string())
    .verdict(differing > 0);

    let constraints = transverse_traceless_rows(p);
    let restricted_e = rank_and_kernel(&Matrix::vstack(&[&einstein, &constraints]));
    let restricted_f = rank_and_kernel(&Matrix::vstack(&[&spin_two, &constraints]));
    let raw_e = rank_and_kernel(&einstein);
    let raw_f = rank_and_kernel(&spin_two);
    let relation =
        subspace_relation(&restricted_e.kernel_basis, &restricted_f.kernel_basis, 10);
    let agreement = CheckBuilder::new(
        EINSTEIN_SUITE,
        "einstein_linear.transverse_traceless_agreement",
        "restricted to transverse traceless fields the two operators keep \
         the same solutions",
    )
    .input("fixture", label.clone())
    .witness("raw_dims", format!("{},{}", raw_e.kernel_dim, raw_f.kernel_dim))
    .witness(
        "restricted_dims",
        format!("{},{}", restricted_e.kernel_dim, restricted_f.kernel_dim),
    )
    .witness("relation", relation_label(relation))
    .verdict(
        matches!(relation, SubspaceRelation::Equal)
            && restricted_e.kernel_dim == 5
            && restricted_f.kernel_dim == 5,
    );

    let harmonic = de_donder_rows(p);
    let harmonic_e = rank_and_kernel(&Matrix::vstack(&[&einstein, &harmonic]));
    let harmonic_f = rank_and_kernel(&Matrix::vstack(&[&spin_two, &harmonic]));
    let h_relation = subspace_relation(&harmonic_e.kernel_basis, &harmonic_f.kernel_basis, 10);
    let harmonic_record = CheckBuilder::new(
        EINSTEIN_SUITE,
        "einstein_linear.harmonic_gauge_comparison",
        "in harmonic gauge the spin-two solutions sit strictly inside the \
         Einstein solutions: the trace stays free only for Einstein",
    )
    .input("fixture", label)
    .witness(
        "restricted_dims",
        format!("{},{}", harmonic_e.kernel_dim, harmonic_f.kernel_dim),
    )
    .witness("relation", relation_label(h_relation))
    .verdict(
        matches!(h_relation, SubspaceRelation::RightInsideLeft)
            && harmonic_e.kernel_dim == 6
            && harmonic_f.kernel_dim == 5,
    );

    vec![differs, agreement, harmonic_record]
}

/// All "einstein" suite records.
pub fn einstein_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for f in &fixtures.massless {
        out.extend(einstein_vs_fierz_pauli(&f.sample));
    }

    let mut invariance_ok = true;
    for sample in [
        &fixtures.massless_probe(0).sample,
        &fixtures.massless_probe(1).sample,
        &fixtures.off_shell_probe(1).sample,
    ] {
        let op = einstein_operator(sample);
        for a in 0..DIM {
            let pair = symtensor::sym_vec(&gauge_pair(sample, &basis_column(a)));
            invariance_ok &= op.mul(&pair).is_zero();
        }
    }
    out.push(
        CheckBuilder::new(
            EINSTEIN_SUITE,
            "einstein_linear.gauge_invariance",
            "the linearized operator annihilates every symmetrized pair \
             p (x) f identically, even off the light cone",
        )
        .verdict(invariance_ok),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn default_fixtures() -> FixtureSet {
        FixtureSet::default_set()
    }

    #[test]
    fn every_family_assembles_with_expected_shape() {
        let fixtures = default_fixtures();
        for family in Family::ALL {
            let (sample, mass) = if family.massless_only() {
                (&fixtures.massless[0].sample, rat_int(0))
            } else {
                (&fixtures.massive[0].sample, fixtures.massive[0].mass.clone())
            };
            let sys = assemble(family, sample, &mass).expect("assembly");
            assert_eq!(sys.total.cols(), family.field_dim());
            let stacked: usize = sys.blocks.iter().map(|(_, b)| b.rows()).sum();
            assert_eq!(sys.total.rows(), stacked);
        }
    }

    #[test]
    fn massless_families_reject_nonzero_mass() {
        let fixtures = default_fixtures();
        let p = &fixtures.massive[0].sample;
        for family in Family::ALL.into_iter().filter(|f| f.massless_only()) {
            let err = assemble(family, p, &rat_int(2)).unwrap_err();
            assert!(matches!(
                err,
                SystemError::MassiveMassForMasslessFamily { .. }
            ));
        }
    }

    #[test]
    fn rest_frame_bispinor_solutions_occupy_the_upper_components() {
        let p = MomentumSample::from_ints([2, 0, 0, 0]);
        let sys = assemble(Family::DiracGamma, &p, &rat_int(2)).unwrap();
        let expected = gamma::gamma(0).sub(&Matrix::identity(4)).scale(&Scalar::from_int(2));
        assert_eq!(sys.total, expected);
        let kernel = sys.kernel();
        assert_eq!(kernel.kernel_dim, 2);
        for v in &kernel.kernel_basis {
            assert!(v[(2, 0)].is_zero() && v[(3, 0)].is_zero());
        }
    }

    #[test]
    fn lightcone_photon_state_is_circular() {
        let p = MomentumSample::from_ints([1, 0, 0, 1]);
        for family in [
            Family::MaxwellSo3c,
            Family::MaxwellCurlDiv,
            Family::MaxwellLaport,
            Family::MaxwellQuaternion,
        ] {
            let sys = assemble(family, &p, &rat_int(0)).unwrap();
            let kernel = sys.kernel();
            assert_eq!(kernel.kernel_dim, 1, "{}", family.name());
            let circular = Matrix::col(vec![Scalar::one(), Scalar::i(), Scalar::zero()]);
            assert!(
                matches!(
                    subspace_relation(&kernel.kernel_basis, &[circular], 3),
                    SubspaceRelation::Equal
                ),
                "{}",
                family.name()
            );
        }
    }

    #[test]
    fn systems_suite_passes() {
        let records = system_checks(&default_fixtures());
        assert!(!records.is_empty());
        for r in &records {
            assert!(r.passed(), "{} failed", r.check_id);
        }
    }

    #[test]
    fn equivalences_suite_passes() {
        let records = equivalence_checks(&default_fixtures());
        assert!(!records.is_empty());
        for r in &records {
            assert!(r.passed(), "{} failed", r.check_id);
        }
    }

    #[test]
    fn gauge_suite_passes() {
        let records = gauge_checks(&default_fixtures());
        assert!(!records.is_empty());
        for r in &records {
            assert!(r.passed(), "{} failed", r.check_id);
        }
    }

    #[test]
    fn einstein_suite_passes() {
        let records = einstein_checks(&default_fixtures());
        assert!(!records.is_empty());
        for r in &records {
            assert!(r.passed(), "{} failed", r.check_id);
        }
    }

    #[test]
    fn proca_solutions_are_transverse_with_joint_kernel() {
        let p = MomentumSample::from_ints([3, 1, 2, 0]);
        let sys = assemble(Family::Proca, &p, &rat(2, 1)).unwrap();
        let kernel = sys.kernel();
        assert_eq!(kernel.kernel_dim, 3);
        for v in &kernel.kernel_basis {
            let mut dot = Scalar::zero();
            for nu in 0..DIM {
                dot = &dot + &(&p.p_lower(nu) * &v[(nu, 0)]);
            }
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn spin_two_final_system_has_five_solutions() {
        let p = MomentumSample::from_ints([3, 1, 2, 0]);
        let sys = assemble(Family::FierzPauliFinal, &p, &rat(2, 1)).unwrap();
        assert_eq!(sys.total.rows(), 22);
        assert_eq!(sys.kernel().kernel_dim, 5);
    }

    #[test]
    fn residual_supports_optional_source_column() {
        let p = MomentumSample::from_ints([2, 0, 0, 0]);
        let sys = assemble(Family::DiracGamma, &p, &rat_int(2)).unwrap();
        let field = basis_column(0);
        let source = sys.total.mul(&field);
        assert!(sys.residual(&field, Some(&source)).is_zero());
        assert_eq!(sys.residual(&field, None), source);
    }
}
