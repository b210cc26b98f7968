//! Conservation laws and operator identities evaluated on exact
//! plane-wave solutions: bispinor currents and balances built from the
//! adjoint pairing u-dagger gamma^0, gamma-matrix contraction identities,
//! and the quadratic energy-momentum balances of the massless fields.
//!
//! A solution pair couples a conjugated amplitude at momentum p with a
//! direct amplitude at momentum q; a derivative on the product brings
//! down i(p - q)_mu.

use crate::kernel::rank_and_kernel;
use crate::matrix::Matrix;
use crate::minkowski::{levi_civita_lower, levi_civita3, metric_sign, MomentumSample, DIM};
use crate::report::{CheckBuilder, CheckRecord};
use crate::reps::{gamma, symtensor};
use crate::scalar::{rat_int, Rational, Scalar};
use crate::systems::{
    assemble, self_dual_third_rank, self_dual_two_form, transverse_traceless_rows, Family,
};

const SUITE: &str = "identities";

/// Adjoint row u-dagger gamma^0 of a column amplitude.
fn adjoint_row(u: &Matrix) -> Matrix {
    u.dagger().mul(&gamma::gamma(0))
}

/// Scalar value ubar * op * v of a bilinear insertion.
fn sandwich(u: &Matrix, op: &Matrix, v: &Matrix) -> Scalar {
    adjoint_row(u).mul(op).mul(v)[(0, 0)].clone()
}

fn slash(p: &MomentumSample) -> Matrix {
    let mut out = Matrix::zeros(4, 4);
    for mu in 0..DIM {
        out = out.add(&gamma::gamma(mu).scale(&p.p_lower(mu)));
    }
    out
}

fn hamiltonian(p: &MomentumSample, mass: &Rational) -> Matrix {
    let mut h = gamma::gamma(0).scale(&Scalar::from_rational(mass.clone()));
    for k in 1..=3 {
        h = h.add(&gamma::alpha(k).scale(&p.p_upper(k)));
    }
    h
}

/// On-shell bispinor amplitudes at two momenta of the same mass.
struct DiracPair {
    p: MomentumSample,
    q: MomentumSample,
    mass: Rational,
    us: Vec<Matrix>,
    vs: Vec<Matrix>,
}

fn dirac_pair(p: [i64; 4], q: [i64; 4], mass: i64) -> DiracPair {
    let p = MomentumSample::from_ints(p);
    let q = MomentumSample::from_ints(q);
    let mass = rat_int(mass);
    let us = assemble(Family::DiracGamma, &p, &mass)
        .expect("bispinor")
        .kernel()
        .kernel_basis;
    let vs = assemble(Family::DiracGamma, &q, &mass)
        .expect("bispinor")
        .kernel()
        .kernel_basis;
    assert_eq!(us.len(), 2);
    assert_eq!(vs.len(), 2);
    DiracPair { p, q, mass, us, vs }
}

fn pairs() -> Vec<DiracPair> {
    vec![
        dirac_pair([3, 1, 2, 0], [3, -1, -2, 0], 2),
        dirac_pair([2, 0, 0, 0], [3, 1, 2, 0], 2),
    ]
}

fn p_minus_q_lower(pair: &DiracPair, nu: usize) -> Scalar {
    &pair.p.p_lower(nu) - &pair.q.p_lower(nu)
}

fn p_plus_q_upper(pair: &DiracPair, nu: usize) -> Scalar {
    &pair.p.p_upper(nu) + &pair.q.p_upper(nu)
}

/// All "identities" suite records.
pub fn identity_checks() -> Vec<CheckRecord> {
    let mut out = vec![
        current_conservation(),
        current_negative_control(),
        decorated_current_conservation(),
        energy_momentum_trace(),
        hamiltonian_form(),
        energy_balance(),
        alpha_hamiltonian_identity(),
        spin_current_balance(),
        spin_orbit_balance(),
        sigma_momentum_exchange(),
        symmetrized_energy_momentum(),
        triple_gamma_contraction(),
        gamma5_quadruple_product(),
    ];
    out.extend(quadratic_balances());
    out
}

/// d_mu (psibar gamma^mu psi) = 0: (p - q)_mu ubar gamma^mu v vanishes
/// for every on-shell pair of the same mass.
fn current_conservation() -> CheckRecord {
    let mut ok = true;
    for pair in pairs() {
        for u in &pair.us {
            for v in &pair.vs {
                let mut div = Scalar::zero();
                for mu in 0..DIM {
                    div = &div + &(&p_minus_q_lower(&pair, mu) * &sandwich(u, &gamma::gamma(mu), v));
                }
                ok &= div.is_zero();
            }
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.current_conservation",
        "the probability current of two equal-mass solutions is divergence free",
    )
    .verdict(ok)
}

/// Removing the equal-mass assumption breaks the conservation: the
/// divergence reduces to (m_p - m_q) ubar v, nonzero on some pair.
fn current_negative_control() -> CheckRecord {
    let p = MomentumSample::from_ints([3, 1, 2, 0]);
    let q = MomentumSample::from_ints([2, 1, 1, 1]);
    let us = assemble(Family::DiracGamma, &p, &rat_int(2))
        .expect("bispinor")
        .kernel()
        .kernel_basis;
    let vs = assemble(Family::DiracGamma, &q, &rat_int(1))
        .expect("bispinor")
        .kernel()
        .kernel_basis;
    let mut found_nonzero = false;
    for u in &us {
        for v in &vs {
            let mut div = Scalar::zero();
            for mu in 0..DIM {
                let coeff = &p.p_lower(mu) - &q.p_lower(mu);
                div = &div + &(&coeff * &sandwich(u, &gamma::gamma(mu), v));
            }
            found_nonzero |= !div.is_zero();
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.current_negative_control",
        "a mass mismatch between the two solutions leaves a nonzero divergence",
    )
    .witness("found_nonzero", found_nonzero.to_string())
    .verdict(found_nonzero)
}

/// The conservation survives extra derivative decorations on either
/// factor; each derivative only multiplies the current by a constant.
fn decorated_current_conservation() -> CheckRecord {
    let left = [0usize, 1, 0, 0];
    let right = [1usize, 0, 0, 0];
    let mut ok = true;
    for pair in pairs().into_iter().take(1) {
        let mut factor = Scalar::one();
        for mu in 0..DIM {
            for _ in 0..left[mu] {
                factor = &factor * &(&Scalar::i() * &pair.p.p_upper(mu));
            }
            for _ in 0..right[mu] {
                factor = &factor * &(&(-Scalar::i()) * &pair.q.p_upper(mu));
            }
        }
        for u in &pair.us {
            for v in &pair.vs {
                let mut div = Scalar::zero();
                for mu in 0..DIM {
                    div = &div + &(&p_minus_q_lower(&pair, mu) * &sandwich(u, &gamma::gamma(mu), v));
                }
                ok &= (&factor * &div).is_zero();
            }
        }
        ok &= !factor.is_zero();
    }
    CheckBuilder::new(
        SUITE,
        "dirac.decorated_current_conservation",
        "currents dressed with extra plane-wave derivatives stay divergence free",
    )
    .input("left_orders", "0,1,0,0")
    .input("right_orders", "1,0,0,0")
    .verdict(ok)
}

/// The trace of T^mu_nu = q_nu ubar gamma^mu v collapses to m ubar v.
fn energy_momentum_trace() -> CheckRecord {
    let mut ok = true;
    for pair in pairs() {
        let m = Scalar::from_rational(pair.mass.clone());
        for u in &pair.us {
            for v in &pair.vs {
                let mut trace = Scalar::zero();
                for mu in 0..DIM {
                    trace = &trace + &(&pair.q.p_lower(mu) * &sandwich(u, &gamma::gamma(mu), v));
                }
                let id = Matrix::identity(4);
                ok &= trace == &m * &sandwich(u, &id, v);
            }
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.energy_momentum_trace",
        "the energy-momentum trace equals the mass times the scalar density",
    )
    .verdict(ok)
}

/// (alpha·p + m beta) u = p^0 u on solutions, and the three densities
/// p^0 u-dagger u, u-dagger H u, and m ubar u + p^k u-dagger Sigma^{0k} u
/// agree.
fn hamiltonian_form() -> CheckRecord {
    let mut ok = true;
    for pair in pairs() {
        let h = hamiltonian(&pair.p, &pair.mass);
        let m = Scalar::from_rational(pair.mass.clone());
        for u in &pair.us {
            ok &= h.mul(u) == u.scale(&pair.p.p_upper(0));
            let direct = &pair.p.p_upper(0) * &u.dagger().mul(u)[(0, 0)];
            let through_h = u.dagger().mul(&h).mul(u)[(0, 0)].clone();
            let mut split = &m * &sandwich(u, &Matrix::identity(4), u);
            for k in 1..=3 {
                let density = u.dagger().mul(&gamma::sigma(0, k)).mul(u)[(0, 0)].clone();
                split = &split + &(&pair.p.p_upper(k) * &density);
            }
            ok &= direct == through_h && direct == split;
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.hamiltonian_form",
        "solutions are eigenvectors of the Hamiltonian at the energy \
         component, and the energy density splits into mass and spin parts",
    )
    .verdict(ok)
}

/// d_0 (psi† H psi) + div (psi† alpha H psi) = 0 over solution pairs.
fn energy_balance() -> CheckRecord {
    let mut ok = true;
    for pair in pairs() {
        let h = hamiltonian(&pair.q, &pair.mass);
        for u in &pair.us {
            for v in &pair.vs {
                let hv = h.mul(v);
                let mut balance = &p_minus_q_lower(&pair, 0) * &u.dagger().mul(&hv)[(0, 0)];
                for k in 1..=3 {
                    let flux = u.dagger().mul(&gamma::alpha(k)).mul(&hv)[(0, 0)].clone();
                    balance = &balance + &(&p_minus_q_lower(&pair, k) * &flux);
                }
                ok &= balance.is_zero();
            }
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.energy_balance",
        "the Hamiltonian density and its flux close a conservation law",
    )
    .verdict(ok)
}

/// alpha_k H = (curl Sigma)_k + p^k - m gamma^k as an exact matrix
/// identity, probed over a spanning set of momenta and masses.
fn alpha_hamiltonian_identity() -> CheckRecord {
    let probes: [([i64; 4], i64); 5] = [
        ([0, 1, 0, 0], 0),
        ([0, 0, 1, 0], 0),
        ([0, 0, 0, 1], 0),
        ([0, 0, 0, 0], 1),
        ([3, 1, 2, 0], 2),
    ];
    let mut ok = true;
    for (ints, mass) in probes {
        let p = MomentumSample::from_ints(ints);
        let h = hamiltonian(&p, &rat_int(mass));
        for k in 1..=3 {
            let lhs = gamma::alpha(k).mul(&h);
            let mut rhs = Matrix::identity(4).scale(&p.p_upper(k));
            for q in 1..=3 {
                for r in 1..=3 {
                    let e = levi_civita3(k, q, r);
                    if e != 0 {
                        let coeff = &Scalar::imag_ratio(e, 1) * &p.p_upper(q);
                        rhs = rhs.add(&gamma::spin_sigma(r).scale(&coeff));
                    }
                }
            }
            rhs = rhs.sub(&gamma::gamma(k).scale(&Scalar::from_int(mass)));
            ok &= lhs == rhs;
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.alpha_hamiltonian_identity",
        "the energy flux operator splits into a spin curl, a gradient, \
         and a mass term, identically in momentum and mass",
    )
    .verdict(ok)
}

/// -(p - q)_nu ubar Sigma^{mu nu} v + (p + q)^mu ubar v = 2m ubar gamma^mu v.
fn spin_current_balance() -> CheckRecord {
    let mut ok = true;
    for pair in pairs() {
        let two_m = Scalar::from_rational(&pair.mass * &rat_int(2));
        let id = Matrix::identity(4);
        for u in &pair.us {
            for v in &pair.vs {
                for mu in 0..DIM {
                    let mut lhs = &p_plus_q_upper(&pair, mu) * &sandwich(u, &id, v);
                    for nu in 0..DIM {
                        let term =
                            &p_minus_q_lower(&pair, nu) * &sandwich(u, &gamma::sigma(mu, nu), v);
                        lhs = &lhs - &term;
                    }
                    ok &= lhs == &two_m * &sandwich(u, &gamma::gamma(mu), v);
                }
            }
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.spin_current_balance",
        "the Gordon-type split of the vector current into convective and \
         spin parts holds exactly",
    )
    .verdict(ok)
}

/// -(p - q)_nu ubar Sigma^{mu nu} gamma^l v
///   = 2 q^l ubar gamma^mu v - (p + q)^mu ubar gamma^l v.
fn spin_orbit_balance() -> CheckRecord {
    let mut ok = true;
    for pair in pairs() {
        for u in &pair.us {
            for v in &pair.vs {
                for mu in 0..DIM {
                    for l in 0..DIM {
                        let gl = gamma::gamma(l);
                        let mut lhs = Scalar::zero();
                        for nu in 0..DIM {
                            let op = gamma::sigma(mu, nu).mul(&gl);
                            lhs = &lhs - &(&p_minus_q_lower(&pair, nu) * &sandwich(u, &op, v));
                        }
                        let first =
                            &pair.q.p_upper(l).scale_int(2) * &sandwich(u, &gamma::gamma(mu), v);
                        let second = &p_plus_q_upper(&pair, mu) * &sandwich(u, &gl, v);
                        ok &= lhs == &first - &second;
                    }
                }
            }
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.spin_orbit_balance",
        "the tensor-decorated current balance relating spin flux to the \
         vector current holds exactly",
    )
    .verdict(ok)
}

/// gamma^mu q^nu w = (m g^{mu nu} + m Sigma^{mu nu}
///   - q_l gamma^mu Sigma^{nu l}) w on solutions at q.
fn sigma_momentum_exchange() -> CheckRecord {
    let mut ok = true;
    for pair in pairs() {
        let m = Scalar::from_rational(pair.mass.clone());
        for v in &pair.vs {
            for mu in 0..DIM {
                for nu in 0..DIM {
                    let lhs = gamma::gamma(mu).scale(&pair.q.p_upper(nu)).mul(v);
                    let mut op = gamma::sigma(mu, nu).scale(&m);
                    if mu == nu {
                        op = op.add(
                            &Matrix::identity(4).scale(&m.scale_int(metric_sign(mu))),
                        );
                    }
                    for l in 0..DIM {
                        let mixed = gamma::gamma(mu).mul(&gamma::sigma(nu, l));
                        op = op.sub(&mixed.scale(&pair.q.p_lower(l)));
                    }
                    ok &= lhs == op.mul(v);
                }
            }
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.sigma_momentum_exchange",
        "momentum factors trade for sigma insertions on the solution space",
    )
    .verdict(ok)
}

/// (1/2)(p + q)^nu ubar gamma^mu v = m g^{mu nu} ubar v
///   - (1/2)[q_l ubar gamma^mu Sigma^{nu l} v - p_l ubar Sigma^{nu l} gamma^mu v].
fn symmetrized_energy_momentum() -> CheckRecord {
    let mut ok = true;
    let half = Scalar::from_ratio(1, 2);
    for pair in pairs() {
        let m = Scalar::from_rational(pair.mass.clone());
        let id = Matrix::identity(4);
        for u in &pair.us {
            for v in &pair.vs {
                for mu in 0..DIM {
                    for nu in 0..DIM {
                        let lhs = &(&half * &p_plus_q_upper(&pair, nu))
                            * &sandwich(u, &gamma::gamma(mu), v);
                        let mut rhs = Scalar::zero();
                        if mu == nu {
                            rhs = &m.scale_int(metric_sign(mu)) * &sandwich(u, &id, v);
                        }
                        let mut bracket = Scalar::zero();
                        for l in 0..DIM {
                            let right_op = gamma::gamma(mu).mul(&gamma::sigma(nu, l));
                            bracket =
                                &bracket + &(&pair.q.p_lower(l) * &sandwich(u, &right_op, v));
                            let left_op = gamma::sigma(nu, l).mul(&gamma::gamma(mu));
                            bracket =
                                &bracket - &(&pair.p.p_lower(l) * &sandwich(u, &left_op, v));
                        }
                        rhs = &rhs - &(&half * &bracket);
                        ok &= lhs == rhs;
                    }
                }
            }
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.symmetrized_energy_momentum",
        "the symmetrized momentum bilinear splits into a mass term and \
         paired sigma insertions",
    )
    .verdict(ok)
}

/// (1/2) e_{mu nu s t} d^nu (gamma^mu gamma^s gamma^t) equals
/// 3i gamma_5 gamma_nu d^nu identically, hence 3m gamma_5 on solutions,
/// with the lower-index chirality operator gamma_5 = -gamma^5.
fn triple_gamma_contraction() -> CheckRecord {
    let g5 = gamma::gamma5_lower();
    let probes: [[i64; 4]; 5] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [3, 1, 2, 0],
    ];
    let mut ok = true;
    for ints in probes {
        let p = MomentumSample::from_ints(ints);
        let mut lhs = Matrix::zeros(4, 4);
        for mu in 0..DIM {
            for nu in 0..DIM {
                for s in 0..DIM {
                    for t in 0..DIM {
                        let e = levi_civita_lower(mu, nu, s, t);
                        if e != 0 {
                            let coeff = &Scalar::imag_ratio(-e, 2) * &p.p_upper(nu);
                            let triple =
                                gamma::gamma(mu).mul(&gamma::gamma(s)).mul(&gamma::gamma(t));
                            lhs = lhs.add(&triple.scale(&coeff));
                        }
                    }
                }
            }
        }
        let rhs = g5.mul(&slash(&p)).scale(&Scalar::from_int(3));
        ok &= lhs == rhs;
    }
    for pair in pairs() {
        let reduction = g5
            .mul(&slash(&pair.q))
            .scale(&Scalar::from_int(3));
        let expected = g5.scale(&Scalar::from_rational(&pair.mass * &rat_int(3)));
        for v in &pair.vs {
            ok &= reduction.mul(v) == expected.mul(v);
        }
    }
    CheckBuilder::new(
        SUITE,
        "dirac.triple_gamma_contraction",
        "the fully contracted triple-gamma derivative reduces to the \
         chirality operator times the mass on solutions",
    )
    .witness("on_shell_value", "3m gamma_5")
    .verdict(ok)
}

/// gamma^5 = (i/24) e_{mu nu s t} gamma^mu gamma^nu gamma^s gamma^t,
/// while the odd-order contraction picks up the lower-index operator:
/// gamma_5 gamma_mu = (i/6) e_{mu nu s t} gamma^nu gamma^s gamma^t.
fn gamma5_quadruple_product() -> CheckRecord {
    let g5 = gamma::gamma5_upper();
    let mut quad = Matrix::zeros(4, 4);
    for mu in 0..DIM {
        for nu in 0..DIM {
            for s in 0..DIM {
                for t in 0..DIM {
                    let e = levi_civita_lower(mu, nu, s, t);
                    if e != 0 {
                        let prod = gamma::gamma(mu)
                            .mul(&gamma::gamma(nu))
                            .mul(&gamma::gamma(s))
                            .mul(&gamma::gamma(t));
                        quad = quad.add(&prod.scale(&Scalar::imag_ratio(e, 24)));
                    }
                }
            }
        }
    }
    let mut ok = quad == g5;
    for mu in 0..DIM {
        let mut triple = Matrix::zeros(4, 4);
        for nu in 0..DIM {
            for s in 0..DIM {
                for t in 0..DIM {
                    let e = levi_civita_lower(mu, nu, s, t);
                    if e != 0 {
                        let prod = gamma::gamma(nu).mul(&gamma::gamma(s)).mul(&gamma::gamma(t));
                        triple = triple.add(&prod.scale(&Scalar::imag_ratio(e, 6)));
                    }
                }
            }
        }
        let lhs = gamma::gamma5_lower()
            .mul(&gamma::gamma(mu))
            .scale(&Scalar::from_int(metric_sign(mu)));
        ok &= lhs == triple;
    }
    CheckBuilder::new(
        SUITE,
        "dirac.gamma5_quadruple_product",
        "the chirality operator and its gamma contraction equal their \
         fully antisymmetrized product representations",
    )
    .verdict(ok)
}

/// Quadratic energy-momentum balances of the massless tensor fields,
/// including a negative control with a non-solution amplitude.
fn quadratic_balances() -> Vec<CheckRecord> {
    let zero = rat_int(0);
    let p = MomentumSample::from_ints([1, 0, 0, 1]);
    let q = MomentumSample::from_ints([3, 2, 2, 1]);

    let potentials_p = assemble(Family::MaxwellTensor, &p, &zero)
        .expect("photon")
        .kernel()
        .kernel_basis;
    let potentials_q = assemble(Family::MaxwellTensor, &q, &zero)
        .expect("photon")
        .kernel()
        .kernel_basis;
    let mut maxwell_ok = true;
    for a1 in &potentials_p {
        let q1_bar = self_dual_two_form(&p, a1).conj();
        for a2 in &potentials_q {
            let q2 = self_dual_two_form(&q, a2);
            maxwell_ok &= second_rank_balance_vanishes(&p, &q, &q1_bar, &q2);
        }
    }
    let maxwell_record = CheckBuilder::new(
        SUITE,
        "maxwell_tensor.energy_momentum_balance",
        "the bilinear energy-momentum combination of two photon solutions \
         is divergence free",
    )
    .input("momenta", format!("{} and {}", p.label(), q.label()))
    .verdict(maxwell_ok);

    let spin_two_p = transverse_traceless_solutions(&p);
    let spin_two_q = transverse_traceless_solutions(&q);
    let mut spin_two_ok = spin_two_p.len() == 5 && spin_two_q.len() == 5;
    for a1 in &spin_two_p {
        let t1 = symtensor::sym_unvec(a1);
        let q1_bar: Vec<Matrix> = self_dual_third_rank(&p, &t1)
            .iter()
            .map(|m| m.conj())
            .collect();
        for a2 in &spin_two_q {
            let t2 = symtensor::sym_unvec(a2);
            let q2 = self_dual_third_rank(&q, &t2);
            spin_two_ok &= third_rank_balance_vanishes(&p, &q, &q1_bar, &q2);
        }
    }
    let spin_two_record = CheckBuilder::new(
        SUITE,
        "fierz_pauli_full.energy_momentum_balance",
        "the bilinear energy-momentum combination of two transverse \
         traceless massless spin-two solutions is divergence free",
    )
    .input("momenta", format!("{} and {}", p.label(), q.label()))
    .input("solution_space", "transverse traceless, dimension 5")
    .verdict(spin_two_ok);

    let bad = sym_basis_non_solution(&q);
    let mut control_found = false;
    for a1 in &spin_two_p {
        let t1 = symtensor::sym_unvec(a1);
        let q1_bar: Vec<Matrix> = self_dual_third_rank(&p, &t1)
            .iter()
            .map(|m| m.conj())
            .collect();
        let q2 = self_dual_third_rank(&q, &bad);
        control_found |= !third_rank_balance_vanishes(&p, &q, &q1_bar, &q2);
    }
    let control_record = CheckBuilder::new(
        SUITE,
        "fierz_pauli_full.balance_negative_control",
        "replacing one solution by a non-solution amplitude breaks the \
         energy-momentum balance",
    )
    .witness("found_nonzero", control_found.to_string())
    .verdict(control_found);

    let carrier = trace_carrying_solution(&q);
    let mut constraint_needed = false;
    for a1 in &spin_two_p {
        let t1 = symtensor::sym_unvec(a1);
        let q1_bar: Vec<Matrix> = self_dual_third_rank(&p, &t1)
            .iter()
            .map(|m| m.conj())
            .collect();
        let q2 = self_dual_third_rank(&q, &carrier);
        constraint_needed |= !third_rank_balance_vanishes(&p, &q, &q1_bar, &q2);
    }
    let constraint_record = CheckBuilder::new(
        SUITE,
        "fierz_pauli_full.balance_requires_constraints",
        "a trace-carrying solution of the unconstrained wave equation \
         already breaks the balance, so the transverse traceless \
         conditions are essential",
    )
    .witness("found_nonzero", constraint_needed.to_string())
    .verdict(constraint_needed);

    vec![
        maxwell_record,
        spin_two_record,
        control_record,
        constraint_record,
    ]
}

/// Solutions of the massless spin-two system restricted to the
/// transverse traceless subspace.
fn transverse_traceless_solutions(p: &MomentumSample) -> Vec<Matrix> {
    let sys = assemble(Family::FierzPauliFull, p, &rat_int(0)).expect("massless spin two");
    let stacked = Matrix::vstack(&[&sys.total, &transverse_traceless_rows(p)]);
    rank_and_kernel(&stacked).kernel_basis
}

/// A kernel vector of the unconstrained massless spin-two system whose
/// trace is nonzero.
fn trace_carrying_solution(q: &MomentumSample) -> Matrix {
    let sys = assemble(Family::FierzPauliFull, q, &rat_int(0)).expect("massless spin two");
    for coords in sys.kernel().kernel_basis {
        let t = symtensor::sym_unvec(&coords);
        let mut trace = Scalar::zero();
        for a in 0..DIM {
            trace = &trace + &t[(a, a)].scale_int(metric_sign(a));
        }
        if !trace.is_zero() {
            return t;
        }
    }
    unreachable!("the unconstrained kernel contains trace-carrying vectors");
}

/// A symmetric amplitude which is not annihilated by the massless
/// spin-two operator at the given momentum.
fn sym_basis_non_solution(q: &MomentumSample) -> Matrix {
    let sys = assemble(Family::FierzPauliFull, q, &rat_int(0)).expect("massless spin two");
    for j in 0..10 {
        let mut coords = Matrix::zeros(10, 1);
        coords[(j, 0)] = Scalar::one();
        if !sys.residual(&coords, None).is_zero() {
            return symtensor::sym_unvec(&coords);
        }
    }
    unreachable!("the massless spin-two operator is nonzero");
}

fn second_rank_balance_vanishes(
    p: &MomentumSample,
    q: &MomentumSample,
    q1_bar: &Matrix,
    q2: &Matrix,
) -> bool {
    let lower = |m: &Matrix, a: usize, b: usize| -> Scalar {
        m[(a, b)].scale_int(metric_sign(a) * metric_sign(b))
    };
    (0..DIM).all(|mu| {
        let mut div = Scalar::zero();
        for nu in 0..DIM {
            let mut b = Scalar::zero();
            for l in 0..DIM {
                b = &b + &(&lower(q1_bar, mu, l) * &q2[(l, nu)]);
                b = &b + &(&lower(q2, mu, l) * &q1_bar[(l, nu)]);
            }
            let coeff = &p.p_lower(nu) - &q.p_lower(nu);
            div = &div + &(&coeff * &b);
        }
        div.is_zero()
    })
}

fn third_rank_balance_vanishes(
    p: &MomentumSample,
    q: &MomentumSample,
    q1_bar: &[Matrix],
    q2: &[Matrix],
) -> bool {
    let lower = |m: &[Matrix], a: usize, b: usize, c: usize| -> Scalar {
        m[a][(b, c)].scale_int(metric_sign(a) * metric_sign(b) * metric_sign(c))
    };
    (0..DIM).all(|mu| {
        let mut div = Scalar::zero();
        for nu in 0..DIM {
            let mut b = Scalar::zero();
            for l in 0..DIM {
                for s in 0..DIM {
                    b = &b + &(&lower(q1_bar, mu, l, s) * &q2[l][(nu, s)]);
                    b = &b + &(&lower(q2, mu, l, s) * &q1_bar[l][(nu, s)]);
                }
            }
            let coeff = &p.p_lower(nu) - &q.p_lower(nu);
            div = &div + &(&coeff * &b);
        }
        div.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_suite_passes() {
        let records = identity_checks();
        assert!(!records.is_empty());
        for r in &records {
            assert!(r.passed(), "{} failed", r.check_id);
        }
    }

    #[test]
    fn adjoint_pairing_is_conjugate_linear() {
        let pair = &pairs()[0];
        let u = &pair.us[0];
        let v = &pair.vs[0];
        let id = Matrix::identity(4);
        let scaled = u.scale(&Scalar::i());
        assert_eq!(
            sandwich(&scaled, &id, v),
            &(-Scalar::i()) * &sandwich(u, &id, v)
        );
    }

    #[test]
    fn adjoint_row_solves_the_row_system() {
        for pair in pairs() {
            for u in &pair.us {
                let row = adjoint_row(u);
                let residual = row.mul(&slash(&pair.p)).sub(
                    &row.scale(&Scalar::from_rational(pair.mass.clone())),
                );
                assert!(residual.is_zero());
            }
        }
    }
}
