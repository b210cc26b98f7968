//! Finite-dimensional representations acting on the wave-equation field
//! spaces: generator tables, algebraic structure checks, rational group
//! elements and their covariance laws.
//!
//! Every representation exposes the same normalized generator table
//! M^{ab}: antisymmetric in (a,b), closing under the bracket
//! [M^{ab}, M^{st}] = g^{bs}M^{at} - g^{bt}M^{as} + g^{at}M^{bs} - g^{as}M^{bt},
//! and covering the fundamental transformation exp(-θ m^{ab}) through
//! S = exp(-θ M^{ab}). The spin factor used by the Pauli-Lubanski
//! construction is S^{ab} = -i M^{ab}.

pub mod conjugation;
pub mod gamma;
pub mod pauli;
pub mod so3c;
pub mod symtensor;
pub mod vector4;
pub mod weyl;

use crate::matrix::Matrix;
use crate::minkowski::{
    cyclic_successors, double_boost, double_rotation, levi_civita_lower, levi_civita_upper,
    metric_sign, FixtureError, LorentzMatrix, MomentumSample, RotationPlane, DIM,
};
use crate::report::{CheckBuilder, CheckRecord};
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepKind {
    DiracBispinor,
    WeylLeft,
    Vector,
    So3cVector,
    SlashConjugation,
    Spinor2Conjugation,
    SymTensor,
}

impl RepKind {
    pub const ALL: [RepKind; 7] = [
        RepKind::DiracBispinor,
        RepKind::WeylLeft,
        RepKind::Vector,
        RepKind::So3cVector,
        RepKind::SlashConjugation,
        RepKind::Spinor2Conjugation,
        RepKind::SymTensor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RepKind::DiracBispinor => "dirac_bispinor",
            RepKind::WeylLeft => "weyl_left",
            RepKind::Vector => "vector",
            RepKind::So3cVector => "so3c_vector",
            RepKind::SlashConjugation => "slash_conjugation",
            RepKind::Spinor2Conjugation => "spinor2_conjugation",
            RepKind::SymTensor => "sym_tensor",
        }
    }

    /// Short prefix used in check identifiers.
    pub fn short(self) -> &'static str {
        match self {
            RepKind::DiracBispinor => "dirac",
            RepKind::WeylLeft => "weyl",
            RepKind::Vector => "vector",
            RepKind::So3cVector => "so3c",
            RepKind::SlashConjugation => "slash",
            RepKind::Spinor2Conjugation => "spinor2",
            RepKind::SymTensor => "symtensor",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            RepKind::DiracBispinor => 4,
            RepKind::WeylLeft => 2,
            RepKind::Vector => 4,
            RepKind::So3cVector => 3,
            RepKind::SlashConjugation => 16,
            RepKind::Spinor2Conjugation => 4,
            RepKind::SymTensor => 10,
        }
    }
}

/// A representation with its sixteen-entry generator table.
#[derive(Debug, Clone)]
pub struct Representation {
    kind: RepKind,
    gens: Vec<Matrix>,
}

impl Representation {
    pub fn new(kind: RepKind) -> Self {
        let half = Scalar::from_ratio(1, 2);
        let neg_half = Scalar::from_ratio(-1, 2);
        let mut gens = Vec::with_capacity(16);
        for a in 0..DIM {
            for b in 0..DIM {
                let g = match kind {
                    RepKind::DiracBispinor => gamma::sigma(a, b).scale(&half),
                    RepKind::WeylLeft => weyl::sigma_upper(a, b).scale(&neg_half),
                    RepKind::Vector => vector4::fundamental_generator(a, b),
                    RepKind::So3cVector => so3c::sigma(a, b),
                    RepKind::SlashConjugation => conjugation::slash_generator(a, b),
                    RepKind::Spinor2Conjugation => conjugation::spinor2_generator(a, b),
                    RepKind::SymTensor => symtensor::generator(a, b),
                };
                gens.push(g);
            }
        }
        Self { kind, gens }
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    /// Generator M^{ab} with both indices upper.
    pub fn generator(&self, a: usize, b: usize) -> &Matrix {
        assert!(a < DIM && b < DIM);
        &self.gens[a * DIM + b]
    }

    /// Generator with both indices lowered by the metric.
    pub fn generator_lower(&self, a: usize, b: usize) -> Matrix {
        self.generator(a, b)
            .scale(&Scalar::from_int(metric_sign(a) * metric_sign(b)))
    }

    /// Spin factor S^{ab} = -i M^{ab} entering the Pauli-Lubanski vector.
    pub fn spin(&self, a: usize, b: usize) -> Matrix {
        self.generator(a, b).scale(&-Scalar::i())
    }
}

fn gs(k: usize) -> Scalar {
    Scalar::from_int(metric_sign(k))
}

/// Right-hand side of the closure bracket for a normalized table.
fn algebra_rhs(rep: &Representation, a: usize, b: usize, s: usize, t: usize) -> Matrix {
    let mut out = Matrix::zeros(rep.dim(), rep.dim());
    if b == s {
        out = out.add(&rep.generator(a, t).scale(&gs(b)));
    }
    if b == t {
        out = out.sub(&rep.generator(a, s).scale(&gs(b)));
    }
    if a == t {
        out = out.add(&rep.generator(b, s).scale(&gs(a)));
    }
    if a == s {
        out = out.sub(&rep.generator(b, t).scale(&gs(a)));
    }
    out
}

fn all_pairs_hold(mut check: impl FnMut(usize, usize, usize, usize) -> bool) -> bool {
    for a in 0..DIM {
        for b in 0..DIM {
            for s in 0..DIM {
                for t in 0..DIM {
                    if !check(a, b, s, t) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

const SUITE: &str = "structure";

/// Algebraic identity checks for one representation.
pub fn structure_check(kind: RepKind) -> Vec<CheckRecord> {
    let rep = Representation::new(kind);
    let short = kind.short();
    let mut out = Vec::new();

    let anti = (0..DIM).all(|a| {
        (0..DIM).all(|b| rep.generator(a, b) == &rep.generator(b, a).neg())
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            &format!("{short}.generator_antisymmetry"),
            "generator table antisymmetric in its index pair",
        )
        .input("representation", kind.name())
        .verdict(anti),
    );

    let closure = all_pairs_hold(|a, b, s, t| {
        rep.generator(a, b).commutator(rep.generator(s, t)) == algebra_rhs(&rep, a, b, s, t)
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            &format!("{short}.lorentz_algebra_closure"),
            "bracket of normalized generators closes on the metric pattern",
        )
        .input("representation", kind.name())
        .verdict(closure),
    );

    match kind {
        RepKind::DiracBispinor => dirac_structure(&mut out),
        RepKind::WeylLeft => weyl_structure(&rep, &mut out),
        RepKind::Vector => vector_structure(&rep, &mut out),
        RepKind::So3cVector => so3c_structure(&mut out),
        RepKind::SlashConjugation => slash_structure(&rep, &mut out),
        RepKind::Spinor2Conjugation => spinor2_structure(&rep, &mut out),
        RepKind::SymTensor => symtensor_structure(&rep, &mut out),
    }
    out
}

fn dirac_structure(out: &mut Vec<CheckRecord>) {
    let id4 = Matrix::identity(4);

    let clifford = (0..DIM).all(|mu| {
        (0..DIM).all(|nu| {
            let expect = if mu == nu {
                id4.scale(&Scalar::from_int(2 * metric_sign(mu)))
            } else {
                Matrix::zeros(4, 4)
            };
            gamma::gamma(mu).anticommutator(&gamma::gamma(nu)) == expect
        })
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            "dirac.clifford_anticommutator",
            "gamma matrices anticommute to twice the metric, all 16 pairs",
        )
        .verdict(clifford),
    );

    let g5 = gamma::gamma5_upper();
    let prod = gamma::gamma(0)
        .mul(&gamma::gamma(1))
        .mul(&gamma::gamma(2))
        .mul(&gamma::gamma(3))
        .scale(&Scalar::i());
    let g5_ok = prod == g5
        && gamma::gamma5_lower() == g5.neg()
        && (0..DIM).all(|mu| g5.anticommutator(&gamma::gamma(mu)).is_zero())
        && g5.mul(&g5) == id4;
    out.push(
        CheckBuilder::new(
            SUITE,
            "dirac.gamma5_consistency",
            "i·g0 g1 g2 g3 equals the upper-index chirality matrix; the \
             lower-index variant is its negative and anticommutes with every gamma",
        )
        .witness("i_gamma_product", "+gamma5_upper")
        .verdict(g5_ok),
    );

    let sg = all_pairs_hold(|a, b, mu, nu| {
        if nu != 0 {
            return true; // third/fourth loop indices unused here
        }
        let lhs = gamma::sigma(a, b).commutator(&gamma::gamma(mu));
        let mut rhs = Matrix::zeros(4, 4);
        if b == mu {
            rhs = rhs.add(&gamma::gamma(a).scale(&gs(b).scale_int(2)));
        }
        if a == mu {
            rhs = rhs.sub(&gamma::gamma(b).scale(&gs(a).scale_int(2)));
        }
        lhs == rhs
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            "dirac.sigma_gamma_commutator",
            "[Sigma^{ab}, gamma^mu] = 2(g^{b mu} gamma^a - g^{a mu} gamma^b)",
        )
        .verdict(sg),
    );

    let ss = all_pairs_hold(|a, b, s, t| {
        let lhs = gamma::sigma(a, b).commutator(&gamma::sigma(s, t));
        let mut rhs = Matrix::zeros(4, 4);
        if b == s {
            rhs = rhs.add(&gamma::sigma(a, t).scale(&gs(b).scale_int(2)));
        }
        if b == t {
            rhs = rhs.sub(&gamma::sigma(a, s).scale(&gs(b).scale_int(2)));
        }
        if a == t {
            rhs = rhs.add(&gamma::sigma(b, s).scale(&gs(a).scale_int(2)));
        }
        if a == s {
            rhs = rhs.sub(&gamma::sigma(b, t).scale(&gs(a).scale_int(2)));
        }
        lhs == rhs
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            "dirac.sigma_sigma_commutator",
            "sigma commutators close with structure factor two, all pairs",
        )
        .verdict(ss),
    );

    let g5l = gamma::gamma5_lower();
    let dual = (0..DIM).all(|mu| {
        (0..DIM).all(|nu| {
            let mut lhs = Matrix::zeros(4, 4);
            for s in 0..DIM {
                for t in 0..DIM {
                    let e = levi_civita_lower(mu, nu, s, t);
                    if e != 0 {
                        lhs = lhs.add(&gamma::sigma(s, t).scale(&Scalar::imag_ratio(e, 1)));
                    }
                }
            }
            let lowered = gamma::sigma(mu, nu).scale(&Scalar::from_int(metric_sign(mu) * metric_sign(nu)));
            lhs == g5l.mul(&lowered).scale(&Scalar::from_int(2))
        })
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            "dirac.dual_generator_identity",
            "i e_{mu nu s t} Sigma^{s t} = 2 gamma_5 Sigma_{mu nu}, entrywise",
        )
        .verdict(dual),
    );

    let mut i1 = Matrix::zeros(4, 4);
    for mu in 0..DIM {
        for nu in 0..DIM {
            let lowered = gamma::sigma(mu, nu).scale(&Scalar::from_int(metric_sign(mu) * metric_sign(nu)));
            i1 = i1.add(&lowered.mul(&gamma::sigma(mu, nu)));
        }
    }
    let i1_ok = i1 == id4.scale(&Scalar::from_int(-12));
    out.push(
        CheckBuilder::new(
            SUITE,
            "dirac.invariant_quadratic",
            "Sigma_{mu nu} Sigma^{mu nu} = -12 I",
        )
        .witness("value", "-12")
        .verdict(i1_ok),
    );

    let mut i2 = Matrix::zeros(4, 4);
    for mu in 0..DIM {
        for nu in 0..DIM {
            for s in 0..DIM {
                for t in 0..DIM {
                    let e = levi_civita_lower(mu, nu, s, t);
                    if e != 0 {
                        let term = gamma::sigma(mu, nu).mul(&gamma::sigma(s, t));
                        i2 = i2.add(&term.scale(&Scalar::from_int(e)));
                    }
                }
            }
        }
    }
    let i2_ok = i2 == g5l.scale(&Scalar::imag_ratio(24, 1));
    out.push(
        CheckBuilder::new(
            SUITE,
            "dirac.invariant_pseudoscalar",
            "e_{mu nu s t} Sigma^{mu nu} Sigma^{s t} = 24 i gamma_5",
        )
        .witness("coefficient", "24i")
        .verdict(i2_ok),
    );

    // Rotation/boost split M_k = (i/2)Sigma_k, N_k = (1/2)alpha_k: a
    // second named generator table kept alongside the main (1/2)Sigma^{ab}.
    let mut m_sq = Matrix::zeros(4, 4);
    let mut n_sq = Matrix::zeros(4, 4);
    let mut mn = Matrix::zeros(4, 4);
    let mut split_ok = true;
    for k in 1..=3 {
        let mk = gamma::rotation_generator(k);
        let nk = gamma::boost_generator(k);
        m_sq = m_sq.add(&mk.mul(&mk));
        n_sq = n_sq.add(&nk.mul(&nk));
        mn = mn.add(&mk.mul(&nk));
        // M_k ± iN_k = (i/2)(1 ∓ gamma_5) Sigma_k
        let plus = mk.add(&nk.scale(&Scalar::i()));
        let minus = mk.sub(&nk.scale(&Scalar::i()));
        let proj_minus = id4.sub(&g5l).scale(&Scalar::imag_ratio(1, 2));
        let proj_plus = id4.add(&g5l).scale(&Scalar::imag_ratio(1, 2));
        split_ok &= plus == proj_minus.mul(&gamma::spin_sigma(k));
        split_ok &= minus == proj_plus.mul(&gamma::spin_sigma(k));
    }
    split_ok &= m_sq == id4.scale(&Scalar::from_ratio(-3, 4));
    split_ok &= n_sq == id4.scale(&Scalar::from_ratio(3, 4));
    split_ok &= mn == gamma::gamma5_upper().scale(&Scalar::imag_ratio(3, 4));
    out.push(
        CheckBuilder::new(
            SUITE,
            "dirac.casimir_split",
            "rotation/boost three-vector split: N² = -M² = (3/4)I, \
             M·N = (3i/4) gamma^5, and M_k ± iN_k projects chirally",
        )
        .input("table", "M_k=(i/2)Sigma_k, N_k=(1/2)alpha_k")
        .verdict(split_ok),
    );
}

fn weyl_structure(rep: &Representation, out: &mut Vec<CheckRecord>) {
    let table_ok = (1..=3usize).all(|q| {
        weyl::sigma_upper(0, q) == pauli::sigma(q).neg()
            && weyl::sigma_upper(q, 0) == pauli::sigma(q)
            && weyl::sigma_lower(0, q) == pauli::sigma(q)
    }) && weyl::sigma_upper(1, 2) == pauli::sigma(3).scale(&Scalar::i())
        && (0..DIM).all(|a| {
            (0..DIM).all(|b| {
                weyl::sigma_lower(a, b)
                    == weyl::sigma_upper(a, b).scale(&Scalar::from_int(metric_sign(a) * metric_sign(b)))
            })
        });
    out.push(
        CheckBuilder::new(
            SUITE,
            "weyl.generator_table",
            "two-spinor generator table and its lowered form",
        )
        .verdict(table_ok),
    );

    let dual = (0..DIM).all(|mu| {
        (0..DIM).all(|nu| {
            let mut lhs = Matrix::zeros(2, 2);
            for s in 0..DIM {
                for t in 0..DIM {
                    let e = levi_civita_lower(mu, nu, s, t);
                    if e != 0 {
                        lhs = lhs.add(&weyl::sigma_upper(s, t).scale(&Scalar::from_int(e)));
                    }
                }
            }
            lhs == weyl::sigma_lower(mu, nu).scale(&Scalar::imag_ratio(2, 1))
        })
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            "weyl.self_duality",
            "e_{mu nu s t} Sigma^{s t} = 2i Sigma_{mu nu} on two-spinors, entrywise",
        )
        .verdict(dual),
    );

    let half = all_pairs_hold(|a, b, c, d| {
        let lhs = weyl::sigma_upper(a, b)
            .commutator(&weyl::sigma_upper(c, d))
            .scale(&Scalar::from_ratio(1, 2));
        let mut rhs = Matrix::zeros(2, 2);
        if a == c {
            rhs = rhs.add(&weyl::sigma_upper(b, d).scale(&gs(a)));
        }
        if a == d {
            rhs = rhs.sub(&weyl::sigma_upper(b, c).scale(&gs(a)));
        }
        if b == d {
            rhs = rhs.add(&weyl::sigma_upper(a, c).scale(&gs(b)));
        }
        if b == c {
            rhs = rhs.sub(&weyl::sigma_upper(a, d).scale(&gs(b)));
        }
        lhs == rhs
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            "weyl.half_commutator",
            "(1/2)[Sigma^{ab}, Sigma^{cd}] closes on the metric pattern \
             with reversed orientation relative to the bispinor table",
        )
        .verdict(half),
    );
    let _ = rep;
}

fn vector_structure(rep: &Representation, out: &mut Vec<CheckRecord>) {
    let g = crate::minkowski::metric();
    let antisym_bilinear = (0..DIM).all(|a| {
        (0..DIM).all(|b| {
            let m = rep.generator(a, b);
            m.transpose().mul(&g).add(&g.mul(m)).is_zero()
        })
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            "vector.metric_compatibility",
            "fundamental generators are antisymmetric with respect to the metric",
        )
        .verdict(antisym_bilinear),
    );
}

fn so3c_structure(out: &mut Vec<CheckRecord>) {
    let mut alg = true;
    for p in 1..=3usize {
        for q in 1..=3usize {
            let mut expect = Matrix::zeros(3, 3);
            for r in 1..=3 {
                let e = crate::minkowski::levi_civita3(p, q, r);
                if e != 0 {
                    expect = expect.add(&so3c::s_matrix(r).scale(&Scalar::from_int(e)));
                }
            }
            alg &= so3c::s_matrix(p).commutator(&so3c::s_matrix(q)) == expect;
        }
    }
    for k in 1..=3 {
        let s = so3c::s_matrix(k);
        alg &= s.mul(&s).mul(&s) == s.neg();
    }
    let sum: Matrix = (1..=3)
        .map(|k| so3c::s_matrix(k).mul(&so3c::s_matrix(k)))
        .fold(Matrix::zeros(3, 3), |acc, m| acc.add(&m));
    let sum_ok = sum == Matrix::identity(3).scale(&Scalar::from_int(-2));
    out.push(
        CheckBuilder::new(
            SUITE,
            "so3c.rotation_generator_algebra",
            "[s_p, s_q] = e_{pqr} s_r, s_k^3 = -s_k, and s_1²+s_2²+s_3² = -2I",
        )
        .witness("square_sum", "-2")
        .verdict(alg && sum_ok),
    );

    let dual = (0..DIM).all(|mu| {
        (0..DIM).all(|nu| {
            let mut rhs = Matrix::zeros(3, 3);
            for s in 0..DIM {
                for t in 0..DIM {
                    let e = levi_civita_upper(mu, nu, s, t);
                    if e != 0 {
                        let lowered = so3c::sigma(s, t)
                            .scale(&Scalar::from_int(metric_sign(s) * metric_sign(t)));
                        rhs = rhs.add(&lowered.scale(&Scalar::from_int(e)));
                    }
                }
            }
            so3c::sigma(mu, nu).scale(&Scalar::imag_ratio(2, 1)) == rhs
        })
    });
    out.push(
        CheckBuilder::new(
            SUITE,
            "so3c.self_duality",
            "2i Sigma^{mu nu} = e^{mu nu s t} Sigma_{s t} on complex three-vectors",
        )
        .verdict(dual),
    );

    let mut j_ok = true;
    for a in 0..DIM {
        for b in 0..DIM {
            let m = vector4::fundamental_generator(a, b);
            let st = so3c::sigma(a, b).transpose();
            for p in 1..=3usize {
                let lhs = m.mul(&so3c::j_matrix(p)).add(&so3c::j_matrix(p).mul(&m.transpose()));
                let mut rhs = Matrix::zeros(4, 4);
                for q in 1..=3usize {
                    let coeff = st[(p - 1, q - 1)].clone();
                    if !coeff.is_zero() {
                        rhs = rhs.add(&so3c::j_matrix(q).scale(&coeff));
                    }
                }
                j_ok &= lhs == rhs;
            }
        }
    }
    out.push(
        CheckBuilder::new(
            SUITE,
            "so3c.j_infinitesimal_transform",
            "m^{ab} J_p + J_p (m^{ab})ᵀ = (Sigma^{ab})ᵀ_{pq} J_q",
        )
        .verdict(j_ok),
    );
}

fn slash_structure(rep: &Representation, out: &mut Vec<CheckRecord>) {
    let mut ok = true;
    for a in 0..DIM {
        for b in 0..DIM {
            for l in 0..DIM {
                let lhs = rep.generator(a, b).mul(&gamma::gamma(l).vec_col_major());
                let mut expect = Matrix::zeros(4, 4);
                if b == l {
                    expect = expect.add(&gamma::gamma(a).scale(&gs(b)));
                }
                if a == l {
                    expect = expect.sub(&gamma::gamma(b).scale(&gs(a)));
                }
                ok &= lhs == expect.vec_col_major();
            }
        }
    }
    out.push(
        CheckBuilder::new(
            SUITE,
            "slash.action_on_gamma",
            "the conjugation action rotates slash vectors like four-vectors",
        )
        .verdict(ok),
    );
}

fn spinor2_structure(rep: &Representation, out: &mut Vec<CheckRecord>) {
    let mut ok = true;
    for a in 0..DIM {
        for b in 0..DIM {
            let table = so3c::sigma(a, b);
            for p in 1..=3usize {
                let lhs = rep.generator(a, b).mul(&pauli::sigma(p).vec_col_major());
                let mut expect = Matrix::zeros(2, 2);
                for q in 1..=3usize {
                    let coeff = table[(q - 1, p - 1)].clone();
                    if !coeff.is_zero() {
                        expect = expect.add(&pauli::sigma(q).scale(&coeff));
                    }
                }
                ok &= lhs == expect.vec_col_major();
            }
            ok &= rep.generator(a, b).mul(&Matrix::identity(2).vec_col_major()).is_zero();
        }
    }
    out.push(
        CheckBuilder::new(
            SUITE,
            "spinor2.action_table",
            "conjugation on sigma·F matches the complex three-vector table; \
             the identity component is inert",
        )
        .verdict(ok),
    );
}

fn symtensor_structure(rep: &Representation, out: &mut Vec<CheckRecord>) {
    let proj = symtensor::project().mul(&symtensor::embed()) == Matrix::identity(10);
    out.push(
        CheckBuilder::new(
            SUITE,
            "symtensor.projector_identity",
            "packing then unpacking ten symmetric coordinates is the identity",
        )
        .verdict(proj),
    );

    let u = Matrix::from_i64_rows(&[&[3], &[1], &[2], &[0]]);
    let t = u.mul(&u.transpose());
    let mut act = true;
    for a in 0..DIM {
        for b in 0..DIM {
            let m = vector4::fundamental_generator(a, b);
            let direct = m.mul(&t).add(&t.mul(&m.transpose()));
            let packed = rep.generator(a, b).mul(&symtensor::sym_vec(&t));
            act &= symtensor::sym_unvec(&packed) == direct;
        }
    }
    out.push(
        CheckBuilder::new(
            SUITE,
            "symtensor.generator_restriction",
            "ten-coordinate generators agree with the unrestricted tensor action",
        )
        .verdict(act),
    );
}

/// A one-parameter rational transformation: boost along an axis or
/// rotation in a spatial plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    Boost { axis: usize },
    Rotation { plane: RotationPlane },
}

impl ElementKind {
    pub fn label(&self) -> String {
        match self {
            ElementKind::Boost { axis } => format!("boost{axis}"),
            ElementKind::Rotation { plane } => format!("rot{}", plane.label()),
        }
    }
}

/// A representation matrix covering a fundamental transformation, with
/// its exact inverse.
#[derive(Debug, Clone)]
pub struct GroupElement {
    pub rep: RepKind,
    pub element_kind: ElementKind,
    pub half_pair: (Rational, Rational),
    pub matrix: Matrix,
    pub inverse: Matrix,
    pub fundamental: LorentzMatrix,
}

/// Builds the representation element for the half-angle pair `(c, s)`;
/// the fundamental matrix uses the doubled pair, so `S` covers `Λ`.
pub fn group_element(
    kind: RepKind,
    ek: ElementKind,
    c: &Rational,
    s: &Rational,
) -> Result<GroupElement, FixtureError> {
    let (full_c, full_s, fundamental) = match ek {
        ElementKind::Boost { axis } => {
            if c * c - s * s != Rational::from_integer(1.into()) || c < &Rational::from_integer(1.into()) {
                return Err(FixtureError::InvalidBoost);
            }
            let (fc, fs) = double_boost(c, s);
            let l = LorentzMatrix::boost(axis, &fc, &fs)?;
            (fc, fs, l)
        }
        ElementKind::Rotation { plane } => {
            if c * c + s * s != Rational::from_integer(1.into()) {
                return Err(FixtureError::InvalidRotation);
            }
            let (fc, fs) = double_rotation(c, s);
            let l = LorentzMatrix::rotation(plane, &fc, &fs)?;
            (fc, fs, l)
        }
    };
    let (matrix, inverse) = rep_element(kind, ek, c, s, &full_c, &full_s, &fundamental);
    Ok(GroupElement {
        rep: kind,
        element_kind: ek,
        half_pair: (c.clone(), s.clone()),
        matrix,
        inverse,
        fundamental,
    })
}

fn spinor_closed_form(base: &Matrix, generatorish: &Matrix, c: &Rational, s: &Rational, rotation: bool) -> Matrix {
    // Rotation: cos(θ/2)·I + i sin(θ/2)·X; boost: cosh(ϑ/2)·I - sinh(ϑ/2)·X.
    let cs = Scalar::from_rational(c.clone());
    let ss = if rotation {
        Scalar::new(Rational::from_integer(0.into()), s.clone())
    } else {
        Scalar::from_rational(-s.clone())
    };
    base.scale(&cs).add(&generatorish.scale(&ss))
}

fn rep_element(
    kind: RepKind,
    ek: ElementKind,
    c: &Rational,
    s: &Rational,
    full_c: &Rational,
    full_s: &Rational,
    fundamental: &LorentzMatrix,
) -> (Matrix, Matrix) {
    let neg_s = -s.clone();
    match kind {
        RepKind::DiracBispinor => {
            let (x, rot) = match ek {
                ElementKind::Boost { axis } => (gamma::alpha(axis), false),
                ElementKind::Rotation { plane } => (gamma::spin_sigma(plane.axis()), true),
            };
            let id = Matrix::identity(4);
            (
                spinor_closed_form(&id, &x, c, s, rot),
                spinor_closed_form(&id, &x, c, &neg_s, rot),
            )
        }
        RepKind::WeylLeft => {
            let (x, rot) = match ek {
                ElementKind::Boost { axis } => (pauli::sigma(axis), false),
                ElementKind::Rotation { plane } => (pauli::sigma(plane.axis()), true),
            };
            let id = Matrix::identity(2);
            (
                spinor_closed_form(&id, &x, c, s, rot),
                spinor_closed_form(&id, &x, c, &neg_s, rot),
            )
        }
        RepKind::Vector => (fundamental.matrix().clone(), fundamental.inverse().matrix().clone()),
        RepKind::So3cVector => {
            let build = |sv: &Rational| -> Matrix {
                // exp(-θ s_a) = I - sinθ·s_a + (1-cosθ)·s_a² for rotations;
                // exp(-iϑ s_a) = I - i sinhϑ·s_a + (1-coshϑ)·s_a² for boosts.
                let (axis, factor) = match ek {
                    ElementKind::Boost { axis } => (axis, Scalar::new(Rational::from_integer(0.into()), sv.clone())),
                    ElementKind::Rotation { plane } => (plane.axis(), Scalar::from_rational(sv.clone())),
                };
                let sa = so3c::s_matrix(axis);
                let one_minus_c = Rational::from_integer(1.into()) - full_c;
                Matrix::identity(3)
                    .sub(&sa.scale(&factor))
                    .add(&sa.mul(&sa).scale(&Scalar::from_rational(one_minus_c)))
            };
            (build(full_s), build(&-full_s.clone()))
        }
        RepKind::SlashConjugation => {
            let (sd, sd_inv) = rep_element(RepKind::DiracBispinor, ek, c, s, full_c, full_s, fundamental);
            (
                sd_inv.transpose().kron(&sd),
                sd.transpose().kron(&sd_inv),
            )
        }
        RepKind::Spinor2Conjugation => {
            let (sw, sw_inv) = rep_element(RepKind::WeylLeft, ek, c, s, full_c, full_s, fundamental);
            (
                sw_inv.transpose().kron(&sw),
                sw.transpose().kron(&sw_inv),
            )
        }
        RepKind::SymTensor => {
            let l = fundamental.matrix();
            let li = fundamental.inverse();
            let li = li.matrix();
            (
                symtensor::project().mul(&l.kron(l)).mul(&symtensor::embed()),
                symtensor::project().mul(&li.kron(li)).mul(&symtensor::embed()),
            )
        }
    }
}

const COV_SUITE: &str = "covariance";

/// Covariance checks for one representation and one group element.
pub fn covariance_check(
    kind: RepKind,
    ek: ElementKind,
    c: &Rational,
    s: &Rational,
) -> Result<Vec<CheckRecord>, FixtureError> {
    let rep = Representation::new(kind);
    let el = group_element(kind, ek, c, s)?;
    let short = kind.short();
    let label = ek.label();
    let mut out = Vec::new();
    let tag = |b: CheckBuilder| {
        b.input("representation", kind.name())
            .input("element", label.clone())
            .input("half_pair", format!("({c},{s})"))
    };

    let id = Matrix::identity(rep.dim());
    out.push(
        tag(CheckBuilder::new(
            COV_SUITE,
            &format!("{short}.element_inverse"),
            "closed-form inverse really inverts the element",
        ))
        .verdict(el.matrix.mul(&el.inverse) == id && el.inverse.mul(&el.matrix) == id),
    );

    // Squaring the element doubles the parameter.
    let doubled = match ek {
        ElementKind::Boost { .. } => double_boost(c, s),
        ElementKind::Rotation { .. } => double_rotation(c, s),
    };
    let squared_ok = match group_element(kind, ek, &doubled.0, &doubled.1) {
        Ok(el2) => el.matrix.mul(&el.matrix) == el2.matrix,
        Err(_) => false,
    };
    out.push(
        tag(CheckBuilder::new(
            COV_SUITE,
            &format!("{short}.double_angle"),
            "squaring the element reproduces the doubled-parameter element",
        ))
        .verdict(squared_ok),
    );

    let lam = el.fundamental.matrix();
    let gen_ok = (0..DIM).all(|mu| {
        (0..DIM).all(|nu| {
            let lhs = el.inverse.mul(rep.generator(mu, nu)).mul(&el.matrix);
            let mut rhs = Matrix::zeros(rep.dim(), rep.dim());
            for si in 0..DIM {
                for ti in 0..DIM {
                    let coeff = &lam[(mu, si)] * &lam[(nu, ti)];
                    if coeff.is_zero() {
                        continue;
                    }
                    rhs = rhs.add(&rep.generator(si, ti).scale(&coeff));
                }
            }
            lhs == rhs
        })
    });
    out.push(
        tag(CheckBuilder::new(
            COV_SUITE,
            &format!("{short}.generator_conjugation"),
            "S⁻¹ M^{mu nu} S = Λ^mu_s Λ^nu_t M^{s t}",
        ))
        .verdict(gen_ok),
    );

    match kind {
        RepKind::DiracBispinor => {
            let vec_ok = (0..DIM).all(|mu| {
                let lhs = el.inverse.mul(&gamma::gamma(mu)).mul(&el.matrix);
                let mut rhs = Matrix::zeros(4, 4);
                for nu in 0..DIM {
                    let coeff = lam[(mu, nu)].clone();
                    if !coeff.is_zero() {
                        rhs = rhs.add(&gamma::gamma(nu).scale(&coeff));
                    }
                }
                lhs == rhs
            });
            let g5 = gamma::gamma5_upper();
            let chirality_ok = el.inverse.mul(&g5).mul(&el.matrix) == g5;
            out.push(
                tag(CheckBuilder::new(
                    COV_SUITE,
                    "dirac.gamma_conjugation",
                    "S⁻¹ gamma^mu S = Λ^mu_nu gamma^nu and the chirality matrix is invariant",
                ))
                .verdict(vec_ok && chirality_ok),
            );
            if let ElementKind::Boost { axis } = ek {
                let (b, ok) = boost_split_check("dirac.boost_split", axis, &el, &gamma::spin_sigma, &gamma::alpha);
                out.push(tag(b).verdict(ok));
            }
        }
        RepKind::WeylLeft => {
            let sandwich_ok = (0..DIM).all(|mu| {
                let lhs = el.matrix.dagger().mul(&weyl::sigma_four(mu)).mul(&el.matrix);
                let mut rhs = Matrix::zeros(2, 2);
                for nu in 0..DIM {
                    let coeff = lam[(mu, nu)].clone();
                    if !coeff.is_zero() {
                        rhs = rhs.add(&weyl::sigma_four(nu).scale(&coeff));
                    }
                }
                lhs == rhs
            });
            out.push(
                tag(CheckBuilder::new(
                    COV_SUITE,
                    "weyl.sigma_sandwich",
                    "S† sigma^mu S = Λ^mu_nu sigma^nu",
                ))
                .verdict(sandwich_ok),
            );
            if let ElementKind::Boost { axis } = ek {
                let (b, ok) = boost_split_check("weyl.boost_split", axis, &el, &pauli::sigma, &pauli::sigma);
                out.push(tag(b).verdict(ok));
            }
        }
        RepKind::Vector => {
            let ok = el.matrix == *lam
                && el.fundamental.is_proper_orthochronous()
                && crate::minkowski::levi_civita_transform_residual(&el.fundamental).is_none();
            out.push(
                tag(CheckBuilder::new(
                    COV_SUITE,
                    "vector.fundamental_consistency",
                    "element equals the fundamental matrix, which is proper \
                     orthochronous and carries the antisymmetric-symbol identity",
                ))
                .verdict(ok),
            );
        }
        RepKind::So3cVector => {
            let a = &el.matrix;
            let ortho = a.transpose().mul(a) == Matrix::identity(3);
            let det1 = crate::kernel::det(a) == Scalar::one();
            out.push(
                tag(CheckBuilder::new(
                    COV_SUITE,
                    "so3c.complex_orthogonality",
                    "the three-vector element is complex orthogonal with unit determinant",
                ))
                .verdict(ortho && det1),
            );
            let mut j_ok = true;
            for p in 1..=3usize {
                let lhs = lam.mul(&so3c::j_matrix(p)).mul(&lam.transpose());
                let mut rhs = Matrix::zeros(4, 4);
                for q in 1..=3usize {
                    let coeff = a[(q - 1, p - 1)].clone();
                    if !coeff.is_zero() {
                        rhs = rhs.add(&so3c::j_matrix(q).scale(&coeff));
                    }
                }
                j_ok &= lhs == rhs;
            }
            out.push(
                tag(CheckBuilder::new(
                    COV_SUITE,
                    "so3c.j_conjugation",
                    "Λ J_p Λᵀ = a_{qp} J_q with the three-vector element a",
                ))
                .verdict(j_ok),
            );
        }
        RepKind::SlashConjugation => {
            let li = el.fundamental.inverse();
            let li = li.matrix();
            let ok = (0..DIM).all(|l| {
                let lhs = el.matrix.mul(&gamma::gamma(l).vec_col_major());
                let mut rhs = Matrix::zeros(16, 1);
                for nu in 0..DIM {
                    let coeff = li[(l, nu)].clone();
                    if !coeff.is_zero() {
                        rhs = rhs.add(&gamma::gamma(nu).vec_col_major().scale(&coeff));
                    }
                }
                lhs == rhs
            });
            out.push(
                tag(CheckBuilder::new(
                    COV_SUITE,
                    "slash.vector_consistency",
                    "conjugating a slash vector lowers to the inverse fundamental action \
                     on its coefficients",
                ))
                .verdict(ok),
            );
        }
        RepKind::Spinor2Conjugation => {
            let sw = group_element(RepKind::WeylLeft, ek, c, s)?;
            let a = group_element(RepKind::So3cVector, ek, c, s)?;
            let mut ok = true;
            for p in 1..=3usize {
                let lhs = sw.matrix.mul(&pauli::sigma(p)).mul(&sw.inverse);
                let mut rhs = Matrix::zeros(2, 2);
                for q in 1..=3usize {
                    let coeff = a.matrix[(q - 1, p - 1)].clone();
                    if !coeff.is_zero() {
                        rhs = rhs.add(&pauli::sigma(q).scale(&coeff));
                    }
                }
                ok &= lhs == rhs;
                // The vectorized element implements the same conjugation.
                ok &= el.matrix.mul(&pauli::sigma(p).vec_col_major()) == lhs.vec_col_major();
            }
            ok &= el.matrix.mul(&Matrix::identity(2).vec_col_major())
                == Matrix::identity(2).vec_col_major();
            out.push(
                tag(CheckBuilder::new(
                    COV_SUITE,
                    "spinor2.field_rotation",
                    "S sigma_p S⁻¹ = a_{qp} sigma_q, so sigma·F transforms by the \
                     three-vector element",
                ))
                .verdict(ok),
            );
        }
        RepKind::SymTensor => {
            let p = MomentumSample::from_ints([3, 1, 2, 0]);
            let pv = Matrix::from_fn(4, 1, |mu, _| p.p_upper(mu));
            let t = pv.mul(&pv.transpose());
            let moved = el.fundamental.apply(&p);
            let mv = Matrix::from_fn(4, 1, |mu, _| moved.p_upper(mu));
            let expect = mv.mul(&mv.transpose());
            let ok = el.matrix.mul(&symtensor::sym_vec(&t)) == symtensor::sym_vec(&expect);
            out.push(
                tag(CheckBuilder::new(
                    COV_SUITE,
                    "symtensor.tensor_action",
                    "the packed element maps p⊗p to (Λp)⊗(Λp)",
                ))
                .input("p", p.label())
                .verdict(ok),
            );
        }
    }
    Ok(out)
}

/// Boost split: the component along the axis is invariant; the two
/// perpendicular spin/boost components mix with full-angle factors.
fn boost_split_check(
    id: &str,
    axis: usize,
    el: &GroupElement,
    spin: &dyn Fn(usize) -> Matrix,
    boost: &dyn Fn(usize) -> Matrix,
) -> (CheckBuilder, bool) {
    let (bq, cq) = cyclic_successors(axis);
    let (fc, fs) = double_boost(&el.half_pair.0, &el.half_pair.1);
    let cf = Scalar::from_rational(fc);
    let sf = Scalar::from_rational(fs);
    let isf = &sf * &Scalar::i();
    let conj = |m: &Matrix| el.inverse.mul(m).mul(&el.matrix);
    let ok = conj(&spin(axis)) == spin(axis)
        && conj(&boost(axis)) == boost(axis)
        && conj(&spin(bq)) == spin(bq).scale(&cf).add(&boost(cq).scale(&isf))
        && conj(&spin(cq)) == spin(cq).scale(&cf).sub(&boost(bq).scale(&isf))
        && conj(&boost(bq)) == boost(bq).scale(&cf).add(&spin(cq).scale(&isf))
        && conj(&boost(cq)) == boost(cq).scale(&cf).sub(&spin(bq).scale(&isf));
    let b = CheckBuilder::new(
        COV_SUITE,
        id,
        "boost leaves the parallel spin/boost components invariant and \
         mixes the perpendicular ones with full-angle coefficients",
    )
    .witness("mixing", if ok { "cosh, ±i·sinh" } else { "mismatch" });
    (b, ok)
}

/// Block-diagonalization of the bispinor mass operator by the symmetric
/// involution U with U² = 2I: massless operators decouple into two 2x2
/// corners, a mass term recouples them.
pub fn massless_block_checks() -> Vec<CheckRecord> {
    let u = Matrix::vstack(&[
        &Matrix::hstack(&[&Matrix::identity(2), &Matrix::identity(2)]),
        &Matrix::hstack(&[&Matrix::identity(2), &Matrix::identity(2).neg()]),
    ]);
    let mut out = Vec::new();
    let u_ok = u.mul(&u) == Matrix::identity(4).scale(&Scalar::from_int(2));
    out.push(
        CheckBuilder::new(
            COV_SUITE,
            "dirac.block_transform_involution",
            "the block-mixing matrix squares to twice the identity",
        )
        .verdict(u_ok),
    );

    let conj_op = |p: &MomentumSample, m: i64| -> Matrix {
        let mut op = Matrix::identity(4).scale(&Scalar::from_int(-m));
        for mu in 0..DIM {
            op = op.add(&gamma::gamma(mu).scale(&p.p_lower(mu)));
        }
        u.mul(&op).mul(&u).scale(&Scalar::from_ratio(1, 2))
    };

    let p0 = MomentumSample::from_ints([1, 0, 0, 1]);
    let t = conj_op(&p0, 0);
    let ur = t.block(0, 2, 2, 2);
    let ll = t.block(2, 0, 2, 2);
    let diag_zero = t.block(0, 0, 2, 2).is_zero() && t.block(2, 2, 2, 2).is_zero();
    let ur_kernel = crate::kernel::rank_and_kernel(&ur);
    let ll_kernel = crate::kernel::rank_and_kernel(&ll);
    let mut rec = CheckBuilder::new(
        COV_SUITE,
        "dirac.block_transform_massless",
        "at zero mass the transformed operator splits into two decoupled \
         2x2 corners, each annihilating exactly one spinor direction",
    )
    .input("p", p0.label());
    if ur_kernel.kernel_dim == 1 {
        rec = rec.witness("upper_right_kernel", format!("{}", ur_kernel.kernel_basis[0].transpose()));
    }
    if ll_kernel.kernel_dim == 1 {
        rec = rec.witness("lower_left_kernel", format!("{}", ll_kernel.kernel_basis[0].transpose()));
    }
    out.push(rec.verdict(diag_zero && ur_kernel.kernel_dim == 1 && ll_kernel.kernel_dim == 1));

    let pm = MomentumSample::from_ints([3, 1, 2, 0]);
    let t = conj_op(&pm, 2);
    let coupling = t.block(0, 0, 2, 2) == Matrix::identity(2).scale(&Scalar::from_int(-2))
        && t.block(2, 2, 2, 2) == Matrix::identity(2).scale(&Scalar::from_int(-2));
    out.push(
        CheckBuilder::new(
            COV_SUITE,
            "dirac.block_transform_massive",
            "a mass term reappears as -m·I in both diagonal corners, \
             coupling the two-spinor halves",
        )
        .input("p", pm.label())
        .input("m", "2")
        .verdict(coupling),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn assert_all_pass(records: &[CheckRecord]) {
        for r in records {
            assert!(r.passed(), "failed: {} ({:?})", r.check_id, r.witness);
        }
    }

    #[test]
    fn structure_checks_pass_for_every_representation() {
        for kind in RepKind::ALL {
            let records = structure_check(kind);
            assert!(!records.is_empty());
            assert_all_pass(&records);
        }
    }

    #[test]
    fn covariance_checks_pass_for_boost_and_rotation() {
        let boost = ElementKind::Boost { axis: 1 };
        let rot = ElementKind::Rotation { plane: RotationPlane::P12 };
        for kind in RepKind::ALL {
            for ek in [boost, rot] {
                let records = covariance_check(kind, ek, &half_pair(ek).0, &half_pair(ek).1).unwrap();
                assert_all_pass(&records);
            }
        }
    }

    fn half_pair(ek: ElementKind) -> (Rational, Rational) {
        match ek {
            ElementKind::Boost { .. } => (rat(5, 4), rat(3, 4)),
            ElementKind::Rotation { .. } => (rat(3, 5), rat(4, 5)),
        }
    }

    #[test]
    fn covariance_checks_pass_on_other_axes() {
        for kind in [RepKind::DiracBispinor, RepKind::WeylLeft, RepKind::So3cVector] {
            for ek in [
                ElementKind::Boost { axis: 2 },
                ElementKind::Boost { axis: 3 },
                ElementKind::Rotation { plane: RotationPlane::P23 },
                ElementKind::Rotation { plane: RotationPlane::P31 },
            ] {
                let (c, s) = half_pair(ek);
                let records = covariance_check(kind, ek, &c, &s).unwrap();
                assert_all_pass(&records);
            }
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(group_element(
            RepKind::DiracBispinor,
            ElementKind::Boost { axis: 1 },
            &rat(1, 2),
            &rat(1, 2)
        )
        .is_err());
        assert!(group_element(
            RepKind::WeylLeft,
            ElementKind::Rotation { plane: RotationPlane::P12 },
            &rat(1, 2),
            &rat(1, 2)
        )
        .is_err());
    }

    #[test]
    fn block_transform_checks_pass() {
        assert_all_pass(&massless_block_checks());
    }

    #[test]
    fn spin_factor_is_minus_i_generator() {
        let rep = Representation::new(RepKind::DiracBispinor);
        let s01 = rep.spin(0, 1);
        assert_eq!(s01, gamma::alpha(1).scale(&Scalar::imag_ratio(-1, 2)));
    }
}
