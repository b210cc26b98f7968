//! The Pauli-Lubanski vector W_mu = (1/2) e_{mu nu s t} p^nu S^{s t}
//! with spin factor S^{s t} = -i M^{s t}, its Casimir square, spin
//! spectra on massive momenta, and helicity scans on the light cone.

use crate::kernel::{rank_and_kernel, KernelReport};
use crate::matrix::Matrix;
use crate::minkowski::{levi_civita_lower, metric_sign, FixtureSet, MomentumSample, DIM};
use crate::report::{CheckBuilder, CheckRecord};
use crate::reps::{gamma, weyl, so3c, ElementKind, RepKind, Representation};
use crate::scalar::{rat, rat_int, Rational, Scalar};

/// The four lower-index components W_mu for one representation and
/// momentum.
#[derive(Debug, Clone)]
pub struct PauliLubanski {
    rep: RepKind,
    p: MomentumSample,
    w: Vec<Matrix>,
}

impl PauliLubanski {
    pub fn new(rep: &Representation, p: &MomentumSample) -> Self {
        let d = rep.dim();
        let mut w = Vec::with_capacity(DIM);
        for mu in 0..DIM {
            let mut acc = Matrix::zeros(d, d);
            for nu in 0..DIM {
                let pv = p.p_upper(nu);
                if pv.is_zero() {
                    continue;
                }
                for s in 0..DIM {
                    for t in 0..DIM {
                        let e = levi_civita_lower(mu, nu, s, t);
                        if e == 0 {
                            continue;
                        }
                        let coeff = Scalar::from_ratio(e, 2) * &pv;
                        acc = acc.add(&rep.spin(s, t).scale(&coeff));
                    }
                }
            }
            w.push(acc);
        }
        Self { rep: rep.kind(), p: p.clone(), w }
    }

    pub fn component(&self, mu: usize) -> &Matrix {
        &self.w[mu]
    }

    pub fn rep(&self) -> RepKind {
        self.rep
    }

    pub fn momentum(&self) -> &MomentumSample {
        &self.p
    }

    /// p^mu W_mu; vanishes identically by antisymmetry of the symbol.
    pub fn transversality(&self) -> Matrix {
        let d = self.w[0].rows();
        let mut acc = Matrix::zeros(d, d);
        for mu in 0..DIM {
            acc = acc.add(&self.w[mu].scale(&self.p.p_upper(mu)));
        }
        acc
    }

    /// W² = g^{mu nu} W_mu W_nu.
    pub fn casimir(&self) -> Matrix {
        let d = self.w[0].rows();
        let mut acc = Matrix::zeros(d, d);
        for mu in 0..DIM {
            let sq = self.w[mu].mul(&self.w[mu]);
            acc = acc.add(&sq.scale(&Scalar::from_int(metric_sign(mu))));
        }
        acc
    }

    /// Stacks W_mu - lambda p_mu I over mu and returns its kernel data;
    /// the kernel dimension is the multiplicity of helicity lambda.
    pub fn helicity_kernel(&self, lambda: &Rational) -> KernelReport {
        let d = self.w[0].rows();
        let id = Matrix::identity(d);
        let blocks: Vec<Matrix> = (0..DIM)
            .map(|mu| {
                let shift = Scalar::from_rational(lambda * self.p.p_lower(mu).re());
                self.w[mu].sub(&id.scale(&shift))
            })
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        rank_and_kernel(&Matrix::vstack(&refs))
    }

    /// Kernel dimension of W² - c·scale·I.
    pub fn casimir_eigenspace_dim(&self, c: &Rational, scale: &Rational) -> usize {
        let d = self.w[0].rows();
        let shifted = self
            .casimir()
            .sub(&Matrix::identity(d).scale(&Scalar::from_rational(c * scale)));
        rank_and_kernel(&shifted).kernel_dim
    }
}

/// Default Casimir candidates: -s(s+1) for s = 0, 1/2, 1, 2.
pub fn default_spin_candidates() -> Vec<Rational> {
    vec![rat_int(0), rat(-3, 4), rat_int(-2), rat_int(-6)]
}

/// Default helicity candidates: half-integers from -2 to 2.
pub fn default_helicity_candidates() -> Vec<Rational> {
    (-4..=4).map(|n| rat(n, 2)).collect()
}

const PL_SUITE: &str = "pauli_lubanski";

/// Transversality, scalar Casimir values, and closed forms.
pub fn pl_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let reps: Vec<Representation> = RepKind::ALL.iter().map(|k| Representation::new(*k)).collect();

    for rep in &reps {
        let mut ok = true;
        for f in fixtures.all() {
            let pl = PauliLubanski::new(rep, &f.sample);
            ok &= pl.transversality().is_zero();
        }
        out.push(
            CheckBuilder::new(
                PL_SUITE,
                &format!("{}.transversality", rep.kind().short()),
                "p^mu W_mu vanishes for every fixture momentum",
            )
            .input("representation", rep.kind().name())
            .verdict(ok),
        );
    }

    for kind in [RepKind::DiracBispinor, RepKind::WeylLeft] {
        let rep = Representation::new(kind);
        let d = rep.dim();
        let mut ok = true;
        for f in fixtures.all() {
            let pl = PauliLubanski::new(&rep, &f.sample);
            let expect = Matrix::identity(d)
                .scale(&Scalar::from_rational(f.sample.square() * rat(-3, 4)));
            ok &= pl.casimir() == expect;
        }
        out.push(
            CheckBuilder::new(
                PL_SUITE,
                &format!("{}.casimir_scalar", kind.short()),
                "W² = -(3/4) p² I on and off the mass shell",
            )
            .input("representation", kind.name())
            .witness("coefficient", "-3/4")
            .verdict(ok),
        );
    }

    out.extend(closed_form_checks(fixtures));
    out.extend(covariance_checks(fixtures));
    out
}

/// W_mu reduced through the duality identities of each representation.
fn closed_form_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    let mut out = Vec::new();

    let dirac = Representation::new(RepKind::DiracBispinor);
    let g5l = gamma::gamma5_lower();
    let mut ok = true;
    for f in fixtures.all() {
        let pl = PauliLubanski::new(&dirac, &f.sample);
        for mu in 0..DIM {
            let mut expect = Matrix::zeros(4, 4);
            for nu in 0..DIM {
                let sigma_low = gamma::sigma(mu, nu)
                    .scale(&Scalar::from_int(metric_sign(mu) * metric_sign(nu)));
                expect = expect.add(&sigma_low.scale(&f.sample.p_upper(nu)));
            }
            expect = g5l.mul(&expect).scale(&Scalar::from_ratio(-1, 2));
            ok &= pl.component(mu) == &expect;
        }
    }
    out.push(
        CheckBuilder::new(
            PL_SUITE,
            "dirac.closed_form",
            "W_mu = -(1/2) gamma_5 Sigma_{mu nu} p^nu via the dual-generator identity",
        )
        .verdict(ok),
    );

    let weyl_rep = Representation::new(RepKind::WeylLeft);
    let mut ok = true;
    for f in fixtures.all() {
        let pl = PauliLubanski::new(&weyl_rep, &f.sample);
        for mu in 0..DIM {
            let mut expect = Matrix::zeros(2, 2);
            for nu in 0..DIM {
                expect = expect.add(&weyl::sigma_lower(mu, nu).scale(&f.sample.p_upper(nu)));
            }
            expect = expect.scale(&Scalar::from_ratio(-1, 2));
            ok &= pl.component(mu) == &expect;
        }
    }
    out.push(
        CheckBuilder::new(
            PL_SUITE,
            "weyl.closed_form",
            "W_mu = -(1/2) Sigma_{mu nu} p^nu via two-spinor self-duality",
        )
        .verdict(ok),
    );

    let so3c_rep = Representation::new(RepKind::So3cVector);
    let mut ok = true;
    for f in fixtures.all() {
        let pl = PauliLubanski::new(&so3c_rep, &f.sample);
        for mu in 0..DIM {
            let mut expect = Matrix::zeros(3, 3);
            for nu in 0..DIM {
                let sigma_low = so3c::sigma(mu, nu)
                    .scale(&Scalar::from_int(metric_sign(mu) * metric_sign(nu)));
                expect = expect.add(&sigma_low.scale(&f.sample.p_upper(nu)));
            }
            ok &= pl.component(mu) == &expect;
        }
    }
    out.push(
        CheckBuilder::new(
            PL_SUITE,
            "so3c.closed_form",
            "W_mu = Sigma_{mu nu} p^nu via complex three-vector self-duality",
        )
        .verdict(ok),
    );

    out.push(dirac_on_shell_identity(fixtures));
    out
}

/// On the solution subspace of (gamma·p - m) the bispinor W_mu collapses
/// to (1/2)(p_mu + m gamma_mu) gamma_5; off that subspace the operators
/// differ.
fn dirac_on_shell_identity(fixtures: &FixtureSet) -> CheckRecord {
    let dirac = Representation::new(RepKind::DiracBispinor);
    let g5l = gamma::gamma5_lower();
    let mut on_subspace = true;
    let mut differs_globally = true;
    for f in &fixtures.massive {
        let pl = PauliLubanski::new(&dirac, &f.sample);
        let mut dirac_op = Matrix::identity(4).scale(&-Scalar::from_rational(f.mass.clone()));
        for mu in 0..DIM {
            dirac_op = dirac_op.add(&gamma::gamma(mu).scale(&f.sample.p_lower(mu)));
        }
        let kernel = rank_and_kernel(&dirac_op);
        for mu in 0..DIM {
            let gamma_low = gamma::gamma(mu).scale(&Scalar::from_int(metric_sign(mu)));
            let closed = Matrix::identity(4)
                .scale(&f.sample.p_lower(mu))
                .add(&gamma_low.scale(&Scalar::from_rational(f.mass.clone())))
                .mul(&g5l)
                .scale(&Scalar::from_ratio(1, 2));
            let diff = pl.component(mu).sub(&closed);
            for v in &kernel.kernel_basis {
                on_subspace &= diff.mul(v).is_zero();
            }
            if mu == 0 {
                differs_globally &= !diff.is_zero();
            }
        }
    }
    CheckBuilder::new(
        PL_SUITE,
        "dirac.on_shell_reduction",
        "W_mu agrees with (1/2)(p_mu + m gamma_mu) gamma_5 exactly on the \
         solution subspace and nowhere else",
    )
    .witness("global_equality", "false")
    .witness("on_kernel_equality", "true")
    .verdict(on_subspace && differs_globally)
}

/// W_mu(Λp) = det(Λ)·(Λ⁻¹)^l_mu · S W_l(p) S⁻¹ for proper elements.
fn covariance_checks(fixtures: &FixtureSet) -> Vec<CheckRecord> {
    use crate::minkowski::RotationPlane;
    use crate::reps::group_element;

    let mut out = Vec::new();
    let elements = [
        (ElementKind::Boost { axis: 1 }, rat(5, 4), rat(3, 4)),
        (ElementKind::Rotation { plane: RotationPlane::P12 }, rat(3, 5), rat(4, 5)),
    ];
    for kind in [
        RepKind::DiracBispinor,
        RepKind::WeylLeft,
        RepKind::Vector,
        RepKind::So3cVector,
    ] {
        let rep = Representation::new(kind);
        let mut ok = true;
        for (ek, c, s) in &elements {
            let el = group_element(kind, *ek, c, s).expect("fixture element");
            let lam_inv = el.fundamental.inverse();
            let lam_inv = lam_inv.matrix();
            for f in [fixtures.massive_probe(1), fixtures.massless_probe(0)] {
                let moved = el.fundamental.apply(&f.sample);
                let pl_moved = PauliLubanski::new(&rep, &moved);
                let pl_base = PauliLubanski::new(&rep, &f.sample);
                for mu in 0..DIM {
                    let mut expect = Matrix::zeros(rep.dim(), rep.dim());
                    for l in 0..DIM {
                        let coeff = lam_inv[(l, mu)].clone();
                        if coeff.is_zero() {
                            continue;
                        }
                        let conj = el.matrix.mul(pl_base.component(l)).mul(&el.inverse);
                        expect = expect.add(&conj.scale(&coeff));
                    }
                    ok &= pl_moved.component(mu) == &expect;
                }
            }
        }
        out.push(
            CheckBuilder::new(
                PL_SUITE,
                &format!("{}.covariance", kind.short()),
                "W transforms as a covector up to conjugation by the element",
            )
            .input("representation", kind.name())
            .verdict(ok),
        );
    }
    out
}

const SPECTRA_SUITE: &str = "spectra";

fn expected_spectrum(kind: RepKind) -> Vec<(Rational, usize)> {
    match kind {
        RepKind::DiracBispinor => vec![(rat_int(0), 0), (rat(-3, 4), 4), (rat_int(-2), 0), (rat_int(-6), 0)],
        RepKind::WeylLeft => vec![(rat_int(0), 0), (rat(-3, 4), 2), (rat_int(-2), 0), (rat_int(-6), 0)],
        RepKind::Vector => vec![(rat_int(0), 1), (rat(-3, 4), 0), (rat_int(-2), 3), (rat_int(-6), 0)],
        RepKind::So3cVector => vec![(rat_int(0), 0), (rat(-3, 4), 0), (rat_int(-2), 3), (rat_int(-6), 0)],
        RepKind::SymTensor => vec![(rat_int(0), 2), (rat(-3, 4), 0), (rat_int(-2), 3), (rat_int(-6), 5)],
        _ => vec![],
    }
}

/// Kernel dimensions of W² - c·m² I over the candidate Casimir values c,
/// on every massive fixture.
pub fn spectrum_checks(fixtures: &FixtureSet, candidates: &[Rational]) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for kind in [
        RepKind::DiracBispinor,
        RepKind::WeylLeft,
        RepKind::Vector,
        RepKind::So3cVector,
        RepKind::SymTensor,
    ] {
        let rep = Representation::new(kind);
        let expect = expected_spectrum(kind);
        for f in &fixtures.massive {
            let pl = PauliLubanski::new(&rep, &f.sample);
            let m2 = f.mass_squared();
            let mut ok = true;
            let mut observed = Vec::new();
            for c in candidates {
                let dim = pl.casimir_eigenspace_dim(c, &m2);
                observed.push(format!("{c}:{dim}"));
                if let Some((_, want)) = expect.iter().find(|(cc, _)| cc == c) {
                    ok &= dim == *want;
                }
            }
            out.push(
                CheckBuilder::new(
                    SPECTRA_SUITE,
                    &format!("{}.casimir_spectrum", kind.short()),
                    "kernel dimension of W² - c m² I over the candidate Casimir values",
                )
                .input("representation", kind.name())
                .input("fixture", f.label())
                .witness("dims", observed.join(" "))
                .verdict(ok),
            );
        }
    }
    out
}

const HELICITY_SUITE: &str = "helicity";

/// Multiplicities of W_mu = lambda p_mu on light-cone fixtures.
pub fn helicity_checks(fixtures: &FixtureSet, candidates: &[Rational]) -> Vec<CheckRecord> {
    let mut out = Vec::new();

    let weyl_rep = Representation::new(RepKind::WeylLeft);
    for f in &fixtures.massless {
        let pl = PauliLubanski::new(&weyl_rep, &f.sample);
        let mut ok = true;
        let mut observed = Vec::new();
        for lambda in candidates {
            let dim = pl.helicity_kernel(lambda).kernel_dim;
            observed.push(format!("{lambda}:{dim}"));
            let want = if lambda == &rat(-1, 2) { 1 } else { 0 };
            ok &= dim == want;
        }
        out.push(
            CheckBuilder::new(
                HELICITY_SUITE,
                "weyl.single_helicity",
                "the left-handed two-spinor carries exactly one helicity state, \
                 at lambda = -1/2",
            )
            .input("fixture", f.label())
            .witness("dims", observed.join(" "))
            .verdict(ok),
        );
    }

    out.push(so3c_helicity_check(fixtures, candidates));

    let sym = Representation::new(RepKind::SymTensor);
    for f in &fixtures.massless {
        let pl = PauliLubanski::new(&sym, &f.sample);
        let mut observed = Vec::new();
        for lambda in candidates {
            let dim = pl.helicity_kernel(lambda).kernel_dim;
            if dim > 0 {
                observed.push(format!("{lambda}:{dim}"));
            }
        }
        out.push(
            CheckBuilder::new(
                HELICITY_SUITE,
                "symtensor.helicity_survey",
                "observed light-cone helicity multiplicities for the symmetric \
                 tensor, recorded without an assertion",
            )
            .input("fixture", f.label())
            .witness("nonzero_dims", observed.join(" "))
            .verdict(true),
        );
    }
    out
}

/// The complex three-vector carries a single helicity state whose sign
/// is fixed by the duality orientation and stable across fixtures and
/// frames.
fn so3c_helicity_check(fixtures: &FixtureSet, candidates: &[Rational]) -> CheckRecord {
    use crate::minkowski::RotationPlane;
    use crate::reps::group_element;

    let rep = Representation::new(RepKind::So3cVector);
    let mut signs = Vec::new();
    let mut ok = true;
    let mut samples: Vec<MomentumSample> = fixtures.massless.iter().map(|f| f.sample.clone()).collect();
    let boost = group_element(RepKind::So3cVector, ElementKind::Boost { axis: 3 }, &rat(5, 4), &rat(3, 4))
        .expect("fixture boost");
    let rot = group_element(
        RepKind::So3cVector,
        ElementKind::Rotation { plane: RotationPlane::P31 },
        &rat(3, 5),
        &rat(4, 5),
    )
    .expect("fixture rotation");
    samples.push(boost.fundamental.apply(&samples[0]));
    samples.push(rot.fundamental.apply(&samples[1]));

    for p in &samples {
        let pl = PauliLubanski::new(&rep, p);
        let mut hits = Vec::new();
        for lambda in candidates {
            let dim = pl.helicity_kernel(lambda).kernel_dim;
            if dim > 0 {
                hits.push((lambda.clone(), dim));
            }
        }
        ok &= hits.len() == 1 && hits[0].1 == 1;
        if let Some((lambda, _)) = hits.first() {
            ok &= lambda == &rat_int(1) || lambda == &rat_int(-1);
            signs.push(lambda.to_string());
        }
    }
    ok &= signs.windows(2).all(|w| w[0] == w[1]);
    CheckBuilder::new(
        HELICITY_SUITE,
        "so3c.single_helicity",
        "the complex three-vector carries exactly one unit-helicity state, \
         with the same sign on every light-cone momentum and boosted frame",
    )
    .witness("lambda", signs.first().cloned().unwrap_or_default())
    .verdict(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_pass(records: &[CheckRecord]) {
        for r in records {
            assert!(r.passed(), "failed: {} {:?} {:?}", r.check_id, r.inputs, r.witness);
        }
    }

    #[test]
    fn pl_suite_passes() {
        assert_all_pass(&pl_checks(&FixtureSet::default_set()));
    }

    #[test]
    fn spectra_suite_passes() {
        assert_all_pass(&spectrum_checks(
            &FixtureSet::default_set(),
            &default_spin_candidates(),
        ));
    }

    #[test]
    fn helicity_suite_passes() {
        assert_all_pass(&helicity_checks(
            &FixtureSet::default_set(),
            &default_helicity_candidates(),
        ));
    }

    #[test]
    fn rest_frame_casimir_of_three_vector_is_spin_one() {
        let rep = Representation::new(RepKind::So3cVector);
        let p = MomentumSample::from_ints([2, 0, 0, 0]);
        let pl = PauliLubanski::new(&rep, &p);
        let expect = Matrix::identity(3).scale(&Scalar::from_int(-8));
        assert_eq!(pl.casimir(), expect);
    }

    #[test]
    fn helicity_kernel_vectors_satisfy_all_components() {
        let rep = Representation::new(RepKind::WeylLeft);
        let p = MomentumSample::from_ints([3, 2, 2, 1]);
        let pl = PauliLubanski::new(&rep, &p);
        let report = pl.helicity_kernel(&rat(-1, 2));
        assert_eq!(report.kernel_dim, 1);
        let v = &report.kernel_basis[0];
        for mu in 0..DIM {
            let shift = Scalar::from_rational(rat(-1, 2) * p.p_lower(mu).re());
            let m = pl.component(mu).sub(&Matrix::identity(2).scale(&shift));
            assert!(m.mul(v).is_zero());
        }
    }
}
