//! Release gate. Each test covers one family of guarantees, recomputes
//! the load-bearing numbers directly where they are cheap, and prints a
//! single PASS/FAIL line. Every comparison is exact.

#[allow(dead_code)]
mod common;

use std::sync::OnceLock;

use common::naive_kernel;
use wavekernel::matrix::Matrix;
use wavekernel::minkowski::FixtureSet;
use wavekernel::pl::PauliLubanski;
use wavekernel::report::ReportDocument;
use wavekernel::reps::{RepKind, Representation};
use wavekernel::scalar::{rat, rat_int, Scalar};
use wavekernel::suites::{self, SuiteConfig};
use wavekernel::systems::{assemble, self_dual_two_form, transverse_traceless_rows, Family};

/// One full default run, shared across the gates.
fn report() -> &'static ReportDocument {
    static DOC: OnceLock<ReportDocument> = OnceLock::new();
    DOC.get_or_init(|| {
        let plan = suites::resolve(&SuiteConfig::default()).expect("default config resolves");
        suites::run(&plan)
    })
}

/// Every record carrying one of the ids exists and passed.
fn checks_pass(ids: &[&str]) -> Result<(), String> {
    for id in ids {
        let records: Vec<_> = report()
            .checks
            .iter()
            .filter(|c| c.check_id == *id)
            .collect();
        if records.is_empty() {
            return Err(format!("no records for `{id}`"));
        }
        if let Some(r) = records.iter().find(|r| !r.passed()) {
            return Err(format!("`{id}` failed at {:?}", r.inputs));
        }
    }
    Ok(())
}

fn suite_passes(suite: &str) -> Result<(), String> {
    let records: Vec<_> = report().checks.iter().filter(|c| c.suite == suite).collect();
    if records.is_empty() {
        return Err(format!("suite `{suite}` produced no records"));
    }
    match records.iter().find(|r| !r.passed()) {
        Some(r) => Err(format!("{}/{} failed", r.suite, r.check_id)),
        None => Ok(()),
    }
}

fn gate(name: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("PASS {name}"),
        Err(reason) => println!("FAIL {name}: {reason}"),
    }
    if let Err(reason) = outcome {
        panic!("{name}: {reason}");
    }
}

#[test]
fn algebra_foundations_hold() {
    gate(
        "algebra foundations (Clifford relations, dualities, quadratic invariants)",
        checks_pass(&[
            "dirac.clifford_anticommutator",
            "dirac.sigma_sigma_commutator",
            "dirac.dual_generator_identity",
            "weyl.self_duality",
            "so3c.self_duality",
            "dirac.invariant_quadratic",
            "dirac.invariant_pseudoscalar",
            "so3c.rotation_generator_algebra",
        ]),
    );
}

#[test]
fn casimir_scalars_and_spin_spectra_hold() {
    let outcome = checks_pass(&[
        "dirac.casimir_scalar",
        "weyl.casimir_scalar",
        "vector.casimir_spectrum",
        "symtensor.casimir_spectrum",
    ])
    .and_then(|()| {
        let fixtures = FixtureSet::default_set();
        for kind in [RepKind::DiracBispinor, RepKind::WeylLeft] {
            let rep = Representation::new(kind);
            for f in fixtures.all() {
                let w = PauliLubanski::new(&rep, &f.sample);
                let expected = Matrix::identity(rep.dim())
                    .scale(&Scalar::from_rational(rat(-3, 4) * f.sample.square()));
                if w.casimir() != expected {
                    return Err(format!(
                        "squared spin vector is not -(3/4) p^2 I for {} at {}",
                        kind.name(),
                        f.label()
                    ));
                }
            }
        }
        let candidates = [rat_int(0), rat(-3, 4), rat_int(-2), rat_int(-6)];
        let tables: [(RepKind, [usize; 4]); 2] = [
            (RepKind::Vector, [1, 0, 3, 0]),
            (RepKind::SymTensor, [2, 0, 3, 5]),
        ];
        for (kind, expected) in &tables {
            let rep = Representation::new(*kind);
            for f in &fixtures.massive {
                let w = PauliLubanski::new(&rep, &f.sample);
                let m2 = f.mass_squared();
                for (c, want) in candidates.iter().zip(expected) {
                    let dim = w.casimir_eigenspace_dim(c, &m2);
                    if dim != *want {
                        return Err(format!(
                            "{} eigenspace at c={c} has dim {dim}, expected {want} ({})",
                            kind.name(),
                            f.label()
                        ));
                    }
                }
                if expected.iter().sum::<usize>() != rep.dim() {
                    return Err(format!("{} spectrum table incomplete", kind.name()));
                }
            }
        }
        Ok(())
    });
    gate("Casimir scalars and massive spin spectra", outcome);
}

#[test]
fn massless_helicity_selection_holds() {
    let outcome = checks_pass(&["weyl.single_helicity", "so3c.single_helicity"]).and_then(|()| {
        let fixtures = FixtureSet::default_set();
        let rep = Representation::new(RepKind::WeylLeft);
        for f in &fixtures.massless {
            let w = PauliLubanski::new(&rep, &f.sample);
            let hit = w.helicity_kernel(&rat(-1, 2)).kernel_dim;
            let miss = w.helicity_kernel(&rat(1, 2)).kernel_dim;
            if (hit, miss) != (1, 0) {
                return Err(format!(
                    "two-spinor helicity dims ({hit}, {miss}) at {}, expected (1, 0)",
                    f.label()
                ));
            }
        }
        Ok(())
    });
    gate("massless helicity selection", outcome);
}

#[test]
fn formulation_equivalences_hold() {
    let outcome = suite_passes("equivalences").and_then(|()| {
        let fixtures = FixtureSet::default_set();
        let zero = rat_int(0);
        let field_forms = [
            Family::MaxwellSo3c,
            Family::MaxwellCurlDiv,
            Family::MaxwellSpinor,
            Family::MaxwellLaport,
            Family::MaxwellQuaternion,
        ];
        for f in &fixtures.massless {
            for fam in field_forms {
                let dim = assemble(fam, &f.sample, &zero)
                    .map_err(|e| e.to_string())?
                    .kernel()
                    .kernel_dim;
                if dim != 1 {
                    return Err(format!(
                        "{} kernel dim {dim} at {}, expected 1",
                        fam.name(),
                        f.label()
                    ));
                }
            }
        }
        for f in &fixtures.massive {
            for fam in field_forms {
                let dim = assemble(fam, &f.sample, &zero)
                    .map_err(|e| e.to_string())?
                    .kernel()
                    .kernel_dim;
                if dim != 0 {
                    return Err(format!(
                        "{} kernel dim {dim} at {}, expected 0",
                        fam.name(),
                        f.label()
                    ));
                }
            }
            let tensor = assemble(Family::MaxwellTensor, &f.sample, &zero)
                .map_err(|e| e.to_string())?;
            for v in &tensor.kernel().kernel_basis {
                if !self_dual_two_form(&f.sample, v).is_zero() {
                    return Err(format!(
                        "potential-form survivor carries field strength at {}",
                        f.label()
                    ));
                }
            }
        }
        Ok(())
    });
    gate("formulation equivalences", outcome);
}

#[test]
fn constraint_and_gauge_behavior_holds() {
    let outcome = checks_pass(&[
        "proca.transversality",
        "fierz_pauli_final.kernel_dimension",
        "fierz_pauli_final.solution_constraints",
        "proca.massless_gauge_direction",
        "maxwell_tensor.gauge_direction",
        "fierz_pauli_full.gauge_annihilation",
        "fierz_pauli_full.gauge_negative_control",
        "dirac.on_shell_reduction",
    ])
    .and_then(|()| {
        let fixtures = FixtureSet::default_set();
        for f in &fixtures.massive {
            let sys = assemble(Family::FierzPauliFinal, &f.sample, &f.mass)
                .map_err(|e| e.to_string())?;
            let kernel = sys.kernel();
            if kernel.kernel_dim != 5 {
                return Err(format!(
                    "constrained spin-two kernel dim {} at {}, expected 5",
                    kernel.kernel_dim,
                    f.label()
                ));
            }
            let constraints = transverse_traceless_rows(&f.sample);
            for v in &kernel.kernel_basis {
                if !constraints.mul(v).is_zero() {
                    return Err(format!(
                        "spin-two solution violates transversality or trace at {}",
                        f.label()
                    ));
                }
            }
        }
        Ok(())
    });
    gate("constraints and gauge directions", outcome);
}

#[test]
fn einstein_comparison_holds() {
    gate(
        "linearized Einstein versus massless spin-two",
        checks_pass(&[
            "einstein_linear.differs_from_spin_two_operator",
            "einstein_linear.gauge_invariance",
            "einstein_linear.harmonic_gauge_comparison",
            "einstein_linear.transverse_traceless_agreement",
        ]),
    );
}

#[test]
fn conservation_identities_hold() {
    gate(
        "conserved currents and operator identities with negative controls",
        suite_passes("identities").and_then(|()| {
            checks_pass(&[
                "dirac.current_conservation",
                "dirac.energy_momentum_trace",
                "dirac.energy_balance",
                "dirac.spin_current_balance",
                "dirac.spin_orbit_balance",
                "dirac.triple_gamma_contraction",
                "dirac.gamma5_quadruple_product",
                "maxwell_tensor.energy_momentum_balance",
                "fierz_pauli_full.energy_momentum_balance",
                "dirac.current_negative_control",
                "fierz_pauli_full.balance_negative_control",
                "fierz_pauli_full.balance_requires_constraints",
            ])
        }),
    );
}

#[test]
fn eliminator_matches_reference_oracle() {
    let corpus = common::seeded_corpus();
    let outcome = (|| {
        if corpus.len() != 100 {
            return Err(format!("corpus has {} matrices, expected 100", corpus.len()));
        }
        for (idx, m) in corpus.iter().enumerate() {
            let fast = wavekernel::kernel::rank_and_kernel(m);
            let slow = naive_kernel(m);
            if fast.rank != slow.rank {
                return Err(format!("rank mismatch on corpus matrix {idx}"));
            }
            for v in &fast.kernel_basis {
                if !m.mul(v).is_zero() {
                    return Err(format!("kernel vector fails M v = 0 on matrix {idx}"));
                }
            }
        }
        Ok(())
    })();
    gate("fraction-free eliminator against the naive reference", outcome);
}

#[test]
fn full_default_run_passes() {
    let doc = report();
    let outcome = if doc.all_passed() {
        Ok(())
    } else {
        Err(format!("{} of {} checks failed", doc.summary.failed, doc.summary.total))
    };
    gate("complete default verification run", outcome);
}
