//! Suite registry, run configuration, and the check-descriptor table.
//!
//! A run resolves a `SuiteConfig` into a `RunPlan` (validated suite
//! list, fixtures, helicity candidates, output shape), executes the
//! selected suites in registry order, and assembles the deterministic
//! report. `CHECK_DESCRIPTORS` names every check the registry can emit;
//! a test pins the table to the emitted set.

use std::collections::BTreeSet;
use std::fs;

use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::identities;
use crate::minkowski::{exact_sqrt, Fixture, FixtureSet, MomentumSample, RotationPlane};
use crate::pl;
use crate::report::{CheckRecord, ReportDocument};
use crate::reps::{self, ElementKind, RepKind};
use crate::scalar::{parse_rational, rat, Rational};
use crate::systems;

/// The named check suites in registry order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Structure,
    Covariance,
    PauliLubanski,
    Spectra,
    Helicity,
    Systems,
    Equivalences,
    Gauge,
    Einstein,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Structure,
        Suite::Covariance,
        Suite::PauliLubanski,
        Suite::Spectra,
        Suite::Helicity,
        Suite::Systems,
        Suite::Equivalences,
        Suite::Gauge,
        Suite::Einstein,
        Suite::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Covariance => "covariance",
            Suite::PauliLubanski => "pauli_lubanski",
            Suite::Spectra => "spectra",
            Suite::Helicity => "helicity",
            Suite::Systems => "systems",
            Suite::Equivalences => "equivalences",
            Suite::Gauge => "gauge",
            Suite::Einstein => "einstein",
            Suite::Identities => "identities",
        }
    }

    pub fn by_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// One-line description for suite listings.
    pub fn describe(self) -> &'static str {
        match self {
            Suite::Structure => {
                "generator tables, Clifford relations, dualities, and quadratic invariants"
            }
            Suite::Covariance => "exact rational group elements and their conjugation laws",
            Suite::PauliLubanski => {
                "Pauli-Lubanski vectors: transversality, Casimir scalars, closed forms"
            }
            Suite::Spectra => "Casimir eigenvalue multiplicities across the representations",
            Suite::Helicity => "light-cone helicity kernels and their signs",
            Suite::Systems => "wave-system assembly and exact kernel dimensions at every fixture",
            Suite::Equivalences => "kernel agreements between alternative formulations",
            Suite::Gauge => "constraints, gauge directions, and gauge-parameter spaces",
            Suite::Einstein => "linearized Einstein operator versus the massless spin-two system",
            Suite::Identities => "conserved currents and operator identities on solution pairs",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    #[default]
    Text,
}

/// Run configuration as read from a config file or assembled by the
/// command line. Every field is optional; omitted fields fall back to
/// the documented defaults.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SuiteConfig {
    /// Suite names to run; empty means `all`.
    pub suites: Vec<String>,
    /// Path to a JSON list of momentum overrides replacing the built-in
    /// fixtures. The list must cover all three regimes: at least one
    /// massive on-shell, one massless, and one off-shell momentum.
    pub momentum_overrides: Option<String>,
    /// Helicity candidates as exact rational strings.
    pub helicity_candidates: Option<Vec<String>>,
    /// `json` or `text`.
    pub output: Option<String>,
    pub fail_fast: Option<bool>,
}

/// One fixture override: four upper momentum components and the squared
/// mass, all exact rationals written as strings.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MomentumOverride {
    pub components: [String; 4],
    pub mass_squared: String,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown output format `{0}` (expected `json` or `text`)")]
    UnknownOutput(String),
    #[error("cannot read `{path}`: {message}")]
    Read { path: String, message: String },
    #[error("cannot parse `{path}`: {message}")]
    Parse { path: String, message: String },
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("invalid fixture: {0}")]
    InvalidFixture(String),
}

/// A validated, fully resolved run.
#[derive(Debug, Clone)]
pub struct RunPlan {
    pub suites: Vec<Suite>,
    pub fixtures: FixtureSet,
    pub helicity_candidates: Vec<Rational>,
    pub output: OutputFormat,
    pub fail_fast: bool,
}

pub fn resolve(config: &SuiteConfig) -> Result<RunPlan, ConfigError> {
    let suites = resolve_suites(&config.suites)?;
    let fixtures = match &config.momentum_overrides {
        Some(path) => load_fixture_overrides(path)?,
        None => FixtureSet::default_set(),
    };
    let helicity_candidates = match &config.helicity_candidates {
        Some(raw) => raw
            .iter()
            .map(|s| parse_rational(s).map_err(|_| ConfigError::InvalidRational(s.clone())))
            .collect::<Result<Vec<_>, _>>()?,
        None => pl::default_helicity_candidates(),
    };
    let output = match config.output.as_deref() {
        None => OutputFormat::Text,
        Some("json") => OutputFormat::Json,
        Some("text") => OutputFormat::Text,
        Some(other) => return Err(ConfigError::UnknownOutput(other.to_owned())),
    };
    Ok(RunPlan {
        suites,
        fixtures,
        helicity_candidates,
        output,
        fail_fast: config.fail_fast.unwrap_or(false),
    })
}

/// Validates every requested name, then returns the selection in
/// registry order with duplicates removed.
fn resolve_suites(names: &[String]) -> Result<Vec<Suite>, ConfigError> {
    if names.is_empty() {
        return Ok(Suite::ALL.to_vec());
    }
    let mut all = false;
    let mut selected = BTreeSet::new();
    for name in names {
        if name == "all" {
            all = true;
            continue;
        }
        let suite = Suite::by_name(name).ok_or_else(|| ConfigError::UnknownSuite(name.clone()))?;
        selected.insert(suite);
    }
    if all {
        return Ok(Suite::ALL.to_vec());
    }
    Ok(Suite::ALL
        .iter()
        .copied()
        .filter(|s| selected.contains(s))
        .collect())
}

fn load_fixture_overrides(path: &str) -> Result<FixtureSet, ConfigError> {
    let text = fs::read_to_string(path).map_err(|e| ConfigError::Read {
        path: path.to_owned(),
        message: e.to_string(),
    })?;
    let raw: Vec<MomentumOverride> =
        serde_json::from_str(&text).map_err(|e| ConfigError::Parse {
            path: path.to_owned(),
            message: e.to_string(),
        })?;
    if raw.is_empty() {
        return Err(ConfigError::InvalidFixture(
            "override file lists no fixtures".to_owned(),
        ));
    }
    let mut set = FixtureSet {
        massive: Vec::new(),
        massless: Vec::new(),
        off_shell: Vec::new(),
    };
    for entry in &raw {
        let fixture = convert_override(entry)?;
        if !fixture.on_shell() {
            set.off_shell.push(fixture);
        } else if fixture.mass.is_zero() {
            set.massless.push(fixture);
        } else {
            set.massive.push(fixture);
        }
    }
    if set.massive.is_empty() || set.massless.is_empty() || set.off_shell.is_empty() {
        return Err(ConfigError::InvalidFixture(format!(
            "override file must declare at least one massive, one massless, \
             and one off-shell momentum (found {}, {}, {})",
            set.massive.len(),
            set.massless.len(),
            set.off_shell.len()
        )));
    }
    Ok(set)
}

fn convert_override(entry: &MomentumOverride) -> Result<Fixture, ConfigError> {
    let mut comps = Vec::with_capacity(4);
    for c in &entry.components {
        comps.push(parse_rational(c).map_err(|_| ConfigError::InvalidRational(c.clone()))?);
    }
    let upper: [Rational; 4] = [
        comps[0].clone(),
        comps[1].clone(),
        comps[2].clone(),
        comps[3].clone(),
    ];
    let mut square = &upper[0] * &upper[0];
    for c in &upper[1..] {
        square -= c * c;
    }
    let sample = MomentumSample::new(upper, square)
        .map_err(|e| ConfigError::InvalidFixture(e.to_string()))?;
    let mass_squared = parse_rational(&entry.mass_squared)
        .map_err(|_| ConfigError::InvalidRational(entry.mass_squared.clone()))?;
    if mass_squared.is_negative() {
        return Err(ConfigError::InvalidFixture(format!(
            "mass squared {} is negative",
            entry.mass_squared
        )));
    }
    let mass = exact_sqrt(&mass_squared).ok_or_else(|| {
        ConfigError::InvalidFixture(format!(
            "mass squared {} is not a perfect rational square",
            entry.mass_squared
        ))
    })?;
    Ok(Fixture::new(sample, mass))
}

/// Executes the plan's suites in registry order and assembles the
/// deterministic report. With fail_fast, collection stops at the first
/// failing record; otherwise failures never interrupt other checks.
pub fn run(plan: &RunPlan) -> ReportDocument {
    let mut records = Vec::new();
    for suite in &plan.suites {
        let batch = collect_suite(*suite, plan);
        if plan.fail_fast {
            if append_until_failure(&mut records, batch) {
                break;
            }
        } else {
            records.extend(batch);
        }
    }
    ReportDocument::assemble(records)
}

/// Appends records up to and including the first failure; reports
/// whether one was hit.
fn append_until_failure(records: &mut Vec<CheckRecord>, batch: Vec<CheckRecord>) -> bool {
    for r in batch {
        let failed = !r.passed();
        records.push(r);
        if failed {
            return true;
        }
    }
    false
}

/// All records of one suite over the plan's fixtures.
pub fn collect_suite(suite: Suite, plan: &RunPlan) -> Vec<CheckRecord> {
    match suite {
        Suite::Structure => RepKind::ALL
            .iter()
            .flat_map(|k| reps::structure_check(*k))
            .collect(),
        Suite::Covariance => {
            let mut out = Vec::new();
            for kind in RepKind::ALL {
                for (ek, c, s) in covariance_elements() {
                    out.extend(
                        reps::covariance_check(kind, ek, &c, &s)
                            .expect("registry elements are valid"),
                    );
                }
            }
            out.extend(reps::massless_block_checks());
            out
        }
        Suite::PauliLubanski => pl::pl_checks(&plan.fixtures),
        Suite::Spectra => pl::spectrum_checks(&plan.fixtures, &pl::default_spin_candidates()),
        Suite::Helicity => pl::helicity_checks(&plan.fixtures, &plan.helicity_candidates),
        Suite::Systems => systems::system_checks(&plan.fixtures),
        Suite::Equivalences => systems::equivalence_checks(&plan.fixtures),
        Suite::Gauge => systems::gauge_checks(&plan.fixtures),
        Suite::Einstein => systems::einstein_checks(&plan.fixtures),
        Suite::Identities => identities::identity_checks(),
    }
}

/// The boost and rotation elements every covariance run exercises, with
/// exact half-angle pairs on the unit hyperbola and circle.
fn covariance_elements() -> Vec<(ElementKind, Rational, Rational)> {
    let mut out = Vec::new();
    for axis in 1..=3 {
        out.push((ElementKind::Boost { axis }, rat(5, 4), rat(3, 4)));
    }
    for plane in [RotationPlane::P12, RotationPlane::P23, RotationPlane::P31] {
        out.push((ElementKind::Rotation { plane }, rat(3, 5), rat(4, 5)));
    }
    out
}

/// Every check id the registry can emit, with its suite and a one-line
/// summary, sorted by (suite, check_id). The summaries are the same
/// reference texts the emitted records carry.
pub const CHECK_DESCRIPTORS: [(&str, &str, &str); 176] = [
    ("covariance", "dirac.block_transform_involution", "the block-mixing matrix squares to twice the identity"),
    ("covariance", "dirac.block_transform_massive", "a mass term reappears as -m·I in both diagonal corners, coupling the two-spinor halves"),
    ("covariance", "dirac.block_transform_massless", "at zero mass the transformed operator splits into two decoupled 2x2 corners, each annihilating exactly one spinor direction"),
    ("covariance", "dirac.boost_split", "boost leaves the parallel spin/boost components invariant and mixes the perpendicular ones with full-angle coefficients"),
    ("covariance", "dirac.double_angle", "squaring the element reproduces the doubled-parameter element"),
    ("covariance", "dirac.element_inverse", "closed-form inverse really inverts the element"),
    ("covariance", "dirac.gamma_conjugation", "S⁻¹ gamma^mu S = Λ^mu_nu gamma^nu and the chirality matrix is invariant"),
    ("covariance", "dirac.generator_conjugation", "S⁻¹ M^{mu nu} S = Λ^mu_s Λ^nu_t M^{s t}"),
    ("covariance", "slash.double_angle", "squaring the element reproduces the doubled-parameter element"),
    ("covariance", "slash.element_inverse", "closed-form inverse really inverts the element"),
    ("covariance", "slash.generator_conjugation", "S⁻¹ M^{mu nu} S = Λ^mu_s Λ^nu_t M^{s t}"),
    ("covariance", "slash.vector_consistency", "conjugating a slash vector lowers to the inverse fundamental action on its coefficients"),
    ("covariance", "so3c.complex_orthogonality", "the three-vector element is complex orthogonal with unit determinant"),
    ("covariance", "so3c.double_angle", "squaring the element reproduces the doubled-parameter element"),
    ("covariance", "so3c.element_inverse", "closed-form inverse really inverts the element"),
    ("covariance", "so3c.generator_conjugation", "S⁻¹ M^{mu nu} S = Λ^mu_s Λ^nu_t M^{s t}"),
    ("covariance", "so3c.j_conjugation", "Λ J_p Λᵀ = a_{qp} J_q with the three-vector element a"),
    ("covariance", "spinor2.double_angle", "squaring the element reproduces the doubled-parameter element"),
    ("covariance", "spinor2.element_inverse", "closed-form inverse really inverts the element"),
    ("covariance", "spinor2.field_rotation", "S sigma_p S⁻¹ = a_{qp} sigma_q, so sigma·F transforms by the three-vector element"),
    ("covariance", "spinor2.generator_conjugation", "S⁻¹ M^{mu nu} S = Λ^mu_s Λ^nu_t M^{s t}"),
    ("covariance", "symtensor.double_angle", "squaring the element reproduces the doubled-parameter element"),
    ("covariance", "symtensor.element_inverse", "closed-form inverse really inverts the element"),
    ("covariance", "symtensor.generator_conjugation", "S⁻¹ M^{mu nu} S = Λ^mu_s Λ^nu_t M^{s t}"),
    ("covariance", "symtensor.tensor_action", "the packed element maps p⊗p to (Λp)⊗(Λp)"),
    ("covariance", "vector.double_angle", "squaring the element reproduces the doubled-parameter element"),
    ("covariance", "vector.element_inverse", "closed-form inverse really inverts the element"),
    ("covariance", "vector.fundamental_consistency", "element equals the fundamental matrix, which is proper orthochronous and carries the antisymmetric-symbol identity"),
    ("covariance", "vector.generator_conjugation", "S⁻¹ M^{mu nu} S = Λ^mu_s Λ^nu_t M^{s t}"),
    ("covariance", "weyl.boost_split", "boost leaves the parallel spin/boost components invariant and mixes the perpendicular ones with full-angle coefficients"),
    ("covariance", "weyl.double_angle", "squaring the element reproduces the doubled-parameter element"),
    ("covariance", "weyl.element_inverse", "closed-form inverse really inverts the element"),
    ("covariance", "weyl.generator_conjugation", "S⁻¹ M^{mu nu} S = Λ^mu_s Λ^nu_t M^{s t}"),
    ("covariance", "weyl.sigma_sandwich", "S† sigma^mu S = Λ^mu_nu sigma^nu"),
    ("einstein", "einstein_linear.differs_from_spin_two_operator", "the two massless operators disagree entry by entry before any gauge choice"),
    ("einstein", "einstein_linear.gauge_invariance", "the linearized operator annihilates every symmetrized pair p (x) f identically, even off the light cone"),
    ("einstein", "einstein_linear.harmonic_gauge_comparison", "in harmonic gauge the spin-two solutions sit strictly inside the Einstein solutions: the trace stays free only for Einstein"),
    ("einstein", "einstein_linear.transverse_traceless_agreement", "restricted to transverse traceless fields the two operators keep the same solutions"),
    ("equivalences", "dirac_gamma.dirac_pl", "the Pauli-Lubanski form selects the same bispinors as the first-order equation"),
    ("equivalences", "dirac_gamma.dirac_sigma", "the second-order sigma form selects the same bispinors as the first-order equation"),
    ("equivalences", "fierz_pauli_final.fierz_pauli_gauge", "both constrained spin-two assemblies carve out the same five-dimensional solution space"),
    ("equivalences", "fierz_pauli_full.fierz_pauli_final", "the single spin-two field equation enforces its own constraints and matches the constrained final system"),
    ("equivalences", "maxwell_so3c.maxwell_curl_div", "the covariant photon system reduces to the curl and divergence equations of the complex field vector"),
    ("equivalences", "maxwell_so3c.maxwell_laport", "the covariant photon system matches the two-spinor contraction acting on the complex field vector"),
    ("equivalences", "maxwell_so3c.maxwell_quaternion", "the covariant photon system matches the quaternion-units contraction acting on the complex field vector"),
    ("equivalences", "maxwell_so3c.maxwell_spinor", "packing the complex field vector into a symmetric two-spinor matrix carries photon solutions onto spinor-matrix solutions"),
    ("equivalences", "maxwell_tensor.maxwell_so3c", "reading the complex field vector out of the self-dual tensor of the potential collapses gauge copies onto photon solutions"),
    ("equivalences", "weyl_compact.weyl_sigma", "the compact two-spinor equation and its component form share the single light-cone solution"),
    ("gauge", "fierz_pauli_full.gauge_annihilation", "at zero mass every symmetrized pair built from a wave-equation gauge parameter is annihilated by the field equation"),
    ("gauge", "fierz_pauli_full.gauge_negative_control", "a parameter violating the wave-equation condition leaves the predicted nonzero residual proportional to p (x) p"),
    ("gauge", "fierz_pauli_full.massless_constraint_survey", "massless spin-two solutions are catalogued against the trace-adjusted transversality condition without imposing it"),
    ("gauge", "maxwell_tensor.gauge_direction", "the pure-gauge potential along the momentum is annihilated and carries a vanishing self-dual tensor"),
    ("gauge", "proca.massless_gauge_direction", "at zero mass the momentum direction is a solution and carries no field strength, on or off the light cone"),
    ("helicity", "so3c.single_helicity", "the complex three-vector carries exactly one unit-helicity state, with the same sign on every light-cone momentum and boosted frame"),
    ("helicity", "symtensor.helicity_survey", "observed light-cone helicity multiplicities for the symmetric tensor, recorded without an assertion"),
    ("helicity", "weyl.single_helicity", "the left-handed two-spinor carries exactly one helicity state, at lambda = -1/2"),
    ("identities", "dirac.alpha_hamiltonian_identity", "the energy flux operator splits into a spin curl, a gradient, and a mass term, identically in momentum and mass"),
    ("identities", "dirac.current_conservation", "the probability current of two equal-mass solutions is divergence free"),
    ("identities", "dirac.current_negative_control", "a mass mismatch between the two solutions leaves a nonzero divergence"),
    ("identities", "dirac.decorated_current_conservation", "currents dressed with extra plane-wave derivatives stay divergence free"),
    ("identities", "dirac.energy_balance", "the Hamiltonian density and its flux close a conservation law"),
    ("identities", "dirac.energy_momentum_trace", "the energy-momentum trace equals the mass times the scalar density"),
    ("identities", "dirac.gamma5_quadruple_product", "the chirality operator and its gamma contraction equal their fully antisymmetrized product representations"),
    ("identities", "dirac.hamiltonian_form", "solutions are eigenvectors of the Hamiltonian at the energy component, and the energy density splits into mass and spin parts"),
    ("identities", "dirac.sigma_momentum_exchange", "momentum factors trade for sigma insertions on the solution space"),
    ("identities", "dirac.spin_current_balance", "the Gordon-type split of the vector current into convective and spin parts holds exactly"),
    ("identities", "dirac.spin_orbit_balance", "the tensor-decorated current balance relating spin flux to the vector current holds exactly"),
    ("identities", "dirac.symmetrized_energy_momentum", "the symmetrized momentum bilinear splits into a mass term and paired sigma insertions"),
    ("identities", "dirac.triple_gamma_contraction", "the fully contracted triple-gamma derivative reduces to the chirality operator times the mass on solutions"),
    ("identities", "fierz_pauli_full.balance_negative_control", "replacing one solution by a non-solution amplitude breaks the energy-momentum balance"),
    ("identities", "fierz_pauli_full.balance_requires_constraints", "a trace-carrying solution of the unconstrained wave equation already breaks the balance, so the transverse traceless conditions are essential"),
    ("identities", "fierz_pauli_full.energy_momentum_balance", "the bilinear energy-momentum combination of two transverse traceless massless spin-two solutions is divergence free"),
    ("identities", "maxwell_tensor.energy_momentum_balance", "the bilinear energy-momentum combination of two photon solutions is divergence free"),
    ("pauli_lubanski", "dirac.casimir_scalar", "W² = -(3/4) p² I on and off the mass shell"),
    ("pauli_lubanski", "dirac.closed_form", "W_mu = -(1/2) gamma_5 Sigma_{mu nu} p^nu via the dual-generator identity"),
    ("pauli_lubanski", "dirac.covariance", "W transforms as a covector up to conjugation by the element"),
    ("pauli_lubanski", "dirac.on_shell_reduction", "W_mu agrees with (1/2)(p_mu + m gamma_mu) gamma_5 exactly on the solution subspace and nowhere else"),
    ("pauli_lubanski", "dirac.transversality", "p^mu W_mu vanishes for every fixture momentum"),
    ("pauli_lubanski", "slash.transversality", "p^mu W_mu vanishes for every fixture momentum"),
    ("pauli_lubanski", "so3c.closed_form", "W_mu = Sigma_{mu nu} p^nu via complex three-vector self-duality"),
    ("pauli_lubanski", "so3c.covariance", "W transforms as a covector up to conjugation by the element"),
    ("pauli_lubanski", "so3c.transversality", "p^mu W_mu vanishes for every fixture momentum"),
    ("pauli_lubanski", "spinor2.transversality", "p^mu W_mu vanishes for every fixture momentum"),
    ("pauli_lubanski", "symtensor.transversality", "p^mu W_mu vanishes for every fixture momentum"),
    ("pauli_lubanski", "vector.covariance", "W transforms as a covector up to conjugation by the element"),
    ("pauli_lubanski", "vector.transversality", "p^mu W_mu vanishes for every fixture momentum"),
    ("pauli_lubanski", "weyl.casimir_scalar", "W² = -(3/4) p² I on and off the mass shell"),
    ("pauli_lubanski", "weyl.closed_form", "W_mu = -(1/2) Sigma_{mu nu} p^nu via two-spinor self-duality"),
    ("pauli_lubanski", "weyl.covariance", "W transforms as a covector up to conjugation by the element"),
    ("pauli_lubanski", "weyl.transversality", "p^mu W_mu vanishes for every fixture momentum"),
    ("spectra", "dirac.casimir_spectrum", "kernel dimension of W² - c m² I over the candidate Casimir values"),
    ("spectra", "so3c.casimir_spectrum", "kernel dimension of W² - c m² I over the candidate Casimir values"),
    ("spectra", "symtensor.casimir_spectrum", "kernel dimension of W² - c m² I over the candidate Casimir values"),
    ("spectra", "vector.casimir_spectrum", "kernel dimension of W² - c m² I over the candidate Casimir values"),
    ("spectra", "weyl.casimir_spectrum", "kernel dimension of W² - c m² I over the candidate Casimir values"),
    ("structure", "dirac.casimir_split", "rotation/boost three-vector split: N² = -M² = (3/4)I, M·N = (3i/4) gamma^5, and M_k ± iN_k projects chirally"),
    ("structure", "dirac.clifford_anticommutator", "gamma matrices anticommute to twice the metric, all 16 pairs"),
    ("structure", "dirac.dual_generator_identity", "i e_{mu nu s t} Sigma^{s t} = 2 gamma_5 Sigma_{mu nu}, entrywise"),
    ("structure", "dirac.gamma5_consistency", "i·g0 g1 g2 g3 equals the upper-index chirality matrix; the lower-index variant is its negative and anticommutes with every gamma"),
    ("structure", "dirac.generator_antisymmetry", "generator table antisymmetric in its index pair"),
    ("structure", "dirac.invariant_pseudoscalar", "e_{mu nu s t} Sigma^{mu nu} Sigma^{s t} = 24 i gamma_5"),
    ("structure", "dirac.invariant_quadratic", "Sigma_{mu nu} Sigma^{mu nu} = -12 I"),
    ("structure", "dirac.lorentz_algebra_closure", "bracket of normalized generators closes on the metric pattern"),
    ("structure", "dirac.sigma_gamma_commutator", "[Sigma^{ab}, gamma^mu] = 2(g^{b mu} gamma^a - g^{a mu} gamma^b)"),
    ("structure", "dirac.sigma_sigma_commutator", "sigma commutators close with structure factor two, all pairs"),
    ("structure", "slash.action_on_gamma", "the conjugation action rotates slash vectors like four-vectors"),
    ("structure", "slash.generator_antisymmetry", "generator table antisymmetric in its index pair"),
    ("structure", "slash.lorentz_algebra_closure", "bracket of normalized generators closes on the metric pattern"),
    ("structure", "so3c.generator_antisymmetry", "generator table antisymmetric in its index pair"),
    ("structure", "so3c.j_infinitesimal_transform", "m^{ab} J_p + J_p (m^{ab})ᵀ = (Sigma^{ab})ᵀ_{pq} J_q"),
    ("structure", "so3c.lorentz_algebra_closure", "bracket of normalized generators closes on the metric pattern"),
    ("structure", "so3c.rotation_generator_algebra", "[s_p, s_q] = e_{pqr} s_r, s_k^3 = -s_k, and s_1²+s_2²+s_3² = -2I"),
    ("structure", "so3c.self_duality", "2i Sigma^{mu nu} = e^{mu nu s t} Sigma_{s t} on complex three-vectors"),
    ("structure", "spinor2.action_table", "conjugation on sigma·F matches the complex three-vector table; the identity component is inert"),
    ("structure", "spinor2.generator_antisymmetry", "generator table antisymmetric in its index pair"),
    ("structure", "spinor2.lorentz_algebra_closure", "bracket of normalized generators closes on the metric pattern"),
    ("structure", "symtensor.generator_antisymmetry", "generator table antisymmetric in its index pair"),
    ("structure", "symtensor.generator_restriction", "ten-coordinate generators agree with the unrestricted tensor action"),
    ("structure", "symtensor.lorentz_algebra_closure", "bracket of normalized generators closes on the metric pattern"),
    ("structure", "symtensor.projector_identity", "packing then unpacking ten symmetric coordinates is the identity"),
    ("structure", "vector.generator_antisymmetry", "generator table antisymmetric in its index pair"),
    ("structure", "vector.lorentz_algebra_closure", "bracket of normalized generators closes on the metric pattern"),
    ("structure", "vector.metric_compatibility", "fundamental generators are antisymmetric with respect to the metric"),
    ("structure", "weyl.generator_antisymmetry", "generator table antisymmetric in its index pair"),
    ("structure", "weyl.generator_table", "two-spinor generator table and its lowered form"),
    ("structure", "weyl.half_commutator", "(1/2)[Sigma^{ab}, Sigma^{cd}] closes on the metric pattern with reversed orientation relative to the bispinor table"),
    ("structure", "weyl.lorentz_algebra_closure", "bracket of normalized generators closes on the metric pattern"),
    ("structure", "weyl.self_duality", "e_{mu nu s t} Sigma^{s t} = 2i Sigma_{mu nu} on two-spinors, entrywise"),
    ("systems", "dirac_gamma.kernel_dim_invariance", "the solution count is unchanged under a proper orthochronous change of frame"),
    ("systems", "dirac_gamma.kernel_dimension", "on-shell solution count matches the spin content"),
    ("systems", "dirac_gamma.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "dirac_pl.kernel_dimension", "on-shell solution count matches the spin content"),
    ("systems", "dirac_pl.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "dirac_sigma.conjugate_rows", "the adjoint row system is solved exactly by u-dagger gamma^0"),
    ("systems", "dirac_sigma.kernel_dimension", "on-shell solution count matches the spin content"),
    ("systems", "dirac_sigma.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "einstein_linear.kernel_dim_invariance", "the solution count is unchanged under a proper orthochronous change of frame"),
    ("systems", "einstein_linear.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "einstein_linear.off_shell_kernel", "off the mass shell only the gauge directions survive"),
    ("systems", "fierz_pauli_final.kernel_dim_invariance", "the solution count is unchanged under a proper orthochronous change of frame"),
    ("systems", "fierz_pauli_final.kernel_dimension", "on-shell solution count matches the spin content"),
    ("systems", "fierz_pauli_final.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "fierz_pauli_final.solution_constraints", "massive spin-two solutions are transverse and traceless"),
    ("systems", "fierz_pauli_full.field_strength_cyclic", "the third-rank field strength of a symmetric amplitude sums to zero over cyclic index shifts"),
    ("systems", "fierz_pauli_full.kernel_dimension", "on-shell solution count matches the spin content"),
    ("systems", "fierz_pauli_full.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "fierz_pauli_full.operator_normalization", "the literal field-strength assembly equals twice the divergence-and-trace form at every probed momentum and mass"),
    ("systems", "fierz_pauli_full.solution_constraints", "massive spin-two solutions are transverse and traceless"),
    ("systems", "fierz_pauli_full.third_rank_self_duality", "the self-dual third-rank combination reproduces itself under both dual contractions over its antisymmetric pair"),
    ("systems", "fierz_pauli_gauge.kernel_dimension", "on-shell solution count matches the spin content"),
    ("systems", "fierz_pauli_gauge.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "fierz_pauli_gauge.solution_constraints", "massive spin-two solutions are transverse and traceless"),
    ("systems", "maxwell_curl_div.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "maxwell_curl_div.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "maxwell_laport.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "maxwell_laport.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "maxwell_quaternion.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "maxwell_quaternion.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "maxwell_so3c.kernel_dim_invariance", "the solution count is unchanged under a proper orthochronous change of frame"),
    ("systems", "maxwell_so3c.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "maxwell_so3c.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "maxwell_spinor.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "maxwell_spinor.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "maxwell_tensor.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "maxwell_tensor.off_shell_kernel", "off the mass shell only the gauge directions survive"),
    ("systems", "maxwell_tensor.self_duality", "Q = F - (i/2) eF reproduces itself under both dual contractions"),
    ("systems", "proca.factored_form", "the vector system splits into a Klein-Gordon part plus the transversality constraint with the same solutions"),
    ("systems", "proca.kernel_dim_invariance", "the solution count is unchanged under a proper orthochronous change of frame"),
    ("systems", "proca.kernel_dimension", "on-shell solution count matches the spin content"),
    ("systems", "proca.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "proca.transversality", "massive vector solutions satisfy p·A = 0"),
    ("systems", "weyl_compact.kernel_dim_invariance", "the solution count is unchanged under a proper orthochronous change of frame"),
    ("systems", "weyl_compact.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "weyl_compact.off_shell_kernel", "off the mass shell the system forces the zero field"),
    ("systems", "weyl_sigma.kernel_dimension", "light-cone solution count matches the helicity content"),
    ("systems", "weyl_sigma.off_shell_kernel", "off the mass shell the system forces the zero field"),
];

/// Descriptor lookup for the explain command; check ids are globally
/// unique across suites.
pub fn describe_check(check_id: &str) -> Option<(&'static str, &'static str, &'static str)> {
    CHECK_DESCRIPTORS
        .iter()
        .copied()
        .find(|(_, id, _)| *id == check_id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::by_name(s.name()), Some(s));
        }
        assert_eq!(Suite::by_name("nonsense"), None);
    }

    #[test]
    fn empty_selection_means_all_and_order_is_canonical() {
        let all = resolve_suites(&[]).unwrap();
        assert_eq!(all, Suite::ALL.to_vec());
        let picked = resolve_suites(&[
            "identities".to_owned(),
            "structure".to_owned(),
            "identities".to_owned(),
        ])
        .unwrap();
        assert_eq!(picked, vec![Suite::Structure, Suite::Identities]);
        assert!(matches!(
            resolve_suites(&["bogus".to_owned()]),
            Err(ConfigError::UnknownSuite(_))
        ));
    }

    #[test]
    fn fail_fast_truncates_at_the_first_failure() {
        use crate::report::CheckBuilder;
        let batch = vec![
            CheckBuilder::new("s", "a", "r").verdict(true),
            CheckBuilder::new("s", "b", "r").verdict(false),
            CheckBuilder::new("s", "c", "r").verdict(true),
        ];
        let mut records = Vec::new();
        assert!(append_until_failure(&mut records, batch));
        assert_eq!(records.len(), 2);
        assert_eq!(records[1].check_id, "b");
    }

    #[test]
    fn override_classification_buckets_by_shell() {
        let dir = std::env::temp_dir().join("wavekernel_override_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("fixtures.json");
        std::fs::write(
            &path,
            r#"[
                {"components": ["3", "1", "2", "0"], "mass_squared": "4"},
                {"components": ["1", "0", "0", "1"], "mass_squared": "0"},
                {"components": ["1", "1", "1", "0"], "mass_squared": "4"}
            ]"#,
        )
        .unwrap();
        let set = load_fixture_overrides(path.to_str().unwrap()).unwrap();
        assert_eq!(set.massive.len(), 1);
        assert_eq!(set.massless.len(), 1);
        assert_eq!(set.off_shell.len(), 1);
        assert_eq!(set.massive[0].mass, rat(2, 1));

        std::fs::write(
            &path,
            r#"[{"components": ["1", "0", "0", "0"], "mass_squared": "2"}]"#,
        )
        .unwrap();
        let err = load_fixture_overrides(path.to_str().unwrap()).unwrap_err();
        assert!(matches!(err, ConfigError::InvalidFixture(_)));

        std::fs::write(
            &path,
            r#"[{"components": ["2", "0", "0", "0"], "mass_squared": "4"}]"#,
        )
        .unwrap();
        let err = load_fixture_overrides(path.to_str().unwrap()).unwrap_err();
        assert!(err.to_string().contains("off-shell"));
    }

    #[test]
    fn descriptor_table_matches_the_emitted_checks() {
        let plan = resolve(&SuiteConfig::default()).unwrap();
        let doc = run(&plan);
        assert!(doc.all_passed());
        let emitted: BTreeSet<(String, String)> = doc
            .checks
            .iter()
            .map(|c| (c.suite.clone(), c.check_id.clone()))
            .collect();
        let declared: BTreeSet<(String, String)> = CHECK_DESCRIPTORS
            .iter()
            .map(|(s, id, _)| (s.to_string(), id.to_string()))
            .collect();
        assert_eq!(emitted, declared);
        let mut sorted = CHECK_DESCRIPTORS.to_vec();
        sorted.sort();
        assert_eq!(sorted.as_slice(), CHECK_DESCRIPTORS.as_slice());
    }
}
