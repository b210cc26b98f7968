//! Metric conventions, the Levi-Civita symbol, momentum fixtures and
//! fundamental Lorentz transformations.
//!
//! Fixed conventions: metric diag(1,-1,-1,-1); e_{0123} = +1 (so the
//! upper-index symbol has e^{0123} = -1); plane waves carry e^{-ip·x},
//! so a derivative with a lower index becomes -i p_mu.

use num_traits::{One, Signed, Zero};

use crate::kernel;
use crate::matrix::Matrix;
use crate::scalar::{rat_int, Rational, Scalar};

pub const DIM: usize = 4;

/// Diagonal metric entry, +1 for the time index.
pub fn metric_sign(mu: usize) -> i64 {
    assert!(mu < DIM);
    if mu == 0 {
        1
    } else {
        -1
    }
}

pub fn metric_scalar(mu: usize) -> Scalar {
    Scalar::from_int(metric_sign(mu))
}

/// The metric as a matrix; equal to its own inverse.
pub fn metric() -> Matrix {
    Matrix::from_fn(DIM, DIM, |r, c| {
        if r == c {
            metric_scalar(r)
        } else {
            Scalar::zero()
        }
    })
}

/// Totally antisymmetric symbol with lower indices, e_{0123} = +1.
pub fn levi_civita_lower(mu: usize, nu: usize, sigma: usize, tau: usize) -> i64 {
    let idx = [mu, nu, sigma, tau];
    assert!(idx.iter().all(|&k| k < DIM));
    let mut sign = 1i64;
    let mut perm = idx;
    for i in 0..4 {
        for j in i + 1..4 {
            if perm[i] == perm[j] {
                return 0;
            }
            if perm[i] > perm[j] {
                perm.swap(i, j);
                sign = -sign;
            }
        }
    }
    sign
}

/// Upper-index symbol obtained by raising all four indices: the metric
/// contributes det g = -1, so e^{0123} = -1.
pub fn levi_civita_upper(mu: usize, nu: usize, sigma: usize, tau: usize) -> i64 {
    -levi_civita_lower(mu, nu, sigma, tau)
}

/// Three-index antisymmetric symbol on 1-based spatial labels,
/// e_{123} = +1.
pub fn levi_civita3(p: usize, q: usize, r: usize) -> i64 {
    assert!((1..=3).contains(&p) && (1..=3).contains(&q) && (1..=3).contains(&r));
    match (p, q, r) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Successors of a spatial axis in cyclic order: 1 -> (2,3) and so on.
pub fn cyclic_successors(axis: usize) -> (usize, usize) {
    assert!((1..=3).contains(&axis));
    let b = axis % 3 + 1;
    let c = b % 3 + 1;
    (b, c)
}

/// Exact square root of a nonnegative rational, when one exists.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let ns = num.sqrt();
    let ds = den.sqrt();
    if &(&ns * &ns) == num && &(&ds * &ds) == den {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// Error for ill-formed momentum or transformation data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("momentum square {actual} does not equal declared mass squared {declared}")]
    OffDeclaredShell { actual: String, declared: String },
    #[error("boost parameters must satisfy cosh^2 - sinh^2 = 1 with cosh >= 1")]
    InvalidBoost,
    #[error("rotation parameters must satisfy cos^2 + sin^2 = 1")]
    InvalidRotation,
    #[error("axis index must be 1, 2 or 3")]
    InvalidAxis,
}

/// A rational four-momentum with upper components and its exact square.
/// The square is stored as the sample's own shell value; a wave family
/// with mass m treats the sample as off-shell when square != m².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentumSample {
    upper: [Rational; 4],
    square: Rational,
}

impl MomentumSample {
    pub fn new(upper: [Rational; 4], declared_square: Rational) -> Result<Self, FixtureError> {
        let sq = minkowski_square(&upper);
        if sq != declared_square {
            return Err(FixtureError::OffDeclaredShell {
                actual: sq.to_string(),
                declared: declared_square.to_string(),
            });
        }
        Ok(Self { upper, square: sq })
    }

    pub fn from_ints(upper: [i64; 4]) -> Self {
        let comps = upper.map(rat_int);
        let square = minkowski_square(&comps);
        Self { upper: comps, square }
    }

    /// Upper component p^mu.
    pub fn p_upper(&self, mu: usize) -> Scalar {
        Scalar::from_rational(self.upper[mu].clone())
    }

    /// Lower component p_mu = g_{mu mu} p^mu.
    pub fn p_lower(&self, mu: usize) -> Scalar {
        Scalar::from_rational(&self.upper[mu] * rat_int(metric_sign(mu)))
    }

    pub fn upper_components(&self) -> &[Rational; 4] {
        &self.upper
    }

    /// p·p with the fixed metric.
    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn is_massless(&self) -> bool {
        self.square.is_zero()
    }

    /// Compact display such as `(3,1,2,0)`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.upper.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

fn minkowski_square(upper: &[Rational; 4]) -> Rational {
    let mut sq = &upper[0] * &upper[0];
    for c in &upper[1..] {
        sq -= c * c;
    }
    sq
}

/// A momentum paired with the wave-family mass it is meant to probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub sample: MomentumSample,
    pub mass: Rational,
}

impl Fixture {
    pub fn new(sample: MomentumSample, mass: Rational) -> Self {
        Self { sample, mass }
    }

    pub fn mass_squared(&self) -> Rational {
        &self.mass * &self.mass
    }

    /// True when the sample sits on this fixture's mass shell.
    pub fn on_shell(&self) -> bool {
        *self.sample.square() == self.mass_squared()
    }

    pub fn label(&self) -> String {
        format!("p={};m={}", self.sample.label(), self.mass)
    }
}

/// The default deterministic fixture lists.
#[derive(Debug, Clone)]
pub struct FixtureSet {
    /// On-shell massive samples with their masses.
    pub massive: Vec<Fixture>,
    /// Light-cone samples (mass zero).
    pub massless: Vec<Fixture>,
    /// Family/mass/momentum combinations with square != m².
    pub off_shell: Vec<Fixture>,
}

impl FixtureSet {
    pub fn default_set() -> Self {
        let massive = vec![
            Fixture::new(MomentumSample::from_ints([2, 0, 0, 0]), rat_int(2)),
            Fixture::new(MomentumSample::from_ints([3, 1, 2, 0]), rat_int(2)),
            Fixture::new(MomentumSample::from_ints([4, 2, 2, 2]), rat_int(2)),
            Fixture::new(MomentumSample::from_ints([1, 0, 0, 0]), rat_int(1)),
            Fixture::new(MomentumSample::from_ints([2, 1, 1, 1]), rat_int(1)),
        ];
        let massless = vec![
            Fixture::new(MomentumSample::from_ints([1, 0, 0, 1]), Rational::zero()),
            Fixture::new(MomentumSample::from_ints([3, 2, 2, 1]), Rational::zero()),
        ];
        let off_shell = vec![
            Fixture::new(MomentumSample::from_ints([1, 1, 1, 0]), rat_int(2)),
            Fixture::new(MomentumSample::from_ints([2, 1, 0, 0]), Rational::zero()),
        ];
        Self { massive, massless, off_shell }
    }

    /// All fixtures, massive then massless then off-shell.
    pub fn all(&self) -> Vec<&Fixture> {
        self.massive
            .iter()
            .chain(self.massless.iter())
            .chain(self.off_shell.iter())
            .collect()
    }

    /// The i-th massive fixture, cycling when fewer are declared.
    /// Callers rely on the bucket being non-empty, which the run
    /// configuration enforces.
    pub fn massive_probe(&self, i: usize) -> &Fixture {
        &self.massive[i % self.massive.len()]
    }

    /// The i-th massless fixture, cycling when fewer are declared.
    pub fn massless_probe(&self, i: usize) -> &Fixture {
        &self.massless[i % self.massless.len()]
    }

    /// The i-th off-shell fixture, cycling when fewer are declared.
    pub fn off_shell_probe(&self, i: usize) -> &Fixture {
        &self.off_shell[i % self.off_shell.len()]
    }

    /// An off-shell momentum-mass pair with nonzero mass, for the
    /// negative controls of massive families: the first declared
    /// off-shell fixture carrying a mass, else the first massive
    /// fixture shifted one unit off its own shell.
    pub fn off_shell_massive_pair(&self) -> (MomentumSample, Rational) {
        match self.off_shell.iter().find(|f| !f.mass.is_zero()) {
            Some(f) => (f.sample.clone(), f.mass.clone()),
            None => {
                let base = &self.massive[0];
                (base.sample.clone(), &base.mass + Rational::one())
            }
        }
    }

    /// Up to `limit` samples off the light cone (square != 0), used as
    /// zero-mass off-shell probes: declared off-shell samples first,
    /// then massive ones.
    pub fn non_lightlike_samples(&self, limit: usize) -> Vec<&MomentumSample> {
        let mut out = Vec::new();
        for f in self.off_shell.iter().chain(self.massive.iter()) {
            if out.len() == limit {
                break;
            }
            if !f.sample.square().is_zero() {
                out.push(&f.sample);
            }
        }
        out
    }
}

/// Rotation planes for the fundamental representation, named by the two
/// spatial axes they mix; the cyclic partner is the rotation axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationPlane {
    P12,
    P23,
    P31,
}

impl RotationPlane {
    /// The two mixed spatial indices (1-based).
    pub fn axes(self) -> (usize, usize) {
        match self {
            RotationPlane::P12 => (1, 2),
            RotationPlane::P23 => (2, 3),
            RotationPlane::P31 => (3, 1),
        }
    }

    /// The fixed rotation axis (1-based), cyclic partner of the plane.
    pub fn axis(self) -> usize {
        match self {
            RotationPlane::P12 => 3,
            RotationPlane::P23 => 1,
            RotationPlane::P31 => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RotationPlane::P12 => "12",
            RotationPlane::P23 => "23",
            RotationPlane::P31 => "31",
        }
    }
}

/// A real rational Lorentz matrix Λ^mu_nu, stored with the row as the
/// upper index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzMatrix {
    m: Matrix,
}

impl LorentzMatrix {
    pub fn identity() -> Self {
        Self { m: Matrix::identity(DIM) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    /// Boost mixing x^0 and x^axis with rational hyperbolic pair
    /// (cosh, sinh): Λ^0_0 = Λ^a_a = cosh, Λ^0_a = Λ^a_0 = -sinh.
    pub fn boost(axis: usize, cosh: &Rational, sinh: &Rational) -> Result<Self, FixtureError> {
        if !(1..=3).contains(&axis) {
            return Err(FixtureError::InvalidAxis);
        }
        if cosh * cosh - sinh * sinh != Rational::one() || cosh < &Rational::one() {
            return Err(FixtureError::InvalidBoost);
        }
        let mut m = Matrix::identity(DIM);
        m[(0, 0)] = Scalar::from_rational(cosh.clone());
        m[(axis, axis)] = Scalar::from_rational(cosh.clone());
        m[(0, axis)] = Scalar::from_rational(-sinh.clone());
        m[(axis, 0)] = Scalar::from_rational(-sinh.clone());
        Ok(Self { m })
    }

    /// Rotation in the given spatial plane with rational pair (cos, sin):
    /// for plane (a,b), Λ^a_a = Λ^b_b = cos, Λ^a_b = sin, Λ^b_a = -sin.
    pub fn rotation(plane: RotationPlane, cos: &Rational, sin: &Rational) -> Result<Self, FixtureError> {
        if cos * cos + sin * sin != Rational::one() {
            return Err(FixtureError::InvalidRotation);
        }
        let (a, b) = plane.axes();
        let mut m = Matrix::identity(DIM);
        m[(a, a)] = Scalar::from_rational(cos.clone());
        m[(b, b)] = Scalar::from_rational(cos.clone());
        m[(a, b)] = Scalar::from_rational(sin.clone());
        m[(b, a)] = Scalar::from_rational(-sin.clone());
        Ok(Self { m })
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self { m: self.m.mul(&rhs.m) }
    }

    /// Inverse via the metric: Λ⁻¹ = g Λᵀ g.
    pub fn inverse(&self) -> Self {
        let g = metric();
        Self { m: g.mul(&self.m.transpose()).mul(&g) }
    }

    pub fn det(&self) -> Scalar {
        kernel::det(&self.m)
    }

    /// ΛᵀgΛ = g, entrywise.
    pub fn preserves_metric(&self) -> bool {
        let g = metric();
        self.m.transpose().mul(&g).mul(&self.m) == g
    }

    pub fn is_proper_orthochronous(&self) -> bool {
        self.preserves_metric()
            && self.det() == Scalar::one()
            && !(self.m[(0, 0)].re() < &Rational::one())
    }

    /// Transforms upper momentum components; the square is preserved when
    /// the matrix preserves the metric.
    pub fn apply(&self, p: &MomentumSample) -> MomentumSample {
        let mut out = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (mu, slot) in out.iter_mut().enumerate() {
            let mut acc = Rational::zero();
            for nu in 0..DIM {
                acc += self.m[(mu, nu)].re() * &p.upper_components()[nu];
            }
            *slot = acc;
        }
        let square = minkowski_square(&out);
        MomentumSample { upper: out, square }
    }
}

/// Double-angle composition for boosts: squaring the group element turns
/// the half-angle pair into (cosh² + sinh², 2·cosh·sinh).
pub fn double_boost(cosh: &Rational, sinh: &Rational) -> (Rational, Rational) {
    (cosh * cosh + sinh * sinh, rat_int(2) * cosh * sinh)
}

/// Double-angle composition for rotations: (cos² - sin², 2·cos·sin).
pub fn double_rotation(cos: &Rational, sin: &Rational) -> (Rational, Rational) {
    (cos * cos - sin * sin, rat_int(2) * cos * sin)
}

/// Checks e_{μνστ} Λ^μ_λ Λ^ν_κ Λ^σ_ρ Λ^τ_χ = det(Λ)·e_{λκρχ} over all
/// 256 right-hand index tuples; returns the first failing tuple.
pub fn levi_civita_transform_residual(l: &LorentzMatrix) -> Option<[usize; 4]> {
    let d = l.det();
    for lam in 0..DIM {
        for kap in 0..DIM {
            for rho in 0..DIM {
                for chi in 0..DIM {
                    let mut lhs = Scalar::zero();
                    for mu in 0..DIM {
                        for nu in 0..DIM {
                            for sig in 0..DIM {
                                for tau in 0..DIM {
                                    let e = levi_civita_lower(mu, nu, sig, tau);
                                    if e == 0 {
                                        continue;
                                    }
                                    let prod = &(&(&l.m[(mu, lam)] * &l.m[(nu, kap)])
                                        * &l.m[(sig, rho)])
                                        * &l.m[(tau, chi)];
                                    let term = prod.scale_int(e);
                                    lhs = &lhs + &term;
                                }
                            }
                        }
                    }
                    let rhs = d.scale_int(levi_civita_lower(lam, kap, rho, chi));
                    if lhs != rhs {
                        return Some([lam, kap, rho, chi]);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn metric_and_symbol_conventions() {
        assert_eq!(metric().mul(&metric()), Matrix::identity(4));
        assert_eq!(levi_civita_lower(0, 1, 2, 3), 1);
        assert_eq!(levi_civita_upper(0, 1, 2, 3), -1);
        assert_eq!(levi_civita_lower(1, 0, 2, 3), -1);
        assert_eq!(levi_civita_lower(0, 0, 2, 3), 0);
        // Full antisymmetry under one transposition, spot-checked across
        // index positions.
        assert_eq!(levi_civita_lower(2, 1, 0, 3), -levi_civita_lower(0, 1, 2, 3));
        assert_eq!(levi_civita_lower(3, 1, 2, 0), -levi_civita_lower(0, 1, 2, 3));
    }

    #[test]
    fn default_fixtures_sit_on_their_shells() {
        let set = FixtureSet::default_set();
        for fx in &set.massive {
            assert!(fx.on_shell(), "{} not on shell", fx.label());
            assert!(fx.sample.square() > &Rational::zero());
        }
        // At least one massive sample has every spatial component nonzero.
        assert!(set
            .massive
            .iter()
            .any(|fx| fx.sample.upper_components()[1..].iter().all(|c| !c.is_zero())));
        for fx in &set.massless {
            assert!(fx.on_shell());
            assert!(fx.sample.is_massless());
        }
        for fx in &set.off_shell {
            assert!(!fx.on_shell(), "{} unexpectedly on shell", fx.label());
        }
    }

    #[test]
    fn shell_validation_is_exact() {
        assert!(MomentumSample::new([rat_int(3), rat_int(1), rat_int(2), rat_int(0)], rat_int(4)).is_ok());
        assert!(matches!(
            MomentumSample::new([rat_int(3), rat_int(1), rat_int(2), rat_int(0)], rat_int(5)),
            Err(FixtureError::OffDeclaredShell { .. })
        ));
    }

    #[test]
    fn boost_and_rotation_validation() {
        assert!(LorentzMatrix::boost(1, &rat(5, 4), &rat(3, 4)).is_ok());
        assert!(LorentzMatrix::boost(1, &rat(5, 4), &rat(1, 2)).is_err());
        assert!(LorentzMatrix::boost(1, &rat(-5, 4), &rat(-3, 4)).is_err());
        assert!(LorentzMatrix::boost(0, &rat(5, 4), &rat(3, 4)).is_err());
        assert!(LorentzMatrix::rotation(RotationPlane::P12, &rat(3, 5), &rat(4, 5)).is_ok());
        assert!(LorentzMatrix::rotation(RotationPlane::P12, &rat(3, 5), &rat(3, 5)).is_err());
    }

    #[test]
    fn fundamental_matrices_are_proper_orthochronous() {
        let b = LorentzMatrix::boost(2, &rat(5, 4), &rat(3, 4)).unwrap();
        let r = LorentzMatrix::rotation(RotationPlane::P31, &rat(3, 5), &rat(4, 5)).unwrap();
        for l in [&b, &r, &b.compose(&r)] {
            assert!(l.is_proper_orthochronous());
            assert_eq!(l.compose(&l.inverse()).matrix(), LorentzMatrix::identity().matrix());
        }
    }

    #[test]
    fn double_angle_pairs() {
        let (c, s) = double_boost(&rat(5, 4), &rat(3, 4));
        assert_eq!((c, s), (rat(17, 8), rat(15, 8)));
        let (c, s) = double_rotation(&rat(3, 5), &rat(4, 5));
        assert_eq!((c, s), (rat(-7, 25), rat(24, 25)));
    }

    #[test]
    fn boost_moves_rest_momentum_along_its_axis() {
        let b = LorentzMatrix::boost(3, &rat(5, 4), &rat(3, 4)).unwrap();
        let rest = MomentumSample::from_ints([2, 0, 0, 0]);
        let moved = b.apply(&rest);
        assert_eq!(moved.square(), rest.square());
        assert_eq!(moved.p_upper(0), Scalar::from_ratio(5, 2));
        assert_eq!(moved.p_upper(3), Scalar::from_ratio(-3, 2));
    }

    #[test]
    fn levi_civita_transforms_with_unit_determinant() {
        let b = LorentzMatrix::boost(1, &rat(5, 4), &rat(3, 4)).unwrap();
        let r = LorentzMatrix::rotation(RotationPlane::P23, &rat(3, 5), &rat(4, 5)).unwrap();
        assert_eq!(levi_civita_transform_residual(&b.compose(&r)), None);
    }

    #[test]
    fn exact_sqrt_detects_perfect_squares() {
        assert_eq!(exact_sqrt(&rat(4, 1)), Some(rat(2, 1)));
        assert_eq!(exact_sqrt(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(exact_sqrt(&Rational::zero()), Some(Rational::zero()));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
        assert_eq!(exact_sqrt(&rat(-4, 1)), None);
    }
}
