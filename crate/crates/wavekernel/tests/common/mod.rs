//! Shared test support: a naive reference eliminator and a seeded matrix
//! corpus. The reference path is textbook Gauss-Jordan over the field,
//! with explicit divisions at every step; it shares no code with the
//! fraction-free eliminator it cross-checks.

use wavekernel::matrix::Matrix;
use wavekernel::scalar::{rat, Scalar};

/// Reference result: reduced row echelon data computed naively.
pub struct NaiveKernel {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub kernel_basis: Vec<Matrix>,
}

/// Gauss-Jordan elimination with pivot normalization and full clearing,
/// dividing by pivots as it goes. Returns rank, pivot columns and the
/// kernel basis read off the reduced form: one vector per free column,
/// unit coefficient at the free column itself.
pub fn naive_kernel(input: &Matrix) -> NaiveKernel {
    let mut m = input.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivot_columns = Vec::new();
    let mut pr = 0;
    for pc in 0..cols {
        let Some(hit) = (pr..rows).find(|&r| !m[(r, pc)].is_zero()) else {
            continue;
        };
        for c in 0..cols {
            let a = m[(pr, c)].clone();
            let b = m[(hit, c)].clone();
            m[(pr, c)] = b;
            m[(hit, c)] = a;
        }
        let pivot = m[(pr, pc)].clone();
        for c in 0..cols {
            m[(pr, c)] = &m[(pr, c)] / &pivot;
        }
        for r in 0..rows {
            if r == pr || m[(r, pc)].is_zero() {
                continue;
            }
            let factor = m[(r, pc)].clone();
            for c in 0..cols {
                let delta = &factor * &m[(pr, c)];
                m[(r, c)] = &m[(r, c)] - &delta;
            }
        }
        pivot_columns.push(pc);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    let rank = pivot_columns.len();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_columns.contains(c)).collect();
    let mut kernel_basis = Vec::new();
    for &f in &free {
        let mut x = vec![Scalar::zero(); cols];
        x[f] = Scalar::one();
        for (row, &pc) in pivot_columns.iter().enumerate() {
            // Reduced form: pivot row reads x[pc] + sum(free coeffs) = 0.
            x[pc] = -&m[(row, f)];
        }
        kernel_basis.push(Matrix::col(x));
    }
    NaiveKernel { rank, pivot_columns, kernel_basis }
}

/// Cofactor-expansion determinant, exponential but fine for the corpus
/// sizes; used as an independent check of the elimination determinant.
pub fn naive_det(m: &Matrix) -> Scalar {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Scalar::one();
    }
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let mut acc = Scalar::zero();
    for c in 0..n {
        if m[(0, c)].is_zero() {
            continue;
        }
        let minor = Matrix::from_fn(n - 1, n - 1, |r2, c2| {
            let cc = if c2 < c { c2 } else { c2 + 1 };
            m[(r2 + 1, cc)].clone()
        });
        let term = &m[(0, c)] * &naive_det(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Minimal deterministic linear congruential generator so the corpus is
/// identical on every run and every platform.
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform draw from `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

fn random_scalar(rng: &mut Lcg) -> Scalar {
    let num = rng.below(9) as i64 - 4;
    let den = rng.below(3) as i64 + 1;
    let re = rat(num, den);
    // Half the entries stay real to keep plenty of degenerate cases.
    if rng.below(2) == 0 {
        return Scalar::from_rational(re);
    }
    let inum = rng.below(9) as i64 - 4;
    let iden = rng.below(3) as i64 + 1;
    Scalar::new(re, rat(inum, iden))
}

/// Seeded corpus of 100 small matrices with rational and Gaussian
/// rational entries, including many rank-deficient ones.
pub fn seeded_corpus() -> Vec<Matrix> {
    let mut rng = Lcg::new(0x5eed_cafe_f00d_0001);
    let mut out = Vec::with_capacity(100);
    for k in 0..100 {
        let rows = rng.below(6) as usize + 1;
        let cols = rng.below(6) as usize + 1;
        let mut m = Matrix::from_fn(rows, cols, |_, _| random_scalar(&mut rng));
        // Every third matrix gets a forced dependency so kernels are
        // routinely nontrivial.
        if k % 3 == 0 && rows >= 2 {
            let src = rng.below(rows as u64) as usize;
            let dst = (src + 1) % rows;
            let factor = random_scalar(&mut rng);
            for c in 0..cols {
                m[(dst, c)] = &m[(src, c)] * &factor;
            }
        }
        out.push(m);
    }
    out
}
