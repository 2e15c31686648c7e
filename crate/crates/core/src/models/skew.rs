use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::polyalg::{random, GaussianRational};

/// A `2m × 2m` skew-symmetric matrix over ℚ(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewMatrix(ExactMatrix);

impl SkewMatrix {
    pub fn new(a: ExactMatrix) -> Result<Self> {
        Error::check_dim(a.rows(), a.cols())?;
        if a.rows() % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "skew matrix size must be even, got {}",
                a.rows()
            )));
        }
        if let Some((row, col)) = a.skew_violation() {
            return Err(Error::NotSkew { row, col });
        }
        Ok(Self(a))
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        Self::new(ExactMatrix::from_rows(rows)?)
    }

    /// Half the size.
    pub fn m(&self) -> usize {
        self.0.rows() / 2
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }

    pub fn det(&self) -> GaussianRational {
        self.0.det().expect("square")
    }

    /// `(1 - s)·self + s·other`.
    pub fn interpolate(&self, other: &SkewMatrix, s: &GaussianRational) -> Result<SkewMatrix> {
        let one_minus = &GaussianRational::one() - s;
        let a = self.0.scale(&one_minus).add(&other.0.scale(s))?;
        Ok(SkewMatrix(a))
    }

    /// `Mᵀ · self · M`, which is again skew.
    pub fn congruence(&self, m: &ExactMatrix) -> Result<SkewMatrix> {
        let a = m.transpose().mul(&self.0)?.mul(m)?;
        SkewMatrix::new(a)
    }
}

/// Block-diagonal `J(2m)` with `m` blocks `[[0, -1], [1, 0]]`.
pub fn canonical_j(m: usize) -> SkewMatrix {
    assert!(m >= 1, "J(2m) needs m >= 1");
    let mut a = ExactMatrix::zeros(2 * m, 2 * m);
    for j in 0..m {
        a[(2 * j, 2 * j + 1)] = -GaussianRational::one();
        a[(2 * j + 1, 2 * j)] = GaussianRational::one();
    }
    SkewMatrix(a)
}

const ENTRY_BOUND: i64 = 3;

/// Random skew matrix with small Gaussian-integer entries, deterministic in
/// `seed`. With `require_nonsingular` the draw repeats until `det ≠ 0`.
pub fn random_skew(m: usize, seed: u64, require_nonsingular: bool) -> SkewMatrix {
    assert!(m >= 1, "random_skew needs m >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * m;
    loop {
        let mut a = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = random::gaussian_int(&mut rng, ENTRY_BOUND, false);
                a[(j, i)] = -&v;
                a[(i, j)] = v;
            }
        }
        let s = SkewMatrix(a);
        if !require_nonsingular || !s.det().is_zero() {
            return s;
        }
    }
}
