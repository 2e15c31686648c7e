use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::univariate::UniPoly;
use super::{GaussianRational, Polynomial};
use crate::error::{Error, Result};

/// Outcome of [`squarefree_probe`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquarefreeVerdict {
    ProbablyReduced,
    NotReduced,
}

pub const DEFAULT_PROBE_LINES: usize = 8;

const LINE_COEFF_BOUND: i64 = 97;

/// Probabilistic reducedness test.
///
/// Restricts `f` to `trials` random affine lines `t ↦ a + t·b` with
/// Gaussian-integer data and checks each restriction for a repeated root via
/// `gcd(g, g')`. A repeated factor of `f` shows up on every line that meets
/// its zero set; a squarefree `f` produces a false alarm only when a line is
/// tangent to `{f = 0}` or passes through its singular locus.
pub fn squarefree_probe(f: &Polynomial, trials: usize, seed: u64) -> Result<SquarefreeVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = f.nvars();
    let t = Polynomial::var(1, 0);
    for _ in 0..trials {
        let line: Vec<Polynomial> = (0..n)
            .map(|_| {
                let a = random_gaussian_int(&mut rng, LINE_COEFF_BOUND);
                let b = random_gaussian_int(&mut rng, LINE_COEFF_BOUND);
                &Polynomial::constant(1, a) + &t.scale(&b)
            })
            .collect();
        let g = UniPoly::from_polynomial(&f.compose(&line)?)?;
        if g.degree().unwrap_or(0) < 2 {
            continue;
        }
        if g.gcd(&g.derivative()).degree().unwrap_or(0) > 0 {
            return Ok(SquarefreeVerdict::NotReduced);
        }
    }
    Ok(SquarefreeVerdict::ProbablyReduced)
}

fn random_gaussian_int(rng: &mut impl Rng, bound: i64) -> GaussianRational {
    GaussianRational::from_ints(
        rng.random_range(-bound..=bound),
        rng.random_range(-bound..=bound),
    )
}
