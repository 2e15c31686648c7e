use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extcalc::KForm;
use crate::polyalg::{ComplexPoint, Polynomial};

pub const DEFAULT_SAMPLES: usize = 1024;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

// Samples per random stream. Fixed so the report does not depend on how
// many threads rayon happens to use.
const CHUNK: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransversalityOptions {
    pub radius: f64,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for TransversalityOptions {
    fn default() -> Self {
        Self {
            radius: 1.0,
            samples: DEFAULT_SAMPLES,
            seed: 0,
            tol: DEFAULT_TOLERANCE,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransversalityReport {
    pub radius: f64,
    pub samples: usize,
    pub tol: f64,
    /// Sampled points where `Ker Ω(z)` lies inside the tangent space of the sphere.
    pub tangent_points: Vec<ComplexPoint>,
    /// Smallest normalized margin over non-singular samples (0 if there are none).
    pub min_margin: f64,
    /// Samples where `Ω(z)` vanished numerically.
    pub singular_hits: usize,
    pub dimension_parity_ok: bool,
}

impl TransversalityReport {
    pub fn transverse(&self) -> bool {
        self.tangent_points.is_empty() && self.singular_hits == 0
    }
}

/// Normalized distance of the covector `ω(z)` from the complex line through
/// `conj(z)`: the largest 2×2 minor `|ω_j z̄_k - ω_k z̄_j|` divided by
/// `‖ω(z)‖·‖z‖`.
///
/// The complex hyperplane `Ker ω(z)` sits inside the real tangent hyperplane
/// `{v : Re Σ v_j z̄_j = 0}` of the sphere exactly when `ω(z)` is a complex
/// multiple of `z̄`, i.e. when every minor vanishes. Returns `None` when
/// `ω(z)` is numerically zero (a singular point, not a tangency).
pub fn tangency_margin(coeffs: &[Polynomial], z: &ComplexPoint, tol: f64) -> Result<Option<f64>> {
    let w = coeffs
        .iter()
        .map(|f| f.evaluate(z))
        .collect::<Result<Vec<Complex64>>>()?;
    Ok(margin_of(&w, z.coords(), tol))
}

fn margin_of(w: &[Complex64], z: &[Complex64], tol: f64) -> Option<f64> {
    let w_norm = w.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let z_norm = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if w_norm < tol || z_norm == 0.0 {
        return None;
    }
    let mut best = 0.0f64;
    for j in 0..w.len() {
        for k in j + 1..w.len() {
            let minor = w[j] * z[k].conj() - w[k] * z[j].conj();
            best = best.max(minor.norm());
        }
    }
    Some(best / (w_norm * z_norm))
}

fn sphere_point(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
            .collect();
        let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|c| c * (radius / norm)).collect();
        }
    }
}

struct ChunkResult {
    tangent: Vec<ComplexPoint>,
    min_margin: f64,
    singular: usize,
}

/// Samples uniform points on the sphere `|z| = radius` and tests each for
/// tangency of `Ker Ω`.
///
/// Chunk `c` of the samples draws from ChaCha stream `c` of `seed`, so the
/// report is a deterministic function of the options alone.
pub fn transversality_sample(
    omega: &KForm,
    opts: &TransversalityOptions,
) -> Result<TransversalityReport> {
    omega.expect_degree(1)?;
    let n = omega.n();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "transversality needs n >= 2, got {n}"
        )));
    }
    if !(opts.radius > 0.0 && opts.radius.is_finite()) {
        return Err(Error::InvalidArgument("radius must be positive".into()));
    }
    if opts.samples == 0 {
        return Err(Error::InvalidArgument("samples must be positive".into()));
    }
    let coeffs = omega.one_form_coefficients()?;
    let chunks = opts.samples.div_ceil(CHUNK);
    let results: Vec<ChunkResult> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(c as u64);
            let count = CHUNK.min(opts.samples - c * CHUNK);
            let mut out = ChunkResult {
                tangent: Vec::new(),
                min_margin: f64::INFINITY,
                singular: 0,
            };
            for _ in 0..count {
                let z = ComplexPoint::new(sphere_point(&mut rng, n, opts.radius))?;
                match tangency_margin(&coeffs, &z, opts.tol)? {
                    None => out.singular += 1,
                    Some(m) => {
                        out.min_margin = out.min_margin.min(m);
                        if m < opts.tol {
                            out.tangent.push(z);
                        }
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    let mut tangent_points = Vec::new();
    let mut min_margin = f64::INFINITY;
    let mut singular_hits = 0;
    for r in results {
        tangent_points.extend(r.tangent);
        min_margin = min_margin.min(r.min_margin);
        singular_hits += r.singular;
    }
    if !min_margin.is_finite() {
        min_margin = 0.0;
    }
    Ok(TransversalityReport {
        radius: opts.radius,
        samples: opts.samples,
        tol: opts.tol,
        tangent_points,
        min_margin,
        singular_hits,
        dimension_parity_ok: n.is_multiple_of(2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize, j: usize) -> Polynomial {
        Polynomial::var(n, j)
    }

    #[test]
    fn radial_covector_is_tangent() {
        // Ω = z1 dz1 + z2 dz2 at (1, 0): ω(z) = (1, 0) = conj(z)
        let coeffs = vec![z(2, 0), z(2, 1)];
        let p =
            ComplexPoint::new(vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
        let m = tangency_margin(&coeffs, &p, 1e-9).unwrap().unwrap();
        assert!(m < 1e-12);
    }

    #[test]
    fn singular_points_are_not_tangencies() {
        let coeffs = vec![z(2, 0), Polynomial::zero(2)];
        let p =
            ComplexPoint::new(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]).unwrap();
        assert_eq!(tangency_margin(&coeffs, &p, 1e-9).unwrap(), None);
    }

    #[test]
    fn odd_dimension_flags_parity() {
        let w = KForm::one_form(vec![-z(3, 1), z(3, 0), z(3, 2)]).unwrap();
        let r = transversality_sample(
            &w,
            &TransversalityOptions {
                samples: 64,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!r.dimension_parity_ok);
    }

    #[test]
    fn bad_options_are_rejected() {
        let w = KForm::one_form(vec![-z(2, 1), z(2, 0)]).unwrap();
        let bad_radius = TransversalityOptions {
            radius: 0.0,
            ..Default::default()
        };
        assert!(transversality_sample(&w, &bad_radius).is_err());
        let no_samples = TransversalityOptions {
            samples: 0,
            ..Default::default()
        };
        assert!(transversality_sample(&w, &no_samples).is_err());
        let line = KForm::one_form(vec![z(1, 0)]).unwrap();
        assert!(transversality_sample(&line, &TransversalityOptions::default()).is_err());
    }

    #[test]
    fn report_is_independent_of_thread_count() {
        let w = KForm::one_form(vec![
            z(2, 0),
            z(2, 1).scale(&crate::polyalg::GaussianRational::from_ints(0, 1)),
        ])
        .unwrap();
        let opts = TransversalityOptions {
            samples: 1000,
            seed: 7,
            ..Default::default()
        };
        let a = transversality_sample(&w, &opts).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let b = pool.install(|| transversality_sample(&w, &opts).unwrap());
        assert_eq!(a, b);
    }
}
