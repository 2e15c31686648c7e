//! Seeded generators for random polynomial data.

use rand::Rng;

use super::{GaussianRational, Monomial, Polynomial};

/// Gaussian integer `a + bi` with `|a|, |b| ≤ bound`; real when `real_only`.
pub fn gaussian_int(rng: &mut impl Rng, bound: i64, real_only: bool) -> GaussianRational {
    let re = rng.random_range(-bound..=bound);
    let im = if real_only {
        0
    } else {
        rng.random_range(-bound..=bound)
    };
    GaussianRational::from_ints(re, im)
}

pub fn monomial(rng: &mut impl Rng, n: usize, degree: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..degree {
        e[rng.random_range(0..n)] += 1;
    }
    Monomial::new(e)
}

/// Up to `max_terms` terms of total degree `≤ max_degree` with small
/// Gaussian-integer coefficients. May return zero after cancellation.
pub fn polynomial(rng: &mut impl Rng, n: usize, max_degree: u32, max_terms: usize) -> Polynomial {
    let terms = rng.random_range(1..=max_terms.max(1));
    let mut p = Polynomial::zero(n);
    for _ in 0..terms {
        let d = rng.random_range(0..=max_degree);
        let m = monomial(rng, n, d);
        let real_only = rng.random_bool(0.5);
        let c = gaussian_int(rng, 5, real_only);
        p = &p + &Polynomial::term(m, c);
    }
    p
}

pub fn nonzero_polynomial(
    rng: &mut impl Rng,
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    loop {
        let p = polynomial(rng, n, max_degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Homogeneous polynomial of exactly the given degree (possibly zero).
pub fn homogeneous(rng: &mut impl Rng, n: usize, degree: u32, max_terms: usize) -> Polynomial {
    let terms = rng.random_range(1..=max_terms.max(1));
    let mut p = Polynomial::zero(n);
    for _ in 0..terms {
        let m = monomial(rng, n, degree);
        p = &p + &Polynomial::term(m, gaussian_int(rng, 5, false));
    }
    p
}
