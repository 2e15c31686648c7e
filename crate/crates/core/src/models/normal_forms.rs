use num_traits::Zero;

use super::SkewMatrix;
use crate::error::{Error, Result};
use crate::extcalc::{KForm, VectorField};
use crate::polyalg::{GaussianRational, Polynomial};

/// `Ω_A = Σ_{i,j} a_ij z_i dz_j`.
pub fn omega_from_skew(a: &SkewMatrix) -> KForm {
    KForm::from_linear_matrix(a.matrix()).expect("square matrix")
}

/// The canonical model `Σ_{j=1}^m (z_{2j-1} dz_{2j} - z_{2j} dz_{2j-1})` on ℂ^{2m}.
///
/// This is `Ω_A` for `A = J(2m)ᵀ`; see [`omega_from_skew`].
pub fn omega_j(m: usize) -> KForm {
    assert!(m >= 1, "omega_j needs m >= 1");
    let n = 2 * m;
    let mut coeffs = vec![Polynomial::zero(n); n];
    for j in 0..m {
        let (odd, even) = (2 * j, 2 * j + 1);
        coeffs[even] = Polynomial::var(n, odd);
        coeffs[odd] = -Polynomial::var(n, even);
    }
    KForm::one_form(coeffs).expect("consistent dimensions")
}

/// The Poincaré–Dulac model on ℂ^{2m} and its annihilating field:
///
/// `Ω_(ℓ) = Σ_j [z_{2j-1} dz_{2j} - (ℓ_j z_{2j} + z_{2j-1}^{ℓ_j}) dz_{2j-1}]`,
/// `ξ_(ℓ) = Σ_j [z_{2j-1} ∂/∂z_{2j-1} + (ℓ_j z_{2j} + z_{2j-1}^{ℓ_j}) ∂/∂z_{2j}]`.
pub fn poincare_dulac(ell: &[u32]) -> Result<(KForm, VectorField)> {
    if ell.is_empty() {
        return Err(Error::InvalidArgument("ℓ must be nonempty".into()));
    }
    if let Some(bad) = ell.iter().find(|&&l| l == 0) {
        return Err(Error::InvalidArgument(format!(
            "ℓ entries must be positive, got {bad}"
        )));
    }
    let n = 2 * ell.len();
    let mut form = vec![Polynomial::zero(n); n];
    let mut field = vec![Polynomial::zero(n); n];
    for (j, &l) in ell.iter().enumerate() {
        let (odd, even) = (2 * j, 2 * j + 1);
        let x = Polynomial::var(n, odd);
        let y = Polynomial::var(n, even);
        let g = &y.scale(&GaussianRational::from(l as i64)) + &x.pow(l);
        form[even] = x.clone();
        form[odd] = -&g;
        field[odd] = x;
        field[even] = g;
    }
    Ok((KForm::one_form(form)?, VectorField::new(field)?))
}

/// `f = ½ Σ_{j=1}^{2m} z_j²`.
pub fn remark_surface(m: usize) -> Polynomial {
    let n = 2 * m;
    let half = GaussianRational::from_ratio(1, 2);
    (0..n).fold(Polynomial::zero(n), |acc, j| {
        let z = Polynomial::var(n, j);
        &acc + &(&z * &z).scale(&half)
    })
}

/// `Ω = df + f·ν` with `f = ½ Σ z_j²` on ℂ^{2m}.
///
/// `ν` must have coefficients of degree at most one and `dν(0)` must be
/// nondegenerate. Then `{f = 0}` is invariant, the origin is a simple
/// singularity, and `Ω` fails to be integrable wherever `f ≠ 0`.
pub fn remark_family(nu: &KForm, m: usize) -> Result<KForm> {
    nu.expect_degree(1)?;
    Error::check_dim(2 * m, nu.n())?;
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    if nu.coefficient_degree().unwrap_or(0) > 1 {
        return Err(Error::InvalidArgument(
            "ν must have coefficients of degree at most 1".into(),
        ));
    }
    let origin = vec![GaussianRational::zero(); 2 * m];
    let rank = nu.exterior_derivative().two_form_matrix_at(&origin)?.rank();
    if rank != 2 * m {
        return Err(Error::InvalidArgument(format!(
            "dν(0) is degenerate (rank {rank} < {})",
            2 * m
        )));
    }
    let f = remark_surface(m);
    let df = KForm::function(f.clone()).exterior_derivative();
    df.checked_add(&nu.mul_function(&f)?)
}
