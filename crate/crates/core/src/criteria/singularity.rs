use crate::error::{Error, Result};
use crate::extcalc::KForm;
use crate::linalg::ExactMatrix;
use crate::polyalg::GaussianRational;

/// `(∂f_j/∂z_k)(p)` for `Ω = Σ f_j dz_j`, exact.
pub fn jacobian_at(omega: &KForm, point: &[GaussianRational]) -> Result<ExactMatrix> {
    let coeffs = omega.one_form_coefficients()?;
    Error::check_dim(omega.n(), point.len())?;
    let n = omega.n();
    let mut rows = Vec::with_capacity(n);
    for f in &coeffs {
        let row = (0..n)
            .map(|k| f.partial_derivative(k)?.eval_exact(point))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if n == 0 {
        return Ok(ExactMatrix::zeros(0, 0));
    }
    ExactMatrix::from_rows(rows)
}

/// Whether `p` is a simple singularity: `Ω(p) = 0` and the Jacobian of the
/// coefficients at `p` is nonsingular.
pub fn simple_singularity(omega: &KForm, point: &[GaussianRational]) -> Result<bool> {
    let coeffs = omega.one_form_coefficients()?;
    Error::check_dim(omega.n(), point.len())?;
    for f in &coeffs {
        if !num_traits::Zero::is_zero(&f.eval_exact(point)?) {
            return Err(Error::NotSingular);
        }
    }
    let det = jacobian_at(omega, point)?.det()?;
    Ok(!num_traits::Zero::is_zero(&det))
}
