use crate::error::{Error, Result};
use crate::extcalc::KForm;
use crate::polyalg::Polynomial;

/// The 2-form `Ω ∧ df / f` when it is polynomial, `None` otherwise.
///
/// For reduced `f` this is polynomial exactly when `{f = 0}` is invariant
/// under `Ker Ω`. Reducedness is the caller's obligation;
/// [`squarefree_probe`](crate::polyalg::squarefree_probe) can check it
/// probabilistically.
pub fn invariance_quotient(omega: &KForm, f: &Polynomial) -> Result<Option<KForm>> {
    omega.expect_degree(1)?;
    Error::check_dim(omega.n(), f.nvars())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let df = KForm::function(f.clone()).exterior_derivative();
    let product = omega.wedge(&df)?;
    let mut quotient = Vec::new();
    for (idx, coeff) in product.terms() {
        match Polynomial::divides(f, coeff)? {
            Some(q) => quotient.push((idx.to_vec(), q)),
            None => return Ok(None),
        }
    }
    Ok(Some(KForm::from_terms(omega.n(), 2, quotient)?))
}

/// True iff every coefficient of `Ω ∧ df` is divisible by `f`.
pub fn invariant_hypersurface(omega: &KForm, f: &Polynomial) -> Result<bool> {
    Ok(invariance_quotient(omega, f)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::GaussianRational;

    fn z(n: usize, j: usize) -> Polynomial {
        Polynomial::var(n, j)
    }

    #[test]
    fn coordinate_line_of_rotation_form() {
        // Ω = x dy - y dx, f = y: Ω ∧ dy = -y dx∧dy
        let (x, y) = (z(2, 0), z(2, 1));
        let w = KForm::one_form(vec![-&y, x]).unwrap();
        let q = invariance_quotient(&w, &y).unwrap().unwrap();
        let want = KForm::from_terms(2, 2, vec![(vec![0, 1], -Polynomial::one(2))]).unwrap();
        assert_eq!(q, want);
    }

    #[test]
    fn j4_has_no_coordinate_hyperplane() {
        let w = KForm::one_form(vec![-z(4, 1), z(4, 0), -z(4, 3), z(4, 2)]).unwrap();
        assert!(!invariant_hypersurface(&w, &z(4, 0)).unwrap());
    }

    #[test]
    fn degenerate_surfaces_are_rejected() {
        let w = KForm::dz(2, 0);
        assert_eq!(
            invariant_hypersurface(&w, &Polynomial::zero(2)).unwrap_err(),
            Error::ZeroPolynomial
        );
        let c = Polynomial::constant(2, GaussianRational::from(3));
        assert_eq!(
            invariant_hypersurface(&w, &c).unwrap_err(),
            Error::ConstantPolynomial
        );
    }
}
