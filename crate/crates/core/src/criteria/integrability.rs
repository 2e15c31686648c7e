use crate::error::Result;
use crate::extcalc::{radial_field, KForm};

/// The Frobenius obstruction `Ω ∧ dΩ` of a one-form.
#[derive(Clone, Debug, PartialEq)]
pub struct Obstruction {
    pub form: KForm,
    pub is_integrable: bool,
}

pub fn integrability_obstruction(omega: &KForm) -> Result<Obstruction> {
    omega.expect_degree(1)?;
    let form = omega.wedge(&omega.exterior_derivative())?;
    let is_integrable = form.is_zero();
    Ok(Obstruction {
        form,
        is_integrable,
    })
}

/// `Ω · R == 0` for the radial field `R`. When true, `Ker Ω` is transverse
/// to every sphere centred at the origin away from the singular set.
pub fn radial_annihilation(omega: &KForm) -> Result<bool> {
    omega.expect_degree(1)?;
    Ok(omega.contract(&radial_field(omega.n()))?.is_zero())
}
