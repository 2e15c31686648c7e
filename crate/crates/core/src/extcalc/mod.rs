//! Exterior algebra of polynomial differential forms on ℂⁿ.

mod field;
mod kform;

pub use field::{radial_field, PolynomialMap, VectorField};
pub use kform::KForm;

use crate::error::Result;

pub fn exterior_derivative(form: &KForm) -> KForm {
    form.exterior_derivative()
}

pub fn wedge(a: &KForm, b: &KForm) -> Result<KForm> {
    a.wedge(b)
}

pub fn contract(form: &KForm, x: &VectorField) -> Result<KForm> {
    form.contract(x)
}

pub fn pullback(form: &KForm, phi: &PolynomialMap) -> Result<KForm> {
    form.pullback(phi)
}
