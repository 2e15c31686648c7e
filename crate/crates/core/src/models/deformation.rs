use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::extcalc::KForm;
use crate::polyalg::{GaussianRational, Polynomial};

/// The family `Ω^t = t⁻¹ Ω(t z) = Σ_ν t^(ν-1) ω_ν`, where `ω_ν` collects the
/// coefficient terms of degree `ν ≥ 1`.
///
/// `Ω^1 = Ω` and `Ω^0 = ω_1`, the linear part.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationFamily {
    base: KForm,
    components: Vec<(u32, KForm)>,
}

impl DeformationFamily {
    pub fn base(&self) -> &KForm {
        &self.base
    }

    pub fn components(&self) -> &[(u32, KForm)] {
        &self.components
    }

    pub fn linear_part(&self) -> KForm {
        self.components
            .iter()
            .find(|(nu, _)| *nu == 1)
            .map(|(_, w)| w.clone())
            .unwrap_or_else(|| KForm::zero(self.base.n(), 1))
    }

    pub fn evaluate_at(&self, t: &GaussianRational) -> KForm {
        let mut out = KForm::zero(self.base.n(), 1);
        for (nu, w) in &self.components {
            out = &out + &w.scale(&t.pow(nu - 1));
        }
        out
    }

    /// The whole family as one form on ℂⁿ⁺¹, with `t` the last coordinate and
    /// no `dt` terms.
    pub fn symbolic(&self) -> KForm {
        let n = self.base.n();
        let t = Polynomial::var(n + 1, n);
        let mut out = KForm::zero(n + 1, 1);
        for (nu, w) in &self.components {
            let scaled = w
                .extend_vars(n + 1)
                .mul_function(&t.pow(nu - 1))
                .expect("same dimension");
            out = &out + &scaled;
        }
        out
    }
}

pub fn radial_deformation(omega: &KForm) -> Result<DeformationFamily> {
    omega.expect_degree(1)?;
    if omega.has_constant_part() {
        return Err(Error::InvalidArgument(
            "Ω(0) must vanish: the form has constant coefficient terms".into(),
        ));
    }
    let n = omega.n();
    let mut parts: BTreeMap<u32, Vec<(Vec<usize>, Polynomial)>> = BTreeMap::new();
    for (idx, coeff) in omega.terms() {
        for (deg, piece) in coeff.homogeneous_components() {
            parts.entry(deg).or_default().push((idx.to_vec(), piece));
        }
    }
    let components = parts
        .into_iter()
        .map(|(deg, terms)| Ok((deg, KForm::from_terms(n, 1, terms)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DeformationFamily {
        base: omega.clone(),
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn z(n: usize, j: usize) -> Polynomial {
        Polynomial::var(n, j)
    }

    #[test]
    fn linear_forms_are_fixed() {
        let w = KForm::one_form(vec![-z(2, 1), z(2, 0)]).unwrap();
        let fam = radial_deformation(&w).unwrap();
        assert_eq!(fam.components().len(), 1);
        for t in [-3, 0, 1, 5] {
            assert_eq!(fam.evaluate_at(&GaussianRational::from(t)), w);
        }
    }

    #[test]
    fn two_components() {
        let w1 = KForm::one_form(vec![-z(2, 1), z(2, 0)]).unwrap();
        let w2 = KForm::one_form(vec![&z(2, 0) * &z(2, 1), Polynomial::zero(2)]).unwrap();
        let fam = radial_deformation(&(&w1 + &w2)).unwrap();
        let t = GaussianRational::from_ints(2, 1);
        assert_eq!(fam.evaluate_at(&t), &w1 + &w2.scale(&t));
        assert_eq!(fam.evaluate_at(&GaussianRational::zero()), w1);
        assert_eq!(fam.linear_part(), w1);
        assert_eq!(fam.evaluate_at(&GaussianRational::one()), &w1 + &w2);
    }

    #[test]
    fn constant_terms_are_rejected() {
        let w = KForm::one_form(vec![Polynomial::one(2), z(2, 0)]).unwrap();
        assert!(radial_deformation(&w).is_err());
    }
}
