use crate::error::{Error, Result};
use crate::extcalc::KForm;
use crate::polyalg::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    NoIntegralHypersurface,
    NotApplicable,
}

/// Bound on the dimension of integral manifolds through a point.
///
/// An integral manifold `L` of `Ω` satisfies `ι*Ω = 0`, hence `ι*dΩ = 0`:
/// its tangent spaces are isotropic for the 2-form `dΩ`. At a point where
/// `dΩ` has rank `2r` that caps `dim L` at `n - r`. Rank is lower
/// semicontinuous, so the same bound holds at smooth points of `L`
/// accumulating at `p`. A hypersurface needs `n - 1 ≤ n - r`, which fails
/// once `rank ≥ 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub rank_at_point: usize,
    pub dim_bound: usize,
}

impl Certificate {
    pub fn from_rank(n: usize, rank: usize) -> Self {
        debug_assert!(rank.is_multiple_of(2) && rank <= n);
        let dim_bound = n - rank / 2;
        let kind = if rank >= 4 {
            CertificateKind::NoIntegralHypersurface
        } else {
            CertificateKind::NotApplicable
        };
        Self {
            kind,
            rank_at_point: rank,
            dim_bound,
        }
    }

    pub fn fires(&self) -> bool {
        self.kind == CertificateKind::NoIntegralHypersurface
    }
}

pub fn isotropic_dim_bound(omega: &KForm, point: &[GaussianRational]) -> Result<Certificate> {
    omega.expect_degree(1)?;
    Error::check_dim(omega.n(), point.len())?;
    let s = omega.exterior_derivative().two_form_matrix_at(point)?;
    Ok(Certificate::from_rank(omega.n(), s.rank()))
}
