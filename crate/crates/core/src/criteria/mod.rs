//! Executable checks on polynomial one-forms.
//!
//! Symbolic checks are exact. [`transversality_sample`] is the one numeric
//! check; it reports margins rather than a bare verdict.

mod darboux;
mod integrability;
mod invariance;
mod isotropic;
mod singularity;
mod transversality;

pub use darboux::{darboux_form, darboux_form_check, pencil_check, PencilMember, PencilReport};
pub use integrability::{integrability_obstruction, radial_annihilation, Obstruction};
pub use invariance::{invariance_quotient, invariant_hypersurface};
pub use isotropic::{isotropic_dim_bound, Certificate, CertificateKind};
pub use singularity::{jacobian_at, simple_singularity};
pub use transversality::{
    tangency_margin, transversality_sample, TransversalityOptions, TransversalityReport,
};
