//! Model objects: skew matrices and their Pfaffians, the linear and
//! Poincaré–Dulac model one-forms, the `df + f·ν` family, radial
//! deformations, and determinant-avoiding paths between nonsingular skew
//! matrices.

mod deformation;
mod normal_forms;
mod path;
mod pfaffian;
mod skew;

pub use deformation::{radial_deformation, DeformationFamily};
pub use normal_forms::{omega_from_skew, omega_j, poincare_dulac, remark_family, remark_surface};
pub use path::{determinant_polynomial, skew_path, PathPlan, PATH_SLACK};
pub use pfaffian::{det_via_pfaffian, pfaffian};
pub use skew::{canonical_j, random_skew, SkewMatrix};
