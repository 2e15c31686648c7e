//! Exact exterior calculus for polynomial differential one-forms on ℂⁿ.
//!
//! Coefficients live in the Gaussian rationals ℚ(i), so every symbolic
//! identity is decided by exact equality. Floating point appears only in
//! sphere sampling and in the root-guided path planner, and both re-check
//! their conclusions against exact data where it matters.
//!
//! Layout:
//!
//! * [`polyalg`]: Gaussian rationals, sparse multivariate polynomials,
//!   univariate helpers and the squarefreeness probe.
//! * [`linalg`]: small dense exact matrices (determinant, rank).
//! * [`extcalc`]: k-forms, vector fields, `d`, wedge, contraction, pullback.
//! * [`criteria`]: the checks (integrability, invariant hypersurfaces,
//!   transversality, simple singularities, isotropic dimension, Darboux form).
//! * [`models`]: skew matrices, Pfaffians, model one-forms, deformations and
//!   determinant-avoiding paths between nonsingular skew matrices.

pub mod criteria;
pub mod error;
pub mod extcalc;
pub mod linalg;
pub mod models;
pub mod polyalg;

pub use error::{Error, Result};
pub use extcalc::{KForm, PolynomialMap, VectorField};
pub use polyalg::{ComplexPoint, GaussianRational, Monomial, Polynomial};
