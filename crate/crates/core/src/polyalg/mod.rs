//! Exact sparse polynomial arithmetic over the Gaussian rationals.

mod gaussian;
mod monomial;
mod polynomial;
mod probe;
pub mod random;
pub mod univariate;

pub(crate) use gaussian::ratio_to_f64;
pub use gaussian::GaussianRational;
pub use monomial::Monomial;
pub use polynomial::{ComplexPoint, Polynomial};
pub use probe::{squarefree_probe, SquarefreeVerdict, DEFAULT_PROBE_LINES};
pub use univariate::UniPoly;
