use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::{GaussianRational, Polynomial};

/// Polynomial vector field `Σ X_j ∂/∂z_j` on ℂⁿ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    n: usize,
    components: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        for c in &components {
            Error::check_dim(n, c.nvars())?;
        }
        Ok(Self { n, components })
    }

    /// `∂/∂z_j` (0-based `j`).
    pub fn coordinate(n: usize, j: usize) -> Self {
        let components = (0..n)
            .map(|i| {
                if i == j {
                    Polynomial::one(n)
                } else {
                    Polynomial::zero(n)
                }
            })
            .collect();
        Self { n, components }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            n: self.n,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Error::check_dim(self.n, other.n)?;
        Ok(Self {
            n: self.n,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

/// The radial (Euler) field `R = Σ z_j ∂/∂z_j`.
pub fn radial_field(n: usize) -> VectorField {
    assert!(n >= 1, "radial field needs n >= 1");
    VectorField {
        n,
        components: (0..n).map(|j| Polynomial::var(n, j)).collect(),
    }
}

/// Polynomial map `ℂᵖ → ℂⁿ`, `w ↦ (φ_1(w), …, φ_n(w))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolynomialMap {
    source: usize,
    components: Vec<Polynomial>,
}

impl PolynomialMap {
    pub fn new(source: usize, components: Vec<Polynomial>) -> Result<Self> {
        for c in &components {
            Error::check_dim(source, c.nvars())?;
        }
        Ok(Self { source, components })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            source: n,
            components: (0..n).map(|j| Polynomial::var(n, j)).collect(),
        }
    }

    /// Linear map `w ↦ M·w`, with `M` given row by row (target × source).
    pub fn linear(source: usize, rows: &[Vec<GaussianRational>]) -> Result<Self> {
        let components = rows
            .iter()
            .map(|row| {
                Error::check_dim(source, row.len())?;
                Ok(row
                    .iter()
                    .enumerate()
                    .fold(Polynomial::zero(source), |acc, (j, c)| {
                        if c.is_zero() {
                            acc
                        } else if c.is_one() {
                            &acc + &Polynomial::var(source, j)
                        } else {
                            &acc + &Polynomial::var(source, j).scale(c)
                        }
                    }))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { source, components })
    }

    pub fn source_dim(&self) -> usize {
        self.source
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }
}
