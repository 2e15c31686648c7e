use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{GaussianRational, Polynomial};
use crate::error::{Error, Result};

/// Dense univariate polynomial over ℚ(i), coefficients in ascending degree.
///
/// No trailing zero coefficients; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Reads a one-variable [`Polynomial`] into dense form.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        Error::check_dim(1, p.nvars())?;
        let len = p.total_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![GaussianRational::zero(); len];
        for (m, c) in p.terms() {
            coeffs[m.exponents()[0] as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * x + c.to_complex64())
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let q = &r[top] * &lead_inv;
            let shift = top - dd;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                r[shift + k] -= &(c * &q);
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Ok(UniPoly::new(r))
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().expect("nonzero leading coefficient");
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Monic greatest common divisor (Euclid over the field ℚ(i)).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Newton interpolation through `(nodes[k], values[k])`; nodes distinct.
    pub fn interpolate(nodes: &[GaussianRational], values: &[GaussianRational]) -> Result<UniPoly> {
        Error::check_dim(nodes.len(), values.len())?;
        let n = nodes.len();
        // Divided differences in place.
        let mut dd = values.to_vec();
        for level in 1..n {
            for k in (level..n).rev() {
                let denom = &nodes[k] - &nodes[k - level];
                let inv = denom
                    .inv()
                    .ok_or_else(|| Error::InvalidArgument("repeated interpolation node".into()))?;
                dd[k] = &(&dd[k] - &dd[k - 1]) * &inv;
            }
        }
        // Expand the Newton form by Horner from the top coefficient down.
        let mut acc: Vec<GaussianRational> = Vec::new();
        for k in (0..n).rev() {
            // acc = acc · (x - nodes[k]) + dd[k]
            let mut next = vec![GaussianRational::zero(); acc.len() + 1];
            for (j, c) in acc.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= &(c * &nodes[k]);
            }
            next[0] += &dd[k];
            acc = next;
        }
        Ok(UniPoly::new(acc))
    }

    /// Complex roots as eigenvalues of the companion matrix.
    pub fn roots(&self) -> Vec<Complex64> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let c: Vec<Complex64> = self
            .coeffs
            .iter()
            .map(GaussianRational::to_complex64)
            .collect();
        let lead = c[deg];
        let mut m = DMatrix::<Complex64>::zeros(deg, deg);
        for i in 1..deg {
            m[(i, i - 1)] = Complex64::one();
        }
        for i in 0..deg {
            m[(i, deg - 1)] = -c[i] / lead;
        }
        let schur = m.schur();
        let t = schur.unpack().1;
        (0..deg).map(|i| t[(i, i)]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> GaussianRational {
        GaussianRational::from(v)
    }

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn gcd_detects_repeated_factor() {
        // (t-1)²(t+2) = t³ - 3t + 2
        let p = poly(&[2, -3, 0, 1]);
        let g = p.gcd(&p.derivative());
        assert_eq!(g, poly(&[-1, 1]));
        // (t-1)(t+2) is squarefree
        let s = poly(&[-2, 1, 1]);
        assert_eq!(s.gcd(&s.derivative()).degree(), Some(0));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::new(vec![q(3), GaussianRational::from_ints(0, 2), q(-1), q(5)]);
        let nodes: Vec<_> = (0..4).map(q).collect();
        let values: Vec<_> = nodes.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(&nodes, &values).unwrap(), p);
        // Extra nodes are harmless: the top coefficients come out zero.
        let nodes: Vec<_> = (0..7).map(q).collect();
        let values: Vec<_> = nodes.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(&nodes, &values).unwrap(), p);
    }

    #[test]
    fn companion_roots() {
        // (t - 2)(t + i)
        let p = UniPoly::new(vec![
            GaussianRational::from_ints(0, -2),
            GaussianRational::from_ints(-2, 1),
            q(1),
        ]);
        let mut roots = p.roots();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((roots[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((roots[1] - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        assert!(poly(&[5]).roots().is_empty());
    }

    #[test]
    fn remainder() {
        let p = poly(&[1, 0, 0, 1]); // t³ + 1
        let d = poly(&[1, 1]); // t + 1
        assert!(p.rem(&d).unwrap().is_zero());
        assert_eq!(poly(&[2, 0, 1]).rem(&d).unwrap(), poly(&[3]));
    }
}
