use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::{PolynomialMap, VectorField};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::polyalg::{GaussianRational, Monomial, Polynomial};

/// A differential k-form `Σ_I f_I dz_I` on ℂⁿ with polynomial coefficients.
///
/// Keys are strictly increasing 0-based index tuples of length `k`; no stored
/// coefficient is zero. When `k > n` no such tuple exists and the form is
/// necessarily zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KForm {
    n: usize,
    k: usize,
    terms: BTreeMap<Vec<usize>, Polynomial>,
}

/// Sorts `idx` in place, returning the permutation sign, or `None` on a
/// repeated index.
fn canonicalize(idx: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    // insertion sort; k is tiny
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// Merges two increasing tuples; `None` when they share an index.
fn merge_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut inversions = 0usize;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                // b[j] jumps over the remaining a's
                inversions += a.len() - i;
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, inversions % 2 == 1))
}

impl KForm {
    pub fn zero(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            terms: BTreeMap::new(),
        }
    }

    /// A function viewed as a 0-form.
    pub fn function(p: Polynomial) -> Self {
        let mut f = Self::zero(p.nvars(), 0);
        if !p.is_zero() {
            f.terms.insert(Vec::new(), p);
        }
        f
    }

    /// `dz_j` (0-based).
    pub fn dz(n: usize, j: usize) -> Self {
        assert!(j < n, "dz index {j} out of range for {n}");
        let mut f = Self::zero(n, 1);
        f.terms.insert(vec![j], Polynomial::one(n));
        f
    }

    /// `Σ_j coeffs[j] dz_j`.
    pub fn one_form(coeffs: Vec<Polynomial>) -> Result<Self> {
        let n = coeffs.len();
        Self::from_terms(
            n,
            1,
            coeffs.into_iter().enumerate().map(|(j, c)| (vec![j], c)),
        )
    }

    /// Builds a k-form from arbitrary index tuples, canonicalizing order with
    /// the permutation sign and dropping tuples with a repeated index.
    pub fn from_terms<I>(n: usize, k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Polynomial)>,
    {
        let mut out = Self::zero(n, k);
        for (mut idx, p) in terms {
            Error::check_dim(k, idx.len())?;
            Error::check_dim(n, p.nvars())?;
            if let Some(&bad) = idx.iter().find(|&&i| i >= n) {
                return Err(Error::VariableOutOfRange { index: bad, n });
            }
            if let Some(negative) = canonicalize(&mut idx) {
                out.add_term(idx, if negative { -p } else { p });
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms keyed by increasing index tuples (0-based).
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Polynomial)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, idx: &[usize]) -> Polynomial {
        self.terms
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.n))
    }

    /// The dense coefficient list `(f_1, …, f_n)` of a one-form.
    pub fn one_form_coefficients(&self) -> Result<Vec<Polynomial>> {
        self.expect_degree(1)?;
        Ok((0..self.n).map(|j| self.coefficient(&[j])).collect())
    }

    /// The function of a 0-form.
    pub fn as_function(&self) -> Result<Polynomial> {
        self.expect_degree(0)?;
        Ok(self.coefficient(&[]))
    }

    pub fn expect_degree(&self, k: usize) -> Result<()> {
        if self.k == k {
            Ok(())
        } else {
            Err(Error::FormDegree {
                expected: k,
                found: self.k,
            })
        }
    }

    fn add_term(&mut self, idx: Vec<usize>, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &p;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        Error::check_dim(self.n, other.n)?;
        if self.k != other.k {
            return Err(Error::FormDegree {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (idx, p) in &other.terms {
            out.add_term(idx.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map_coefficients(|p| p.scale(c))
    }

    /// Multiplication by a function.
    pub fn mul_function(&self, f: &Polynomial) -> Result<Self> {
        Error::check_dim(self.n, f.nvars())?;
        Ok(self.map_coefficients(|p| p * f))
    }

    pub fn map_coefficients(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        let mut out = Self::zero(self.n, self.k);
        for (idx, p) in &self.terms {
            out.add_term(idx.clone(), f(p));
        }
        out
    }

    /// Formal exterior derivative `d(f dz_I) = Σ_j ∂f/∂z_j dz_j ∧ dz_I`.
    pub fn exterior_derivative(&self) -> KForm {
        let mut out = Self::zero(self.n, self.k + 1);
        for (idx, p) in &self.terms {
            for j in 0..self.n {
                let Err(pos) = idx.binary_search(&j) else {
                    continue;
                };
                let dp = p.partial_derivative(j).expect("index in range");
                if dp.is_zero() {
                    continue;
                }
                let mut new_idx = idx.clone();
                new_idx.insert(pos, j);
                // moving dz_j past `pos` one-forms
                out.add_term(new_idx, if pos % 2 == 1 { -dp } else { dp });
            }
        }
        out
    }

    pub fn wedge(&self, other: &KForm) -> Result<KForm> {
        Error::check_dim(self.n, other.n)?;
        let mut out = Self::zero(self.n, self.k + other.k);
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                if let Some((idx, negative)) = merge_sign(a, b) {
                    let prod = p * q;
                    out.add_term(idx, if negative { -prod } else { prod });
                }
            }
        }
        Ok(out)
    }

    /// Interior product `ι_X ω`; for a one-form this is the function `ω·X`.
    pub fn contract(&self, x: &VectorField) -> Result<KForm> {
        if self.k == 0 {
            return Err(Error::ContractZeroForm);
        }
        Error::check_dim(self.n, x.n())?;
        let mut out = Self::zero(self.n, self.k - 1);
        for (idx, p) in &self.terms {
            for (r, &i) in idx.iter().enumerate() {
                let xi = &x.components()[i];
                if xi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(r);
                let t = p * xi;
                out.add_term(rest, if r % 2 == 1 { -t } else { t });
            }
        }
        Ok(out)
    }

    /// `φ*ω`: substitutes `z ↦ φ(w)` in coefficients and `dz_i ↦ dφ_i`.
    pub fn pullback(&self, phi: &PolynomialMap) -> Result<KForm> {
        Error::check_dim(self.n, phi.target_dim())?;
        let p = phi.source_dim();
        let differentials: Vec<KForm> = phi
            .components()
            .iter()
            .map(|c| KForm::function(c.clone()).exterior_derivative())
            .collect();
        let mut out = Self::zero(p, self.k);
        for (idx, coeff) in &self.terms {
            let mut piece = KForm::function(coeff.compose(phi.components())?);
            if piece.is_zero() {
                continue;
            }
            for &i in idx {
                piece = piece.wedge(&differentials[i])?;
            }
            for (j, c) in piece.terms {
                out.add_term(j, c);
            }
        }
        Ok(out)
    }

    /// Coefficients evaluated exactly at a point, as constant polynomials.
    pub fn eval_exact(&self, point: &[GaussianRational]) -> Result<KForm> {
        let mut out = Self::zero(self.n, self.k);
        for (idx, p) in &self.terms {
            let v = p.eval_exact(point)?;
            out.add_term(idx.clone(), Polynomial::constant(self.n, v));
        }
        Ok(out)
    }

    /// The skew matrix `S` of a 2-form at a point: `S_ij = c_ij(p) = -S_ji`.
    pub fn two_form_matrix_at(&self, point: &[GaussianRational]) -> Result<ExactMatrix> {
        self.expect_degree(2)?;
        let mut s = ExactMatrix::zeros(self.n, self.n);
        for (idx, p) in &self.terms {
            let v = p.eval_exact(point)?;
            s[(idx[1], idx[0])] = -&v;
            s[(idx[0], idx[1])] = v;
        }
        Ok(s)
    }

    /// Linear one-form `Σ_ij a_ij z_i dz_j` from a square matrix.
    pub fn from_linear_matrix(a: &ExactMatrix) -> Result<KForm> {
        Error::check_dim(a.rows(), a.cols())?;
        let n = a.rows();
        let coeffs = (0..n)
            .map(|j| {
                Polynomial::from_terms(n, (0..n).map(|i| (Monomial::var(n, i), a[(i, j)].clone())))
            })
            .collect::<Result<Vec<_>>>()?;
        KForm::one_form(coeffs)
    }

    /// Inverse of [`KForm::from_linear_matrix`]: `None` unless every
    /// coefficient is homogeneous linear (or zero).
    pub fn linear_matrix(&self) -> Option<ExactMatrix> {
        if self.k != 1 {
            return None;
        }
        let n = self.n;
        let mut a = ExactMatrix::zeros(n, n);
        for (idx, p) in &self.terms {
            for (m, c) in p.terms() {
                if m.degree() != 1 {
                    return None;
                }
                let i = m.exponents().iter().position(|&e| e == 1)?;
                a[(i, idx[0])] = c.clone();
            }
        }
        Some(a)
    }

    /// The same form viewed on ℂᵐ with `m ≥ n` (extra variables unused).
    pub fn extend_vars(&self, m: usize) -> KForm {
        let mut out = Self::zero(m, self.k);
        for (idx, p) in &self.terms {
            out.add_term(idx.clone(), p.extend_vars(m));
        }
        out
    }

    /// Largest total degree among the coefficients.
    pub fn coefficient_degree(&self) -> Option<u32> {
        self.terms
            .values()
            .filter_map(Polynomial::total_degree)
            .max()
    }

    pub fn is_constant_coefficient(&self) -> bool {
        self.terms.values().all(Polynomial::is_constant)
    }

    /// True when some coefficient has a nonzero constant term, i.e. the
    /// form does not vanish at the origin.
    pub fn has_constant_part(&self) -> bool {
        self.terms.values().any(|p| !p.constant_term().is_zero())
    }
}

impl<'a> Add<&'a KForm> for &'a KForm {
    type Output = KForm;
    fn add(self, rhs: &KForm) -> KForm {
        self.checked_add(rhs).expect("form shape mismatch")
    }
}

impl<'a> Sub<&'a KForm> for &'a KForm {
    type Output = KForm;
    fn sub(self, rhs: &KForm) -> KForm {
        self.checked_sub(rhs).expect("form shape mismatch")
    }
}

impl Neg for &KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        self.scale(&-GaussianRational::one())
    }
}

impl Neg for KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extcalc::radial_field;

    fn z(n: usize, j: usize) -> Polynomial {
        Polynomial::var(n, j)
    }

    fn c(v: i64) -> GaussianRational {
        GaussianRational::from(v)
    }

    /// Ω_J(4) = z1 dz2 - z2 dz1 + z3 dz4 - z4 dz3, built term by term.
    fn omega_j4() -> KForm {
        KForm::from_terms(
            4,
            1,
            vec![
                (vec![1], z(4, 0)),
                (vec![0], -z(4, 1)),
                (vec![3], z(4, 2)),
                (vec![2], -z(4, 3)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn canonicalization_tracks_sign() {
        let f = KForm::from_terms(3, 2, vec![(vec![2, 0], Polynomial::one(3))]).unwrap();
        assert_eq!(f.coefficient(&[0, 2]), -Polynomial::one(3));
        let g = KForm::from_terms(3, 2, vec![(vec![1, 1], Polynomial::one(3))]).unwrap();
        assert!(g.is_zero());
        assert!(KForm::from_terms(3, 1, vec![(vec![3], Polynomial::one(3))]).is_err());
    }

    #[test]
    fn degree_above_dimension_is_zero() {
        let a = KForm::dz(2, 0);
        let b = KForm::dz(2, 1);
        let top = a.wedge(&b).unwrap();
        assert!(!top.is_zero());
        assert!(top.wedge(&a).unwrap().is_zero());
        assert_eq!(top.wedge(&a).unwrap().degree(), 3);
    }

    #[test]
    fn derivative_examples() {
        let w = KForm::from_terms(2, 1, vec![(vec![1], z(2, 0))]).unwrap();
        assert_eq!(
            w.exterior_derivative(),
            KForm::dz(2, 0).wedge(&KForm::dz(2, 1)).unwrap()
        );

        let d = omega_j4().exterior_derivative();
        let want = KForm::from_terms(
            4,
            2,
            vec![
                (vec![0, 1], Polynomial::constant(4, c(2))),
                (vec![2, 3], Polynomial::constant(4, c(2))),
            ],
        )
        .unwrap();
        assert_eq!(d, want);
    }

    #[test]
    fn wedge_examples() {
        assert!(KForm::dz(3, 0).wedge(&KForm::dz(3, 0)).unwrap().is_zero());
        let w = omega_j4();
        let obstruction = w.wedge(&w.exterior_derivative()).unwrap();
        // 2(z1 dz234 - z2 dz134 + z3 dz124 - z4 dz123), expanded by hand
        let want = KForm::from_terms(
            4,
            3,
            vec![
                (vec![1, 2, 3], z(4, 0).scale(&c(2))),
                (vec![0, 2, 3], z(4, 1).scale(&c(-2))),
                (vec![0, 1, 3], z(4, 2).scale(&c(2))),
                (vec![0, 1, 2], z(4, 3).scale(&c(-2))),
            ],
        )
        .unwrap();
        assert_eq!(obstruction, want);
        assert!(KForm::dz(2, 0).wedge(&KForm::dz(3, 0)).is_err());
    }

    #[test]
    fn contraction_examples() {
        let two = KForm::dz(2, 0).wedge(&KForm::dz(2, 1)).unwrap();
        assert_eq!(
            two.contract(&VectorField::coordinate(2, 0)).unwrap(),
            KForm::dz(2, 1)
        );
        assert_eq!(
            two.contract(&VectorField::coordinate(2, 1)).unwrap(),
            -KForm::dz(2, 0)
        );
        let r = radial_field(3);
        assert_eq!(
            KForm::dz(3, 0).contract(&r).unwrap(),
            KForm::function(z(3, 0))
        );
        assert_eq!(
            KForm::function(z(3, 0)).contract(&r).unwrap_err(),
            Error::ContractZeroForm
        );
        assert!(omega_j4().contract(&radial_field(4)).unwrap().is_zero());
    }

    #[test]
    fn radial_field_components() {
        assert_eq!(radial_field(2).components(), &[z(2, 0), z(2, 1)]);
        assert_eq!(radial_field(1).components(), &[z(1, 0)]);
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(
            KForm::dz(1, 0)
                .pullback(&PolynomialMap::identity(1))
                .unwrap(),
            KForm::dz(1, 0)
        );
        let w = Polynomial::var(1, 0);
        let line = PolynomialMap::new(
            1,
            vec![
                w.clone(),
                Polynomial::zero(1),
                Polynomial::zero(1),
                Polynomial::zero(1),
            ],
        )
        .unwrap();
        assert!(omega_j4().pullback(&line).unwrap().is_zero());
        let (w1, w2) = (z(2, 0), z(2, 1));
        let plane =
            PolynomialMap::new(2, vec![w1, Polynomial::zero(2), w2, Polynomial::zero(2)]).unwrap();
        let pulled = omega_j4().pullback(&plane).unwrap();
        assert!(pulled.is_zero());
        assert_eq!(pulled.n(), 2);
        // a non-isotropic plane: (w1, w2, 0, 0) pulls back to w1 dw2 - w2 dw1
        let (w1, w2) = (z(2, 0), z(2, 1));
        let bad = PolynomialMap::new(
            2,
            vec![
                w1.clone(),
                w2.clone(),
                Polynomial::zero(2),
                Polynomial::zero(2),
            ],
        )
        .unwrap();
        let want = KForm::one_form(vec![-w2, w1]).unwrap();
        assert_eq!(omega_j4().pullback(&bad).unwrap(), want);
    }

    #[test]
    fn linear_matrix_round_trip() {
        let a = ExactMatrix::from_fn(3, 3, |i, j| c((i * 3 + j) as i64 - 4));
        let w = KForm::from_linear_matrix(&a).unwrap();
        assert_eq!(w.linear_matrix().unwrap(), a);
        let nonlinear = KForm::one_form(vec![&z(2, 0) * &z(2, 0), Polynomial::zero(2)]).unwrap();
        assert!(nonlinear.linear_matrix().is_none());
    }
}
