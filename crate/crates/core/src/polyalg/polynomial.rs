use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{GaussianRational, Monomial};
use crate::error::{Error, Result};

/// A point of ℂⁿ with finite double-precision coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoint(Vec<Complex64>);

impl ComplexPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            Ok(Self(coords))
        } else {
            Err(Error::NonFinitePoint)
        }
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Sparse polynomial in `n` variables over ℚ(i).
///
/// Terms are kept in a graded-lex ordered map with no zero coefficients,
/// so the zero polynomial has no terms and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, GaussianRational::one())
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    /// The coordinate function `z_j`, with `j` 0-based.
    pub fn var(nvars: usize, j: usize) -> Self {
        assert!(j < nvars, "variable index {j} out of range for {nvars}");
        Self::term(Monomial::var(nvars, j), GaussianRational::one())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, summing repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            Error::check_dim(nvars, m.nvars())?;
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Smallest degree among the terms; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · m · other`
    fn add_scaled_shifted(&mut self, other: &Polynomial, m: &Monomial, c: &GaussianRational) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), &(oc * c));
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.nvars, other.nvars)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &small.terms {
            out.add_scaled_shifted(large, m, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative in the 0-based variable `j`.
    pub fn partial_derivative(&self, j: usize) -> Result<Polynomial> {
        if j >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: j,
                n: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[j];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[j] -= 1;
            out.add_term(
                Monomial::new(exps),
                &(c * &GaussianRational::from(e as i64)),
            );
        }
        Ok(out)
    }

    /// Division by a single divisor under graded-lex order.
    ///
    /// Returns `(quotient, remainder)` with `self = quotient·divisor + remainder`
    /// and no term of the remainder divisible by the leading monomial of the
    /// divisor. A single polynomial is a Gröbner basis of the ideal it
    /// generates, so the remainder vanishes exactly when `divisor | self`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        Error::check_dim(self.nvars, divisor.nvars)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead_c.inv().ok_or(Error::DivisionByZero)?;
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(self.nvars);
        let mut remainder = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rest.terms.pop_last() {
            if lead_m.divides(&m) {
                let qm = lead_m.quotient_of(&m);
                let qc = &c * &lead_inv;
                // The leading term cancels by construction; subtract the tail.
                for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                    rest.add_term(dm.mul(&qm), &-(dc * &qc));
                }
                quotient.add_term(qm, &qc);
            } else {
                remainder.terms.insert(m, c);
            }
        }
        Ok((quotient, remainder))
    }

    /// Exact quotient `g / f` when `f` divides `g` in the polynomial ring.
    pub fn divides(f: &Polynomial, g: &Polynomial) -> Result<Option<Polynomial>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (q, r) = g.div_rem(f)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Numeric value at `z`, by nested Horner evaluation over the variables.
    pub fn evaluate(&self, z: &ComplexPoint) -> Result<Complex64> {
        Error::check_dim(self.nvars, z.dim())?;
        if self.nvars == 0 {
            return Ok(self.constant_term().to_complex64());
        }
        // Lex-descending order makes every group sharing a prefix contiguous.
        let mut terms: Vec<(&[u32], Complex64)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.exponents(), c.to_complex64()))
            .collect();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        Ok(horner(&terms, 0, z.coords()))
    }

    /// Exact value at a point with Gaussian-rational coordinates.
    pub fn eval_exact(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        Error::check_dim(self.nvars, point.len())?;
        let mut powers: Vec<Vec<GaussianRational>> =
            vec![vec![GaussianRational::one()]; self.nvars];
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[j];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &point[j];
                    table.push(next);
                }
                t = &t * &table[e as usize];
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes `z_j ↦ subs[j]`; the result lives in the substitutes' ring.
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Polynomial> {
        Error::check_dim(self.nvars, subs.len())?;
        let target = match subs.first() {
            Some(p) => p.nvars,
            None => {
                return Ok(Polynomial::constant(0, self.constant_term()));
            }
        };
        for s in subs {
            Error::check_dim(target, s.nvars)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; self.nvars];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[j];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &subs[j];
                    table.push(next);
                }
                t = &t * &table[e as usize];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, &tc);
            }
        }
        Ok(out)
    }

    /// Homogeneous pieces `(degree, component)` in increasing degree.
    pub fn homogeneous_components(&self) -> Vec<(u32, Polynomial)> {
        let mut parts: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// The same polynomial viewed in `n ≥ nvars` variables.
    pub fn extend_vars(&self, n: usize) -> Polynomial {
        assert!(n >= self.nvars);
        Polynomial {
            nvars: n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extended(n), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients(
        &self,
        f: impl Fn(&GaussianRational) -> GaussianRational,
    ) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }
}

fn horner(terms: &[(&[u32], Complex64)], var: usize, z: &[Complex64]) -> Complex64 {
    if var == z.len() {
        return terms.iter().map(|t| t.1).sum();
    }
    let mut acc = Complex64::zero();
    let mut prev: Option<u32> = None;
    let mut start = 0;
    while start < terms.len() {
        let e = terms[start].0[var];
        let mut end = start + 1;
        while end < terms.len() && terms[end].0[var] == e {
            end += 1;
        }
        if let Some(p) = prev {
            acc *= z[var].powu(p - e);
        }
        acc += horner(&terms[start..end], var + 1, z);
        prev = Some(e);
        start = end;
    }
    if let Some(p) = prev {
        acc *= z[var].powu(p);
    }
    acc
}

// Operator forms panic on a dimension mismatch; use the `checked_*` methods
// when the operands come from untrusted input.
impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-GaussianRational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
