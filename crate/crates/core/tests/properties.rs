//! Algebraic identities checked on seeded random inputs.

use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pfaff_core::criteria::{
    integrability_obstruction, invariant_hypersurface, isotropic_dim_bound, radial_annihilation,
    simple_singularity, transversality_sample, TransversalityOptions,
};
use pfaff_core::extcalc::radial_field;
use pfaff_core::linalg::ExactMatrix;
use pfaff_core::models::{
    det_via_pfaffian, omega_from_skew, pfaffian, poincare_dulac, radial_deformation, random_skew,
    skew_path, SkewMatrix,
};
use pfaff_core::polyalg::random;
use pfaff_core::{ComplexPoint, GaussianRational, KForm, Polynomial, PolynomialMap, VectorField};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_form(r: &mut ChaCha8Rng, n: usize, k: usize, max_degree: u32) -> KForm {
    let terms = r.random_range(1..=4);
    let mut items = Vec::new();
    for _ in 0..terms {
        let idx: Vec<usize> = (0..k).map(|_| r.random_range(0..n)).collect();
        items.push((idx, random::polynomial(r, n, max_degree, 3)));
    }
    KForm::from_terms(n, k, items).unwrap()
}

fn random_field(r: &mut ChaCha8Rng, n: usize) -> VectorField {
    VectorField::new((0..n).map(|_| random::polynomial(r, n, 2, 3)).collect()).unwrap()
}

fn random_point(r: &mut ChaCha8Rng, n: usize) -> ComplexPoint {
    ComplexPoint::new(
        (0..n)
            .map(|_| Complex64::new(r.random_range(-1.5..1.5), r.random_range(-1.5..1.5)))
            .collect(),
    )
    .unwrap()
}

fn random_matrix(r: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let mut a = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = GaussianRational::from(r.random_range(-4..=4));
        }
    }
    a
}

/// Term-by-term summation with independent powers; the oracle for Horner.
fn naive_eval(p: &Polynomial, z: &ComplexPoint) -> Complex64 {
    p.terms()
        .map(|(m, c)| {
            m.exponents()
                .iter()
                .zip(z.coords())
                .fold(c.to_complex64(), |acc, (&e, &x)| acc * x.powi(e as i32))
        })
        .sum()
}

fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * a.norm().max(b.norm()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=4);
        let p = random::polynomial(&mut r, n, 3, 4);
        let q = random::polynomial(&mut r, n, 3, 4);
        let s = random::polynomial(&mut r, n, 3, 4);
        prop_assert_eq!(&(&p + &q) + &s, &p + &(&q + &s));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_recovers_quotient(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=4);
        let f = random::nonzero_polynomial(&mut r, n, 4, 4);
        let q = random::polynomial(&mut r, n, 4, 4);
        let g = &f * &q;
        let got = Polynomial::divides(&f, &g).unwrap();
        prop_assert_eq!(got.as_ref(), Some(&q));
        // numeric consistency of the quotient
        let z = random_point(&mut r, n);
        let lhs = g.evaluate(&z).unwrap();
        let rhs = f.evaluate(&z).unwrap() * q.evaluate(&z).unwrap();
        prop_assert!(close(lhs, rhs, 1e-10));
    }

    #[test]
    fn horner_matches_naive_summation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=5);
        let p = random::polynomial(&mut r, n, 5, 8);
        let z = random_point(&mut r, n);
        prop_assert!(close(p.evaluate(&z).unwrap(), naive_eval(&p, &z), 1e-12));
    }

    #[test]
    fn homogeneous_components_resum_and_scale(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=4);
        let p = random::polynomial(&mut r, n, 4, 6);
        let parts = p.homogeneous_components();
        let sum = parts.iter().fold(Polynomial::zero(n), |acc, (_, c)| &acc + c);
        prop_assert_eq!(&sum, &p);
        prop_assert!(parts.windows(2).all(|w| w[0].0 < w[1].0));
        // c(t·z) == t^deg · c(z) with t a fresh variable
        let t = Polynomial::var(n + 1, n);
        let scaled: Vec<Polynomial> = (0..n).map(|j| &Polynomial::var(n + 1, j) * &t).collect();
        for (deg, c) in &parts {
            prop_assert!(c.is_homogeneous());
            let lhs = c.compose(&scaled).unwrap();
            let rhs = &c.extend_vars(n + 1) * &t.pow(*deg);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn partial_derivatives_commute(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(2..=4);
        let p = random::polynomial(&mut r, n, 5, 6);
        let (j, k) = (r.random_range(0..n), r.random_range(0..n));
        let a = p.partial_derivative(j).unwrap().partial_derivative(k).unwrap();
        let b = p.partial_derivative(k).unwrap().partial_derivative(j).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn d_squared_vanishes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=5);
        let k = r.random_range(0..=3);
        let w = random_form(&mut r, n, k, 3);
        prop_assert!(w.exterior_derivative().exterior_derivative().is_zero());
    }

    #[test]
    fn leibniz_rule(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(2..=4);
        let (ka, kb) = (r.random_range(0..=2), r.random_range(0..=2));
        let a = random_form(&mut r, n, ka, 2);
        let b = random_form(&mut r, n, kb, 2);
        let lhs = a.wedge(&b).unwrap().exterior_derivative();
        let first = a.exterior_derivative().wedge(&b).unwrap();
        let second = a.wedge(&b.exterior_derivative()).unwrap();
        let rhs = if ka % 2 == 0 { &first + &second } else { &first - &second };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_graded_commutative_and_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(2..=5);
        let (ka, kb, kc) = (r.random_range(0..=2), r.random_range(0..=2), r.random_range(0..=1));
        let a = random_form(&mut r, n, ka, 2);
        let b = random_form(&mut r, n, kb, 2);
        let c = random_form(&mut r, n, kc, 1);
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        let want = if (ka * kb) % 2 == 0 { ba } else { -ba };
        prop_assert_eq!(&ab, &want);
        prop_assert_eq!(ab.wedge(&c).unwrap(), a.wedge(&b.wedge(&c).unwrap()).unwrap());
    }

    #[test]
    fn pullback_commutes_with_d(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=3);
        let p = r.random_range(1..=3);
        let k = r.random_range(0..=2);
        let w = random_form(&mut r, n, k, 2);
        let phi = PolynomialMap::new(p, (0..n).map(|_| random::polynomial(&mut r, p, 2, 3)).collect()).unwrap();
        let lhs = w.exterior_derivative().pullback(&phi).unwrap();
        let rhs = w.pullback(&phi).unwrap().exterior_derivative();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(w.pullback(&PolynomialMap::identity(n)).unwrap(), w);
    }

    #[test]
    fn contraction_is_linear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=4);
        let k = r.random_range(1..=3);
        let a = random_form(&mut r, n, k, 2);
        let b = random_form(&mut r, n, k, 2);
        let x = random_field(&mut r, n);
        let y = random_field(&mut r, n);
        let c = random::gaussian_int(&mut r, 4, false);
        prop_assert_eq!(
            a.contract(&x.checked_add(&y.scale(&c)).unwrap()).unwrap(),
            &a.contract(&x).unwrap() + &a.contract(&y).unwrap().scale(&c)
        );
        prop_assert_eq!(
            (&a + &b.scale(&c)).contract(&x).unwrap(),
            &a.contract(&x).unwrap() + &b.contract(&x).unwrap().scale(&c)
        );
    }

    #[test]
    fn radial_annihilation_iff_skew(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=6);
        let mut a = random_matrix(&mut r, n);
        if r.random_bool(0.5) {
            // force skew half the time
            a = a.add(&a.transpose().scale(&-GaussianRational::one())).unwrap();
        }
        let w = KForm::from_linear_matrix(&a).unwrap();
        prop_assert_eq!(radial_annihilation(&w).unwrap(), a.skew_violation().is_none());
    }

    #[test]
    fn darboux_forms_are_integrable(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(2..=4);
        let p = random::polynomial(&mut r, n, 3, 4);
        let q = random::polynomial(&mut r, n, 3, 4);
        let w = pfaff_core::criteria::darboux_form(&p, &q).unwrap();
        prop_assert!(integrability_obstruction(&w).unwrap().is_integrable);
    }

    #[test]
    fn invariance_ignores_unit_rescaling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(2..=3);
        let p = random::nonzero_polynomial(&mut r, n, 2, 3);
        let q = random::nonzero_polynomial(&mut r, n, 2, 3);
        let w = if r.random_bool(0.5) {
            pfaff_core::criteria::darboux_form(&p, &q).unwrap()
        } else {
            random_form(&mut r, n, 1, 2)
        };
        let f = if r.random_bool(0.5) { p.clone() } else { random::nonzero_polynomial(&mut r, n, 2, 3) };
        prop_assume!(!f.is_constant());
        let c = loop {
            let c = random::gaussian_int(&mut r, 5, false);
            if !c.is_zero() { break c; }
        };
        let base = invariant_hypersurface(&w, &f).unwrap();
        prop_assert_eq!(base, invariant_hypersurface(&w.scale(&c), &f).unwrap());
        prop_assert_eq!(base, invariant_hypersurface(&w, &f.scale(&c)).unwrap());
    }

    #[test]
    fn isotropic_rank_is_coordinate_invariant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=3);
        let a = random_skew(m, r.random(), false);
        let n = 2 * m;
        let mat = loop {
            let mat = random_matrix(&mut r, n);
            if !mat.det().unwrap().is_zero() { break mat; }
        };
        let w = omega_from_skew(&a);
        let origin = vec![GaussianRational::zero(); n];
        let before = isotropic_dim_bound(&w, &origin).unwrap();
        let rows = mat.to_rows();
        let changed = w.pullback(&PolynomialMap::linear(n, &rows).unwrap()).unwrap();
        let after = isotropic_dim_bound(&changed, &origin).unwrap();
        prop_assert_eq!(before.rank_at_point, after.rank_at_point);
        prop_assert_eq!(
            a.congruence(&mat).unwrap().matrix().rank(),
            a.matrix().rank()
        );
    }

    #[test]
    fn simple_singularity_of_linear_forms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=3);
        // small entries so singular draws show up too
        let n = 2 * m;
        let mut a = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = GaussianRational::from(r.random_range(-1..=1));
                a[(j, i)] = -&v;
                a[(i, j)] = v;
            }
        }
        let a = SkewMatrix::new(a).unwrap();
        let w = omega_from_skew(&a);
        let origin = vec![GaussianRational::zero(); n];
        prop_assert_eq!(simple_singularity(&w, &origin).unwrap(), !a.det().is_zero());
    }

    #[test]
    fn omega_from_skew_is_injective(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=3);
        let a = random_skew(m, r.random(), false);
        let b = if r.random_bool(0.3) { a.clone() } else { random_skew(m, r.random(), false) };
        prop_assert_eq!(omega_from_skew(&a) == omega_from_skew(&b), a == b);
    }

    #[test]
    fn pfaffian_squares_to_determinant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=4);
        let a = random_skew(m, r.random(), false);
        prop_assert_eq!(det_via_pfaffian(&a), a.matrix().det().unwrap());
    }

    #[test]
    fn pfaffian_transformation_law(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=3);
        let a = random_skew(m, r.random(), false);
        let mat = random_matrix(&mut r, 2 * m);
        let lhs = pfaffian(&a.congruence(&mat).unwrap());
        let rhs = &mat.det().unwrap() * &pfaffian(&a);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn deformation_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.random_range(1..=4);
        let mut w = random_form(&mut r, n, 1, 3);
        // drop constant terms so Ω(0) = 0
        w = w.map_coefficients(|p| &p.clone() - &Polynomial::constant(n, p.constant_term()));
        let fam = radial_deformation(&w).unwrap();
        // independent route: t⁻¹ Ω(t z) by substitution and exact division
        let t = Polynomial::var(n + 1, n);
        let scaled: Vec<Polynomial> = (0..n).map(|j| &Polynomial::var(n + 1, j) * &t).collect();
        let coeffs: Vec<_> = w.one_form_coefficients().unwrap().iter().enumerate().map(|(j, c)| {
            let q = Polynomial::divides(&t, &c.compose(&scaled).unwrap()).unwrap().expect("t divides");
            (vec![j], q)
        }).collect();
        prop_assert_eq!(fam.symbolic(), KForm::from_terms(n + 1, 1, coeffs).unwrap());
        prop_assert_eq!(fam.evaluate_at(&GaussianRational::one()), w);
    }

    #[test]
    fn linear_forms_are_transverse(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=3);
        let a = random_skew(m, r.random(), true);
        let radius = r.random_range(0.1..10.0);
        let opts = TransversalityOptions { radius, samples: 512, seed: r.random(), ..Default::default() };
        let report = transversality_sample(&omega_from_skew(&a), &opts).unwrap();
        prop_assert!(report.tangent_points.is_empty());
        prop_assert_eq!(report.singular_hits, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn skew_paths_keep_clearance(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=3);
        let a = random_skew(m, r.random(), true);
        let b = random_skew(m, r.random(), true);
        let plan = skew_path(&a, &b, 1e-6, 40).unwrap();
        prop_assert_eq!(plan.waypoints[0], Complex64::new(0.0, 0.0));
        prop_assert_eq!(*plan.waypoints.last().unwrap(), Complex64::new(1.0, 0.0));
        prop_assert!(plan.abs_values.iter().all(|&v| v >= 1e-6));
    }
}

#[test]
fn poincare_dulac_annihilation_for_all_small_ell() {
    fn rec(prefix: &mut Vec<u32>, depth: usize) {
        if !prefix.is_empty() {
            let (w, xi) = poincare_dulac(prefix).unwrap();
            assert!(w.contract(&xi).unwrap().is_zero(), "ℓ = {prefix:?}");
        }
        if depth == 4 {
            return;
        }
        for l in 1..=4 {
            prefix.push(l);
            rec(prefix, depth + 1);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), 0);
}

#[test]
fn radial_contraction_of_skew_forms() {
    for seed in 0..20 {
        let a = random_skew(1 + (seed as usize % 4), seed, false);
        let w = omega_from_skew(&a);
        assert!(w.contract(&radial_field(w.n())).unwrap().is_zero());
    }
}
