use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::invariance::invariant_hypersurface;
use crate::error::{Error, Result};
use crate::extcalc::KForm;
use crate::polyalg::{
    random, squarefree_probe, GaussianRational, Polynomial, SquarefreeVerdict, DEFAULT_PROBE_LINES,
};

/// `P dQ - Q dP`.
pub fn darboux_form(p: &Polynomial, q: &Polynomial) -> Result<KForm> {
    Error::check_dim(p.nvars(), q.nvars())?;
    let dp = KForm::function(p.clone()).exterior_derivative();
    let dq = KForm::function(q.clone()).exterior_derivative();
    dq.mul_function(p)?.checked_sub(&dp.mul_function(q)?)
}

/// Whether `Ω == P dQ - Q dP` exactly.
pub fn darboux_form_check(omega: &KForm, p: &Polynomial, q: &Polynomial) -> Result<bool> {
    omega.expect_degree(1)?;
    Error::check_dim(omega.n(), p.nvars())?;
    if p.is_zero() && q.is_zero() {
        return Err(Error::InvalidArgument("P and Q are both zero".into()));
    }
    Ok(*omega == darboux_form(p, q)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PencilMember {
    pub lambda: GaussianRational,
    pub mu: GaussianRational,
    pub surface: Polynomial,
    pub invariant: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PencilReport {
    pub members: Vec<PencilMember>,
    /// Draws discarded because `λP - μQ` was constant or failed the
    /// squarefree probe.
    pub rejected: usize,
}

impl PencilReport {
    pub fn all_invariant(&self) -> bool {
        self.members.iter().all(|m| m.invariant)
    }
}

// Give up on a pencil after this many consecutive unusable draws.
const MAX_REJECTIONS: usize = 200;

/// Tests `members` random pencil hypersurfaces `{λP - μQ = 0}` for
/// invariance under `P dQ - Q dP`, redrawing any `(λ, μ)` whose member is
/// constant or not reduced.
pub fn pencil_check(
    p: &Polynomial,
    q: &Polynomial,
    members: usize,
    seed: u64,
) -> Result<PencilReport> {
    let omega = darboux_form(p, q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PencilReport {
        members: Vec::with_capacity(members),
        rejected: 0,
    };
    let mut streak = 0;
    while report.members.len() < members {
        let lambda = random::gaussian_int(&mut rng, 9, false);
        let mu = random::gaussian_int(&mut rng, 9, false);
        if lambda.is_zero() && mu.is_zero() {
            continue;
        }
        let surface = p.scale(&lambda).checked_sub(&q.scale(&mu))?;
        let usable = !surface.is_constant()
            && squarefree_probe(&surface, DEFAULT_PROBE_LINES, rand::Rng::random(&mut rng))?
                == SquarefreeVerdict::ProbablyReduced;
        if !usable {
            report.rejected += 1;
            streak += 1;
            if streak > MAX_REJECTIONS {
                return Err(Error::InvalidArgument(
                    "no reduced non-constant member found in the pencil".into(),
                ));
            }
            continue;
        }
        streak = 0;
        let invariant = invariant_hypersurface(&omega, &surface)?;
        report.members.push(PencilMember {
            lambda,
            mu,
            surface,
            invariant,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize, j: usize) -> Polynomial {
        Polynomial::var(n, j)
    }

    #[test]
    fn rotation_form_is_darboux() {
        let w = KForm::one_form(vec![-z(2, 1), z(2, 0)]).unwrap();
        assert!(darboux_form_check(&w, &z(2, 0), &z(2, 1)).unwrap());
        assert!(!darboux_form_check(&w, &z(2, 1), &z(2, 0)).unwrap());
        assert!(darboux_form_check(&w, &Polynomial::zero(2), &Polynomial::zero(2)).is_err());
    }

    #[test]
    fn pencil_of_lines() {
        let r = pencil_check(&z(2, 0), &z(2, 1), 5, 1).unwrap();
        assert_eq!(r.members.len(), 5);
        assert!(r.all_invariant());
    }

    #[test]
    fn pencil_of_squares_is_never_reduced() {
        let sq = |p: Polynomial| &p * &p;
        assert!(pencil_check(&sq(z(2, 0)), &Polynomial::zero(2), 1, 0).is_err());
    }
}
