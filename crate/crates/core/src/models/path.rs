use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::SkewMatrix;
use crate::error::{Error, Result};
use crate::polyalg::{ratio_to_f64, GaussianRational, UniPoly};

/// Slack added to the clearance before the exact comparison at each waypoint.
pub const PATH_SLACK: f64 = 1e-12;

/// A path `s: 0 → 1` in the complex plane along which `(1 - s)A + sB` stays
/// nonsingular, certified at every waypoint on the exact determinant.
#[derive(Clone, Debug, PartialEq)]
pub struct PathPlan {
    pub from: SkewMatrix,
    pub to: SkewMatrix,
    /// `p(s) = det((1 - s)A + sB)`, exact.
    pub determinant: UniPoly,
    /// Numeric roots of `p` that guided the detours.
    pub roots: Vec<Complex64>,
    /// Radius used for the arcs (0 when the straight segment was used).
    pub detour_radius: f64,
    pub waypoints: Vec<Complex64>,
    /// `|p(s)|` at each waypoint, from the exact value.
    pub abs_values: Vec<f64>,
    pub clearance: f64,
}

/// Exact `det((1 - s)A + sB)` by interpolation at `s = 0, 1, …, 2m`.
pub fn determinant_polynomial(a: &SkewMatrix, b: &SkewMatrix) -> Result<UniPoly> {
    Error::check_dim(a.size(), b.size())?;
    let nodes: Vec<GaussianRational> = (0..=a.size() as i64).map(GaussianRational::from).collect();
    let values = nodes
        .iter()
        .map(|s| Ok(a.interpolate(b, s)?.det()))
        .collect::<Result<Vec<_>>>()?;
    UniPoly::interpolate(&nodes, &values)
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Piece {
    /// Real segment `[a, b]`.
    Segment(f64, f64),
    /// Upper semicircle from `c - r` to `c + r`.
    Arc { center: f64, radius: f64 },
}

impl Piece {
    fn length(&self) -> f64 {
        match *self {
            Piece::Segment(a, b) => b - a,
            Piece::Arc { radius, .. } => PI * radius,
        }
    }

    /// Point at fraction `u ∈ [0, 1]` along the piece.
    fn at(&self, u: f64) -> Complex64 {
        match *self {
            Piece::Segment(a, b) => Complex64::new(a + u * (b - a), 0.0),
            Piece::Arc { center, radius } => {
                let theta = PI * (1.0 - u);
                Complex64::new(center + radius * theta.cos(), radius * theta.sin())
            }
        }
    }

    fn distance(&self, p: Complex64) -> f64 {
        match *self {
            Piece::Segment(a, b) => {
                let x = p.re.clamp(a, b);
                (p - Complex64::new(x, 0.0)).norm()
            }
            Piece::Arc { center, radius } => {
                let d = p - Complex64::new(center, 0.0);
                if d.im >= 0.0 {
                    (d.norm() - radius).abs()
                } else {
                    let left = (p - Complex64::new(center - radius, 0.0)).norm();
                    let right = (p - Complex64::new(center + radius, 0.0)).norm();
                    left.min(right)
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Cluster {
    members: Vec<Complex64>,
    lo: f64,
    hi: f64,
}

impl Cluster {
    fn center(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    fn radius(&self, rho: f64) -> f64 {
        let c = Complex64::new(self.center(), 0.0);
        self.members
            .iter()
            .map(|r| (r - c).norm())
            .fold(0.0, f64::max)
            + rho
    }

    fn add(&mut self, r: Complex64) {
        self.members.push(r);
        self.lo = self.lo.min(r.re);
        self.hi = self.hi.max(r.re);
    }
}

/// Groups roots that force a detour at radius `rho` into non-overlapping
/// arcs, ordered left to right. `None` if an arc would leave `(0, 1)`.
fn plan_arcs(roots: &[Complex64], rho: f64) -> Option<Vec<(f64, f64)>> {
    let mut clusters: Vec<Cluster> = Vec::new();
    let mut free: Vec<Complex64> = Vec::new();
    for &r in roots {
        if r.im.abs() < rho && r.re > -rho && r.re < 1.0 + rho {
            clusters.push(Cluster {
                members: vec![r],
                lo: r.re,
                hi: r.re,
            });
        } else {
            free.push(r);
        }
    }
    loop {
        let mut changed = false;
        clusters.sort_by(|a, b| a.center().total_cmp(&b.center()));
        // merge neighbours whose arcs come within rho of each other
        let mut merged: Vec<Cluster> = Vec::new();
        for c in clusters.drain(..) {
            if let Some(last) = merged.last_mut() {
                if last.center() + last.radius(rho) + rho > c.center() - c.radius(rho) {
                    for r in c.members {
                        last.add(r);
                    }
                    changed = true;
                    continue;
                }
            }
            merged.push(c);
        }
        clusters = merged;
        // absorb free roots lying close to an arc
        free.retain(|&r| {
            for c in clusters.iter_mut() {
                let d = (r - Complex64::new(c.center(), 0.0)).norm();
                if (d - c.radius(rho)).abs() < rho || d < c.radius(rho) {
                    c.add(r);
                    changed = true;
                    return false;
                }
            }
            true
        });
        if !changed {
            break;
        }
    }
    let arcs: Vec<(f64, f64)> = clusters
        .iter()
        .map(|c| (c.center(), c.radius(rho)))
        .collect();
    arcs.iter()
        .all(|&(c, r)| c - r > 0.0 && c + r < 1.0)
        .then_some(arcs)
}

fn pieces_for(arcs: &[(f64, f64)]) -> Vec<Piece> {
    let mut pieces = Vec::new();
    let mut x = 0.0;
    for &(center, radius) in arcs {
        pieces.push(Piece::Segment(x, center - radius));
        pieces.push(Piece::Arc { center, radius });
        x = center + radius;
    }
    pieces.push(Piece::Segment(x, 1.0));
    pieces
}

fn sample_pieces(pieces: &[Piece], samples: usize) -> Vec<Complex64> {
    let total: f64 = pieces.iter().map(Piece::length).sum();
    let mut out = Vec::with_capacity(samples);
    for k in 0..samples {
        let target = total * k as f64 / (samples - 1) as f64;
        let mut acc = 0.0;
        let mut point = None;
        for piece in pieces {
            let len = piece.length();
            if target <= acc + len || std::ptr::eq(piece, pieces.last().unwrap()) {
                let u = if len > 0.0 {
                    ((target - acc) / len).clamp(0.0, 1.0)
                } else {
                    0.0
                };
                point = Some(piece.at(u));
                break;
            }
            acc += len;
        }
        out.push(point.expect("nonempty path"));
    }
    // exact endpoints
    out[0] = Complex64::new(0.0, 0.0);
    out[samples - 1] = Complex64::new(1.0, 0.0);
    out
}

/// `|p(s)|` from the exact value at the exactly-converted waypoint, and
/// whether `|p(s)|² ≥ bound²` holds exactly.
fn certify(p: &UniPoly, s: Complex64, bound: &BigRational) -> (f64, bool) {
    let exact_s = GaussianRational::from_complex64(s).expect("finite waypoint");
    let norm_sqr = p.eval(&exact_s).norm_sqr();
    let ok = norm_sqr >= bound * bound;
    (ratio_to_f64(&norm_sqr).sqrt(), ok)
}

// Each halving of the detour radius is one attempt.
const RADIUS_HALVINGS: usize = 48;

/// Plans a path from `A` (at `s = 0`) to `B` (at `s = 1`) in the complex
/// `s`-plane along which `det((1 - s)A + sB)` stays away from zero.
///
/// Roots of the exact determinant polynomial near `[0, 1]` are bypassed on
/// upper semicircles. The radius starts at a third of the roots' distance to
/// the endpoints (capped at 1/4) and is halved until every emitted waypoint
/// satisfies `|p(s)| ≥ clearance` on the exact polynomial.
pub fn skew_path(
    a: &SkewMatrix,
    b: &SkewMatrix,
    clearance: f64,
    samples: usize,
) -> Result<PathPlan> {
    Error::check_dim(a.size(), b.size())?;
    if a.det().is_zero() || b.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    if !(clearance > 0.0 && clearance.is_finite()) {
        return Err(Error::InvalidArgument("clearance must be positive".into()));
    }
    if samples < 2 {
        return Err(Error::InvalidArgument(
            "a path needs at least 2 samples".into(),
        ));
    }
    let p = determinant_polynomial(a, b)?;
    let roots = p.roots();
    let bound = BigRational::from_float(clearance + PATH_SLACK).expect("finite clearance");

    let endpoint_gap = roots
        .iter()
        .map(|r| r.norm().min((r - Complex64::new(1.0, 0.0)).norm()))
        .fold(f64::INFINITY, f64::min);
    let rho_max = (endpoint_gap / 3.0).min(0.25);

    let mut last_failure = String::from("no candidate radius produced a valid arc layout");
    for k in 0..RADIUS_HALVINGS {
        let rho = rho_max / 2f64.powi(k as i32);
        let Some(arcs) = plan_arcs(&roots, rho) else {
            continue;
        };
        let pieces = pieces_for(&arcs);
        let closest = roots
            .iter()
            .map(|&r| {
                pieces
                    .iter()
                    .map(|pc| pc.distance(r))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(f64::INFINITY, f64::min);
        if closest < 0.5 * rho {
            last_failure =
                format!("a root lies within {closest:.3e} of the path at radius {rho:.3e}");
            continue;
        }
        let waypoints = sample_pieces(&pieces, samples);
        let checked: Vec<(f64, bool)> = waypoints
            .par_iter()
            .map(|&s| certify(&p, s, &bound))
            .collect();
        if let Some(worst) = checked
            .iter()
            .filter(|c| !c.1)
            .map(|c| c.0)
            .reduce(f64::min)
        {
            last_failure = format!("|p(s)| = {worst:.3e} at a waypoint for radius {rho:.3e}");
            // Shrinking arcs cannot help once no detour is needed.
            if arcs.is_empty() {
                break;
            }
            continue;
        }
        return Ok(PathPlan {
            from: a.clone(),
            to: b.clone(),
            determinant: p,
            roots,
            detour_radius: if arcs.is_empty() { 0.0 } else { rho },
            waypoints,
            abs_values: checked.into_iter().map(|c| c.0).collect(),
            clearance,
        });
    }
    Err(Error::ClearanceUnattainable {
        clearance,
        diagnostic: last_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::canonical_j;
    use num_traits::One;

    fn q(v: i64) -> GaussianRational {
        GaussianRational::from(v)
    }

    #[test]
    fn constant_path() {
        let j = canonical_j(2);
        let plan = skew_path(&j, &j, 1e-6, 17).unwrap();
        assert_eq!(
            plan.determinant,
            UniPoly::new(vec![GaussianRational::one()])
        );
        assert_eq!(plan.detour_radius, 0.0);
        for (s, v) in plan.waypoints.iter().zip(&plan.abs_values) {
            assert_eq!(s.im, 0.0);
            assert!((0.0..=1.0).contains(&s.re));
            assert_eq!(*v, 1.0);
        }
    }

    #[test]
    fn scaled_target_needs_no_detour() {
        let j = canonical_j(2);
        let two_j = SkewMatrix::new(j.matrix().scale(&q(2))).unwrap();
        let plan = skew_path(&j, &two_j, 1e-6, 33).unwrap();
        // (1 + s)^4
        let want = UniPoly::new(vec![q(1), q(4), q(6), q(4), q(1)]);
        assert_eq!(plan.determinant, want);
        assert!(plan.waypoints.iter().all(|s| s.im == 0.0));
    }

    #[test]
    fn opposite_target_forces_detour() {
        let j = canonical_j(2);
        let minus_j = SkewMatrix::new(j.matrix().scale(&q(-1))).unwrap();
        let plan = skew_path(&j, &minus_j, 1e-6, 65).unwrap();
        // (1 - 2s)^4
        let want = UniPoly::new(vec![q(1), q(-8), q(24), q(-32), q(16)]);
        assert_eq!(plan.determinant, want);
        assert!(plan.detour_radius > 0.0);
        assert!(plan.waypoints.iter().any(|s| s.im > 0.0));
        assert!(plan.abs_values.iter().all(|&v| v >= 1e-6));
        assert_eq!(plan.waypoints[0], Complex64::new(0.0, 0.0));
        assert_eq!(*plan.waypoints.last().unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn singular_endpoints_are_rejected() {
        let zero = SkewMatrix::new(crate::linalg::ExactMatrix::zeros(4, 4)).unwrap();
        assert_eq!(
            skew_path(&zero, &canonical_j(2), 1e-6, 8).unwrap_err(),
            Error::SingularMatrix
        );
    }

    #[test]
    fn unreachable_clearance_is_reported() {
        let j = canonical_j(2);
        let err = skew_path(&j, &j, 2.0, 8).unwrap_err();
        assert!(matches!(err, Error::ClearanceUnattainable { .. }));
    }
}
