use clap::{value_parser, Arg, ArgMatches};
use pfaff_core::criteria::{
    darboux_form, integrability_obstruction, invariance_quotient, isotropic_dim_bound, jacobian_at,
    radial_annihilation, simple_singularity, transversality_sample, CertificateKind,
    TransversalityOptions,
};
use pfaff_core::extcalc::radial_field;
use pfaff_core::polyalg::{squarefree_probe, SquarefreeVerdict, DEFAULT_PROBE_LINES};
use pfaff_core::Error;
use serde_json::{json, Value};

use super::common::{self, complex};
use crate::error::CliError;
use crate::registry::{Command, Context};
use crate::report::{Report, Verdict};
use crate::syntax::{print_constant, print_form, print_point, print_polynomial};

pub struct Integrable;

impl Command for Integrable {
    fn name(&self) -> &'static str {
        "check integrable"
    }

    fn about(&self) -> &'static str {
        "Frobenius test: is Ω ∧ dΩ zero?"
    }

    fn args(&self) -> Vec<Arg> {
        vec![common::n_arg(), common::form_arg()]
    }

    fn run(&self, m: &ArgMatches, _: &Context) -> Result<Report, CliError> {
        let n = common::n(m);
        let w = common::one_form(m, "form", n)?;
        let ob = integrability_obstruction(&w)?;
        Ok(Report::new(self.name(), Verdict::Holds(ob.is_integrable))
            .input("n", n)
            .input("form", print_form(&w))
            .witness(json!({ "obstruction": print_form(&ob.form) })))
    }
}

pub struct Invariant;

impl Command for Invariant {
    fn name(&self) -> &'static str {
        "check invariant"
    }

    fn about(&self) -> &'static str {
        "Is {f = 0} invariant, i.e. does f divide Ω ∧ df?"
    }

    fn args(&self) -> Vec<Arg> {
        vec![
            common::n_arg(),
            common::form_arg(),
            Arg::new("surface")
                .long("surface")
                .required(true)
                .help("Defining polynomial f"),
            common::seed_arg(),
        ]
    }

    fn run(&self, m: &ArgMatches, ctx: &Context) -> Result<Report, CliError> {
        let n = common::n(m);
        let w = common::one_form(m, "form", n)?;
        let f = common::polynomial(m, "surface", n)?;
        let seed = common::seed(m, ctx);
        let quotient = invariance_quotient(&w, &f)?;
        let probe = match squarefree_probe(&f, DEFAULT_PROBE_LINES, seed)? {
            SquarefreeVerdict::ProbablyReduced => "probably_reduced",
            SquarefreeVerdict::NotReduced => "not_reduced",
        };
        Ok(Report::new(self.name(), Verdict::Holds(quotient.is_some()))
            .input("n", n)
            .input("form", print_form(&w))
            .input("surface", print_polynomial(&f))
            .input("seed", seed)
            .witness(json!({
                "quotient": quotient.as_ref().map(print_form),
                "squarefree_probe": probe,
            })))
    }
}

pub struct Radial;

impl Command for Radial {
    fn name(&self) -> &'static str {
        "check radial"
    }

    fn about(&self) -> &'static str {
        "Does Ω annihilate the radial field R = Σ z_j ∂/∂z_j?"
    }

    fn args(&self) -> Vec<Arg> {
        vec![common::n_arg(), common::form_arg()]
    }

    fn run(&self, m: &ArgMatches, _: &Context) -> Result<Report, CliError> {
        let n = common::n(m);
        let w = common::one_form(m, "form", n)?;
        let holds = radial_annihilation(&w)?;
        let contraction = w.contract(&radial_field(n))?.as_function()?;
        Ok(Report::new(self.name(), Verdict::Holds(holds))
            .input("n", n)
            .input("form", print_form(&w))
            .witness(json!({ "contraction": print_polynomial(&contraction) })))
    }
}

pub struct Transversal;

impl Command for Transversal {
    fn name(&self) -> &'static str {
        "check transversal"
    }

    fn about(&self) -> &'static str {
        "Sample the sphere |z| = R for points where Ker Ω is tangent to it"
    }

    fn args(&self) -> Vec<Arg> {
        vec![
            common::n_arg(),
            common::form_arg(),
            Arg::new("radius")
                .long("radius")
                .value_parser(value_parser!(f64))
                .default_value("1"),
            Arg::new("samples")
                .long("samples")
                .value_parser(value_parser!(u64).range(1..=100_000_000))
                .default_value("1024"),
            common::seed_arg(),
            Arg::new("tol")
                .long("tol")
                .value_parser(value_parser!(f64))
                .default_value("1e-9"),
        ]
    }

    fn run(&self, m: &ArgMatches, ctx: &Context) -> Result<Report, CliError> {
        let n = common::n(m);
        let w = common::one_form(m, "form", n)?;
        let opts = TransversalityOptions {
            radius: common::positive_f64(m, "radius")?,
            samples: *m.get_one::<u64>("samples").expect("default") as usize,
            seed: common::seed(m, ctx),
            tol: common::positive_f64(m, "tol")?,
        };
        let r = transversality_sample(&w, &opts)?;
        let tangent: Vec<Value> = r
            .tangent_points
            .iter()
            .map(|p| Value::Array(p.coords().iter().copied().map(complex).collect()))
            .collect();
        Ok(Report::new(
            self.name(),
            Verdict::Holds(r.transverse() && r.dimension_parity_ok),
        )
        .input("n", n)
        .input("form", print_form(&w))
        .input("radius", opts.radius)
        .input("samples", opts.samples)
        .input("seed", opts.seed)
        .input("tol", opts.tol)
        .witness(json!({
            "min_margin": r.min_margin,
            "singular_hits": r.singular_hits,
            "tangent_count": tangent.len(),
            "tangent_points": tangent,
            "dimension_parity_ok": r.dimension_parity_ok,
        })))
    }
}

pub struct SimpleSing;

impl Command for SimpleSing {
    fn name(&self) -> &'static str {
        "check simple-sing"
    }

    fn about(&self) -> &'static str {
        "Is the point a zero of Ω with nonsingular Jacobian?"
    }

    fn args(&self) -> Vec<Arg> {
        vec![common::n_arg(), common::form_arg(), common::point_arg()]
    }

    fn run(&self, m: &ArgMatches, _: &Context) -> Result<Report, CliError> {
        let n = common::n(m);
        let w = common::one_form(m, "form", n)?;
        let p = common::point(m, n)?;
        let report = Report::new(self.name(), Verdict::Ok)
            .input("n", n)
            .input("form", print_form(&w))
            .input("point", print_point(&p));
        let (holds, witness) = match simple_singularity(&w, &p) {
            Ok(holds) => {
                let det = jacobian_at(&w, &p)?.det()?;
                (
                    holds,
                    json!({ "vanishes": true, "jacobian_det": print_constant(&det) }),
                )
            }
            Err(Error::NotSingular) => (false, json!({ "vanishes": false, "jacobian_det": null })),
            Err(e) => return Err(e.into()),
        };
        Ok(Report {
            verdict: Verdict::Holds(holds),
            ..report
        }
        .witness(witness))
    }
}

pub struct Isotropic;

impl Command for Isotropic {
    fn name(&self) -> &'static str {
        "check isotropic"
    }

    fn about(&self) -> &'static str {
        "Bound the dimension of integral manifolds through a point via rank dΩ"
    }

    fn args(&self) -> Vec<Arg> {
        vec![common::n_arg(), common::form_arg(), common::point_arg()]
    }

    fn run(&self, m: &ArgMatches, _: &Context) -> Result<Report, CliError> {
        let n = common::n(m);
        let w = common::one_form(m, "form", n)?;
        let p = common::point(m, n)?;
        let cert = isotropic_dim_bound(&w, &p)?;
        let kind = match cert.kind {
            CertificateKind::NoIntegralHypersurface => "no_integral_hypersurface",
            CertificateKind::NotApplicable => "not_applicable",
        };
        Ok(Report::new(self.name(), Verdict::Holds(cert.fires()))
            .input("n", n)
            .input("form", print_form(&w))
            .input("point", print_point(&p))
            .witness(json!({
                "kind": kind,
                "rank_at_point": cert.rank_at_point,
                "dim_bound": cert.dim_bound,
            })))
    }
}

pub struct Darboux;

impl Command for Darboux {
    fn name(&self) -> &'static str {
        "check darboux"
    }

    fn about(&self) -> &'static str {
        "Build P dQ - Q dP and test it and random members of the pencil λP - μQ"
    }

    fn args(&self) -> Vec<Arg> {
        vec![
            common::n_arg(),
            Arg::new("P")
                .long("P")
                .required(true)
                .help("First polynomial of the pencil"),
            Arg::new("Q")
                .long("Q")
                .required(true)
                .help("Second polynomial of the pencil"),
            Arg::new("pencil")
                .long("pencil")
                .value_parser(value_parser!(u64).range(0..=1000))
                .default_value("5")
                .help("Number of random pencil members to test"),
            Arg::new("form")
                .long("form")
                .help("Optional one-form expected to equal P dQ - Q dP"),
            common::seed_arg(),
        ]
    }

    fn run(&self, m: &ArgMatches, ctx: &Context) -> Result<Report, CliError> {
        let n = common::n(m);
        let p = common::polynomial(m, "P", n)?;
        let q = common::polynomial(m, "Q", n)?;
        let members = *m.get_one::<u64>("pencil").expect("default") as usize;
        let seed = common::seed(m, ctx);
        let omega = darboux_form(&p, &q)?;
        let ob = integrability_obstruction(&omega)?;
        let pencil = pfaff_core::criteria::pencil_check(&p, &q, members, seed)?;
        let mut report = Report::new(self.name(), Verdict::Ok)
            .input("n", n)
            .input("P", print_polynomial(&p))
            .input("Q", print_polynomial(&q))
            .input("pencil", members)
            .input("seed", seed);
        let mut holds = ob.is_integrable && pencil.all_invariant();
        let mut matches = Value::Null;
        if m.contains_id("form") {
            let w = common::one_form(m, "form", n)?;
            report = report.input("form", print_form(&w));
            holds &= w == omega;
            matches = Value::Bool(w == omega);
        }
        let members: Vec<Value> = pencil
            .members
            .iter()
            .map(|mb| {
                json!({
                    "lambda": print_constant(&mb.lambda),
                    "mu": print_constant(&mb.mu),
                    "surface": print_polynomial(&mb.surface),
                    "invariant": mb.invariant,
                })
            })
            .collect();
        report.verdict = Verdict::Holds(holds);
        Ok(report.witness(json!({
            "darboux_form": print_form(&omega),
            "obstruction": print_form(&ob.form),
            "form_matches": matches,
            "members": members,
            "rejected_draws": pencil.rejected,
        })))
    }
}
