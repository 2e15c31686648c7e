use clap::{value_parser, Arg, ArgMatches};
use num_traits::Zero;
use pfaff_core::criteria::{integrability_obstruction, invariant_hypersurface, simple_singularity};
use pfaff_core::models::{
    canonical_j, omega_j, pfaffian, poincare_dulac, remark_family, remark_surface,
};
use pfaff_core::GaussianRational;
use serde_json::json;

use super::common;
use super::matrix::matrix_json;
use crate::error::CliError;
use crate::registry::{Command, Context};
use crate::report::{Report, Verdict};
use crate::syntax::{print_constant, print_field, print_form, print_polynomial};

fn m_arg() -> Arg {
    Arg::new("m")
        .long("m")
        .required(true)
        .value_parser(value_parser!(u64).range(1..=32))
        .help("Half the ambient dimension")
}

fn m_value(m: &ArgMatches) -> usize {
    *m.get_one::<u64>("m").expect("required") as usize
}

pub struct GenJ;

impl Command for GenJ {
    fn name(&self) -> &'static str {
        "gen J"
    }

    fn about(&self) -> &'static str {
        "The linear model Σ (z_{2j-1} dz_{2j} - z_{2j} dz_{2j-1}) and its block matrix J"
    }

    fn args(&self) -> Vec<Arg> {
        vec![m_arg()]
    }

    fn run(&self, m: &ArgMatches, _: &Context) -> Result<Report, CliError> {
        let half = m_value(m);
        let j = canonical_j(half);
        let w = omega_j(half);
        Ok(Report::new(self.name(), Verdict::Ok)
            .input("m", half)
            .witness(json!({
                "form": print_form(&w),
                "matrix": matrix_json(j.matrix()),
                "det": print_constant(&j.det()),
                "pfaffian": print_constant(&pfaffian(&j)),
            })))
    }
}

pub struct GenPd;

impl Command for GenPd {
    fn name(&self) -> &'static str {
        "gen pd"
    }

    fn about(&self) -> &'static str {
        "Poincaré-Dulac model Ω_(ℓ) with its annihilating field ξ_(ℓ)"
    }

    fn args(&self) -> Vec<Arg> {
        vec![Arg::new("ell")
            .long("ell")
            .required(true)
            .value_delimiter(',')
            .value_parser(value_parser!(u32).range(1..=64))
            .help("Comma-separated positive exponents ℓ_1,...,ℓ_m")]
    }

    fn run(&self, m: &ArgMatches, _: &Context) -> Result<Report, CliError> {
        let ell: Vec<u32> = m
            .get_many::<u32>("ell")
            .expect("required")
            .copied()
            .collect();
        let (w, xi) = poincare_dulac(&ell)?;
        let contraction = w.contract(&xi)?.as_function()?;
        Ok(Report::new(self.name(), Verdict::Ok)
            .input("ell", ell)
            .witness(json!({
                "n": w.n(),
                "form": print_form(&w),
                "field": print_field(&xi),
                "contraction": print_polynomial(&contraction),
                "contraction_zero": contraction.is_zero(),
            })))
    }
}

pub struct GenRemark;

impl Command for GenRemark {
    fn name(&self) -> &'static str {
        "gen remark"
    }

    fn about(&self) -> &'static str {
        "Ω = df + f·ν with f = ½ Σ z_j², invariant along {f = 0}"
    }

    fn args(&self) -> Vec<Arg> {
        vec![
            m_arg(),
            Arg::new("nu").long("nu").required(true).help(
                "One-form ν on C^{2m} with coefficients of degree <= 1 and dν(0) nondegenerate",
            ),
        ]
    }

    fn run(&self, m: &ArgMatches, _: &Context) -> Result<Report, CliError> {
        let half = m_value(m);
        let n = 2 * half;
        let nu = common::one_form(m, "nu", n)?;
        let w = remark_family(&nu, half)?;
        let f = remark_surface(half);
        let origin = vec![GaussianRational::zero(); n];
        Ok(Report::new(self.name(), Verdict::Ok)
            .input("m", half)
            .input("nu", print_form(&nu))
            .witness(json!({
                "n": n,
                "form": print_form(&w),
                "surface": print_polynomial(&f),
                "invariant": invariant_hypersurface(&w, &f)?,
                "integrable": integrability_obstruction(&w)?.is_integrable,
                "simple_singularity": simple_singularity(&w, &origin)?,
            })))
    }
}
