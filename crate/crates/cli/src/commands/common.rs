//! Flags shared between commands and their parsing.

use clap::{value_parser, Arg, ArgMatches};
use num_complex::Complex64;
use num_traits::Zero;
use pfaff_core::{GaussianRational, KForm, Polynomial};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::registry::Context;
use crate::syntax::{self, SyntaxError};

pub fn n_arg() -> Arg {
    Arg::new("n")
        .long("n")
        .required(true)
        .value_parser(value_parser!(u64).range(1..=64))
        .help("Ambient dimension")
}

pub fn form_arg() -> Arg {
    Arg::new("form")
        .long("form")
        .required(true)
        .help("One-form, e.g. \"z1*dz2 - z2*dz1\"")
}

pub fn seed_arg() -> Arg {
    Arg::new("seed")
        .long("seed")
        .value_parser(value_parser!(u64))
        .help("Random seed (default: $PFAFF_SEED, else 0)")
}

pub fn point_arg() -> Arg {
    Arg::new("point")
        .long("point")
        .help("Point as [c1, ..., cn] (default: origin)")
}

pub fn n(m: &ArgMatches) -> usize {
    *m.get_one::<u64>("n").expect("required") as usize
}

pub fn seed(m: &ArgMatches, ctx: &Context) -> u64 {
    m.get_one::<u64>("seed")
        .copied()
        .unwrap_or(ctx.default_seed)
}

pub fn text<'m>(m: &'m ArgMatches, flag: &str) -> &'m str {
    m.get_one::<String>(flag)
        .map(String::as_str)
        .expect("required")
}

fn syntax(flag: &str, source: &str, error: SyntaxError) -> CliError {
    CliError::Syntax {
        flag: flag.to_string(),
        source: source.to_string(),
        error,
    }
}

pub fn one_form(m: &ArgMatches, flag: &str, n: usize) -> Result<KForm, CliError> {
    let src = text(m, flag);
    syntax::parse_kform(src, n, 1).map_err(|e| syntax(flag, src, e))
}

pub fn polynomial(m: &ArgMatches, flag: &str, n: usize) -> Result<Polynomial, CliError> {
    let src = text(m, flag);
    syntax::parse_polynomial(src, n).map_err(|e| syntax(flag, src, e))
}

pub fn constant(m: &ArgMatches, flag: &str) -> Result<GaussianRational, CliError> {
    let src = text(m, flag);
    syntax::parse_constant(src).map_err(|e| syntax(flag, src, e))
}

pub fn point(m: &ArgMatches, n: usize) -> Result<Vec<GaussianRational>, CliError> {
    match m.get_one::<String>("point") {
        None => Ok(vec![GaussianRational::zero(); n]),
        Some(src) => syntax::parse_point(src, n).map_err(|e| syntax("point", src, e)),
    }
}

pub fn complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn positive_f64(m: &ArgMatches, flag: &str) -> Result<f64, CliError> {
    let v = *m.get_one::<f64>(flag).expect("has default");
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::input(format!(
            "--{flag} must be a positive finite number, got {v}"
        )))
    }
}
