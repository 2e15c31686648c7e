//! Canonical text for polynomials, forms and vector fields.
//!
//! Terms are listed by monomial in decreasing graded-lex order; terms of a
//! form sharing a monomial follow increasing index tuples. Real and purely
//! imaginary coefficients have their sign pulled out into the joining
//! operator, general complex ones are printed in parentheses.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use pfaff_core::{GaussianRational, KForm, Monomial, Polynomial, VectorField};

enum Magnitude {
    /// Real, or `±q·i` with `imaginary`.
    Axis {
        value: BigRational,
        imaginary: bool,
    },
    Complex(GaussianRational),
}

fn split_sign(c: &GaussianRational) -> (bool, Magnitude) {
    if c.im().is_zero() {
        (
            c.re().is_negative(),
            Magnitude::Axis {
                value: c.re().abs(),
                imaginary: false,
            },
        )
    } else if c.re().is_zero() {
        (
            c.im().is_negative(),
            Magnitude::Axis {
                value: c.im().abs(),
                imaginary: true,
            },
        )
    } else {
        (false, Magnitude::Complex(c.clone()))
    }
}

fn axis(value: &BigRational, imaginary: bool) -> String {
    match (imaginary, value.is_one()) {
        (true, true) => "i".into(),
        (true, false) => format!("{value}i"),
        (false, _) => value.to_string(),
    }
}

fn complex(c: &GaussianRational) -> String {
    let sign = if c.im().is_negative() { '-' } else { '+' };
    format!("({} {sign} {})", c.re(), axis(&c.im().abs(), true))
}

fn monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (j, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("z{}", j + 1)),
            _ => parts.push(format!("z{}^{e}", j + 1)),
        }
    }
    parts.join("*")
}

fn differentials(idx: &[usize]) -> String {
    idx.iter()
        .map(|j| format!("dz{}", j + 1))
        .collect::<Vec<_>>()
        .join("/\\")
}

/// Writes a signed sum of `coefficient · rest` terms, where `rest` is a
/// (possibly empty) product of non-constant factors.
fn join_terms<'a>(terms: impl Iterator<Item = (&'a GaussianRational, String)>) -> String {
    let mut out = String::new();
    for (c, rest) in terms {
        let (negative, mag) = split_sign(c);
        let lead = match &mag {
            Magnitude::Axis { value, imaginary } if value.is_one() && !rest.is_empty() => {
                if *imaginary {
                    "i".to_string()
                } else {
                    String::new()
                }
            }
            Magnitude::Axis { value, imaginary } => axis(value, *imaginary),
            Magnitude::Complex(c) => complex(c),
        };
        let body = match (lead.is_empty(), rest.is_empty()) {
            (true, _) => rest,
            (false, true) => lead,
            (false, false) => format!("{lead}*{rest}"),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_constant(c: &GaussianRational) -> String {
    join_terms(std::iter::once((c, String::new())).filter(|(c, _)| !c.is_zero()))
}

pub fn print_polynomial(p: &Polynomial) -> String {
    join_terms(p.terms().rev().map(|(m, c)| (c, monomial(m))))
}

pub fn print_form(w: &KForm) -> String {
    let mut flat: Vec<(&Monomial, &[usize], &GaussianRational)> = w
        .terms()
        .flat_map(|(idx, p)| p.terms().map(move |(m, c)| (m, idx, c)))
        .collect();
    flat.sort_by(|a, b| b.0.cmp(a.0).then_with(|| a.1.cmp(b.1)));
    join_terms(flat.into_iter().map(|(m, idx, c)| {
        let mono = monomial(m);
        let dz = differentials(idx);
        let rest = match (mono.is_empty(), dz.is_empty()) {
            (true, _) => dz,
            (false, true) => mono,
            (false, false) => format!("{mono}*{dz}"),
        };
        (c, rest)
    }))
}

pub fn print_field(x: &VectorField) -> String {
    print_list(x.components().iter().map(print_polynomial))
}

pub fn print_point(p: &[GaussianRational]) -> String {
    print_list(p.iter().map(print_constant))
}

fn print_list(items: impl Iterator<Item = String>) -> String {
    let mut out = String::from("[");
    for (i, s) in items.enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{s}");
    }
    out.push(']');
    out
}
