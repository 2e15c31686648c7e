//! Surface syntax for polynomials, forms, vector fields and points.
//!
//! `/\` is the wedge product and `^` is reserved for integer powers. Wedge
//! binds looser than `*` and tighter than `+`/`-`, so
//! `z1*dz2/\dz3 - dz1/\dz2` reads as two summands.

mod ast;
mod elaborate;
mod lexer;
mod parser;
mod printer;

use std::fmt;

use pfaff_core::{GaussianRational, KForm, Polynomial, VectorField};

pub use ast::{Expr, Node};
pub use parser::{parse_expr, parse_list};
pub use printer::{print_constant, print_field, print_form, print_point, print_polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub const START: Pos = Pos { line: 1, column: 1 };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

impl SyntaxError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        Self {
            pos,
            message: message.into(),
        }
    }

    /// The message followed by the offending source line and a caret.
    pub fn render(&self, src: &str) -> String {
        let line = src.lines().nth(self.pos.line - 1).unwrap_or("");
        let pad: String = line
            .chars()
            .take(self.pos.column - 1)
            .map(|c| if c == '\t' { '\t' } else { ' ' })
            .collect();
        format!("{self}\n  | {line}\n  | {pad}^")
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.pos.line, self.pos.column, self.message
        )
    }
}

impl std::error::Error for SyntaxError {}

/// Parses a form of whatever degree the expression has.
pub fn parse_form(src: &str, n: usize) -> Result<KForm, SyntaxError> {
    elaborate::elaborate(&parse_expr(src)?, n)
}

/// Parses a `k`-form; a zero expression of any degree is accepted.
pub fn parse_kform(src: &str, n: usize, k: usize) -> Result<KForm, SyntaxError> {
    let w = parse_form(src, n)?;
    if w.degree() == k {
        Ok(w)
    } else if w.is_zero() {
        Ok(KForm::zero(n, k))
    } else {
        Err(SyntaxError::new(
            Pos::START,
            format!("expected a {k}-form, found a {}-form", w.degree()),
        ))
    }
}

pub fn parse_polynomial(src: &str, n: usize) -> Result<Polynomial, SyntaxError> {
    Ok(parse_kform(src, n, 0)?.as_function().expect("0-form"))
}

/// Parses `[p1, …, pn]`.
pub fn parse_field(src: &str, n: usize) -> Result<VectorField, SyntaxError> {
    let items = parse_list(src)?;
    if items.len() != n {
        return Err(SyntaxError::new(
            Pos::START,
            format!("expected {n} components, found {}", items.len()),
        ));
    }
    let comps = items
        .iter()
        .map(|e| function(e, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VectorField::new(comps).expect("n components"))
}

/// Parses `[c1, …, cn]` with constant entries.
pub fn parse_point(src: &str, n: usize) -> Result<Vec<GaussianRational>, SyntaxError> {
    let items = parse_list(src)?;
    if items.len() != n {
        return Err(SyntaxError::new(
            Pos::START,
            format!(
                "expected a point with {n} coordinates, found {}",
                items.len()
            ),
        ));
    }
    items.iter().map(constant).collect()
}

/// Parses a constant expression such as `1/2`, `-i` or `(1 + 2i)^2`.
pub fn parse_constant(src: &str) -> Result<GaussianRational, SyntaxError> {
    constant(&parse_expr(src)?)
}

fn function(e: &Expr, n: usize) -> Result<Polynomial, SyntaxError> {
    let w = elaborate::elaborate(e, n)?;
    match w.as_function() {
        Ok(p) => Ok(p),
        Err(_) if w.is_zero() => Ok(Polynomial::zero(n)),
        Err(_) => Err(SyntaxError::new(
            e.pos,
            format!("expected a function, found a {}-form", w.degree()),
        )),
    }
}

fn constant(e: &Expr) -> Result<GaussianRational, SyntaxError> {
    // n = 0: any variable is out of range, which is the error we want
    let p = function(e, 0).map_err(|err| {
        SyntaxError::new(err.pos, format!("{}; expected a constant", err.message))
    })?;
    Ok(p.constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pfaff_core::models::omega_j;

    #[test]
    fn model_forms() {
        assert_eq!(parse_kform("z1*dz2 - z2*dz1", 2, 1).unwrap(), omega_j(1));
        let w = parse_form("(1/2 + 3i)*z1^2*dz3", 3).unwrap();
        assert_eq!(w.degree(), 1);
        assert_eq!(w.terms().count(), 1);
        assert_eq!(print_form(&w), "(1/2 + 3i)*z1^2*dz3");
    }

    #[test]
    fn degree_mismatch() {
        let e = parse_form("dz1 /\\ dz2 + z1*dz3", 3).unwrap_err();
        assert!(e.message.contains("degree mismatch"), "{e}");
        assert_eq!(
            e.pos,
            Pos {
                line: 1,
                column: 12
            }
        );
    }

    #[test]
    fn zero_summands_adopt_degree() {
        let w = parse_kform("0 + dz1 - dz1", 2, 1).unwrap();
        assert!(w.is_zero());
        assert_eq!(parse_kform("0", 3, 2).unwrap(), KForm::zero(3, 2));
        assert_eq!(parse_form("0*z1 + dz1", 2).unwrap().degree(), 1);
    }

    #[test]
    fn out_of_range_variables() {
        let e = parse_form("z1*dz3", 2).unwrap_err();
        assert_eq!(e.pos, Pos { line: 1, column: 4 });
        assert!(e.message.contains("ambient dimension is 2"));
    }

    #[test]
    fn products_and_powers() {
        assert!(parse_form("dz1*dz2", 2).is_err());
        assert!(parse_form("dz1^2", 2).is_err());
        assert_eq!(parse_form("dz1/\\dz1", 2).unwrap(), KForm::zero(2, 2));
    }

    #[test]
    fn points_and_fields() {
        let p = parse_point("[1/2, -i, (1 + i)^2]", 3).unwrap();
        assert_eq!(print_point(&p), "[1/2, -i, 2i]");
        assert!(parse_point("[z1]", 1).is_err());
        assert!(parse_point("[1]", 2).is_err());
        let x = parse_field("[z1, z2^2]", 2).unwrap();
        assert_eq!(print_field(&x), "[z1, z2^2]");
    }

    #[test]
    fn render_points_at_column() {
        let src = "z1 + )";
        let e = parse_form(src, 1).unwrap_err();
        assert_eq!(e.render(src), "line 1, column 6: expected a number, `i`, a variable or `(`, found `)`\n  | z1 + )\n  |      ^");
    }
}
