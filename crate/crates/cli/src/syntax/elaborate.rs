use pfaff_core::{GaussianRational, KForm, Polynomial};

use super::ast::{Expr, Node};
use super::SyntaxError;

/// Turns an expression into a form on ℂⁿ, tracking degrees.
pub fn elaborate(e: &Expr, n: usize) -> Result<KForm, SyntaxError> {
    let err = |msg: String| SyntaxError::new(e.pos, msg);
    let check_index = |k: usize, prefix: &str| {
        if k > n {
            Err(err(format!(
                "unknown variable `{prefix}{k}`: the ambient dimension is {n}"
            )))
        } else {
            Ok(k - 1)
        }
    };
    let out = match &e.node {
        Node::Rational(r) => constant(n, GaussianRational::real(r.clone())),
        Node::Imaginary(r) => constant(n, GaussianRational::new(Default::default(), r.clone())),
        Node::Var(k) => KForm::function(Polynomial::var(n, check_index(*k, "z")?)),
        Node::Diff(k) => KForm::dz(n, check_index(*k, "dz")?),
        Node::Neg(a) => -elaborate(a, n)?,
        Node::Sum(a, b) | Node::Difference(a, b) => {
            let (x, y) = (elaborate(a, n)?, elaborate(b, n)?);
            let y = if matches!(e.node, Node::Difference(..)) {
                -y
            } else {
                y
            };
            if x.degree() == y.degree() {
                &x + &y
            } else if x.is_zero() {
                y
            } else if y.is_zero() {
                x
            } else {
                let verb = if matches!(e.node, Node::Sum(..)) {
                    "add"
                } else {
                    "subtract"
                };
                return Err(err(format!(
                    "degree mismatch: cannot {verb} a {}-form and a {}-form",
                    x.degree(),
                    y.degree()
                )));
            }
        }
        Node::Product(a, b) => {
            let (x, y) = (elaborate(a, n)?, elaborate(b, n)?);
            if x.degree() == 0 {
                y.mul_function(&function(&x))
                    .expect("same ambient dimension")
            } else if y.degree() == 0 {
                x.mul_function(&function(&y))
                    .expect("same ambient dimension")
            } else {
                return Err(err(format!(
                    "`*` needs a function on one side (found a {}-form and a {}-form); use `/\\` for the wedge product",
                    x.degree(),
                    y.degree()
                )));
            }
        }
        Node::Power(a, exp) => {
            let x = elaborate(a, n)?;
            if x.degree() != 0 {
                return Err(err(format!(
                    "cannot raise a {}-form to a power",
                    x.degree()
                )));
            }
            KForm::function(function(&x).pow(*exp))
        }
        Node::Wedge(a, b) => {
            let (x, y) = (elaborate(a, n)?, elaborate(b, n)?);
            x.wedge(&y).expect("same ambient dimension")
        }
    };
    Ok(out)
}

fn constant(n: usize, c: GaussianRational) -> KForm {
    KForm::function(Polynomial::constant(n, c))
}

fn function(f: &KForm) -> Polynomial {
    f.as_function().expect("degree checked by caller")
}
