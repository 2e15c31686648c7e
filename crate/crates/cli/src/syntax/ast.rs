use num_rational::BigRational;

use super::Pos;

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Rational(BigRational),
    /// `r i`, or bare `i` with `r = 1`.
    Imaginary(BigRational),
    Var(usize),
    Diff(usize),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u32),
    Wedge(Box<Expr>, Box<Expr>),
}

/// An expression node tagged with the position of its first token, or of
/// the operator for binary nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub node: Node,
    pub pos: Pos,
}

impl Expr {
    pub fn new(node: Node, pos: Pos) -> Self {
        Self { node, pos }
    }
}
