//! Recursive descent over the token stream.
//!
//! ```text
//! expr   := wterm (('+' | '-') wterm)*
//! wterm  := term ('/\' term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' nat)?
//! atom   := rational 'i'? | 'i' | 'z'k | 'dz'k | '(' expr ')'
//! list   := '[' (expr (',' expr)*)? ']'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ast::{Expr, Node};
use super::lexer::{tokenize, Tok, Token};
use super::{Pos, SyntaxError};

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, context: &str) -> Result<Token, SyntaxError> {
        let t = self.next();
        if t.tok == tok {
            Ok(t)
        } else {
            Err(SyntaxError::new(
                t.pos,
                format!(
                    "expected {} {context}, found {}",
                    tok.describe(),
                    t.tok.describe()
                ),
            ))
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.wterm()?;
        loop {
            let pos = self.peek().pos;
            let build: fn(Box<Expr>, Box<Expr>) -> Node = match self.peek().tok {
                Tok::Plus => Node::Sum,
                Tok::Minus => Node::Difference,
                _ => return Ok(lhs),
            };
            self.next();
            let rhs = self.wterm()?;
            lhs = Expr::new(build(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn wterm(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        while self.peek().tok == Tok::Wedge {
            let pos = self.next().pos;
            let rhs = self.term()?;
            lhs = Expr::new(Node::Wedge(Box::new(lhs), Box::new(rhs)), pos);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Star {
            let pos = self.next().pos;
            let rhs = self.unary()?;
            lhs = Expr::new(Node::Product(Box::new(lhs), Box::new(rhs)), pos);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.peek().tok == Tok::Minus {
            let pos = self.next().pos;
            let inner = self.unary()?;
            return Ok(Expr::new(Node::Neg(Box::new(inner)), pos));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next().pos;
        let t = self.next();
        let Tok::Int(n) = t.tok else {
            return Err(SyntaxError::new(
                t.pos,
                format!(
                    "exponent must be a non-negative integer literal, found {}",
                    t.tok.describe()
                ),
            ));
        };
        let e = n
            .to_u32()
            .ok_or_else(|| SyntaxError::new(t.pos, format!("exponent `{n}` is too large")))?;
        Ok(Expr::new(Node::Power(Box::new(base), e), caret))
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let t = self.next();
        let node = match t.tok {
            Tok::Int(num) => {
                let value = self.rational_tail(num)?;
                if self.eat(&Tok::I) {
                    Node::Imaginary(value)
                } else {
                    Node::Rational(value)
                }
            }
            Tok::I => Node::Imaginary(BigRational::from_integer(1.into())),
            Tok::Z(k) => Node::Var(k),
            Tok::Dz(k) => Node::Diff(k),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "to close `(`")?;
                return Ok(Expr::new(inner.node, t.pos));
            }
            other => {
                return Err(SyntaxError::new(
                    t.pos,
                    format!(
                        "expected a number, `i`, a variable or `(`, found {}",
                        other.describe()
                    ),
                ))
            }
        };
        Ok(Expr::new(node, t.pos))
    }

    fn rational_tail(&mut self, num: BigInt) -> Result<BigRational, SyntaxError> {
        if self.peek().tok != Tok::Slash {
            return Ok(BigRational::from_integer(num));
        }
        self.next();
        let t = self.next();
        match t.tok {
            Tok::Int(den) if den.is_zero() => Err(SyntaxError::new(t.pos, "zero denominator")),
            Tok::Int(den) => Ok(BigRational::new(num, den)),
            other => Err(SyntaxError::new(
                t.pos,
                format!(
                    "expected a denominator after `/`, found {}",
                    other.describe()
                ),
            )),
        }
    }

    fn finish(&mut self) -> Result<(), SyntaxError> {
        let t = self.peek();
        if t.tok == Tok::Eof {
            Ok(())
        } else {
            Err(SyntaxError::new(
                t.pos,
                format!("unexpected {}", t.tok.describe()),
            ))
        }
    }
}

fn parser(src: &str) -> Result<Parser, SyntaxError> {
    let toks = tokenize(src)?;
    if toks.len() == 1 {
        return Err(SyntaxError::new(Pos::START, "empty input"));
    }
    Ok(Parser { toks, at: 0 })
}

pub fn parse_expr(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = parser(src)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses `[e1, …, ek]`.
pub fn parse_list(src: &str) -> Result<Vec<Expr>, SyntaxError> {
    let mut p = parser(src)?;
    p.expect(Tok::LBracket, "to open a list")?;
    let mut items = Vec::new();
    if !p.eat(&Tok::RBracket) {
        loop {
            items.push(p.expr()?);
            if p.eat(&Tok::Comma) {
                continue;
            }
            p.expect(Tok::RBracket, "or `,` in list")?;
            break;
        }
    }
    p.finish()?;
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(e: &Expr) -> String {
        match &e.node {
            Node::Rational(r) => r.to_string(),
            Node::Imaginary(r) => format!("{r}i"),
            Node::Var(k) => format!("z{k}"),
            Node::Diff(k) => format!("dz{k}"),
            Node::Neg(a) => format!("(-{})", shape(a)),
            Node::Sum(a, b) => format!("({} + {})", shape(a), shape(b)),
            Node::Difference(a, b) => format!("({} - {})", shape(a), shape(b)),
            Node::Product(a, b) => format!("({} * {})", shape(a), shape(b)),
            Node::Power(a, n) => format!("({}^{n})", shape(a)),
            Node::Wedge(a, b) => format!("({} /\\ {})", shape(a), shape(b)),
        }
    }

    #[test]
    fn precedence() {
        let e = parse_expr("dz1 /\\ dz2 + z1*dz3").unwrap();
        assert_eq!(shape(&e), "((dz1 /\\ dz2) + (z1 * dz3))");
        let e = parse_expr("2*z1*dz2/\\dz3/\\dz4").unwrap();
        assert_eq!(shape(&e), "((((2 * z1) * dz2) /\\ dz3) /\\ dz4)");
        let e = parse_expr("-z1^2 - 3/2i").unwrap();
        assert_eq!(shape(&e), "((-(z1^2)) - 3/2i)");
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("[z1, -z2]").unwrap().len(), 2);
        assert_eq!(parse_list("[]").unwrap().len(), 0);
        assert!(parse_list("[z1 z2]").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_expr("z1 +\n  * z2").unwrap_err();
        assert_eq!(e.pos, Pos { line: 2, column: 3 });
        let e = parse_expr("z1^z2").unwrap_err();
        assert_eq!(e.pos, Pos { line: 1, column: 4 });
        assert!(parse_expr("(z1").is_err());
        assert!(parse_expr("1/0").is_err());
        assert!(parse_expr("   ").is_err());
        assert!(parse_expr("z1 z2").is_err());
    }
}
