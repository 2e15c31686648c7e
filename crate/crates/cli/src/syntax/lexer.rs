use num_bigint::BigInt;

use super::{Pos, SyntaxError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    I,
    Z(usize),
    Dz(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Wedge,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::I => "`i`".into(),
            Tok::Z(k) => format!("`z{k}`"),
            Tok::Dz(k) => format!("`dz{k}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Wedge => "`/\\`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        s
    }

    fn index(&mut self, start: Pos, what: &str) -> Result<usize, SyntaxError> {
        let d = self.digits();
        if d.is_empty() {
            return Err(SyntaxError::new(
                start,
                format!("expected an index after `{what}`"),
            ));
        }
        match d.parse::<usize>() {
            Ok(0) => Err(SyntaxError::new(
                start,
                format!("`{what}0` is not a variable; indices start at 1"),
            )),
            Ok(k) => Ok(k),
            Err(_) => Err(SyntaxError::new(start, format!("index `{d}` is too large"))),
        }
    }
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut cur = Cursor {
        chars: src.chars().peekable(),
        pos: Pos { line: 1, column: 1 },
    };
    let mut out = Vec::new();
    while let Some(c) = cur.peek() {
        let pos = cur.pos;
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        let tok = if c.is_ascii_digit() {
            Tok::Int(cur.digits().parse().expect("ascii digits"))
        } else {
            cur.bump();
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '/' if cur.peek() == Some('\\') => {
                    cur.bump();
                    Tok::Wedge
                }
                '/' => Tok::Slash,
                'i' => Tok::I,
                'z' => Tok::Z(cur.index(pos, "z")?),
                'd' if cur.peek() == Some('z') => {
                    cur.bump();
                    Tok::Dz(cur.index(pos, "dz")?)
                }
                other => {
                    return Err(SyntaxError::new(
                        pos,
                        format!("unexpected character `{other}`"),
                    ))
                }
            }
        };
        // identifiers run together (`z1i`, `iz`) are almost always typos
        if matches!(tok, Tok::I | Tok::Z(_) | Tok::Dz(_)) {
            if let Some(next) = cur.peek().filter(|c| c.is_ascii_alphabetic()) {
                return Err(SyntaxError::new(
                    cur.pos,
                    format!("unexpected character `{next}`"),
                ));
            }
        }
        out.push(Token { tok, pos });
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: cur.pos,
    });
    Ok(out)
}
