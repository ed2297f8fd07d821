//! Recursive-descent parser for polynomial expressions in `t`.
//!
//! ```text
//! expr    := ('+' | '-')? term (('+' | '-') term)*
//! term    := factor ('*'? factor)*
//! factor  := base ('^' int)?
//! base    := int ('/' int)? | 't' | '(' expr ')'
//! ```
//!
//! A `*` may be omitted between factors, so `3t^2`, `(1/2)t` and `2(t + 1)`
//! are accepted.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{Rational, TPoly};
use crate::error::{Error, Result};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

struct Lexer {
    toks: Vec<(Tok, Pos)>,
}

impl Lexer {
    fn new(src: &str) -> Result<Self> {
        let mut toks = Vec::new();
        let mut pos = Pos { line: 1, column: 1 };
        let mut chars = src.chars().peekable();
        while let Some(&c) = chars.peek() {
            let here = pos;
            if c == '\n' {
                chars.next();
                pos.line += 1;
                pos.column = 1;
                continue;
            }
            if c.is_whitespace() {
                chars.next();
                pos.column += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                    pos.column += 1;
                }
                toks.push((Tok::Int(digits.parse().expect("ascii digits")), here));
                continue;
            }
            let tok = match c {
                't' => Tok::T,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => return Err(syntax(here, format!("unexpected character '{other}'"))),
            };
            chars.next();
            pos.column += 1;
            toks.push((tok, here));
        }
        toks.push((Tok::End, pos));
        Ok(Lexer { toks })
    }
}

fn syntax(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax { line: pos.line, column: pos.column, message: message.into() }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Int(n) => format!("'{n}'"),
        Tok::T => "'t'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.at].0.clone();
        if tok != Tok::End {
            self.at += 1;
        }
        tok
    }

    fn unexpected(&self, wanted: &str) -> Error {
        syntax(self.pos(), format!("expected {wanted}, found {}", describe(self.peek())))
    }

    fn expr(&mut self) -> Result<TPoly> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc * self.factor()?;
                }
                Tok::Int(_) | Tok::T | Tok::LParen => acc = acc * self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<TPoly> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let e = u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| syntax(pos, format!("exponent {n} exceeds {MAX_EXPONENT}")))?;
                Ok(base.pow(e))
            }
            other => Err(syntax(
                pos,
                format!("expected a nonnegative integer exponent, found {}", describe(&other)),
            )),
        }
    }

    fn base(&mut self) -> Result<TPoly> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(TPoly::constant(Rational::from_integer(n)));
                }
                self.bump();
                let pos = self.pos();
                match self.bump() {
                    Tok::Int(d) if !d.is_zero() => Ok(TPoly::constant(Rational::new(n, d))),
                    Tok::Int(_) => Err(syntax(pos, "zero denominator")),
                    other => Err(syntax(
                        pos,
                        format!("expected a positive integer denominator, found {}", describe(&other)),
                    )),
                }
            }
            Tok::T => {
                self.bump();
                Ok(TPoly::monomial(Rational::one(), 1))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, 't' or '('")),
        }
    }
}

/// Parses a polynomial in `t`. Error positions are 1-based and relative to
/// `src`.
pub fn parse_poly(src: &str) -> Result<TPoly> {
    let mut p = Parser { toks: Lexer::new(src)?.toks, at: 0 };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn tp(c: &[i64]) -> TPoly {
        TPoly::from_ints(c)
    }

    #[test]
    fn basic_expressions() {
        assert_eq!(parse_poly("4 - 16 t").unwrap(), tp(&[4, -16]));
        assert_eq!(parse_poly("12 + 16 t - 16 t^2").unwrap(), tp(&[12, 16, -16]));
        assert_eq!(parse_poly("-8t^3 - 1").unwrap(), tp(&[-1, 0, 0, -8]));
        assert_eq!(parse_poly("2*(t+1)^2").unwrap(), tp(&[2, 4, 2]));
        assert_eq!(parse_poly("(1/2)t^2 - 3/4").unwrap(), TPoly::from_coeffs(vec![rat(-3, 4), rat(0, 1), rat(1, 2)]));
        assert_eq!(parse_poly("0").unwrap(), TPoly::zero());
        assert_eq!(parse_poly(" t t ").unwrap(), tp(&[0, 0, 1]));
    }

    #[test]
    fn renders_round_trip() {
        for p in [tp(&[-1, 0, 0, -8]), tp(&[0, 1]), TPoly::from_coeffs(vec![rat(1, 3), rat(-5, 2), rat(7, 1)])] {
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn double_caret_points_at_second_caret() {
        match parse_poly("t^^2") {
            Err(Error::Syntax { line: 1, column: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let at = |s: &str| match parse_poly(s) {
            Err(Error::Syntax { line, column, .. }) => (line, column),
            other => panic!("expected a syntax error for {s:?}, got {other:?}"),
        };
        assert_eq!(at("1 +"), (1, 4));
        assert_eq!(at("(t"), (1, 3));
        assert_eq!(at("t^-1"), (1, 3));
        assert_eq!(at("1/0"), (1, 3));
        assert_eq!(at("x"), (1, 1));
        assert_eq!(at("t\n+ *"), (2, 3));
        assert_eq!(at("t)"), (1, 2));
    }
}
