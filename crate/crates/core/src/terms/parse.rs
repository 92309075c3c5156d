//! Recursive-descent parser for the ASCII term grammar
//!
//! ```text
//! expr   := meet (('+' | '-') meet)*
//! meet   := scaled (('/\' | '\/') scaled)*
//! scaled := INT '*' scaled | unary
//! unary  := '-' scaled | '|' expr '|' | RAT | NAME | '(' expr ')'
//! ```
//!
//! Rational literals denote multiples of the unit. `a - b` is accepted as
//! sugar for `a + -b`.

use num::{BigInt, ToPrimitive, Zero};
use thiserror::Error;

use super::ast::Term;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Rat(Rat),
    Name(String),
    Plus,
    Minus,
    Star,
    Meet,
    Join,
    Bar,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| ParseError { pos, msg: msg.to_string() };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'|' => out.push((start, Tok::Bar)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'/' if bytes.get(i + 1) == Some(&b'\\') => {
                out.push((start, Tok::Meet));
                i += 1;
            }
            b'\\' if bytes.get(i + 1) == Some(&b'/') => {
                out.push((start, Tok::Join));
                i += 1;
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = text[start..=i].parse().expect("digits");
                if bytes.get(i + 1) == Some(&b'/') && bytes.get(i + 2).is_some_and(u8::is_ascii_digit) {
                    let den_start = i + 2;
                    i = den_start;
                    while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                        i += 1;
                    }
                    let den: BigInt = text[den_start..=i].parse().expect("digits");
                    if den.is_zero() {
                        return Err(err(start, "zero denominator"));
                    }
                    out.push((start, Tok::Rat(Rat::new(num, den))));
                } else {
                    out.push((start, Tok::Int(num)));
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Name(text[start..=i].to_string())));
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(err(start, &format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.meet()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Term::add(lhs, self.meet()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Term::add(lhs, Term::neg(self.meet()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.scaled()?;
        loop {
            match self.peek() {
                Some(Tok::Meet) => {
                    self.pos += 1;
                    lhs = Term::meet(lhs, self.scaled()?);
                }
                Some(Tok::Join) => {
                    self.pos += 1;
                    lhs = Term::join(lhs, self.scaled()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn scaled(&mut self) -> Result<Term, ParseError> {
        if let (Some(Tok::Int(k)), Some((_, Tok::Star))) = (self.peek(), self.toks.get(self.pos + 1)) {
            let Some(k) = k.to_i64() else {
                return self.fail("scale factor out of range");
            };
            self.pos += 2;
            let inner = self.scaled()?;
            return Ok(if k == 0 {
                Term::Const(Rat::zero())
            } else {
                Term::scale(k, inner)
            });
        }
        if let (Some(Tok::Rat(_)), Some((_, Tok::Star))) = (self.peek(), self.toks.get(self.pos + 1)) {
            return self.fail("scale factor must be an integer");
        }
        self.unary()
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.fail("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Minus => Ok(Term::neg(self.scaled()?)),
            Tok::Bar => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Bar) {
                    return self.fail("expected closing `|`");
                }
                self.pos += 1;
                Ok(Term::abs(inner))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.fail("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Int(n) => Ok(Term::Const(Rat::from_integer(n))),
            Tok::Rat(q) => Ok(Term::Const(q)),
            Tok::Name(name) => Ok(Term::Gen(name)),
            _ => {
                self.pos -= 1;
                self.fail("expected a term")
            }
        }
    }
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let t = p.expr()?;
    if p.pos != p.toks.len() {
        return p.fail("trailing input");
    }
    Ok(t)
}
