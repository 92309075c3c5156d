use std::fmt;

use num::Signed;

use crate::rat::{fmt_rat, Rat};

/// l-group term over named generators and rational multiples of the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(String),
    /// `q · 1`
    Const(Rat),
    Add(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Abs(Box<Term>),
    /// Integer multiple; the factor is never zero.
    Scale(i64, Box<Term>),
}

impl Term {
    pub fn gen(name: &str) -> Term {
        Term::Gen(name.to_string())
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn abs(a: Term) -> Term {
        Term::Abs(Box::new(a))
    }

    pub fn scale(k: i64, a: Term) -> Term {
        Term::Scale(k, Box::new(a))
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Gen(_) | Term::Const(_) => 1,
            Term::Neg(a) | Term::Abs(a) | Term::Scale(_, a) => 1 + a.size(),
            Term::Add(a, b) | Term::Meet(a, b) | Term::Join(a, b) => 1 + a.size() + b.size(),
        }
    }

    fn level(&self) -> u8 {
        match self {
            Term::Add(..) => 0,
            Term::Meet(..) | Term::Join(..) => 1,
            Term::Scale(..) => 2,
            Term::Const(q) if q.is_negative() => 2,
            _ => 3,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        if self.level() < min_level {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Term::Gen(name) => write!(f, "{name}"),
            Term::Const(q) => write!(f, "{}", fmt_rat(q)),
            Term::Add(a, b) => {
                a.write_at(f, 0)?;
                write!(f, " + ")?;
                b.write_at(f, 1)
            }
            Term::Meet(a, b) | Term::Join(a, b) => {
                let op = if matches!(self, Term::Meet(..)) { "/\\" } else { "\\/" };
                a.write_at(f, 1)?;
                write!(f, " {op} ")?;
                b.write_at(f, 2)
            }
            Term::Scale(k, a) => {
                write!(f, "{k}*")?;
                a.write_at(f, 2)
            }
            Term::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, 3)
            }
            Term::Abs(a) => {
                write!(f, "|")?;
                a.write_at(f, 0)?;
                write!(f, "|")
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
