//! The contract every concrete model of `C(K)` implements.
//!
//! A model supplies the l-group operations on its elements, the cozero-set
//! map into an exact set algebra on `K`, a dominance oracle deciding
//! `|f| <= n|g|`, and `realize_open`, which builds a non-negative element with
//! a prescribed open cozero-set.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num::BigInt;
use thiserror::Error;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("set is not open: {0}")]
    NotOpen(String),
    #[error("set is not closed: {0}")]
    NotClosed(String),
    #[error("open set has no cozero realization in this model: {0}")]
    NotRealizable(String),
    #[error("point {0} is not in the space")]
    BadPoint(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
}

/// Why `|f| <= n|g|` fails for every `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate<P> {
    /// `f(point) != 0` while `g(point) = 0`.
    ZeroStructure { point: P },
    /// On the residue class `residue mod modulus` the tail of `|f|` decays
    /// strictly slower (order `f_order` in `1/x`) than that of `|g|`.
    TailOrder {
        residue: u64,
        modulus: u64,
        f_order: usize,
        g_order: usize,
    },
}

/// Outcome of the dominance oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dominance<P> {
    /// `|f| <= n|g|` holds everywhere with this `n >= 1`.
    Bounded(BigInt),
    Unbounded(Certificate<P>),
}

impl<P> Dominance<P> {
    pub fn witness(&self) -> Option<&BigInt> {
        match self {
            Dominance::Bounded(n) => Some(n),
            Dominance::Unbounded(_) => None,
        }
    }
}

/// A computable compact space together with an l-group of continuous
/// functions on it.
pub trait Space: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;
    type Set: Clone + Eq + Debug + Display + Send + Sync;
    type Point: Clone + Eq + Debug + Display + Send + Sync;

    fn name(&self) -> String;

    fn constant(&self, q: &Rat) -> Self::Elem;
    fn add(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem;
    fn neg(&self, f: &Self::Elem) -> Self::Elem;
    fn scale(&self, f: &Self::Elem, k: i64) -> Self::Elem;
    fn meet(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem;
    fn join(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem;

    fn zero(&self) -> Self::Elem {
        self.constant(&Rat::from_integer(0.into()))
    }

    fn unit(&self) -> Self::Elem {
        self.constant(&Rat::from_integer(1.into()))
    }

    fn abs(&self, f: &Self::Elem) -> Self::Elem {
        self.join(f, &self.neg(f))
    }

    fn eval(&self, f: &Self::Elem, p: &Self::Point) -> Rat;

    fn coz(&self, f: &Self::Elem) -> Self::Set;

    fn zset(&self, f: &Self::Elem) -> Self::Set {
        self.complement(&self.coz(f))
    }

    fn empty_set(&self) -> Self::Set;
    fn whole_set(&self) -> Self::Set;
    fn union(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    fn intersect(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    fn complement(&self, a: &Self::Set) -> Self::Set;
    fn closure(&self, a: &Self::Set) -> Self::Set;
    fn interior(&self, a: &Self::Set) -> Self::Set;
    fn contains_point(&self, a: &Self::Set, p: &Self::Point) -> bool;
    fn singleton(&self, p: &Self::Point) -> Self::Set;

    fn is_subset(&self, a: &Self::Set, b: &Self::Set) -> bool {
        self.is_empty(&self.intersect(a, &self.complement(b)))
    }

    fn is_empty(&self, a: &Self::Set) -> bool {
        *a == self.empty_set()
    }

    fn is_whole(&self, a: &Self::Set) -> bool {
        *a == self.whole_set()
    }

    fn is_open(&self, a: &Self::Set) -> bool {
        self.interior(a) == *a
    }

    fn is_closed(&self, a: &Self::Set) -> bool {
        self.closure(a) == *a
    }

    fn has_point(&self, p: &Self::Point) -> bool;

    /// Points used when a check has to quantify over maximal ideals.
    fn sample_points(&self) -> Vec<Self::Point>;

    fn dominance(&self, f: &Self::Elem, g: &Self::Elem) -> Dominance<Self::Point>;

    /// A non-negative element whose cozero-set is exactly `u`.
    fn realize_open(&self, u: &Self::Set) -> Result<Self::Elem, ModelError>;

    /// Whether `f` lies in the group described by a normal-form family.
    /// Models without families reject every element.
    fn in_family(&self, _family: crate::terms::Family, _f: &Self::Elem) -> bool {
        false
    }

    /// Labelled representatives of every cozero/tail profile occurring in a
    /// normal-form family, if this model knows the family. Used by the exact
    /// class deciders.
    fn family_representatives(&self, _family: crate::terms::Family) -> Option<Vec<(String, Self::Elem)>> {
        None
    }
}
