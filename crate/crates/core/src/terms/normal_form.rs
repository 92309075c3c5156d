//! Normal forms for the three families of sequence groups on `αℕ`.
//!
//! Every element of the group generated by the eventually constant sequences
//! `F` together with
//!
//! - `v = 1/x` (family [`Family::FV`]) is eventually `r + s·v`;
//! - `a = 1/x` on evens, `b = 1/x²` on evens (family [`Family::FAB`]) is
//!   eventually `r + s·a + t·b`;
//! - `a` alone (family [`Family::FA`]) is eventually `r + s·a`.
//!
//! Cozero-sets and dominance between family members depend only on which of
//! `r, s, t` vanish (the tail profile) plus finitely many points, which is
//! what makes the exact class deciders possible.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use thiserror::Error;

use crate::alphan::{AlphaN, AsymptoticSequence, TailPoly};
use crate::rat::{fmt_rat, rat, Rat};
use crate::space::Space;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    FV,
    FAB,
    FA,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::FV, Family::FAB, Family::FA];

    pub fn name(self) -> &'static str {
        match self {
            Family::FV => "FV",
            Family::FAB => "FAB",
            Family::FA => "FA",
        }
    }

    /// Highest power of `1/x` allowed on the even class (on every class for
    /// `FV`).
    fn max_order(self) -> usize {
        match self {
            Family::FV | Family::FA => 1,
            Family::FAB => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown family `{0}` (expected FV, FAB or FA)")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("element {element} is not in family {family}: {reason}")]
pub struct NotInFamily {
    pub family: Family,
    pub element: String,
    pub reason: String,
}

/// `g ≐ r + s·v` (or `r + s·a + t·b`, `r + s·a`), together with the values
/// where `g` departs from that formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub family: Family,
    pub r: Rat,
    pub s: Rat,
    /// Always zero outside `FAB`.
    pub t: Rat,
    pub exceptions: BTreeMap<u64, Rat>,
}

impl NormalForm {
    pub fn is_profile_zero(&self) -> [bool; 3] {
        [self.r.is_zero(), self.s.is_zero(), self.t.is_zero()]
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = match self.family {
            Family::FV => &["v"],
            Family::FAB => &["a", "b"],
            Family::FA => &["a"],
        };
        let mut parts = Vec::new();
        if !self.r.is_zero() {
            parts.push(fmt_rat(&self.r));
        }
        for (c, name) in [&self.s, &self.t].into_iter().zip(names) {
            if c.is_one() {
                parts.push(name.to_string());
            } else if !c.is_zero() {
                parts.push(format!("{}*{name}", fmt_rat(c)));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))?;
        if !self.exceptions.is_empty() {
            let ex: Vec<String> = self
                .exceptions
                .iter()
                .map(|(x, v)| format!("{x} -> {}", fmt_rat(v)))
                .collect();
            write!(f, " except {{{}}}", ex.join(", "))?;
        }
        Ok(())
    }
}

fn reject(family: Family, g: &AsymptoticSequence, reason: impl Into<String>) -> NotInFamily {
    NotInFamily {
        family,
        element: g.to_string(),
        reason: reason.into(),
    }
}

/// Reads `r, s, t` off the tails of `g`.
pub fn to_normal_form(g: &AsymptoticSequence, family: Family) -> Result<NormalForm, NotInFamily> {
    let (even, odd) = match (family, g.modulus()) {
        (Family::FV, 1) => (g.tail(0), None),
        (Family::FV, m) => return Err(reject(family, g, format!("tails differ between residue classes mod {m}"))),
        (_, 1) => (g.tail(0), Some(g.tail(0))),
        (_, 2) => (g.tail(0), Some(g.tail(1))),
        (_, m) => return Err(reject(family, g, format!("tail structure has period {m}, expected 1 or 2"))),
    };
    if even.degree() > family.max_order() {
        return Err(reject(
            family,
            g,
            format!("tail {even} has a term beyond 1/x^{}", family.max_order()),
        ));
    }
    if let Some(odd) = odd {
        if odd.degree() > 0 {
            return Err(reject(family, g, format!("odd-class tail {odd} is not constant")));
        }
    }
    Ok(NormalForm {
        family,
        r: even.coeff(0),
        s: even.coeff(1),
        t: even.coeff(2),
        exceptions: g.exceptions().clone(),
    })
}

/// The element described by `nf`, exceptions included.
pub fn from_normal_form(nf: &NormalForm) -> AsymptoticSequence {
    let even = TailPoly::new(vec![nf.r.clone(), nf.s.clone(), nf.t.clone()]);
    let tails = match nf.family {
        Family::FV => vec![even],
        Family::FAB | Family::FA => vec![even, TailPoly::constant(nf.r.clone())],
    };
    AsymptoticSequence::new(tails, nf.exceptions.clone(), nf.r.clone())
        .expect("normal-form tails agree at alpha")
}

/// Whether the `(s, t)` parts of the generators reach every tail profile of
/// the family: some generator has `s != 0` (`FV`, `FA`), or two generators
/// have linearly independent `(s, t)` (`FAB`).
pub fn spans_family(forms: &[NormalForm], family: Family) -> bool {
    match family {
        Family::FV | Family::FA => forms.iter().any(|nf| !nf.s.is_zero()),
        Family::FAB => forms.iter().enumerate().any(|(i, p)| {
            forms[i + 1..]
                .iter()
                .any(|q| !(p.s.clone() * &q.t - p.t.clone() * &q.s).is_zero())
        }),
    }
}

/// One element per zero/non-zero pattern of `(r, s, t)` with all parameters
/// in `{0, 1}`, plus the variants obtained by zeroing the value at `x = 1` and
/// `x = 2` and by adding the indicators of those points.
///
/// Parameters in `{0, 1}` keep every representative non-negative with no
/// zeros on a class whose tail is non-zero, so the representatives realise
/// the largest cozero-set of their profile; the variants realise the finite
/// modifications.
pub fn representatives(family: Family) -> Vec<(String, AsymptoticSequence)> {
    let space = AlphaN;
    let params: usize = if family == Family::FAB { 3 } else { 2 };
    let mut out: Vec<(String, AsymptoticSequence)> = Vec::new();
    let push = |out: &mut Vec<(String, AsymptoticSequence)>, g: AsymptoticSequence| {
        if out.iter().all(|(_, h)| *h != g) {
            let nf = to_normal_form(&g, family).expect("representative lies in its family");
            out.push((nf.to_string(), g));
        }
    };
    for pattern in 0..(1u32 << params) {
        let bit = |i: u32| if pattern & (1 << i) != 0 { rat(1) } else { rat(0) };
        let base = from_normal_form(&NormalForm {
            family,
            r: bit(0),
            s: bit(1),
            t: if params == 3 { bit(2) } else { rat(0) },
            exceptions: BTreeMap::new(),
        });
        push(&mut out, base.clone());
        for x in [1u64, 2] {
            let delta = AlphaN::point_indicator(x);
            push(&mut out, space.add(&base, &delta));
            let mut nf = to_normal_form(&base, family).expect("base in family");
            nf.exceptions.insert(x, rat(0));
            push(&mut out, from_normal_form(&nf));
        }
    }
    out
}
