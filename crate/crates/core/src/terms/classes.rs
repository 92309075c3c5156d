//! Membership of a presented group in the classes Y, CR, M, HA and Proj.
//!
//! Each class is a universally quantified condition on elements or pairs:
//!
//! | class | fails on                                                    |
//! |-------|-------------------------------------------------------------|
//! | Y     | `coz f ⊆ coz g` but `f ∉ G(g)`                               |
//! | CR    | `coz g` not regular open (reported as a weak unit that is not strong when `g` is one) |
//! | M     | `coz f ⊆ cl coz g` but `f ∉ G(g)`                            |
//! | HA    | `coz g` not closed                                          |
//! | Proj  | `cl coz g` not open                                         |
//!
//! The checker first searches enumerated elements for a violation. Failing
//! that, a family-tagged presentation is decided exactly by running the same
//! search over the family's profile representatives; any other presentation
//! gets a verdict qualified by the budget.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::enumerate::enumerate_terms;
use super::presentation::GroupPresentation;
use crate::predicates::{clcoz_open, coz_closed, coz_regular_open, in_polar, in_principal, in_zkernel, is_strong_unit, is_weak_unit};
use crate::space::{Dominance, Space};

/// Pairs examined per enumerated element by the pair-quantified classes.
pub const PAIRS_PER_ELEMENT: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Y,
    CR,
    M,
    HA,
    Proj,
}

impl Class {
    pub const ALL: [Class; 5] = [Class::Y, Class::CR, Class::M, Class::HA, Class::Proj];

    pub fn name(self) -> &'static str {
        match self {
            Class::Y => "Y",
            Class::CR => "CR",
            Class::M => "M",
            Class::HA => "HA",
            Class::Proj => "Proj",
        }
    }

    fn is_pairwise(self) -> bool {
        matches!(self, Class::Y | Class::M)
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown class `{0}` (expected Y, CR, M, HA or Proj)")]
pub struct UnknownClass(pub String);

impl FromStr for Class {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Class::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

pub const Y_CONDITION: &str = "coz-inclusion-without-principal-membership";
pub const CR_WEAK_CONDITION: &str = "weak-unit-not-strong";
pub const CR_REGULAR_CONDITION: &str = "cozero-set-not-regular-open";
pub const M_CONDITION: &str = "polar-without-principal-membership";
pub const HA_CONDITION: &str = "cozero-set-not-closed";
pub const PROJ_CONDITION: &str = "closure-of-cozero-set-not-open";

/// Elements refuting a class, labelled by the term (or normal form) that
/// produced them; pairs are listed as `(f, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<E> {
    pub items: Vec<(String, E)>,
    pub condition: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status<E> {
    /// Decided for the whole group.
    HoldsExact,
    /// No violation among the enumerated elements.
    HoldsSampled { budget: usize },
    Fails(Witness<E>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVerdict<E> {
    pub class: Class,
    pub status: Status<E>,
}

impl<E> ClassVerdict<E> {
    pub fn holds(&self) -> bool {
        !matches!(self.status, Status::Fails(_))
    }

    pub fn witness(&self) -> Option<&Witness<E>> {
        match &self.status {
            Status::Fails(w) => Some(w),
            _ => None,
        }
    }
}

/// Labelled elements with their cozero-sets and its closures precomputed.
#[derive(Clone, Debug)]
pub struct Sample<S: Space> {
    pub labels: Vec<String>,
    pub elems: Vec<S::Elem>,
    pub cozs: Vec<S::Set>,
    pub closures: Vec<S::Set>,
}

impl<S: Space> Sample<S> {
    pub fn new(space: &S, items: Vec<(String, S::Elem)>) -> Self {
        let (labels, elems): (Vec<_>, Vec<_>) = items.into_iter().unzip();
        let cozs: Vec<S::Set> = elems.iter().map(|g| space.coz(g)).collect();
        let closures = cozs.iter().map(|c| space.closure(c)).collect();
        Sample {
            labels,
            elems,
            cozs,
            closures,
        }
    }

    /// The first `budget` enumerated elements of `p`.
    pub fn enumerate(p: &GroupPresentation<S>, budget: usize, seed: u64) -> Self {
        let items = enumerate_terms(p, budget, seed)
            .into_iter()
            .map(|e| (e.term.to_string(), e.elem))
            .collect();
        Self::new(&p.space, items)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    fn item(&self, i: usize) -> (String, S::Elem) {
        (self.labels[i].clone(), self.elems[i].clone())
    }
}

/// Ordered pairs `(i, j)` of indices below `n`, by increasing `max(i, j)`:
/// `(0,0), (0,1), (1,0), (1,1), (0,2), (2,0), ...`.
pub fn pair_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(|j| {
        (0..=j).flat_map(move |i| {
            let swapped = (i != j).then_some((j, i));
            std::iter::once((i, j)).chain(swapped)
        })
    })
}

fn element_violation<S: Space>(space: &S, sample: &Sample<S>, class: Class, i: usize) -> Option<&'static str> {
    let (coz, cl) = (&sample.cozs[i], &sample.closures[i]);
    match class {
        Class::CR => {
            let weak = space.is_whole(cl);
            if weak && !space.is_whole(coz) {
                Some(CR_WEAK_CONDITION)
            } else if space.interior(cl) != *coz {
                Some(CR_REGULAR_CONDITION)
            } else {
                None
            }
        }
        Class::HA => (cl != coz).then_some(HA_CONDITION),
        Class::Proj => (!space.is_open(cl)).then_some(PROJ_CONDITION),
        Class::Y | Class::M => None,
    }
}

fn pair_violation<S: Space>(space: &S, sample: &Sample<S>, class: Class, f: usize, g: usize) -> Option<&'static str> {
    let (target, condition) = match class {
        Class::Y => (&sample.cozs[g], Y_CONDITION),
        Class::M => (&sample.closures[g], M_CONDITION),
        _ => return None,
    };
    if !space.is_subset(&sample.cozs[f], target) {
        return None;
    }
    match space.dominance(&sample.elems[f], &sample.elems[g]) {
        Dominance::Bounded(_) => None,
        Dominance::Unbounded(_) => Some(condition),
    }
}

/// First violation of `class` in `sample`, looking at no more than
/// `pair_limit` pairs for the pair-quantified classes.
pub fn find_violation<S: Space>(space: &S, sample: &Sample<S>, class: Class, pair_limit: usize) -> Option<Witness<S::Elem>> {
    if class.is_pairwise() {
        pair_order(sample.len()).take(pair_limit).find_map(|(f, g)| {
            pair_violation(space, sample, class, f, g).map(|condition| Witness {
                items: vec![sample.item(f), sample.item(g)],
                condition,
            })
        })
    } else {
        (0..sample.len()).find_map(|i| {
            element_violation(space, sample, class, i).map(|condition| Witness {
                items: vec![sample.item(i)],
                condition,
            })
        })
    }
}

/// Verdict for `class` given an already enumerated sample of `p`.
pub fn class_check_on<S: Space>(p: &GroupPresentation<S>, sample: &Sample<S>, class: Class, budget: usize) -> ClassVerdict<S::Elem> {
    let space = &p.space;
    let status = if let Some(w) = find_violation(space, sample, class, budget.saturating_mul(PAIRS_PER_ELEMENT)) {
        Status::Fails(w)
    } else if let Some(reps) = p.family.and_then(|fam| space.family_representatives(fam)) {
        let reps = Sample::new(space, reps);
        match find_violation(space, &reps, class, usize::MAX) {
            Some(w) => Status::Fails(w),
            None => Status::HoldsExact,
        }
    } else {
        Status::HoldsSampled { budget }
    };
    ClassVerdict { class, status }
}

pub fn class_check<S: Space>(p: &GroupPresentation<S>, class: Class, budget: usize, seed: u64) -> ClassVerdict<S::Elem> {
    let sample = Sample::enumerate(p, budget, seed);
    class_check_on(p, &sample, class, budget)
}

/// Re-checks a witness with the predicates directly, independently of the
/// cached sets used during the search.
pub fn verify_witness<S: Space>(space: &S, class: Class, w: &Witness<S::Elem>) -> bool {
    match (class, w.items.as_slice()) {
        (Class::Y, [(_, f), (_, g)]) => in_zkernel(space, f, g) && in_principal(space, f, g).is_none(),
        (Class::M, [(_, f), (_, g)]) => in_polar(space, f, g) && in_principal(space, f, g).is_none(),
        (Class::CR, [(_, g)]) => match w.condition {
            CR_WEAK_CONDITION => is_weak_unit(space, g) && !is_strong_unit(space, g),
            _ => !coz_regular_open(space, g),
        },
        (Class::HA, [(_, g)]) => !coz_closed(space, g),
        (Class::Proj, [(_, g)]) => !clcoz_open(space, g),
        _ => false,
    }
}
