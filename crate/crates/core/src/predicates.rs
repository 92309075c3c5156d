//! Ideal-theoretic and topological predicates, generic over the model.
//!
//! With `G <= C(K)` every ideal considered here is decided through the
//! cozero-set of its generator:
//!
//! | ideal          | `f` belongs iff                         |
//! |----------------|-----------------------------------------|
//! | `G(g)`         | `|f| <= n|g|` for some `n`              |
//! | `g^⊥`          | `coz f ∩ coz g = ∅`                      |
//! | `g^⊥⊥`         | `coz f ⊆ cl coz g`                       |
//! | `I(Z(g))`      | `coz f ⊆ coz g`                          |
//! | `M_p`          | `f(p) = 0`                               |
//! | `I(S)`         | `Z(f) ⊇ S`                               |

use num::{BigInt, Zero};

use crate::space::{Dominance, ModelError, Space};

/// One of the ideals the library can decide membership in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSpec<S: Space> {
    Principal(S::Elem),
    Perp(S::Elem),
    Polar(S::Elem),
    /// `I(Z(g))`
    ZKernel(S::Elem),
    /// `M_p = I({p})`
    PointKernel(S::Point),
    /// `I(S)` for a closed set `S`
    ClosedKernel(S::Set),
}

impl<S: Space> IdealSpec<S> {
    pub fn validate(&self, space: &S) -> Result<(), ModelError> {
        match self {
            IdealSpec::PointKernel(p) if !space.has_point(p) => Err(ModelError::BadPoint(p.to_string())),
            IdealSpec::ClosedKernel(s) if !space.is_closed(s) => Err(ModelError::NotClosed(s.to_string())),
            _ => Ok(()),
        }
    }

    /// The closed set `S` with `self = I(S)`, for the kernel variants.
    pub fn kernel_set(&self, space: &S) -> Option<S::Set> {
        match self {
            IdealSpec::ZKernel(g) => Some(space.zset(g)),
            IdealSpec::PointKernel(p) => Some(space.singleton(p)),
            IdealSpec::ClosedKernel(s) => Some(s.clone()),
            _ => None,
        }
    }
}

/// `f ∈ G(g)`, with a multiplier `n` such that `|f| <= n|g|`.
pub fn in_principal<S: Space>(space: &S, f: &S::Elem, g: &S::Elem) -> Option<BigInt> {
    match space.dominance(f, g) {
        Dominance::Bounded(n) => Some(n),
        Dominance::Unbounded(_) => None,
    }
}

pub fn in_perp<S: Space>(space: &S, f: &S::Elem, g: &S::Elem) -> bool {
    space.is_empty(&space.intersect(&space.coz(f), &space.coz(g)))
}

pub fn in_polar<S: Space>(space: &S, f: &S::Elem, g: &S::Elem) -> bool {
    space.is_subset(&space.coz(f), &space.closure(&space.coz(g)))
}

pub fn in_zkernel<S: Space>(space: &S, f: &S::Elem, g: &S::Elem) -> bool {
    space.is_subset(&space.coz(f), &space.coz(g))
}

pub fn ideal_contains<S: Space>(space: &S, ideal: &IdealSpec<S>, f: &S::Elem) -> Result<bool, ModelError> {
    ideal.validate(space)?;
    Ok(match ideal {
        IdealSpec::Principal(g) => in_principal(space, f, g).is_some(),
        IdealSpec::Perp(g) => in_perp(space, f, g),
        IdealSpec::Polar(g) => in_polar(space, f, g),
        IdealSpec::ZKernel(g) => in_zkernel(space, f, g),
        IdealSpec::PointKernel(p) => space.eval(f, p).is_zero(),
        IdealSpec::ClosedKernel(s) => space.is_subset(s, &space.zset(f)),
    })
}

/// `coz(v)` is dense.
pub fn is_weak_unit<S: Space>(space: &S, v: &S::Elem) -> bool {
    space.is_whole(&space.closure(&space.coz(v)))
}

/// `coz(v)` is everything.
pub fn is_strong_unit<S: Space>(space: &S, v: &S::Elem) -> bool {
    space.is_whole(&space.coz(v))
}

/// `int cl coz(g) = coz(g)`.
pub fn coz_regular_open<S: Space>(space: &S, g: &S::Elem) -> bool {
    let coz = space.coz(g);
    space.interior(&space.closure(&coz)) == coz
}

/// `cl int Z(g) = Z(g)`.
pub fn zset_regular_closed<S: Space>(space: &S, g: &S::Elem) -> bool {
    let z = space.zset(g);
    space.closure(&space.interior(&z)) == z
}

pub fn coz_closed<S: Space>(space: &S, g: &S::Elem) -> bool {
    space.is_closed(&space.coz(g))
}

pub fn clcoz_open<S: Space>(space: &S, g: &S::Elem) -> bool {
    space.is_open(&space.closure(&space.coz(g)))
}

/// `G(g) ⊆ I(Z(g)) ⊆ g^⊥⊥`, tested on the single element `f`.
pub fn chain_check<S: Space>(space: &S, f: &S::Elem, g: &S::Elem) -> bool {
    let principal = in_principal(space, f, g).is_some();
    let zkernel = in_zkernel(space, f, g);
    let polar = in_polar(space, f, g);
    (!principal || zkernel) && (!zkernel || polar)
}

/// `realize_open(int cl coz g)`: the element whose cozero-set is the largest
/// open set any member of `g^⊥⊥` can have.
pub fn polar_witness<S: Space>(space: &S, g: &S::Elem) -> Result<S::Elem, ModelError> {
    space.realize_open(&space.interior(&space.closure(&space.coz(g))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DIdealVerdict<E> {
    /// No counterexample among the sampled members. `exact` is set when the
    /// ideal is known to be a d-ideal regardless of the sample.
    Pass { exact: bool, examined: usize },
    /// `g` lies in the ideal but `g^⊥⊥` does not; `f` is a member of `g^⊥⊥`
    /// outside the ideal when the refutation went through a concrete element.
    Counterexample { g: E, f: Option<E> },
}

impl<E> DIdealVerdict<E> {
    pub fn is_pass(&self) -> bool {
        matches!(self, DIdealVerdict::Pass { .. })
    }
}

/// Searches the first `budget` sampled elements for a member `g` of `ideal`
/// whose polar `g^⊥⊥` escapes the ideal.
///
/// For kernels `I(S)` the test is exact per `g`: `g^⊥⊥ = I(cl int Z(g))`, and
/// `I(cl int Z(g)) ⊆ I(S)` iff `cl int Z(g) ⊇ S`. For the other ideals the
/// candidate members of `g^⊥⊥` are the sampled elements themselves, so that a
/// counterexample never leaves the group being sampled.
pub fn d_ideal_test<S, I>(space: &S, ideal: &IdealSpec<S>, sampler: I, budget: usize) -> Result<DIdealVerdict<S::Elem>, ModelError>
where
    S: Space,
    I: IntoIterator<Item = S::Elem>,
{
    ideal.validate(space)?;
    let samples: Vec<S::Elem> = sampler.into_iter().take(budget.max(1)).collect();
    let whole_ideal = matches!(ideal, IdealSpec::ClosedKernel(s) if space.is_empty(s));
    let exact = whole_ideal || matches!(ideal, IdealSpec::Polar(_) | IdealSpec::Perp(_));
    if let Some(set) = ideal.kernel_set(space) {
        for g in &samples {
            if !ideal_contains(space, ideal, g)? {
                continue;
            }
            let polar_set = space.closure(&space.interior(&space.zset(g)));
            if !space.is_subset(&set, &polar_set) {
                let f = polar_witness(space, g).ok();
                return Ok(DIdealVerdict::Counterexample { g: g.clone(), f });
            }
        }
        return Ok(DIdealVerdict::Pass {
            exact,
            examined: samples.len(),
        });
    }
    for g in &samples {
        if !ideal_contains(space, ideal, g)? {
            continue;
        }
        for f in &samples {
            if in_polar(space, f, g) && !ideal_contains(space, ideal, f)? {
                return Ok(DIdealVerdict::Counterexample {
                    g: g.clone(),
                    f: Some(f.clone()),
                });
            }
        }
    }
    Ok(DIdealVerdict::Pass {
        exact,
        examined: samples.len(),
    })
}
