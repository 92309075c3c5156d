//! `C(K)` for a finite discrete `K = {0, .., k-1}`: rational vectors.
//!
//! Every subset of a discrete space is clopen, which makes this model the
//! exhaustive test bed for the kernel/closed-set duality and for the
//! finite-space class results.

use std::fmt;

use num::{Signed, Zero};

use crate::predicates::{self, IdealSpec};
use crate::rat::{ceil_positive, fmt_rat, rat, Rat};
use crate::space::{Certificate, Dominance, ModelError, Space};
use crate::terms::{enumerate_terms, GroupPresentation};

/// Largest space the bitmask representation supports.
pub const MAX_FINITE_SIZE: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteVector(pub Vec<Rat>);

impl fmt::Display for FiniteVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.0.iter().map(fmt_rat).collect();
        write!(f, "({})", vs.join(", "))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FiniteSubset(pub u64);

impl FiniteSubset {
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn indices(self, size: usize) -> impl Iterator<Item = usize> {
        (0..size).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for FiniteSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let is: Vec<String> = self.indices(MAX_FINITE_SIZE).map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", is.join(","))
    }
}

/// The discrete space with `size` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Finite {
    size: usize,
}

impl Finite {
    pub fn new(size: usize) -> Result<Self, ModelError> {
        if size == 0 || size > MAX_FINITE_SIZE {
            return Err(ModelError::InvalidElement(format!(
                "finite space size must be in 1..={MAX_FINITE_SIZE}, got {size}"
            )));
        }
        Ok(Finite { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn full_mask(&self) -> u64 {
        if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }

    pub fn vector(&self, values: Vec<Rat>) -> Result<FiniteVector, ModelError> {
        if values.len() != self.size {
            return Err(ModelError::InvalidElement(format!(
                "expected {} coordinates, got {}",
                self.size,
                values.len()
            )));
        }
        Ok(FiniteVector(values))
    }

    pub fn basis(&self, i: usize) -> FiniteVector {
        FiniteVector((0..self.size).map(|j| rat((i == j) as i64)).collect())
    }

    pub fn subset(&self, mask: u64) -> FiniteSubset {
        FiniteSubset(mask & self.full_mask())
    }

    fn zip(&self, f: &FiniteVector, g: &FiniteVector, op: impl Fn(&Rat, &Rat) -> Rat) -> FiniteVector {
        FiniteVector(f.0.iter().zip(&g.0).map(|(a, b)| op(a, b)).collect())
    }
}

impl Space for Finite {
    type Elem = FiniteVector;
    type Set = FiniteSubset;
    type Point = usize;

    fn name(&self) -> String {
        format!("finite({})", self.size)
    }

    fn constant(&self, q: &Rat) -> FiniteVector {
        FiniteVector(vec![q.clone(); self.size])
    }

    fn add(&self, f: &FiniteVector, g: &FiniteVector) -> FiniteVector {
        self.zip(f, g, |a, b| a + b)
    }

    fn neg(&self, f: &FiniteVector) -> FiniteVector {
        FiniteVector(f.0.iter().map(|a| -a).collect())
    }

    fn scale(&self, f: &FiniteVector, k: i64) -> FiniteVector {
        let k = rat(k);
        FiniteVector(f.0.iter().map(|a| a * &k).collect())
    }

    fn meet(&self, f: &FiniteVector, g: &FiniteVector) -> FiniteVector {
        self.zip(f, g, |a, b| a.min(b).clone())
    }

    fn join(&self, f: &FiniteVector, g: &FiniteVector) -> FiniteVector {
        self.zip(f, g, |a, b| a.max(b).clone())
    }

    fn abs(&self, f: &FiniteVector) -> FiniteVector {
        FiniteVector(f.0.iter().map(Signed::abs).collect())
    }

    fn eval(&self, f: &FiniteVector, p: &usize) -> Rat {
        f.0[*p].clone()
    }

    fn coz(&self, f: &FiniteVector) -> FiniteSubset {
        FiniteSubset(
            f.0.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .fold(0, |m, (i, _)| m | 1 << i),
        )
    }

    fn empty_set(&self) -> FiniteSubset {
        FiniteSubset(0)
    }

    fn whole_set(&self) -> FiniteSubset {
        FiniteSubset(self.full_mask())
    }

    fn union(&self, a: &FiniteSubset, b: &FiniteSubset) -> FiniteSubset {
        FiniteSubset(a.0 | b.0)
    }

    fn intersect(&self, a: &FiniteSubset, b: &FiniteSubset) -> FiniteSubset {
        FiniteSubset(a.0 & b.0)
    }

    fn complement(&self, a: &FiniteSubset) -> FiniteSubset {
        FiniteSubset(!a.0 & self.full_mask())
    }

    fn closure(&self, a: &FiniteSubset) -> FiniteSubset {
        *a
    }

    fn interior(&self, a: &FiniteSubset) -> FiniteSubset {
        *a
    }

    fn contains_point(&self, a: &FiniteSubset, p: &usize) -> bool {
        a.contains(*p)
    }

    fn singleton(&self, p: &usize) -> FiniteSubset {
        FiniteSubset(1 << p)
    }

    fn is_subset(&self, a: &FiniteSubset, b: &FiniteSubset) -> bool {
        a.0 & !b.0 == 0
    }

    fn has_point(&self, p: &usize) -> bool {
        *p < self.size
    }

    fn sample_points(&self) -> Vec<usize> {
        (0..self.size).collect()
    }

    fn dominance(&self, f: &FiniteVector, g: &FiniteVector) -> Dominance<usize> {
        let mut bound = Rat::zero();
        for (i, (a, b)) in f.0.iter().zip(&g.0).enumerate() {
            if b.is_zero() {
                if !a.is_zero() {
                    return Dominance::Unbounded(Certificate::ZeroStructure { point: i });
                }
            } else {
                let q = a.abs() / b.abs();
                if q > bound {
                    bound = q;
                }
            }
        }
        Dominance::Bounded(ceil_positive(&bound))
    }

    fn realize_open(&self, u: &FiniteSubset) -> Result<FiniteVector, ModelError> {
        Ok(FiniteVector((0..self.size).map(|i| rat(u.contains(i) as i64)).collect()))
    }
}

/// Outcome of the exhaustive duality check on a finite space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub size: usize,
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every pair of subsets `S1, S2 ⊆ K`, that `S1 ⊆ S2` exactly
/// when `I(S1) ⊇ I(S2)`, that joins and meets of closed sets correspond to
/// intersections and sums of kernels, and that each kernel recovers its set
/// as the common zero-set of its members.
///
/// `I(S)` is the span of the basis vectors `e_i` with `i ∉ S`, so kernel
/// containment is decided by basis-vector membership, each tested through
/// [`predicates::ideal_contains`].
pub fn verify_anti_isomorphism(size: usize) -> Result<DualityReport, ModelError> {
    let space = Finite::new(size)?;
    let subsets = 1u64 << size;
    let basis: Vec<FiniteVector> = (0..size).map(|i| space.basis(i)).collect();
    let mut failures = Vec::new();

    // members[S] = bitmask of basis vectors lying in I(S)
    let mut members = Vec::with_capacity(subsets as usize);
    for s in 0..subsets {
        let ideal = IdealSpec::ClosedKernel(space.subset(s));
        let mut m = 0u64;
        for (i, e) in basis.iter().enumerate() {
            if predicates::ideal_contains(&space, &ideal, e)? {
                m |= 1 << i;
            }
        }
        members.push(m);

        // I(S) = I(cl S), and S is recovered as ⋂ Z(g) over g ∈ I(S)
        let closed = IdealSpec::ClosedKernel(space.closure(&space.subset(s)));
        for e in &basis {
            if predicates::ideal_contains(&space, &ideal, e)? != predicates::ideal_contains(&space, &closed, e)? {
                failures.push(format!("I({}) differs from I(cl {})", space.subset(s), space.subset(s)));
            }
        }
        let common_zeros = basis
            .iter()
            .filter(|e| predicates::ideal_contains(&space, &ideal, e).unwrap_or(false))
            .fold(space.whole_set(), |acc, e| space.intersect(&acc, &space.zset(e)));
        if common_zeros != space.subset(s) {
            failures.push(format!(
                "kernel of {} has common zero-set {}",
                space.subset(s),
                common_zeros
            ));
        }
    }

    let mut pairs = 0;
    for s1 in 0..subsets {
        for s2 in 0..subsets {
            pairs += 1;
            let sets_nested = s1 & !s2 == 0;
            let kernels_nested = members[s2 as usize] & !members[s1 as usize] == 0;
            if sets_nested != kernels_nested {
                failures.push(format!(
                    "{} ⊆ {} is {sets_nested} but I-containment is {kernels_nested}",
                    space.subset(s1),
                    space.subset(s2)
                ));
            }
            // I(S1 ∪ S2) = I(S1) ∩ I(S2) and I(S1 ∩ S2) = I(S1) + I(S2)
            if members[(s1 | s2) as usize] != members[s1 as usize] & members[s2 as usize] {
                failures.push(format!("meet mismatch at {} , {}", space.subset(s1), space.subset(s2)));
            }
            if members[(s1 & s2) as usize] != members[s1 as usize] | members[s2 as usize] {
                failures.push(format!("join mismatch at {} , {}", space.subset(s1), space.subset(s2)));
            }
        }
    }
    Ok(DualityReport {
        size,
        pairs_checked: pairs,
        failures,
    })
}

/// Per-class outcome on `C(K)`, `K` finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteClassReport {
    pub size: usize,
    pub elements_checked: usize,
    pub pairs_checked: usize,
    pub ha: bool,
    pub proj: bool,
    pub cr: bool,
    pub y: bool,
    pub m: bool,
}

impl FiniteClassReport {
    pub fn all_hold(&self) -> bool {
        self.ha && self.proj && self.cr && self.y && self.m
    }
}

/// Element-wise confirmation that `C(K)` lies in every class when `K` is
/// finite: each cozero-set is clopen, and dominance holds whenever supports
/// nest.
pub fn verify_finite_classes(size: usize, budget: usize) -> Result<FiniteClassReport, ModelError> {
    let p = GroupPresentation::finite(size).map_err(|_| ModelError::InvalidElement(format!("no finite space of size {size}")))?;
    let space = &p.space;
    let elems = enumerate_terms(&p, budget.max(1), 0);
    let mut report = FiniteClassReport {
        size,
        elements_checked: elems.len(),
        pairs_checked: 0,
        ha: true,
        proj: true,
        cr: true,
        y: true,
        m: true,
    };
    for e in &elems {
        report.ha &= predicates::coz_closed(space, &e.elem);
        report.proj &= predicates::clcoz_open(space, &e.elem);
        report.cr &= predicates::coz_regular_open(space, &e.elem);
    }
    let window = elems.len().min(128);
    for f in &elems[..window] {
        for g in &elems[..window] {
            report.pairs_checked += 1;
            let principal = predicates::in_principal(space, &f.elem, &g.elem).is_some();
            if predicates::in_zkernel(space, &f.elem, &g.elem) && !principal {
                report.y = false;
            }
            if predicates::in_polar(space, &f.elem, &g.elem) && !principal {
                report.m = false;
            }
        }
    }
    Ok(report)
}
