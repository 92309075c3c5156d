//! `C(αℕ)`: sequences on the one-point compactification of `ℕ` that are
//! eventually polynomial in `1/x` on each residue class.

mod seq;
mod set;
mod tail;

pub use seq::AsymptoticSequence;
pub use set::{AlphaPoint, EventuallyPeriodicSet};
pub use tail::TailPoly;

use crate::rat::{rat, Rat};
use crate::space::{Dominance, ModelError, Space};
use crate::terms::Family;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AlphaN;

impl AlphaN {
    /// `v(x) = 1/x`, `v(α) = 0`.
    pub fn v() -> AsymptoticSequence {
        AsymptoticSequence::from_tails(vec![TailPoly::new(vec![rat(0), rat(1)])])
            .expect("continuous")
    }

    /// `1/x` on even `x`, `0` on odd `x`.
    pub fn a() -> AsymptoticSequence {
        AsymptoticSequence::from_tails(vec![TailPoly::new(vec![rat(0), rat(1)]), TailPoly::zero()])
            .expect("continuous")
    }

    /// `1/x²` on even `x`, `0` on odd `x`.
    pub fn b() -> AsymptoticSequence {
        AsymptoticSequence::from_tails(vec![
            TailPoly::new(vec![rat(0), rat(0), rat(1)]),
            TailPoly::zero(),
        ])
        .expect("continuous")
    }

    /// Indicator of the single point `x ∈ ℕ`; lies in the eventually constant
    /// part of every family.
    pub fn point_indicator(x: u64) -> AsymptoticSequence {
        AsymptoticSequence::new(
            vec![TailPoly::zero()],
            [(x, rat(1))].into_iter().collect(),
            rat(0),
        )
        .expect("continuous")
    }
}

impl Space for AlphaN {
    type Elem = AsymptoticSequence;
    type Set = EventuallyPeriodicSet;
    type Point = AlphaPoint;

    fn name(&self) -> String {
        "alphaN".into()
    }

    fn constant(&self, q: &Rat) -> AsymptoticSequence {
        AsymptoticSequence::constant(q.clone())
    }

    fn add(&self, f: &AsymptoticSequence, g: &AsymptoticSequence) -> AsymptoticSequence {
        f.add(g)
    }

    fn neg(&self, f: &AsymptoticSequence) -> AsymptoticSequence {
        f.neg()
    }

    fn scale(&self, f: &AsymptoticSequence, k: i64) -> AsymptoticSequence {
        f.scale(&rat(k))
    }

    fn meet(&self, f: &AsymptoticSequence, g: &AsymptoticSequence) -> AsymptoticSequence {
        f.meet(g)
    }

    fn join(&self, f: &AsymptoticSequence, g: &AsymptoticSequence) -> AsymptoticSequence {
        f.join(g)
    }

    fn abs(&self, f: &AsymptoticSequence) -> AsymptoticSequence {
        f.abs()
    }

    fn eval(&self, f: &AsymptoticSequence, p: &AlphaPoint) -> Rat {
        f.eval(p)
    }

    fn coz(&self, f: &AsymptoticSequence) -> EventuallyPeriodicSet {
        f.coz()
    }

    fn empty_set(&self) -> EventuallyPeriodicSet {
        EventuallyPeriodicSet::empty()
    }

    fn whole_set(&self) -> EventuallyPeriodicSet {
        EventuallyPeriodicSet::whole()
    }

    fn union(&self, a: &EventuallyPeriodicSet, b: &EventuallyPeriodicSet) -> EventuallyPeriodicSet {
        a.union(b)
    }

    fn intersect(&self, a: &EventuallyPeriodicSet, b: &EventuallyPeriodicSet) -> EventuallyPeriodicSet {
        a.intersect(b)
    }

    fn complement(&self, a: &EventuallyPeriodicSet) -> EventuallyPeriodicSet {
        a.complement()
    }

    fn closure(&self, a: &EventuallyPeriodicSet) -> EventuallyPeriodicSet {
        a.closure()
    }

    fn interior(&self, a: &EventuallyPeriodicSet) -> EventuallyPeriodicSet {
        a.interior()
    }

    fn contains_point(&self, a: &EventuallyPeriodicSet, p: &AlphaPoint) -> bool {
        a.contains(p)
    }

    fn singleton(&self, p: &AlphaPoint) -> EventuallyPeriodicSet {
        match p {
            AlphaPoint::Nat(x) => EventuallyPeriodicSet::finite([*x]),
            AlphaPoint::Alpha => EventuallyPeriodicSet::alpha_only(),
        }
    }

    fn is_subset(&self, a: &EventuallyPeriodicSet, b: &EventuallyPeriodicSet) -> bool {
        a.is_subset(b)
    }

    fn is_empty(&self, a: &EventuallyPeriodicSet) -> bool {
        a.is_empty()
    }

    fn is_whole(&self, a: &EventuallyPeriodicSet) -> bool {
        a.is_whole()
    }

    fn is_open(&self, a: &EventuallyPeriodicSet) -> bool {
        a.is_open()
    }

    fn is_closed(&self, a: &EventuallyPeriodicSet) -> bool {
        a.is_closed()
    }

    fn has_point(&self, p: &AlphaPoint) -> bool {
        !matches!(p, AlphaPoint::Nat(0))
    }

    fn sample_points(&self) -> Vec<AlphaPoint> {
        let mut pts = vec![AlphaPoint::Alpha];
        pts.extend((1..=4).map(AlphaPoint::Nat));
        pts
    }

    fn dominance(&self, f: &AsymptoticSequence, g: &AsymptoticSequence) -> Dominance<AlphaPoint> {
        f.dominance(g)
    }

    fn realize_open(&self, u: &EventuallyPeriodicSet) -> Result<AsymptoticSequence, ModelError> {
        AsymptoticSequence::realize_open(u)
    }

    fn in_family(&self, family: Family, f: &AsymptoticSequence) -> bool {
        crate::terms::to_normal_form(f, family).is_ok()
    }

    fn family_representatives(&self, family: Family) -> Option<Vec<(String, AsymptoticSequence)>> {
        Some(crate::terms::representatives(family))
    }
}
