//! `C([0, +∞])` restricted to finitely piecewise-linear functions with
//! rational breakpoints and a constant final piece.

mod iset;
mod pwl;

pub use iset::{HalfPoint, Interval, IntervalSet};
pub use pwl::PwlFunction;

use crate::rat::{rat, ratio, Rat};
use crate::space::{Dominance, ModelError, Space};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HalfLine;

impl HalfLine {
    /// `x` on `[0, 1]`, `1` on `[1, +∞]`: a weak unit that is not strong.
    pub fn g_ramp() -> PwlFunction {
        PwlFunction::new(vec![rat(0), rat(1)], vec![rat(0), rat(1)], &rat(1)).expect("valid")
    }

    /// `min(|x - 1|, 1)`.
    pub fn hat() -> PwlFunction {
        PwlFunction::new(vec![rat(0), rat(1), rat(2)], vec![rat(1), rat(0), rat(1)], &rat(1))
            .expect("valid")
    }

    /// Tent supported on `(2, 4)` with peak 1 at 3.
    pub fn tent() -> PwlFunction {
        PwlFunction::new(
            vec![rat(0), rat(2), rat(3), rat(4)],
            vec![rat(0), rat(0), rat(1), rat(0)],
            &rat(0),
        )
        .expect("valid")
    }
}

impl Space for HalfLine {
    type Elem = PwlFunction;
    type Set = IntervalSet;
    type Point = HalfPoint;

    fn name(&self) -> String {
        "halfline".into()
    }

    fn constant(&self, q: &Rat) -> PwlFunction {
        PwlFunction::constant(q.clone())
    }

    fn add(&self, f: &PwlFunction, g: &PwlFunction) -> PwlFunction {
        f.add(g)
    }

    fn neg(&self, f: &PwlFunction) -> PwlFunction {
        f.neg()
    }

    fn scale(&self, f: &PwlFunction, k: i64) -> PwlFunction {
        f.scale(&rat(k))
    }

    fn meet(&self, f: &PwlFunction, g: &PwlFunction) -> PwlFunction {
        f.meet(g)
    }

    fn join(&self, f: &PwlFunction, g: &PwlFunction) -> PwlFunction {
        f.join(g)
    }

    fn abs(&self, f: &PwlFunction) -> PwlFunction {
        f.abs()
    }

    fn eval(&self, f: &PwlFunction, p: &HalfPoint) -> Rat {
        f.eval(p)
    }

    fn coz(&self, f: &PwlFunction) -> IntervalSet {
        f.coz()
    }

    fn empty_set(&self) -> IntervalSet {
        IntervalSet::empty()
    }

    fn whole_set(&self) -> IntervalSet {
        IntervalSet::whole()
    }

    fn union(&self, a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
        a.union(b)
    }

    fn intersect(&self, a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
        a.intersect(b)
    }

    fn complement(&self, a: &IntervalSet) -> IntervalSet {
        a.complement()
    }

    fn closure(&self, a: &IntervalSet) -> IntervalSet {
        a.closure()
    }

    fn interior(&self, a: &IntervalSet) -> IntervalSet {
        a.interior()
    }

    fn contains_point(&self, a: &IntervalSet, p: &HalfPoint) -> bool {
        a.contains(p)
    }

    fn singleton(&self, p: &HalfPoint) -> IntervalSet {
        IntervalSet::singleton(p)
    }

    fn has_point(&self, p: &HalfPoint) -> bool {
        match p {
            HalfPoint::Finite(x) => *x >= rat(0),
            HalfPoint::Infinity => true,
        }
    }

    fn sample_points(&self) -> Vec<HalfPoint> {
        vec![
            HalfPoint::Finite(rat(0)),
            HalfPoint::Finite(ratio(1, 2)),
            HalfPoint::Finite(rat(1)),
            HalfPoint::Finite(rat(2)),
            HalfPoint::Finite(rat(3)),
            HalfPoint::Infinity,
        ]
    }

    fn dominance(&self, f: &PwlFunction, g: &PwlFunction) -> Dominance<HalfPoint> {
        f.dominance(g)
    }

    fn realize_open(&self, u: &IntervalSet) -> Result<PwlFunction, ModelError> {
        PwlFunction::realize_open(u)
    }
}
