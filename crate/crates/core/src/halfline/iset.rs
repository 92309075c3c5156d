use std::fmt;

use num::Zero;

use crate::rat::{fmt_rat, Rat};

/// A point of `[0, +∞]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum HalfPoint {
    Finite(Rat),
    Infinity,
}

impl fmt::Display for HalfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfPoint::Finite(x) => write!(f, "{}", fmt_rat(x)),
            HalfPoint::Infinity => write!(f, "+inf"),
        }
    }
}

/// One maximal interval of an [`IntervalSet`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lo: HalfPoint,
    pub lo_closed: bool,
    pub hi: HalfPoint,
    pub hi_closed: bool,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            return write!(f, "{{{}}}", self.lo);
        }
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

/// Finite union of intervals in `[0, +∞]`.
///
/// Stored as a cut structure: finite cut points `p_0 = 0 < p_1 < .. < p_k`
/// with a membership flag for each point, for each open gap `(p_i, p_{i+1})`
/// (the last gap being `(p_k, +∞)`), and for the point `+∞`. Cut points whose
/// flag equals both neighbouring gaps are dropped, which makes the
/// representation canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntervalSet {
    points: Vec<Rat>,
    point_in: Vec<bool>,
    gap_in: Vec<bool>,
    infinity_in: bool,
}

impl IntervalSet {
    pub(crate) fn from_cuts(points: Vec<Rat>, point_in: Vec<bool>, gap_in: Vec<bool>, infinity_in: bool) -> Self {
        debug_assert!(!points.is_empty() && points[0].is_zero());
        debug_assert!(points.len() == point_in.len() && points.len() == gap_in.len());
        let mut out = IntervalSet {
            points: Vec::with_capacity(points.len()),
            point_in: Vec::with_capacity(points.len()),
            gap_in: Vec::with_capacity(points.len()),
            infinity_in,
        };
        for i in 0..points.len() {
            if i > 0 {
                let prev_gap = *out.gap_in.last().expect("first point kept");
                if point_in[i] == prev_gap && gap_in[i] == prev_gap {
                    continue;
                }
            }
            out.points.push(points[i].clone());
            out.point_in.push(point_in[i]);
            out.gap_in.push(gap_in[i]);
        }
        out
    }

    pub fn empty() -> Self {
        Self::from_cuts(vec![Rat::zero()], vec![false], vec![false], false)
    }

    pub fn whole() -> Self {
        Self::from_cuts(vec![Rat::zero()], vec![true], vec![true], true)
    }

    pub fn singleton(p: &HalfPoint) -> Self {
        match p {
            HalfPoint::Infinity => Self::from_cuts(vec![Rat::zero()], vec![false], vec![false], true),
            HalfPoint::Finite(x) if x.is_zero() => {
                Self::from_cuts(vec![Rat::zero()], vec![true], vec![false], false)
            }
            HalfPoint::Finite(x) => Self::from_cuts(
                vec![Rat::zero(), x.clone()],
                vec![false, true],
                vec![false, false],
                false,
            ),
        }
    }

    /// Interval from `lo` to `hi` (`None` = `+∞`, with `hi_closed` deciding
    /// whether the point `+∞` itself is included).
    pub fn interval(lo: Rat, lo_closed: bool, hi: Option<Rat>, hi_closed: bool) -> Self {
        let mut points = vec![Rat::zero()];
        let mut point_in = vec![false];
        let mut gap_in = vec![false];
        if lo.is_zero() {
            point_in[0] = lo_closed;
            gap_in[0] = true;
        } else {
            points.push(lo);
            point_in.push(lo_closed);
            gap_in.push(true);
        }
        let infinity_in = match hi {
            Some(hi) => {
                points.push(hi);
                point_in.push(hi_closed);
                gap_in.push(false);
                false
            }
            None => hi_closed,
        };
        Self::from_cuts(points, point_in, gap_in, infinity_in)
    }

    pub fn points(&self) -> &[Rat] {
        &self.points
    }

    pub fn point_flags(&self) -> &[bool] {
        &self.point_in
    }

    pub fn gap_flags(&self) -> &[bool] {
        &self.gap_in
    }

    pub fn contains_infinity(&self) -> bool {
        self.infinity_in
    }

    /// Whether the unbounded gap `(p_k, +∞)` belongs to the set.
    pub fn contains_tail(&self) -> bool {
        *self.gap_in.last().expect("nonempty cut list")
    }

    pub fn contains(&self, p: &HalfPoint) -> bool {
        match p {
            HalfPoint::Infinity => self.infinity_in,
            HalfPoint::Finite(x) => {
                if x < &self.points[0] {
                    return false;
                }
                match self.points.binary_search(x) {
                    Ok(i) => self.point_in[i],
                    Err(i) => self.gap_in[i - 1],
                }
            }
        }
    }

    /// Re-expresses the set over a finer list of cut points.
    fn refine(&self, cuts: &[Rat]) -> (Vec<bool>, Vec<bool>) {
        let mut point_in = Vec::with_capacity(cuts.len());
        let mut gap_in = Vec::with_capacity(cuts.len());
        for p in cuts {
            match self.points.binary_search(p) {
                Ok(i) => {
                    point_in.push(self.point_in[i]);
                    gap_in.push(self.gap_in[i]);
                }
                Err(i) => {
                    point_in.push(self.gap_in[i - 1]);
                    gap_in.push(self.gap_in[i - 1]);
                }
            }
        }
        (point_in, gap_in)
    }

    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let mut cuts: Vec<Rat> = self.points.iter().chain(other.points.iter()).cloned().collect();
        cuts.sort();
        cuts.dedup();
        let (ap, ag) = self.refine(&cuts);
        let (bp, bg) = other.refine(&cuts);
        let point_in = ap.iter().zip(&bp).map(|(&x, &y)| op(x, y)).collect();
        let gap_in = ag.iter().zip(&bg).map(|(&x, &y)| op(x, y)).collect();
        Self::from_cuts(cuts, point_in, gap_in, op(self.infinity_in, other.infinity_in))
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn complement(&self) -> Self {
        Self::from_cuts(
            self.points.clone(),
            self.point_in.iter().map(|b| !b).collect(),
            self.gap_in.iter().map(|b| !b).collect(),
            !self.infinity_in,
        )
    }

    /// Adds every cut point adjacent to a member gap, and `+∞` when the set
    /// is unbounded.
    pub fn closure(&self) -> Self {
        let n = self.points.len();
        let point_in = (0..n)
            .map(|i| self.point_in[i] || self.gap_in[i] || (i > 0 && self.gap_in[i - 1]))
            .collect();
        Self::from_cuts(
            self.points.clone(),
            point_in,
            self.gap_in.clone(),
            self.infinity_in || self.contains_tail(),
        )
    }

    /// Keeps a cut point only when both neighbouring gaps are members; `0`
    /// only needs the gap to its right, `+∞` the gap to its left.
    pub fn interior(&self) -> Self {
        let n = self.points.len();
        let point_in = (0..n)
            .map(|i| self.point_in[i] && self.gap_in[i] && (i == 0 || self.gap_in[i - 1]))
            .collect();
        Self::from_cuts(
            self.points.clone(),
            point_in,
            self.gap_in.clone(),
            self.infinity_in && self.contains_tail(),
        )
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersect(&other.complement()).is_empty()
    }

    pub fn is_empty(&self) -> bool {
        *self == Self::empty()
    }

    pub fn is_whole(&self) -> bool {
        *self == Self::whole()
    }

    pub fn is_open(&self) -> bool {
        self.interior() == *self
    }

    pub fn is_closed(&self) -> bool {
        self.closure() == *self
    }

    /// Maximal intervals of the set, in increasing order.
    pub fn intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        let mut current: Option<(HalfPoint, bool)> = None;
        for i in 0..self.points.len() {
            let p = HalfPoint::Finite(self.points[i].clone());
            if self.point_in[i] {
                if current.is_none() {
                    current = Some((p.clone(), true));
                }
            } else if let Some((lo, lo_closed)) = current.take() {
                out.push(Interval { lo, lo_closed, hi: p.clone(), hi_closed: false });
            }
            if self.gap_in[i] {
                if current.is_none() {
                    current = Some((p, false));
                }
            } else if let Some((lo, lo_closed)) = current.take() {
                out.push(Interval { lo, lo_closed, hi: p, hi_closed: true });
            }
        }
        match current {
            Some((lo, lo_closed)) => out.push(Interval {
                lo,
                lo_closed,
                hi: HalfPoint::Infinity,
                hi_closed: self.infinity_in,
            }),
            None if self.infinity_in => out.push(Interval {
                lo: HalfPoint::Infinity,
                lo_closed: true,
                hi: HalfPoint::Infinity,
                hi_closed: true,
            }),
            None => {}
        }
        out
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ivs = self.intervals();
        if ivs.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = ivs.iter().map(Interval::to_string).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn closure_of_punctured_line() {
        let s = IntervalSet::interval(rat(0), false, None, true);
        assert_eq!(s.to_string(), "(0,+inf]");
        assert_eq!(s.closure(), IntervalSet::whole());
    }

    #[test]
    fn interior_is_relative_at_zero() {
        let s = IntervalSet::interval(rat(0), true, Some(rat(1)), true);
        assert_eq!(s.interior(), IntervalSet::interval(rat(0), true, Some(rat(1)), false));
        assert_eq!(s.interior().to_string(), "[0,1)");
    }

    #[test]
    fn empty_closure_and_complement() {
        assert!(IntervalSet::empty().closure().is_empty());
        assert_eq!(IntervalSet::empty().complement(), IntervalSet::whole());
    }

    #[test]
    fn infinity_is_a_limit_of_unbounded_sets() {
        let s = IntervalSet::interval(rat(3), false, None, false);
        assert!(!s.is_closed());
        assert!(s.closure().contains(&HalfPoint::Infinity));
        assert!(s.is_open());
        let only_inf = IntervalSet::singleton(&HalfPoint::Infinity);
        assert!(only_inf.interior().is_empty());
        assert_eq!(only_inf.to_string(), "{+inf}");
    }

    #[test]
    fn display_of_two_components() {
        let s = IntervalSet::interval(rat(0), true, Some(rat(1)), false)
            .union(&IntervalSet::interval(rat(1), false, None, true));
        assert_eq!(s.to_string(), "[0,1) ∪ (1,+inf]");
        assert!(s.contains(&HalfPoint::Finite(ratio(1, 2))));
        assert!(!s.contains(&HalfPoint::Finite(rat(1))));
    }
}
