use std::fmt;

use num::{Signed, Zero};

use super::iset::{HalfPoint, IntervalSet};
use crate::rat::{ceil_positive, fmt_rat, rat, Rat};
use crate::space::{Certificate, Dominance, ModelError};

/// Continuous finitely piecewise-linear function on `[0, +∞]` that is
/// constant on its last piece.
///
/// Given by its values at breakpoints `0 = x_0 < x_1 < .. < x_k`; the
/// function interpolates linearly between them and equals `values[k]` on
/// `[x_k, +∞]`. Breakpoints where nothing bends are removed, so equality is
/// pointwise equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PwlFunction {
    breaks: Vec<Rat>,
    values: Vec<Rat>,
}

fn collinear(x0: &Rat, y0: &Rat, x1: &Rat, y1: &Rat, x2: &Rat, y2: &Rat) -> bool {
    (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0)
}

impl PwlFunction {
    /// Builds the function from breakpoint data. `tail` is the value on the
    /// final piece and must equal the value at the last breakpoint.
    pub fn new(breaks: Vec<Rat>, values: Vec<Rat>, tail: &Rat) -> Result<Self, ModelError> {
        if breaks.is_empty() {
            return Err(ModelError::InvalidElement("no breakpoints".into()));
        }
        if breaks.len() != values.len() {
            return Err(ModelError::InvalidElement(format!(
                "{} breakpoints but {} values",
                breaks.len(),
                values.len()
            )));
        }
        if !breaks[0].is_zero() {
            return Err(ModelError::InvalidElement("first breakpoint must be 0".into()));
        }
        if breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ModelError::InvalidElement(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if values.last() != Some(tail) {
            return Err(ModelError::InvalidElement(format!(
                "final piece must be constant: tail {} differs from the value {} at the last breakpoint",
                fmt_rat(tail),
                fmt_rat(values.last().expect("nonempty"))
            )));
        }
        Ok(Self::canonical(breaks, values))
    }

    fn canonical(breaks: Vec<Rat>, values: Vec<Rat>) -> Self {
        let mut bs: Vec<Rat> = Vec::with_capacity(breaks.len());
        let mut vs: Vec<Rat> = Vec::with_capacity(values.len());
        for (x, y) in breaks.into_iter().zip(values) {
            while bs.len() >= 2 {
                let n = bs.len();
                if collinear(&bs[n - 2], &vs[n - 2], &bs[n - 1], &vs[n - 1], &x, &y) {
                    bs.pop();
                    vs.pop();
                } else {
                    break;
                }
            }
            bs.push(x);
            vs.push(y);
        }
        // a flat final segment merges into the constant tail
        while vs.len() >= 2 && vs[vs.len() - 1] == vs[vs.len() - 2] {
            bs.pop();
            vs.pop();
        }
        PwlFunction { breaks: bs, values: vs }
    }

    pub fn constant(q: Rat) -> Self {
        PwlFunction {
            breaks: vec![Rat::zero()],
            values: vec![q],
        }
    }

    pub fn breaks(&self) -> &[Rat] {
        &self.breaks
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn tail(&self) -> &Rat {
        self.values.last().expect("nonempty")
    }

    pub fn value_at(&self, x: &Rat) -> Rat {
        match self.breaks.binary_search(x) {
            Ok(i) => self.values[i].clone(),
            Err(0) => self.values[0].clone(),
            Err(i) if i == self.breaks.len() => self.tail().clone(),
            Err(i) => {
                let (x0, x1) = (&self.breaks[i - 1], &self.breaks[i]);
                let (y0, y1) = (&self.values[i - 1], &self.values[i]);
                y0 + (y1 - y0) * (x - x0) / (x1 - x0)
            }
        }
    }

    pub fn eval(&self, p: &HalfPoint) -> Rat {
        match p {
            HalfPoint::Finite(x) => self.value_at(x),
            HalfPoint::Infinity => self.tail().clone(),
        }
    }

    fn pointwise(&self, other: &Self, op: impl Fn(&Rat, &Rat) -> Rat) -> Self {
        let mut xs: Vec<Rat> = self.breaks.iter().chain(&other.breaks).cloned().collect();
        xs.sort();
        xs.dedup();
        let ys = xs.iter().map(|x| op(&self.value_at(x), &other.value_at(x))).collect();
        Self::canonical(xs, ys)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.pointwise(other, |a, b| a + b)
    }

    pub fn neg(&self) -> Self {
        PwlFunction {
            breaks: self.breaks.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::canonical(self.breaks.clone(), self.values.iter().map(|v| v * k).collect())
    }

    /// Pointwise min/max; where the two functions cross strictly inside a
    /// piece, the crossing point becomes a breakpoint.
    fn lattice_op(&self, other: &Self, take_min: bool) -> Self {
        let mut xs: Vec<Rat> = self.breaks.iter().chain(&other.breaks).cloned().collect();
        xs.sort();
        xs.dedup();
        let diffs: Vec<Rat> = xs.iter().map(|x| self.value_at(x) - other.value_at(x)).collect();
        let mut cuts = xs.clone();
        for i in 0..xs.len().saturating_sub(1) {
            let (d0, d1) = (&diffs[i], &diffs[i + 1]);
            if (d0.is_positive() && d1.is_negative()) || (d0.is_negative() && d1.is_positive()) {
                cuts.push(&xs[i] + (&xs[i + 1] - &xs[i]) * d0 / (d0 - d1));
            }
        }
        cuts.sort();
        let ys = cuts
            .iter()
            .map(|x| {
                let (a, b) = (self.value_at(x), other.value_at(x));
                if (a <= b) == take_min {
                    a
                } else {
                    b
                }
            })
            .collect();
        Self::canonical(cuts, ys)
    }

    pub fn meet(&self, other: &Self) -> Self {
        self.lattice_op(other, true)
    }

    pub fn join(&self, other: &Self) -> Self {
        self.lattice_op(other, false)
    }

    pub fn abs(&self) -> Self {
        self.join(&self.neg())
    }

    /// Breakpoints together with the zeros strictly inside pieces.
    fn cuts_with_zeros(&self) -> Vec<Rat> {
        let mut cuts = self.breaks.clone();
        for i in 0..self.breaks.len().saturating_sub(1) {
            let (y0, y1) = (&self.values[i], &self.values[i + 1]);
            if (y0.is_positive() && y1.is_negative()) || (y0.is_negative() && y1.is_positive()) {
                let (x0, x1) = (&self.breaks[i], &self.breaks[i + 1]);
                cuts.push(x0 + (x1 - x0) * y0 / (y0 - y1));
            }
        }
        cuts.sort();
        cuts
    }

    /// Between consecutive cuts the function is affine without interior
    /// zeros, so it is nonzero on the open gap unless it vanishes at both
    /// ends.
    pub fn coz(&self) -> IntervalSet {
        let cuts = self.cuts_with_zeros();
        let vals: Vec<Rat> = cuts.iter().map(|x| self.value_at(x)).collect();
        let point_in: Vec<bool> = vals.iter().map(|v| !v.is_zero()).collect();
        let n = cuts.len();
        let gap_in = (0..n)
            .map(|i| {
                if i + 1 < n {
                    point_in[i] || point_in[i + 1]
                } else {
                    !self.tail().is_zero()
                }
            })
            .collect();
        IntervalSet::from_cuts(cuts, point_in, gap_in, !self.tail().is_zero())
    }

    /// On every piece of the common refinement both `|f|` and `|g|` are
    /// affine, so `|f| <= n|g|` holds on the piece iff it holds at its two
    /// ends. The best `n` is therefore a maximum over finitely many ratios.
    pub fn dominance(&self, g: &Self) -> Dominance<HalfPoint> {
        let f = self.abs();
        let g = g.abs();
        let mut xs: Vec<Rat> = f.breaks.iter().chain(&g.breaks).cloned().collect();
        xs.sort();
        xs.dedup();
        let mut bound = Rat::zero();
        for x in xs {
            let (fv, gv) = (f.value_at(&x), g.value_at(&x));
            if gv.is_zero() {
                if !fv.is_zero() {
                    return Dominance::Unbounded(Certificate::ZeroStructure {
                        point: HalfPoint::Finite(x),
                    });
                }
            } else {
                let q = fv / gv;
                if q > bound {
                    bound = q;
                }
            }
        }
        Dominance::Bounded(ceil_positive(&bound))
    }

    /// `e >= 0` with `coz(e) = u`: value 1 on member cut points, 0 on the
    /// others, and a peak of height 1 in the middle of every member gap.
    pub fn realize_open(u: &IntervalSet) -> Result<Self, ModelError> {
        if !u.is_open() {
            return Err(ModelError::NotOpen(u.to_string()));
        }
        if u.contains_tail() != u.contains_infinity() {
            return Err(ModelError::NotRealizable(format!(
                "{u}: a function constant near +inf cannot vanish exactly at +inf"
            )));
        }
        let points = u.points();
        let (pin, gin) = (u.point_flags(), u.gap_flags());
        let one = rat(1);
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for i in 0..points.len() {
            xs.push(points[i].clone());
            ys.push(if pin[i] { one.clone() } else { Rat::zero() });
            if gin[i] {
                let peak = match points.get(i + 1) {
                    Some(next) => (&points[i] + next) / rat(2),
                    None if pin[i] => continue,
                    None => &points[i] + &one,
                };
                xs.push(peak);
                ys.push(one.clone());
            }
        }
        Ok(Self::canonical(xs, ys))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }
}

impl fmt::Display for PwlFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .breaks
            .iter()
            .zip(&self.values)
            .map(|(x, y)| format!("({}, {})", fmt_rat(x), fmt_rat(y)))
            .collect();
        write!(f, "pwl[{}; tail {}]", pts.join(" "), fmt_rat(self.tail()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn g_ramp() -> PwlFunction {
        PwlFunction::new(vec![rat(0), rat(1)], vec![rat(0), rat(1)], &rat(1)).unwrap()
    }

    fn hat() -> PwlFunction {
        PwlFunction::new(
            vec![rat(0), rat(1), rat(2)],
            vec![rat(1), rat(0), rat(1)],
            &rat(1),
        )
        .unwrap()
    }

    #[test]
    fn rejects_sloped_final_piece() {
        assert!(PwlFunction::new(vec![rat(0), rat(1)], vec![rat(0), rat(1)], &rat(2)).is_err());
        assert!(PwlFunction::new(vec![rat(1)], vec![rat(0)], &rat(0)).is_err());
        assert!(PwlFunction::new(vec![rat(0), rat(0)], vec![rat(0), rat(0)], &rat(0)).is_err());
    }

    #[test]
    fn lattice_ops_on_ramp_g() {
        let one = PwlFunction::constant(rat(1));
        assert_eq!(g_ramp().meet(&one), g_ramp());
        assert_eq!(g_ramp().neg().abs(), g_ramp());
        assert_eq!(g_ramp().add(&g_ramp()).value_at(&ratio(1, 2)), rat(1));
    }

    #[test]
    fn meet_inserts_crossings() {
        let half = PwlFunction::constant(ratio(1, 2));
        let m = g_ramp().meet(&half);
        assert_eq!(m.breaks(), &[rat(0), ratio(1, 2)]);
        assert_eq!(m.tail(), &ratio(1, 2));
    }

    #[test]
    fn coz_examples() {
        assert_eq!(g_ramp().coz().to_string(), "(0,+inf]");
        assert!(PwlFunction::constant(rat(0)).coz().is_empty());
        assert_eq!(hat().coz().to_string(), "[0,1) ∪ (1,+inf]");
    }

    #[test]
    fn dominance_examples() {
        let f = g_ramp()
            .add(&PwlFunction::constant(ratio(-1, 2)))
            .join(&PwlFunction::constant(rat(0)));
        assert_eq!(f.dominance(&g_ramp()), Dominance::Bounded(1.into()));
        assert!(matches!(
            PwlFunction::constant(rat(1)).dominance(&g_ramp()),
            Dominance::Unbounded(Certificate::ZeroStructure { .. })
        ));
        let zero = PwlFunction::constant(rat(0));
        assert_eq!(zero.dominance(&zero), Dominance::Bounded(1.into()));
    }

    #[test]
    fn realize_open_examples() {
        let u = IntervalSet::interval(rat(0), false, None, true);
        assert_eq!(PwlFunction::realize_open(&u).unwrap(), g_ramp());
        assert_eq!(
            PwlFunction::realize_open(&IntervalSet::whole()).unwrap(),
            PwlFunction::constant(rat(1))
        );
        let tent = PwlFunction::realize_open(&IntervalSet::interval(rat(1), false, Some(rat(2)), false)).unwrap();
        assert_eq!(tent.value_at(&ratio(3, 2)), rat(1));
        assert_eq!(tent.coz(), IntervalSet::interval(rat(1), false, Some(rat(2)), false));
        assert!(PwlFunction::realize_open(&IntervalSet::interval(rat(0), true, Some(rat(1)), true)).is_err());
        assert!(matches!(
            PwlFunction::realize_open(&IntervalSet::interval(rat(1), false, None, false)),
            Err(ModelError::NotRealizable(_))
        ));
    }
}
