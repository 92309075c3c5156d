//! Algebraic and topological laws checked on randomly generated elements.

use std::collections::BTreeMap;

use cozero::alphan::{AlphaN, AlphaPoint, AsymptoticSequence, EventuallyPeriodicSet, TailPoly};
use cozero::finite::{Finite, FiniteVector};
use cozero::halfline::{HalfLine, HalfPoint, IntervalSet, PwlFunction};
use cozero::rat::{rat, ratio, Rat};
use cozero::space::{Certificate, Dominance, Space};
use num::Signed;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

/// Sparse rationals: zero half the time, so zero sets are non-trivial.
fn sparse_rat() -> impl Strategy<Value = Rat> {
    prop_oneof![Just(rat(0)), small_rat()]
}

prop_compose! {
    fn sequence()(
        alpha in sparse_rat(),
        tails in prop::collection::vec(prop::collection::vec(sparse_rat(), 0..3), 1..4),
        exceptions in prop::collection::btree_map(1u64..12, sparse_rat(), 0..4),
    ) -> AsymptoticSequence {
        let tails = tails
            .into_iter()
            .map(|rest| {
                let mut coeffs = vec![alpha.clone()];
                coeffs.extend(rest);
                TailPoly::new(coeffs)
            })
            .collect();
        AsymptoticSequence::new(tails, exceptions, alpha).expect("tails agree at alpha")
    }
}

prop_compose! {
    fn pwl()(
        steps in prop::collection::vec((1i64..=4, sparse_rat()), 0..5),
        first in sparse_rat(),
    ) -> PwlFunction {
        let mut breaks = vec![rat(0)];
        let mut values = vec![first];
        let mut x = rat(0);
        for (dx, y) in steps {
            x += ratio(dx, 2);
            breaks.push(x.clone());
            values.push(y);
        }
        let tail = values.last().expect("nonempty").clone();
        PwlFunction::new(breaks, values, &tail).expect("valid breakpoints")
    }
}

prop_compose! {
    fn periodic_set()(
        residues in prop::collection::vec(any::<bool>(), 1..4),
        flips in prop::collection::vec(1u64..15, 0..4),
        alpha in any::<bool>(),
    ) -> EventuallyPeriodicSet {
        EventuallyPeriodicSet::new(residues, flips, alpha)
    }
}

prop_compose! {
    fn interval_set()(pieces in prop::collection::vec((0i64..12, 0i64..4, any::<bool>(), any::<bool>()), 0..4)) -> IntervalSet {
        pieces.into_iter().fold(IntervalSet::empty(), |acc, (lo, len, lc, hc)| {
            let hi = (len > 0).then(|| ratio(lo + len, 2));
            let piece = IntervalSet::interval(ratio(lo, 2), lc, hi, hc);
            acc.union(&piece)
        })
    }
}

fn alpha_points() -> Vec<AlphaPoint> {
    let mut pts: Vec<AlphaPoint> = (1..=60).map(AlphaPoint::Nat).collect();
    pts.push(AlphaPoint::Alpha);
    pts
}

fn half_points(fs: &[&PwlFunction]) -> Vec<HalfPoint> {
    let mut xs: Vec<Rat> = (0..=60).map(|i| ratio(i, 4)).collect();
    for f in fs {
        xs.extend(f.breaks().iter().cloned());
    }
    xs.sort();
    xs.dedup();
    let mids: Vec<Rat> = xs.windows(2).map(|w| (w[0].clone() + &w[1]) / rat(2)).collect();
    xs.extend(mids);
    let mut pts: Vec<HalfPoint> = xs.into_iter().map(HalfPoint::Finite).collect();
    pts.push(HalfPoint::Infinity);
    pts
}

/// Pointwise semantics of the lattice-group operations.
fn check_pointwise<S: Space>(s: &S, f: &S::Elem, g: &S::Elem, pts: &[S::Point]) -> Result<(), TestCaseError> {
    for p in pts {
        let (fv, gv) = (s.eval(f, p), s.eval(g, p));
        prop_assert_eq!(s.eval(&s.add(f, g), p), &fv + &gv);
        prop_assert_eq!(s.eval(&s.neg(f), p), -fv.clone());
        prop_assert_eq!(s.eval(&s.meet(f, g), p), fv.clone().min(gv.clone()));
        prop_assert_eq!(s.eval(&s.join(f, g), p), fv.clone().max(gv.clone()));
        prop_assert_eq!(s.eval(&s.abs(f), p), fv.abs());
        prop_assert_eq!(s.eval(&s.scale(f, 3), p), fv * rat(3));
    }
    Ok(())
}

/// `coz` turns the lattice operations on `|f|, |g|` into set operations.
fn check_coz_laws<S: Space>(s: &S, f: &S::Elem, g: &S::Elem) -> Result<(), TestCaseError> {
    let (cf, cg) = (s.coz(f), s.coz(g));
    let (af, ag) = (s.abs(f), s.abs(g));
    prop_assert_eq!(s.coz(&s.neg(f)), cf.clone());
    prop_assert_eq!(s.coz(&af), cf.clone());
    prop_assert_eq!(s.coz(&s.scale(f, -2)), cf.clone());
    prop_assert_eq!(s.coz(&s.join(&af, &ag)), s.union(&cf, &cg));
    prop_assert_eq!(s.coz(&s.meet(&af, &ag)), s.intersect(&cf, &cg));
    prop_assert_eq!(s.coz(&s.add(&af, &ag)), s.union(&cf, &cg));
    prop_assert!(s.is_subset(&s.coz(&s.add(f, g)), &s.union(&cf, &cg)));
    prop_assert_eq!(s.zset(f), s.complement(&cf));
    prop_assert!(s.is_open(&cf));
    Ok(())
}

fn check_set_laws<S: Space>(s: &S, a: &S::Set, b: &S::Set) -> Result<(), TestCaseError> {
    let cl = s.closure(a);
    let int = s.interior(a);
    prop_assert!(s.is_subset(&int, a) && s.is_subset(a, &cl));
    prop_assert_eq!(s.closure(&cl), cl.clone());
    prop_assert_eq!(s.interior(&int), int.clone());
    prop_assert!(s.is_closed(&cl) && s.is_open(&int));
    prop_assert_eq!(s.complement(&cl), s.interior(&s.complement(a)));
    prop_assert_eq!(s.closure(&s.union(a, b)), s.union(&cl, &s.closure(b)));
    prop_assert_eq!(s.interior(&s.intersect(a, b)), s.intersect(&int, &s.interior(b)));
    prop_assert_eq!(s.complement(&s.union(a, b)), s.intersect(&s.complement(a), &s.complement(b)));
    Ok(())
}

/// A bounded verdict is checked at the sample points; an unbounded one must
/// carry a certificate that holds there.
fn check_dominance<S: Space>(s: &S, f: &S::Elem, g: &S::Elem, pts: &[S::Point]) -> Result<(), TestCaseError> {
    match s.dominance(f, g) {
        Dominance::Bounded(n) => {
            prop_assert!(n >= 1.into());
            let n = Rat::from_integer(n);
            for p in pts {
                prop_assert!(s.eval(f, p).abs() <= &n * s.eval(g, p).abs(), "at {}", p);
            }
        }
        Dominance::Unbounded(Certificate::ZeroStructure { point }) => {
            prop_assert!(s.eval(f, &point) != rat(0));
            prop_assert_eq!(s.eval(g, &point), rat(0));
        }
        Dominance::Unbounded(Certificate::TailOrder { f_order, g_order, .. }) => {
            prop_assert!(f_order < g_order);
        }
    }
    Ok(())
}

fn check_realize<S: Space>(s: &S, f: &S::Elem) -> Result<(), TestCaseError> {
    let u = s.coz(f);
    let w = s.realize_open(&u).expect("cozero-sets are realisable");
    prop_assert_eq!(s.coz(&w), u.clone());
    let reg = s.interior(&s.closure(&u));
    let w = s.realize_open(&reg).expect("regular open sets are realisable");
    prop_assert_eq!(s.coz(&w), reg);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn alphan_operations_are_pointwise(f in sequence(), g in sequence()) {
        check_pointwise(&AlphaN, &f, &g, &alpha_points())?;
    }

    #[test]
    fn alphan_coz_laws(f in sequence(), g in sequence()) {
        check_coz_laws(&AlphaN, &f, &g)?;
    }

    #[test]
    fn alphan_set_laws(a in periodic_set(), b in periodic_set()) {
        check_set_laws(&AlphaN, &a, &b)?;
    }

    #[test]
    fn alphan_dominance_is_sound(f in sequence(), g in sequence()) {
        let mut pts = alpha_points();
        pts.extend((61..=3000).step_by(7).map(AlphaPoint::Nat));
        check_dominance(&AlphaN, &f, &g, &pts)?;
    }

    #[test]
    fn alphan_coz_of_sequence_matches_values(f in sequence()) {
        let c = AlphaN.coz(&f);
        for p in alpha_points() {
            prop_assert_eq!(c.contains(&p), AlphaN.eval(&f, &p) != rat(0));
        }
    }

    #[test]
    fn alphan_realize_open(f in sequence()) {
        check_realize(&AlphaN, &f)?;
    }

    #[test]
    fn halfline_operations_are_pointwise(f in pwl(), g in pwl()) {
        let pts = half_points(&[&f, &g]);
        check_pointwise(&HalfLine, &f, &g, &pts)?;
    }

    #[test]
    fn halfline_coz_laws(f in pwl(), g in pwl()) {
        check_coz_laws(&HalfLine, &f, &g)?;
    }

    #[test]
    fn halfline_set_laws(a in interval_set(), b in interval_set()) {
        check_set_laws(&HalfLine, &a, &b)?;
    }

    #[test]
    fn halfline_dominance_is_sound(f in pwl(), g in pwl()) {
        let pts = half_points(&[&f, &g]);
        check_dominance(&HalfLine, &f, &g, &pts)?;
    }

    #[test]
    fn halfline_realize_open(f in pwl()) {
        check_realize(&HalfLine, &f)?;
    }

    /// Every continuous piecewise-linear pair with nested cozero-sets is
    /// dominated, including pairs built to make the ratio large: `f` steep and
    /// `g` shallow at a common zero.
    #[test]
    fn halfline_coz_inclusion_gives_domination(
        f in pwl(),
        g in pwl(),
        c in 2i64..8,
        steep in 1i64..50,
    ) {
        let s = HalfLine;
        let c = rat(c);
        let hat = PwlFunction::new(
            vec![rat(0), c.clone() - rat(1), c.clone(), c + rat(1)],
            vec![rat(1), rat(1), rat(0), rat(1)],
            &rat(1),
        ).expect("valid");
        let f2 = s.meet(&s.abs(&f), &s.scale(&hat, steep));
        let shallow = PwlFunction::constant(ratio(1, 1000));
        let g2 = s.meet(&s.join(&s.abs(&g), &f2), &s.meet(&hat, &shallow));
        prop_assert!(s.is_subset(&s.coz(&f2), &s.coz(&g2)));
        let pts = half_points(&[&f2, &g2]);
        match s.dominance(&f2, &g2) {
            Dominance::Bounded(_) => check_dominance(&s, &f2, &g2, &pts)?,
            other => prop_assert!(false, "expected domination, got {:?}", other),
        }
    }

    #[test]
    fn finite_laws(
        f in prop::collection::vec(sparse_rat(), 4),
        g in prop::collection::vec(sparse_rat(), 4),
    ) {
        let s = Finite::new(4).expect("size 4");
        let (f, g) = (FiniteVector(f), FiniteVector(g));
        let pts: Vec<usize> = (0..4).collect();
        check_pointwise(&s, &f, &g, &pts)?;
        check_coz_laws(&s, &f, &g)?;
        check_set_laws(&s, &s.coz(&f), &s.zset(&g))?;
        check_dominance(&s, &f, &g, &pts)?;
        check_realize(&s, &f)?;
    }
}

#[test]
fn sequence_values_follow_tails_and_exceptions() {
    let mut exceptions = BTreeMap::new();
    exceptions.insert(3, rat(7));
    let g = AsymptoticSequence::new(
        vec![TailPoly::new(vec![rat(1), rat(2)]), TailPoly::new(vec![rat(1)])],
        exceptions,
        rat(1),
    )
    .unwrap();
    assert_eq!(g.value_at(3), rat(7));
    assert_eq!(g.value_at(4), rat(1) + ratio(2, 4));
    assert_eq!(g.value_at(5), rat(1));
    assert_eq!(g.eval(&AlphaPoint::Alpha), rat(1));
}
