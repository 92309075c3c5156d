//! Breadth-first enumeration of group elements by term size.
//!
//! Level 1 holds the atoms `0, 1`, the generators in declaration order, then
//! `-1, 1/2, -1/2, 2, -2`. Level `n` applies `-`, `|.|` and `2*` to level
//! `n - 1` and `+`, `/\`, `\/` to every pair of levels with sizes summing to
//! `n - 1`. Elements equal in the model to an earlier one are dropped, so the
//! stream is made of distinct elements, each labelled by the first term that
//! produced it.
//!
//! With a non-zero seed the elements of each level from 2 on are shuffled
//! after the level is built; seed 0 keeps the canonical order.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ast::Term;
use super::presentation::GroupPresentation;
use crate::rat::{rat, ratio};
use crate::space::Space;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumerated<E> {
    pub term: Term,
    pub elem: E,
}

struct Builder<'a, S: Space> {
    p: &'a GroupPresentation<S>,
    budget: usize,
    seen: HashSet<S::Elem>,
    out: Vec<Enumerated<S::Elem>>,
}

impl<S: Space> Builder<'_, S> {
    fn full(&self) -> bool {
        self.out.len() >= self.budget
    }

    /// Adds the element unless it is already known; returns whether the
    /// budget is exhausted.
    fn offer(&mut self, term: Term, elem: S::Elem) -> bool {
        if !self.seen.contains(&elem) {
            self.seen.insert(elem.clone());
            self.out.push(Enumerated { term, elem });
        }
        self.full()
    }

    fn level(&mut self, levels: &[Vec<usize>]) -> Vec<usize> {
        let start = self.out.len();
        let n = levels.len();
        let p = self.p;
        let s = &p.space;
        for &i in &levels[n - 1] {
            let Enumerated { term, elem } = self.out[i].clone();
            let unary = [
                (Term::neg(term.clone()), s.neg(&elem)),
                (Term::abs(term.clone()), s.abs(&elem)),
                (Term::scale(2, term.clone()), s.scale(&elem, 2)),
            ];
            for (t, e) in unary {
                if self.offer(t, e) {
                    return (start..self.out.len()).collect();
                }
            }
        }
        // sizes of the operands sum to n - 1 (one node for the operator)
        for left in 1..n.saturating_sub(1) {
            let right = n - 1 - left;
            for &i in &levels[left - 1] {
                for &j in &levels[right - 1] {
                    let (a, b) = (&self.out[i], &self.out[j]);
                    let ops = [
                        (Term::add(a.term.clone(), b.term.clone()), s.add(&a.elem, &b.elem)),
                        (Term::meet(a.term.clone(), b.term.clone()), s.meet(&a.elem, &b.elem)),
                        (Term::join(a.term.clone(), b.term.clone()), s.join(&a.elem, &b.elem)),
                    ];
                    for (t, e) in ops {
                        if self.offer(t, e) {
                            return (start..self.out.len()).collect();
                        }
                    }
                }
            }
        }
        (start..self.out.len()).collect()
    }
}

/// The first `budget` distinct elements of the group, in enumeration order.
pub fn enumerate_terms<S: Space>(p: &GroupPresentation<S>, budget: usize, seed: u64) -> Vec<Enumerated<S::Elem>> {
    let budget = budget.max(1);
    let mut b = Builder {
        p,
        budget,
        seen: HashSet::new(),
        out: Vec::new(),
    };
    let mut atoms: Vec<Term> = vec![Term::Const(rat(0)), Term::Const(rat(1))];
    atoms.extend(p.generators.iter().map(|(name, _)| Term::Gen(name.clone())));
    for q in [rat(-1), ratio(1, 2), ratio(-1, 2), rat(2), rat(-2)] {
        atoms.push(Term::Const(q));
    }
    for t in atoms {
        let e = p.eval(&t).expect("atoms resolve");
        if b.offer(t, e) {
            return b.out;
        }
    }
    let mut levels: Vec<Vec<usize>> = vec![(0..b.out.len()).collect()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while !b.full() {
        let level = b.level(&levels);
        if seed != 0 && !level.is_empty() {
            let start = level[0];
            b.out[start..].shuffle(&mut rng);
        }
        levels.push(level);
        // every group here is infinite; the cap only guards degenerate input
        if levels.len() > 64 {
            break;
        }
    }
    b.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphan::AlphaN;
    use crate::terms::presentation::{builtin, AnyPresentation};

    fn ex_5_2_1() -> GroupPresentation<AlphaN> {
        match builtin("ex_5_2_1").unwrap() {
            AnyPresentation::AlphaN(p) => p,
            _ => unreachable!(),
        }
    }

    #[test]
    fn smallest_terms_come_first() {
        let p = ex_5_2_1();
        let items = enumerate_terms(&p, 10, 0);
        assert_eq!(items.len(), 10);
        let elems: Vec<_> = items.iter().map(|e| e.elem.clone()).collect();
        let s = &p.space;
        for want in [s.zero(), s.unit(), AlphaN::v()] {
            assert!(elems.contains(&want));
        }
        let bigger = enumerate_terms(&p, 60, 0);
        let v_meet_1 = s.meet(&s.unit(), &AlphaN::v());
        // 1 /\ v = v, so it is deduplicated against v
        assert_eq!(v_meet_1, AlphaN::v());
        assert_eq!(bigger.iter().filter(|e| e.elem == AlphaN::v()).count(), 1);
    }

    #[test]
    fn elements_are_distinct_and_labelled() {
        let p = ex_5_2_1();
        let items = enumerate_terms(&p, 300, 0);
        let set: HashSet<_> = items.iter().map(|e| e.elem.clone()).collect();
        assert_eq!(set.len(), items.len());
        for e in &items {
            assert_eq!(p.eval(&e.term).unwrap(), e.elem, "{}", e.term);
        }
    }

    #[test]
    fn deterministic_and_seeded() {
        let p = ex_5_2_1();
        let a = enumerate_terms(&p, 200, 0);
        let b = enumerate_terms(&p, 200, 0);
        assert_eq!(a, b);
        let c = enumerate_terms(&p, 200, 7);
        let d = enumerate_terms(&p, 200, 7);
        assert_eq!(c, d);
        assert_ne!(a, c);
        // level 1 is never shuffled
        assert_eq!(a[..3], c[..3]);
    }

    #[test]
    fn finite_basis_combinations() {
        let p = GroupPresentation::finite(2).unwrap();
        let items = enumerate_terms(&p, 4, 0);
        let elems: Vec<_> = items.iter().map(|e| e.elem.clone()).collect();
        assert!(elems.contains(&p.space.basis(0)));
        assert!(elems.contains(&p.space.basis(1)));
    }
}
