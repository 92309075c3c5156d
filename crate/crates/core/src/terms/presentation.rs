use thiserror::Error;

use super::ast::Term;
use super::normal_form::{spans_family, to_normal_form, Family};
use super::parse::{parse_term, ParseError};
use crate::alphan::AlphaN;
use crate::finite::Finite;
use crate::halfline::HalfLine;
use crate::predicates::is_strong_unit;
use crate::space::{ModelError, Space};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("generator `{0}` is declared twice")]
    DuplicateGenerator(String),
    #[error("generator name `{0}` is not an identifier")]
    BadGeneratorName(String),
    #[error("the unit is not a strong unit")]
    NotStrongUnit,
    #[error("family {family} is only available on alphaN")]
    FamilyUnsupported { family: Family },
    #[error("generator `{generator}` is not in family {family}")]
    NotInFamily { generator: String, family: Family },
    #[error("generators do not reach every profile of family {0}")]
    FamilyNotSpanned(Family),
    #[error("unknown builtin presentation `{0}`")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

/// A group `G <= C(K)`: the l-group generated by named elements and the
/// rational multiples of the unit, optionally tagged with a normal-form
/// family (which then also puts every eventually constant sequence in `G`).
#[derive(Clone, Debug)]
pub struct GroupPresentation<S: Space> {
    pub name: String,
    pub space: S,
    pub generators: Vec<(String, S::Elem)>,
    pub unit: S::Elem,
    pub family: Option<Family>,
}

impl<S: Space> GroupPresentation<S> {
    pub fn new(
        name: impl Into<String>,
        space: S,
        generators: Vec<(String, S::Elem)>,
        family: Option<Family>,
    ) -> Result<Self, PresentationError> {
        for (i, (gen, _)) in generators.iter().enumerate() {
            let valid = gen.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && gen.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PresentationError::BadGeneratorName(gen.clone()));
            }
            if generators[..i].iter().any(|(other, _)| other == gen) {
                return Err(PresentationError::DuplicateGenerator(gen.clone()));
            }
        }
        let unit = space.unit();
        if !is_strong_unit(&space, &unit) {
            return Err(PresentationError::NotStrongUnit);
        }
        if let Some(family) = family {
            if space.family_representatives(family).is_none() {
                return Err(PresentationError::FamilyUnsupported { family });
            }
            for (gen, g) in &generators {
                if !space.in_family(family, g) {
                    return Err(PresentationError::NotInFamily {
                        generator: gen.clone(),
                        family,
                    });
                }
            }
        }
        Ok(GroupPresentation {
            name: name.into(),
            space,
            generators,
            unit,
            family,
        })
    }

    pub fn generator(&self, name: &str) -> Option<&S::Elem> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn eval(&self, term: &Term) -> Result<S::Elem, TermError> {
        let s = &self.space;
        Ok(match term {
            Term::Gen(name) => self
                .generator(name)
                .cloned()
                .ok_or_else(|| TermError::UnknownGenerator(name.clone()))?,
            Term::Const(q) => s.constant(q),
            Term::Add(a, b) => s.add(&self.eval(a)?, &self.eval(b)?),
            Term::Neg(a) => s.neg(&self.eval(a)?),
            Term::Meet(a, b) => s.meet(&self.eval(a)?, &self.eval(b)?),
            Term::Join(a, b) => s.join(&self.eval(a)?, &self.eval(b)?),
            Term::Abs(a) => s.abs(&self.eval(a)?),
            Term::Scale(k, a) => s.scale(&self.eval(a)?, *k),
        })
    }

    pub fn eval_str(&self, text: &str) -> Result<S::Elem, TermError> {
        self.eval(&parse_term(text)?)
    }
}

impl GroupPresentation<AlphaN> {
    /// Family tags additionally require the generators to reach every tail
    /// profile of the family, so that the profile representatives used by the
    /// exact deciders describe elements of this group.
    pub fn alphan(
        name: impl Into<String>,
        generators: Vec<(String, <AlphaN as Space>::Elem)>,
        family: Option<Family>,
    ) -> Result<Self, PresentationError> {
        let p = Self::new(name, AlphaN, generators, family)?;
        if let Some(family) = family {
            let forms: Vec<_> = p
                .generators
                .iter()
                .map(|(_, g)| to_normal_form(g, family).expect("checked by new"))
                .collect();
            if !spans_family(&forms, family) {
                return Err(PresentationError::FamilyNotSpanned(family));
            }
        }
        Ok(p)
    }
}

impl GroupPresentation<Finite> {
    /// `C(K)` for `|K| = size`, generated by the indicator vectors `e0, e1, ...`.
    pub fn finite(size: usize) -> Result<Self, PresentationError> {
        let space = Finite::new(size)?;
        let generators = (0..size).map(|i| (format!("e{i}"), space.basis(i))).collect();
        Self::new(format!("finite({size})"), space, generators, None)
    }
}

/// A presentation over any of the built-in models.
#[derive(Clone, Debug)]
pub enum AnyPresentation {
    AlphaN(GroupPresentation<AlphaN>),
    HalfLine(GroupPresentation<HalfLine>),
    Finite(GroupPresentation<Finite>),
}

impl AnyPresentation {
    pub fn name(&self) -> &str {
        match self {
            AnyPresentation::AlphaN(p) => &p.name,
            AnyPresentation::HalfLine(p) => &p.name,
            AnyPresentation::Finite(p) => &p.name,
        }
    }

    pub fn family(&self) -> Option<Family> {
        match self {
            AnyPresentation::AlphaN(p) => p.family,
            _ => None,
        }
    }
}

/// Names accepted by [`builtin`], besides `finite(k)` for other `k`.
pub const BUILTIN_NAMES: [&str; 8] = [
    "ex_5_2_1",
    "ex_5_2_2",
    "ex_5_3_2",
    "ex_5_4",
    "finite(1)",
    "finite(2)",
    "finite(3)",
    "finite(5)",
];

fn named<E>(items: Vec<(&str, E)>) -> Vec<(String, E)> {
    items.into_iter().map(|(n, e)| (n.to_string(), e)).collect()
}

/// The example groups:
///
/// - `ex_5_2_1`: `F` and `v` on `αℕ`;
/// - `ex_5_2_2`: the piecewise-linear functions on `[0, +∞]` (sampled through
///   `g`, a hat with a zero at 1, and a tent supported on `(2, 4)`);
/// - `ex_5_3_2`: `F`, `a` and `b` on `αℕ`;
/// - `ex_5_4`: `F` and `a` on `αℕ`;
/// - `finite(k)`: `C(K)` for a `k`-point discrete `K`.
///
/// In the `αℕ` groups, `F` is represented in term enumeration by the
/// constants and the point indicators `delta1`, `delta2`.
pub fn builtin(name: &str) -> Result<AnyPresentation, PresentationError> {
    let deltas = || vec![("delta1", AlphaN::point_indicator(1)), ("delta2", AlphaN::point_indicator(2))];
    let alphan = |extra: Vec<(&str, _)>, family| {
        let mut gens = deltas();
        gens.extend(extra);
        GroupPresentation::alphan(name, named(gens), Some(family)).map(AnyPresentation::AlphaN)
    };
    match name {
        "ex_5_2_1" => alphan(vec![("v", AlphaN::v())], Family::FV),
        "ex_5_3_2" => alphan(vec![("a", AlphaN::a()), ("b", AlphaN::b())], Family::FAB),
        "ex_5_4" => alphan(vec![("a", AlphaN::a())], Family::FA),
        "ex_5_2_2" => GroupPresentation::new(
            name,
            HalfLine,
            named(vec![("g", HalfLine::g_ramp()), ("hat", HalfLine::hat()), ("tent", HalfLine::tent())]),
            None,
        )
        .map(AnyPresentation::HalfLine),
        _ => {
            let size = name
                .strip_prefix("finite(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| PresentationError::UnknownBuiltin(name.to_string()))?;
            GroupPresentation::finite(size).map(AnyPresentation::Finite)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphan::AlphaPoint;
    use crate::halfline::HalfPoint;
    use crate::rat::{rat, ratio};

    #[test]
    fn builtin_generator_data() {
        let AnyPresentation::AlphaN(p) = builtin("ex_5_3_2").unwrap() else {
            panic!("wrong space")
        };
        assert_eq!(p.generator("a").unwrap().eval(&AlphaPoint::Nat(2)), ratio(1, 2));
        assert_eq!(p.generator("b").unwrap().eval(&AlphaPoint::Nat(2)), ratio(1, 4));
        let AnyPresentation::HalfLine(h) = builtin("ex_5_2_2").unwrap() else {
            panic!("wrong space")
        };
        assert_eq!(h.generator("g").unwrap().eval(&HalfPoint::Finite(rat(1))), rat(1));
        let AnyPresentation::Finite(f) = builtin("finite(1)").unwrap() else {
            panic!("wrong space")
        };
        assert_eq!(f.generators.len(), 1);
        assert!(builtin("ex_9").is_err());
        assert!(builtin("finite(0)").is_err());
    }

    #[test]
    fn eval_examples() {
        let AnyPresentation::AlphaN(p) = builtin("ex_5_3_2").unwrap() else {
            panic!()
        };
        assert_eq!(p.eval_str("a + b").unwrap().eval(&AlphaPoint::Nat(2)), ratio(3, 4));
        assert_eq!(p.eval_str("0*a").unwrap(), p.space.zero());
        assert!(matches!(p.eval_str("w"), Err(TermError::UnknownGenerator(_))));
        let AnyPresentation::AlphaN(q) = builtin("ex_5_2_1").unwrap() else {
            panic!()
        };
        let v = q.eval_str("v").unwrap();
        assert_eq!(q.space.coz(&v).to_string(), "ℕ (all residues mod 1, alpha excluded)");
    }

    #[test]
    fn family_tags_are_validated() {
        let bad = GroupPresentation::alphan("x", named(vec![("a", AlphaN::a())]), Some(Family::FV));
        assert!(matches!(bad, Err(PresentationError::NotInFamily { .. })));
        let thin = GroupPresentation::alphan("x", named(vec![("b", AlphaN::b())]), Some(Family::FAB));
        assert!(matches!(thin, Err(PresentationError::FamilyNotSpanned(Family::FAB))));
        let dup = GroupPresentation::alphan("x", named(vec![("a", AlphaN::a()), ("a", AlphaN::a())]), None);
        assert!(matches!(dup, Err(PresentationError::DuplicateGenerator(_))));
        let hl = GroupPresentation::new("x", HalfLine, vec![], Some(Family::FA));
        assert!(matches!(hl, Err(PresentationError::FamilyUnsupported { .. })));
    }
}
