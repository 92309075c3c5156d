use std::collections::BTreeSet;
use std::fmt;

use crate::rat::lcm_u64;

/// A point of the one-point compactification `αℕ = {1, 2, ..} ∪ {α}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum AlphaPoint {
    Nat(u64),
    Alpha,
}

impl fmt::Display for AlphaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaPoint::Nat(x) => write!(f, "{x}"),
            AlphaPoint::Alpha => write!(f, "alpha"),
        }
    }
}

/// Subset of `αℕ` whose trace on `ℕ` is periodic apart from finitely many
/// points.
///
/// `x ∈ ℕ` belongs to the set iff `residues[x mod modulus]` disagrees with
/// `flips.contains(x)`. All flips lie below `threshold`. Values are kept
/// canonical (minimal modulus, minimal flip set, `threshold = max flip + 1`)
/// so structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EventuallyPeriodicSet {
    modulus: u64,
    residues: Vec<bool>,
    threshold: u64,
    flips: BTreeSet<u64>,
    contains_alpha: bool,
}

impl EventuallyPeriodicSet {
    /// Builds a set from a periodic rule, exceptional points and the `α` flag.
    /// `flips` toggles membership relative to the rule.
    pub fn new(residues: Vec<bool>, flips: impl IntoIterator<Item = u64>, contains_alpha: bool) -> Self {
        assert!(!residues.is_empty(), "modulus must be positive");
        let modulus = residues.len() as u64;
        let mut toggled = BTreeSet::new();
        for x in flips {
            assert!(x >= 1, "ℕ starts at 1");
            if !toggled.remove(&x) {
                toggled.insert(x);
            }
        }
        Self::canonical(modulus, residues, toggled, contains_alpha)
    }

    /// Builds a set from a membership predicate on `ℕ` that follows the
    /// periodic rule from `threshold` on.
    pub(crate) fn from_membership(
        residues: Vec<bool>,
        threshold: u64,
        member: impl Fn(u64) -> bool,
        contains_alpha: bool,
    ) -> Self {
        let modulus = residues.len() as u64;
        let flips = (1..threshold)
            .filter(|&x| member(x) != residues[(x % modulus) as usize])
            .collect();
        Self::canonical(modulus, residues, flips, contains_alpha)
    }

    fn canonical(modulus: u64, residues: Vec<bool>, flips: BTreeSet<u64>, contains_alpha: bool) -> Self {
        let period = (1..=modulus)
            .filter(|d| modulus.is_multiple_of(*d))
            .find(|&d| (0..modulus).all(|r| residues[r as usize] == residues[(r % d) as usize]))
            .unwrap_or(modulus);
        let residues = residues[..period as usize].to_vec();
        let threshold = flips.iter().next_back().map_or(1, |x| x + 1);
        EventuallyPeriodicSet {
            modulus: period,
            residues,
            threshold,
            flips,
            contains_alpha,
        }
    }

    pub fn empty() -> Self {
        Self::new(vec![false], [], false)
    }

    pub fn whole() -> Self {
        Self::new(vec![true], [], true)
    }

    /// `ℕ` itself, without `α`.
    pub fn naturals() -> Self {
        Self::new(vec![true], [], false)
    }

    pub fn alpha_only() -> Self {
        Self::new(vec![false], [], true)
    }

    /// `{x ∈ ℕ : x ≡ r (mod m)}` for each `r` in `classes`.
    pub fn residue_classes(modulus: u64, classes: &[u64]) -> Self {
        let mut residues = vec![false; modulus as usize];
        for &r in classes {
            residues[(r % modulus) as usize] = true;
        }
        Self::new(residues, [], false)
    }

    pub fn finite(points: impl IntoIterator<Item = u64>) -> Self {
        let set: BTreeSet<u64> = points.into_iter().collect();
        Self::new(vec![false], set, false)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[bool] {
        &self.residues
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn flips(&self) -> &BTreeSet<u64> {
        &self.flips
    }

    pub fn contains_alpha(&self) -> bool {
        self.contains_alpha
    }

    pub fn contains_nat(&self, x: u64) -> bool {
        self.residues[(x % self.modulus) as usize] != self.flips.contains(&x)
    }

    pub fn contains(&self, p: &AlphaPoint) -> bool {
        match p {
            AlphaPoint::Nat(x) => *x >= 1 && self.contains_nat(*x),
            AlphaPoint::Alpha => self.contains_alpha,
        }
    }

    /// `S ∩ ℕ` is infinite.
    pub fn is_infinite(&self) -> bool {
        self.residues.iter().any(|&b| b)
    }

    /// `ℕ \ S` is finite.
    pub fn is_cofinite(&self) -> bool {
        self.residues.iter().all(|&b| b)
    }

    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let m = lcm_u64(self.modulus, other.modulus);
        let residues = (0..m)
            .map(|r| {
                op(
                    self.residues[(r % self.modulus) as usize],
                    other.residues[(r % other.modulus) as usize],
                )
            })
            .collect();
        let threshold = self.threshold.max(other.threshold);
        Self::from_membership(
            residues,
            threshold,
            |x| op(self.contains_nat(x), other.contains_nat(x)),
            op(self.contains_alpha, other.contains_alpha),
        )
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn complement(&self) -> Self {
        EventuallyPeriodicSet {
            modulus: self.modulus,
            residues: self.residues.iter().map(|b| !b).collect(),
            threshold: self.threshold,
            flips: self.flips.clone(),
            contains_alpha: !self.contains_alpha,
        }
    }

    /// Every point of `ℕ` is isolated; `α` is a limit point of `S` exactly
    /// when `S ∩ ℕ` is infinite.
    pub fn closure(&self) -> Self {
        let mut out = self.clone();
        out.contains_alpha |= self.is_infinite();
        out
    }

    /// The neighbourhoods of `α` are the cofinite sets containing it, so `α`
    /// is interior exactly when `ℕ \ S` is finite.
    pub fn interior(&self) -> Self {
        let mut out = self.clone();
        out.contains_alpha &= self.is_cofinite();
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersect(&other.complement()).is_empty()
    }

    pub fn is_empty(&self) -> bool {
        !self.contains_alpha && !self.is_infinite() && self.flips.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.contains_alpha && self.is_cofinite() && self.flips.is_empty()
    }

    pub fn is_open(&self) -> bool {
        !self.contains_alpha || self.is_cofinite()
    }

    pub fn is_closed(&self) -> bool {
        self.contains_alpha || !self.is_infinite()
    }

    /// Points of `ℕ` in the set below `bound` (exclusive).
    pub fn naturals_below(&self, bound: u64) -> Vec<u64> {
        (1..bound).filter(|&x| self.contains_nat(x)).collect()
    }

    fn short_name(&self) -> String {
        let base = if self.is_cofinite() {
            "ℕ".to_string()
        } else if !self.is_infinite() {
            String::new()
        } else {
            let rs: Vec<String> = (0..self.modulus)
                .filter(|&r| self.residues[r as usize])
                .map(|r| r.to_string())
                .collect();
            format!("{{x ≡ {} mod {}}}", rs.join("|"), self.modulus)
        };
        let mut text = base;
        if !self.flips.is_empty() {
            let fs: Vec<String> = self.flips.iter().map(|x| x.to_string()).collect();
            let fs = fs.join(",");
            text = if text.is_empty() {
                format!("{{{fs}}}")
            } else {
                format!("{text} Δ {{{fs}}}")
            };
        }
        match (text.is_empty(), self.contains_alpha) {
            (true, false) => "∅".to_string(),
            (true, true) => "{α}".to_string(),
            (false, true) if text == "ℕ" => "αℕ".to_string(),
            (false, true) => format!("{text} ∪ {{α}}"),
            (false, false) => text,
        }
    }
}

impl fmt::Display for EventuallyPeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let residues = if self.is_cofinite() {
            format!("all residues mod {}", self.modulus)
        } else if !self.is_infinite() {
            format!("no residues mod {}", self.modulus)
        } else {
            let rs: Vec<String> = (0..self.modulus)
                .filter(|&r| self.residues[r as usize])
                .map(|r| r.to_string())
                .collect();
            format!("residues {{{}}} mod {}", rs.join(","), self.modulus)
        };
        let flips = if self.flips.is_empty() {
            String::new()
        } else {
            let fs: Vec<String> = self.flips.iter().map(|x| x.to_string()).collect();
            format!(", toggled at {{{}}}", fs.join(","))
        };
        let alpha = if self.contains_alpha {
            "alpha included"
        } else {
            "alpha excluded"
        };
        write!(f, "{} ({residues}{flips}, {alpha})", self.short_name())
    }
}
