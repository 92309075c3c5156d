use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Signed, Zero};

use super::set::{AlphaPoint, EventuallyPeriodicSet};
use super::tail::TailPoly;
use crate::rat::{ceil_positive, fmt_rat, lcm_u64, rat_u64, Rat};
use crate::space::{Certificate, Dominance, ModelError};

/// Element of `C(αℕ)` that, on each residue class mod `modulus`, eventually
/// follows a polynomial in `1/x`.
///
/// The value at `x ∈ ℕ` is `exceptions[x]` when present and
/// `tails[x mod modulus](x)` otherwise; the value at `α` is `alpha`.
///
/// Invariants (kept by every constructor):
/// - `tails[r].c_0 = alpha` for every class `r` (continuity at `α`);
/// - no tail has a zero at any `x >= threshold` unless it is identically zero;
/// - every exception key lies in `[1, threshold)` and differs from the tail
///   value there;
/// - the modulus is the least period of the tail assignment.
///
/// Under these invariants the representation is unique, so derived equality
/// is pointwise equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AsymptoticSequence {
    modulus: u64,
    tails: Vec<TailPoly>,
    threshold: u64,
    exceptions: BTreeMap<u64, Rat>,
    alpha: Rat,
}

impl AsymptoticSequence {
    /// Validating constructor. `tails.len()` is the modulus.
    pub fn new(
        tails: Vec<TailPoly>,
        exceptions: BTreeMap<u64, Rat>,
        alpha: Rat,
    ) -> Result<Self, ModelError> {
        if tails.is_empty() {
            return Err(ModelError::InvalidElement("modulus must be positive".into()));
        }
        for (r, t) in tails.iter().enumerate() {
            if *t.constant_term() != alpha {
                return Err(ModelError::InvalidElement(format!(
                    "tail of residue class {r} tends to {} but the value at alpha is {}",
                    fmt_rat(t.constant_term()),
                    fmt_rat(&alpha)
                )));
            }
        }
        if exceptions.contains_key(&0) {
            return Err(ModelError::InvalidElement("exception at 0, but ℕ starts at 1".into()));
        }
        Ok(Self::canonical(tails, exceptions, alpha))
    }

    fn canonical(tails: Vec<TailPoly>, mut exceptions: BTreeMap<u64, Rat>, alpha: Rat) -> Self {
        let m = tails.len() as u64;
        let period = (1..=m)
            .filter(|d| m.is_multiple_of(*d))
            .find(|&d| (0..m).all(|r| tails[r as usize] == tails[(r % d) as usize]))
            .unwrap_or(m);
        let tails: Vec<TailPoly> = tails[..period as usize].to_vec();
        exceptions.retain(|&x, v| *v != tails[(x % period) as usize].eval(x));
        let tail_bound = tails.iter().map(TailPoly::sign_threshold).max().unwrap_or(1);
        let exc_bound = exceptions.keys().next_back().map_or(1, |x| x + 1);
        AsymptoticSequence {
            modulus: period,
            tails,
            threshold: tail_bound.max(exc_bound),
            exceptions,
            alpha,
        }
    }

    pub fn constant(q: Rat) -> Self {
        Self::canonical(vec![TailPoly::constant(q.clone())], BTreeMap::new(), q)
    }

    /// Sequence that follows `tails` exactly, with no exceptions.
    pub fn from_tails(tails: Vec<TailPoly>) -> Result<Self, ModelError> {
        let alpha = tails
            .first()
            .map(|t| t.constant_term().clone())
            .unwrap_or_default();
        Self::new(tails, BTreeMap::new(), alpha)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn tails(&self) -> &[TailPoly] {
        &self.tails
    }

    pub fn tail(&self, residue: u64) -> &TailPoly {
        &self.tails[(residue % self.modulus) as usize]
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, Rat> {
        &self.exceptions
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn value_at(&self, x: u64) -> Rat {
        match self.exceptions.get(&x) {
            Some(v) => v.clone(),
            None => self.tail(x).eval(x),
        }
    }

    pub fn eval(&self, p: &AlphaPoint) -> Rat {
        match p {
            AlphaPoint::Nat(x) => self.value_at(*x),
            AlphaPoint::Alpha => self.alpha.clone(),
        }
    }

    fn map_tails(&self, f: impl Fn(&TailPoly) -> TailPoly, g: impl Fn(&Rat) -> Rat) -> Self {
        Self::canonical(
            self.tails.iter().map(f).collect(),
            self.exceptions.iter().map(|(&x, v)| (x, g(v))).collect(),
            g(&self.alpha),
        )
    }

    pub fn neg(&self) -> Self {
        self.map_tails(TailPoly::neg, |v| -v)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        self.map_tails(|t| t.scale(k), |v| v * k)
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = lcm_u64(self.modulus, other.modulus);
        let tails = (0..m).map(|r| self.tail(r).add(other.tail(r))).collect();
        let n = self.threshold.max(other.threshold);
        let exceptions = (1..n)
            .map(|x| (x, self.value_at(x) + other.value_at(x)))
            .collect();
        Self::canonical(tails, exceptions, &self.alpha + &other.alpha)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Pointwise min (`take_min`) or max. On each class the sign of the tail
    /// difference is constant beyond its root bound, so one tail wins from
    /// there on; every earlier point becomes an explicit value.
    fn lattice_op(&self, other: &Self, take_min: bool) -> Self {
        let m = lcm_u64(self.modulus, other.modulus);
        let mut n = self.threshold.max(other.threshold);
        let mut tails = Vec::with_capacity(m as usize);
        for r in 0..m {
            let (a, b) = (self.tail(r), other.tail(r));
            let diff = a.sub(b);
            n = n.max(diff.sign_threshold());
            // diff > 0 eventually means a > b
            let a_wins = match diff.eventual_sign() {
                0 => true,
                s => (s < 0) == take_min,
            };
            tails.push(if a_wins { a.clone() } else { b.clone() });
        }
        let pick = |u: Rat, v: Rat| {
            if (u <= v) == take_min {
                u
            } else {
                v
            }
        };
        let exceptions = (1..n)
            .map(|x| (x, pick(self.value_at(x), other.value_at(x))))
            .collect();
        let alpha = pick(self.alpha.clone(), other.alpha.clone());
        Self::canonical(tails, exceptions, alpha)
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

    pub fn coz(&self) -> EventuallyPeriodicSet {
        let residues = self.tails.iter().map(|t| !t.is_zero()).collect();
        EventuallyPeriodicSet::from_membership(
            residues,
            self.threshold,
            |x| !self.value_at(x).is_zero(),
            !self.alpha.is_zero(),
        )
    }

    /// Decides whether `|self| <= n |g|` for some `n`, producing such an `n`
    /// or a certificate that none exists.
    pub fn dominance(&self, g: &Self) -> Dominance<AlphaPoint> {
        let f = self.abs();
        let g = g.abs();
        if g.alpha.is_zero() && !f.alpha.is_zero() {
            return Dominance::Unbounded(Certificate::ZeroStructure {
                point: AlphaPoint::Alpha,
            });
        }
        let m = lcm_u64(f.modulus, g.modulus);
        let n0 = f.threshold.max(g.threshold);
        let mut bound = Rat::zero();
        // Records f/g in `bound`; false when g vanishes where f does not.
        fn note(bound: &mut Rat, fv: Rat, gv: Rat) -> bool {
            if gv.is_zero() {
                return fv.is_zero();
            }
            let q = fv / gv;
            if q > *bound {
                *bound = q;
            }
            true
        }
        for x in 1..n0 {
            if !note(&mut bound, f.value_at(x), g.value_at(x)) {
                return Dominance::Unbounded(Certificate::ZeroStructure {
                    point: AlphaPoint::Nat(x),
                });
            }
        }
        note(&mut bound, f.alpha.clone(), g.alpha.clone());
        for r in 0..m {
            let (tf, tg) = (f.tail(r), g.tail(r));
            let Some(g_order) = tg.order() else {
                if tf.is_zero() {
                    continue;
                }
                // first point of the class at or beyond both thresholds
                let x = n0 + (r + m - n0 % m) % m;
                return Dominance::Unbounded(Certificate::ZeroStructure {
                    point: AlphaPoint::Nat(x),
                });
            };
            let Some(f_order) = tf.order() else {
                continue;
            };
            if f_order < g_order {
                return Dominance::Unbounded(Certificate::TailOrder {
                    residue: r,
                    modulus: m,
                    f_order,
                    g_order,
                });
            }
            // With t = 1/x and j = g_order: |tg| >= (lead_g - rest_g t) t^j and
            // |tf| <= (lead_f + rest_f t) t^j, where lead_* is the |coefficient|
            // at t^j and rest_* sums the higher ones. Past x_far the quotient
            // is below (lead_f + rest_f/x_far) / (lead_g - rest_g/x_far); the
            // class points before x_far are evaluated exactly.
            let abs_sum = |t: &TailPoly| -> Rat { t.coeffs().iter().skip(g_order + 1).map(|c| c.abs()).sum() };
            let lead_g = tg.coeff(g_order).abs();
            let lead_f = tf.coeff(g_order).abs();
            let (rest_g, rest_f) = (abs_sum(tg), abs_sum(tf));
            let x_far = crate::rat::floor_u64(&(rat_u64(4) * (rest_g.clone() + &rest_f) / &lead_g)).saturating_add(1);
            let t_far = Rat::new(1.into(), x_far.into());
            let tail_ratio = (lead_f + rest_f * &t_far) / (lead_g - rest_g * &t_far);
            if tail_ratio > bound {
                bound = tail_ratio;
            }
            let mut x = n0 + (r + m - n0 % m) % m;
            while x < x_far {
                note(&mut bound, tf.eval(x), tg.eval(x));
                x += m;
            }
        }
        Dominance::Bounded(ceil_positive(&bound))
    }

    /// `e >= 0` with `coz(e) = u`: the constant 1 with zeros punched in when
    /// `α ∈ u`, otherwise `1/x` on the included classes.
    pub fn realize_open(u: &EventuallyPeriodicSet) -> Result<Self, ModelError> {
        if !u.is_open() {
            return Err(ModelError::NotOpen(u.to_string()));
        }
        let one = Rat::from_integer(BigInt::from(1));
        if u.contains_alpha() {
            let exceptions = u.flips().iter().map(|&x| (x, Rat::zero())).collect();
            return Self::new(vec![TailPoly::constant(one.clone())], exceptions, one);
        }
        let tails = u
            .residues()
            .iter()
            .map(|&inc| {
                if inc {
                    TailPoly::new(vec![Rat::zero(), one.clone()])
                } else {
                    TailPoly::zero()
                }
            })
            .collect();
        let exceptions = u
            .flips()
            .iter()
            .map(|&x| (x, if u.contains_nat(x) { one.clone() } else { Rat::zero() }))
            .collect();
        Self::new(tails, exceptions, Rat::zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.alpha.is_negative()
            && self.tails.iter().all(|t| t.eventual_sign() >= 0)
            && (1..self.threshold).all(|x| !self.value_at(x).is_negative())
    }
}

impl fmt::Display for AsymptoticSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self
            .tails
            .iter()
            .enumerate()
            .map(|(r, t)| format!("x≡{r} mod {}: {t}", self.modulus))
            .collect();
        write!(f, "[{}]", classes.join("; "))?;
        if !self.exceptions.is_empty() {
            let ex: Vec<String> = self
                .exceptions
                .iter()
                .map(|(x, v)| format!("{x}↦{}", fmt_rat(v)))
                .collect();
            write!(f, " except {{{}}}", ex.join(", "))?;
        }
        write!(f, ", alpha↦{}", fmt_rat(&self.alpha))
    }
}
