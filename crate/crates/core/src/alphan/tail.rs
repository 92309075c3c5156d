use std::fmt;

use num::{Signed, Zero};

use crate::rat::{floor_u64, fmt_rat, Rat};

/// Polynomial in `t = 1/x`: the coefficient list `c_0, c_1, ..` stands for
/// `x -> c_0 + c_1/x + c_2/x^2 + ..`.
///
/// Trailing zero coefficients are trimmed; the zero polynomial is `[0]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TailPoly {
    coeffs: Vec<Rat>,
}

impl TailPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        TailPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        TailPoly { coeffs: vec![c] }
    }

    pub fn zero() -> Self {
        Self::constant(Rat::zero())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Index of the lowest nonzero coefficient: the rate `x^-k` at which the
    /// tail decays. `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Sign the tail takes for all `x >= self.sign_threshold()`.
    pub fn eventual_sign(&self) -> i32 {
        match self.order() {
            None => 0,
            Some(j) if self.coeffs[j].is_positive() => 1,
            Some(_) => -1,
        }
    }

    /// Smallest `N >= 1` such that the tail has no zero at any real `x >= N`.
    ///
    /// Writing the polynomial as `t^j (c_j + c_{j+1} t + ..)`, a root with
    /// `0 < t <= 1` needs `|c_j| <= t * sum_{k>j} |c_k|`, so every
    /// `x > sum_{k>j} |c_k| / |c_j|` is zero-free.
    pub fn sign_threshold(&self) -> u64 {
        let Some(j) = self.order() else {
            return 1;
        };
        let lead = self.coeffs[j].abs();
        let rest: Rat = self.coeffs[j + 1..].iter().map(|c| c.abs()).sum();
        if rest.is_zero() {
            return 1;
        }
        floor_u64(&(rest / lead)).saturating_add(1).max(1)
    }

    pub fn eval(&self, x: u64) -> Rat {
        let t = Rat::new(1.into(), x.into());
        self.eval_t(&t)
    }

    pub fn eval_t(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn add(&self, other: &TailPoly) -> TailPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        TailPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> TailPoly {
        TailPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &TailPoly) -> TailPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rat) -> TailPoly {
        TailPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn abs(&self) -> TailPoly {
        if self.eventual_sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Sum of absolute values of all coefficients.
    pub fn l1(&self) -> Rat {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl fmt::Display for TailPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => fmt_rat(c),
                1 => format!("{}/x", fmt_rat(c)),
                _ => format!("{}/x^{}", fmt_rat(c), k),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
