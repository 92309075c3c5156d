//! Exact rational scalars.
//!
//! Every model in this crate uses arbitrary-precision rationals as its
//! coefficient field. The textual form is `p/q` or a plain integer, which is
//! also what the presentation JSON uses.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p/q"`, `"-p/q"` or `"n"` into a reduced rational.
pub fn parse_rat(text: &str) -> Result<Rat, ParseRatError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRatError::Empty);
    }
    let int = |s: &str| -> Result<BigInt, ParseRatError> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseRatError::BadInteger(s.to_string()))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let num = int(num)?;
            let den = int(den)?;
            if den.is_zero() {
                return Err(ParseRatError::ZeroDenominator(text.to_string()));
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from_integer(int(text)?)),
    }
}

/// Canonical text form: `n` for integers, `p/q` otherwise.
pub fn fmt_rat(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_u64(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Smallest integer `>= q`.
pub fn ceil_int(q: &Rat) -> BigInt {
    q.ceil().to_integer()
}

/// Smallest positive integer `n` with `n >= q`.
pub fn ceil_positive(q: &Rat) -> BigInt {
    let c = ceil_int(q);
    if c < BigInt::one() {
        BigInt::one()
    } else {
        c
    }
}

/// Floor of a non-negative rational as `u64`, saturating.
pub fn floor_u64(q: &Rat) -> u64 {
    if q.is_negative() {
        return 0;
    }
    let (_, digits) = q.numer().div_floor(q.denom()).to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => u64::MAX,
    }
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
