//! Scalar arithmetic for the tropical semifield Q_max = (ℚ ∪ {-inf}, max, +)
//! and the boolean semifield B.
//!
//! Every scalar is exact: the finite values are arbitrary-precision
//! rationals kept in lowest terms, and `-inf` is a distinct tag rather
//! than a sentinel value, so the absorbing law cannot be corrupted by
//! arithmetic. Tropical addition `⊕` is `max`, tropical multiplication
//! `⊙` is ordinary rational addition.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// Build a `Rat` from an integer numerator/denominator pair.
///
/// Panics on a zero denominator; intended for literals in code and tests.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// An element of Q_max: either `-inf` (written `Bottom`) or a finite rational.
///
/// `Bottom` is the additive neutral and multiplicative absorbing element;
/// `Finite(0)` is the multiplicative identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropScalar {
    Bottom,
    Finite(Rat),
}

pub use TropScalar::Bottom;

impl TropScalar {
    pub fn finite(r: Rat) -> Self {
        TropScalar::Finite(r)
    }

    /// Finite integer scalar.
    pub fn int(n: i64) -> Self {
        TropScalar::Finite(Rat::from_integer(BigInt::from(n)))
    }

    /// Finite rational scalar `numer/denom`. Panics on zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        TropScalar::Finite(rat(numer, denom))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            TropScalar::Bottom => None,
            TropScalar::Finite(r) => Some(r),
        }
    }
}

/// Total order on Q_max: `Bottom` below every finite value, finite values
/// by rational order. This is the canonical partial order x ≤ y ⟺ x⊕y = y,
/// which is total here.
impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropScalar::Bottom, TropScalar::Bottom) => Ordering::Equal,
            (TropScalar::Bottom, TropScalar::Finite(_)) => Ordering::Less,
            (TropScalar::Finite(_), TropScalar::Bottom) => Ordering::Greater,
            (TropScalar::Finite(a), TropScalar::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add<&TropScalar> for &TropScalar {
    type Output = TropScalar;

    /// Tropical addition: max.
    fn add(self, rhs: &TropScalar) -> TropScalar {
        if self >= rhs {
            self.clone()
        } else {
            rhs.clone()
        }
    }
}

impl Add for TropScalar {
    type Output = TropScalar;

    fn add(self, rhs: TropScalar) -> TropScalar {
        if self >= rhs {
            self
        } else {
            rhs
        }
    }
}

impl Mul<&TropScalar> for &TropScalar {
    type Output = TropScalar;

    /// Tropical multiplication: ordinary rational addition, `Bottom` absorbing.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &TropScalar) -> TropScalar {
        match (self, rhs) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::Bottom,
        }
    }
}

impl Mul for TropScalar {
    type Output = TropScalar;

    fn mul(self, rhs: TropScalar) -> TropScalar {
        &self * &rhs
    }
}

impl Zero for TropScalar {
    fn zero() -> Self {
        TropScalar::Bottom
    }

    fn is_zero(&self) -> bool {
        self.is_bottom()
    }
}

impl One for TropScalar {
    fn one() -> Self {
        TropScalar::int(0)
    }

    fn is_one(&self) -> bool {
        matches!(self, TropScalar::Finite(r) if r.is_zero())
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => write!(f, "-inf"),
            TropScalar::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for TropScalar {
    type Err = Error;

    /// Scalar literal syntax: optional sign, integer or `p/q` fraction,
    /// or the literal `-inf`.
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

/// Parse a scalar literal (`-inf`, `7`, `-3/2`, `+5/4`).
pub fn parse_scalar(s: &str) -> Result<TropScalar> {
    let t = s.trim();
    if t == "-inf" {
        return Ok(TropScalar::Bottom);
    }
    let bad = |msg: &str| Error::syntax(1, 1, format!("{msg} in scalar literal {t:?}"));
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, t.strip_prefix('+').unwrap_or(t)),
    };
    let (numer_s, denom_s) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if numer_s.is_empty() || !numer_s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("expected digits"));
    }
    let numer = BigInt::from_str(numer_s).map_err(|_| bad("invalid integer"))? * sign;
    let denom = match denom_s {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected digits after '/'"));
            }
            let d = BigInt::from_str(d).map_err(|_| bad("invalid integer"))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            d
        }
    };
    Ok(TropScalar::Finite(Rat::new(numer, denom)))
}

/// Tropical addition x ⊕ y = max{x, y}.
pub fn trop_add(x: &TropScalar, y: &TropScalar) -> TropScalar {
    x + y
}

/// Tropical multiplication x ⊙ y = x + y, with `Bottom` absorbing.
pub fn trop_mul(x: &TropScalar, y: &TropScalar) -> TropScalar {
    x * y
}

/// Tropical multiplicative inverse: negation of a finite value.
/// `Bottom` (the tropical zero) is not invertible.
pub fn trop_inv(x: &TropScalar) -> Result<TropScalar> {
    match x {
        TropScalar::Bottom => Err(Error::InvertBottom),
        TropScalar::Finite(r) => Ok(TropScalar::Finite(-r)),
    }
}

/// The canonical partial order: x ≤ y ⟺ x ⊕ y = y (total on Q_max).
pub fn trop_leq(x: &TropScalar, y: &TropScalar) -> bool {
    x <= y
}

/// The boolean semifield B = {0, 1} with 1 + 1 = 1: the initial object
/// among idempotent semirings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoolSemifield {
    Zero,
    One,
}

impl Add for BoolSemifield {
    type Output = BoolSemifield;

    fn add(self, rhs: Self) -> Self {
        if self == BoolSemifield::One || rhs == BoolSemifield::One {
            BoolSemifield::One
        } else {
            BoolSemifield::Zero
        }
    }
}

impl Mul for BoolSemifield {
    type Output = BoolSemifield;

    fn mul(self, rhs: Self) -> Self {
        if self == BoolSemifield::One && rhs == BoolSemifield::One {
            BoolSemifield::One
        } else {
            BoolSemifield::Zero
        }
    }
}

impl Zero for BoolSemifield {
    fn zero() -> Self {
        BoolSemifield::Zero
    }

    fn is_zero(&self) -> bool {
        *self == BoolSemifield::Zero
    }
}

impl One for BoolSemifield {
    fn one() -> Self {
        BoolSemifield::One
    }
}

impl fmt::Display for BoolSemifield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoolSemifield::Zero => write!(f, "0"),
            BoolSemifield::One => write!(f, "1"),
        }
    }
}

/// Signum of a rational as -1/0/+1; used by valuation equivalence.
pub fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
