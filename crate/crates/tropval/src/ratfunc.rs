//! The fraction semifield Q_max(T): pairs of canonical polynomials with a
//! unique normal form.
//!
//! Multiplicative cancellativity of the polynomial quotient makes the
//! localization at all nonzero classes well behaved, and unique
//! factorization makes a normal form computable: cancel the shared power
//! of T and the multiset intersection of the roots, then move the scalar
//! unit content into the numerator so the denominator's unit is 0.
//! Equality of normalized fractions is structural; cross-multiplication
//! is kept as an independent equality oracle.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{
    canonicalize, expand, factor, func_equiv, poly_add, poly_eval, poly_mul, CanonicalPoly,
    LinearFactorization, TropPoly,
};
use crate::scalar::{trop_inv, trop_mul, Rat, TropScalar};

/// Normalized element of Q_max(T).
///
/// Invariants: the denominator is nonzero with unit coefficient 0; the
/// numerator and denominator share no root and at most one of them is
/// divisible by T. The zero fraction is (-inf)/0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropRational {
    num: CanonicalPoly,
    den: CanonicalPoly,
}

impl TropRational {
    /// Canonicalize and normalize a raw numerator/denominator pair.
    pub fn new(num: &TropPoly, den: &TropPoly) -> Result<Self> {
        rat_normalize(&canonicalize(num), &canonicalize(den))
    }

    /// The localization map f ↦ f/0 from Q_max[T] into Q_max(T).
    pub fn from_poly(f: &TropPoly) -> Self {
        let num = canonicalize(f);
        TropRational {
            num,
            den: unit_den(),
        }
    }

    /// The zero fraction (-inf)/0.
    pub fn zero_frac() -> Self {
        TropRational {
            num: CanonicalPoly::default(),
            den: unit_den(),
        }
    }

    /// The unit fraction 0/0.
    pub fn one_frac() -> Self {
        TropRational::from_poly(&TropPoly::one())
    }

    pub fn num(&self) -> &CanonicalPoly {
        &self.num
    }

    pub fn den(&self) -> &CanonicalPoly {
        &self.den
    }

    pub fn is_zero_frac(&self) -> bool {
        self.num.is_zero_poly()
    }

    /// Evaluate num(x) ⊙ den(x)⁻¹; a denominator vanishing at x is a
    /// domain error (division by tropical zero).
    pub fn eval(&self, x: &TropScalar) -> Result<TropScalar> {
        let d = self.den.eval(x);
        if d.is_bottom() {
            return Err(Error::DivisionByBottom);
        }
        Ok(trop_mul(&self.num.eval(x), &trop_inv(&d)?))
    }
}

fn unit_den() -> CanonicalPoly {
    canonicalize(&TropPoly::one())
}

/// Remove the common multiset from two non-increasing root lists.
fn cancel_roots(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let (mut ra, mut rb) = (Vec::new(), Vec::new());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Greater => {
                ra.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                rb.push(b[j].clone());
                j += 1;
            }
        }
    }
    ra.extend_from_slice(&a[i..]);
    rb.extend_from_slice(&b[j..]);
    (ra, rb)
}

/// Normalize a fraction: factor both sides, cancel the shared T-power and
/// common roots, and rescale so the denominator's unit is 0.
pub fn rat_normalize(num: &CanonicalPoly, den: &CanonicalPoly) -> Result<TropRational> {
    if den.is_zero_poly() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero_poly() {
        return Ok(TropRational::zero_frac());
    }
    let fn_ = factor(num)?;
    let fd = factor(den)?;

    let shared_t = fn_.t_power().min(fd.t_power());
    let (num_roots, den_roots) = cancel_roots(fn_.roots(), fd.roots());

    // Move the denominator's unit into the numerator: u_n/u_d = (u_n ⊙ u_d⁻¹)/0.
    let num_unit = trop_mul(fn_.unit(), &trop_inv(fd.unit())?);

    let num = expand(&LinearFactorization::new(
        num_unit,
        fn_.t_power() - shared_t,
        num_roots,
    )?);
    let den = expand(&LinearFactorization::new(
        TropScalar::one(),
        fd.t_power() - shared_t,
        den_roots,
    )?);
    Ok(TropRational { num, den })
}

/// p + q = (p.num ⊙ q.den ⊕ q.num ⊙ p.den) / (p.den ⊙ q.den), normalized.
pub fn rat_add(p: &TropRational, q: &TropRational) -> TropRational {
    let (pn, pd) = (p.num.as_poly(), p.den.as_poly());
    let (qn, qd) = (q.num.as_poly(), q.den.as_poly());
    let num = poly_add(&poly_mul(&pn, &qd), &poly_mul(&qn, &pd));
    let den = poly_mul(&pd, &qd);
    TropRational::new(&num, &den).expect("product of nonzero denominators is nonzero")
}

/// Componentwise product, normalized.
pub fn rat_mul(p: &TropRational, q: &TropRational) -> TropRational {
    let num = poly_mul(&p.num.as_poly(), &q.num.as_poly());
    let den = poly_mul(&p.den.as_poly(), &q.den.as_poly());
    TropRational::new(&num, &den).expect("product of nonzero denominators is nonzero")
}

/// Swap numerator and denominator; the zero fraction has no inverse.
pub fn rat_inv(p: &TropRational) -> Result<TropRational> {
    if p.is_zero_frac() {
        return Err(Error::InvertZeroFraction);
    }
    rat_normalize(&p.den, &p.num)
}

/// Equality by cross-multiplication: p.num ⊙ q.den ∼ q.num ⊙ p.den.
/// Agrees with structural equality of normalized forms.
pub fn rat_eq(p: &TropRational, q: &TropRational) -> bool {
    let lhs = poly_mul(&p.num.as_poly(), &q.den.as_poly());
    let rhs = poly_mul(&q.num.as_poly(), &p.den.as_poly());
    func_equiv(&lhs, &rhs)
}

impl Add<&TropRational> for &TropRational {
    type Output = TropRational;

    fn add(self, rhs: &TropRational) -> TropRational {
        rat_add(self, rhs)
    }
}

impl Add for TropRational {
    type Output = TropRational;

    fn add(self, rhs: TropRational) -> TropRational {
        rat_add(&self, &rhs)
    }
}

impl Mul<&TropRational> for &TropRational {
    type Output = TropRational;

    fn mul(self, rhs: &TropRational) -> TropRational {
        rat_mul(self, rhs)
    }
}

impl Mul for TropRational {
    type Output = TropRational;

    fn mul(self, rhs: TropRational) -> TropRational {
        rat_mul(&self, &rhs)
    }
}

impl Zero for TropRational {
    fn zero() -> Self {
        TropRational::zero_frac()
    }

    fn is_zero(&self) -> bool {
        self.is_zero_frac()
    }
}

impl One for TropRational {
    fn one() -> Self {
        TropRational::one_frac()
    }
}

impl fmt::Display for TropRational {
    /// Always parenthesized, `(T+3/2)/(0)`: an unparenthesized rendering
    /// could glue a trailing integer to the slash and re-lex as a single
    /// rational literal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Evaluate a raw polynomial fraction at a scalar point.
pub fn frac_eval(num: &TropPoly, den: &TropPoly, x: &TropScalar) -> Result<TropScalar> {
    let d = poly_eval(den, x);
    if d.is_bottom() {
        return Err(Error::DivisionByBottom);
    }
    Ok(trop_mul(&poly_eval(num, x), &trop_inv(&d)?))
}
