//! The polynomial semiring Q_max[T]: raw polynomials, the functional-
//! equivalence quotient, and unique factorization into linear factors.
//!
//! A tropical polynomial f(T) = ⊕ aᵢ⊙T^i is the piecewise-linear convex
//! function x ↦ max_i (aᵢ + i·x). Distinct coefficient sequences can define
//! the same function; the canonical representative of a class is the
//! *maximal* one, whose coefficients form the least concave majorant of
//! the exponent/coefficient points over the support window. On canonical
//! forms factorization into linear factors is unique: the roots are the
//! consecutive differences of the canonical coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rat, TropScalar};

/// Raw element of Q_max[T]: dense coefficients indexed by exponent.
///
/// Trailing `Bottom` coefficients are trimmed on construction, so the
/// zero polynomial is the empty sequence; interior coefficients are kept
/// as given (no canonicity is implied).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TropPoly {
    coeffs: Vec<TropScalar>,
}

impl TropPoly {
    pub fn new(mut coeffs: Vec<TropScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_bottom()) {
            coeffs.pop();
        }
        TropPoly { coeffs }
    }

    /// The zero polynomial (empty coefficient sequence).
    pub fn zero_poly() -> Self {
        TropPoly { coeffs: vec![] }
    }

    pub fn constant(c: TropScalar) -> Self {
        TropPoly::new(vec![c])
    }

    /// The monomial c ⊙ T^exp.
    pub fn monomial(c: TropScalar, exp: usize) -> Self {
        if c.is_bottom() {
            return TropPoly::zero_poly();
        }
        let mut coeffs = vec![TropScalar::Bottom; exp + 1];
        coeffs[exp] = c;
        TropPoly { coeffs }
    }

    /// The variable T.
    pub fn t() -> Self {
        TropPoly::monomial(TropScalar::one(), 1)
    }

    pub fn coeffs(&self) -> &[TropScalar] {
        &self.coeffs
    }

    /// Coefficient of T^i (Bottom beyond the stored length).
    pub fn coeff(&self, i: usize) -> TropScalar {
        self.coeffs.get(i).cloned().unwrap_or(TropScalar::Bottom)
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Zero for TropPoly {
    fn zero() -> Self {
        TropPoly::zero_poly()
    }

    fn is_zero(&self) -> bool {
        self.is_zero_poly()
    }
}

impl One for TropPoly {
    fn one() -> Self {
        TropPoly::constant(TropScalar::one())
    }
}

impl Add<&TropPoly> for &TropPoly {
    type Output = TropPoly;

    fn add(self, rhs: &TropPoly) -> TropPoly {
        poly_add(self, rhs)
    }
}

impl Add for TropPoly {
    type Output = TropPoly;

    fn add(self, rhs: TropPoly) -> TropPoly {
        poly_add(&self, &rhs)
    }
}

impl Mul<&TropPoly> for &TropPoly {
    type Output = TropPoly;

    fn mul(self, rhs: &TropPoly) -> TropPoly {
        poly_mul(self, rhs)
    }
}

impl Mul for TropPoly {
    type Output = TropPoly;

    fn mul(self, rhs: TropPoly) -> TropPoly {
        poly_mul(&self, &rhs)
    }
}

/// Coefficientwise tropical sum: (f ⊕ g)ᵢ = max{aᵢ, bᵢ}.
pub fn poly_add(f: &TropPoly, g: &TropPoly) -> TropPoly {
    let n = f.coeffs.len().max(g.coeffs.len());
    let coeffs = (0..n).map(|i| &f.coeff(i) + &g.coeff(i)).collect();
    TropPoly::new(coeffs)
}

/// Tropical convolution: (f ⊙ g)ᵢ = max_{r+l=i} (a_r + b_l).
pub fn poly_mul(f: &TropPoly, g: &TropPoly) -> TropPoly {
    if f.is_zero_poly() || g.is_zero_poly() {
        return TropPoly::zero_poly();
    }
    let n = f.coeffs.len() + g.coeffs.len() - 1;
    let mut coeffs = vec![TropScalar::Bottom; n];
    for (r, a) in f.coeffs.iter().enumerate() {
        if a.is_bottom() {
            continue;
        }
        for (l, b) in g.coeffs.iter().enumerate() {
            let term = a * b;
            if coeffs[r + l] < term {
                coeffs[r + l] = term;
            }
        }
    }
    TropPoly::new(coeffs)
}

/// Evaluate f at x: max over the support of aᵢ + i·x.
///
/// At x = Bottom every term with i ≥ 1 vanishes (T^0 is the empty product),
/// so f(Bottom) is the constant coefficient a₀ — Bottom if absent.
pub fn poly_eval(f: &TropPoly, x: &TropScalar) -> TropScalar {
    match x {
        TropScalar::Bottom => f.coeff(0),
        TropScalar::Finite(q) => {
            let mut acc = TropScalar::Bottom;
            for (i, c) in f.coeffs.iter().enumerate() {
                if let Some(a) = c.as_rat() {
                    let term = TropScalar::Finite(a + q * Rat::from_integer(BigInt::from(i)));
                    if acc < term {
                        acc = term;
                    }
                }
            }
            acc
        }
    }
}

/// Canonical (maximal) representative of a functional-equivalence class.
///
/// Invariants: the coefficient sequence has no trailing Bottom; entries
/// below the t-order are Bottom; entries from t-order through degree are
/// finite and concave in the exponent (first differences non-increasing).
/// The zero class is the empty sequence. Two raw polynomials define the
/// same function on Q_max iff they canonicalize identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CanonicalPoly {
    coeffs: Vec<TropScalar>,
}

impl CanonicalPoly {
    pub fn coeffs(&self) -> &[TropScalar] {
        &self.coeffs
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// View as a raw polynomial (e.g. for evaluation or further arithmetic).
    pub fn as_poly(&self) -> TropPoly {
        TropPoly {
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn eval(&self, x: &TropScalar) -> TropScalar {
        match x {
            TropScalar::Bottom => self.coeffs.first().cloned().unwrap_or(TropScalar::Bottom),
            _ => poly_eval(&self.as_poly(), x),
        }
    }

    /// Leading (highest-exponent) coefficient; Bottom for the zero class.
    pub fn leading_coeff(&self) -> TropScalar {
        self.coeffs.last().cloned().unwrap_or(TropScalar::Bottom)
    }
}

impl From<CanonicalPoly> for TropPoly {
    fn from(c: CanonicalPoly) -> TropPoly {
        TropPoly { coeffs: c.coeffs }
    }
}

/// Compute the canonical form: the least concave majorant of the
/// exponent/coefficient points, restricted to the support window between
/// the lowest and highest non-Bottom exponents.
///
/// Lifting below the lowest exponent is forbidden — it would change the
/// value at Bottom — and above the highest it would change the leading
/// slope; within the window the upper convex hull (monotone chain over
/// exact rationals) gives the unique maximal representative.
pub fn canonicalize(f: &TropPoly) -> CanonicalPoly {
    let pts: Vec<(usize, &Rat)> = f
        .coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.as_rat().map(|r| (i, r)))
        .collect();
    if pts.is_empty() {
        return CanonicalPoly { coeffs: vec![] };
    }

    // Upper hull, x strictly increasing: pop the last vertex while it does
    // not lie strictly above the chord from its predecessor to the new point.
    let mut hull: Vec<(usize, &Rat)> = Vec::with_capacity(pts.len());
    for &(x, y) in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // cross((x1,y1) -> (x2,y2) -> (x,y)) ≥ 0 means (x2,y2) is on or
            // below the chord, hence redundant for the upper hull.
            let dx1 = Rat::from_integer(BigInt::from(x2 - x1));
            let dx2 = Rat::from_integer(BigInt::from(x - x1));
            let cross = dx1 * (y - y1) - (y2 - y1) * dx2;
            if cross >= Rat::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }

    let lo = pts[0].0;
    let hi = pts[pts.len() - 1].0;
    let mut coeffs = vec![TropScalar::Bottom; hi + 1];
    coeffs[lo] = TropScalar::Finite(pts[0].1.clone());
    for w in hull.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        let run = Rat::from_integer(BigInt::from(x1 - x0));
        let slope = (y1 - y0) / run;
        for (k, slot) in coeffs.iter_mut().enumerate().take(x1 + 1).skip(x0) {
            let off = Rat::from_integer(BigInt::from(k - x0));
            *slot = TropScalar::Finite(y0 + &slope * off);
        }
    }
    CanonicalPoly { coeffs }
}

/// Functional equivalence: f and g define the same function on Q_max.
pub fn func_equiv(f: &TropPoly, g: &TropPoly) -> bool {
    canonicalize(f) == canonicalize(g)
}

/// The t-order r_f: the largest power of T dividing the class, i.e. the
/// lowest non-Bottom canonical exponent. Undefined for the zero polynomial.
pub fn t_order(f: &CanonicalPoly) -> Result<usize> {
    f.coeffs
        .iter()
        .position(|c| !c.is_bottom())
        .ok_or(Error::ZeroPolynomial { op: "t_order" })
}

/// Degree: the highest non-Bottom exponent. Undefined for the zero polynomial.
pub fn poly_degree(f: &CanonicalPoly) -> Result<usize> {
    if f.coeffs.is_empty() {
        Err(Error::ZeroPolynomial { op: "degree" })
    } else {
        Ok(f.coeffs.len() - 1)
    }
}

/// Unique decomposition unit ⊙ T^tPower ⊙ ∏ (T ⊕ rootⱼ) of a nonzero
/// canonical class. Roots are kept in non-increasing order, making
/// equality of factorizations structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearFactorization {
    unit: TropScalar,
    t_power: usize,
    roots: Vec<Rat>,
}

impl LinearFactorization {
    /// Assemble a factorization; the unit must be finite (a Bottom unit
    /// would collapse the product to the zero polynomial).
    pub fn new(unit: TropScalar, t_power: usize, mut roots: Vec<Rat>) -> Result<Self> {
        if unit.is_bottom() {
            return Err(Error::InvalidParameter {
                reason: "factorization unit must be finite, not -inf".into(),
            });
        }
        roots.sort_by(|a, b| b.cmp(a));
        Ok(LinearFactorization {
            unit,
            t_power,
            roots,
        })
    }

    pub fn unit(&self) -> &TropScalar {
        &self.unit
    }

    pub fn t_power(&self) -> usize {
        self.t_power
    }

    /// Roots in non-increasing order.
    pub fn roots(&self) -> &[Rat] {
        &self.roots
    }
}

/// Factor a nonzero canonical class per the fundamental theorem of
/// tropical algebra: unit = leading coefficient, tPower = t-order, and
/// the root multiset is the consecutive differences ĉ_{i-1} − ĉ_i of the
/// canonical coefficients across the support. Concavity makes the
/// differences non-decreasing in i, so emitting them from i = degree
/// downward yields the non-increasing root order.
pub fn factor(f: &CanonicalPoly) -> Result<LinearFactorization> {
    if f.coeffs.is_empty() {
        return Err(Error::ZeroPolynomial { op: "factor" });
    }
    let lo = t_order(f)?;
    let hi = f.coeffs.len() - 1;
    let unit = f.coeffs[hi].clone();
    let rat_at = |i: usize| f.coeffs[i].as_rat().expect("canonical support is finite");
    let roots = (lo + 1..=hi)
        .rev()
        .map(|i| rat_at(i - 1) - rat_at(i))
        .collect();
    LinearFactorization::new(unit, lo, roots)
}

/// Multiply a factorization back out: canonicalize(unit ⊙ T^tPower ⊙ ∏(T ⊕ r)).
pub fn expand(fac: &LinearFactorization) -> CanonicalPoly {
    let mut acc = TropPoly::monomial(fac.unit.clone(), fac.t_power);
    for r in &fac.roots {
        let lin = TropPoly::new(vec![
            TropScalar::Finite(r.clone()),
            TropScalar::one(),
        ]);
        acc = poly_mul(&acc, &lin);
    }
    canonicalize(&acc)
}

fn fmt_terms(coeffs: &[TropScalar], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    use num_traits::Signed;
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        let Some(r) = c.as_rat() else { continue };
        if !first {
            write!(f, "+")?;
        }
        // A negative coefficient after '+' is parenthesized so the printed
        // form re-parses; the leading term needs no parentheses.
        let wrap = !first && r.is_negative();
        let coeff = if wrap {
            format!("({r})")
        } else {
            format!("{r}")
        };
        match (i, r.is_zero()) {
            (0, _) => write!(f, "{coeff}")?,
            (1, true) => write!(f, "T")?,
            (1, false) => write!(f, "{coeff}*T")?,
            (_, true) => write!(f, "T^{i}")?,
            (_, false) => write!(f, "{coeff}*T^{i}")?,
        }
        first = false;
    }
    if first {
        write!(f, "-inf")?;
    }
    Ok(())
}

impl fmt::Display for TropPoly {
    /// Spaceless tropical surface syntax, highest exponent first, e.g.
    /// `T^2+3/2*T+3`; the zero polynomial prints `-inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.coeffs, f)
    }
}

impl fmt::Display for CanonicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.coeffs, f)
    }
}

impl fmt::Display for LinearFactorization {
    /// `unit=0 tpower=0 roots=[3/2,3/2]` — the CLI's factor line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unit={} tpower={} roots=[", self.unit, self.t_power)?;
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}
