//! Valuations on Q_max and Q_max(T): the three definitions (classical,
//! strict, hyperfield-valued) as checkable contracts, the parametric
//! families that exhaust them, equivalence, classification, and the
//! three-point abstract curve attached to Val(Q_max(T)).
//!
//! On Q_max a valuation is determined by c = ν(1) (the value at the
//! rational 1, not at the semifield unit 0): ν(q) = q·c. On Q_max(T) a
//! valuation trivial on the base is determined by t = ν(T̄):
//!   ν(f̄) = r_f·t  if t < 0,   ν(f̄) = 0  if t = 0,   ν(f̄) = deg(f̄)·t  if t > 0,
//! extended to fractions by subtraction. Values are kept exact in
//! ℚ ∪ {±∞}.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hyper::rval::{rval_add, rval_contains};
use crate::poly::{poly_degree, t_order, CanonicalPoly};
use crate::ratfunc::{rat_add, rat_mul, TropRational};
use crate::report::AxiomReport;
use crate::scalar::{rat_sign, trop_add, trop_mul, Rat, TropScalar};

/// Which of the three valuation definitions a map is claimed to satisfy.
///
/// Classical: codomain ℝ ∪ {+∞}, zero ↦ +∞, min{ν(x),ν(y)} ≤ ν(x+y).
/// Strict: codomain ℝ ∪ {-∞}, zero ↦ -∞, ν(x+y) = max{ν(x),ν(y)}.
/// HyperValued: codomain R_{+,val}, zero ↦ -∞, ν(x+y) ∈ ν(x) ⊕ ν(y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValuationKind {
    Classical,
    Strict,
    HyperValued,
}

impl ValuationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ValuationKind::Classical => "classical",
            ValuationKind::Strict => "strict",
            ValuationKind::HyperValued => "hyper",
        }
    }
}

impl fmt::Display for ValuationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ValuationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(ValuationKind::Classical),
            "strict" => Ok(ValuationKind::Strict),
            "hyper" => Ok(ValuationKind::HyperValued),
            _ => Err(Error::syntax(
                1,
                1,
                format!("unknown valuation kind {s:?} (classical|strict|hyper)"),
            )),
        }
    }
}

/// Valuation value: a finite rational or the kind-appropriate infinity.
/// `Top` (+∞) is the classical image of zero; `Bottom` (-∞) the
/// strict/hyper one. The order puts Bottom least and Top greatest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtVal {
    Bottom,
    Finite(Rat),
    Top,
}

impl ExtVal {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtVal::Finite(_))
    }

    /// Value addition for multiplicativity checks; infinities absorb
    /// (mixed ±∞ cannot occur within one kind — Top wins if it does).
    pub fn plus(&self, other: &ExtVal) -> ExtVal {
        match (self, other) {
            (ExtVal::Top, _) | (_, ExtVal::Top) => ExtVal::Top,
            (ExtVal::Bottom, _) | (_, ExtVal::Bottom) => ExtVal::Bottom,
            (ExtVal::Finite(a), ExtVal::Finite(b)) => ExtVal::Finite(a + b),
        }
    }
}

impl fmt::Display for ExtVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtVal::Bottom => write!(f, "-inf"),
            ExtVal::Finite(r) => write!(f, "{r}"),
            ExtVal::Top => write!(f, "inf"),
        }
    }
}

/// The parametric family exhausting valuations on Q_max: ν(q) = q·c with
/// c = ν(1). Strict and hyperfield-valued members require c ≥ 0 (a
/// negative c is order-reversing, which breaks max-additivity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QmaxValuation {
    kind: ValuationKind,
    c: Rat,
}

impl QmaxValuation {
    pub fn new(kind: ValuationKind, c: Rat) -> Result<Self> {
        if kind != ValuationKind::Classical && c.is_negative() {
            return Err(Error::InvalidParameter {
                reason: format!("{kind} valuation on qmax requires nu(1) >= 0, got {c}"),
            });
        }
        Ok(QmaxValuation { kind, c })
    }

    pub fn kind(&self) -> ValuationKind {
        self.kind
    }

    pub fn param(&self) -> &Rat {
        &self.c
    }
}

/// Evaluate a family member: Bottom ↦ the kind's infinity, Finite(q) ↦ q·c.
pub fn qmax_val_eval(v: &QmaxValuation, x: &TropScalar) -> ExtVal {
    match x {
        TropScalar::Bottom => match v.kind {
            ValuationKind::Classical => ExtVal::Top,
            _ => ExtVal::Bottom,
        },
        TropScalar::Finite(q) => ExtVal::Finite(q * &v.c),
    }
}

/// The parametric family exhausting strict/hyperfield-valued valuations
/// on Q_max(T) that are trivial on the base, determined by t = ν(T̄).
/// The classical kind is not classified on the function field and is
/// rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFValuation {
    kind: ValuationKind,
    t: Rat,
}

impl FFValuation {
    pub fn new(kind: ValuationKind, t: Rat) -> Result<Self> {
        if kind == ValuationKind::Classical {
            return Err(Error::ClassicalNotClassified);
        }
        Ok(FFValuation { kind, t })
    }

    pub fn kind(&self) -> ValuationKind {
        self.kind
    }

    pub fn param(&self) -> &Rat {
        &self.t
    }

    /// Value of a nonzero polynomial class: r_f·t for t < 0, 0 for t = 0,
    /// deg(f̄)·t for t > 0. The t-order and degree are read off the
    /// canonical form — raw representatives may misreport T-divisibility.
    fn poly_val(&self, f: &CanonicalPoly) -> Result<ExtVal> {
        if f.is_zero_poly() {
            return Ok(ExtVal::Bottom);
        }
        let exponent = match rat_sign(&self.t) {
            -1 => t_order(f)?,
            1 => poly_degree(f)?,
            _ => return Ok(ExtVal::Finite(Rat::zero())),
        };
        Ok(ExtVal::Finite(
            Rat::from_integer(exponent.into()) * &self.t,
        ))
    }
}

/// Evaluate on a fraction: ν(a/b) = ν(a) − ν(b); the zero fraction maps
/// to -∞.
pub fn ff_val_eval(v: &FFValuation, p: &TropRational) -> ExtVal {
    if p.is_zero_frac() {
        return ExtVal::Bottom;
    }
    let num = v.poly_val(p.num()).expect("nonzero numerator");
    let den = v.poly_val(p.den()).expect("denominator is nonzero by invariant");
    match (num, den) {
        (ExtVal::Finite(a), ExtVal::Finite(b)) => ExtVal::Finite(a - b),
        _ => unreachable!("nonzero classes have finite values"),
    }
}

/// A valuation on either carrier; what `equivalent` and the CLI operate on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Valuation {
    Qmax(QmaxValuation),
    FunctionField(FFValuation),
}

impl Valuation {
    pub fn kind(&self) -> ValuationKind {
        match self {
            Valuation::Qmax(v) => v.kind(),
            Valuation::FunctionField(v) => v.kind(),
        }
    }

    pub fn param(&self) -> &Rat {
        match self {
            Valuation::Qmax(v) => v.param(),
            Valuation::FunctionField(v) => v.param(),
        }
    }

    pub fn base_str(&self) -> &'static str {
        match self {
            Valuation::Qmax(_) => "qmax",
            Valuation::FunctionField(_) => "qmax(T)",
        }
    }
}

impl fmt::Display for Valuation {
    /// The valuation spec format: `kind=strict; base=qmax(T); param=-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "kind={}; base={}; param={}",
            self.kind(),
            self.base_str(),
            self.param()
        )
    }
}

/// Parse `kind=classical|strict|hyper; base=qmax|qmax(T); param=<rational>`.
pub fn parse_valuation_spec(text: &str) -> Result<Valuation> {
    let (mut kind, mut base, mut param) = (None, None, None);
    for field in text.split(';') {
        let field = field.trim();
        if field.is_empty() {
            continue;
        }
        let (key, value) = field.split_once('=').ok_or_else(|| {
            Error::syntax(1, 1, format!("expected key=value in valuation spec, got {field:?}"))
        })?;
        match key.trim() {
            "kind" => kind = Some(ValuationKind::from_str(value.trim())?),
            "base" => base = Some(value.trim().to_string()),
            "param" => {
                let scalar = crate::scalar::parse_scalar(value.trim())?;
                let r = scalar.as_rat().ok_or_else(|| Error::InvalidParameter {
                    reason: "valuation parameter must be a finite rational".into(),
                })?;
                param = Some(r.clone());
            }
            other => {
                return Err(Error::syntax(
                    1,
                    1,
                    format!("unknown valuation spec key {other:?}"),
                ))
            }
        }
    }
    let kind = kind.ok_or_else(|| Error::syntax(1, 1, "valuation spec is missing kind="))?;
    let base = base.ok_or_else(|| Error::syntax(1, 1, "valuation spec is missing base="))?;
    let param = param.ok_or_else(|| Error::syntax(1, 1, "valuation spec is missing param="))?;
    match base.as_str() {
        "qmax" => Ok(Valuation::Qmax(QmaxValuation::new(kind, param)?)),
        "qmax(T)" | "qmax(t)" => Ok(Valuation::FunctionField(FFValuation::new(kind, param)?)),
        other => Err(Error::syntax(
            1,
            1,
            format!("unknown base {other:?} (qmax|qmax(T))"),
        )),
    }
}

/// Equivalence ν₁ ∼ ν₂ ⟺ ν₁ = ρ·ν₂ for some ρ > 0, which for the
/// parametric families is sign equality of the parameters. Comparing
/// across kinds or carriers is a domain error.
pub fn equivalent(v1: &Valuation, v2: &Valuation) -> Result<bool> {
    let same_carrier = matches!(
        (v1, v2),
        (Valuation::Qmax(_), Valuation::Qmax(_))
            | (Valuation::FunctionField(_), Valuation::FunctionField(_))
    );
    if !same_carrier || v1.kind() != v2.kind() {
        return Err(Error::KindMismatch);
    }
    Ok(rat_sign(v1.param()) == rat_sign(v2.param()))
}

/// An equivalence class of valuations with its canonical representative
/// parameter (-1, 0, or +1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub label: &'static str,
    pub param: Rat,
}

impl EquivClass {
    fn new(label: &'static str, param: i64) -> Self {
        EquivClass {
            label,
            param: Rat::from_integer(param.into()),
        }
    }
}

impl fmt::Display for EquivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "label={} param={}", self.label, self.param)
    }
}

/// Classes of valuations on Q_max: three for the classical kind
/// (negative/trivial/positive ν(1)), two for strict and hyperfield-valued
/// (the parameter is confined to ℝ≥0).
pub fn qmax_classify(kind: ValuationKind) -> Vec<EquivClass> {
    match kind {
        ValuationKind::Classical => vec![
            EquivClass::new("negative", -1),
            EquivClass::new("trivial", 0),
            EquivClass::new("positive", 1),
        ],
        _ => vec![
            EquivClass::new("trivial", 0),
            EquivClass::new("positive", 1),
        ],
    }
}

/// Classes of valuations on Q_max(T) trivial on the base: exactly
/// {ν₋, ν₀, ν₊} for the strict and hyperfield-valued kinds. The classical
/// kind is not classified.
pub fn ff_classify(kind: ValuationKind) -> Result<Vec<EquivClass>> {
    if kind == ValuationKind::Classical {
        return Err(Error::ClassicalNotClassified);
    }
    Ok(vec![
        EquivClass::new("nu_minus", -1),
        EquivClass::new("nu_zero", 0),
        EquivClass::new("nu_plus", 1),
    ])
}

/// A point of the abstract curve P¹ over F₁.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    pub point: &'static str,
    pub valuation: &'static str,
    /// Monoid-ideal description of the point.
    pub ideal: &'static str,
    pub closed: bool,
}

/// The three-point space {c₊, c₀, c₋} with the valuation correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractCurve {
    points: Vec<CurvePoint>,
}

impl AbstractCurve {
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    /// Closed points — exactly the nontrivial valuation classes ν₊, ν₋.
    pub fn closed_point_count(&self) -> usize {
        self.points.iter().filter(|p| p.closed).count()
    }
}

/// The projective line over F₁ as an abstract curve: c₊ (the prime ideal
/// containing t) ↔ ν₊, c₀ (the generic point) ↔ ν₀, c₋ (the prime ideal
/// containing t⁻¹) ↔ ν₋.
pub fn abstract_curve() -> AbstractCurve {
    AbstractCurve {
        points: vec![
            CurvePoint {
                point: "c_plus",
                valuation: "nu_plus",
                ideal: "{t,...}",
                closed: true,
            },
            CurvePoint {
                point: "c_zero",
                valuation: "nu_zero",
                ideal: "generic",
                closed: false,
            },
            CurvePoint {
                point: "c_minus",
                valuation: "nu_minus",
                ideal: "{t^-1,...}",
                closed: true,
            },
        ],
    }
}

/// Carrier abstraction for the axiom checker: anything with ⊕, ⊙, a zero,
/// and printable elements.
pub trait ValCarrier: Clone {
    fn vadd(&self, other: &Self) -> Self;
    fn vmul(&self, other: &Self) -> Self;
    fn vzero() -> Self;
    fn vis_zero(&self) -> bool;
    fn vfmt(&self) -> String;
}

impl ValCarrier for TropScalar {
    fn vadd(&self, other: &Self) -> Self {
        trop_add(self, other)
    }

    fn vmul(&self, other: &Self) -> Self {
        trop_mul(self, other)
    }

    fn vzero() -> Self {
        TropScalar::Bottom
    }

    fn vis_zero(&self) -> bool {
        self.is_bottom()
    }

    fn vfmt(&self) -> String {
        self.to_string()
    }
}

impl ValCarrier for TropRational {
    fn vadd(&self, other: &Self) -> Self {
        rat_add(self, other)
    }

    fn vmul(&self, other: &Self) -> Self {
        rat_mul(self, other)
    }

    fn vzero() -> Self {
        TropRational::zero_frac()
    }

    fn vis_zero(&self) -> bool {
        self.is_zero_frac()
    }

    fn vfmt(&self) -> String {
        self.to_string()
    }
}

fn expected_infinity(kind: ValuationKind) -> ExtVal {
    match kind {
        ValuationKind::Classical => ExtVal::Top,
        _ => ExtVal::Bottom,
    }
}

/// Check the axioms of the given kind for a candidate map over sample
/// pairs. For each pair (x, y) the checker forms x⊕y and x⊙y itself and
/// tests: `zero_image` (ν(e) is the kind's infinity exactly on the zero
/// element, over 0 and all sampled elements), `multiplicativity`
/// (ν(x⊙y) = ν(x) + ν(y)), and the kind's addition axiom —
/// `min_inequality` (classical), `max_additivity` (strict), or
/// `hyper_membership` (ν(x⊕y) ∈ ν(x) ⊕ ν(y) in R_{+,val}).
/// Failures are reported with a witness pair, never thrown.
pub fn check_valuation_axioms<C: ValCarrier>(
    kind: ValuationKind,
    candidate: &dyn Fn(&C) -> ExtVal,
    pairs: &[(C, C)],
) -> AxiomReport {
    let mut report = AxiomReport::new();
    let inf = expected_infinity(kind);

    let mut zero_image = if candidate(&C::vzero()) == inf {
        None
    } else {
        Some(format!("x=0:nu={}", candidate(&C::vzero())))
    };
    let mut multiplicativity = None;
    let mut addition = None;

    for (x, y) in pairs {
        let sum = x.vadd(y);
        let prod = x.vmul(y);
        let (vx, vy) = (candidate(x), candidate(y));
        let (vs, vp) = (candidate(&sum), candidate(&prod));

        if zero_image.is_none() {
            zero_image = [(x, &vx), (y, &vy), (&sum, &vs), (&prod, &vp)]
                .into_iter()
                .find_map(|(e, v)| {
                    let ok = if e.vis_zero() { *v == inf } else { v.is_finite() };
                    (!ok).then(|| format!("x={}:nu={}", e.vfmt(), v))
                });
        }

        if multiplicativity.is_none() && vp != vx.plus(&vy) {
            multiplicativity = Some(format!(
                "x={},y={},nu(xy)={},nu(x)+nu(y)={}",
                x.vfmt(),
                y.vfmt(),
                vp,
                vx.plus(&vy)
            ));
        }

        if addition.is_none() {
            let witness = || {
                format!(
                    "x={},y={},nu(x)={},nu(y)={},nu(x+y)={}",
                    x.vfmt(),
                    y.vfmt(),
                    vx,
                    vy,
                    vs
                )
            };
            match kind {
                ValuationKind::Classical => {
                    if vx.clone().min(vy.clone()) > vs {
                        addition = Some(witness());
                    }
                }
                ValuationKind::Strict => {
                    if vs != vx.clone().max(vy.clone()) {
                        addition = Some(witness());
                    }
                }
                ValuationKind::HyperValued => {
                    let to_scalar = |v: &ExtVal| -> Option<TropScalar> {
                        match v {
                            ExtVal::Bottom => Some(TropScalar::Bottom),
                            ExtVal::Finite(r) => Some(TropScalar::Finite(r.clone())),
                            ExtVal::Top => None,
                        }
                    };
                    let ok = match (to_scalar(&vx), to_scalar(&vy), to_scalar(&vs)) {
                        (Some(a), Some(b), Some(s)) => rval_contains(&rval_add(&a, &b), &s),
                        _ => false, // +∞ is outside R_{+,val}
                    };
                    if !ok {
                        addition = Some(witness());
                    }
                }
            }
        }
    }

    report.record("zero_image", zero_image);
    report.record("multiplicativity", multiplicativity);
    let addition_axiom = match kind {
        ValuationKind::Classical => "min_inequality",
        ValuationKind::Strict => "max_additivity",
        ValuationKind::HyperValued => "hyper_membership",
    };
    report.record(addition_axiom, addition);
    report
}
