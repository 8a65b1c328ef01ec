//! The valuation hyperfield R_{+,val} as an exact descriptor calculus.
//!
//! The carrier is Q_max; the multi-valued sum is
//!   x ⊕ y = {max{x,y}}   if x ≠ y,
//!   x ⊕ y = [-inf, x]    if x = y,
//! and multiplication is the tropical product. Sums and the unions that
//! arise while checking associativity are represented symbolically —
//! singletons and down-closed intervals — so every check is exact on the
//! infinite carrier, with no discretization.

use std::fmt;

use crate::report::AxiomReport;
use crate::scalar::{trop_mul, TropScalar};

/// Value of a hypersum: a single point or the interval [-inf, upper].
///
/// `DownTo(Bottom)` and `Singleton(Bottom)` denote the same set {-inf};
/// the constructor and `PartialEq` identify them.
#[derive(Debug, Clone, Eq)]
pub enum RvalSet {
    Singleton(TropScalar),
    DownTo(TropScalar),
}

impl RvalSet {
    /// The interval [-inf, upper], collapsing [-inf,-inf] to the singleton.
    pub fn down_to(upper: TropScalar) -> Self {
        if upper.is_bottom() {
            RvalSet::Singleton(TropScalar::Bottom)
        } else {
            RvalSet::DownTo(upper)
        }
    }

    fn normalized(&self) -> (bool, &TropScalar) {
        match self {
            RvalSet::Singleton(v) => (false, v),
            RvalSet::DownTo(u) if u.is_bottom() => (false, u),
            RvalSet::DownTo(u) => (true, u),
        }
    }
}

impl PartialEq for RvalSet {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl fmt::Display for RvalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.normalized() {
            (false, v) => write!(f, "{{{v}}}"),
            (true, u) => write!(f, "[-inf,{u}]"),
        }
    }
}

/// The hypersum x ⊕ y of R_{+,val}.
pub fn rval_add(x: &TropScalar, y: &TropScalar) -> RvalSet {
    if x == y {
        RvalSet::down_to(x.clone())
    } else if x > y {
        RvalSet::Singleton(x.clone())
    } else {
        RvalSet::Singleton(y.clone())
    }
}

/// Multiplication of R_{+,val}: the tropical product (Bottom absorbing).
pub fn rval_mul(x: &TropScalar, y: &TropScalar) -> TropScalar {
    trop_mul(x, y)
}

/// Exact membership z ∈ s.
pub fn rval_contains(s: &RvalSet, z: &TropScalar) -> bool {
    match s {
        RvalSet::Singleton(v) => z == v,
        RvalSet::DownTo(u) => z <= u,
    }
}

/// Multiply every element of a descriptor by a scalar. Scaling a
/// down-closed interval shifts its upper bound; scaling by Bottom
/// collapses everything to {-inf}.
fn mul_set(s: &RvalSet, z: &TropScalar) -> RvalSet {
    match s {
        RvalSet::Singleton(v) => RvalSet::Singleton(rval_mul(v, z)),
        RvalSet::DownTo(u) => RvalSet::down_to(rval_mul(u, z)),
    }
}

/// Normal form of a finite union of descriptors: at most one maximal
/// down-closed interval plus the singletons strictly above it, sorted.
/// The normal form is unique, so set equality is structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RvalUnion {
    interval: Option<TropScalar>,
    singles: Vec<TropScalar>,
}

impl RvalUnion {
    pub fn new(parts: Vec<RvalSet>) -> Self {
        let mut interval: Option<TropScalar> = None;
        for p in &parts {
            if let (true, u) = p.normalized() {
                if interval.as_ref().map_or(true, |cur| u > cur) {
                    interval = Some(u.clone());
                }
            }
        }
        let mut singles: Vec<TropScalar> = parts
            .iter()
            .filter_map(|p| match p.normalized() {
                (false, v) => Some(v.clone()),
                (true, _) => None,
            })
            .filter(|v| interval.as_ref().map_or(true, |u| v > u))
            .collect();
        singles.sort();
        singles.dedup();
        RvalUnion { interval, singles }
    }

    pub fn contains(&self, z: &TropScalar) -> bool {
        self.interval.as_ref().is_some_and(|u| z <= u) || self.singles.contains(z)
    }

    /// Elementwise hypersum with a scalar, staying in descriptor form:
    ///   {a} ⊕ z      = a ⊕ z,
    ///   [-inf,u] ⊕ z = {z} if z > u, else [-inf,u].
    /// (For z ≤ u: points below z map to {z} ⊆ [-inf,u], z itself
    /// contributes [-inf,z], and points above z survive unchanged.)
    pub fn add_scalar(&self, z: &TropScalar) -> RvalUnion {
        let mut parts = Vec::with_capacity(self.singles.len() + 1);
        if let Some(u) = &self.interval {
            if z > u {
                parts.push(RvalSet::Singleton(z.clone()));
            } else {
                parts.push(RvalSet::down_to(u.clone()));
            }
        }
        for v in &self.singles {
            parts.push(rval_add(v, z));
        }
        RvalUnion::new(parts)
    }

    pub fn mul_scalar(&self, z: &TropScalar) -> RvalUnion {
        let mut parts = Vec::with_capacity(self.singles.len() + 1);
        if let Some(u) = &self.interval {
            parts.push(RvalSet::down_to(rval_mul(u, z)));
        }
        for v in &self.singles {
            parts.push(RvalSet::Singleton(rval_mul(v, z)));
        }
        RvalUnion::new(parts)
    }
}

impl From<RvalSet> for RvalUnion {
    fn from(s: RvalSet) -> Self {
        RvalUnion::new(vec![s])
    }
}

impl fmt::Display for RvalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if let Some(u) = &self.interval {
            write!(f, "[-inf,{u}]")?;
            first = false;
        }
        for v in &self.singles {
            if !first {
                write!(f, "|")?;
            }
            write!(f, "{{{v}}}")?;
            first = false;
        }
        if first {
            write!(f, "{{}}")?;
        }
        Ok(())
    }
}

/// Verify the canonical-hypergroup and hyperfield axioms of R_{+,val}
/// exhaustively over all pairs/triples from `samples` (augmented with
/// Bottom, the neutral element), using exact descriptor algebra.
///
/// Axioms reported: `commutativity`, `associativity`, `neutral`,
/// `unique_inverse` (y = x is the only solution of -inf ∈ x ⊕ y),
/// `reversibility` (x ∈ y ⊕ z ⟹ z ∈ x ⊕ y, every element being its own
/// additive inverse), `distributivity`, `absorbing_zero`.
pub fn rval_axiom_check(samples: &[TropScalar]) -> AxiomReport {
    let mut xs: Vec<TropScalar> = samples.to_vec();
    if !xs.contains(&TropScalar::Bottom) {
        xs.push(TropScalar::Bottom);
    }
    xs.sort();
    xs.dedup();

    let mut report = AxiomReport::new();

    let commutativity = pairs(&xs).find_map(|(x, y)| {
        (rval_add(x, y) != rval_add(y, x)).then(|| format!("x={x},y={y}"))
    });
    report.record("commutativity", commutativity);

    let associativity = triples(&xs).find_map(|(x, y, z)| {
        let lhs = RvalUnion::from(rval_add(x, y)).add_scalar(z);
        let rhs = RvalUnion::from(rval_add(y, z)).add_scalar(x);
        (lhs != rhs).then(|| format!("x={x},y={y},z={z},lhs={lhs},rhs={rhs}"))
    });
    report.record("associativity", associativity);

    let neutral = xs.iter().find_map(|x| {
        (rval_add(&TropScalar::Bottom, x) != RvalSet::Singleton(x.clone()))
            .then(|| format!("x={x}"))
    });
    report.record("neutral", neutral);

    let unique_inverse = xs.iter().find_map(|x| {
        let inverses: Vec<&TropScalar> = xs
            .iter()
            .filter(|y| rval_contains(&rval_add(x, y), &TropScalar::Bottom))
            .collect();
        (inverses.len() != 1 || inverses[0] != x).then(|| format!("x={x}"))
    });
    report.record("unique_inverse", unique_inverse);

    let reversibility = triples(&xs).find_map(|(x, y, z)| {
        (rval_contains(&rval_add(y, z), x) && !rval_contains(&rval_add(x, y), z))
            .then(|| format!("x={x},y={y},z={z}"))
    });
    report.record("reversibility", reversibility);

    let distributivity = triples(&xs).find_map(|(x, y, z)| {
        // x ⊙ (y ⊕ z) vs (x ⊙ y) ⊕ (x ⊙ z), both as exact descriptors.
        let lhs = RvalUnion::from(mul_set(&rval_add(y, z), x));
        let rhs = RvalUnion::from(rval_add(&rval_mul(x, y), &rval_mul(x, z)));
        (lhs != rhs).then(|| format!("x={x},y={y},z={z},lhs={lhs},rhs={rhs}"))
    });
    report.record("distributivity", distributivity);

    let absorbing = xs.iter().find_map(|x| {
        (!rval_mul(x, &TropScalar::Bottom).is_bottom()).then(|| format!("x={x}"))
    });
    report.record("absorbing_zero", absorbing);

    report
}

fn pairs(xs: &[TropScalar]) -> impl Iterator<Item = (&TropScalar, &TropScalar)> {
    xs.iter().flat_map(move |x| xs.iter().map(move |y| (x, y)))
}

fn triples(xs: &[TropScalar]) -> impl Iterator<Item = (&TropScalar, &TropScalar, &TropScalar)> {
    xs.iter().flat_map(move |x| {
        xs.iter()
            .flat_map(move |y| xs.iter().map(move |z| (x, y, z)))
    })
}
