//! Exact valuation theory over idempotent semirings.
//!
//! The crate implements, with exact rational arithmetic throughout:
//!
//! * the tropical semifield Q_max = (ℚ ∪ {-inf}, max, +) and the boolean
//!   semifield B ([`scalar`]);
//! * the polynomial semiring Q_max\[T\] with canonical forms (least concave
//!   majorants), functional equivalence, and unique factorization into
//!   linear factors ([`poly`]);
//! * the fraction semifield Q_max(T) with a computable normal form and a
//!   cross-multiplication equality oracle ([`ratfunc`]);
//! * three definitions of valuation — classical, strict, hyperfield-valued —
//!   as checkable contracts, their parametric families on Q_max and
//!   Q_max(T), complete classification up to equivalence, and the
//!   three-point abstract curve attached to Q_max(T) ([`valuation`]);
//! * finite hyperstructures: the valuation hyperfield R_{+,val} as an exact
//!   descriptor calculus, axiom checkers for canonical hypergroups /
//!   hyperrings / hyperfields on finite tables, quotient constructions
//!   (Z/n)/G, the Krasner and sign hyperfields, and brute-force
//!   isomorphism search ([`hyper`]).
//!
//! Nothing here is floating point: scalars are arbitrary-precision
//! rationals, infinite hypersums are closed-form descriptors, and every
//! reported axiom failure carries an exact witness.

pub mod cli;
pub mod error;
pub mod expr;
pub mod hyper;
pub mod poly;
pub mod ratfunc;
pub mod report;
pub mod scalar;
pub mod valuation;

pub use error::{Error, Result};
pub use expr::{eval_expr, eval_str, parse_expr, Expr, PolyValue};
pub use poly::{
    canonicalize, expand, factor, func_equiv, poly_add, poly_degree, poly_eval, poly_mul,
    t_order, CanonicalPoly, LinearFactorization, TropPoly,
};
pub use ratfunc::{
    frac_eval, rat_add, rat_eq, rat_inv, rat_mul, rat_normalize, TropRational,
};
pub use report::{AxiomCheck, AxiomReport};
pub use scalar::{
    parse_scalar, rat, rat_sign, trop_add, trop_inv, trop_leq, trop_mul, BoolSemifield, Rat,
    TropScalar,
};
pub use valuation::{
    abstract_curve, check_valuation_axioms, equivalent, ff_classify, ff_val_eval,
    parse_valuation_spec, qmax_classify, qmax_val_eval, AbstractCurve, CurvePoint, EquivClass,
    ExtVal, FFValuation, QmaxValuation, ValCarrier, Valuation, ValuationKind,
};
