//! Multi-valued algebra: the hyperfield R_{+,val} as an exact descriptor
//! calculus, finite hyperstructures with exhaustive axiom checking, the
//! Krasner and sign hyperfields, quotient hyperrings A/G, and brute-force
//! isomorphism search.

pub mod finite;
pub mod iso;
pub mod quotient;
pub mod rval;

pub use finite::{
    check_hyperfield, check_hypergroup, check_hyperring, krasner, signs, FiniteHyperstructure,
};
pub use iso::iso_search;
pub use quotient::{full_unit_group, quotient_hyperring};
pub use rval::{rval_add, rval_axiom_check, rval_contains, rval_mul, RvalSet, RvalUnion};
