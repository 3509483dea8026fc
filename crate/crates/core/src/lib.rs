//! Finite and function-field rings, their distinguished subsets, and
//! exhaustive deciders for semiprimeness-type conditions.

pub mod check;
pub mod derivations;
pub mod error;
pub mod expr;
pub mod funcfield;
pub mod predicates;
pub mod ring;
pub mod sets;
pub mod subset_expr;

pub use check::{CheckResult, Outcome, SubAssertion};
pub use error::{Result, RingError};
pub use ring::{build_ring, AnyRing, Elem, InfRing, Ring, RingSpec};
pub use sets::ElemSet;
