//! Ideals of dual weak braces and what can be built from them.
//!
//! Subsets are [`ElementSet`]s over the ambient element indices. The three
//! predicate tiers are
//!
//! ```text
//! left ideal         full inverse subsemigroup of (S,+), λ_a(I) ⊆ I
//! strong left ideal  left ideal, normal in (S,+)
//! ideal              normal in (S,+), λ_a(I) ⊆ I, normal in (S,∘)
//! ```

mod enumerate;
mod quotient;
mod subset;

use thiserror::Error;

use crate::brace::Side;
use crate::set::ElementSet;

pub use enumerate::{
    component_union, enumerate_ideals, enumerate_ideals_with, ideal_decomposition,
    EnumerationLimits, EnumerationMode, IdealDecomposition, IdealEnumeration,
    DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_MAX_ORDER,
};
pub use quotient::{
    check_hom, first_isomorphism_check, image, is_sub_brace, kernel, quotient, substructure,
    FirstIsomorphismReport, QuotientStructure,
};
pub use subset::{
    additive_center, annihilator, commutator_set, conjugate, fix,
    generated_full_inverse_subsemigroup, ideal_closure, ideal_tier, is_full_inverse_subsemigroup,
    is_full_inverse_subsemigroup_add, is_ideal, is_lambda_invariant, is_left_ideal,
    is_normal_subsemigroup, is_strong_left_ideal, left_center, multiplicative_center, product_set,
    socle, sum_of_ideals, IdealTier, SubsetViolation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("not an ideal: {0}")]
    NotAnIdeal(SubsetViolation),
    #[error("not a sub-brace: {0}")]
    NotASubBrace(SubsetViolation),
    #[error("I + J = {sum} but I ∘ J = {circ}")]
    SumCircMismatch { sum: ElementSet, circ: ElementSet },
    #[error("map does not preserve {side} at ({a}, {b})")]
    NotAHom { side: Side, a: usize, b: usize },
    #[error("map has {len} entries or values out of range for a domain of order {order}")]
    MapShape { len: usize, order: usize },
    #[error("order {order} exceeds the enumeration bound {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}
