//! The composition calculus behind families of trees with equal
//! invariants.
//!
//! Compositions carry three products: concatenation `·`,
//! near-concatenation `⊙` (concatenate, merge the middle parts), and the
//! substitution product `∘` with `α∘β = β^{⊙a₁}·…·β^{⊙a_k}`. The
//! rational invariant H̄ respects all three in ways that translate, via
//! the specialization `x_i → (y+z)^{i+1}`, into statements about half
//! degree polynomials of caterpillars: compositions related by
//! reversing factors of the (unique) `∘`-factorization yield
//! non-isomorphic caterpillars with equal half degree and subtree
//! polynomials, and the same recipe applied to an arbitrary polarized
//! tree yields non-caterpillar families.

mod factor;
mod families;
mod hbar;
mod ops;

pub use factor::{
    irreducible_factorization, switching_class, switching_class_up_to_reversal, Factorization,
};
pub use families::{eisenstat_gordon, theorem7_family};
pub use hbar::{
    coarsening_sum_is_binomial, composition_rule_check, hbar, hbar_from_lpoly,
    hbar_recurrence_check, hbar_specialize, lpoly, HbarPoly, HBAR_MAX_LEN,
};
pub use ops::{compose, concat, is_palindrome, near_concat, near_concat_power, padded, reverse};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition has {len} parts; coarsening enumeration is capped at {max}")]
    TooLong { len: usize, max: usize },
    #[error("coefficient list {0} is not a gap-free 0/1 polynomial")]
    NotGapFree(String),
    #[error("weights must be positive, got {0}")]
    BadWeight(u32),
    #[error("family members would have {n} vertices, over the cap of {max}")]
    TooManyVertices { n: usize, max: usize },
}
