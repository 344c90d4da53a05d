//! Exact-arithmetic invariants of finite trees.
//!
//! The crate computes, for a labeled tree `T` on `n` vertices:
//!
//! * the power-sum and monomial expansions of the chromatic symmetric
//!   function of `T`,
//! * the generalized degree polynomial `gdp(T) = Σ_A x^|A| y^d(A) z^e(A)`
//!   over all vertex subsets `A`,
//! * the half-generalized degree polynomial `hdp` (same sum restricted to
//!   subtrees), the subtree polynomial `stp = Σ_S q^e(S) r^ℓ(S)`, and the
//!   combined "souped-up" polynomial `soup = Σ_S x^e(S) y^d(S) z^ℓ(S)`,
//!
//! together with the exact linear transforms that connect them: the
//! coefficient formula mapping power-sum coefficients onto `gdp`, and the
//! binomial systems that convert between `hdp` and `stp`. A composition
//! calculus (concatenation, near-concatenation, composition, switching
//! classes, caterpillar closed forms) produces families of non-isomorphic
//! trees sharing these invariants, and the `search` module classifies all
//! free trees of a given order by any of the invariants.
//!
//! Everything is exact: 64-bit checked integer coefficients and reduced
//! rational matrices. Arithmetic overflow panics rather than wrapping.

pub mod algebra;
pub mod compositions;
pub mod invariants;
pub mod search;
pub mod transforms;
pub mod tree;

pub use algebra::{Composition, Fraction, Partition, RationalMatrix, SparsePoly};
pub use invariants::{MonCsf, PsumCsf};
pub use search::{ClassReport, Fingerprint, InvariantTag};
pub use tree::{CanonicalCode, PolarizedTree, Tree};
