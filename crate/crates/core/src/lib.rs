//! Exact symbolic engine for simplicial Chern-Weil theory.
//!
//! Everything here computes over exact rationals: differential forms on
//! standard simplices with polynomial coefficients, Dupont's chain homotopy
//! operators on finite simplicial sets, transition-cocycle bundles with
//! connections and Chern character forms, secondary (relative) character
//! forms, and the p-adic regulator cocycle with its Lazard-map comparison.
//! There is no floating point anywhere; every identity is checked with
//! syntactic equality of canonical forms.

pub mod algebra;
pub mod chern;
pub mod corpus;
pub mod dupont;
pub mod error;
pub mod forms;
pub mod padic;

pub use algebra::{PAdicValuation, PolyElement, Rational, RingMatrix, VarKind, VarUniverse};
pub use error::{Error, Result};
