//! Exact coefficient arithmetic: big rationals, multivariate polynomials
//! with per-variable nilpotency caps, square matrices over a coefficient
//! ring, and p-adic valuation bookkeeping.

mod matrix;
pub(crate) mod poly;
mod rational;
mod valuation;

pub use matrix::{NeumannCertificate, RingElem, RingMatrix};
pub use poly::{PolyElement, VarKind, VarSpec, VarUniverse};
pub use rational::{binomial, factorial, Rational};
pub use valuation::PAdicValuation;
