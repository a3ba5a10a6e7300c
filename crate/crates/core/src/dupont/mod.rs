//! Simplicial differential forms on finite simplicial sets and Dupont's
//! chain-homotopy operators I, E, s with the identities that tie them to
//! the cosimplicial de Rham complex.

mod operators;
mod simplicial;
mod sset;
mod value;

pub use operators::{
    cosimplicial_delta, dupont_e, dupont_i, dupont_i_via_homotopies, dupont_s, elementary_form,
    h_operator,
};
pub use simplicial::{CosimplicialElement, SimplicialForm, SimplicialMap};
pub use sset::{
    boundary_delta2, nerve_z2, standard_simplex, FiniteSimplicialSet, SimplexId, SimplexRef,
};
pub use value::FormValue;
