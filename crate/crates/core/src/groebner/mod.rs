//! Gröbner engines.

pub mod automaton;
pub mod budget;
pub mod exterior;
pub mod module;
pub mod nc;
pub mod radical;

pub use automaton::{nc_normal_count, Automaton};
pub use budget::Budget;
pub use exterior::{exterior_monomials, ExteriorQuotient};
pub use module::{
    buchberger_module, hilbert_module, GroebnerBasis, ModulePresentation, ModuleTerm, ModuleVector,
};
pub use nc::{
    nc_groebner_truncated, nc_groebner_within, nc_hilbert_symmetric_within, tuned_letter_order,
    NcGroebnerBasis, NcQuadraticPresentation, SymmetricGrading,
};
pub use radical::{radical_membership, Membership, DEFAULT_DEGREE_CAP};
