//! Exact algebraic data structures.

pub mod exterior;
pub mod matrix;
pub mod poly;
pub mod series;
pub mod sparse;
pub mod word;

pub use exterior::{ext_multiply, ExtElement};
pub use matrix::{matrix_rank, Matrix, RowReduction};
pub use poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};
pub use series::{series_multiply, SeriesTrunc};
pub use sparse::{SparseEchelon, SparseVec};
pub use word::{NcPolynomial, Word};
