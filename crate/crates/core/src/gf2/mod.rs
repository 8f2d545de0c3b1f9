//! Dense linear algebra over GF(2) and GF(2^s).

mod bitmatrix;
mod extmatrix;
mod field;

pub use bitmatrix::{BitMatrix, XorBasis};
pub use extmatrix::{det_in_place, ExtBasis, ExtMatrix};
pub use field::{is_irreducible, Elem, ExtField, DEFAULT_POLY_16};
