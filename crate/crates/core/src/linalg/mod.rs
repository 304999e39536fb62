//! Exact linear algebra over GF(p).

pub mod field;
pub mod matrix;
pub mod subspace;
pub mod tensor;

pub use field::{Gf, Vector, MAX_PRIME};
pub use matrix::{Echelon, Matrix};
pub use subspace::{QuotientBasis, Subspace};
