//! Exact Laurent series over the rationals and matrices over them.

pub mod matrix;
pub mod poly;
pub mod scalar;

pub use matrix::{symplectic_gram, LaurentMatrix};
pub use poly::{
    char_poly, eigen_valuations, homogeneity_index, root_valuations, CharPoly, EigenValuations,
    HomogeneityIndex,
};
pub use scalar::{q, LaurentScalar, Q};
