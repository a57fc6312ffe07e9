//! Exact enumeration of torus-fixed points on affine flag manifolds.
//!
//! The crate computes Euler characteristics of fixed-point varieties of
//! nil-elliptic elements in the special linear and symplectic loop algebras.
//! Every closed form is paired with a brute-force enumeration so the two can
//! be compared.

pub mod checks;
pub mod combinatorics;
pub mod error;
pub mod lattice;
pub mod laurent;
pub mod type_a;
pub mod type_c;

pub use error::{Error, Result};
