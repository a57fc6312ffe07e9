//! Lattices over `A = k[[pi]]` inside `F^n`.

pub mod action;
pub mod basis;
pub mod json;
pub mod reduction;

pub use action::{flow_limit, is_fixed, verify_almost_commute, NuAction};
pub use basis::{
    canonical_basis, dual, is_symplectic, stabilizes, stabilizes_diagonal, CanonicalBasis,
    DiagonalLattice, LatticeBasis,
};
pub use json::{parse_lattice, LatticeSpec};
pub use reduction::{induced_endomorphism, jordan_type, rank, Partition, RationalMatrix};
