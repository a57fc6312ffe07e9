use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::basis::{canonical_basis, DiagonalLattice, LatticeBasis};
use crate::error::{Error, Result};
use crate::laurent::{LaurentMatrix, LaurentScalar};

/// Torus action scaling `pi^m e_i` by `lambda^{nu(m, i)}` with
/// `nu(m, i) = slope * m + offsets[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuAction {
    pub slope: i64,
    pub offsets: Vec<i64>,
}

impl NuAction {
    pub fn new(slope: i64, offsets: Vec<i64>) -> Self {
        NuAction { slope, offsets }
    }

    /// `i` is 0-based.
    pub fn nu(&self, m: i64, i: usize) -> i64 {
        self.slope * m + self.offsets[i]
    }

    /// Split a vector into its weight components, keyed by the exponent of
    /// `lambda`.
    pub fn weight_components(&self, v: &[LaurentScalar]) -> BTreeMap<i64, Vec<LaurentScalar>> {
        let n = v.len();
        let mut out: BTreeMap<i64, Vec<LaurentScalar>> = BTreeMap::new();
        for (i, x) in v.iter().enumerate() {
            for (m, c) in x.terms() {
                let slot = out
                    .entry(self.nu(m, i))
                    .or_insert_with(|| vec![LaurentScalar::zero(); n]);
                slot[i] = &slot[i] + &LaurentScalar::monomial(c.clone(), m);
            }
        }
        out
    }
}

/// Whether `nu(m, j) + s == nu(m + l, i)` for every nonzero `a_ij^l`.
///
/// Only stored coefficients are checked.
pub fn verify_almost_commute(n: &LaurentMatrix, f: &NuAction, s: i64) -> bool {
    n.entries().all(|(i, j, a)| {
        a.terms()
            .all(|(l, _)| f.slope * l + f.offsets[i] - f.offsets[j] == s)
    })
}

/// `f(lambda) L == L` for every `lambda`.
///
/// Each canonical basis vector is split into weight components; the lattice
/// is fixed exactly when every component already lies in it.
pub fn is_fixed(f: &NuAction, lattice: &LatticeBasis) -> Result<bool> {
    let z = canonical_basis(lattice)?;
    for col in z.basis.columns() {
        if col.iter().any(|x| !x.is_exact()) {
            return Err(Error::PrecisionExhausted);
        }
        for (_, part) in f.weight_components(&col) {
            if !z.contains(&part)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Limit of `f(lambda) L` as `lambda -> 0`, when every off-diagonal canonical
/// coordinate is scaled by a positive power of `lambda`.
pub fn flow_limit(f: &NuAction, lattice: &LatticeBasis) -> Result<DiagonalLattice> {
    let z = canonical_basis(lattice)?;
    let n = z.dim();
    for j in 0..n {
        let base = f.nu(z.r[j], j);
        for i in 0..j {
            for (m, _) in z.basis.get(i, j).terms() {
                if f.nu(m, i) - base <= 0 {
                    return Err(Error::NotInPlusCell);
                }
            }
        }
    }
    Ok(DiagonalLattice::new(z.r))
}
