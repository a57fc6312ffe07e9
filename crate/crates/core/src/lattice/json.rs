//! `{"n": 2, "basis": [["0:1/1", "0"], ["0", "1:1/1"]]}` or
//! `{"n": 2, "diagonal": [0, 1]}`. Basis rows are matrix rows; the columns
//! generate the lattice.

use serde::{Deserialize, Serialize};

use super::basis::{DiagonalLattice, LatticeBasis};
use crate::error::{Error, Result};
use crate::laurent::{LaurentMatrix, LaurentScalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<Vec<i64>>,
}

impl LatticeSpec {
    pub fn from_basis(l: &LatticeBasis) -> Self {
        let n = l.dim();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| l.basis.get(i, j).to_string()).collect())
            .collect();
        LatticeSpec {
            n,
            basis: Some(rows),
            diagonal: None,
        }
    }

    pub fn to_basis(&self) -> Result<LatticeBasis> {
        match (&self.basis, &self.diagonal) {
            (Some(rows), None) => {
                if rows.len() != self.n || rows.iter().any(|r| r.len() != self.n) {
                    return Err(Error::Parse(format!("basis must be {0}x{0}", self.n)));
                }
                let mut m = LaurentMatrix::zero(self.n);
                for (i, row) in rows.iter().enumerate() {
                    for (j, cell) in row.iter().enumerate() {
                        m.set(i, j, cell.parse::<LaurentScalar>()?);
                    }
                }
                Ok(LatticeBasis::new(m))
            }
            (None, Some(r)) => {
                if r.len() != self.n {
                    return Err(Error::Parse(format!(
                        "diagonal must have {} entries",
                        self.n
                    )));
                }
                Ok(DiagonalLattice::new(r.clone()).to_basis())
            }
            _ => Err(Error::Parse("give exactly one of basis, diagonal".into())),
        }
    }
}

pub fn parse_lattice(text: &str) -> Result<LatticeBasis> {
    let spec: LatticeSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    spec.to_basis()
}
