use num_traits::Zero;
use serde::Serialize;

use super::basis::DiagonalLattice;
use crate::error::{Error, Result};
use crate::laurent::{LaurentMatrix, LaurentScalar, Q};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    /// Sort descending and drop zeros.
    pub fn from_sizes(mut sizes: Vec<usize>) -> Self {
        sizes.retain(|&x| x > 0);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: sizes }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

pub type RationalMatrix = Vec<Vec<Q>>;

/// Matrix of `N` on `L / pi L` in the basis `pi^{r_i} e_i`.
pub fn induced_endomorphism(
    n: &LaurentMatrix,
    lattice: &DiagonalLattice,
) -> Result<RationalMatrix> {
    let dim = n.dim();
    let mut out = vec![vec![Q::zero(); dim]; dim];
    for (j, i, a) in n.entries() {
        let shifted: LaurentScalar = a.shift(lattice.r[i] - lattice.r[j]);
        if let Some(v) = shifted.valuation()? {
            if v < 0 {
                return Err(Error::NotStable);
            }
        }
        out[j][i] = shifted.coeff(0);
    }
    Ok(out)
}

pub fn rank(m: &RationalMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let n = a.len();
    let m = b[0].len();
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Jordan type of a nilpotent matrix from ranks of its powers: the number of
/// parts of size at least `j` is `rank(M^{j-1}) - rank(M^j)`.
pub fn jordan_type(m: &RationalMatrix) -> Result<Partition> {
    let n = m.len();
    let mut ranks = vec![n];
    let mut power = m.clone();
    for _ in 0..n {
        ranks.push(rank(&power));
        power = mat_mul(&power, m);
    }
    if ranks[n] != 0 {
        return Err(Error::NotNilpotent);
    }
    let at_least: Vec<usize> = (1..=n).map(|j| ranks[j - 1] - ranks[j]).collect();
    let mut parts = Vec::new();
    for j in 1..=n {
        let next = if j < n { at_least[j] } else { 0 };
        for _ in 0..(at_least[j - 1] - next) {
            parts.push(j);
        }
    }
    Ok(Partition::from_sizes(parts))
}
