use std::fmt;

use super::poly::char_poly;
use super::scalar::{LaurentScalar, Q};

/// Square matrix over Laurent series, row-major.
///
/// Entry `(i, j)` is the coefficient of `e_i` in the image of `e_j`, so
/// columns are images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<LaurentScalar>,
}

impl LaurentMatrix {
    pub fn zero(n: usize) -> Self {
        LaurentMatrix {
            n,
            entries: vec![LaurentScalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                LaurentScalar::one()
            } else {
                LaurentScalar::zero()
            }
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentScalar) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        LaurentMatrix { n, entries }
    }

    /// Matrix whose `j`th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<LaurentScalar>]) -> Self {
        let n = cols.len();
        Self::from_fn(n, |i, j| cols[j][i].clone())
    }

    pub fn diagonal_monomials(exps: &[i64]) -> Self {
        let n = exps.len();
        Self::from_fn(n, |i, j| {
            if i == j {
                LaurentScalar::pi_pow(exps[i])
            } else {
                LaurentScalar::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentScalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: LaurentScalar) {
        self.entries[i * self.n + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<LaurentScalar> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<LaurentScalar>> {
        (0..self.n).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentScalar)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, x)| (k / self.n, k % self.n, x))
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(LaurentScalar::is_exact)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        Self::from_fn(self.n, |i, j| c * self.get(i, j))
    }

    pub fn mul_vec(&self, v: &[LaurentScalar]) -> Vec<LaurentScalar> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(LaurentScalar::zero(), |acc, j| {
                    &acc + &(self.get(i, j) * &v[j])
                })
            })
            .collect()
    }

    pub fn trace(&self) -> LaurentScalar {
        (0..self.n).fold(LaurentScalar::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_trace_zero(&self) -> bool {
        self.trace().is_exact_zero()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.entries.iter().all(LaurentScalar::is_exact_zero)
    }

    /// Delete row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let m = self.n - 1;
        Self::from_fn(m, |i, j| {
            let ii = if i < r { i } else { i + 1 };
            let jj = if j < c { j } else { j + 1 };
            self.get(ii, jj).clone()
        })
    }

    /// Determinant via the division-free characteristic polynomial.
    pub fn det(&self) -> LaurentScalar {
        if self.n == 0 {
            return LaurentScalar::one();
        }
        let cp = char_poly(self);
        let c = cp.coeffs[self.n].clone();
        if self.n.is_multiple_of(2) {
            c
        } else {
            -c
        }
    }

    /// Classical adjugate, `adj(A) * A = det(A) * I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, |i, j| {
            let d = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                d
            } else {
                -d
            }
        })
    }

    /// `M^T J + J M == 0` for the standard symplectic Gram matrix.
    pub fn is_symplectic_algebra_element(&self) -> bool {
        if !self.n.is_multiple_of(2) {
            return false;
        }
        let j = symplectic_gram(self.n / 2);
        let lhs = &(&self.transpose() * &j) + &(&j * self);
        lhs.is_exact_zero()
    }

    /// The matrix with coefficient `pi^0` of each entry; entries must lie in `A`.
    pub fn constant_terms(&self) -> Vec<Vec<Q>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).coeff(0)).collect())
            .collect()
    }
}

/// The Gram matrix `[[0, I], [-I, 0]]` of size `2n`.
pub fn symplectic_gram(n: usize) -> LaurentMatrix {
    LaurentMatrix::from_fn(2 * n, |i, j| {
        if i < n && j == i + n {
            LaurentScalar::one()
        } else if i >= n && j + n == i {
            LaurentScalar::from_int(-1)
        } else {
            LaurentScalar::zero()
        }
    })
}

impl std::ops::Mul for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        LaurentMatrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(LaurentScalar::zero(), |acc, k| {
                &acc + &(self.get(i, k) * rhs.get(k, j))
            })
        })
    }
}

impl std::ops::Add for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn add(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        LaurentMatrix::from_fn(self.n, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl std::ops::Sub for &LaurentMatrix {
    type Output = LaurentMatrix;
    fn sub(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        LaurentMatrix::from_fn(self.n, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join("; "))?;
        }
        Ok(())
    }
}
