use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{symplectic_gram, LaurentMatrix, LaurentScalar};

/// `A pi^{r_1} e_1 + ... + A pi^{r_n} e_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagonalLattice {
    pub r: Vec<i64>,
}

impl DiagonalLattice {
    pub fn new(r: Vec<i64>) -> Self {
        DiagonalLattice { r }
    }

    pub fn valuation(&self) -> i64 {
        self.r.iter().sum()
    }

    pub fn to_basis(&self) -> LatticeBasis {
        LatticeBasis {
            basis: LaurentMatrix::diagonal_monomials(&self.r),
        }
    }

    /// Exponents of the dual lattice under the standard symplectic form.
    pub fn symplectic_dual(&self) -> DiagonalLattice {
        let n = self.r.len() / 2;
        let mut r = vec![0; 2 * n];
        for i in 0..n {
            r[i] = -self.r[n + i];
            r[n + i] = -self.r[i];
        }
        DiagonalLattice { r }
    }
}

/// A lattice given by generating columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub basis: LaurentMatrix,
}

/// The unique basis `z_j = pi^{r_j} e_j + sum_{i<j} z_ij e_i` with every
/// `z_ij` a Laurent polynomial of degree below `r_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalBasis {
    pub basis: LaurentMatrix,
    pub r: Vec<i64>,
}

impl LatticeBasis {
    pub fn new(basis: LaurentMatrix) -> Self {
        LatticeBasis { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn standard(n: usize) -> Self {
        LatticeBasis {
            basis: LaurentMatrix::identity(n),
        }
    }

    /// `pi^k L`.
    pub fn scale_pi(&self, k: i64) -> Self {
        LatticeBasis {
            basis: self.basis.scale(&LaurentScalar::pi_pow(k)),
        }
    }

    pub fn valuation(&self) -> Result<i64> {
        self.basis.det().valuation()?.ok_or(Error::Singular)
    }

    pub fn canonical(&self) -> Result<CanonicalBasis> {
        canonical_basis(self)
    }

    /// Same lattice, compared through canonical forms.
    pub fn same_lattice(&self, other: &LatticeBasis) -> Result<bool> {
        Ok(self.canonical()? == other.canonical()?)
    }
}

impl CanonicalBasis {
    pub fn dim(&self) -> usize {
        self.r.len()
    }

    pub fn to_lattice(&self) -> LatticeBasis {
        LatticeBasis {
            basis: self.basis.clone(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.basis
            .entries()
            .all(|(i, j, x)| i == j || x.is_exact_zero())
    }

    /// Membership by back substitution against the triangular basis.
    pub fn contains(&self, v: &[LaurentScalar]) -> Result<bool> {
        let n = self.dim();
        let mut v = v.to_vec();
        for j in (0..n).rev() {
            let x = &v[j];
            let rj = self.r[j];
            if let Some(low) = x.min_exponent() {
                if low < rj {
                    return Ok(false);
                }
            } else if x.is_exact_zero() {
                continue;
            }
            if let Some(p) = x.precision() {
                if p < rj {
                    return Err(Error::PrecisionExhausted);
                }
            }
            let a = x.shift(-rj);
            for (i, vi) in v.iter_mut().enumerate().take(j + 1) {
                *vi = &*vi - &(&a * self.basis.get(i, j));
            }
        }
        Ok(true)
    }

    pub fn contains_lattice(&self, other: &LatticeBasis) -> Result<bool> {
        for col in other.basis.columns() {
            if !self.contains(&col)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact inverse of the triangular basis matrix.
    pub fn inverse(&self) -> LaurentMatrix {
        let n = self.dim();
        let mut w = LaurentMatrix::zero(n);
        for j in 0..n {
            w.set(j, j, LaurentScalar::pi_pow(-self.r[j]));
            for i in (0..j).rev() {
                let mut acc = LaurentScalar::zero();
                for k in i + 1..=j {
                    acc = &acc + &(self.basis.get(i, k) * w.get(k, j));
                }
                w.set(i, j, -(&acc * &LaurentScalar::pi_pow(-self.r[i])));
            }
        }
        w
    }
}

fn min_valuation_bound(m: &LaurentMatrix) -> Option<i64> {
    m.entries()
        .filter_map(|(_, _, x)| x.valuation_lower_bound())
        .min()
}

/// Reduce a generating set to the canonical triangular basis.
///
/// All work happens modulo `pi^M V_A` where `M` is chosen with
/// `pi^M V_A` inside the lattice, so unit inverses only need finitely many
/// terms and the result is exact.
pub fn canonical_basis(lattice: &LatticeBasis) -> Result<CanonicalBasis> {
    let b = &lattice.basis;
    let n = b.dim();
    let vdet = b.det().valuation()?.ok_or(Error::Singular)?;
    let adj = b.adjugate();
    let vadj = if n == 1 {
        0
    } else {
        min_valuation_bound(&adj).ok_or(Error::Singular)?
    };
    let big_m = vdet - vadj;
    for (_, _, x) in b.entries() {
        if let Some(p) = x.precision() {
            if p <= big_m {
                return Err(Error::PrecisionExhausted);
            }
        }
    }
    let cut = |x: &LaurentScalar| x.polynomial_below(big_m);
    let mut remaining: Vec<Vec<LaurentScalar>> = b
        .columns()
        .into_iter()
        .map(|c| c.iter().map(cut).collect())
        .collect();
    let vmin = min_valuation_bound(b).unwrap_or(big_m).min(big_m);
    let mut pivots: Vec<Option<Vec<LaurentScalar>>> = vec![None; n];
    let mut r = vec![0i64; n];
    for i in (0..n).rev() {
        let best = remaining
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c[i].min_exponent().map(|v| (v, k)))
            .min();
        let Some((v, k)) = best else {
            let mut e = vec![LaurentScalar::zero(); n];
            e[i] = LaurentScalar::pi_pow(big_m);
            pivots[i] = Some(e);
            r[i] = big_m;
            continue;
        };
        let p = remaining.swap_remove(k);
        let inv = p[i].inverse_to(big_m - vmin - v)?;
        for col in remaining.iter_mut() {
            if col[i].has_no_terms() {
                continue;
            }
            let f = (&col[i] * &inv).polynomial_below(big_m - vmin);
            for (x, y) in col.iter_mut().zip(&p) {
                *x = cut(&(&*x - &(&f * y)));
            }
        }
        // pi^M e_i is in the lattice: pi^M / p_i * p has row i equal to pi^M
        let f = (&LaurentScalar::pi_pow(big_m) * &inv).polynomial_below(big_m - vmin);
        let extra: Vec<LaurentScalar> = p.iter().map(|y| cut(&(&f * y))).collect();
        if extra.iter().any(|x| !x.has_no_terms()) {
            remaining.push(extra);
        }
        let unit = (&LaurentScalar::pi_pow(v) * &inv).polynomial_below(big_m - vmin);
        let mut z: Vec<LaurentScalar> = p.iter().map(|y| cut(&(&unit * y))).collect();
        z[i] = LaurentScalar::pi_pow(v);
        pivots[i] = Some(z);
        r[i] = v;
    }
    let mut cols: Vec<Vec<LaurentScalar>> = pivots.into_iter().map(|c| c.expect("pivot")).collect();
    for j in 0..n {
        for i in (0..j).rev() {
            let high = cols[j][i].part_from(r[i]);
            if high.has_no_terms() {
                continue;
            }
            let f = high.shift(-r[i]);
            let zi = cols[i].clone();
            for (h, y) in zi.iter().enumerate().take(i + 1) {
                cols[j][h] = &cols[j][h] - &(&f * y);
            }
        }
    }
    if r.iter().sum::<i64>() != vdet {
        return Err(Error::Singular);
    }
    Ok(CanonicalBasis {
        basis: LaurentMatrix::from_columns(&cols),
        r,
    })
}

/// `L* = {v : <v, L> in A}` for the standard symplectic form.
pub fn dual(lattice: &LatticeBasis) -> Result<LatticeBasis> {
    let n = lattice.dim();
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter("dual needs even dimension".into()));
    }
    let z = lattice.canonical()?;
    let j = symplectic_gram(n / 2);
    Ok(LatticeBasis {
        basis: &j * &z.inverse().transpose(),
    })
}

/// Whether the lattices `pi^a L` and `pi^b L*` form a chain.
pub fn is_symplectic(lattice: &LatticeBasis) -> Result<bool> {
    let z = lattice.canonical()?;
    let zd = dual(lattice)?.canonical()?;
    // pi^c L* contains L iff c <= c_max; pi^c L* is inside L iff c >= c_min
    let c_max = min_valuation_bound(&(&zd.inverse() * &z.basis)).ok_or(Error::Singular)?;
    let c_min = -min_valuation_bound(&(&z.inverse() * &zd.basis)).ok_or(Error::Singular)?;
    Ok(c_min <= c_max + 1)
}

/// `N L` inside `L`.
pub fn stabilizes(n: &LaurentMatrix, lattice: &LatticeBasis) -> Result<bool> {
    let z = lattice.canonical()?;
    for col in z.basis.columns() {
        if !z.contains(&n.mul_vec(&col))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `v(a_ji) + r_i >= r_j` for every nonzero entry.
pub fn stabilizes_diagonal(n: &LaurentMatrix, lattice: &DiagonalLattice) -> Result<bool> {
    for (j, i, a) in n.entries() {
        if let Some(v) = a.valuation()? {
            if v + lattice.r[i] < lattice.r[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::q;

    fn mono(c: i64, e: i64) -> LaurentScalar {
        LaurentScalar::monomial(q(c), e)
    }

    fn zero() -> LaurentScalar {
        LaurentScalar::zero()
    }

    #[test]
    fn diagonal_is_already_canonical() {
        let l = DiagonalLattice::new(vec![2, -1]).to_basis();
        let c = l.canonical().unwrap();
        assert_eq!(c.r, vec![2, -1]);
        assert!(c.is_diagonal());
    }

    #[test]
    fn low_degree_term_survives() {
        let b =
            LaurentMatrix::from_columns(&[vec![mono(1, 0), zero()], vec![mono(1, -1), mono(1, 1)]]);
        let c = LatticeBasis::new(b).canonical().unwrap();
        assert_eq!(c.r, vec![0, 1]);
        assert_eq!(*c.basis.get(0, 1), mono(1, -1));
    }

    #[test]
    fn high_degree_term_is_reduced() {
        let b =
            LaurentMatrix::from_columns(&[vec![mono(1, 0), zero()], vec![mono(1, 0), mono(1, 1)]]);
        let c = LatticeBasis::new(b).canonical().unwrap();
        assert_eq!(c.r, vec![0, 1]);
        assert!(c.is_diagonal());
    }

    #[test]
    fn unit_pivots_are_normalized() {
        // columns (1+pi) e_1 + e_2 and pi e_2
        let b = LaurentMatrix::from_columns(&[
            vec![
                LaurentScalar::from_terms(vec![(0, q(1)), (1, q(1))], None),
                mono(1, 0),
            ],
            vec![zero(), mono(1, 1)],
        ]);
        let c = LatticeBasis::new(b.clone()).canonical().unwrap();
        assert_eq!(c.r.iter().sum::<i64>(), 1);
        assert!(c.contains_lattice(&LatticeBasis::new(b.clone())).unwrap());
        let back = c.to_lattice().canonical().unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn valuations() {
        assert_eq!(LatticeBasis::standard(3).valuation().unwrap(), 0);
        assert_eq!(
            LatticeBasis::standard(3).scale_pi(1).valuation().unwrap(),
            3
        );
        assert_eq!(
            DiagonalLattice::new(vec![1, -3, 4])
                .to_basis()
                .valuation()
                .unwrap(),
            2
        );
    }

    #[test]
    fn dual_of_diagonal() {
        let l = DiagonalLattice::new(vec![0, -1, 0, 1]);
        let d = dual(&l.to_basis()).unwrap().canonical().unwrap();
        assert_eq!(d.r, l.symplectic_dual().r);
        assert_eq!(d.r, vec![0, -1, 0, 1]);
        let std = LatticeBasis::standard(4);
        assert!(dual(&std).unwrap().same_lattice(&std).unwrap());
    }

    #[test]
    fn symplectic_test() {
        assert!(is_symplectic(&LatticeBasis::standard(4)).unwrap());
        assert!(is_symplectic(&DiagonalLattice::new(vec![0, -1, 0, 1]).to_basis()).unwrap());
        assert!(!is_symplectic(&DiagonalLattice::new(vec![5, 0, 0, 0]).to_basis()).unwrap());
    }
}
