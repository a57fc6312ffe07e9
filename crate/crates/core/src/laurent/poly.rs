use std::fmt;

use num_bigint::BigInt;

use super::matrix::LaurentMatrix;
use super::scalar::{LaurentScalar, Q};
use crate::error::{Error, Result};

/// `sum_{i=0}^n c_i mu^{n-i}` with `c_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<LaurentScalar>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `mu^n + sum_i c_i mu^{n-i}` from `c_1..c_n`.
    pub fn monic(lower: Vec<LaurentScalar>) -> Self {
        let mut coeffs = vec![LaurentScalar::one()];
        coeffs.extend(lower);
        CharPoly { coeffs }
    }

    /// `mu^n - b pi^s`.
    pub fn binomial_form(n: usize, b: &Q, s: i64) -> Self {
        let mut lower = vec![LaurentScalar::zero(); n];
        lower[n - 1] = LaurentScalar::monomial(-b.clone(), s);
        Self::monic(lower)
    }

    /// `h(mu^2)` for `h = mu^d + sum_i c_i mu^{d-i}`.
    pub fn substitute_square(&self) -> Self {
        let d = self.degree();
        let mut coeffs = vec![LaurentScalar::zero(); 2 * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        CharPoly { coeffs }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_exact_zero() {
                continue;
            }
            let power = n - i;
            let mono = match power {
                0 => String::new(),
                1 => "mu".to_string(),
                p => format!("mu^{p}"),
            };
            if i == 0 {
                parts.push(mono);
            } else if mono.is_empty() {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({c})*{mono}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Characteristic polynomial `det(mu I - M)` by Berkowitz's division-free
/// recursion.
pub fn char_poly(m: &LaurentMatrix) -> CharPoly {
    let n = m.dim();
    let mut v = vec![LaurentScalar::one()];
    for r in 0..n {
        let a = m.get(r, r);
        // t = [1, -a, -R C, -R M C, ..., -R M^{r-1} C]
        let mut t = Vec::with_capacity(r + 2);
        t.push(LaurentScalar::one());
        t.push(-a);
        let mut col: Vec<LaurentScalar> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            let rc = (0..r).fold(LaurentScalar::zero(), |acc, j| {
                &acc + &(m.get(r, j) * &col[j])
            });
            t.push(-rc);
            if k + 1 < r {
                col = (0..r)
                    .map(|i| {
                        (0..r).fold(LaurentScalar::zero(), |acc, j| {
                            &acc + &(m.get(i, j) * &col[j])
                        })
                    })
                    .collect();
            }
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = LaurentScalar::zero();
            for (j, vj) in v.iter().enumerate() {
                if j <= i && i - j < t.len() {
                    acc = &acc + &(&t[i - j] * vj);
                }
            }
            next.push(acc);
        }
        v = next;
    }
    CharPoly { coeffs: v }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomogeneityIndex {
    /// Every nonzero `c_i` is a monomial of valuation `q * i`.
    Index(Q),
    /// All `c_i` with `i >= 1` vanish; any `q` works.
    AnyIndex,
    NotHomogeneous,
}

impl HomogeneityIndex {
    pub fn index(&self) -> Option<&Q> {
        match self {
            HomogeneityIndex::Index(q) => Some(q),
            _ => None,
        }
    }
}

/// Decide whether the polynomial is homogeneous in `mu` and `pi^q`.
///
/// Truncated coefficients cannot be certified as monomials, so they give an
/// error rather than a guess.
pub fn homogeneity_index(p: &CharPoly) -> Result<HomogeneityIndex> {
    let mut found: Option<Q> = None;
    for (i, c) in p.coeffs.iter().enumerate().skip(1) {
        if !c.is_exact() {
            return Err(Error::PrecisionExhausted);
        }
        if c.is_exact_zero() {
            continue;
        }
        if !c.is_monomial() {
            return Ok(HomogeneityIndex::NotHomogeneous);
        }
        let v = c.min_exponent().expect("monomial has a term");
        let qi = Q::new(BigInt::from(v), BigInt::from(i as i64));
        match &found {
            None => found = Some(qi),
            Some(q0) if *q0 == qi => {}
            Some(_) => return Ok(HomogeneityIndex::NotHomogeneous),
        }
    }
    Ok(match found {
        Some(q) => HomogeneityIndex::Index(q),
        None => HomogeneityIndex::AnyIndex,
    })
}

/// Valuations of the nonzero roots, with multiplicity, from the lower convex
/// hull of the points `(k, v(coefficient of mu^k))`. Zero roots are omitted.
pub fn root_valuations(p: &CharPoly) -> Result<Vec<Q>> {
    let n = p.degree();
    let mut points: Vec<(i64, i64)> = Vec::new();
    for k in 0..=n {
        let c = &p.coeffs[n - k];
        if let Some(v) = c.valuation()? {
            points.push((k as i64, v));
        }
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &points {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (pt.0 - x1) >= (pt.1 - y1) * (x2 - x1) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut out = Vec::new();
    for w in hull.windows(2) {
        let (x1, y1) = w[0];
        let (x2, y2) = w[1];
        let slope = Q::new(BigInt::from(y1 - y2), BigInt::from(x2 - x1));
        for _ in 0..(x2 - x1) {
            out.push(slope.clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenValuations {
    pub index: HomogeneityIndex,
    pub root_valuations: Vec<Q>,
    /// Every nonzero root has valuation equal to the index.
    pub consistent: bool,
}

/// Check that a homogeneous polynomial has all root valuations equal to its
/// index.
pub fn eigen_valuations(p: &CharPoly) -> Result<EigenValuations> {
    let index = homogeneity_index(p)?;
    let roots = root_valuations(p)?;
    let consistent = match &index {
        HomogeneityIndex::Index(q) => roots.iter().all(|r| r == q),
        HomogeneityIndex::AnyIndex => roots.is_empty(),
        HomogeneityIndex::NotHomogeneous => false,
    };
    Ok(EigenValuations {
        index,
        root_valuations: roots,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::scalar::q;

    fn mono(c: i64, e: i64) -> LaurentScalar {
        LaurentScalar::monomial(q(c), e)
    }

    fn frac(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    #[test]
    fn zero_matrix_char_poly() {
        let cp = char_poly(&LaurentMatrix::zero(2));
        assert_eq!(
            cp,
            CharPoly::monic(vec![LaurentScalar::zero(), LaurentScalar::zero()])
        );
    }

    #[test]
    fn homogeneity_examples() {
        let p = CharPoly::binomial_form(3, &q(1), 2);
        assert_eq!(
            homogeneity_index(&p).unwrap(),
            HomogeneityIndex::Index(frac(2, 3))
        );
        let p = CharPoly::monic(vec![
            LaurentScalar::zero(),
            mono(1, 1),
            LaurentScalar::zero(),
        ]);
        assert_eq!(
            homogeneity_index(&p).unwrap(),
            HomogeneityIndex::Index(frac(1, 2))
        );
        let p = CharPoly::monic(vec![mono(-1, 1), mono(-1, 1)]);
        assert_eq!(
            homogeneity_index(&p).unwrap(),
            HomogeneityIndex::NotHomogeneous
        );
        let p = CharPoly::monic(vec![LaurentScalar::zero(); 3]);
        assert_eq!(homogeneity_index(&p).unwrap(), HomogeneityIndex::AnyIndex);
        let p = CharPoly::monic(vec![mono(1, 1).truncate(4)]);
        assert!(homogeneity_index(&p).is_err());
    }

    #[test]
    fn newton_slopes() {
        let p = CharPoly::binomial_form(3, &q(1), 2);
        assert_eq!(root_valuations(&p).unwrap(), vec![frac(2, 3); 3]);
        let p = CharPoly::binomial_form(2, &q(1), 6);
        assert_eq!(root_valuations(&p).unwrap(), vec![q(3), q(3)]);
        let p = CharPoly::monic(vec![LaurentScalar::zero(); 4]);
        assert!(root_valuations(&p).unwrap().is_empty());
        let ev = eigen_valuations(&CharPoly::binomial_form(3, &q(1), 2)).unwrap();
        assert!(ev.consistent);
        // mu^2 - pi mu - pi
        let p = CharPoly::monic(vec![mono(-1, 1), mono(-1, 1)]);
        assert_eq!(root_valuations(&p).unwrap(), vec![frac(1, 2), frac(1, 2)]);
        // mu^2 - mu - pi^2
        let p = CharPoly::monic(vec![mono(-1, 0), mono(-1, 2)]);
        assert_eq!(root_valuations(&p).unwrap(), vec![q(2), q(0)]);
    }
}
