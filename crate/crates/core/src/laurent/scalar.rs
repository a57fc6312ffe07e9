use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Laurent series in `pi` with rational coefficients.
///
/// `precision == None` means the stored terms are the whole series. Otherwise
/// the series is only known modulo `pi^precision`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    coeffs: BTreeMap<i64, Q>,
    precision: Option<i64>,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl LaurentScalar {
    pub fn zero() -> Self {
        LaurentScalar {
            coeffs: BTreeMap::new(),
            precision: None,
        }
    }

    pub fn one() -> Self {
        Self::monomial(q(1), 0)
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(q(c), 0)
    }

    pub fn monomial(c: Q, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentScalar {
            coeffs,
            precision: None,
        }
    }

    /// `pi^exp`.
    pub fn pi_pow(exp: i64) -> Self {
        Self::monomial(q(1), exp)
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(terms: I, precision: Option<i64>) -> Self {
        let mut coeffs: BTreeMap<i64, Q> = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert_with(Q::zero) += c;
        }
        let mut out = LaurentScalar { coeffs, precision };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        let p = self.precision;
        self.coeffs
            .retain(|e, c| !c.is_zero() && p.is_none_or(|p| *e < p));
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// No stored terms. For a truncated series this does not mean zero.
    pub fn has_no_terms(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.precision.is_none()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Q {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `Some(v)` for a nonzero series, `None` for exact zero, and an error when
    /// every known term vanishes but the tail is unknown.
    pub fn valuation(&self) -> Result<Option<i64>> {
        match (self.min_exponent(), self.precision) {
            (Some(v), _) => Ok(Some(v)),
            (None, None) => Ok(None),
            (None, Some(_)) => Err(Error::PrecisionExhausted),
        }
    }

    /// A value the true valuation is known to be at least. `None` is infinity.
    pub fn valuation_lower_bound(&self) -> Option<i64> {
        self.min_exponent().or(self.precision)
    }

    pub fn is_monomial(&self) -> bool {
        self.is_exact() && self.coeffs.len() == 1
    }

    /// Forget everything at or above `pi^prec`.
    pub fn truncate(&self, prec: i64) -> Self {
        let mut out = self.clone();
        out.precision = min_opt(out.precision, Some(prec));
        out.normalize();
        out
    }

    /// The stored terms below `pi^bound`, as an exact Laurent polynomial.
    pub fn polynomial_below(&self, bound: i64) -> Self {
        LaurentScalar {
            coeffs: self
                .coeffs
                .range(..bound)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            precision: None,
        }
    }

    /// The stored terms at or above `pi^bound`, keeping the precision.
    pub fn part_from(&self, bound: i64) -> Self {
        LaurentScalar {
            coeffs: self
                .coeffs
                .range(bound..)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            precision: self.precision,
        }
    }

    /// Multiply by `pi^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentScalar {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
            precision: self.precision.map(|p| p + k),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return LaurentScalar {
                coeffs: BTreeMap::new(),
                precision: self.precision,
            };
        }
        LaurentScalar {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
            precision: self.precision,
        }
    }

    /// Inverse, accurate modulo `pi^abs_prec`. Monomials invert exactly.
    pub fn inverse_to(&self, abs_prec: i64) -> Result<Self> {
        let v = match self.valuation()? {
            Some(v) => v,
            None => return Err(Error::Singular),
        };
        if self.is_monomial() {
            let c = self.coeff(v);
            return Ok(Self::monomial(c.recip(), -v));
        }
        // u = self * pi^-v = u0 + u1 pi + ..., known to relative order `rel`
        let input_rel = self.precision.map(|p| p - v);
        let want_rel = abs_prec + v;
        let rel = match input_rel {
            Some(r) => r.min(want_rel),
            None => want_rel,
        };
        if rel <= 0 {
            return Ok(LaurentScalar {
                coeffs: BTreeMap::new(),
                precision: Some(-v + rel),
            });
        }
        let u0 = self.coeff(v);
        let u0_inv = u0.recip();
        let mut w: Vec<Q> = Vec::with_capacity(rel as usize);
        for k in 0..rel {
            if k == 0 {
                w.push(u0_inv.clone());
                continue;
            }
            let mut acc = Q::zero();
            for j in 1..=k {
                let uj = self.coeff(v + j);
                if !uj.is_zero() {
                    acc += uj * &w[(k - j) as usize];
                }
            }
            w.push(-acc * &u0_inv);
        }
        Ok(LaurentScalar::from_terms(
            w.into_iter().enumerate().map(|(k, c)| (k as i64 - v, c)),
            Some(-v + rel),
        ))
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(Q::zero);
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        let mut out = LaurentScalar {
            coeffs,
            precision: min_opt(self.precision, other.precision),
        };
        out.normalize();
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::zero();
        }
        let p1 = self
            .precision
            .map(|p| p + other.valuation_lower_bound().expect("nonzero operand"));
        let p2 = other
            .precision
            .map(|p| p + self.valuation_lower_bound().expect("nonzero operand"));
        let precision = min_opt(p1, p2);
        let mut coeffs: BTreeMap<i64, Q> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = e1 + e2;
                if precision.is_none_or(|p| e < p) {
                    *coeffs.entry(e).or_insert_with(Q::zero) += c1 * c2;
                }
            }
        }
        let mut out = LaurentScalar { coeffs, precision };
        out.normalize();
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        self.add_impl(rhs, false)
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        self.add_impl(rhs, true)
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        self.mul_impl(rhs)
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
            precision: self.precision,
        }
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: LaurentScalar) -> LaurentScalar {
        &self + &rhs
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: LaurentScalar) -> LaurentScalar {
        &self - &rhs
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

impl Default for LaurentScalar {
    fn default() -> Self {
        Self::zero()
    }
}

/// Text form: `exp:num/den` terms joined by commas, `0` for exact zero, and
/// a trailing `|O(p)` for a truncated series.
impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            let body: Vec<String> = self
                .coeffs
                .iter()
                .map(|(e, c)| format!("{}:{}/{}", e, c.numer(), c.denom()))
                .collect();
            write!(f, "{}", body.join(","))?;
        }
        if let Some(p) = self.precision {
            write!(f, "|O({p})")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentScalar {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (body, precision) = match text.split_once('|') {
            Some((body, tail)) => {
                let inner = tail
                    .trim()
                    .strip_prefix("O(")
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("bad precision suffix in {text:?}")))?;
                let p = inner
                    .trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("{inner:?}: {e}")))?;
                (body.trim(), Some(p))
            }
            None => (text, None),
        };
        let mut terms = Vec::new();
        if body != "0" && !body.is_empty() {
            for term in body.split(',') {
                let (e, c) = term
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("term {term:?} lacks ':'")))?;
                let e = e
                    .trim()
                    .parse::<i64>()
                    .map_err(|err| Error::Parse(format!("{e:?}: {err}")))?;
                let c = c
                    .trim()
                    .parse::<Q>()
                    .map_err(|err| Error::Parse(format!("{c:?}: {err}")))?;
                terms.push((e, c));
            }
        }
        Ok(LaurentScalar::from_terms(terms, precision))
    }
}
