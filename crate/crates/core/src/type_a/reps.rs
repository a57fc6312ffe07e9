use num_traits::Zero;

use crate::combinatorics::gcd;
use crate::error::{invalid, Result};
use crate::lattice::NuAction;
use crate::laurent::{LaurentMatrix, LaurentScalar, Q};

/// `s > 0`, `gcd(s, n) = 1`, `b != 0`. The residue-characteristic conditions
/// hold automatically over the rationals.
pub fn admissible_sl(n: usize, s: i64, b: &Q) -> Result<()> {
    if n == 0 {
        return invalid("n must be positive");
    }
    if s <= 0 {
        return invalid(format!("s must be positive, got {s}"));
    }
    if gcd(s, n as i64) != 1 {
        return invalid(format!("gcd(s,n) != 1 for n={n}, s={s}"));
    }
    if b.is_zero() {
        return invalid("b must be nonzero");
    }
    Ok(())
}

/// Cyclic shift with `a_{i,i+1} = 1` and corner `a_{n,1} = b pi^s`.
pub fn standard_rep_sl(n: usize, s: i64, b: &Q) -> Result<LaurentMatrix> {
    admissible_sl(n, s, b)?;
    let mut m = LaurentMatrix::zero(n);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, LaurentScalar::one());
    }
    let corner = &m.get(n - 1, 0).clone() + &LaurentScalar::monomial(b.clone(), s);
    m.set(n - 1, 0, corner);
    Ok(m)
}

/// `nu(m, i) = n m - i s` for `i = 1..n`.
pub fn nu_sl(n: usize, s: i64) -> NuAction {
    NuAction::new(n as i64, (1..=n as i64).map(|i| -i * s).collect())
}

/// Companion form with `a_{i,i+1} = 1` and first column `-c_i`, whose
/// characteristic polynomial is `mu^n + sum_i c_i mu^{n-i}`.
pub fn companion_rep(c: &[LaurentScalar]) -> LaurentMatrix {
    let n = c.len();
    let mut m = LaurentMatrix::zero(n);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, LaurentScalar::one());
    }
    for (i, ci) in c.iter().enumerate() {
        let entry = m.get(i, 0) - ci;
        m.set(i, 0, entry);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::verify_almost_commute;
    use crate::laurent::{char_poly, q, CharPoly};

    #[test]
    fn char_poly_of_standard_rep() {
        let m = standard_rep_sl(3, 2, &q(1)).unwrap();
        assert_eq!(char_poly(&m), CharPoly::binomial_form(3, &q(1), 2));
        assert!(verify_almost_commute(&m, &nu_sl(3, 2), 2));
        assert!(!verify_almost_commute(
            &m,
            &NuAction::new(3, vec![-1, -4, -6]),
            2
        ));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(standard_rep_sl(4, 2, &q(1)).is_err());
        assert!(standard_rep_sl(3, 0, &q(1)).is_err());
        assert!(standard_rep_sl(3, 2, &q(0)).is_err());
    }

    #[test]
    fn corner_and_trace() {
        let m = standard_rep_sl(2, 1, &q(5)).unwrap();
        assert!(m.is_trace_zero());
        assert_eq!(*m.get(1, 0), LaurentScalar::monomial(q(5), 1));
    }

    #[test]
    fn companion_char_poly() {
        let c = vec![
            LaurentScalar::monomial(q(2), 1),
            LaurentScalar::zero(),
            LaurentScalar::monomial(q(-3), 3),
        ];
        let m = companion_rep(&c);
        assert_eq!(char_poly(&m), CharPoly::monic(c));
    }
}
