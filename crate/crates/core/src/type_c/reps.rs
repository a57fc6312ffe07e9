use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::gcd;
use crate::error::{invalid, Result};
use crate::lattice::NuAction;
use crate::laurent::{LaurentMatrix, LaurentScalar, Q};

/// Which of the two admissibility regimes a product `prod_i (mu^d - b_i pi^s)`
/// falls into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpAdmissibility {
    pub regular_semisimple: bool,
    pub nil_elliptic: bool,
    pub reasons: Vec<String>,
}

pub fn admissible_sp(r: usize, d: usize, s: i64, b: &[Q]) -> SpAdmissibility {
    let mut reasons = Vec::new();
    if r == 0 || d == 0 {
        reasons.push("need r >= 1 and d >= 1".to_string());
    }
    if b.len() != r {
        reasons.push(format!("expected {r} coefficients b_i, got {}", b.len()));
    }
    if b.iter().any(Zero::is_zero) {
        reasons.push("every b_i must be nonzero".to_string());
    }
    let distinct: BTreeSet<&Q> = b.iter().collect();
    if distinct.len() != b.len() {
        reasons.push("the b_i must be distinct".to_string());
    }
    if s == 0 || gcd(s, d as i64) != 1 {
        reasons.push(format!("gcd(s,d) != 1 for s={s}, d={d}"));
    }
    let regular_semisimple = reasons.is_empty();
    if s <= 0 {
        reasons.push(format!("nil-elliptic needs s > 0, got {s}"));
    } else if gcd(s, 2 * d as i64) != 1 {
        reasons.push(format!("gcd(s,2d) != 1 for s={s}, d={d}"));
    }
    SpAdmissibility {
        regular_semisimple,
        nil_elliptic: reasons.is_empty(),
        reasons,
    }
}

/// Representative in `sp_{2n}` whose characteristic polynomial is `h(mu^2)`,
/// where `h = mu^n + sum_i h_i mu^{n-i}` and `h_i` already carries its power
/// of `pi`.
pub fn symplectic_rep_from_h(h: &[LaurentScalar]) -> LaurentMatrix {
    let n = h.len();
    let mut m = LaurentMatrix::zero(2 * n);
    for j in 0..n.saturating_sub(1) {
        m.set(j + 1, j, LaurentScalar::one());
        m.set(n + j, n + j + 1, LaurentScalar::from_int(-1));
    }
    m.set(0, n, LaurentScalar::one());
    for (j, c) in h.iter().enumerate() {
        // 1-based column j+1 carries sign (-1)^{j+1}
        let entry = if j % 2 == 0 { -c } else { c.clone() };
        m.set(n + j, j, entry);
    }
    m
}

/// The representative with `h = mu^n - b pi^s`; needs `s > 0`,
/// `gcd(s, 2n) = 1` and `b != 0`.
pub fn standard_rep_sp(n: usize, s: i64, b: &Q) -> Result<LaurentMatrix> {
    let report = admissible_sp(1, n, s, std::slice::from_ref(b));
    if !report.nil_elliptic {
        return invalid(report.reasons.join("; "));
    }
    let mut h = vec![LaurentScalar::zero(); n];
    h[n - 1] = LaurentScalar::monomial(-b.clone(), s);
    Ok(symplectic_rep_from_h(&h))
}

/// `nu(m, i) = 2nm + is` and `nu(m, n+i) = 2nm + (1-i)s` for `i = 1..n`.
pub fn nu_sp(n: usize, s: i64) -> NuAction {
    let mut offsets: Vec<i64> = (1..=n as i64).map(|i| i * s).collect();
    offsets.extend((1..=n as i64).map(|i| (1 - i) * s));
    NuAction::new(2 * n as i64, offsets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::verify_almost_commute;
    use crate::laurent::{char_poly, q, CharPoly};

    #[test]
    fn small_rep_is_symplectic() {
        for (n, s) in [(1, 1), (1, 3), (2, 3), (3, 5), (3, 7)] {
            let m = standard_rep_sp(n, s, &q(1)).unwrap();
            assert!(m.is_symplectic_algebra_element(), "n={n} s={s}");
            let h = CharPoly::binomial_form(n, &q(1), s);
            assert_eq!(char_poly(&m), h.substitute_square(), "n={n} s={s}");
            assert!(verify_almost_commute(&m, &nu_sp(n, s), s));
        }
    }

    #[test]
    fn corner_sign() {
        let m = standard_rep_sp(2, 3, &q(1)).unwrap();
        assert_eq!(*m.get(3, 1), LaurentScalar::monomial(q(-1), 3));
        let m = standard_rep_sp(3, 5, &q(1)).unwrap();
        assert_eq!(*m.get(5, 2), LaurentScalar::monomial(q(1), 5));
    }

    #[test]
    fn admissibility_reports() {
        let a = admissible_sp(1, 2, 3, &[q(1)]);
        assert!(a.regular_semisimple && a.nil_elliptic);
        let a = admissible_sp(1, 2, 2, &[q(1)]);
        assert!(!a.regular_semisimple && !a.nil_elliptic);
        let a = admissible_sp(2, 1, 1, &[q(1), q(1)]);
        assert!(!a.regular_semisimple);
        let a = admissible_sp(1, 1, 2, &[q(1)]);
        assert!(a.regular_semisimple && !a.nil_elliptic);
        assert!(standard_rep_sp(2, 4, &q(1)).is_err());
    }
}
