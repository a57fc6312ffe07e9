use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::chains::{enumerate_chains, enumerate_sigmas, ParahoricTypeA};
use super::intersection::enumerate_intersection_matrices;
use super::window::{check_coprime, enumerate_r, window_cells, WindowVector};
use crate::combinatorics::{binomial, gcd, multinomial, Composition};
use crate::error::{invalid, Result};

/// `s^{-1} prod_i binom(s + p_i - 1, p_i)` over the cyclic gaps of `I`.
pub fn euler_sl(n: usize, s: i64, parahoric: &ParahoricTypeA) -> Result<BigUint> {
    check_coprime(n, s)?;
    if parahoric.n != n {
        return invalid("type set belongs to a different rank");
    }
    let prod = parahoric
        .gaps()
        .into_iter()
        .map(|p| binomial(s as u64 + p as u64 - 1, p as i64))
        .fold(BigUint::one(), |acc, x| acc * x);
    let (q, r) = prod.div_rem(&BigUint::from(s as u64));
    debug_assert!(r.is_zero(), "product is divisible by s");
    Ok(q)
}

/// Number of torus-fixed lattice chains of the given type.
pub fn euler_sl_oracle(n: usize, s: i64, parahoric: &ParahoricTypeA) -> Result<BigUint> {
    check_coprime(n, s)?;
    let (m, j) = parahoric.to_levels();
    Ok(BigUint::from(enumerate_chains(n, s, &j, m)?.len()))
}

/// Sum over base vectors of the number of intersection matrices with the
/// base's cell sizes as column sums.
pub fn euler_sl_fiber_sum(n: usize, s: i64, parahoric: &ParahoricTypeA) -> Result<BigUint> {
    check_coprime(n, s)?;
    let (m, j) = parahoric.to_levels();
    let mut d = vec![0];
    d.extend_from_slice(&j);
    let mut total = BigUint::zero();
    for r in enumerate_r(n, s, m)? {
        let b = window_cells(&r)?.cells.parts;
        total += enumerate_intersection_matrices(&d, s as usize, Some(&b)).len();
    }
    Ok(total)
}

/// Full flags: `sum_r n! / prod_k b_k!`.
pub fn euler_sl_full_flag_fibers(n: usize, s: i64) -> Result<BigUint> {
    check_coprime(n, s)?;
    let mut total = BigUint::zero();
    for r in enumerate_r(n, s, 0)? {
        total += multinomial(&window_cells(&r)?.cells.parts);
    }
    Ok(total)
}

/// Smallest `s > t` coprime to `n`.
pub fn default_springer_s(t: usize, n: usize) -> i64 {
    let mut s = t as i64 + 1;
    while gcd(s, n as i64) != 1 {
        s += 1;
    }
    s
}

fn springer_setup_sl(
    parts: &[usize],
    i_set: Option<&[usize]>,
    s: Option<i64>,
) -> Result<(i64, Vec<usize>, Vec<usize>)> {
    if parts.is_empty() || parts.contains(&0) {
        return invalid(format!("partition {parts:?} must have positive parts"));
    }
    let n: usize = parts.iter().sum();
    let t = parts.len();
    let s = match s {
        Some(s) => {
            if s <= t as i64 || gcd(s, n as i64) != 1 {
                return invalid(format!("s={s} must exceed {t} and be coprime to n={n}"));
            }
            s
        }
        None => default_springer_s(t, n),
    };
    let mut d = vec![0];
    match i_set {
        Some(set) => {
            let mut set = set.to_vec();
            set.sort_unstable();
            set.dedup();
            if set.iter().any(|&i| i == 0 || i >= n) {
                return invalid(format!(
                    "type set {set:?} must lie in [1, {}]",
                    n.saturating_sub(1)
                ));
            }
            d.extend(set);
        }
        None => d.extend(1..n),
    }
    d.push(n);
    let mut b = parts.to_vec();
    b.resize(s as usize, 0);
    Ok((s, d, b))
}

/// Euler characteristic of the partial flag variety of type `I` fixed by a
/// nilpotent with Jordan type `parts`. `i_set = None` means full flags.
pub fn springer_euler_sl(
    parts: &[usize],
    i_set: Option<&[usize]>,
    s: Option<i64>,
) -> Result<BigUint> {
    let (s, d, b) = springer_setup_sl(parts, i_set, s)?;
    Ok(BigUint::from(
        enumerate_intersection_matrices(&d, s as usize, Some(&b)).len(),
    ))
}

/// The window vector of valuation 0 whose cells are a rotation of `parts`
/// padded with zeros.
pub fn springer_base_window_sl(parts: &[usize], s: Option<i64>) -> Result<WindowVector> {
    let (s, _, b) = springer_setup_sl(parts, None, s)?;
    let target = Composition::new(b);
    let n: usize = parts.iter().sum();
    for r in enumerate_r(n, s, 0)? {
        if window_cells(&r)?.cells.is_rotation_of(&target) {
            return Ok(r);
        }
    }
    invalid(format!("no window vector has cells {:?}", target.parts))
}

/// Valid step assignments over the base window vector, found by brute force.
pub fn springer_euler_sl_oracle(
    parts: &[usize],
    i_set: Option<&[usize]>,
    s: Option<i64>,
) -> Result<BigUint> {
    let (s, d, _) = springer_setup_sl(parts, i_set, s)?;
    let base = springer_base_window_sl(parts, Some(s))?;
    Ok(BigUint::from(enumerate_sigmas(&base, &d[1..]).len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn formula_values() {
        assert_eq!(euler_sl(3, 2, &ParahoricTypeA::full(3)).unwrap(), big(4));
        assert_eq!(
            euler_sl(3, 2, &ParahoricTypeA::new(3, vec![0]).unwrap()).unwrap(),
            big(2)
        );
        assert_eq!(
            euler_sl(3, 2, &ParahoricTypeA::new(3, vec![0, 1]).unwrap()).unwrap(),
            big(3)
        );
        assert!(euler_sl(4, 2, &ParahoricTypeA::full(4)).is_err());
    }

    #[test]
    fn oracle_values() {
        assert_eq!(
            euler_sl_oracle(3, 2, &ParahoricTypeA::full(3)).unwrap(),
            big(4)
        );
        assert_eq!(
            euler_sl_oracle(3, 2, &ParahoricTypeA::new(3, vec![0, 1]).unwrap()).unwrap(),
            big(3)
        );
        assert_eq!(
            euler_sl_fiber_sum(3, 2, &ParahoricTypeA::full(3)).unwrap(),
            big(4)
        );
        assert_eq!(euler_sl_full_flag_fibers(3, 2).unwrap(), big(4));
    }

    #[test]
    fn springer_values() {
        assert_eq!(springer_euler_sl(&[2, 1], None, None).unwrap(), big(3));
        assert_eq!(
            springer_euler_sl(&[2, 1], Some(&[1]), None).unwrap(),
            big(2)
        );
        assert_eq!(springer_euler_sl(&[1, 1, 1], None, None).unwrap(), big(6));
        assert_eq!(springer_euler_sl(&[3], None, None).unwrap(), big(1));
        assert!(springer_euler_sl(&[2, 0], None, None).is_err());
        assert_eq!(
            springer_euler_sl_oracle(&[2, 1], None, None).unwrap(),
            big(3)
        );
        assert_eq!(
            springer_euler_sl_oracle(&[2, 2, 1], Some(&[2]), None).unwrap(),
            springer_euler_sl(&[2, 2, 1], Some(&[2]), None).unwrap()
        );
    }
}
