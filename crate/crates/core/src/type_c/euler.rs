use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::chains::{check_sp_levels, enumerate_e, enumerate_sp_chains, enumerate_sp_chains_from};
use super::game::{eta0_inverse, fiber_count};
use super::window::{check_sp_params, window_of_vertex, SpWindowVector};
use crate::combinatorics::{binomial, factorial, gcd};
use crate::error::{invalid, Result};
use crate::lattice::Partition;
use crate::type_a::{enumerate_intersection_matrices, euler_sl, ParahoricTypeA};

/// `j_i = m_{i+1} - m_i` with `m_0 = 0` and `m_{l+1} = n`.
pub fn sp_gaps(n: usize, j: &[usize]) -> Vec<usize> {
    let mut m = vec![0];
    m.extend_from_slice(j);
    m.push(n);
    m.windows(2).map(|w| w[1] - w[0]).collect()
}

/// `binom(t+j_0, t) binom(t+j_l, t) prod_{i=1}^{l-1} binom(s+j_i-1, j_i)`.
pub fn euler_sp(n: usize, s: i64, j: &[usize]) -> Result<BigUint> {
    check_sp_params(n, s)?;
    check_sp_levels(n, j)?;
    let t = ((s - 1) / 2) as u64;
    let g = sp_gaps(n, j);
    let l = g.len() - 1;
    let ends = binomial(t + g[0] as u64, t as i64) * binomial(t + g[l] as u64, t as i64);
    Ok(g[1..l]
        .iter()
        .map(|&x| binomial(s as u64 + x as u64 - 1, x as i64))
        .fold(ends, |acc, x| acc * x))
}

/// Number of monotone chains of symplectic window vectors.
pub fn euler_sp_oracle(n: usize, s: i64, j: &[usize]) -> Result<BigUint> {
    Ok(BigUint::from(enumerate_sp_chains(n, s, j)?.len()))
}

/// Number of vertex tuples on directed paths in the ball-wall graph.
pub fn euler_sp_paths(n: usize, s: i64, j: &[usize]) -> Result<BigUint> {
    Ok(BigUint::from(enumerate_e(n, s, j)?.len()))
}

/// `sum_Q fiber_count(Q)` over all intersection matrices with row sums
/// `j_0, ..., j_l` and `t + 1` columns.
pub fn euler_sp_fiber_sum(n: usize, s: i64, j: &[usize]) -> Result<BigUint> {
    check_sp_params(n, s)?;
    check_sp_levels(n, j)?;
    let t = ((s - 1) / 2) as usize;
    let mut d = vec![0];
    d.extend_from_slice(j);
    d.push(n);
    Ok(enumerate_intersection_matrices(&d, t + 1, None)
        .iter()
        .map(fiber_count)
        .sum())
}

/// `J + (2n - J)` without `2n`, as a type set in `[0, 2n-1]`.
pub fn sl_type_of(n: usize, j: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = j
        .iter()
        .copied()
        .chain(j.iter().map(|&m| 2 * n - m))
        .collect();
    out.retain(|&x| x != 2 * n);
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlComparison {
    pub sp: BigUint,
    pub sl: BigUint,
    pub sl_type: Vec<usize>,
    pub relation: Ordering,
    /// Equality is predicted exactly when `n == 1` or `s == 1`.
    pub expected_equal: bool,
}

impl SlComparison {
    pub fn holds(&self) -> bool {
        match self.relation {
            Ordering::Less => !self.expected_equal,
            Ordering::Equal => self.expected_equal,
            Ordering::Greater => false,
        }
    }
}

pub fn compare_with_sl(n: usize, s: i64, j: &[usize]) -> Result<SlComparison> {
    let sp = euler_sp(n, s, j)?;
    let sl_type = sl_type_of(n, j);
    let sl = euler_sl(2 * n, s, &ParahoricTypeA::new(2 * n, sl_type.clone())?)?;
    Ok(SlComparison {
        relation: sp.cmp(&sl),
        sp,
        sl,
        sl_type,
        expected_equal: n == 1 || s == 1,
    })
}

/// A nilpotent class in `sp_{2n}` with one block of size `2 n_0` and two
/// blocks of each size `n_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymplecticPartition {
    pub n0: usize,
    pub parts: Vec<usize>,
}

impl SymplecticPartition {
    pub fn new(n0: usize, mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return invalid(format!("parts {parts:?} must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if n0 + parts.iter().sum::<usize>() == 0 {
            return invalid("symplectic partition of 0");
        }
        Ok(SymplecticPartition { n0, parts })
    }

    pub fn n(&self) -> usize {
        self.n0 + self.parts.iter().sum::<usize>()
    }

    pub fn l(&self) -> usize {
        self.parts.len()
    }

    /// Block sizes `2 n_0, n_1, n_1, ..., n_l, n_l`.
    pub fn jordan_type(&self) -> Partition {
        let mut sizes = vec![2 * self.n0];
        for &p in &self.parts {
            sizes.push(p);
            sizes.push(p);
        }
        Partition::from_sizes(sizes)
    }

    /// `n! 2^{n_1 + ... + n_l} / (n_0! ... n_l!)`.
    pub fn full_flag_count(&self) -> BigUint {
        let mut den = factorial(self.n0 as u64);
        let mut twos = 0;
        for &p in &self.parts {
            den *= factorial(p as u64);
            twos += p;
        }
        (factorial(self.n() as u64) << twos) / den
    }
}

/// Every `(n_0; n_1 >= ... >= n_l)` with total `n`.
pub fn symplectic_partitions(n: usize) -> Vec<SymplecticPartition> {
    let mut out = Vec::new();
    for n0 in (0..=n).rev() {
        for parts in integer_partitions(n - n0) {
            out.push(SymplecticPartition { n0, parts });
        }
    }
    out
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            cur.push(x);
            rec(rest - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Smallest odd `s > 2l` coprime to `n`.
pub fn default_springer_s_sp(l: usize, n: usize) -> i64 {
    let mut s = 2 * l as i64 + 1;
    while gcd(s, n as i64) != 1 {
        s += 2;
    }
    s
}

fn springer_setup(
    sp: &SymplecticPartition,
    j: Option<&[usize]>,
    s: Option<i64>,
) -> Result<(i64, Vec<usize>, Vec<usize>)> {
    let n = sp.n();
    let l = sp.l();
    let s = match s {
        Some(s) => {
            if s <= 2 * l as i64 || s % 2 == 0 || gcd(s, n as i64) != 1 {
                return invalid(format!(
                    "s={s} must be odd, exceed {}, and be coprime to n={n}",
                    2 * l
                ));
            }
            s
        }
        None => default_springer_s_sp(l, n),
    };
    let mut levels = vec![0];
    match j {
        Some(set) => {
            let mut set = set.to_vec();
            set.sort_unstable();
            set.dedup();
            if set.is_empty() || set.iter().any(|&i| i == 0 || i > n) {
                return invalid(format!(
                    "type set {set:?} must be a nonempty subset of [1, {n}]"
                ));
            }
            levels.extend(set);
        }
        None => levels.extend(1..=n),
    }
    let t = ((s - 1) / 2) as usize;
    let mut a = vec![sp.n0];
    a.extend_from_slice(&sp.parts);
    a.resize(t + 1, 0);
    Ok((s, levels, a))
}

/// Euler characteristic of the isotropic flag variety of type `j` fixed by a
/// nilpotent of class `sp`: the fiber-count sum over intersection matrices
/// with column sums `(n_0, n_1, ..., n_l, 0, ...)`. `j = None` means full
/// flags.
pub fn springer_euler_sp(
    sp: &SymplecticPartition,
    j: Option<&[usize]>,
    s: Option<i64>,
) -> Result<BigUint> {
    let (_, levels, a) = springer_setup(sp, j, s)?;
    let mut d = vec![0];
    d.extend(levels);
    d.push(sp.n());
    Ok(enumerate_intersection_matrices(&d, a.len(), Some(&a))
        .iter()
        .map(fiber_count)
        .sum())
}

/// The marker-free window vector whose residue carries the nilpotent class.
pub fn springer_base_window(sp: &SymplecticPartition, s: Option<i64>) -> Result<SpWindowVector> {
    let (s, _, a) = springer_setup(sp, None, s)?;
    window_of_vertex(&eta0_inverse(s, &a)?)
}

/// Chain count over the base window vector, independent of the matrix sum.
pub fn springer_euler_sp_oracle(
    sp: &SymplecticPartition,
    j: Option<&[usize]>,
    s: Option<i64>,
) -> Result<BigUint> {
    let (s, levels, _) = springer_setup(sp, j, s)?;
    let base = springer_base_window(sp, Some(s))?;
    Ok(BigUint::from(
        enumerate_sp_chains_from(&base, &levels)?.len(),
    ))
}

/// `2^n n!`.
pub fn hyperoctahedral_order(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    factorial(n as u64) << n
}
