use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::combinatorics::{binomial, Compositions};

/// Nonnegative integer matrix; row `i` sums to `d_{i+1} - d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntersectionMatrix {
    pub rows: Vec<Vec<usize>>,
}

impl IntersectionMatrix {
    pub fn row_sums(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        let t = self.rows.first().map_or(0, Vec::len);
        (0..t)
            .map(|k| self.rows.iter().map(|r| r[k]).sum())
            .collect()
    }
}

fn increments(d: &[usize]) -> Vec<usize> {
    d.windows(2).map(|w| w[1] - w[0]).collect()
}

/// `prod_i binom(t + d_i - d_{i-1} - 1, d_i - d_{i-1})`.
pub fn count_intersection_matrices(d: &[usize], t: usize) -> BigUint {
    increments(d)
        .into_iter()
        .map(|p| binomial((t + p) as u64 - 1, p as i64))
        .fold(BigUint::one(), |acc, x| acc * x)
}

/// Row-by-row enumeration; with `col_sums` only matrices with those column
/// sums are kept.
pub fn enumerate_intersection_matrices(
    d: &[usize],
    t: usize,
    col_sums: Option<&[usize]>,
) -> Vec<IntersectionMatrix> {
    let incs = increments(d);
    let mut out = Vec::new();
    let mut rows = Vec::with_capacity(incs.len());
    let cap = col_sums.map(|c| c.to_vec());
    fill(&incs, t, cap, &mut rows, &mut out);
    out
}

fn fill(
    incs: &[usize],
    t: usize,
    cap: Option<Vec<usize>>,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<IntersectionMatrix>,
) {
    let i = rows.len();
    if i == incs.len() {
        if cap.as_ref().is_none_or(|c| c.iter().all(|&x| x == 0)) {
            out.push(IntersectionMatrix { rows: rows.clone() });
        }
        return;
    }
    for row in Compositions::new(t, incs[i]) {
        let next_cap = match &cap {
            Some(c) => {
                if row.iter().zip(c).any(|(x, y)| x > y) {
                    continue;
                }
                Some(c.iter().zip(&row).map(|(y, x)| y - x).collect())
            }
            None => None,
        };
        rows.push(row);
        fill(incs, t, next_cap, rows, out);
        rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filtered_count() {
        let qs = enumerate_intersection_matrices(&[0, 1, 3], 4, Some(&[2, 1, 0, 0]));
        assert_eq!(qs.len(), 2);
        for q in &qs {
            assert_eq!(q.col_sums(), vec![2, 1, 0, 0]);
            assert_eq!(q.row_sums(), vec![1, 2]);
        }
    }

    #[test]
    fn unfiltered_counts() {
        assert_eq!(
            enumerate_intersection_matrices(&[0, 1, 2, 3], 2, None).len(),
            8
        );
        assert_eq!(
            count_intersection_matrices(&[0, 1, 2, 3], 2),
            BigUint::from(8u32)
        );
        assert_eq!(enumerate_intersection_matrices(&[0, 3], 3, None).len(), 10);
    }
}
