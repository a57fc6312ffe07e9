use std::collections::BTreeSet;

use num_bigint::BigUint;

use super::window::{check_sp_params, SpVertex};
use crate::combinatorics::{binomial, subsets_of_size, Compositions};
use crate::error::{invalid, Result};

/// All arrangements of `s` balls in `n + 1` boxes.
pub fn vertices(n: usize, s: i64) -> Result<Vec<SpVertex>> {
    check_sp_params(n, s)?;
    Ok(Compositions::new(n + 1, s as usize)
        .map(|p| SpVertex { s, p })
        .collect())
}

/// Vertices with exactly `m` markers.
pub fn enumerate_g(n: usize, s: i64, m: usize) -> Result<Vec<SpVertex>> {
    if m > n {
        return invalid(format!("m={m} exceeds n={n}"));
    }
    Ok(vertices(n, s)?.into_iter().filter(|v| v.m() == m).collect())
}

/// `binom(t+m, m) binom(t+n-m, n-m)` with `t = (s-1)/2`.
pub fn count_g(n: usize, s: i64, m: usize) -> Result<BigUint> {
    check_sp_params(n, s)?;
    if m > n {
        return invalid(format!("m={m} exceeds n={n}"));
    }
    let t = ((s - 1) / 2) as u64;
    Ok(binomial(t + m as u64, m as i64) * binomial(t + (n - m) as u64, (n - m) as i64))
}

/// `g_{n,m,j} = binom(m, j) binom(n-m, m-j)` for `j = 0..=m`.
pub fn succession_counts(n: usize, m: usize) -> Vec<BigUint> {
    (0..=m)
        .map(|j| {
            binomial(m as u64, j as i64) * binomial(n.saturating_sub(m) as u64, m as i64 - j as i64)
        })
        .collect()
}

/// Pairs `i, i+1` both in `I + {n+1}`.
pub fn successions(n: usize, markers: &[usize]) -> usize {
    let has = |i: usize| i == n + 1 || markers.contains(&i);
    (1..=n).filter(|&i| has(i) && has(i + 1)).count()
}

/// Subset scan for [`succession_counts`].
pub fn succession_counts_scan(n: usize, m: usize) -> Vec<u64> {
    let mut out = vec![0u64; m + 1];
    if m > n {
        return out;
    }
    for idx in subsets_of_size(n, m) {
        let markers: Vec<usize> = idx.iter().map(|i| i + 1).collect();
        out[successions(n, &markers)] += 1;
    }
    out
}

/// Targets of edges leaving `v`: a ball moves between boxes `i` and `i+1`
/// where `i + 1` is not yet a marker.
pub fn delta_out_edges(v: &SpVertex) -> Vec<SpVertex> {
    let markers = v.markers();
    let mut out = Vec::new();
    for i in 0..v.n() {
        if markers.contains(&(i + 1)) {
            continue;
        }
        if v.p[i] > 0 {
            let mut p = v.p.clone();
            p[i] -= 1;
            p[i + 1] += 1;
            out.push(SpVertex { s: v.s, p });
        }
        if v.p[i + 1] > 0 {
            let mut p = v.p.clone();
            p[i + 1] -= 1;
            p[i] += 1;
            out.push(SpVertex { s: v.s, p });
        }
    }
    out.sort();
    out
}

/// Vertices reached from `v` by directed paths of exactly `k` edges.
pub fn reachable_in(v: &SpVertex, k: usize) -> BTreeSet<SpVertex> {
    let mut layer = BTreeSet::from([v.clone()]);
    for _ in 0..k {
        layer = layer.iter().flat_map(delta_out_edges).collect();
    }
    layer
}

/// Every vertex reached from `v` by a directed path of any length.
pub fn reachable_any(v: &SpVertex) -> BTreeSet<SpVertex> {
    let mut seen = BTreeSet::from([v.clone()]);
    let mut stack = vec![v.clone()];
    while let Some(x) = stack.pop() {
        for y in delta_out_edges(&x) {
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}
