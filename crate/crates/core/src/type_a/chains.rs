use serde::Serialize;

use super::intersection::IntersectionMatrix;
use super::window::{enumerate_r, in_window, phi, window_cells, WindowVector};
use crate::error::{invalid, Result};

/// A parahoric type: a nonempty subset of `[0, n-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParahoricTypeA {
    pub n: usize,
    pub i_set: Vec<usize>,
}

impl ParahoricTypeA {
    pub fn new(n: usize, mut i_set: Vec<usize>) -> Result<Self> {
        i_set.sort_unstable();
        i_set.dedup();
        if i_set.is_empty() {
            return invalid("type set must be nonempty");
        }
        if i_set.iter().any(|&i| i >= n) {
            return invalid(format!("type set {i_set:?} must lie in [0, {}]", n - 1));
        }
        Ok(ParahoricTypeA { n, i_set })
    }

    pub fn full(n: usize) -> Self {
        ParahoricTypeA {
            n,
            i_set: (0..n).collect(),
        }
    }

    /// Starting valuation `m = i_1` and level set `J = {i_k - i_1} + {n}`,
    /// without 0.
    pub fn to_levels(&self) -> (i64, Vec<usize>) {
        let i1 = self.i_set[0];
        let mut j: Vec<usize> = self.i_set[1..].iter().map(|i| i - i1).collect();
        j.push(self.n);
        (i1 as i64, j)
    }

    /// Cyclic gaps `p_1, ..., p_l`, summing to `n`.
    pub fn gaps(&self) -> Vec<usize> {
        let (_, j) = self.to_levels();
        gaps_of_levels(&j)
    }
}

pub fn gaps_of_levels(j: &[usize]) -> Vec<usize> {
    let mut prev = 0;
    j.iter()
        .map(|&x| {
            let p = x - prev;
            prev = x;
            p
        })
        .collect()
}

pub(crate) fn check_levels(n: usize, j: &[usize]) -> Result<()> {
    if j.is_empty() || *j.last().unwrap() != n {
        return invalid(format!("level set {j:?} must end with n={n}"));
    }
    if j[0] == 0 || j.windows(2).any(|w| w[0] >= w[1]) {
        return invalid(format!(
            "level set {j:?} must be strictly increasing within [1, n]"
        ));
    }
    Ok(())
}

/// `(r^0, r^{j_1}, ..., r^{j_{l-1}})`; the last vector `r^n = r^0 + 1` is
/// implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChainTuple {
    pub s: i64,
    pub levels: Vec<usize>,
    pub vectors: Vec<Vec<i64>>,
}

impl ChainTuple {
    pub fn base(&self) -> WindowVector {
        WindowVector::new(self.s, self.vectors[0].clone()).expect("chains hold window vectors")
    }

    pub fn top(&self) -> Vec<i64> {
        self.vectors[0].iter().map(|x| x + 1).collect()
    }
}

/// All chains with level set `j` starting at valuation `m`.
pub fn enumerate_chains(n: usize, s: i64, j: &[usize], m: i64) -> Result<Vec<ChainTuple>> {
    check_levels(n, j)?;
    let mut levels = vec![0];
    levels.extend_from_slice(&j[..j.len() - 1]);
    let mut out = Vec::new();
    for r0 in enumerate_r(n, s, m)? {
        let mut stack = vec![r0.r.clone()];
        let mut used = vec![false; n];
        grow(s, &levels, 1, &mut used, &mut stack, &mut out);
    }
    Ok(out)
}

fn grow(
    s: i64,
    levels: &[usize],
    k: usize,
    used: &mut Vec<bool>,
    stack: &mut Vec<Vec<i64>>,
    out: &mut Vec<ChainTuple>,
) {
    if k == levels.len() {
        out.push(ChainTuple {
            s,
            levels: levels.to_vec(),
            vectors: stack.clone(),
        });
        return;
    }
    let step = levels[k] - levels[k - 1];
    let free: Vec<usize> = (0..used.len()).filter(|&t| !used[t]).collect();
    for pick in crate::combinatorics::subsets_of_size(free.len(), step) {
        let mut next = stack[k - 1].clone();
        for &p in &pick {
            next[free[p]] += 1;
        }
        if !in_window(&next, s) {
            continue;
        }
        for &p in &pick {
            used[free[p]] = true;
        }
        stack.push(next);
        grow(s, levels, k + 1, used, stack, out);
        stack.pop();
        for &p in &pick {
            used[free[p]] = false;
        }
    }
}

/// `sigma(t)` is the level at which coordinate `t` goes up.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StepAssignment {
    pub sigma: Vec<usize>,
}

pub fn sigma_of_chain(chain: &ChainTuple, j: &[usize]) -> Result<StepAssignment> {
    let n = chain.vectors[0].len();
    check_levels(n, j)?;
    if chain.levels.len() != j.len() {
        return invalid("chain length does not match the level set");
    }
    let mut all = chain.vectors.clone();
    all.push(chain.top());
    for (k, v) in all.iter().enumerate() {
        if v.len() != n || !in_window(v, chain.s) {
            return invalid(format!("chain entry {v:?} is not a window vector"));
        }
        let level = if k < chain.levels.len() {
            chain.levels[k]
        } else {
            n
        };
        let sum: i64 = v.iter().zip(&all[0]).map(|(a, b)| a - b).sum();
        if sum != level as i64 {
            return invalid(format!("chain entry {v:?} has the wrong valuation"));
        }
    }
    let mut sigma = vec![0; n];
    for t in 0..n {
        let k = (1..all.len())
            .find(|&k| all[k][t] > all[0][t])
            .expect("top exceeds base");
        for w in all.windows(2) {
            if w[1][t] < w[0][t] || w[1][t] - all[0][t] > 1 {
                return invalid("chain is not monotone within one step");
            }
        }
        sigma[t] = j[k - 1];
    }
    Ok(StepAssignment { sigma })
}

/// `sigma(t) <= sigma(t-1)` whenever box `t` of `c` is empty (cyclically),
/// with fiber sizes given by the gaps.
pub fn is_valid_sigma(sigma: &StepAssignment, c: &[usize], j: &[usize]) -> bool {
    let n = c.len();
    let gaps = gaps_of_levels(j);
    for (i, &lvl) in j.iter().enumerate() {
        if sigma.sigma.iter().filter(|&&x| x == lvl).count() != gaps[i] {
            return false;
        }
    }
    (0..n).all(|t| {
        let prev = (t + n - 1) % n;
        c[t] > 0 || sigma.sigma[t] <= sigma.sigma[prev]
    })
}

/// Entry `(i, k)` counts walls of cell `k` sent to level `j_i`.
pub fn intersection_matrix_of_sigma(
    sigma: &StepAssignment,
    j: &[usize],
    walls: &[Vec<usize>],
) -> IntersectionMatrix {
    let rows = j
        .iter()
        .map(|&lvl| {
            walls
                .iter()
                .map(|cell| cell.iter().filter(|&&w| sigma.sigma[w - 1] == lvl).count())
                .collect()
        })
        .collect();
    IntersectionMatrix { rows }
}

/// Inverse of [`intersection_matrix_of_sigma`]: inside each cell, walls in
/// clockwise order receive levels from the highest down.
pub fn sigma_of_matrix(
    q: &IntersectionMatrix,
    j: &[usize],
    walls: &[Vec<usize>],
) -> Result<StepAssignment> {
    let n: usize = walls.iter().map(Vec::len).sum();
    if q.rows.len() != j.len() || q.col_sums() != walls.iter().map(Vec::len).collect::<Vec<_>>() {
        return invalid("matrix shape does not match the cells");
    }
    let mut sigma = vec![0; n];
    for (k, cell) in walls.iter().enumerate() {
        let mut pos = 0;
        for i in (0..j.len()).rev() {
            for _ in 0..q.rows[i][k] {
                sigma[cell[pos] - 1] = j[i];
                pos += 1;
            }
        }
    }
    Ok(StepAssignment { sigma })
}

pub fn chain_of_sigma(
    base: &WindowVector,
    sigma: &StepAssignment,
    j: &[usize],
) -> Result<ChainTuple> {
    check_levels(base.n, j)?;
    let mut vectors = vec![base.r.clone()];
    for &lvl in &j[..j.len() - 1] {
        let v: Vec<i64> = base
            .r
            .iter()
            .zip(&sigma.sigma)
            .map(|(&x, &sg)| x + (sg <= lvl) as i64)
            .collect();
        if !in_window(&v, base.s) {
            return invalid(format!("step assignment leaves the window at level {lvl}"));
        }
        vectors.push(v);
    }
    let mut levels = vec![0];
    levels.extend_from_slice(&j[..j.len() - 1]);
    Ok(ChainTuple {
        s: base.s,
        levels,
        vectors,
    })
}

/// The matrix attached to a chain: cells come from the base vector.
pub fn intersection_matrix_of_chain(chain: &ChainTuple, j: &[usize]) -> Result<IntersectionMatrix> {
    let sigma = sigma_of_chain(chain, j)?;
    let cells = window_cells(&chain.base())?;
    Ok(intersection_matrix_of_sigma(&sigma, j, &cells.walls))
}

/// Valid step assignments over one base vector, by brute force over all maps
/// `[1, n] -> J` with the right fiber sizes.
pub fn enumerate_sigmas(base: &WindowVector, j: &[usize]) -> Vec<StepAssignment> {
    let c = phi(base).parts;
    let n = base.n;
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(
        t: usize,
        j: &[usize],
        c: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<StepAssignment>,
    ) {
        if t == cur.len() {
            let sg = StepAssignment { sigma: cur.clone() };
            if is_valid_sigma(&sg, c, j) {
                out.push(sg);
            }
            return;
        }
        for &lvl in j {
            cur[t] = lvl;
            rec(t + 1, j, c, cur, out);
        }
    }
    rec(0, j, &c, &mut cur, &mut out);
    out
}
