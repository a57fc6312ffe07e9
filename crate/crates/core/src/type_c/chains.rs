use serde::Serialize;

use super::graph::{enumerate_g, reachable_in};
use super::window::{check_sp_params, enumerate_r_sp, vertex_of_window, SpVertex, SpWindowVector};
use crate::error::{invalid, Result};

/// `J` must be a nonempty strictly increasing subset of `[0, n]`.
pub fn check_sp_levels(n: usize, j: &[usize]) -> Result<()> {
    if j.is_empty() {
        return invalid("level set must be nonempty");
    }
    if j.windows(2).any(|w| w[0] >= w[1]) || *j.last().unwrap() > n {
        return invalid(format!(
            "level set {j:?} must be strictly increasing within [0, {n}]"
        ));
    }
    Ok(())
}

/// `(v_1, ..., v_l)` with `v_i` carrying `m_i` markers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PathTuple {
    pub vertices: Vec<SpVertex>,
}

/// Vertex tuples lying on a common directed path. Since every edge adds one
/// marker, it is enough that each `v_{i+1}` is reached from `v_i` in
/// `m_{i+1} - m_i` steps.
pub fn enumerate_e(n: usize, s: i64, j: &[usize]) -> Result<Vec<PathTuple>> {
    check_sp_params(n, s)?;
    check_sp_levels(n, j)?;
    let mut out = Vec::new();
    for v in enumerate_g(n, s, j[0])? {
        let mut cur = vec![v];
        extend_paths(j, &mut cur, &mut out);
    }
    Ok(out)
}

/// The tuples of [`enumerate_e`] starting at `v`.
pub fn enumerate_e_from(v: &SpVertex, j: &[usize]) -> Result<Vec<PathTuple>> {
    check_sp_levels(v.n(), j)?;
    if v.m() != j[0] {
        return invalid(format!("vertex has {} markers, expected {}", v.m(), j[0]));
    }
    let mut out = Vec::new();
    extend_paths(j, &mut vec![v.clone()], &mut out);
    Ok(out)
}

fn extend_paths(j: &[usize], cur: &mut Vec<SpVertex>, out: &mut Vec<PathTuple>) {
    let k = cur.len();
    if k == j.len() {
        out.push(PathTuple {
            vertices: cur.clone(),
        });
        return;
    }
    for w in reachable_in(&cur[k - 1], j[k] - j[k - 1]) {
        cur.push(w);
        extend_paths(j, cur, out);
        cur.pop();
    }
}

/// Componentwise monotone tuples `r^{m_1} <= ... <= r^{m_l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpChainTuple {
    pub vectors: Vec<SpWindowVector>,
}

impl SpChainTuple {
    pub fn to_path(&self) -> PathTuple {
        PathTuple {
            vertices: self.vectors.iter().map(vertex_of_window).collect(),
        }
    }
}

fn leq(a: &SpWindowVector, b: &SpWindowVector) -> bool {
    a.r.iter().zip(&b.r).all(|(x, y)| x <= y)
}

/// Chains built directly from the window-vector definition.
pub fn enumerate_sp_chains(n: usize, s: i64, j: &[usize]) -> Result<Vec<SpChainTuple>> {
    check_sp_params(n, s)?;
    check_sp_levels(n, j)?;
    let levels: Vec<Vec<SpWindowVector>> = j
        .iter()
        .map(|&m| enumerate_r_sp(n, s, m))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for r in &levels[0] {
        let mut cur = vec![r.clone()];
        extend_chains(&levels, &mut cur, &mut out);
    }
    Ok(out)
}

/// The chains of [`enumerate_sp_chains`] whose first vector is `r`.
pub fn enumerate_sp_chains_from(r: &SpWindowVector, j: &[usize]) -> Result<Vec<SpChainTuple>> {
    check_sp_levels(r.n, j)?;
    if r.m != j[0] {
        return invalid(format!(
            "window vector has {} markers, expected {}",
            r.m, j[0]
        ));
    }
    let levels: Vec<Vec<SpWindowVector>> = j
        .iter()
        .map(|&m| enumerate_r_sp(r.n, r.s, m))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    extend_chains(&levels, &mut vec![r.clone()], &mut out);
    Ok(out)
}

fn extend_chains(
    levels: &[Vec<SpWindowVector>],
    cur: &mut Vec<SpWindowVector>,
    out: &mut Vec<SpChainTuple>,
) {
    let k = cur.len();
    if k == levels.len() {
        out.push(SpChainTuple {
            vectors: cur.clone(),
        });
        return;
    }
    for r in &levels[k] {
        if leq(&cur[k - 1], r) {
            cur.push(r.clone());
            extend_chains(levels, cur, out);
            cur.pop();
        }
    }
}
