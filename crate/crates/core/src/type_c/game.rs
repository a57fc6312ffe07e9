use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;

use super::chains::PathTuple;
use super::window::SpVertex;
use crate::combinatorics::{binomial, Compositions};
use crate::error::{invalid, Result};
use crate::type_a::IntersectionMatrix;

/// Step function on walls `1..=n`: `0` for markers of the first vertex, `i`
/// for walls that become markers between `v_i` and `v_{i+1}`, `l` for walls
/// that never do.
pub fn theta(path: &PathTuple) -> (SpVertex, Vec<usize>) {
    let v1 = path.vertices[0].clone();
    let l = path.vertices.len();
    let sets: Vec<Vec<usize>> = path.vertices.iter().map(SpVertex::markers).collect();
    let sigma = (1..=v1.n())
        .map(|w| (0..l).find(|&i| sets[i].contains(&w)).unwrap_or(l))
        .collect();
    (v1, sigma)
}

/// Walls per cell, `b_0..b_s`, where cell `j` lies between balls `j` and
/// `j+1`.
pub fn wall_cells(v: &SpVertex) -> Vec<usize> {
    let mut b = vec![0; v.s as usize + 1];
    let mut prefix = 0;
    for i in 0..v.n() {
        prefix += v.p[i];
        b[prefix] += 1;
    }
    b
}

/// Pools cells `2k` and `2k+1`, giving a composition of `n` into `t+1` parts.
pub fn eta(v: &SpVertex) -> Vec<usize> {
    let b = wall_cells(v);
    b.chunks(2).map(|c| c.iter().sum()).collect()
}

/// The marker-free vertex whose walls sit in even cells `2k`, `a_k` of them.
pub fn eta0_inverse(s: i64, a: &[usize]) -> Result<SpVertex> {
    tau(s, a, &vec![0; a.len()])
}

/// Moves ball `2k+1` past the last `c_k` walls of cell `2k`.
pub fn tau(s: i64, a: &[usize], c: &[usize]) -> Result<SpVertex> {
    if s <= 0 || s % 2 == 0 || a.len() != (s as usize - 1) / 2 + 1 || c.len() != a.len() {
        return invalid(format!("{a:?} is not a pooled cell vector for s={s}"));
    }
    if c.iter().zip(a).any(|(x, y)| x > y) {
        return invalid(format!("{c:?} exceeds {a:?}"));
    }
    let mut b = vec![0; s as usize + 1];
    for k in 0..a.len() {
        b[2 * k] = a[k] - c[k];
        b[2 * k + 1] = c[k];
    }
    let n: usize = a.iter().sum();
    if n == 0 {
        return invalid("need at least one wall");
    }
    let mut p = Vec::with_capacity(n + 1);
    let mut last = 0;
    for (cell, &count) in b.iter().enumerate() {
        for _ in 0..count {
            p.push(cell - last);
            last = cell;
        }
    }
    p.push(s as usize - last);
    SpVertex::new(s, p)
}

/// `eta^{-1}(a)` restricted to `m` markers, via `tau` over `C^{t+1}_m(a)`.
pub fn eta_fiber(s: i64, a: &[usize], m: usize) -> Result<Vec<SpVertex>> {
    let mut out = Vec::new();
    for c in Compositions::new(a.len(), m) {
        if c.iter().zip(a).all(|(x, y)| x <= y) {
            out.push(tau(s, a, &c)?);
        }
    }
    Ok(out)
}

/// Entry `(i, k)` counts walls with step `i` among those in cell `2k` of
/// `eta0_inverse(eta(v_1))`.
pub fn zeta(path: &PathTuple) -> IntersectionMatrix {
    let (v1, sigma) = theta(path);
    let a = eta(&v1);
    let l = path.vertices.len();
    let mut rows = vec![vec![0; a.len()]; l + 1];
    let mut wall = 0;
    for (k, &ak) in a.iter().enumerate() {
        for _ in 0..ak {
            rows[sigma[wall]][k] += 1;
            wall += 1;
        }
    }
    IntersectionMatrix { rows }
}

/// `prod_{i=1}^{l-1} prod_{k=1}^{t} (q_ik + 1)` with rows `0..=l` and
/// columns `0..=t`.
pub fn fiber_count(q: &IntersectionMatrix) -> BigUint {
    let rows = q.rows.len();
    let mut out = BigUint::one();
    for row in q.rows.iter().take(rows.saturating_sub(1)).skip(1) {
        for &x in row.iter().skip(1) {
            out *= (x + 1) as u64;
        }
    }
    out
}

/// `binom(2t + d - 1, d)`.
pub fn gamma(d: usize, t: usize) -> BigUint {
    if t == 0 {
        return BigUint::from((d == 0) as u8);
    }
    binomial((2 * t + d - 1) as u64, d as i64)
}

/// `sum_{y in C^t_d} prod_k (y_k + 1)`.
pub fn gamma_brute(d: usize, t: usize) -> BigUint {
    Compositions::new(t, d)
        .map(|y| y.iter().map(|&x| BigUint::from(x + 1)).product::<BigUint>())
        .sum()
}

/// `binom(2t + d, d)`.
pub fn pooled_gamma(d: usize, t: usize) -> BigUint {
    binomial((2 * t + d) as u64, d as i64)
}

/// `sum_{z in C^{t+1}_d} prod_{k=1}^t (z_k + 1)`.
pub fn pooled_gamma_brute(d: usize, t: usize) -> BigUint {
    Compositions::new(t + 1, d)
        .map(|z| {
            z[1..]
                .iter()
                .map(|&x| BigUint::from(x + 1))
                .product::<BigUint>()
        })
        .sum()
}

/// Plays the single-cell game: `d` walls with a ball on the right and,
/// if `bounded_left`, one on the left. Step `i < l` makes `z_i` jumps of a
/// ball over an adjacent unused wall, where step 0 only allows leftward
/// jumps. `z` has length `l + 1`; its last entry counts walls left over.
/// Returns the number of distinct sequences of configurations after each
/// step.
pub fn game_outcomes(d: usize, z: &[usize], bounded_left: bool) -> usize {
    assert_eq!(z.iter().sum::<usize>(), d, "z must sum to d");
    let steps = z.len() - 1;
    let mut outcomes = BTreeSet::new();
    let start = Cell {
        left: bounded_left.then_some(0),
        right: d,
        used: vec![false; d],
    };
    play(&start, z, 0, steps, z[0], &mut Vec::new(), &mut outcomes);
    outcomes.len()
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Cell {
    left: Option<usize>,
    right: usize,
    used: Vec<bool>,
}

impl Cell {
    fn moves(&self, leftward_only: bool) -> Vec<Cell> {
        let d = self.used.len();
        let mut out = Vec::new();
        if let Some(x) = self.left {
            if x > 0 && !self.used[x - 1] {
                let mut c = self.clone();
                c.left = Some(x - 1);
                c.used[x - 1] = true;
                out.push(c);
            }
            if !leftward_only && x < self.right && !self.used[x] {
                let mut c = self.clone();
                c.left = Some(x + 1);
                c.used[x] = true;
                out.push(c);
            }
        }
        let y = self.right;
        let floor = self.left.unwrap_or(0);
        if y > floor && !self.used[y - 1] {
            let mut c = self.clone();
            c.right = y - 1;
            c.used[y - 1] = true;
            out.push(c);
        }
        if !leftward_only && y < d && !self.used[y] {
            let mut c = self.clone();
            c.right = y + 1;
            c.used[y] = true;
            out.push(c);
        }
        out
    }
}

fn play(
    cell: &Cell,
    z: &[usize],
    step: usize,
    steps: usize,
    left_in_step: usize,
    trail: &mut Vec<(Option<usize>, usize)>,
    outcomes: &mut BTreeSet<Vec<(Option<usize>, usize)>>,
) {
    if step == steps {
        outcomes.insert(trail.clone());
        return;
    }
    if left_in_step == 0 {
        trail.push((cell.left, cell.right));
        let next = if step + 1 < steps { z[step + 1] } else { 0 };
        play(cell, z, step + 1, steps, next, trail, outcomes);
        trail.pop();
        return;
    }
    for c in cell.moves(step == 0) {
        play(&c, z, step, steps, left_in_step - 1, trail, outcomes);
    }
}

/// `alpha = 1` for a cell bounded only on the right.
pub fn alpha(_d: usize, _z: &[usize]) -> BigUint {
    BigUint::one()
}

/// `beta = prod_{i=1}^{l-1} (z_i + 1)` with `z = (z_0, ..., z_l)`.
pub fn beta(_d: usize, z: &[usize]) -> BigUint {
    let l = z.len() - 1;
    (1..l).map(|i| BigUint::from(z[i] + 1)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::type_c::chains::enumerate_e;

    #[test]
    fn eta_examples() {
        let v = SpVertex::new(3, vec![0, 0, 3]).unwrap();
        assert_eq!(eta(&v), vec![2, 0]);
        assert_eq!(eta0_inverse(3, &[2, 0]).unwrap(), v);
        assert_eq!(eta0_inverse(5, &[0, 1, 1]).unwrap().p, vec![2, 2, 1]);
    }

    #[test]
    fn zeta_fibers_small() {
        let mut groups = std::collections::BTreeMap::new();
        for path in enumerate_e(2, 3, &[0, 2]).unwrap() {
            *groups.entry(zeta(&path)).or_insert(0u32) += 1;
        }
        let by_middle: Vec<(Vec<usize>, u32)> = groups
            .iter()
            .map(|(q, &c)| (q.rows[1].clone(), c))
            .collect();
        assert_eq!(
            by_middle,
            vec![(vec![0, 2], 3), (vec![1, 1], 2), (vec![2, 0], 1)]
        );
        for (q, c) in groups {
            assert_eq!(fiber_count(&q), BigUint::from(c));
        }
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(1, 1), BigUint::from(2u32));
        assert_eq!(gamma(2, 2), BigUint::from(10u32));
        assert_eq!(gamma_brute(2, 2), BigUint::from(10u32));
        assert_eq!(pooled_gamma_brute(3, 2), pooled_gamma(3, 2));
    }

    #[test]
    fn single_cell_games() {
        assert_eq!(game_outcomes(3, &[1, 1, 1], true), 2);
        assert_eq!(game_outcomes(3, &[0, 2, 1, 0], true), 3 * 2);
        assert_eq!(game_outcomes(3, &[0, 2, 1, 0], false), 1);
    }
}
