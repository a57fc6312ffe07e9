//! Compositions, necklaces, ball/wall duality and exact binomials.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};

/// `a` choose `b`, zero outside `0 <= b <= a`.
pub fn binomial(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0u64;
    let mut acc = BigUint::one();
    for &p in parts {
        total += p as u64;
        acc *= binomial(total, p as i64);
    }
    acc
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Shift left by `k`: entry `i` of the result is entry `i + k` of `self`.
    pub fn rotate(&self, k: usize) -> Composition {
        let mut parts = self.parts.clone();
        if !parts.is_empty() {
            let k = k % parts.len();
            parts.rotate_left(k);
        }
        Composition { parts }
    }

    pub fn period(&self) -> usize {
        let t = self.parts.len();
        (1..=t)
            .find(|&k| t.is_multiple_of(k) && self.rotate(k) == *self)
            .unwrap_or(t.max(1))
    }

    /// Lexicographically minimal rotation.
    pub fn min_rotation(&self) -> Composition {
        (0..self.parts.len().max(1))
            .map(|k| self.rotate(k))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    pub fn is_rotation_of(&self, other: &Composition) -> bool {
        self.len() == other.len() && self.min_rotation() == other.min_rotation()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition { parts }
    }
}

/// Lexicographic iterator over `C^t_d`.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(t: usize, d: usize) -> Self {
        if t == 0 {
            return Compositions { current: None };
        }
        let mut first = vec![0; t];
        first[t - 1] = d;
        Compositions {
            current: Some(first),
        }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let t = out.len();
        let mut next = out.clone();
        let mut suffix = next[t - 1];
        let mut i = t - 1;
        while i > 0 {
            i -= 1;
            if suffix > 0 {
                next[i] += 1;
                for x in next[i + 1..].iter_mut() {
                    *x = 0;
                }
                next[t - 1] = suffix - 1;
                self.current = Some(next);
                break;
            }
            suffix += next[i];
        }
        Some(out)
    }
}

/// All compositions of `d` into `t` nonnegative parts, lexicographic.
pub fn enumerate_compositions(t: usize, d: usize) -> Result<Vec<Composition>> {
    if t == 0 {
        return invalid("composition length must be at least 1");
    }
    Ok(Compositions::new(t, d).map(Composition::new).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclicClass {
    pub representative: Composition,
    pub period: usize,
}

/// Rotation orbits on `C^t_d`, each given by its minimal rotation.
pub fn cyclic_classes(t: usize, d: usize) -> Vec<CyclicClass> {
    Compositions::new(t, d)
        .map(Composition::new)
        .filter(|c| c.min_rotation() == *c)
        .map(|c| CyclicClass {
            period: c.period(),
            representative: c,
        })
        .collect()
}

/// Walls per cell, plus the walls themselves (labels `1..=n`, clockwise).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualArrangement {
    pub cells: Composition,
    pub walls: Vec<Vec<usize>>,
}

/// Exchange balls and walls on a circle.
///
/// `c_t` balls sit in box `t`, between wall `t-1` and wall `t` (wall 0 is
/// wall `n`). Ball 0 is the first ball counterclockwise of wall 1, balls are
/// numbered clockwise, and cell `k` collects the walls between ball `k` and
/// ball `k+1`.
pub fn dual_arrangement(c: &Composition) -> Result<DualArrangement> {
    let n = c.len();
    let s = c.total();
    if n == 0 || s == 0 {
        return invalid("dual arrangement needs at least one box and one ball");
    }
    if gcd(n as i64, s as i64) != 1 {
        return invalid(format!("gcd(n, s) != 1 for n={n}, s={s}"));
    }
    // None = ball, Some(w) = wall w
    let mut ring: Vec<Option<usize>> = Vec::with_capacity(n + s);
    for (t, &balls) in c.parts.iter().enumerate() {
        ring.extend(std::iter::repeat_n(None, balls));
        ring.push(Some(t + 1));
    }
    let len = ring.len();
    let wall1 = c.parts[0];
    let mut start = wall1;
    loop {
        start = (start + len - 1) % len;
        if ring[start].is_none() {
            break;
        }
    }
    let mut walls = vec![Vec::new(); s];
    let mut k = 0;
    for step in 1..len {
        match ring[(start + step) % len] {
            Some(w) => walls[k].push(w),
            None => k += 1,
        }
    }
    let cells = Composition::new(walls.iter().map(Vec::len).collect());
    Ok(DualArrangement { cells, walls })
}

/// Sorted list of all subsets of `0..n` of size `k`, each sorted.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Nonempty subsets of `lo..=hi` in lexicographic order of their sorted lists.
pub fn nonempty_subsets(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let width = hi + 1 - lo;
    let mut out: Vec<Vec<usize>> = (1u64..(1u64 << width))
        .map(|mask| {
            (0..width)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + lo)
                .collect()
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(7, 0), BigUint::one());
        assert_eq!(binomial(3, 2), BigUint::from(3u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(3, -1), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[2, 1]), BigUint::from(3u32));
        assert_eq!(multinomial(&[1, 1, 1]), BigUint::from(6u32));
        assert_eq!(multinomial(&[]), BigUint::one());
    }

    #[test]
    fn composition_listing() {
        let all = enumerate_compositions(3, 2).unwrap();
        let parts: Vec<_> = all.iter().map(|c| c.parts.clone()).collect();
        assert_eq!(
            parts,
            vec![
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![2, 0, 0]
            ]
        );
        assert_eq!(enumerate_compositions(1, 5).unwrap()[0].parts, vec![5]);
        assert_eq!(enumerate_compositions(4, 0).unwrap().len(), 1);
        assert!(enumerate_compositions(0, 3).is_err());
    }

    #[test]
    fn necklaces() {
        assert_eq!(cyclic_classes(3, 2).len(), 2);
        let reps: Vec<_> = cyclic_classes(2, 3)
            .into_iter()
            .map(|c| c.representative.parts)
            .collect();
        assert_eq!(reps, vec![vec![0, 3], vec![1, 2]]);
        let periodic = cyclic_classes(4, 2)
            .into_iter()
            .find(|c| c.representative.parts == vec![0, 1, 0, 1])
            .unwrap();
        assert_eq!(periodic.period, 2);
    }

    #[test]
    fn dual_small_cases() {
        let d = dual_arrangement(&Composition::new(vec![2, 0, 0])).unwrap();
        assert_eq!(d.cells.parts, vec![3, 0]);
        assert_eq!(d.walls, vec![vec![1, 2, 3], vec![]]);
        let d = dual_arrangement(&Composition::new(vec![0, 1, 1])).unwrap();
        assert_eq!(d.cells.parts, vec![2, 1]);
        assert!(d.cells.is_rotation_of(&Composition::new(vec![1, 2])));
        let d = dual_arrangement(&Composition::new(vec![4])).unwrap();
        assert_eq!(d.cells.total(), 1);
        assert!(dual_arrangement(&Composition::new(vec![1, 1])).is_err());
    }

    #[test]
    fn subset_helpers() {
        assert_eq!(
            subsets_of_size(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(nonempty_subsets(0, 1), vec![vec![0], vec![0, 1], vec![1]]);
    }
}
