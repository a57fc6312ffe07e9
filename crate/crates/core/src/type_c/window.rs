use num_integer::Integer;
use serde::Serialize;

use crate::combinatorics::{gcd, subsets_of_size, Composition};
use crate::error::{invalid, Result};
use crate::type_a::{in_window, phi, phi_inverse, WindowVector};

pub(crate) fn check_sp_params(n: usize, s: i64) -> Result<()> {
    if n == 0 || s <= 0 {
        return invalid(format!("need n >= 1 and s >= 1, got n={n}, s={s}"));
    }
    if s % 2 == 0 {
        return invalid(format!("s must be odd, got s={s}"));
    }
    if gcd(s, n as i64) != 1 {
        return invalid(format!("gcd(s,n) != 1 for n={n}, s={s}"));
    }
    Ok(())
}

fn delta(markers: &[usize], i: usize) -> i64 {
    markers.binary_search(&i).is_ok() as i64
}

/// `eps_i = delta_{i+1} - delta_i` for `i` in `[1, n-1]`.
pub fn epsilon(markers: &[usize], i: usize) -> i64 {
    delta(markers, i + 1) - delta(markers, i)
}

/// `sum_{i=1}^{n-1} i eps_i`.
pub fn marker_sum(n: usize, markers: &[usize]) -> i64 {
    (1..n).map(|i| i as i64 * epsilon(markers, i)).sum()
}

/// Exponents `r_1..r_{2n}` of a diagonal lattice fixed by the symplectic
/// representative and the torus. Indices below are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpWindowVector {
    pub n: usize,
    pub s: i64,
    pub m: usize,
    pub r: Vec<i64>,
    pub markers: Vec<usize>,
}

impl SpWindowVector {
    /// Markers are read off from `r_i + r_{n+i}`, which must be 0 or 1.
    pub fn new(s: i64, r: Vec<i64>) -> Result<Self> {
        if r.is_empty() || !r.len().is_multiple_of(2) {
            return invalid(format!("{r:?} must have even positive length"));
        }
        let n = r.len() / 2;
        check_sp_params(n, s)?;
        let mut markers = Vec::new();
        for i in 0..n {
            match r[i] + r[n + i] {
                0 => {}
                1 => markers.push(i + 1),
                _ => {
                    return invalid(format!(
                        "r_{} + r_{} must be 0 or 1 in {r:?}",
                        i + 1,
                        n + i + 1
                    ))
                }
            }
        }
        let w = SpWindowVector {
            n,
            s,
            m: markers.len(),
            r,
            markers,
        };
        if !in_window(&w.type_a_order(), s) {
            return invalid(format!(
                "{:?} violates r_n <= ... <= r_1 <= r_(n+1) <= ... <= r_2n <= r_n + {s}",
                w.r
            ));
        }
        Ok(w)
    }

    /// `(r_n, ..., r_1, r_{n+1}, ..., r_{2n})`.
    pub fn type_a_order(&self) -> Vec<i64> {
        let n = self.n;
        let mut out: Vec<i64> = self.r[..n].iter().rev().copied().collect();
        out.extend_from_slice(&self.r[n..]);
        out
    }

    pub fn to_type_a(&self) -> WindowVector {
        WindowVector::new(self.s, self.type_a_order()).expect("symplectic windows are windows")
    }

    pub fn from_type_a(w: &WindowVector) -> Result<Self> {
        if !w.n.is_multiple_of(2) {
            return invalid("type A window of odd length");
        }
        let n = w.n / 2;
        let mut r: Vec<i64> = w.r[..n].iter().rev().copied().collect();
        r.extend_from_slice(&w.r[n..]);
        SpWindowVector::new(w.s, r)
    }
}

/// All symplectic window vectors with `m` markers, in decreasing
/// lexicographic order of `r`.
pub fn enumerate_r_sp(n: usize, s: i64, m: usize) -> Result<Vec<SpWindowVector>> {
    check_sp_params(n, s)?;
    if m > n {
        return invalid(format!("m={m} exceeds n={n}"));
    }
    let mut out = Vec::new();
    for idx in subsets_of_size(n, m) {
        let markers: Vec<usize> = idx.iter().map(|i| i + 1).collect();
        let lo = Integer::div_ceil(&(delta(&markers, n) - s), &2);
        let mut cur = Vec::with_capacity(n);
        scan(n, s, lo, &markers, &mut cur, &mut out);
    }
    out.sort_unstable_by(|a, b| b.r.cmp(&a.r));
    Ok(out)
}

fn scan(
    n: usize,
    s: i64,
    lo: i64,
    markers: &[usize],
    cur: &mut Vec<i64>,
    out: &mut Vec<SpWindowVector>,
) {
    if cur.len() == n {
        let mut r = cur.clone();
        r.extend((1..=n).map(|i| -cur[i - 1] + delta(markers, i)));
        if let Ok(w) = SpWindowVector::new(s, r) {
            out.push(w);
        }
        return;
    }
    let hi = cur.last().copied().unwrap_or(0);
    for x in lo..=hi {
        cur.push(x);
        scan(n, s, lo, markers, cur, out);
        cur.pop();
    }
}

/// The composition `(q_n, ..., q_1, q_0, q_{-1}, ..., q_{-(n-1)})` together
/// with its markers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpQVector {
    pub n: usize,
    pub s: i64,
    pub c: Vec<usize>,
    pub markers: Vec<usize>,
}

impl SpQVector {
    /// Validates the parity and marker conditions and recovers the markers.
    pub fn new(s: i64, c: Vec<usize>) -> Result<Self> {
        if c.is_empty() || !c.len().is_multiple_of(2) {
            return invalid("q-vector must have even positive length");
        }
        let n = c.len() / 2;
        check_sp_params(n, s)?;
        if c.iter().sum::<usize>() as i64 != s {
            return invalid(format!("q-vector {c:?} does not sum to {s}"));
        }
        let mut v = SpQVector {
            n,
            s,
            c,
            markers: Vec::new(),
        };
        let mut d = (v.q(0) % 2 == 1) as i64;
        let mut markers = Vec::new();
        if d == 1 {
            markers.push(1);
        }
        for i in 1..n {
            let eps = v.q(-(i as i64)) as i64 - v.q(i as i64) as i64;
            d += eps;
            if !(0..=1).contains(&d) || eps.abs() > 1 {
                return invalid(format!("q_-{i} - q_{i} = {eps} is not a marker difference"));
            }
            if d == 1 {
                markers.push(i + 1);
            }
        }
        if v.q(n as i64).is_multiple_of(2) != (d == 1) {
            return invalid(format!("q_{n} even must match {n} being a marker"));
        }
        v.markers = markers;
        Ok(v)
    }

    /// `q_i` for `i` in `[-(n-1), n]`.
    pub fn q(&self, i: i64) -> usize {
        self.c[(self.n as i64 - i) as usize]
    }

    pub fn m(&self) -> usize {
        self.markers.len()
    }
}

pub fn q_coords(w: &SpWindowVector) -> SpQVector {
    SpQVector {
        n: w.n,
        s: w.s,
        c: phi(&w.to_type_a()).parts,
        markers: w.markers.clone(),
    }
}

pub fn q_coords_inverse(q: &SpQVector) -> Result<SpWindowVector> {
    let w = phi_inverse(&Composition::new(q.c.clone()), q.s, q.m() as i64)?;
    let out = SpWindowVector::from_type_a(&w)?;
    if out.markers != q.markers {
        return invalid("q-vector markers disagree with its window vector");
    }
    Ok(out)
}

/// Balls in boxes `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpVertex {
    pub s: i64,
    pub p: Vec<usize>,
}

impl SpVertex {
    pub fn new(s: i64, p: Vec<usize>) -> Result<Self> {
        if p.len() < 2 || p.iter().sum::<usize>() as i64 != s {
            return invalid(format!(
                "{p:?} is not an arrangement of {s} balls in at least 2 boxes"
            ));
        }
        Ok(SpVertex { s, p })
    }

    pub fn n(&self) -> usize {
        self.p.len() - 1
    }

    /// `i + 1` is a marker exactly when `p_0 + ... + p_i` is odd.
    pub fn markers(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut prefix = 0;
        for i in 0..self.n() {
            prefix += self.p[i];
            if prefix % 2 == 1 {
                out.push(i + 1);
            }
        }
        out
    }

    pub fn m(&self) -> usize {
        self.markers().len()
    }
}

/// `(q_0, q_1 + q_{-1}, ..., q_{n-1} + q_{-(n-1)}, q_n)`.
pub fn psi_sp(q: &SpQVector) -> SpVertex {
    let n = q.n as i64;
    let mut p = vec![q.q(0)];
    p.extend((1..n).map(|i| q.q(i) + q.q(-i)));
    p.push(q.q(n));
    SpVertex { s: q.s, p }
}

/// Splits each `p_i` into `(q_i, q_{-i})` according to the markers of the
/// vertex.
pub fn psi_sp_inverse(v: &SpVertex) -> Result<SpQVector> {
    let n = v.n();
    check_sp_params(n, v.s)?;
    let markers = v.markers();
    let mut c = vec![0; 2 * n];
    c[0] = v.p[n];
    c[n] = v.p[0];
    for i in 1..n {
        let half = v.p[i] / 2;
        let (qi, qmi) = match epsilon(&markers, i) {
            1 => (half, half + 1),
            -1 => (half + 1, half),
            _ => (half, half),
        };
        c[n - i] = qi;
        c[n + i] = qmi;
    }
    let q = SpQVector::new(v.s, c)?;
    debug_assert_eq!(q.markers, markers);
    Ok(q)
}

pub fn vertex_of_window(w: &SpWindowVector) -> SpVertex {
    psi_sp(&q_coords(w))
}

pub fn window_of_vertex(v: &SpVertex) -> Result<SpWindowVector> {
    q_coords_inverse(&psi_sp_inverse(v)?)
}
