use num_integer::Integer;
use serde::Serialize;

use crate::combinatorics::{dual_arrangement, gcd, Composition, CyclicClass, DualArrangement};
use crate::error::{invalid, Result};
use crate::lattice::Partition;

/// Exponents of a diagonal lattice fixed by the standard representative and
/// the torus: `r_1 <= ... <= r_n <= r_1 + s`, `sum r = m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WindowVector {
    pub n: usize,
    pub s: i64,
    pub m: i64,
    pub r: Vec<i64>,
}

impl WindowVector {
    pub fn new(s: i64, r: Vec<i64>) -> Result<Self> {
        let n = r.len();
        if n == 0 {
            return invalid("empty window vector");
        }
        if !in_window(&r, s) {
            return invalid(format!("{r:?} violates r_1 <= ... <= r_n <= r_1 + {s}"));
        }
        Ok(WindowVector {
            n,
            s,
            m: r.iter().sum(),
            r,
        })
    }
}

pub fn in_window(r: &[i64], s: i64) -> bool {
    r.windows(2).all(|w| w[0] <= w[1]) && r[r.len() - 1] <= r[0] + s
}

pub(crate) fn check_coprime(n: usize, s: i64) -> Result<()> {
    if n == 0 || s <= 0 {
        return invalid(format!("need n >= 1 and s >= 1, got n={n}, s={s}"));
    }
    if gcd(n as i64, s) != 1 {
        return invalid(format!("gcd(s,n) != 1 for n={n}, s={s}"));
    }
    Ok(())
}

/// All window vectors of valuation `m`, in lexicographic order.
pub fn enumerate_r(n: usize, s: i64, m: i64) -> Result<Vec<WindowVector>> {
    check_coprime(n, s)?;
    let ni = n as i64;
    let lo = Integer::div_ceil(&(m - (ni - 1) * s), &ni);
    let hi = Integer::div_floor(&m, &ni);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    for r1 in lo..=hi {
        cur.clear();
        cur.push(r1);
        extend(n, s, m - r1, r1, r1 + s, &mut cur, &mut out);
    }
    Ok(out)
}

fn extend(
    n: usize,
    s: i64,
    rest: i64,
    lo: i64,
    hi: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<WindowVector>,
) {
    let left = (n - cur.len()) as i64;
    if left == 0 {
        if rest == 0 {
            out.push(WindowVector {
                n,
                s,
                m: cur.iter().sum(),
                r: cur.clone(),
            });
        }
        return;
    }
    for x in lo..=hi {
        if x * left > rest {
            break;
        }
        if rest - x > hi * (left - 1) {
            continue;
        }
        cur.push(x);
        extend(n, s, rest - x, x, hi, cur, out);
        cur.pop();
    }
}

/// `c_i = r_i - r_{i-1} + s [i = 1]` with `r_0 = r_n`.
pub fn phi(w: &WindowVector) -> Composition {
    let n = w.n;
    let parts = (0..n)
        .map(|i| {
            let prev = if i == 0 { w.r[n - 1] } else { w.r[i - 1] };
            let extra = if i == 0 { w.s } else { 0 };
            (w.r[i] - prev + extra) as usize
        })
        .collect();
    Composition::new(parts)
}

/// `r_n = (m - s + sum_i i c_i) / n`, `r_j = r_n - (c_{j+1} + ... + c_n)`.
pub fn phi_inverse(c: &Composition, s: i64, m: i64) -> Result<WindowVector> {
    let n = c.len();
    if n == 0 || c.total() as i64 != s {
        return invalid(format!("composition {:?} does not have total {s}", c.parts));
    }
    let weighted: i64 = c
        .parts
        .iter()
        .enumerate()
        .map(|(i, &x)| (i as i64 + 1) * x as i64)
        .sum();
    let num = m - s + weighted;
    if num.rem_euclid(n as i64) != 0 {
        return invalid(format!(
            "composition {:?} fails the congruence for valuation {m}",
            c.parts
        ));
    }
    let rn = num / n as i64;
    let mut r = vec![0i64; n];
    let mut tail = 0i64;
    for j in (0..n).rev() {
        r[j] = rn - tail;
        tail += c.parts[j] as i64;
    }
    WindowVector::new(s, r)
}

/// Whether `c` is the image of a window vector of valuation `m`.
pub fn in_c_sm(c: &Composition, s: i64, m: i64) -> bool {
    phi_inverse(c, s, m).is_ok()
}

/// The rotation class of `phi(r)`.
pub fn psi(c: &Composition) -> CyclicClass {
    let representative = c.min_rotation();
    CyclicClass {
        period: representative.period(),
        representative,
    }
}

pub fn window_cells(w: &WindowVector) -> Result<DualArrangement> {
    dual_arrangement(&phi(w))
}

/// Cell sizes of the dual arrangement of `phi(r)`.
pub fn jordan_type_of_window(w: &WindowVector) -> Result<Partition> {
    Ok(Partition::from_sizes(window_cells(w)?.cells.parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_windows() {
        let rs: Vec<_> = enumerate_r(3, 2, 0)
            .unwrap()
            .into_iter()
            .map(|w| w.r)
            .collect();
        assert_eq!(rs, vec![vec![-1, 0, 1], vec![0, 0, 0]]);
        let rs: Vec<_> = enumerate_r(2, 3, 0)
            .unwrap()
            .into_iter()
            .map(|w| w.r)
            .collect();
        assert_eq!(rs, vec![vec![-1, 1], vec![0, 0]]);
        assert_eq!(enumerate_r(5, 1, 3).unwrap().len(), 1);
        assert!(enumerate_r(4, 2, 0).is_err());
    }

    #[test]
    fn phi_values() {
        let w = WindowVector::new(2, vec![-1, 0, 1]).unwrap();
        assert_eq!(phi(&w).parts, vec![0, 1, 1]);
        let w0 = WindowVector::new(2, vec![0, 0, 0]).unwrap();
        assert_eq!(phi(&w0).parts, vec![2, 0, 0]);
        let back = phi_inverse(&Composition::new(vec![0, 1, 1]), 2, 0).unwrap();
        assert_eq!(back.r, vec![-1, 0, 1]);
        assert!(phi_inverse(&Composition::new(vec![1, 1, 0]), 2, 0).is_err());
    }

    #[test]
    fn jordan_types() {
        let w = WindowVector::new(2, vec![0, 0, 0]).unwrap();
        assert_eq!(jordan_type_of_window(&w).unwrap().parts, vec![3]);
        let w = WindowVector::new(2, vec![-1, 0, 1]).unwrap();
        assert_eq!(jordan_type_of_window(&w).unwrap().parts, vec![2, 1]);
    }

    #[test]
    fn all_ones_cells_give_zero_type() {
        for n in 2..6usize {
            let s = n as i64 + 1;
            let mut b = vec![1usize; n];
            b.push(0);
            // the dual of b has n boxes holding s balls
            let c = dual_arrangement(&Composition::new(b)).unwrap().cells;
            let m: i64 = (0..n as i64)
                .find(|&m| in_c_sm(&c, s, m))
                .expect("some valuation fits");
            let w = phi_inverse(&c, s, m).unwrap();
            assert_eq!(jordan_type_of_window(&w).unwrap().parts, vec![1; n]);
        }
    }
}
