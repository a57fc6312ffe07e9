//! Exhaustive verification suites shared by the command line tool and the
//! acceptance tests. Each check counts the cases it examined and keeps the
//! first counterexample.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::combinatorics::{
    cyclic_classes, factorial, gcd, multinomial, nonempty_subsets, subsets_of_size, Composition,
    Compositions, CyclicClass,
};
use crate::error::{Error, Result};
use crate::lattice::{
    induced_endomorphism, jordan_type, stabilizes_diagonal, verify_almost_commute, DiagonalLattice,
};
use crate::laurent::{char_poly, q, CharPoly};
use crate::type_a::{
    chain_of_sigma, count_intersection_matrices, default_springer_s,
    enumerate_intersection_matrices, enumerate_r, enumerate_sigmas, euler_sl, euler_sl_fiber_sum,
    euler_sl_full_flag_fibers, euler_sl_oracle, in_c_sm, intersection_matrix_of_sigma,
    jordan_type_of_window, nu_sl, phi, phi_inverse, psi, sigma_of_chain, sigma_of_matrix,
    springer_euler_sl, springer_euler_sl_oracle, standard_rep_sl, window_cells, ParahoricTypeA,
};
use crate::type_c::{
    alpha, beta, compare_with_sl, count_g, delta_out_edges, enumerate_e, enumerate_g,
    enumerate_r_sp, eta, eta0_inverse, euler_sp, euler_sp_fiber_sum, euler_sp_oracle, fiber_count,
    game_outcomes, gamma, gamma_brute, hyperoctahedral_order, integer_partitions, marker_sum,
    nu_sp, pooled_gamma, pooled_gamma_brute, psi_sp, psi_sp_inverse, q_coords, q_coords_inverse,
    springer_base_window, springer_euler_sp, springer_euler_sp_oracle, standard_rep_sp,
    succession_counts, succession_counts_scan, symplectic_partitions, tau, vertex_of_window,
    vertices, wall_cells, window_of_vertex, zeta, PathTuple, SpQVector, SpVertex, SpWindowVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Bijections,
    Oracles,
    Matrix,
    Identities,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bijections" => Ok(Suite::Bijections),
            "oracles" => Ok(Suite::Oracles),
            "matrix" => Ok(Suite::Matrix),
            "identities" => Ok(Suite::Identities),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

/// Upper bounds for the parameter sweeps. Individual checks clamp these to
/// sizes they can finish quickly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ranges {
    pub n_max: usize,
    pub s_max: i64,
}

impl Default for Ranges {
    fn default() -> Self {
        Ranges { n_max: 5, s_max: 7 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: Suite,
    pub name: &'static str,
    pub identity: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.cases > 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(
            f,
            "{status:4} {:<44} {:>7} cases  {}",
            self.name, self.cases, self.identity
        )?;
        if let Some(msg) = &self.failure {
            write!(f, "\n     first counterexample: {msg}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
pub struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    pub fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, ctx: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, expected {want:?}", ctx()));
    }
}

type CheckFn = fn(&Ranges, &mut Tally) -> Result<()>;

pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub identity: &'static str,
    run: CheckFn,
}

impl Check {
    pub fn run(&self, ranges: &Ranges) -> CheckReport {
        let mut tally = Tally::default();
        if let Err(e) = (self.run)(ranges, &mut tally) {
            tally.failure.get_or_insert(format!("error: {e}"));
        }
        CheckReport {
            suite: self.suite,
            name: self.name,
            identity: self.identity,
            cases: tally.cases,
            failure: tally.failure,
        }
    }
}

macro_rules! check {
    ($suite:ident, $name:literal, $identity:literal, $f:ident) => {
        Check {
            suite: Suite::$suite,
            name: $name,
            identity: $identity,
            run: $f,
        }
    };
}

pub fn registry() -> Vec<Check> {
    vec![
        check!(
            Bijections,
            "window-vectors-compositions",
            "phi and its inverse on R_sm and C_sm",
            window_compositions
        ),
        check!(
            Bijections,
            "steps-intersection-matrices",
            "sigma <-> Q over each base vector",
            steps_matrices
        ),
        check!(
            Bijections,
            "symplectic-q-coordinates",
            "R^Sp_sI <-> C^Sp_sI",
            sp_q_coordinates
        ),
        check!(
            Bijections,
            "q-coordinates-vertices",
            "C^Sp_sI <-> G^Sp_sI by floor splitting",
            q_vertices
        ),
        check!(
            Bijections,
            "pooling-marker-free-vertices",
            "eta_0 and tau fibers",
            pooling
        ),
        check!(
            Oracles,
            "type-a-chains-vs-formula",
            "chain count == s^-1 prod binom(s+p_i-1, p_i)",
            type_a_oracle
        ),
        check!(
            Oracles,
            "type-c-formula-paths-chains",
            "formula == path count == chain count",
            type_c_triple
        ),
        check!(
            Oracles,
            "type-c-matrix-fibers",
            "paths grouped by matrix == prod prod (q_ik+1)",
            zeta_fibers
        ),
        check!(
            Oracles,
            "graph-edges-vs-window-order",
            "edge v->w iff window(v) <= window(w)",
            edge_criterion
        ),
        check!(
            Oracles,
            "reachability-vs-common-path",
            "consecutive reachability == one path through all",
            common_path
        ),
        check!(
            Oracles,
            "stable-diagonal-lattices",
            "windows == stable diagonal lattices in a box",
            stable_diagonals
        ),
        check!(
            Oracles,
            "springer-type-a",
            "n!/prod n_i! == matrix sum == step-assignment count",
            springer_a
        ),
        check!(
            Oracles,
            "springer-type-c",
            "n! 2^sum/prod == matrix sum == chain count",
            springer_c
        ),
        check!(
            Oracles,
            "jordan-type-a",
            "cell sizes == rank-of-powers Jordan type",
            jordan_a
        ),
        check!(
            Oracles,
            "jordan-type-c",
            "(2n_0, n_i, n_i) == rank-of-powers Jordan type",
            jordan_c
        ),
        check!(
            Matrix,
            "special-linear-representative",
            "char == mu^n - b pi^s, almost commuting",
            matrix_sl
        ),
        check!(
            Matrix,
            "symplectic-representative",
            "M^T J + J M == 0, char == h(mu^2), almost commuting",
            matrix_sp
        ),
        check!(
            Identities,
            "succession-counts",
            "g_nmj == binom(m,j) binom(n-m,m-j)",
            successions_identity
        ),
        check!(
            Identities,
            "vertex-level-counts",
            "|G_m| == |R^Sp_m| == binom(t+m,m) binom(t+n-m,n-m)",
            level_counts
        ),
        check!(
            Identities,
            "weighted-marker-sum",
            "sum i eps_i == n-m or -m",
            weighted_marker_sum
        ),
        check!(
            Identities,
            "symplectic-in-special-linear",
            "C^Sp_sm inside C_sm",
            sp_inside_sl
        ),
        check!(
            Identities,
            "gamma-sum",
            "sum_{C^t_d} prod (y_k+1) == binom(2t+d-1,d)",
            gamma_identity
        ),
        check!(
            Identities,
            "pooled-gamma-sum",
            "sum_{C^(t+1)_d} prod_(k>=1) (z_k+1) == binom(2t+d,d)",
            pooled_gamma_identity
        ),
        check!(
            Identities,
            "single-cell-game",
            "outcomes == 1 (one side) or prod (z_i+1) (two sides)",
            single_cell_game
        ),
        check!(
            Identities,
            "symplectic-vs-special-linear",
            "sp <= sl, equal iff n == 1 or s == 1",
            sp_vs_sl
        ),
        check!(
            Identities,
            "intersection-matrix-count",
            "|Q_Js| == prod binom(s+p_i-1, p_i)",
            matrix_count
        ),
    ]
}

pub fn run(suite: Suite, ranges: &Ranges) -> Vec<CheckReport> {
    registry()
        .into_iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| c.run(ranges))
        .collect()
}

pub fn run_named(name: &str, ranges: &Ranges) -> Option<CheckReport> {
    registry()
        .into_iter()
        .find(|c| c.name == name)
        .map(|c| c.run(ranges))
}

fn coprime_pairs(n_lo: usize, n_hi: usize, s_max: i64) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        for s in 1..=s_max {
            if gcd(n as i64, s) == 1 {
                out.push((n, s));
            }
        }
    }
    out
}

fn odd_coprime_pairs(n_hi: usize, s_max: i64) -> Vec<(usize, i64)> {
    coprime_pairs(1, n_hi, s_max)
        .into_iter()
        .filter(|&(_, s)| s % 2 == 1)
        .collect()
}

/// Level sets `J` ending in `n`, one per distinct gap pattern of a type set.
fn level_sets(n: usize) -> Vec<Vec<usize>> {
    let set: BTreeSet<Vec<usize>> = nonempty_subsets(0, n - 1)
        .into_iter()
        .map(|i| ParahoricTypeA { n, i_set: i }.to_levels().1)
        .collect();
    set.into_iter().collect()
}

fn window_compositions(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in coprime_pairs(1, r.n_max.min(6), r.s_max) {
        let classes: BTreeSet<CyclicClass> = cyclic_classes(n, s as usize).into_iter().collect();
        let size =
            factorial((n as u64) + s as u64 - 1) / (factorial(n as u64) * factorial(s as u64));
        for m in -2..=2 {
            let windows = enumerate_r(n, s, m)?;
            t.eq(BigUint::from(windows.len()), size.clone(), || {
                format!("|R_sm| for n={n} s={s} m={m}")
            });
            let mut hit = BTreeMap::new();
            for w in &windows {
                let c = phi(w);
                t.check(in_c_sm(&c, s, m), || {
                    format!("phi(r) outside C_sm for r={:?}", w.r)
                });
                t.eq(phi_inverse(&c, s, m)?, w.clone(), || {
                    format!("n={n} s={s} r={:?}", w.r)
                });
                *hit.entry(psi(&c)).or_insert(0usize) += 1;
            }
            t.check(hit.values().all(|&k| k == 1), || {
                format!("a class hit twice for n={n} s={s} m={m}")
            });
            let hit: BTreeSet<CyclicClass> = hit.into_keys().collect();
            t.eq(&hit, &classes, || {
                format!("classes missed for n={n} s={s} m={m}")
            });
            let hits = Compositions::new(n, s as usize)
                .filter(|c| in_c_sm(&Composition::new(c.clone()), s, m))
                .count();
            t.eq(hits, windows.len(), || {
                format!("|C_sm| for n={n} s={s} m={m}")
            });
        }
    }
    Ok(())
}

fn steps_matrices(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in coprime_pairs(2, r.n_max.min(4), r.s_max) {
        for j in level_sets(n) {
            for base in enumerate_r(n, s, 0)? {
                let cells = window_cells(&base)?;
                let sigmas = enumerate_sigmas(&base, &j);
                let mut seen = BTreeSet::new();
                for sg in &sigmas {
                    let qm = intersection_matrix_of_sigma(sg, &j, &cells.walls);
                    t.eq(&sigma_of_matrix(&qm, &j, &cells.walls)?, sg, || {
                        format!("n={n} s={s} J={j:?} r={:?}", base.r)
                    });
                    let chain = chain_of_sigma(&base, sg, &j)?;
                    t.eq(&sigma_of_chain(&chain, &j)?, sg, || {
                        format!("chain round trip r={:?}", base.r)
                    });
                    seen.insert(qm);
                }
                let mut d = vec![0];
                d.extend_from_slice(&j);
                let all = enumerate_intersection_matrices(&d, s as usize, Some(&cells.cells.parts));
                t.eq(seen.len(), sigmas.len(), || {
                    format!("injectivity at r={:?} J={j:?}", base.r)
                });
                t.eq(all.len(), sigmas.len(), || {
                    format!("surjectivity at r={:?} J={j:?}", base.r)
                });
            }
        }
    }
    Ok(())
}

fn sp_q_coordinates(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(4), r.s_max) {
        for m in 0..=n {
            let windows = enumerate_r_sp(n, s, m)?;
            for w in &windows {
                let qv = q_coords(w);
                let rebuilt = SpQVector::new(s, qv.c.clone())?;
                t.eq(&rebuilt, &qv, || format!("marker recovery for r={:?}", w.r));
                t.eq(&q_coords_inverse(&qv)?, w, || {
                    format!("q round trip r={:?}", w.r)
                });
            }
            let hits = Compositions::new(2 * n, s as usize)
                .filter_map(|c| SpQVector::new(s, c).ok())
                .filter(|qv| qv.m() == m)
                .count();
            t.eq(hits, windows.len(), || {
                format!("|C^Sp_sm| for n={n} s={s} m={m}")
            });
        }
    }
    Ok(())
}

fn q_vertices(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(4), r.s_max) {
        for m in 0..=n {
            for w in enumerate_r_sp(n, s, m)? {
                let qv = q_coords(&w);
                let v = psi_sp(&qv);
                t.eq(v.markers(), qv.markers.clone(), || {
                    format!("markers of psi(q) for r={:?}", w.r)
                });
                t.eq(psi_sp_inverse(&v)?, qv, || {
                    format!("psi round trip r={:?}", w.r)
                });
            }
        }
        for v in vertices(n, s)? {
            t.eq(psi_sp(&psi_sp_inverse(&v)?), v.clone(), || {
                format!("vertex round trip p={:?}", v.p)
            });
            t.eq(vertex_of_window(&window_of_vertex(&v)?), v.clone(), || {
                format!("p={:?}", v.p)
            });
        }
    }
    Ok(())
}

fn pooling(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(4), r.s_max) {
        let tt = ((s - 1) / 2) as usize;
        for a in Compositions::new(tt + 1, n) {
            let v = eta0_inverse(s, &a)?;
            t.eq(v.m(), 0, || format!("eta0_inverse({a:?}) has markers"));
            t.eq(eta(&v), a.clone(), || format!("eta(eta0_inverse({a:?}))"));
            let odd_empty = wall_cells(&v).iter().skip(1).step_by(2).all(|&b| b == 0);
            t.check(odd_empty, || format!("odd cells of eta0_inverse({a:?})"));
        }
        for v in enumerate_g(n, s, 0)? {
            t.eq(eta0_inverse(s, &eta(&v))?, v.clone(), || {
                format!("eta0 round trip p={:?}", v.p)
            });
        }
        for m in 0..=n {
            let mut built = BTreeSet::new();
            for a in Compositions::new(tt + 1, n) {
                for c in Compositions::new(tt + 1, m) {
                    if c.iter().zip(&a).any(|(x, y)| x > y) {
                        continue;
                    }
                    let v = tau(s, &a, &c)?;
                    t.eq(eta(&v), a.clone(), || format!("eta(tau({a:?}, {c:?}))"));
                    t.eq(v.m(), m, || format!("markers of tau({a:?}, {c:?})"));
                    built.insert(v);
                }
            }
            let level: BTreeSet<SpVertex> = enumerate_g(n, s, m)?.into_iter().collect();
            t.eq(built, level, || format!("tau image for n={n} s={s} m={m}"));
        }
    }
    Ok(())
}

fn type_a_oracle(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in coprime_pairs(2, r.n_max, r.s_max) {
        for i in nonempty_subsets(0, n - 1) {
            let p = ParahoricTypeA::new(n, i.clone())?;
            t.eq(euler_sl_oracle(n, s, &p)?, euler_sl(n, s, &p)?, || {
                format!("n={n} s={s} I={i:?}")
            });
        }
        let full = ParahoricTypeA::full(n);
        let want = euler_sl(n, s, &full)?;
        t.eq(
            want.clone(),
            BigUint::from(s as u64).pow(n as u32 - 1),
            || format!("s^(n-1) n={n} s={s}"),
        );
        t.eq(euler_sl_fiber_sum(n, s, &full)?, want.clone(), || {
            format!("fiber sum n={n} s={s}")
        });
        t.eq(euler_sl_full_flag_fibers(n, s)?, want, || {
            format!("multinomial fibers n={n} s={s}")
        });
    }
    Ok(())
}

fn sp_level_sets(n: usize, all: bool) -> Vec<Vec<usize>> {
    if all {
        nonempty_subsets(0, n)
    } else {
        let mut out: Vec<Vec<usize>> = (0..=n).map(|m| vec![m]).collect();
        out.push((0..=n).collect());
        out
    }
}

fn type_c_triple(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(4), r.s_max) {
        for j in sp_level_sets(n, n <= 3) {
            let f = euler_sp(n, s, &j)?;
            let ctx = || format!("n={n} s={s} J={j:?}");
            t.eq(euler_sp_oracle(n, s, &j)?, f.clone(), ctx);
            t.eq(BigUint::from(enumerate_e(n, s, &j)?.len()), f.clone(), ctx);
            t.eq(euler_sp_fiber_sum(n, s, &j)?, f, ctx);
        }
        let full: Vec<usize> = (0..=n).collect();
        t.eq(
            euler_sp(n, s, &full)?,
            BigUint::from(s as u64).pow(n as u32),
            || format!("s^n n={n} s={s}"),
        );
    }
    Ok(())
}

fn zeta_fibers(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(3), r.s_max) {
        let tt = ((s - 1) / 2) as usize;
        for j in nonempty_subsets(0, n) {
            let mut groups: BTreeMap<_, u64> = BTreeMap::new();
            for path in enumerate_e(n, s, &j)? {
                *groups.entry(zeta(&path)).or_default() += 1;
            }
            let mut d = vec![0];
            d.extend_from_slice(&j);
            d.push(n);
            for qm in enumerate_intersection_matrices(&d, tt + 1, None) {
                let got = groups.get(&qm).copied().unwrap_or(0);
                t.eq(BigUint::from(got), fiber_count(&qm), || {
                    format!("n={n} s={s} J={j:?} Q={:?}", qm.rows)
                });
            }
            t.check(
                groups.keys().all(|qm| {
                    qm.row_sums() == d.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>()
                }),
                || format!("matrix outside the expected shape for J={j:?}"),
            );
        }
    }
    Ok(())
}

fn edge_criterion(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(3), r.s_max.min(5)) {
        for m in 0..n {
            let lower = enumerate_g(n, s, m)?;
            let upper = enumerate_g(n, s, m + 1)?;
            for v in &lower {
                let out: BTreeSet<SpVertex> = delta_out_edges(v).into_iter().collect();
                let rv = window_of_vertex(v)?;
                for w in &upper {
                    let rw = window_of_vertex(w)?;
                    let below = rv.r.iter().zip(&rw.r).all(|(a, b)| a <= b);
                    t.eq(out.contains(w), below, || {
                        format!("v={:?} w={:?}", v.p, w.p)
                    });
                }
            }
        }
    }
    Ok(())
}

fn all_paths(v: &SpVertex, len: usize, cur: &mut Vec<SpVertex>, out: &mut Vec<Vec<SpVertex>>) {
    if len == 0 {
        out.push(cur.clone());
        return;
    }
    for w in delta_out_edges(v) {
        cur.push(w.clone());
        all_paths(&w, len - 1, cur, out);
        cur.pop();
    }
}

fn common_path(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(3), r.s_max.min(5)) {
        for j in nonempty_subsets(0, n) {
            let mut projected = BTreeSet::new();
            for v in enumerate_g(n, s, j[0])? {
                let mut paths = Vec::new();
                all_paths(&v, j[j.len() - 1] - j[0], &mut vec![v.clone()], &mut paths);
                for p in paths {
                    let picked = j.iter().map(|&m| p[m - j[0]].clone()).collect();
                    projected.insert(PathTuple { vertices: picked });
                }
            }
            let listed: BTreeSet<PathTuple> = enumerate_e(n, s, &j)?.into_iter().collect();
            t.eq(listed, projected, || format!("n={n} s={s} J={j:?}"));
        }
    }
    Ok(())
}

fn boxed(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn stable_diagonals(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in coprime_pairs(1, r.n_max.min(3), r.s_max.min(5)) {
        let nmat = standard_rep_sl(n, s, &q(1))?;
        for m in 0..n as i64 {
            let want: BTreeSet<Vec<i64>> = enumerate_r(n, s, m)?.into_iter().map(|w| w.r).collect();
            let mut got = BTreeSet::new();
            for v in boxed(n, -s - 1, s + 1) {
                if v.iter().sum::<i64>() == m
                    && stabilizes_diagonal(&nmat, &DiagonalLattice::new(v.clone()))?
                {
                    got.insert(v);
                }
            }
            t.eq(got, want, || format!("type A n={n} s={s} m={m}"));
        }
    }
    for (n, s) in odd_coprime_pairs(r.n_max.min(3), r.s_max.min(5)) {
        let nmat = standard_rep_sp(n, s, &q(1))?;
        for m in 0..=n {
            let want: BTreeSet<Vec<i64>> =
                enumerate_r_sp(n, s, m)?.into_iter().map(|w| w.r).collect();
            let mut got = BTreeSet::new();
            for idx in subsets_of_size(n, m) {
                for v in boxed(n, -s - 1, s + 1) {
                    let mut full = v.clone();
                    full.extend((0..n).map(|i| -v[i] + idx.contains(&i) as i64));
                    if stabilizes_diagonal(&nmat, &DiagonalLattice::new(full.clone()))? {
                        got.insert(full);
                    }
                }
            }
            t.eq(got, want, || format!("type C n={n} s={s} m={m}"));
        }
    }
    Ok(())
}

fn springer_a(r: &Ranges, t: &mut Tally) -> Result<()> {
    for n in 1..=r.n_max.min(6) {
        for parts in integer_partitions(n) {
            let closed = multinomial(&parts);
            let ctx = || format!("partition {parts:?}");
            t.eq(springer_euler_sl(&parts, None, None)?, closed.clone(), ctx);
            t.eq(springer_euler_sl_oracle(&parts, None, None)?, closed, ctx);
            if n <= 4 {
                for i in nonempty_subsets(1, n.max(2) - 1)
                    .into_iter()
                    .filter(|i| i.iter().all(|&x| x < n))
                {
                    t.eq(
                        springer_euler_sl_oracle(&parts, Some(&i), None)?,
                        springer_euler_sl(&parts, Some(&i), None)?,
                        || format!("partition {parts:?} I={i:?}"),
                    );
                }
            }
        }
        t.eq(
            springer_euler_sl(&vec![1; n], None, None)?,
            factorial(n as u64),
            || format!("zero nilpotent n={n}"),
        );
        for parts in integer_partitions(n) {
            let s0 = default_springer_s(parts.len(), n);
            let mut s1 = s0 + 1;
            while gcd(s1, n as i64) != 1 {
                s1 += 1;
            }
            t.eq(
                springer_euler_sl(&parts, None, Some(s1))?,
                springer_euler_sl(&parts, None, Some(s0))?,
                || format!("s-independence for {parts:?} at s={s0},{s1}"),
            );
        }
    }
    Ok(())
}

fn springer_c(r: &Ranges, t: &mut Tally) -> Result<()> {
    for n in 1..=r.n_max.min(4) {
        for sp in symplectic_partitions(n) {
            let closed = sp.full_flag_count();
            let ctx = || format!("{sp:?}");
            t.eq(springer_euler_sp(&sp, None, None)?, closed.clone(), ctx);
            t.eq(springer_euler_sp_oracle(&sp, None, None)?, closed, ctx);
            if n <= 3 {
                for j in nonempty_subsets(1, n) {
                    t.eq(
                        springer_euler_sp_oracle(&sp, Some(&j), None)?,
                        springer_euler_sp(&sp, Some(&j), None)?,
                        || format!("{sp:?} J={j:?}"),
                    );
                }
            }
        }
        let zero = crate::type_c::SymplecticPartition::new(0, vec![1; n])?;
        t.eq(
            springer_euler_sp(&zero, None, None)?,
            hyperoctahedral_order(n),
            || format!("zero nilpotent n={n}"),
        );
        let regular = crate::type_c::SymplecticPartition::new(n, vec![])?;
        t.eq(
            springer_euler_sp(&regular, None, None)?,
            BigUint::from(1u8),
            || format!("regular n={n}"),
        );
    }
    Ok(())
}

fn jordan_a(r: &Ranges, t: &mut Tally) -> Result<()> {
    for n in 1..=r.n_max.min(6) {
        let s = n as i64 + 1;
        let nmat = standard_rep_sl(n, s, &q(1))?;
        for w in enumerate_r(n, s, 0)? {
            let residue = induced_endomorphism(&nmat, &DiagonalLattice::new(w.r.clone()))?;
            t.eq(jordan_type(&residue)?, jordan_type_of_window(&w)?, || {
                format!("n={n} s={s} r={:?}", w.r)
            });
        }
    }
    Ok(())
}

fn jordan_c(r: &Ranges, t: &mut Tally) -> Result<()> {
    for n in 1..=r.n_max.min(4) {
        for sp in symplectic_partitions(n) {
            let base: SpWindowVector = springer_base_window(&sp, None)?;
            let nmat = standard_rep_sp(n, base.s, &q(1))?;
            let residue = induced_endomorphism(&nmat, &DiagonalLattice::new(base.r.clone()))?;
            t.eq(jordan_type(&residue)?, sp.jordan_type(), || {
                format!("{sp:?} r={:?}", base.r)
            });
        }
    }
    Ok(())
}

fn matrix_sl(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in coprime_pairs(1, r.n_max.clamp(1, 6), r.s_max) {
        for b in 1..=3 {
            let m = standard_rep_sl(n, s, &q(b))?;
            let ctx = || format!("n={n} s={s} b={b}");
            t.eq(char_poly(&m), CharPoly::binomial_form(n, &q(b), s), ctx);
            t.check(verify_almost_commute(&m, &nu_sl(n, s), s), ctx);
            t.check(n == 1 || m.is_trace_zero(), || {
                format!("trace at n={n} s={s} b={b}")
            });
        }
    }
    Ok(())
}

fn matrix_sp(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(4), r.s_max.max(7)) {
        for b in 1..=3 {
            let m = standard_rep_sp(n, s, &q(b))?;
            let ctx = || format!("n={n} s={s} b={b}");
            t.check(m.is_symplectic_algebra_element(), ctx);
            t.eq(
                char_poly(&m),
                CharPoly::binomial_form(n, &q(b), s).substitute_square(),
                ctx,
            );
            t.check(verify_almost_commute(&m, &nu_sp(n, s), s), ctx);
        }
    }
    Ok(())
}

fn successions_identity(_: &Ranges, t: &mut Tally) -> Result<()> {
    for n in 0..=8 {
        for m in 0..=n {
            let scan: Vec<BigUint> = succession_counts_scan(n, m)
                .into_iter()
                .map(BigUint::from)
                .collect();
            t.eq(scan, succession_counts(n, m), || format!("n={n} m={m}"));
        }
    }
    Ok(())
}

fn level_counts(_: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(8, 7) {
        for m in 0..=n {
            let formula = count_g(n, s, m)?;
            let ctx = || format!("n={n} s={s} m={m}");
            t.eq(
                BigUint::from(enumerate_g(n, s, m)?.len()),
                formula.clone(),
                ctx,
            );
            if n <= 6 {
                t.eq(
                    BigUint::from(enumerate_r_sp(n, s, m)?.len()),
                    formula.clone(),
                    ctx,
                );
                t.eq(
                    enumerate_r_sp(n, s, n - m)?.len(),
                    enumerate_r_sp(n, s, m)?.len(),
                    ctx,
                );
            }
        }
    }
    Ok(())
}

fn weighted_marker_sum(_: &Ranges, t: &mut Tally) -> Result<()> {
    for n in 1..=8 {
        for mask in 0u32..(1 << n) {
            let markers: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let m = markers.len() as i64;
            let want = if markers.contains(&n) {
                n as i64 - m
            } else {
                -m
            };
            t.eq(marker_sum(n, &markers), want, || {
                format!("n={n} I={markers:?}")
            });
        }
    }
    Ok(())
}

fn sp_inside_sl(_: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(4, 7) {
        for m in 0..=n {
            for w in enumerate_r_sp(n, s, m)? {
                let c = Composition::new(q_coords(&w).c);
                t.check(in_c_sm(&c, s, m as i64), || {
                    format!("n={n} s={s} c={:?}", c.parts)
                });
            }
        }
    }
    Ok(())
}

fn gamma_identity(_: &Ranges, t: &mut Tally) -> Result<()> {
    for d in 0..=8 {
        for tt in 1..=8 {
            t.eq(gamma_brute(d, tt), gamma(d, tt), || format!("d={d} t={tt}"));
        }
    }
    Ok(())
}

fn pooled_gamma_identity(_: &Ranges, t: &mut Tally) -> Result<()> {
    for d in 0..=8 {
        for tt in 1..=8 {
            t.eq(pooled_gamma_brute(d, tt), pooled_gamma(d, tt), || {
                format!("d={d} t={tt}")
            });
        }
    }
    Ok(())
}

fn single_cell_game(_: &Ranges, t: &mut Tally) -> Result<()> {
    for d in 0..=5 {
        for l in 1..=3 {
            for z in Compositions::new(l + 1, d) {
                let ctx = || format!("d={d} z={z:?}");
                t.eq(BigUint::from(game_outcomes(d, &z, true)), beta(d, &z), ctx);
                t.eq(
                    BigUint::from(game_outcomes(d, &z, false)),
                    alpha(d, &z),
                    ctx,
                );
            }
        }
    }
    Ok(())
}

fn sp_vs_sl(r: &Ranges, t: &mut Tally) -> Result<()> {
    for (n, s) in odd_coprime_pairs(r.n_max.min(5), r.s_max) {
        for j in nonempty_subsets(0, n) {
            let c = compare_with_sl(n, s, &j)?;
            t.check(c.holds(), || {
                format!("n={n} s={s} J={j:?}: sp={} sl={}", c.sp, c.sl)
            });
        }
    }
    Ok(())
}

fn matrix_count(_: &Ranges, t: &mut Tally) -> Result<()> {
    for n in 1..=5 {
        for s in 1..=5 {
            for j in level_sets(n) {
                let mut d = vec![0];
                d.extend_from_slice(&j);
                t.eq(
                    BigUint::from(enumerate_intersection_matrices(&d, s, None).len()),
                    count_intersection_matrices(&d, s),
                    || format!("n={n} s={s} J={j:?}"),
                );
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        let ranges = Ranges { n_max: 3, s_max: 5 };
        for report in run(Suite::All, &ranges) {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("oracles".parse::<Suite>().unwrap(), Suite::Oracles);
        assert!("nope".parse::<Suite>().is_err());
    }
}
