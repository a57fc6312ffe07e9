use proptest::prelude::*;
use springer_core::combinatorics::gcd;
use springer_core::laurent::{
    char_poly, eigen_valuations, homogeneity_index, q, CharPoly, HomogeneityIndex, LaurentMatrix,
    LaurentScalar, Q,
};
use springer_core::type_a::standard_rep_sl;

fn scalar() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-3i64..=3, -2i64..=3), 0..3).prop_map(|terms| {
        LaurentScalar::from_terms(terms.into_iter().map(|(c, e)| (e, q(c))), None)
    })
}

fn matrix(n: usize) -> impl Strategy<Value = LaurentMatrix> {
    prop::collection::vec(scalar(), n * n)
        .prop_map(move |v| LaurentMatrix::from_fn(n, |i, j| v[i * n + j].clone()))
}

fn sized_matrix() -> impl Strategy<Value = LaurentMatrix> {
    (1usize..=4).prop_flat_map(matrix)
}

/// Polynomials in mu with Laurent coefficients, lowest degree first.
type Poly = Vec<LaurentScalar>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![LaurentScalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![LaurentScalar::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = &out[i] + x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] = &out[i] + x;
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(vec![], false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting at pos crosses n - 1 - pos larger-indexed slots
            out.push((q, odd ^ ((n - 1 - pos) % 2 == 1)));
        }
    }
    out
}

/// `det(mu I - M)` by the Leibniz expansion.
fn leibniz_char_poly(m: &LaurentMatrix) -> CharPoly {
    let n = m.dim();
    let entry = |i: usize, j: usize| -> Poly {
        let mut p = vec![-m.get(i, j)];
        if i == j {
            p.push(LaurentScalar::one());
        }
        p
    };
    let mut total: Poly = vec![LaurentScalar::zero()];
    for (perm, odd) in permutations(n) {
        let mut term: Poly = vec![LaurentScalar::one()];
        for (i, &j) in perm.iter().enumerate() {
            term = poly_mul(&term, &entry(i, j));
        }
        if odd {
            term = term.iter().map(|x| -x).collect();
        }
        total = poly_add(&total, &term);
    }
    total.resize(n + 1, LaurentScalar::zero());
    total.reverse();
    CharPoly { coeffs: total }
}

/// Upper unitriangular with Laurent polynomial entries; inverse by adjugate.
fn unipotent(n: usize) -> impl Strategy<Value = LaurentMatrix> {
    prop::collection::vec(scalar(), n * n).prop_map(move |v| {
        LaurentMatrix::from_fn(n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => LaurentScalar::one(),
            std::cmp::Ordering::Less => v[i * n + j].clone(),
            std::cmp::Ordering::Greater => LaurentScalar::zero(),
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_matches_leibniz(m in sized_matrix()) {
        prop_assert_eq!(char_poly(&m), leibniz_char_poly(&m));
    }

    #[test]
    fn char_poly_is_conjugation_invariant((m, g) in (1usize..=4).prop_flat_map(|n| (matrix(n), unipotent(n)))) {
        let g_inv = g.adjugate();
        prop_assert_eq!(&g * &g_inv, LaurentMatrix::identity(m.dim()));
        let conj = &(&g * &m) * &g_inv;
        prop_assert_eq!(char_poly(&conj), char_poly(&m));
    }

    #[test]
    fn ring_laws(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert!((&x - &x).is_exact_zero());
    }

    #[test]
    fn text_round_trip(x in scalar()) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<LaurentScalar>().unwrap(), x);
    }
}

#[test]
fn standard_rep_index_is_s_over_n() {
    for n in 1..=6usize {
        for s in 1..=7i64 {
            if gcd(n as i64, s) != 1 {
                continue;
            }
            for b in 1..=2 {
                let p = char_poly(&standard_rep_sl(n, s, &q(b)).unwrap());
                let index = homogeneity_index(&p).unwrap();
                assert_eq!(
                    index,
                    HomogeneityIndex::Index(Q::new(s.into(), (n as i64).into())),
                    "n={n} s={s}"
                );
                assert!(eigen_valuations(&p).unwrap().consistent);
            }
        }
    }
}

#[test]
fn non_homogeneous_polynomial_detected() {
    let p = CharPoly::monic(vec![LaurentScalar::pi_pow(1), LaurentScalar::pi_pow(5)]);
    assert_eq!(
        homogeneity_index(&p).unwrap(),
        HomogeneityIndex::NotHomogeneous
    );
    let truncated = CharPoly::monic(vec![LaurentScalar::from_terms([(1, q(1))], Some(4))]);
    assert!(homogeneity_index(&truncated).is_err());
}
