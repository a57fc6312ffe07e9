use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use springer_core::combinatorics::{
    binomial, cyclic_classes, dual_arrangement, enumerate_compositions, factorial, gcd,
    multinomial, Composition,
};

#[test]
fn composition_counts() {
    for t in 1..=8 {
        for d in 0..=8 {
            let all = enumerate_compositions(t, d).unwrap();
            assert_eq!(
                BigUint::from(all.len()),
                binomial((t + d - 1) as u64, d as i64),
                "t={t} d={d}"
            );
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|c| c.len() == t && c.total() == d));
        }
    }
}

#[test]
fn coprime_necklaces_are_free() {
    for t in 1..=8 {
        for d in 1..=8 {
            if gcd(t as i64, d as i64) != 1 {
                continue;
            }
            let classes = cyclic_classes(t, d);
            assert!(classes.iter().all(|c| c.period == t), "t={t} d={d}");
            assert_eq!(
                t * classes.len(),
                enumerate_compositions(t, d).unwrap().len()
            );
        }
    }
}

#[test]
fn duality_exchanges_necklaces() {
    for n in 1..=8usize {
        for s in 1..=8usize {
            if gcd(n as i64, s as i64) != 1 {
                continue;
            }
            let mut image = BTreeSet::new();
            for class in cyclic_classes(n, s) {
                let dual = dual_arrangement(&class.representative).unwrap();
                assert_eq!(dual.cells.len(), s);
                assert_eq!(dual.cells.total(), n);
                let walls: Vec<usize> = dual.walls.concat();
                assert_eq!(walls.len(), n);
                image.insert(dual.cells.min_rotation());
            }
            let target: BTreeSet<Composition> = cyclic_classes(s, n)
                .into_iter()
                .map(|c| c.representative)
                .collect();
            assert_eq!(image, target, "n={n} s={s}");
        }
    }
}

#[test]
fn duality_is_rotation_invariant_up_to_rotation() {
    let c = Composition::new(vec![0, 2, 1, 0, 4]);
    let base = dual_arrangement(&c).unwrap().cells;
    for k in 0..c.len() {
        let rotated = dual_arrangement(&c.rotate(k)).unwrap().cells;
        assert!(rotated.is_rotation_of(&base));
    }
}

#[test]
fn small_dual_arrangement() {
    let d = dual_arrangement(&Composition::new(vec![0, 1, 1])).unwrap();
    assert_eq!(d.cells.parts, vec![2, 1]);
    assert!(dual_arrangement(&Composition::new(vec![1, 1])).is_err());
}

#[test]
fn multinomials_match_factorials() {
    for parts in [
        vec![3],
        vec![2, 1],
        vec![1, 1, 1],
        vec![3, 2, 2],
        vec![4, 0, 1],
    ] {
        let n: usize = parts.iter().sum();
        let denom: BigUint = parts.iter().map(|&p| factorial(p as u64)).product();
        assert_eq!(multinomial(&parts), factorial(n as u64) / denom);
    }
}

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(0usize..4, 1..8).prop_map(Composition::new)
}

proptest! {
    #[test]
    fn pascal_rule(a in 1u64..40, b in 1i64..40) {
        prop_assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
    }

    #[test]
    fn min_rotation_is_a_rotation(c in composition()) {
        let m = c.min_rotation();
        prop_assert!(m.is_rotation_of(&c));
        prop_assert!((0..c.len()).all(|k| m <= c.rotate(k)));
        prop_assert_eq!(c.len() % c.period(), 0);
        prop_assert_eq!(c.rotate(c.period()), c);
    }

    #[test]
    fn rotation_preserves_class(c in composition(), k in 0usize..8) {
        prop_assert_eq!(c.rotate(k).min_rotation(), c.min_rotation());
    }
}
