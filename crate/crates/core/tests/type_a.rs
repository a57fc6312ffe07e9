use num_bigint::BigUint;
use proptest::prelude::*;
use springer_core::checks::{run_named, Ranges};
use springer_core::combinatorics::{gcd, Composition};
use springer_core::type_a::{
    enumerate_chains, enumerate_r, euler_sl, euler_sl_oracle, in_c_sm, phi, phi_inverse,
    springer_euler_sl, springer_euler_sl_oracle, ParahoricTypeA,
};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

#[test]
fn published_values() {
    let full = ParahoricTypeA::full(3);
    assert_eq!(euler_sl(3, 2, &full).unwrap(), big(4));
    assert_eq!(euler_sl_oracle(3, 2, &full).unwrap(), big(4));
    let single = ParahoricTypeA::new(3, vec![0]).unwrap();
    assert_eq!(euler_sl(3, 2, &single).unwrap(), big(2));
    assert_eq!(euler_sl_oracle(3, 2, &single).unwrap(), big(2));
    assert_eq!(
        springer_euler_sl(&[2, 1], Some(&[1, 2]), None).unwrap(),
        big(3)
    );
    assert_eq!(
        springer_euler_sl(&[2, 1], Some(&[1]), None).unwrap(),
        big(2)
    );
    assert_eq!(springer_euler_sl(&[1, 1, 1], None, None).unwrap(), big(6));
    assert_eq!(springer_euler_sl(&[3], None, None).unwrap(), big(1));
}

#[test]
fn rejects_bad_parameters() {
    assert!(euler_sl(4, 2, &ParahoricTypeA::full(4)).is_err());
    assert!(ParahoricTypeA::new(3, vec![]).is_err());
    assert!(ParahoricTypeA::new(3, vec![3]).is_err());
    assert!(springer_euler_sl(&[2, 0], None, None).is_err());
}

#[test]
fn window_count_is_independent_of_valuation() {
    for n in 1..=6usize {
        for s in 1..=7i64 {
            if gcd(n as i64, s) != 1 {
                continue;
            }
            let sizes: Vec<usize> = (-2..=2)
                .map(|m| enumerate_r(n, s, m).unwrap().len())
                .collect();
            assert!(sizes.windows(2).all(|w| w[0] == w[1]), "n={n} s={s}");
        }
    }
}

#[test]
fn suites_pass() {
    let ranges = Ranges::default();
    for name in [
        "window-vectors-compositions",
        "steps-intersection-matrices",
        "type-a-chains-vs-formula",
        "springer-type-a",
    ] {
        let report = run_named(name, &ranges).unwrap();
        assert!(report.passed(), "{report}");
    }
}

fn coprime_case() -> impl Strategy<Value = (usize, i64)> {
    (2usize..=5, 1i64..=7).prop_filter("coprime", |&(n, s)| gcd(n as i64, s) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn formula_matches_chain_count(((n, s), mask) in (coprime_case(), 1u32..32)) {
        let i_set: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).collect();
        prop_assume!(!i_set.is_empty());
        let p = ParahoricTypeA::new(n, i_set).unwrap();
        prop_assert_eq!(euler_sl(n, s, &p).unwrap(), euler_sl_oracle(n, s, &p).unwrap());
    }

    #[test]
    fn chain_count_ignores_valuation(((n, s), mask) in (coprime_case(), 1u32..32)) {
        let i_set: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).collect();
        prop_assume!(!i_set.is_empty());
        let (_, j) = ParahoricTypeA::new(n, i_set).unwrap().to_levels();
        let a = enumerate_chains(n, s, &j, 0).unwrap().len();
        let b = enumerate_chains(n, s, &j, 1).unwrap().len();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn phi_inverts_on_its_image(((n, s), m, parts) in (coprime_case(), -2i64..=2, prop::collection::vec(0usize..4, 5))) {
        let mut parts: Vec<usize> = parts[..n].to_vec();
        let total: usize = parts.iter().sum();
        // rebalance to total s
        if total < s as usize {
            parts[0] += s as usize - total;
        } else {
            let mut excess = total - s as usize;
            for x in parts.iter_mut() {
                let take = excess.min(*x);
                *x -= take;
                excess -= take;
            }
        }
        let c = Composition::new(parts);
        if in_c_sm(&c, s, m) {
            let w = phi_inverse(&c, s, m).unwrap();
            prop_assert_eq!(phi(&w), c);
            prop_assert_eq!(w.r.iter().sum::<i64>(), m);
        } else {
            prop_assert!(phi_inverse(&c, s, m).is_err());
        }
    }

    #[test]
    fn springer_count_is_independent_of_s(parts in prop::collection::vec(1usize..=2, 1..=3)) {
        let n: usize = parts.iter().sum();
        let admissible: Vec<i64> = (parts.len() as i64 + 1..20).filter(|&s| gcd(s, n as i64) == 1).take(2).collect();
        let a = springer_euler_sl(&parts, None, Some(admissible[0])).unwrap();
        let b = springer_euler_sl(&parts, None, Some(admissible[1])).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(springer_euler_sl_oracle(&parts, None, Some(admissible[1])).unwrap(), a);
    }
}
