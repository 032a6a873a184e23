use proptest::prelude::*;
use superjack::coeffring::{rat, AlphaRational, BigRational};
use superjack::ops::{apply, check_relations, cherednik_relations, sekiguchi_apply, symmetric_basis, Operator, Sekiguchi};
use superjack::superpoly::{Monomial, SuperPoly};

const N: usize = 3;

fn poly() -> impl Strategy<Value = SuperPoly<BigRational>> {
    prop::collection::vec((0u32..(1 << N), prop::collection::vec(0u16..=2, N), -5i64..=5), 1..5)
        .prop_map(|terms| SuperPoly::from_terms(N, terms.into_iter().map(|(t, e, c)| (Monomial::new(t, e), rat(c, 1)))))
}

fn alpha() -> impl Strategy<Value = BigRational> {
    (1i64..=5, 1i64..=3, any::<bool>()).prop_map(|(p, q, neg)| rat(if neg { -p } else { p }, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cherednik_operators_commute_and_satisfy_hecke(fs in prop::collection::vec(poly(), 3), a in alpha()) {
        let failures = check_relations(&cherednik_relations(N), &fs, &[], &a);
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn sekiguchi_commutes_with_exchanges(f in poly(), a in alpha()) {
        let s = sekiguchi_apply(Sekiguchi::S, &f, &a).unwrap();
        for i in 0..N - 1 {
            let swapped = sekiguchi_apply(Sekiguchi::S, &f.swap_both(i, i + 1), &a).unwrap();
            prop_assert_eq!(swapped, s.swap_both(i, i + 1));
        }
    }
}

#[test]
fn d_and_delta_commute_on_symmetric_inputs() {
    let a = AlphaRational::alpha();
    for f in symmetric_basis::<AlphaRational>(N, 5) {
        let dd = apply(&Operator::D, &apply(&Operator::Delta, &f, &a).unwrap(), &a).unwrap();
        let dd2 = apply(&Operator::Delta, &apply(&Operator::D, &f, &a).unwrap(), &a).unwrap();
        assert_eq!(dd, dd2, "[D, Delta] on {f}");
    }
}

#[test]
fn virasoro_and_fermionic_modes_stay_polynomial() {
    let a = AlphaRational::alpha();
    let ops: Vec<Operator> =
        (-3..=1).map(Operator::L).chain([-5, -3, -1, 1].into_iter().map(Operator::G)).collect();
    for f in symmetric_basis::<AlphaRational>(N, 4) {
        for op in &ops {
            assert!(apply(op, &f, &a).is_ok(), "{op} on {f}");
        }
    }
}
