use std::collections::BTreeMap;

use proptest::prelude::*;
use superjack::coeffring::{rat, AlphaPoly, AlphaRational, BigRational};
use superjack::ops::{apply, Operator};
use superjack::spart::SuperPartition;
use superjack::superpoly::{monomial_symmetric, Monomial, SuperPoly};

const N: usize = 3;

fn poly() -> impl Strategy<Value = SuperPoly<BigRational>> {
    prop::collection::vec((0u32..(1 << N), prop::collection::vec(0u16..=2, N), -5i64..=5, 1i64..=3), 0..6)
        .prop_map(|terms| SuperPoly::from_terms(N, terms.into_iter().map(|(t, e, p, q)| (Monomial::new(t, e), rat(p, q)))))
}

fn alpha_poly() -> impl Strategy<Value = SuperPoly<AlphaRational>> {
    prop::collection::vec((0u32..(1 << N), prop::collection::vec(0u16..=2, N), -3i64..=3, -2i64..=2, 1i64..=3), 0..5)
        .prop_map(|terms| {
            SuperPoly::from_terms(
                N,
                terms.into_iter().map(|(t, e, a, b, d)| {
                    (Monomial::new(t, e), AlphaRational::new(AlphaPoly::from_ints(&[a, b]), AlphaPoly::from_ints(&[d, 1])))
                }),
            )
        })
}

fn parity_part(f: &SuperPoly<BigRational>, odd: bool) -> SuperPoly<BigRational> {
    SuperPoly::from_terms(
        f.nvars(),
        f.terms().filter(|(m, _)| (m.theta_degree() % 2 == 1) == odd).map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn labels() -> Vec<SuperPartition> {
    (0..=4).flat_map(|n| (0..=N).flat_map(move |m| SuperPartition::enumerate(n, m, N))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn product_is_associative(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
    }

    #[test]
    fn product_is_supercommutative(f in poly(), g in poly()) {
        for fo in [false, true] {
            for go in [false, true] {
                let (a, b) = (parity_part(&f, fo), parity_part(&g, go));
                let ba = b.mul(&a);
                prop_assert_eq!(a.mul(&b), if fo && go { ba.neg() } else { ba });
            }
        }
    }

    #[test]
    fn exterior_derivatives_square_to_zero(f in poly()) {
        let a = rat(-3, 2);
        for op in [Operator::SmallQ, Operator::QTilde] {
            let once = apply(&op, &f, &a).unwrap();
            prop_assert!(apply(&op, &once, &a).unwrap().is_zero(), "{}", op);
        }
    }

    #[test]
    fn json_round_trip(f in alpha_poly(), g in poly()) {
        prop_assert_eq!(SuperPoly::<AlphaRational>::from_json(&f.to_json(), Some(N)).unwrap(), f);
        prop_assert_eq!(SuperPoly::<BigRational>::from_json(&g.to_json(), Some(N)).unwrap(), g);
    }

    #[test]
    fn monomial_basis_round_trip(coeffs in prop::collection::vec(-4i64..=4, 64)) {
        let by_degree: BTreeMap<(usize, usize), Vec<SuperPartition>> =
            labels().into_iter().fold(BTreeMap::new(), |mut acc, l| {
                acc.entry(l.degree()).or_default().push(l);
                acc
            });
        for (i, ls) in by_degree.values().enumerate() {
            let map: BTreeMap<SuperPartition, BigRational> = ls
                .iter()
                .enumerate()
                .map(|(j, l)| (l.clone(), rat(coeffs[(i * 7 + j) % coeffs.len()], 1)))
                .filter(|(_, c)| *c != rat(0, 1))
                .collect();
            prop_assert_eq!(SuperPoly::from_mbasis(&map, N).to_mbasis().unwrap(), map);
        }
    }
}

#[test]
fn monomials_are_invariant_under_adjacent_exchanges() {
    for l in labels() {
        let m = monomial_symmetric::<BigRational>(&l, N);
        for i in 0..N - 1 {
            assert_eq!(m.swap_both(i, i + 1), m, "m{l} under K_({},{})", i + 1, i + 2);
        }
    }
}
