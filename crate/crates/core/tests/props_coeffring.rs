use proptest::prelude::*;
use superjack::coeffring::{
    alpha_eval, format_rational, parse_alpha_rational, parse_rational, rat, AlphaPoly, AlphaRational, BigRational,
    FieldMatrix, Ring, Solution,
};

fn small_poly(max_deg: usize) -> impl Strategy<Value = AlphaPoly> {
    prop::collection::vec(-4i64..=4, 0..=max_deg + 1).prop_map(|c| AlphaPoly::from_ints(&c))
}

fn ratfunc() -> impl Strategy<Value = AlphaRational> {
    (small_poly(2), small_poly(2)).prop_filter_map("nonzero denominator", |(n, d)| {
        if d.coeffs().is_empty() {
            None
        } else {
            Some(AlphaRational::new(n, d))
        }
    })
}

fn point() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn canonical_denominator(a in ratfunc()) {
        let d = a.denom().coeffs();
        prop_assert!(d.last().map(|c| c.sign() == num_bigint::Sign::Plus).unwrap_or(false));
        if a.is_zero() {
            prop_assert_eq!(d.len(), 1);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), x in point()) {
        if let (Ok(ea), Ok(eb)) = (alpha_eval(&a, &x), alpha_eval(&b, &x)) {
            if let Ok(eab) = alpha_eval(&(&a * &b), &x) {
                prop_assert_eq!(eab, &ea * &eb);
            }
            if let Ok(s) = alpha_eval(&(&a + &b), &x) {
                prop_assert_eq!(s, &ea + &eb);
            }
        }
    }

    #[test]
    fn text_round_trip(a in ratfunc(), q in point()) {
        prop_assert_eq!(parse_alpha_rational(&a.to_string()).unwrap(), a);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn solve_commutes_with_evaluation(
        entries in prop::collection::vec((-3i64..=3, -3i64..=3), 9),
        rhs in prop::collection::vec(-3i64..=3, 3),
        x in point(),
    ) {
        let rows: Vec<Vec<AlphaRational>> =
            entries.chunks(3).map(|r| r.iter().map(|&(c0, c1)| AlphaRational::linear(c0, c1)).collect()).collect();
        let b: Vec<AlphaRational> = rhs.iter().map(|&v| AlphaRational::from_i64(v)).collect();
        let sym = FieldMatrix::from_rows(rows.clone(), 3);
        let num_rows: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|c| alpha_eval(c, &x).unwrap()).collect()).collect();
        let num = FieldMatrix::from_rows(num_rows, 3);
        let nb: Vec<BigRational> = rhs.iter().map(|&v| BigRational::from_int(v)).collect();
        if sym.rank() == num.rank() {
            if let (Solution::Unique(s), Solution::Unique(n)) = (sym.solve(&b), num.solve(&nb)) {
                let evaluated: Vec<BigRational> = s.iter().map(|c| alpha_eval(c, &x).unwrap()).collect();
                prop_assert_eq!(evaluated, n);
            }
        }
    }
}
