use std::collections::BTreeMap;

use superjack::coeffring::{AlphaPoly, AlphaRational};
use superjack::jack::{epsilon, jack_symbolic};
use superjack::ops::{op_d, op_delta, sekiguchi_apply, Sekiguchi};
use superjack::spart::{z_factor, SuperPartition};
use superjack::superpoly::{monomial_symmetric, power_sum_product, SuperPoly};

fn labels(nmax: usize, mmax: usize, nvars: usize) -> Vec<SuperPartition> {
    (0..=nmax).flat_map(|n| (0..=mmax).flat_map(move |m| SuperPartition::enumerate(n, m, nvars))).collect()
}

#[test]
fn eigenvalues_and_triangularity() {
    let a = AlphaRational::alpha();
    for nvars in 1..=4 {
        for l in labels(5, 2, nvars) {
            let j = jack_symbolic(&l, nvars).unwrap();
            assert_eq!(j.coeffs[&l], AlphaRational::from_i64(1));
            for om in j.coeffs.keys() {
                assert_eq!(om.degree(), l.degree());
                assert!(om.dominated_by(&l), "m{om} in P{l}");
            }
            let p = j.to_poly();
            let e = AlphaRational::from_poly(l.d_eigenvalue());
            let et = AlphaRational::from_poly(l.delta_eigenvalue());
            assert_eq!(op_d(&p, &a).unwrap(), p.scale(&e), "D on P{l}, N = {nvars}");
            assert_eq!(op_delta(&p, &a).unwrap(), p.scale(&et), "Delta on P{l}, N = {nvars}");
        }
    }
}

#[test]
fn sekiguchi_is_triangular_on_monomials() {
    let a = AlphaRational::alpha();
    let nvars = 3;
    for l in labels(4, 2, nvars) {
        let m = monomial_symmetric::<AlphaRational>(&l, nvars);
        let eps = epsilon(&l.star(), nvars);
        let rest = sekiguchi_apply(Sekiguchi::S, &m, &a).unwrap().sub(&m.map_coeffs(|c| eps.scale(c)));
        for om in rest.to_mbasis().unwrap().keys() {
            assert!(om != &l && om.dominated_by(&l), "m{om} in (S - eps) m{l}");
        }
    }
}

#[test]
fn restriction_is_zero_or_the_smaller_jack() {
    for nvars in 2..=4 {
        for l in labels(4, 2, nvars) {
            let (restricted, _) = jack_symbolic(&l, nvars).unwrap().to_poly().restrict_last();
            if l.len() == nvars {
                assert!(restricted.is_zero(), "P{l}, N = {nvars}");
            } else {
                assert_eq!(restricted, jack_symbolic(&l, nvars - 1).unwrap().to_poly(), "P{l}, N = {nvars}");
            }
        }
    }
}

/// `J_(n) = Σ_μ n! α^{n-ℓ(μ)} / z_μ p_μ` and `P_(n) = J_(n) / ∏_{j<n} (α j + 1)`.
#[test]
fn one_row_jack_from_power_sums() {
    for n in 1..=5usize {
        let nvars = n;
        let fact: u128 = (1..=n as u128).product();
        let mut j = SuperPoly::<AlphaRational>::zero(nvars);
        for mu in SuperPartition::enumerate(n, 0, n) {
            let len = mu.sym().len() as u32;
            let c = AlphaRational::new(
                &AlphaPoly::from_ints(&[fact as i64]) * &AlphaPoly::alpha().pow(n as u32 - len),
                AlphaPoly::from_ints(&[z_factor(mu.sym()) as i64]),
            );
            j = j.add(&power_sum_product::<AlphaRational>(&mu, nvars).scale(&c));
        }
        let norm = (0..n as i64).fold(AlphaPoly::from_ints(&[1]), |acc, k| &acc * &AlphaPoly::linear(1, k));
        let p = j.scale(&AlphaRational::new(AlphaPoly::from_ints(&[1]), norm));
        let label = SuperPartition::from_parts(&[], &[n]);
        let want: BTreeMap<_, _> = p.to_mbasis().unwrap();
        assert_eq!(jack_symbolic(&label, nvars).unwrap().coeffs, want, "P(;{n})");
    }
}
