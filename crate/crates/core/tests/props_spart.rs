use proptest::prelude::*;
use superjack::spart::{conjugate_partition, SuperPartition};

fn all_labels(nmax: usize, mmax: usize) -> Vec<SuperPartition> {
    let mut out = Vec::new();
    for n in 0..=nmax {
        for m in 0..=mmax {
            out.extend(SuperPartition::enumerate(n, m, n + m));
        }
    }
    out
}

fn label() -> impl Strategy<Value = SuperPartition> {
    let pool = all_labels(7, 3);
    (0..pool.len()).prop_map(move |i| pool[i].clone())
}

fn pad(p: &[usize], n: usize) -> Vec<usize> {
    let mut v = p.to_vec();
    v.resize(n.max(v.len()), 0);
    v
}

/// `λ_i - λ_{i+k} ≥ r` for `1 ≤ i ≤ N-k`, with `λ` padded to `N` parts.
fn classical_admissible(p: &[usize], k: usize, r: usize, nvars: usize) -> bool {
    if p.len() > nvars {
        return false;
    }
    let p = pad(p, nvars);
    (0..nvars.saturating_sub(k)).all(|i| p[i] >= p[i + k] + r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn skew_is_horizontal_and_vertical_strip(l in label()) {
        let star = l.star();
        let circ = l.circ();
        let len = circ.len().max(star.len());
        let (s, c) = (pad(&star, len), pad(&circ, len));
        prop_assert_eq!(c.iter().sum::<usize>() - s.iter().sum::<usize>(), l.m());
        for i in 0..len {
            prop_assert!(c[i] == s[i] || c[i] == s[i] + 1);
            if i + 1 < len {
                prop_assert!(c[i + 1] <= s[i]);
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution(l in label()) {
        let c = l.conjugate();
        prop_assert_eq!(c.degree(), l.degree());
        prop_assert_eq!(c.conjugate(), l.clone());
        prop_assert_eq!(c.star(), conjugate_partition(&l.star()));
        prop_assert_eq!(c.circ(), conjugate_partition(&l.circ()));
    }

    #[test]
    fn text_forms_round_trip(l in label()) {
        prop_assert_eq!(SuperPartition::parse(&l.key()).unwrap(), l.clone());
        prop_assert_eq!(SuperPartition::parse(&l.to_circled_string()).unwrap(), l);
    }
}

#[test]
fn conjugation_reverses_dominance() {
    for n in 0..=6 {
        for m in 0..=3 {
            let labels = SuperPartition::enumerate(n, m, n + m);
            for a in &labels {
                for b in &labels {
                    assert_eq!(
                        a.dominated_by(b),
                        b.conjugate().dominated_by(&a.conjugate()),
                        "{a} <= {b} against the conjugates"
                    );
                }
            }
        }
    }
}

#[test]
fn admissible_labels_have_admissible_star_and_circ() {
    for (k, r) in [(1, 2), (2, 2), (2, 3), (3, 2), (1, 4), (4, 2)] {
        for nvars in 1..=6 {
            for l in SuperPartition::enumerate_admissible(k, r, nvars, 8).unwrap() {
                assert!(classical_admissible(&l.star(), k + 1, r, nvars), "{l} star, ({k},{r},{nvars})");
                assert!(classical_admissible(&l.circ(), k + 1, r, nvars), "{l} circ, ({k},{r},{nvars})");
            }
        }
    }
}

#[test]
fn bosonic_admissibility_is_classical() {
    for (k, r) in [(1, 2), (2, 2), (2, 3), (3, 2), (1, 4)] {
        for nvars in 1..=6 {
            for n in 0..=10 {
                for l in SuperPartition::enumerate(n, 0, nvars) {
                    assert_eq!(
                        l.is_admissible(k, r, nvars).unwrap(),
                        classical_admissible(l.sym(), k, r, nvars),
                        "{l} ({k},{r},{nvars})"
                    );
                }
            }
        }
    }
}
