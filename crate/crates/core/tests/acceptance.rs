//! Acceptance report: one line per criterion, with timing against its
//! budget. Exits non-zero if a criterion fails that is not listed in
//! `KNOWN_FAILURES`, or if a listed one starts passing.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use superjack::coeffring::{rat, AlphaRational, BigRational};
use superjack::ideals::{
    char_f, cluster_multiplicity, cochain_check, conjecture_i_eq_f, dim_f, ideal_basis, prescribed_jack_at,
    prescribed_vanish_check, stability_suite, vanish_check, Differential,
};
use superjack::jack::{
    duality_check, evaluation_direct, evaluation_formula, jack_at, jack_symbolic, norm_gram, norm_hook,
    pieri_direct, pieri_formula, sekiguchi_check, PieriOp,
};
use superjack::ops::{
    algebra_relations, apply, check_relations, cherednik_relations, global_relations, homogeneous_basis,
    symmetric_basis, virasoro_relations, Operator,
};
use superjack::spart::SuperPartition;
use superjack::superpoly::{vandermonde, SuperPoly};

/// Criteria whose literal target contradicts an independent check.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    1,
    "the expected m_(;2,1) coefficient 3/(a*(2*a+1)) has a pole at a = 0, \
     where P_(;3) must reduce to e_1^3 = m_3 + 3 m_21 + 6 m_111",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn sp(s: &str) -> SuperPartition {
    SuperPartition::parse(s).expect("label")
}

fn labels_up_to(n_max: usize, m_max: usize, len: usize) -> Vec<SuperPartition> {
    (0..=n_max).flat_map(|n| (0..=m_max).flat_map(move |m| SuperPartition::enumerate(n, m, len))).collect()
}

fn c1() -> Outcome {
    let j = jack_symbolic(&sp(";3"), 3).unwrap();
    let c21 = &j.coeffs[&sp(";2,1")];
    let c111 = &j.coeffs[&sp(";1,1,1")];
    let want21: AlphaRational = "3/(a*(2*a+1))".parse().unwrap();
    let want111: AlphaRational = "6/((a+1)*(2*a+1))".parse().unwrap();
    let schur = j.at(&rat(1, 1)).unwrap().values().all(|v| *v == rat(1, 1));
    let e13 = j.at(&rat(0, 1)).unwrap();
    let elementary = e13[&sp(";2,1")] == rat(3, 1) && e13[&sp(";1,1,1")] == rat(6, 1);
    outcome(
        *c21 == want21 && *c111 == want111 && j.coeffs.len() == 3,
        format!(
            "m_(;2,1): {c21} (expected {want21}), m_(;1,1,1): {c111} (expected {want111}); \
             a=1 gives s_3: {schur}, a=0 gives e_1^3: {elementary}"
        ),
    )
}

fn c2() -> Outcome {
    let p = jack_at(&sp(";4,2"), 3, &rat(-2, 1)).unwrap();
    let v = vandermonde::<BigRational>(3, &[0, 1, 2]);
    outcome(p == v.mul(&v), "P_(;4,2) at a=-2 in 3 variables vs squared Vandermonde")
}

fn c3() -> Outcome {
    let p = jack_at(&sp(";4,3,1"), 4, &rat(-3, 2)).unwrap();
    let g = p.identify_x(&[0, 0, 2, 3]);
    let x = |i| SuperPoly::<BigRational>::x(4, i);
    let expect = x(0)
        .scale(&rat(2, 1))
        .mul(&x(2).add(&x(3)))
        .mul(&x(3).sub(&x(0)).pow(3))
        .mul(&x(2).sub(&x(0)).pow(3));
    outcome(g == expect, "P_(;4,3,1) at a=-3/2 with x1=x2=x vs 2x(x3+x4)(x4-x)^3(x3-x)^3")
}

fn c4() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for nvars in 1..=4 {
        for l in labels_up_to(5, 2, nvars) {
            total += 1;
            let (s, st) = sekiguchi_check(&l, nvars, true).unwrap();
            if !(s && st) {
                bad.push(format!("{l} N={nvars} S:{s} S~:{st}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{total} (label, N) pairs, full S~ symmetrization; failures {bad:?}"))
}

fn c5() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for l in labels_up_to(4, 4, 8).into_iter().filter(|l| l.n() + l.m() > 0) {
        let (n, m) = l.degree();
        total += 1;
        if norm_hook(&l) != norm_gram(&l, n + m).unwrap() {
            bad.push(l.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{total} labels, hook product vs power-sum Gram; failures {bad:?}"))
}

fn c6() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for nvars in 1..=5 {
        for l in labels_up_to(5, nvars, nvars) {
            total += 1;
            if evaluation_formula(&l, nvars) != evaluation_direct(&l, nvars).unwrap() {
                bad.push(format!("{l} N={nvars}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{total} (label, N) pairs; failures {bad:?}"))
}

fn c7() -> Outcome {
    let got = pieri_formula(PieriOp::PTilde0, &sp("1;2,2"), 4);
    let want: AlphaRational = "-(2+2a)*(1+2a)*a/((3+2a)*(2+2a)*(1+a))".parse().unwrap();
    let worked = got.get(&sp("1,0;2,2")) == Some(&want) && got.get(&sp("2,1;2")) == Some(&AlphaRational::from_i64(1));
    let mut total = 0;
    let mut bad = Vec::new();
    for nvars in 1..=5 {
        for l in labels_up_to(4, 2, nvars) {
            for op in PieriOp::ALL {
                total += 1;
                if pieri_formula(op, &l, nvars) != pieri_direct(op, &l, nvars).unwrap() {
                    bad.push(format!("{op} {l} N={nvars}"));
                }
            }
        }
    }
    outcome(
        worked && bad.is_empty(),
        format!("worked pt0 coefficient: {worked}; {total} (operator, label, N) cases; failures {bad:?}"),
    )
}

fn c8() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for l in labels_up_to(4, 4, 8).into_iter().filter(|l| l.n() + l.m() > 0) {
        let (n, m) = l.degree();
        total += 1;
        if !duality_check(&l, n + m).unwrap() {
            bad.push(l.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{total} labels at N = n+m; failures {bad:?}"))
}

const IDEAL_GRID: [(usize, usize); 4] = [(1, 2), (2, 2), (1, 3), (2, 3)];

fn coprime(k: usize, r: usize) -> bool {
    num_integer::gcd(k + 1, r - 1) == 1
}

fn c9() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (k, r) in IDEAL_GRID {
        if !coprime(k, r) {
            lines.push(format!("({k},{r}) skipped: gcd(k+1,r-1) != 1"));
            continue;
        }
        for nvars in 1..=4 {
            let rep = stability_suite(k, r, nvars, 6).unwrap();
            let tested: usize = rep.tested.values().sum();
            ok &= rep.passed();
            lines.push(format!("({k},{r},N={nvars}) {tested} images, {} violations", rep.violations.len()));
        }
    }
    outcome(ok, lines.join("; "))
}

fn c10() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for (k, r) in IDEAL_GRID.into_iter().filter(|&(k, r)| coprime(k, r)) {
        let a0 = rat(-(k as i64 + 1), r as i64 - 1);
        for nvars in 1..=4 {
            let mut labels: Vec<SuperPartition> = Vec::new();
            for l in SuperPartition::enumerate_admissible(k, r, nvars, 6).unwrap() {
                labels.extend(l.almost_admissible_variants(nvars));
                labels.push(l);
            }
            labels.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp_lex(a)));
            labels.dedup();
            for l in labels {
                total += 1;
                if let Err(e) = jack_at(&l, nvars, &a0) {
                    bad.push(format!("{l} N={nvars} ({k},{r}): {e}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{total} admissible or almost-admissible (label, N) pairs; poles {bad:?}"))
}

fn c11() -> Outcome {
    // (N, k, n, coefficients of v^0, v^1, ...)
    let spots: [(usize, usize, usize, &[usize]); 16] = [
        (2, 1, 2, &[1, 2, 1]),
        (2, 1, 3, &[1, 3, 2]),
        (2, 1, 4, &[2, 4, 2]),
        (2, 1, 5, &[2, 5, 3]),
        (3, 1, 3, &[0, 0, 1, 1]),
        (3, 1, 4, &[0, 1, 2, 1]),
        (3, 1, 5, &[0, 2, 4, 2]),
        (3, 1, 6, &[1, 4, 6, 3]),
        (3, 1, 8, &[2, 9, 12, 5]),
        (4, 1, 6, &[0, 0, 0, 1, 1]),
        (4, 1, 7, &[0, 0, 1, 2, 1]),
        (3, 2, 2, &[1, 3, 2]),
        (3, 2, 3, &[2, 5, 4, 1]),
        (3, 2, 4, &[3, 8, 6, 1]),
        (4, 2, 3, &[0, 1, 2, 1]),
        (4, 2, 4, &[1, 3, 4, 2]),
    ];
    let mut series = BTreeMap::new();
    let mut bad = Vec::new();
    for (nvars, k, n, want) in spots {
        let ch = series.entry((nvars, k)).or_insert_with(|| char_f(k, nvars, 8));
        let got: Vec<usize> = (0..=nvars).map(|m| ch.get(n, m)).collect();
        let mut want = want.to_vec();
        want.resize(nvars + 1, 0);
        if got != want {
            bad.push(format!("N={nvars} k={k} u^{n}: {got:?} vs {want:?}"));
        }
    }
    let worked = dim_f(1, 3, 3, 2) == 1;
    let mut eq = Vec::new();
    for k in [1, 2] {
        for nvars in k + 1..=4 {
            let c = conjecture_i_eq_f(k, nvars, 8).unwrap();
            if !c.equal() {
                bad.push(format!("I != F at k={k} N={nvars}"));
            }
            eq.push(format!("k={k},N={nvars}"));
        }
    }
    let low = char_f(1, 2, 1).get(1, 2);
    outcome(
        worked && bad.is_empty(),
        format!(
            "{} spot coefficients, dim F(1)_(3,3,2) = 1: {worked}; ch I = ch F to u^8 for {}; \
             degree (1|2) at N = k+1 has dimension {low}; mismatches {bad:?}",
            spots.len(),
            eq.join(" ")
        ),
    )
}

fn c12() -> Outcome {
    let mut total = 0;
    let mut pres = 0;
    let mut bad = Vec::new();
    for (k, r) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3)] {
        if !coprime(k, r) {
            continue;
        }
        for nvars in k + 1..=5 {
            for l in SuperPartition::enumerate_admissible(k, r, nvars, 6).unwrap() {
                total += 1;
                if !vanish_check(&l, k, r, nvars).unwrap() {
                    bad.push(format!("{l} ({k},{r},{nvars})"));
                }
                if r > l.m() {
                    pres += 1;
                    if !prescribed_vanish_check(&l, k, r, nvars).unwrap() {
                        bad.push(format!("prescribed {l} ({k},{r},{nvars})"));
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{total} admissible (label, k, r, N), {pres} prescribed-symmetry checks over all (k+1)-subsets; failures {bad:?}"),
    )
}

fn c13() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut expect = |name: &str, label: &str, k, r, n, cluster: &[usize], primed, s: usize| {
        let got = cluster_multiplicity(&sp(label), k, r, n, cluster, primed).unwrap();
        ok &= got.s == s;
        notes.push(format!("{name}: s={} (want {s}, r-a={})", got.s, got.r_minus_a));
    };
    expect("(2;4,1) primed x1", "2;4,1", 2, 3, 4, &[2, 3], 1, 2);
    expect("(2;4,1) primed x4", "2;4,1", 2, 3, 4, &[2, 3], 4, 3);
    expect("(1;3,1) N=5 primed x5", "1;3,1", 3, 2, 5, &[2, 3, 4], 5, 2);
    expect("(1;3,1) N=5 primed x1", "1;3,1", 3, 2, 5, &[2, 3, 4], 1, 1);
    expect("(1;3,1) N=4 primed x1", "1;3,1", 3, 2, 4, &[2, 3, 4], 1, 2);
    expect("(;4,2) k=2 r=3", ";4,2", 2, 3, 3, &[1, 2], 3, 4);
    let pp = prescribed_jack_at(&sp("1;3,1"), 4, &rat(-4, 1)).unwrap().identify_x(&[0, 1, 1, 1]);
    let x = |i| SuperPoly::<BigRational>::x(4, i);
    let small = pp == x(1).pow(3).neg().mul(&x(1).sub(&x(0)).pow(2));
    ok &= small;
    notes.push(format!("N=4 specialization equals -x^3(x-x1)^2: {small}"));
    outcome(ok, notes.join("; "))
}

fn c14() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let a = AlphaRational::alpha();
    let hb = homogeneous_basis::<AlphaRational>(3, 2);
    let f = check_relations(&algebra_relations(), &hb, &[], &a);
    ok &= f.is_empty();
    notes.push(format!("operator algebra {} relations, {} failures", algebra_relations().len(), f.len()));
    let hq = homogeneous_basis::<BigRational>(3, 2);
    let f = check_relations(&virasoro_relations(-3), &hq, &[], &rat(7, 3));
    ok &= f.is_empty();
    notes.push(format!("super-Virasoro to L(-3): {} failures", f.len()));
    let sym = symmetric_basis::<BigRational>(3, 3);
    let f = check_relations(&global_relations(3), &hq, &sym, &rat(5, 2));
    ok &= f.is_empty();
    notes.push(format!("global identities: {} failures", f.len()));
    let h3 = homogeneous_basis::<BigRational>(3, 3);
    let f = check_relations(&cherednik_relations(3), &h3, &[], &rat(-3, 2));
    ok &= f.is_empty();
    notes.push(format!("Cherednik commutativity and Hecke relations: {} failures", f.len()));
    let mut sq = 0;
    for g in &h3 {
        for op in [Operator::SmallQ, Operator::QTilde] {
            let once = apply(&op, g, &rat(1, 1)).unwrap();
            if !apply(&op, &once, &rat(1, 1)).unwrap().is_zero() {
                sq += 1;
            }
        }
    }
    ok &= sq == 0;
    notes.push(format!("q^2 = q~^2 = 0 on {} monomials: {} failures", h3.len(), sq));
    for d in [Differential::Q, Differential::QTilde] {
        let rep = cochain_check(1, 2, 3, 5, d).unwrap();
        ok &= rep.passed();
        notes.push(format!("{d} complex on I(1,2,3): {} spots exact: {}", rep.spots.len(), rep.passed()));
    }
    let mut dual_bad = 0;
    let mut pairs = 0;
    for n in 0..=5 {
        for m in 0..=3 {
            let ls = SuperPartition::enumerate(n, m, n + m);
            for l in &ls {
                if l.conjugate().conjugate() != *l {
                    dual_bad += 1;
                }
                for g in &ls {
                    pairs += 1;
                    if l.dominated_by(g) != g.conjugate().dominated_by(&l.conjugate()) {
                        dual_bad += 1;
                    }
                }
            }
        }
    }
    ok &= dual_bad == 0;
    notes.push(format!("conjugation involutive and order-reversing on {pairs} pairs: {dual_bad} failures"));
    let basis = ideal_basis(1, 2, 3, 5).unwrap();
    notes.push(format!("I(1,2,3) has {} basis vectors to degree 5", basis.len()));
    outcome(ok, notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 14] = [
        (1, "P_(;3) monomial coefficients", 1, c1),
        (2, "P_(;4,2) at a=-2 is the squared Vandermonde", 1, c2),
        (3, "P_(;4,3,1) at a=-3/2 with two variables identified", 5, c3),
        (4, "Sekiguchi eigenvalues, n<=5, m<=2, N<=4", 300, c4),
        (5, "norm: hook formula vs Gram, n<=4", 120, c5),
        (6, "evaluation formula vs specialization, n<=5, N<=5", 120, c6),
        (7, "Pieri closed forms, n<=4, m<=2, N<=5", 300, c7),
        (8, "duality, n<=4", 120, c8),
        (9, "ideal stability, N<=4, n<=6", 600, c9),
        (10, "regularity of admissible and almost-admissible labels", 300, c10),
        (11, "characters: spot values and ch I = ch F", 900, c11),
        (12, "vanishing when k+1 variables coincide, n<=6, N<=5", 600, c12),
        (13, "clustering multiplicities", 300, c13),
        (14, "operator algebra, Hecke, cochain and conjugation suites", 600, c14),
    ];
    let mut unexpected = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                outcome(false, format!("panicked: {msg}"))
            });
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(budget);
        let pass = out.pass && in_time;
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        let status = if pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status} {name} [{:.2}s / {budget}s] {}", took.as_secs_f64(), out.detail);
        match (pass, known) {
            (false, Some((_, why))) => println!("             known: {why}"),
            (false, None) => unexpected += 1,
            (true, Some(_)) => {
                println!("             listed as a known failure but passed");
                unexpected += 1;
            }
            (true, None) => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
