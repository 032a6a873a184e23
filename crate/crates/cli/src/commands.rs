use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use superjack::coeffring::{format_rational, parse_rational, AlphaRational, BigRational};
use superjack::ideals::{
    char_f, char_i, cluster_multiplicity, cochain_check, conjecture_clustering, conjecture_i_eq_f,
    prescribed_vanish_check, stability_suite, vanish_check, CharacterSeries, ClusterRecord, Differential,
    IdealError,
};
use superjack::jack::{
    duality_check, jack_symbolic, norm_gram, norm_hook, pieri_direct, pieri_formula, sekiguchi_check,
    JackExpansion, PieriOp,
};
use superjack::ops::{apply, Operator};
use superjack::spart::SuperPartition;
use superjack::superpoly::SuperPoly;

use crate::cache::Cache;
use crate::cli::{Basis, Space, Suite, VerifyArgs};
use crate::error::CliError;

/// What a command prints: both renderings and whether it found a problem.
pub struct Report {
    pub json: Value,
    pub pretty: String,
    pub ok: bool,
}

impl Report {
    fn ok(json: Value, pretty: String) -> Report {
        Report { json, pretty, ok: true }
    }
}

pub struct Context {
    pub cache: Option<Cache>,
}

enum Alpha {
    Sym,
    Num(BigRational),
}

impl Alpha {
    fn parse(s: &str) -> Result<Alpha, CliError> {
        match s.trim() {
            "sym" | "a" | "alpha" => Ok(Alpha::Sym),
            t => parse_rational(t)
                .map(Alpha::Num)
                .map_err(|e| CliError::Usage(format!("--alpha must be `sym` or a rational: {e}"))),
        }
    }

    fn text(&self) -> String {
        match self {
            Alpha::Sym => "sym".into(),
            Alpha::Num(q) => format_rational(q),
        }
    }
}

fn parse_label(s: &str) -> Result<SuperPartition, CliError> {
    Ok(SuperPartition::parse(s)?)
}

fn check_nvars(label: &SuperPartition, nvars: usize) -> Result<(), CliError> {
    if label.len() > nvars {
        return Err(CliError::Usage(format!("{label} has {} parts, more than N = {nvars}", label.len())));
    }
    Ok(())
}

fn check_kr(k: usize, r: usize) -> Result<(), CliError> {
    SuperPartition::enumerate_admissible(k, r, 1, 0)?;
    Ok(())
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::from(" ");
        for (c, cell) in r.iter().enumerate() {
            line.push(' ');
            line.push_str(cell);
            if c + 1 < r.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 1));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn descending<V>(m: &BTreeMap<SuperPartition, V>) -> Vec<(&SuperPartition, &V)> {
    let mut v: Vec<_> = m.iter().collect();
    v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp_lex(a.0)));
    v
}

fn label_json(l: &SuperPartition) -> Value {
    json!({"spart": l.key(), "circled": l.to_circled_string()})
}

fn coeff_rows<V: ToString>(m: &BTreeMap<SuperPartition, V>) -> (Vec<Value>, Vec<Vec<String>>) {
    let terms = descending(m);
    let json = terms
        .iter()
        .map(|(l, c)| json!({"spart": l.key(), "circled": l.to_circled_string(), "coeff": c.to_string()}))
        .collect();
    let rows = terms.iter().map(|(l, c)| vec![l.to_string(), l.to_circled_string(), c.to_string()]).collect();
    (json, rows)
}

impl Context {
    fn jack(&self, label: &SuperPartition, nvars: usize) -> Result<Arc<JackExpansion>, CliError> {
        if let Some(j) = self.cache.as_ref().and_then(|c| c.load(label, nvars)) {
            return Ok(Arc::new(j));
        }
        let j = jack_symbolic(label, nvars)?;
        if let Some(c) = &self.cache {
            c.store(&j);
        }
        Ok(j)
    }

    pub fn compute(&self, spart: &str, nvars: usize, alpha: &str, basis: Basis) -> Result<Report, CliError> {
        let label = parse_label(spart)?;
        check_nvars(&label, nvars)?;
        let alpha = Alpha::parse(alpha)?;
        let j = self.jack(&label, nvars)?;
        let head = format!("P{label} = P{} in N = {nvars} variables, alpha = {}", label.to_circled_string(), alpha.text());
        let mut json = json!({
            "spart": label.key(),
            "circled": label.to_circled_string(),
            "N": nvars,
            "alpha": alpha.text(),
            "basis": match basis { Basis::M => "m", Basis::Vars => "vars" },
        });
        let pretty = match (basis, &alpha) {
            (Basis::M, Alpha::Sym) => {
                let (terms, rows) = coeff_rows(&j.coeffs);
                json["terms"] = Value::Array(terms);
                format!("{head}\n{}", table(&rows))
            }
            (Basis::M, Alpha::Num(a0)) => {
                let at: BTreeMap<SuperPartition, String> =
                    j.at(a0)?.into_iter().map(|(l, c)| (l, format_rational(&c))).collect();
                let (terms, rows) = coeff_rows(&at);
                json["terms"] = Value::Array(terms);
                format!("{head}\n{}", table(&rows))
            }
            (Basis::Vars, Alpha::Sym) => {
                let p = j.to_poly();
                json["terms"] = serde_json::to_value(p.to_json_terms()).expect("terms");
                format!("{head}\n{p}\n")
            }
            (Basis::Vars, Alpha::Num(a0)) => {
                let p = SuperPoly::from_mbasis(&j.at(a0)?, nvars);
                json["terms"] = serde_json::to_value(p.to_json_terms()).expect("terms");
                format!("{head}\n{p}\n")
            }
        };
        Ok(Report::ok(json, pretty))
    }

    pub fn pieri(&self, op: &str, spart: &str, nvars: usize, check: bool) -> Result<Report, CliError> {
        let op: PieriOp = op.parse().map_err(CliError::Usage)?;
        let label = parse_label(spart)?;
        check_nvars(&label, nvars)?;
        let got = pieri_formula(op, &label, nvars);
        let agrees = if check { Some(got == pieri_direct(op, &label, nvars)?) } else { None };
        let (terms, rows) = coeff_rows(&got);
        let json = json!({
            "op": op.to_string(),
            "spart": label.key(),
            "N": nvars,
            "terms": terms,
            "check": agrees,
        });
        let mut pretty = format!("{op} P{label} in N = {nvars} variables\n");
        if rows.is_empty() {
            pretty.push_str("  0\n");
        }
        pretty.push_str(&table(&rows));
        match agrees {
            Some(true) => pretty.push_str("direct expansion agrees\n"),
            Some(false) => pretty.push_str("direct expansion DISAGREES\n"),
            None => {}
        }
        Ok(Report { json, pretty, ok: agrees != Some(false) })
    }

    pub fn op_apply(&self, name: &str, alpha: &str, input: &Path, nvars: Option<usize>) -> Result<Report, CliError> {
        let op: Operator = name.parse().map_err(|e: superjack::ops::OpError| CliError::Usage(e.to_string()))?;
        let text = if input.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        } else {
            std::fs::read_to_string(input).map_err(|e| CliError::Io(format!("{}: {e}", input.display())))?
        };
        let usage = |e: &dyn std::fmt::Display| CliError::Usage(e.to_string());
        let (json, pretty) = match Alpha::parse(alpha)? {
            Alpha::Sym => {
                let f = SuperPoly::<AlphaRational>::from_json(&text, nvars).map_err(|e| usage(&e))?;
                let g = apply(&op, &f, &AlphaRational::alpha()).map_err(|e| usage(&e))?;
                (serde_json::to_value(g.to_json_terms()).expect("terms"), format!("{g}\n"))
            }
            Alpha::Num(a0) => {
                let f = SuperPoly::<BigRational>::from_json(&text, nvars).map_err(|e| usage(&e))?;
                let g = apply(&op, &f, &a0).map_err(|e| usage(&e))?;
                (serde_json::to_value(g.to_json_terms()).expect("terms"), format!("{g}\n"))
            }
        };
        Ok(Report::ok(json, pretty))
    }

    pub fn characters(&self, space: Space, k: usize, r: usize, nvars: usize, nmax: usize) -> Result<Report, CliError> {
        if k == 0 || nvars == 0 {
            return Err(CliError::Usage("k and N must be positive".into()));
        }
        let (series, name) = match space {
            Space::I => (char_i(k, r, nvars, nmax)?, format!("ch I, (k,r,N) = ({k},{r},{nvars})")),
            Space::F => (char_f(k, nvars, nmax), format!("ch F, (k,N) = ({k},{nvars})")),
        };
        let mut json = json!({
            "space": match space { Space::I => "I", Space::F => "F" },
            "k": k,
            "N": nvars,
            "nmax": nmax,
            "series": series.to_string(),
            "coefficients": series
                .coeffs
                .iter()
                .filter(|(_, &d)| d > 0)
                .map(|(&(n, m), &d)| json!({"n": n, "m": m, "dim": d}))
                .collect::<Vec<_>>(),
        });
        if space == Space::I {
            json["r"] = json!(r);
        }
        let pretty = format!("{name}, n <= {nmax}\n{series}\n{}", series_table(&series));
        Ok(Report::ok(json, pretty))
    }

    pub fn enumerate(
        &self,
        n: usize,
        m: Option<usize>,
        nvars: usize,
        kr: Option<(usize, usize)>,
    ) -> Result<Report, CliError> {
        if let Some((k, r)) = kr {
            check_kr(k, r)?;
        }
        let ms: Vec<usize> = match m {
            Some(m) => vec![m],
            None => (0..=nvars).collect(),
        };
        let mut labels = Vec::new();
        for m in ms {
            for l in SuperPartition::enumerate(n, m, nvars) {
                let keep = match kr {
                    Some((k, r)) => l.is_admissible(k, r, nvars)?,
                    None => true,
                };
                if keep {
                    labels.push(l);
                }
            }
        }
        labels.sort_by(|a, b| a.m().cmp(&b.m()).then(b.cmp_lex(a)));
        let json = json!({
            "n": n,
            "m": m,
            "N": nvars,
            "admissible": kr.map(|(k, r)| json!({"k": k, "r": r})),
            "count": labels.len(),
            "labels": labels.iter().map(label_json).collect::<Vec<_>>(),
        });
        let rows: Vec<Vec<String>> = labels.iter().map(|l| vec![l.to_string(), l.to_circled_string()]).collect();
        let pretty = format!("{} superpartitions\n{}", labels.len(), table(&rows));
        Ok(Report::ok(json, pretty))
    }

    #[allow(clippy::too_many_arguments)]
    pub fn cluster(
        &self,
        spart: &str,
        k: usize,
        r: usize,
        nvars: usize,
        cluster: &[usize],
        primed: usize,
    ) -> Result<Report, CliError> {
        let label = parse_label(spart)?;
        check_nvars(&label, nvars)?;
        let a = cluster.iter().chain([&primed]).filter(|&&i| i >= 1 && i <= label.m()).count();
        let r_minus_a = r as i64 - a as i64;
        let s = match cluster_multiplicity(&label, k, r, nvars, cluster, primed) {
            Ok(c) => Some(c.s),
            Err(IdealError::ZeroPolynomial) => None,
            Err(e) => return Err(e.into()),
        };
        let divisible = s.is_none_or(|s| s as i64 >= r_minus_a);
        let json = json!({
            "spart": label.key(),
            "k": k,
            "r": r,
            "N": nvars,
            "cluster": cluster,
            "primed": primed,
            "s": s,
            "a": a,
            "r_minus_a": r_minus_a,
            "divisible": divisible,
        });
        let s_text = s.map_or("infinite (vanishes identically)".to_string(), |s| s.to_string());
        let pretty = format!(
            "P{label} at alpha_({k},{r}), N = {nvars}, cluster {cluster:?} -> x{primed}\n  s = {s_text}, a = {a}, r - a = {r_minus_a}\n"
        );
        Ok(Report { json, pretty, ok: divisible })
    }

    pub fn verify(&self, v: &VerifyArgs) -> Result<Report, CliError> {
        let k = v.k.unwrap_or(1);
        let r = v.r.unwrap_or(2);
        let checks = match v.suite {
            Suite::Sekiguchi => suite_sekiguchi(v.nvars.unwrap_or(3), v.nmax.unwrap_or(4), v.mmax)?,
            Suite::Norm => suite_per_label(v.nmax.unwrap_or(4), v.mmax.unwrap_or(4), |l| {
                let (n, m) = l.degree();
                Ok(norm_hook(l) == norm_gram(l, n + m)?)
            })?,
            Suite::Duality => suite_per_label(v.nmax.unwrap_or(4), v.mmax.unwrap_or(4), |l| {
                let (n, m) = l.degree();
                duality_check(l, n + m)
            })?,
            Suite::Pieri => suite_pieri(v.nvars.unwrap_or(3), v.nmax.unwrap_or(4), v.mmax.unwrap_or(2))?,
            Suite::Stability => suite_stability(k, r, v.nvars.unwrap_or(3), v.nmax.unwrap_or(6))?,
            Suite::Vanishing => suite_vanishing(k, r, v.nvars.unwrap_or(3), v.nmax.unwrap_or(6))?,
            Suite::Cochain => {
                let ds = match &v.d {
                    Some(d) => vec![d.parse::<Differential>().map_err(CliError::Usage)?],
                    None => vec![Differential::Q, Differential::QTilde],
                };
                suite_cochain(k, r, v.nvars.unwrap_or(3), v.nmax.unwrap_or(5), &ds)?
            }
            Suite::ConjectureIf => suite_i_eq_f(k, v.nvars.unwrap_or(3), v.nmax.unwrap_or(8))?,
            Suite::ConjectureRma => {
                let grid = match (v.k, v.r) {
                    (Some(k), Some(r)) => vec![(k, r)],
                    (None, None) => vec![(1, 2), (2, 2), (2, 3)],
                    _ => return Err(CliError::Usage("give both --k and --r, or neither".into())),
                };
                suite_rma(&grid, v.nvars.unwrap_or(4), v.nmax.unwrap_or(6), v.log.as_deref())?
            }
        };
        let name = suite_name(v.suite);
        let ok = checks.failures.is_empty();
        let mut pretty = format!(
            "suite {name}: {} ({} cases, {} failures)\n",
            if ok { "PASS" } else { "FAIL" },
            checks.cases,
            checks.failures.len()
        );
        for line in &checks.notes {
            pretty.push_str(&format!("  {line}\n"));
        }
        for f in &checks.failures {
            pretty.push_str(&format!("  failure: {f}\n"));
        }
        let json = json!({
            "suite": name,
            "passed": ok,
            "cases": checks.cases,
            "failures": checks.failures,
            "notes": checks.notes,
            "details": checks.details,
        });
        Ok(Report { json, pretty, ok })
    }
}

fn series_table(s: &CharacterSeries) -> String {
    let mmax = s.coeffs.keys().map(|&(_, m)| m).max().unwrap_or(0);
    let mut rows = vec![std::iter::once("n\\m".to_string()).chain((0..=mmax).map(|m| m.to_string())).collect()];
    for n in 0..=s.nmax {
        rows.push(std::iter::once(n.to_string()).chain((0..=mmax).map(|m| s.get(n, m).to_string())).collect());
    }
    table(&rows)
}

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Sekiguchi => "sekiguchi",
        Suite::Norm => "norm",
        Suite::Duality => "duality",
        Suite::Pieri => "pieri",
        Suite::Stability => "stability",
        Suite::Vanishing => "vanishing",
        Suite::Cochain => "cochain",
        Suite::ConjectureIf => "conjecture-IF",
        Suite::ConjectureRma => "conjecture-rma",
    }
}

#[derive(Default)]
struct Checks {
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
    details: Value,
}

fn labels(nmax: usize, mmax: usize, max_len: usize) -> Vec<SuperPartition> {
    (0..=nmax).flat_map(|n| (0..=mmax).flat_map(move |m| SuperPartition::enumerate(n, m, max_len))).collect()
}

fn suite_sekiguchi(nvars: usize, nmax: usize, mmax: Option<usize>) -> Result<Checks, CliError> {
    let mut c = Checks::default();
    for l in labels(nmax, mmax.unwrap_or(nvars), nvars) {
        c.cases += 1;
        let (s, st) = sekiguchi_check(&l, nvars, true)?;
        if !s {
            c.failures.push(format!("S on P{l}, N = {nvars}"));
        }
        if !st {
            c.failures.push(format!("S~ on P{l}, N = {nvars}"));
        }
    }
    c.notes.push(format!("every label with n <= {nmax} and at most {nvars} parts"));
    Ok(c)
}

fn suite_per_label(
    nmax: usize,
    mmax: usize,
    check: impl Fn(&SuperPartition) -> Result<bool, superjack::jack::JackError>,
) -> Result<Checks, CliError> {
    let mut c = Checks::default();
    for l in labels(nmax, mmax, nmax + mmax).into_iter().filter(|l| l.n() + l.m() > 0) {
        c.cases += 1;
        if !check(&l)? {
            c.failures.push(l.to_string());
        }
    }
    c.notes.push(format!("labels with n <= {nmax}, m <= {mmax}, in N = n + m variables"));
    Ok(c)
}

fn suite_pieri(nvars: usize, nmax: usize, mmax: usize) -> Result<Checks, CliError> {
    let mut c = Checks::default();
    for l in labels(nmax, mmax, nvars) {
        for op in PieriOp::ALL {
            c.cases += 1;
            if pieri_formula(op, &l, nvars) != pieri_direct(op, &l, nvars)? {
                c.failures.push(format!("{op} P{l}, N = {nvars}"));
            }
        }
    }
    c.notes.push("hook formulas against direct application, all five operators".into());
    Ok(c)
}

fn suite_stability(k: usize, r: usize, nvars: usize, nmax: usize) -> Result<Checks, CliError> {
    let rep = stability_suite(k, r, nvars, nmax)?;
    let mut c = Checks { cases: rep.tested.values().sum(), ..Checks::default() };
    for (name, n) in &rep.tested {
        c.notes.push(format!("{name}: {n} images"));
    }
    for v in &rep.violations {
        c.failures.push(format!("{} on P{}: {}", v.check, v.label, v.detail));
    }
    c.details = json!(rep.tested);
    Ok(c)
}

fn suite_vanishing(k: usize, r: usize, nvars: usize, nmax: usize) -> Result<Checks, CliError> {
    if nvars < k + 1 {
        return Err(CliError::Usage(format!("need N >= k + 1 = {}", k + 1)));
    }
    let mut c = Checks::default();
    for l in SuperPartition::enumerate_admissible(k, r, nvars, nmax)? {
        c.cases += 1;
        if !vanish_check(&l, k, r, nvars)? {
            c.failures.push(format!("P{l} does not vanish at x1 = ... = x{}", k + 1));
        }
        if r > l.m() {
            c.cases += 1;
            if !prescribed_vanish_check(&l, k, r, nvars)? {
                c.failures.push(format!("prescribed-symmetry part of P{l} does not vanish"));
            }
        }
    }
    c.notes.push(format!("admissible labels for (k,r,N) = ({k},{r},{nvars}), n <= {nmax}"));
    Ok(c)
}

fn suite_cochain(k: usize, r: usize, nvars: usize, nmax: usize, ds: &[Differential]) -> Result<Checks, CliError> {
    let mut c = Checks::default();
    let mut details = serde_json::Map::new();
    for &d in ds {
        let rep = cochain_check(k, r, nvars, nmax, d)?;
        let mut spots = Vec::new();
        for s in &rep.spots {
            c.cases += 1;
            if !s.exact() {
                c.failures.push(format!("{d} not exact at ({}|{}): ker {} vs im {}", s.n, s.m, s.dim_ker, s.dim_im));
            }
            spots.push(json!({"n": s.n, "m": s.m, "dim": s.dim, "ker": s.dim_ker, "im": s.dim_im}));
        }
        for v in &rep.violations {
            c.failures.push(format!("{d} maps P{} out of the ideal: {}", v.label, v.detail));
        }
        c.notes.push(format!("{d}: {} spots", rep.spots.len()));
        details.insert(d.to_string(), Value::Array(spots));
    }
    c.details = Value::Object(details);
    Ok(c)
}

fn suite_i_eq_f(k: usize, nvars: usize, nmax: usize) -> Result<Checks, CliError> {
    let cmp = conjecture_i_eq_f(k, nvars, nmax)?;
    let mut c = Checks { cases: cmp.rows.len(), ..Checks::default() };
    for v in &cmp.rows {
        if v.dim_i != v.dim_f {
            c.failures.push(format!("({}|{}): dim I = {}, dim F = {}", v.n, v.m, v.dim_i, v.dim_f));
        }
    }
    c.notes.push(format!("ch I^(k,2) against ch F^(k) for k = {k}, N = {nvars}, 1 <= n <= {nmax}"));
    c.details =
        json!(cmp.rows.iter().map(|v| json!({"n": v.n, "m": v.m, "I": v.dim_i, "F": v.dim_f})).collect::<Vec<_>>());
    Ok(c)
}

fn record_json(e: &ClusterRecord) -> Value {
    json!({
        "spart": e.label.key(),
        "k": e.k,
        "r": e.r,
        "N": e.nvars,
        "cluster": e.cluster,
        "primed": e.primed,
        "s": e.s,
        "r_minus_a": e.r_minus_a,
        "within_bounds": e.within_bounds,
    })
}

fn record_line(e: &ClusterRecord) -> String {
    let s = e.s.map_or("inf".to_string(), |s| s.to_string());
    let cl: Vec<String> = e.cluster.iter().map(|i| i.to_string()).collect();
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{s}\t{}\t{}",
        e.label.key(),
        e.k,
        e.r,
        e.nvars,
        cl.join(","),
        e.primed,
        e.r_minus_a,
        e.within_bounds
    )
}

fn suite_rma(grid: &[(usize, usize)], nvars_max: usize, nmax: usize, log: Option<&Path>) -> Result<Checks, CliError> {
    for &(k, r) in grid {
        check_kr(k, r)?;
    }
    let sweep = conjecture_clustering(grid, nvars_max, nmax, false)?;
    let mut c = Checks { cases: sweep.cases, ..Checks::default() };
    for v in &sweep.violations {
        c.failures.push(format!("s < r - a: {}", record_line(v)));
    }
    for e in sweep.exceptions_within_bounds() {
        c.failures.push(format!("s > r - a within bounds: {}", record_line(e)));
    }
    c.notes.push(format!(
        "{} exceptions with s > r - a, {} of them within N >= k+m+1, r > m",
        sweep.exceptions.len(),
        sweep.exceptions_within_bounds().count()
    ));
    if let Some(path) = log {
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        for e in &sweep.exceptions {
            writeln!(f, "{}", record_line(e))?;
        }
        c.notes.push(format!("exceptions appended to {}", path.display()));
    }
    c.details = json!({
        "exceptions": sweep.exceptions.iter().map(record_json).collect::<Vec<_>>(),
        "violations": sweep.violations.iter().map(record_json).collect::<Vec<_>>(),
    });
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_aligns_columns() {
        let t = table(&[vec!["a".into(), "bb".into()], vec!["ccc".into(), "d".into()]]);
        assert_eq!(t, "  a    bb\n  ccc  d\n");
    }

    #[test]
    fn alpha_arguments() {
        assert!(matches!(Alpha::parse("sym"), Ok(Alpha::Sym)));
        assert_eq!(Alpha::parse("-3/2").unwrap().text(), "-3/2");
        assert!(Alpha::parse("x").is_err());
    }
}
