//! Vanishing of admissible Jack superpolynomials when `k+1` variables
//! coincide, the order of the zero, and sweeps over parameter grids.

use std::collections::BTreeMap;

use super::{alpha_value, char_f, char_i, IdealError};
use crate::coeffring::BigRational;
use crate::jack::jack_at;
use crate::par;
use crate::spart::SuperPartition;
use crate::superpoly::{prescribed_part, SuperPoly};

/// `𝓟_{Λ,m}` at `α = a0`: the `θ_1⋯θ_m` coefficient of `P_Λ` divided by
/// `∏_{i<j≤m}(x_i - x_j)`.
pub fn prescribed_jack_at(label: &SuperPartition, nvars: usize, a0: &BigRational) -> Result<SuperPoly<BigRational>, IdealError> {
    let p = jack_at(label, nvars, a0)?;
    Ok(prescribed_part(&p, label.m())?)
}

fn admissible_or_err(label: &SuperPartition, k: usize, r: usize, nvars: usize) -> Result<(), IdealError> {
    if !label.is_admissible(k, r, nvars)? {
        return Err(IdealError::BadParameters(format!("{label} is not ({k},{r},{nvars})-admissible")));
    }
    Ok(())
}

/// Whether `P_Λ^{(α_{k,r})}` vanishes identically under `x_1 = ⋯ = x_{k+1}`.
pub fn vanish_check(label: &SuperPartition, k: usize, r: usize, nvars: usize) -> Result<bool, IdealError> {
    admissible_or_err(label, k, r, nvars)?;
    if nvars < k + 1 {
        return Err(IdealError::BadParameters(format!("need at least {} variables", k + 1)));
    }
    let p = jack_at(label, nvars, &alpha_value(k, r))?;
    let map: Vec<usize> = (0..nvars).map(|i| if i <= k { k } else { i }).collect();
    Ok(p.identify_x(&map).is_zero())
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Whether `𝓟_{Λ,m}^{(α_{k,r})}` vanishes whenever any `k+1` of its
/// variables coincide; requires `r > m`.
pub fn prescribed_vanish_check(label: &SuperPartition, k: usize, r: usize, nvars: usize) -> Result<bool, IdealError> {
    admissible_or_err(label, k, r, nvars)?;
    if r <= label.m() {
        return Err(IdealError::BadParameters(format!("needs r > m, got r = {r}, m = {}", label.m())));
    }
    if nvars < k + 1 {
        return Err(IdealError::BadParameters(format!("need at least {} variables", k + 1)));
    }
    let pp = prescribed_jack_at(label, nvars, &alpha_value(k, r))?;
    Ok(subsets(nvars, k + 1).iter().all(|s| {
        let map: Vec<usize> = (0..nvars).map(|i| if s.contains(&i) { s[0] } else { i }).collect();
        pp.identify_x(&map).is_zero()
    }))
}

/// Order `s` of the zero of `𝓟_{Λ,m}` at `x = x'` when the `cluster`
/// variables are set to `x` and `primed` is `x'`; `a` counts the
/// variables among these `k+1` that lie in `{1..m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClusterResult {
    pub s: usize,
    pub a: usize,
    pub r_minus_a: i64,
}

/// Cluster multiplicity; indices are 1-based. The cluster variables are
/// replaced by `x' + t` and `s` is the order in `t`.
pub fn cluster_multiplicity(
    label: &SuperPartition,
    k: usize,
    r: usize,
    nvars: usize,
    cluster: &[usize],
    primed: usize,
) -> Result<ClusterResult, IdealError> {
    if cluster.len() != k {
        return Err(IdealError::BadParameters(format!("cluster must have {k} indices")));
    }
    let mut all = cluster.to_vec();
    all.push(primed);
    if all.iter().any(|&i| i == 0 || i > nvars) {
        return Err(IdealError::BadParameters(format!("indices must lie in 1..={nvars}")));
    }
    let mut uniq = all.clone();
    uniq.sort_unstable();
    uniq.dedup();
    if uniq.len() != all.len() {
        return Err(IdealError::BadParameters("indices must be distinct".into()));
    }
    admissible_or_err(label, k, r, nvars)?;
    let m = label.m();
    let a = all.iter().filter(|&&i| i <= m).count();
    let pp = prescribed_jack_at(label, nvars, &alpha_value(k, r))?;
    let target = nvars + 1;
    let images: Vec<SuperPoly<BigRational>> = (0..nvars)
        .map(|i| {
            if cluster.contains(&(i + 1)) {
                SuperPoly::x(target, primed - 1).add(&SuperPoly::x(target, nvars))
            } else {
                SuperPoly::x(target, i)
            }
        })
        .collect();
    let g = pp.substitute_x(&images)?;
    let s = g.terms().map(|(mono, _)| mono.exps[nvars] as usize).min().ok_or(IdealError::ZeroPolynomial)?;
    Ok(ClusterResult { s, a, r_minus_a: r as i64 - a as i64 })
}

/// One row of the clustering sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterRecord {
    pub label: SuperPartition,
    pub k: usize,
    pub r: usize,
    pub nvars: usize,
    pub cluster: Vec<usize>,
    pub primed: usize,
    /// `None` when the specialization vanishes identically.
    pub s: Option<usize>,
    pub r_minus_a: i64,
    /// `N ≥ k+m+1` and `r > m > 0`, where exactness is expected.
    pub within_bounds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClusterSweep {
    pub cases: usize,
    /// `s > r - a`, in sweep order.
    pub exceptions: Vec<ClusterRecord>,
    /// `s < r - a`: the divisibility itself fails.
    pub violations: Vec<ClusterRecord>,
}

impl ClusterSweep {
    pub fn exceptions_within_bounds(&self) -> impl Iterator<Item = &ClusterRecord> {
        self.exceptions.iter().filter(|e| e.within_bounds)
    }

    pub fn consistent(&self) -> bool {
        self.violations.is_empty() && self.exceptions_within_bounds().next().is_none()
    }
}

/// Representative cluster placements for a label with `m` circles: `j`
/// cluster variables and possibly the primed one taken from `{1..m}`.
fn placements(k: usize, m: usize, nvars: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for j in 0..=k.min(m) {
        if k - j > nvars - m {
            continue;
        }
        let cluster: Vec<usize> = (1..=j).chain(m + 1..=m + k - j).collect();
        if j < m {
            out.push((cluster.clone(), j + 1));
        }
        if m + k - j < nvars {
            out.push((cluster, m + k - j + 1));
        }
    }
    out
}

/// Sweeps `cluster_multiplicity` over every admissible `Λ` with
/// `1 ≤ |Λ| ≤ nmax` (and `m ≥ 1` unless `with_m0`) for each `(k, r)` in
/// `grid` and `k+1 ≤ N ≤ nvars_max`.
pub fn conjecture_clustering(
    grid: &[(usize, usize)],
    nvars_max: usize,
    nmax: usize,
    with_m0: bool,
) -> Result<ClusterSweep, IdealError> {
    let mut jobs = Vec::new();
    for &(k, r) in grid {
        for nvars in k + 1..=nvars_max {
            for l in SuperPartition::enumerate_admissible(k, r, nvars, nmax)? {
                if l.n() == 0 || (l.m() == 0 && !with_m0) {
                    continue;
                }
                for (cluster, primed) in placements(k, l.m(), nvars) {
                    jobs.push((l.clone(), k, r, nvars, cluster, primed));
                }
            }
        }
    }
    let results = par::map(&jobs, |(l, k, r, nvars, cluster, primed)| {
        cluster_multiplicity(l, *k, *r, *nvars, cluster, *primed)
    });
    let mut sweep = ClusterSweep::default();
    for ((label, k, r, nvars, cluster, primed), res) in jobs.into_iter().zip(results) {
        let m = label.m();
        let a = cluster.iter().chain([&primed]).filter(|&&i| i <= m).count();
        let r_minus_a = r as i64 - a as i64;
        let s = match res {
            Ok(c) => Some(c.s),
            Err(IdealError::ZeroPolynomial) => None,
            Err(e) => return Err(e),
        };
        sweep.cases += 1;
        let within_bounds = nvars > k + m && r > m && m > 0;
        let rec = ClusterRecord { label, k, r, nvars, cluster, primed, s, r_minus_a, within_bounds };
        match s {
            Some(s) if (s as i64) < r_minus_a => sweep.violations.push(rec),
            Some(s) if (s as i64) == r_minus_a.max(0) => {}
            Some(s) if r_minus_a < 0 && s == 0 => {}
            _ => sweep.exceptions.push(rec),
        }
    }
    Ok(sweep)
}

/// `dim I` against `dim 𝓕` at one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeVerdict {
    pub n: usize,
    pub m: usize,
    pub dim_i: usize,
    pub dim_f: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharComparison {
    pub k: usize,
    pub nvars: usize,
    pub nmax: usize,
    pub rows: Vec<DegreeVerdict>,
}

impl CharComparison {
    pub fn equal(&self) -> bool {
        self.rows.iter().all(|v| v.dim_i == v.dim_f)
    }
}

/// Coefficientwise comparison of `ch 𝓘_N^{(k,2)}` with `ch 𝓕_N^{(k)}` for
/// `1 ≤ n ≤ nmax`.
pub fn conjecture_i_eq_f(k: usize, nvars: usize, nmax: usize) -> Result<CharComparison, IdealError> {
    let ci = char_i(k, 2, nvars, nmax)?;
    let cf = char_f(k, nvars, nmax);
    let mut degs: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for d in ci.coeffs.keys().chain(cf.coeffs.keys()) {
        if d.0 >= 1 {
            degs.insert(*d, ());
        }
    }
    let rows = degs.keys().map(|&(n, m)| DegreeVerdict { n, m, dim_i: ci.get(n, m), dim_f: cf.get(n, m) }).collect();
    Ok(CharComparison { k, nvars, nmax, rows })
}
