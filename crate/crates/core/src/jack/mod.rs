//! Jack superpolynomials `P_Λ^(α)` over `ℚ(α)`, their specializations at
//! rational `α`, and the identities they satisfy.
//!
//! `P_Λ` is the unique element `m_Λ + Σ_{Ω<Λ} c_ΛΩ m_Ω` that is an
//! eigenfunction of both `D` and `Δ`. Within each degree sector the two
//! operators are tabulated once on the monomial basis and every `P_Λ` of
//! the sector comes out of a triangular solve.

mod identities;
mod nonsym;
mod pieri;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::coeffring::{alpha_eval, AlphaPoly, AlphaRational, BigRational, CoeffError, Field, Ring};
use crate::ops::{op_d, op_delta};
use crate::par;
use crate::spart::SuperPartition;
use crate::superpoly::{monomial_symmetric, SuperPoly};

pub use identities::{
    duality_check, evaluation_direct, evaluation_formula, integral_form, norm_gram, norm_hook, removal_identities,
    sekiguchi_check, IntegralForm, RemovalCheck,
};
pub use nonsym::{compositions_below, jack_nonsym, symmetrization, NonSymJack};
pub use pieri::{pieri_direct, pieri_formula, PieriOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JackError {
    #[error("label {label} needs at least {needed} variables, got {nvars}")]
    TooFewVariables { label: String, needed: usize, nvars: usize },
    #[error("degenerate system for {label} at {omega}")]
    Degenerate { label: String, omega: String },
    #[error("pole at alpha = {at} in the coefficient of m_{omega}: {coeff}")]
    Pole { omega: String, coeff: String, at: String },
    #[error("{0}")]
    Coefficient(String),
    #[error("{0}")]
    NotInSpan(String),
}

/// `P_Λ = Σ c_Ω m_Ω` in `nvars` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct JackExpansion {
    pub label: SuperPartition,
    pub nvars: usize,
    pub coeffs: BTreeMap<SuperPartition, AlphaRational>,
}

impl JackExpansion {
    pub fn to_poly(&self) -> SuperPoly<AlphaRational> {
        SuperPoly::from_mbasis(&self.coeffs, self.nvars)
    }

    /// Coefficients at `α = a0`.
    pub fn at(&self, a0: &BigRational) -> Result<BTreeMap<SuperPartition, BigRational>, JackError> {
        let mut out = BTreeMap::new();
        for (om, c) in &self.coeffs {
            let v = alpha_eval(c, a0).map_err(|e| match e {
                CoeffError::Pole { value, at } => JackError::Pole { omega: om.to_string(), coeff: value, at },
                other => JackError::Coefficient(other.to_string()),
            })?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(om.clone(), v);
            }
        }
        Ok(out)
    }

    /// Labels in decreasing order, the leading one first.
    pub fn ordered(&self) -> Vec<(&SuperPartition, &AlphaRational)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|a, b| b.0.cmp_lex(a.0));
        v
    }
}

/// `D` and `Δ` on the monomial basis of one sector `(n|m)` in `N` variables.
pub struct Sector {
    pub labels: Vec<SuperPartition>,
    index: HashMap<SuperPartition, usize>,
    /// `rows[Γ]` lists `(Ω, ⟨m_Γ⟩ D m_Ω)` for `Ω ≠ Γ`.
    d_rows: Vec<Vec<(usize, AlphaPoly)>>,
    delta_rows: Vec<Vec<(usize, AlphaPoly)>>,
    d_diag: Vec<AlphaPoly>,
    delta_diag: Vec<AlphaPoly>,
}

impl Sector {
    fn build(n: usize, m: usize, nvars: usize) -> Sector {
        let labels = SuperPartition::enumerate(n, m, nvars);
        let index: HashMap<SuperPartition, usize> =
            labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let alpha = AlphaPoly::alpha();
        let columns = par::map(&labels, |om| {
            let mono = monomial_symmetric::<AlphaPoly>(om, nvars);
            let d = op_d(&mono, &alpha).expect("D on a symmetric monomial").mbasis_unchecked();
            let t = op_delta(&mono, &alpha).expect("Delta on a symmetric monomial").mbasis_unchecked();
            (d, t)
        });
        let k = labels.len();
        let mut d_rows = vec![Vec::new(); k];
        let mut delta_rows = vec![Vec::new(); k];
        let mut d_diag = vec![AlphaPoly::default(); k];
        let mut delta_diag = vec![AlphaPoly::default(); k];
        for (om, (d, t)) in columns.into_iter().enumerate() {
            for (g, v) in d {
                let gi = index[&g];
                if gi == om {
                    d_diag[om] = v;
                } else {
                    d_rows[gi].push((om, v));
                }
            }
            for (g, v) in t {
                let gi = index[&g];
                if gi == om {
                    delta_diag[om] = v;
                } else {
                    delta_rows[gi].push((om, v));
                }
            }
        }
        Sector { labels, index, d_rows, delta_rows, d_diag, delta_diag }
    }

    pub fn position(&self, l: &SuperPartition) -> Option<usize> {
        self.index.get(l).copied()
    }

    /// `⟨m_Γ⟩ D m_Γ`, expected to be `e_{Γ*}`.
    pub fn d_diagonal(&self, i: usize) -> &AlphaPoly {
        &self.d_diag[i]
    }

    pub fn delta_diagonal(&self, i: usize) -> &AlphaPoly {
        &self.delta_diag[i]
    }

    fn solve(&self, li: usize) -> Result<BTreeMap<SuperPartition, AlphaRational>, JackError> {
        let lab = &self.labels[li];
        let e = &self.d_diag[li];
        let et = &self.delta_diag[li];
        let mut c: Vec<Option<AlphaRational>> = vec![None; self.labels.len()];
        c[li] = Some(AlphaRational::from_i64(1));
        let row_sum = |rows: &[(usize, AlphaPoly)], c: &[Option<AlphaRational>]| {
            let mut acc = AlphaRational::from_i64(0);
            for (om, v) in rows {
                if let Some(x) = &c[*om] {
                    acc = &acc + &(x * &AlphaRational::from_poly(v.clone()));
                }
            }
            acc
        };
        for gi in li + 1..self.labels.len() {
            let g = &self.labels[gi];
            if !g.dominated_by(lab) {
                continue;
            }
            let pivot_d = e - &self.d_diag[gi];
            let value = if !pivot_d.is_zero() {
                row_sum(&self.d_rows[gi], &c).div_ref(&AlphaRational::from_poly(pivot_d))
            } else {
                let pivot_t = et - &self.delta_diag[gi];
                if pivot_t.is_zero() {
                    return Err(JackError::Degenerate { label: lab.to_string(), omega: g.to_string() });
                }
                row_sum(&self.delta_rows[gi], &c).div_ref(&AlphaRational::from_poly(pivot_t))
            };
            if !value.is_zero() {
                c[gi] = Some(value);
            }
        }
        Ok(self
            .labels
            .iter()
            .zip(c)
            .filter_map(|(l, v)| v.map(|v| (l.clone(), v)))
            .collect())
    }
}

type SectorKey = (usize, usize, usize);

fn sector_cache() -> &'static Mutex<HashMap<SectorKey, Arc<Sector>>> {
    static CACHE: OnceLock<Mutex<HashMap<SectorKey, Arc<Sector>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn jack_cache() -> &'static Mutex<HashMap<(SuperPartition, usize), Arc<JackExpansion>>> {
    static CACHE: OnceLock<Mutex<HashMap<(SuperPartition, usize), Arc<JackExpansion>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Drops every memoized sector and expansion.
pub fn clear_caches() {
    sector_cache().lock().unwrap().clear();
    jack_cache().lock().unwrap().clear();
}

/// The tabulated sector `(n|m)` in `nvars` variables, built on first use.
pub fn sector(n: usize, m: usize, nvars: usize) -> Arc<Sector> {
    let key = (n, m, nvars);
    if let Some(s) = sector_cache().lock().unwrap().get(&key) {
        return s.clone();
    }
    let s = Arc::new(Sector::build(n, m, nvars));
    sector_cache().lock().unwrap().entry(key).or_insert(s).clone()
}

/// `P_Λ^(α)` in `nvars` variables.
pub fn jack_symbolic(label: &SuperPartition, nvars: usize) -> Result<Arc<JackExpansion>, JackError> {
    if label.len() > nvars {
        return Err(JackError::TooFewVariables { label: label.to_string(), needed: label.len(), nvars });
    }
    let key = (label.clone(), nvars);
    if let Some(j) = jack_cache().lock().unwrap().get(&key) {
        return Ok(j.clone());
    }
    let (n, m) = label.degree();
    let sec = sector(n, m, nvars);
    let li = sec.position(label).expect("label in its own sector");
    let coeffs = sec.solve(li)?;
    let j = Arc::new(JackExpansion { label: label.clone(), nvars, coeffs });
    Ok(jack_cache().lock().unwrap().entry(key).or_insert(j).clone())
}

/// Every `P_Λ` of a sector, computed in parallel.
pub fn jack_sector(n: usize, m: usize, nvars: usize) -> Result<Vec<Arc<JackExpansion>>, JackError> {
    let labels = sector(n, m, nvars).labels.clone();
    par::map(&labels, |l| jack_symbolic(l, nvars)).into_iter().collect()
}

/// `P_Λ^(a0)` as a polynomial over `ℚ`.
pub fn jack_at(label: &SuperPartition, nvars: usize, a0: &BigRational) -> Result<SuperPoly<BigRational>, JackError> {
    let j = jack_symbolic(label, nvars)?;
    Ok(SuperPoly::from_mbasis(&j.at(a0)?, nvars))
}

/// Expands a symmetric element, given on the monomial basis, in Jack
/// superpolynomials by peeling off leading terms.
pub fn jack_expand(
    mvec: &BTreeMap<SuperPartition, AlphaRational>,
    nvars: usize,
) -> Result<BTreeMap<SuperPartition, AlphaRational>, JackError> {
    let mut rest = mvec.clone();
    rest.retain(|_, c| !c.is_zero());
    let mut out = BTreeMap::new();
    while let Some(top) = rest.keys().max_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp_lex(b))).cloned() {
        let c = rest[&top].clone();
        let p = jack_symbolic(&top, nvars)?;
        for (om, v) in &p.coeffs {
            let e = rest.entry(om.clone()).or_insert_with(|| AlphaRational::from_i64(0));
            *e = &*e - &(&c * v);
        }
        rest.retain(|_, x| !x.is_zero());
        if rest.contains_key(&top) {
            return Err(JackError::NotInSpan(format!("leading term {top} did not cancel")));
        }
        out.insert(top, c);
    }
    Ok(out)
}

/// `ε_λ(u) = ∏_{i=1}^N (α λ_i + 1 - i + u)` as a polynomial in `u`.
pub fn epsilon(lambda: &[usize], nvars: usize) -> crate::coeffring::UPoly<AlphaRational> {
    use crate::coeffring::UPoly;
    let mut acc = UPoly::constant(AlphaRational::from_i64(1));
    for i in 0..nvars {
        let part = lambda.get(i).copied().unwrap_or(0) as i64;
        let c = AlphaRational::linear(-(i as i64), part);
        acc = acc.mul_ref(&UPoly::new(vec![c, AlphaRational::from_i64(1)]));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::rat;
    use crate::ops::{sekiguchi_apply, Sekiguchi};

    fn sp(s: &str) -> SuperPartition {
        SuperPartition::parse(s).unwrap()
    }

    #[test]
    fn one_row_three() {
        let j = jack_symbolic(&sp(";3"), 3).unwrap();
        let get = |s: &str| j.coeffs[&sp(s)].to_string();
        assert_eq!(get(";3"), "1");
        assert_eq!(get(";2,1"), "3/(2*a+1)");
        assert_eq!(get(";1,1,1"), "6/((a+1)*(2*a+1))");
        assert_eq!(j.coeffs.len(), 3);
    }

    #[test]
    fn dominance_minimal_label() {
        let j = jack_symbolic(&sp("1,0;"), 3).unwrap();
        assert_eq!(j.coeffs.len(), 1);
    }

    #[test]
    fn eigenvalues_and_diagonals() {
        let a = AlphaRational::alpha();
        for (n, m) in [(3, 1), (4, 2), (3, 0), (2, 2)] {
            for j in jack_sector(n, m, 3).unwrap() {
                let p = j.to_poly();
                let e = AlphaRational::from_poly(j.label.d_eigenvalue());
                let et = AlphaRational::from_poly(j.label.delta_eigenvalue());
                assert_eq!(op_d(&p, &a).unwrap(), p.scale(&e), "D on {}", j.label);
                assert_eq!(op_delta(&p, &a).unwrap(), p.scale(&et), "Delta on {}", j.label);
            }
        }
    }

    #[test]
    fn sekiguchi_on_p1() {
        let j = jack_symbolic(&sp(";1"), 2).unwrap().to_poly();
        let g = sekiguchi_apply(Sekiguchi::S, &j, &AlphaRational::alpha()).unwrap();
        assert_eq!(g, j.map_coeffs(|c| epsilon(&[1], 2).scale(c)));
    }

    #[test]
    fn pole_at_minus_one() {
        assert!(matches!(jack_at(&sp(";3"), 3, &rat(-1, 1)), Err(JackError::Pole { .. })));
    }

    #[test]
    fn squared_vandermonde() {
        let p = jack_at(&sp(";4,2"), 3, &rat(-2, 1)).unwrap();
        let v = crate::superpoly::vandermonde::<BigRational>(3, &[0, 1, 2]);
        assert_eq!(p, v.mul(&v));
    }

    #[test]
    fn restriction_drops_or_keeps() {
        for (s, n) in [("1;1", 3), ("1,0;1", 3), (";2,1", 3), ("2,0;1", 3), ("0;1,1", 4)] {
            let l = sp(s);
            let (r, _) = jack_symbolic(&l, n).unwrap().to_poly().restrict_last();
            let expect = if l.len() < n { jack_symbolic(&l, n - 1).unwrap().to_poly() } else { SuperPoly::zero(n - 1) };
            assert_eq!(r, expect, "{s} N={n}");
        }
    }

    #[test]
    fn expand_round_trip() {
        let a = jack_symbolic(&sp("1;1"), 3).unwrap();
        let b = jack_symbolic(&sp("0;2"), 3).unwrap();
        let mut sum = a.coeffs.clone();
        for (k, v) in &b.coeffs {
            let e = sum.entry(k.clone()).or_insert_with(|| AlphaRational::from_i64(0));
            *e = &*e + &(v * &AlphaRational::from_i64(2));
        }
        let got = jack_expand(&sum, 3).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[&sp("0;2")], AlphaRational::from_i64(2));
    }
}
