//! Hilbert series `Σ dim(n|m) uⁿ vᵐ` of the ideal and of the space of
//! superpolynomials vanishing when `k+1` variables coincide.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use super::IdealError;
use crate::coeffring::{rank_integer, BigRational};
use crate::par;
use crate::spart::SuperPartition;
use crate::superpoly::{monomial_symmetric, Monomial};

/// Dimensions `dim(n|m)` for `0 ≤ n ≤ nmax`; absent entries are 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharacterSeries {
    pub nmax: usize,
    pub coeffs: BTreeMap<(usize, usize), usize>,
}

impl CharacterSeries {
    pub fn get(&self, n: usize, m: usize) -> usize {
        self.coeffs.get(&(n, m)).copied().unwrap_or(0)
    }

    /// The coefficient of `uⁿ` as a list indexed by the power of `v`.
    pub fn u_coefficient(&self, n: usize) -> Vec<usize> {
        let top = self.coeffs.keys().filter(|(a, _)| *a == n).map(|(_, m)| *m).max();
        match top {
            None => Vec::new(),
            Some(t) => (0..=t).map(|m| self.get(n, m)).collect(),
        }
    }

    /// Text form starting at `u^{from}`, e.g. `uv+(1+2v+v^2)u^2+…`.
    pub fn to_text(&self, from: usize) -> String {
        let mut parts = Vec::new();
        for n in from..=self.nmax {
            let c = self.u_coefficient(n);
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(m, &d)| {
                    let v = match m {
                        0 => String::new(),
                        1 => "v".to_string(),
                        _ => format!("v^{m}"),
                    };
                    match (d, v.is_empty()) {
                        (_, true) => d.to_string(),
                        (1, false) => v,
                        _ => format!("{d}{v}"),
                    }
                })
                .collect();
            if terms.is_empty() {
                continue;
            }
            let u = match n {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{n}"),
            };
            let single = terms.len() == 1;
            let coef = terms.join("+");
            parts.push(if u.is_empty() {
                coef
            } else if single && coef == "1" {
                u
            } else if single && !coef.chars().all(|ch| ch.is_ascii_digit()) {
                format!("{u}{coef}")
            } else if single {
                format!("{coef}{u}")
            } else {
                format!("({coef}){u}")
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            format!("{}+O(u^{})", parts.join("+"), self.nmax + 1)
        }
    }
}

impl fmt::Display for CharacterSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(0))
    }
}

/// Counts of `(k,r,N)`-admissible superpartitions per degree.
pub fn char_i(k: usize, r: usize, nvars: usize, nmax: usize) -> Result<CharacterSeries, IdealError> {
    let mut coeffs = BTreeMap::new();
    for l in SuperPartition::enumerate_admissible(k, r, nvars, nmax)? {
        *coeffs.entry(l.degree()).or_insert(0) += 1;
    }
    Ok(CharacterSeries { nmax, coeffs })
}

/// `dim` of the degree-`(n|m)` symmetric superpolynomials in `N` variables
/// that vanish under `x_1 = ⋯ = x_{k+1}`: the nullity of the coefficient
/// system obtained from a general `Σ a_Λ m_Λ` after the substitution.
pub fn dim_f(k: usize, nvars: usize, n: usize, m: usize) -> usize {
    let labels = SuperPartition::enumerate(n, m, nvars);
    if labels.is_empty() || nvars < k + 1 {
        return labels.len();
    }
    let map: Vec<usize> = (0..nvars).map(|i| if i <= k { k } else { i }).collect();
    let images = par::map(&labels, |l| monomial_symmetric::<BigRational>(l, nvars).identify_x(&map));
    let mut rows_of: HashMap<Monomial, usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, BigInt)> = Vec::new();
    for (col, img) in images.iter().enumerate() {
        for (mono, c) in img.terms() {
            let next = rows_of.len();
            let row = *rows_of.entry(mono.clone()).or_insert(next);
            entries.push((row, col, c.to_integer()));
        }
    }
    let mut mat = vec![vec![BigInt::from(0); labels.len()]; rows_of.len()];
    for (r, c, v) in entries {
        mat[r][c] += v;
    }
    labels.len() - rank_integer(&mat)
}

/// The series `Σ dim 𝓕_{N,n,m}^{(k)} uⁿ vᵐ` for `n ≤ nmax`.
pub fn char_f(k: usize, nvars: usize, nmax: usize) -> CharacterSeries {
    let degs: Vec<(usize, usize)> = (0..=nmax).flat_map(|n| (0..=nvars).map(move |m| (n, m))).collect();
    let dims = par::map(&degs, |&(n, m)| dim_f(k, nvars, n, m));
    let coeffs = degs.into_iter().zip(dims).filter(|(_, d)| *d > 0).collect();
    CharacterSeries { nmax, coeffs }
}
