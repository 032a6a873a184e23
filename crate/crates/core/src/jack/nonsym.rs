//! Non-symmetric Jack polynomials `E_η` and the symmetrization that
//! produces `P_Λ` from `E_Λ̃`.

use std::collections::BTreeMap;

use super::JackError;
use crate::coeffring::{AlphaRational, FieldMatrix, Solution};
use crate::ops::op_cherednik;
use crate::par;
use crate::spart::{composition_eigenvalues, partition_dominated, SuperPartition};
use crate::superpoly::{Monomial, SuperPoly};

/// `E_η = x^η + Σ c_ν x^ν`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonSymJack {
    pub eta: Vec<usize>,
    pub terms: BTreeMap<Vec<usize>, AlphaRational>,
}

impl NonSymJack {
    pub fn to_poly(&self) -> SuperPoly<AlphaRational> {
        let n = self.eta.len();
        SuperPoly::from_terms(
            n,
            self.terms
                .iter()
                .map(|(e, c)| (Monomial::new(0, e.iter().map(|&x| x as u16).collect()), c.clone())),
        )
    }
}

fn sorted_desc(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Compositions `ν` with `|ν| = |η|`, `N` parts and `ν⁺ ≤ η⁺` in dominance.
pub fn compositions_below(eta: &[usize]) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in (0..=left).rev() {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    let n = eta.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let top = sorted_desc(eta);
    let mut all = Vec::new();
    rec(n, eta.iter().sum(), &mut Vec::new(), &mut all);
    all.retain(|nu| partition_dominated(&sorted_desc(nu), &top));
    all
}

/// `E_η` by solving `𝓓_i E = η̄_i E` for all `i` with `x^η` normalized to 1.
pub fn jack_nonsym(eta: &[usize]) -> Result<NonSymJack, JackError> {
    let n = eta.len();
    let support = compositions_below(eta);
    let pos: BTreeMap<&Vec<usize>, usize> = support.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let alpha = AlphaRational::alpha();
    let ebar: Vec<AlphaRational> = composition_eigenvalues(eta).into_iter().map(AlphaRational::from_poly).collect();
    let images = par::map(&support, |nu| {
        let mono = SuperPoly::from_monomial(
            Monomial::new(0, nu.iter().map(|&x| x as u16).collect()),
            AlphaRational::from_i64(1),
            n,
        );
        (1..=n).map(|i| op_cherednik(&mono, i, &alpha).expect("Cherednik on a polynomial")).collect::<Vec<_>>()
    });
    let eta_col = pos[&eta.to_vec()];
    let unknowns: Vec<usize> = (0..support.len()).filter(|&c| c != eta_col).collect();
    let col_of: BTreeMap<usize, usize> = unknowns.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (i, ev) in ebar.iter().enumerate() {
        // (𝓓_i - η̄_i) applied to Σ c_ν x^ν, read at each x^μ
        let mut eqs: Vec<BTreeMap<usize, AlphaRational>> = vec![BTreeMap::new(); support.len()];
        for (c, img) in images.iter().enumerate() {
            for (m, v) in img[i].terms() {
                let mu: Vec<usize> = m.exps.iter().map(|&x| x as usize).collect();
                let r = *pos.get(&mu).expect("Cherednik operators preserve the support");
                let e = eqs[r].entry(c).or_insert_with(|| AlphaRational::from_i64(0));
                *e = &*e + v;
            }
            let e = eqs[c].entry(c).or_insert_with(|| AlphaRational::from_i64(0));
            *e = &*e - ev;
        }
        for eq in eqs {
            let mut row = vec![AlphaRational::from_i64(0); unknowns.len()];
            let mut b = AlphaRational::from_i64(0);
            let mut nonzero = false;
            for (c, v) in eq {
                if v.is_zero() {
                    continue;
                }
                nonzero = true;
                if c == eta_col {
                    b = -v;
                } else {
                    row[col_of[&c]] = v;
                }
            }
            if nonzero {
                rows.push(row);
                rhs.push(b);
            }
        }
    }
    let mut terms = BTreeMap::new();
    terms.insert(eta.to_vec(), AlphaRational::from_i64(1));
    if unknowns.is_empty() {
        return Ok(NonSymJack { eta: eta.to_vec(), terms });
    }
    let mat = FieldMatrix::from_rows(rows, unknowns.len());
    match mat.solve(&rhs) {
        Solution::Unique(x) => {
            for (k, v) in x.into_iter().enumerate() {
                if !v.is_zero() {
                    terms.insert(support[unknowns[k]].clone(), v);
                }
            }
            Ok(NonSymJack { eta: eta.to_vec(), terms })
        }
        _ => Err(JackError::Degenerate { label: format!("{eta:?}"), omega: "joint eigenproblem".into() }),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// `((-1)^{C(m,2)}/f) Σ_{w∈S_N} 𝓚_w θ_1⋯θ_m E_Λ̃`, where `f` is the
/// product of multiplicity factorials of `Λˢ` padded with zeros to `N - m`
/// parts.
pub fn symmetrization(label: &SuperPartition, nvars: usize) -> Result<SuperPoly<AlphaRational>, JackError> {
    if label.len() > nvars {
        return Err(JackError::TooFewVariables { label: label.to_string(), needed: label.len(), nvars });
    }
    let m = label.m();
    let e = jack_nonsym(&label.tilde_composition(nvars))?.to_poly();
    let mut seed = e;
    for i in (0..m).rev() {
        seed = seed.mul_theta(i);
    }
    let perms = permutations(nvars);
    let parts = par::map(&perms, |w| seed.permute(w));
    let mut acc = SuperPoly::zero(nvars);
    for p in &parts {
        acc.add_assign(p);
    }
    let sign: i64 = if (m * m.saturating_sub(1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let f = label.sym_multiplicity_factorial(nvars) as i64;
    Ok(acc.scale(&AlphaRational::new(
        crate::coeffring::AlphaPoly::from_ints(&[sign]),
        crate::coeffring::AlphaPoly::from_ints(&[f]),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jack::jack_symbolic;

    #[test]
    fn constant_and_two_variable() {
        let e0 = jack_nonsym(&[0, 0, 0]).unwrap();
        assert_eq!(e0.terms.len(), 1);
        let e = jack_nonsym(&[1, 0]).unwrap();
        // 𝓓_1 (x1 + c x2) = (α) (x1 + c x2) forces c = 1/(α+1)
        assert_eq!(e.terms[&vec![0, 1]].to_string(), "1/(a+1)");
    }

    #[test]
    fn cherednik_eigenfunctions() {
        let alpha = AlphaRational::alpha();
        for eta in [vec![0, 1, 2], vec![2, 0, 1], vec![1, 1, 0], vec![0, 2], vec![3, 1]] {
            let e = jack_nonsym(&eta).unwrap();
            let p = e.to_poly();
            for (i, ev) in composition_eigenvalues(&eta).into_iter().enumerate() {
                let got = op_cherednik(&p, i + 1, &alpha).unwrap();
                assert_eq!(got, p.scale(&AlphaRational::from_poly(ev)), "eta {eta:?} i {i}");
            }
        }
    }

    #[test]
    fn symmetrization_matches_triangular_solve() {
        for (s, n) in [("0;", 2), (";2", 2), ("1,0;1", 3), ("2,0;", 3), ("1;1", 3), (";1,1", 3), ("0;1,1", 3)] {
            let l = SuperPartition::parse(s).unwrap();
            let direct = jack_symbolic(&l, n).unwrap().to_poly();
            assert_eq!(symmetrization(&l, n).unwrap(), direct, "{s} N={n}");
        }
    }
}
