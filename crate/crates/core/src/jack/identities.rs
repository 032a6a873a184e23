//! Closed-form identities of Jack superpolynomials: norm, evaluation,
//! duality, removal of a column or row, and the integral normalization.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Signed;

use super::{epsilon, jack_symbolic, JackError};
use crate::coeffring::{AlphaPoly, AlphaRational};
use crate::ops::{sekiguchi_apply, sekiguchi_component, Sekiguchi};
use crate::spart::SuperPartition;
use crate::superpoly::{omega_alpha_pbasis, prescribed_part, PowerSumTransition, SuperPoly};

fn sign_m2(m: usize) -> i64 {
    if (m * m.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn transition(n: usize, m: usize, nvars: usize) -> Result<Arc<PowerSumTransition>, JackError> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize, usize), Arc<PowerSumTransition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(n, m, nvars)) {
        return Ok(t.clone());
    }
    let t = PowerSumTransition::new(n, m, nvars).map_err(|rank| {
        JackError::Coefficient(format!("power sums of degree ({n}|{m}) are dependent in {nvars} variables (rank {rank})"))
    })?;
    let t = Arc::new(t);
    Ok(cache.lock().unwrap().entry((n, m, nvars)).or_insert(t).clone())
}

/// `‖P_Λ‖² = α^m ∏_{s∈𝓑Λ} h^(α)_Λ(s) / h^Λ_(α)(s)`.
pub fn norm_hook(label: &SuperPartition) -> AlphaRational {
    let am = AlphaPoly::alpha().pow(label.m() as u32);
    AlphaRational::new(&am * &label.upper_hook_product(), label.lower_hook_product())
}

/// `(-1)^{C(m,2)} ⟨⟨P_Λ | P_Λ⟩⟩` computed through the power-sum basis.
pub fn norm_gram(label: &SuperPartition, nvars: usize) -> Result<AlphaRational, JackError> {
    let (n, m) = label.degree();
    let t = transition(n, m, nvars)?;
    let p = jack_symbolic(label, nvars)?;
    let g = t.scalar_product(&p.coeffs, &p.coeffs);
    Ok(&g * &AlphaRational::from_i64(sign_m2(m)))
}

/// `(1/v_Λ) ∏_{s∈𝓢Λ} (N - (i-1) + α(j-1))`, with `𝓢Λ = Λ⊛/(m, m-1, …, 1)`.
pub fn evaluation_formula(label: &SuperPartition, nvars: usize) -> AlphaRational {
    let m = label.m();
    let mut num = AlphaPoly::linear(1, 0);
    for (i, &len) in label.circ().iter().enumerate() {
        let skip = (m + 1).saturating_sub(i + 1);
        for j in skip + 1..=len {
            num = &num * &AlphaPoly::linear(nvars as i64 - i as i64, j as i64 - 1);
        }
    }
    AlphaRational::new(num, label.lower_hook_product())
}

/// `𝓟_{Λ,m}(1, …, 1)` from the explicit polynomial.
pub fn evaluation_direct(label: &SuperPartition, nvars: usize) -> Result<AlphaRational, JackError> {
    let p = jack_symbolic(label, nvars)?.to_poly();
    let pp = prescribed_part(&p, label.m()).map_err(|e| JackError::Coefficient(e.to_string()))?;
    let mut acc = AlphaRational::from_i64(0);
    for (_, c) in pp.terms() {
        acc = &acc + c;
    }
    Ok(acc)
}

/// Checks `ω̂_α P_Λ^(α) = (-1)^{C(m,2)} ‖P_Λ‖² P_{Λ'}^{(1/α)}` in the
/// power-sum basis; `nvars` must make the power sums independent.
pub fn duality_check(label: &SuperPartition, nvars: usize) -> Result<bool, JackError> {
    let (n, m) = label.degree();
    let t = transition(n, m, nvars)?;
    let p = jack_symbolic(label, nvars)?;
    let lhs = omega_alpha_pbasis(&t.to_pbasis(&p.coeffs));
    let conj = jack_symbolic(&label.conjugate(), nvars)?;
    let inverted: BTreeMap<SuperPartition, AlphaRational> =
        conj.coeffs.iter().map(|(k, v)| (k.clone(), v.invert_alpha())).collect();
    let scale = &norm_hook(label) * &AlphaRational::from_i64(sign_m2(m));
    let rhs: BTreeMap<SuperPartition, AlphaRational> =
        t.to_pbasis(&inverted).into_iter().map(|(k, v)| (k, &v * &scale)).collect();
    Ok(lhs == rhs)
}

/// `S(u) P_Λ = ε_{Λ*}(u) P_Λ` and `S̃(u) P_Λ = ε_{Λ⊛}(u) P_Λ`, as
/// identities in `u`. With `full` unset the second relation is read off the
/// `θ_1⋯θ_m` component, which determines a symmetric superpolynomial.
pub fn sekiguchi_check(label: &SuperPartition, nvars: usize, full: bool) -> Result<(bool, bool), JackError> {
    let p = jack_symbolic(label, nvars)?.to_poly();
    let a = AlphaRational::alpha();
    let op_err = |e: crate::ops::OpError| JackError::Coefficient(e.to_string());
    let star = epsilon(&label.star(), nvars);
    let circ = epsilon(&label.circ(), nvars);
    let s = sekiguchi_apply(Sekiguchi::S, &p, &a).map_err(op_err)?;
    let s_ok = s == p.map_coeffs(|c| star.scale(c));
    let st_ok = if full {
        sekiguchi_apply(Sekiguchi::STilde, &p, &a).map_err(op_err)? == p.map_coeffs(|c| circ.scale(c))
    } else {
        let m = label.m();
        let mask = if m == 0 { 0 } else { (1u32 << m) - 1 };
        sekiguchi_component(&p, m, &a).map_err(op_err)? == p.theta_component(mask).map_coeffs(|c| circ.scale(c))
    };
    Ok((s_ok, st_ok))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalCheck {
    pub name: &'static str,
    pub holds: bool,
}

fn lift(p: &SuperPoly<AlphaRational>, shift: usize, nvars: usize) -> SuperPoly<AlphaRational> {
    // variables 1..n-1 of p become shift+1..shift+n-1 of the result
    let mut out = SuperPoly::zero(nvars);
    for (m, c) in p.terms() {
        let mut exps = vec![0u16; nvars];
        exps[shift..shift + m.exps.len()].copy_from_slice(&m.exps);
        out.add_term(crate::superpoly::Monomial::new(m.thetas << shift, exps), c.clone());
    }
    out
}

/// The column and row removal factorizations that apply to `Λ` in `nvars`
/// variables:
/// - all rows non-empty, `N = ℓ`: `P_Λ = x_1⋯x_ℓ P_{𝓒Λ}`;
/// - a circled empty row, `N = ℓ`: `(-1)^{m-1}[∂_{θ_ℓ} P_Λ]_{x_ℓ=θ_ℓ=0} = P_{𝓒̃Λ}`;
/// - bosonic first row of length `k`: `[x_1^k] P_Λ = P_{ℛΛ}(x_2, …)`;
/// - fermionic first row of length `k`: `[x_1^k] ∂_{θ_1} P_Λ = P_{ℛℛ̃Λ}(x_2, …)`.
pub fn removal_identities(label: &SuperPartition, nvars: usize) -> Result<Vec<RemovalCheck>, JackError> {
    let mut out = Vec::new();
    let p = jack_symbolic(label, nvars)?.to_poly();
    let l = label.len();
    let has_empty_circle = label.antisym().last() == Some(&0);
    if l > 0 && nvars == l && !has_empty_circle {
        let smaller = SuperPartition::new(
            label.antisym().iter().map(|a| a - 1).collect(),
            label.sym().iter().filter(|&&s| s > 1).map(|s| s - 1).collect(),
        )
        .expect("column removal");
        let mut rhs = jack_symbolic(&smaller, nvars)?.to_poly();
        for i in 0..l {
            rhs = rhs.mul_x(i, 1);
        }
        out.push(RemovalCheck { name: "column", holds: p == rhs });
    }
    if l > 0 && nvars == l && has_empty_circle {
        let m = label.m();
        let smaller =
            SuperPartition::new(label.antisym()[..m - 1].to_vec(), label.sym().to_vec()).expect("circle removal");
        let (_, d) = p.restrict_last();
        let lhs = d.scale(&AlphaRational::from_i64(if m % 2 == 1 { 1 } else { -1 }));
        let rhs = if smaller.len() < nvars {
            jack_symbolic(&smaller, nvars - 1)?.to_poly()
        } else {
            SuperPoly::zero(nvars - 1)
        };
        out.push(RemovalCheck { name: "circle", holds: lhs == rhs });
    }
    if l > 0 && nvars >= 2 {
        let first = label.rows()[0];
        let k = first.len as u16;
        let (g, smaller) = if first.circled {
            let s = SuperPartition::new(label.antisym()[1..].to_vec(), label.sym().to_vec()).expect("row removal");
            (p.deriv_theta(0).x_coefficient(0, k), s)
        } else {
            let mut sym = label.sym().to_vec();
            sym.remove(0);
            let s = SuperPartition::new(label.antisym().to_vec(), sym).expect("row removal");
            (p.x_coefficient(0, k), s)
        };
        let rhs = if smaller.len() < nvars {
            lift(&jack_symbolic(&smaller, nvars - 1)?.to_poly(), 1, nvars)
        } else {
            SuperPoly::zero(nvars)
        };
        let name = if first.circled { "fermionic row" } else { "bosonic row" };
        out.push(RemovalCheck { name, holds: g == rhs });
    }
    Ok(out)
}

/// `J_Λ = v_Λ P_Λ` with `v_Λ = ∏_{s∈𝓑Λ} h^Λ_(α)(s)`.
#[derive(Debug, Clone)]
pub struct IntegralForm {
    pub v: AlphaPoly,
    pub coeffs: BTreeMap<SuperPartition, AlphaRational>,
    /// Every coefficient lies in `ℕ[α]`.
    pub positive: bool,
}

pub fn integral_form(label: &SuperPartition, nvars: usize) -> Result<IntegralForm, JackError> {
    let v = label.lower_hook_product();
    let vr = AlphaRational::from_poly(v.clone());
    let p = jack_symbolic(label, nvars)?;
    let coeffs: BTreeMap<SuperPartition, AlphaRational> =
        p.coeffs.iter().map(|(k, c)| (k.clone(), c * &vr)).collect();
    let positive = coeffs
        .values()
        .all(|c| c.is_polynomial() && c.denom().coeffs()[0].is_positive() && c.numer().coeffs().iter().all(|x| !x.is_negative()));
    Ok(IntegralForm { v, coeffs, positive })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        SuperPartition::parse(s).unwrap()
    }

    #[test]
    fn norms_agree_small() {
        for s in [";1", ";2", ";1,1", "0;", "1,0;", "0;1", "1;", "1;1", "2,0;", ";2,1"] {
            let l = sp(s);
            let (n, m) = l.degree();
            assert_eq!(norm_hook(&l), norm_gram(&l, n + m).unwrap(), "{s}");
        }
        assert_eq!(norm_hook(&sp(";2")).to_string(), "2*a^2/(a+1)");
    }

    #[test]
    fn evaluation_small() {
        for (s, n) in [(";1", 3), (";2", 2), ("1,0;1", 3), ("0;1", 2), ("2;1", 3)] {
            let l = sp(s);
            assert_eq!(evaluation_formula(&l, n), evaluation_direct(&l, n).unwrap(), "{s}");
        }
    }

    #[test]
    fn duality_small() {
        for s in [";1", "0;", ";2", "1;", "0;1", "1,0;"] {
            let l = sp(s);
            let (n, m) = l.degree();
            assert!(duality_check(&l, n + m).unwrap(), "{s}");
        }
    }

    #[test]
    fn removals_small() {
        for (s, n) in [(";1,1", 2), ("0;1", 2), (";2,1", 2), ("1;2", 2), ("2,0;1", 3), ("1,0;", 2)] {
            let checks = removal_identities(&sp(s), n).unwrap();
            assert!(!checks.is_empty());
            for c in checks {
                assert!(c.holds, "{s} N={n} {}", c.name);
            }
        }
    }

    #[test]
    fn sekiguchi_small() {
        for (s, n) in [(";1", 2), ("0;", 2), ("1,0;", 3), ("2;1", 3), ("1;1,1", 3)] {
            assert_eq!(sekiguchi_check(&sp(s), n, false).unwrap(), (true, true), "{s}");
        }
        assert_eq!(sekiguchi_check(&sp("1;1"), 3, true).unwrap(), (true, true));
    }

    #[test]
    fn integral_single_cell() {
        let j = integral_form(&sp(";1"), 2).unwrap();
        assert!(j.positive);
        assert_eq!(j.v, AlphaPoly::linear(1, 0));
    }
}
