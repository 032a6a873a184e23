//! Differential and exchange operators on superpolynomials: the
//! eigenoperators `D` and `Δ`, Dunkl-Cherednik operators, the Sekiguchi
//! pair, the superalgebra generators and the super-Virasoro half.
//!
//! Operators take `α` as an explicit coefficient, so the same code runs
//! over `ℚ(α)`, `ℤ[α]` or `ℚ` with `α` specialized.

mod algebra;
mod sekiguchi;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coeffring::{Field, Ring};
use crate::superpoly::{power_sum, Monomial, SuperPoly, SuperPolyError};

pub use algebra::{
    algebra_relations, cherednik_relations, check_relations, global_relations, homogeneous_basis, symmetric_basis,
    virasoro_relations, OpExpr, Relation, RelationFailure,
};
pub use sekiguchi::{sekiguchi_apply, sekiguchi_component, Sekiguchi};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error(transparent)]
    NonPolynomial(#[from] SuperPolyError),
    #[error("operator {0} needs 1/alpha or 1/2 in the coefficient ring")]
    NeedsInverse(String),
    #[error("operator index {index} out of range for {nvars} variables")]
    BadIndex { index: usize, nvars: usize },
    #[error("unknown operator {0:?}")]
    Unknown(String),
}

/// Operators with a fixed action. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Operator {
    Identity,
    D,
    Delta,
    Cherednik(usize),
    /// `K_ij`, exchanging `x_i` and `x_j` only.
    SwapX(usize, usize),
    Nabla,
    NablaPerp,
    SmallQ,
    SmallQPerp,
    BigQ,
    BigQPerp,
    E,
    CalE,
    QTilde,
    /// `L_n`, `n ≤ 1`.
    L(i32),
    /// `G_r` with `r = k/2`, `k` odd and `≤ 1`; stores `k`.
    G(i32),
    /// Multiplication by `p_n`.
    MulP(usize),
    /// Left multiplication by `p̃_n`.
    MulPTilde(usize),
}

impl Operator {
    /// Whether the operator changes the fermionic degree by one.
    pub fn is_odd(&self) -> bool {
        matches!(
            self,
            Operator::SmallQ
                | Operator::SmallQPerp
                | Operator::BigQ
                | Operator::BigQPerp
                | Operator::QTilde
                | Operator::G(_)
                | Operator::MulPTilde(_)
        )
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Identity => write!(f, "1"),
            Operator::D => write!(f, "D"),
            Operator::Delta => write!(f, "Delta"),
            Operator::Cherednik(i) => write!(f, "Cherednik({i})"),
            Operator::SwapX(i, j) => write!(f, "K({i},{j})"),
            Operator::Nabla => write!(f, "nabla"),
            Operator::NablaPerp => write!(f, "nabla_perp"),
            Operator::SmallQ => write!(f, "q"),
            Operator::SmallQPerp => write!(f, "q_perp"),
            Operator::BigQ => write!(f, "Q"),
            Operator::BigQPerp => write!(f, "Q_perp"),
            Operator::E => write!(f, "E"),
            Operator::CalE => write!(f, "calE"),
            Operator::QTilde => write!(f, "q_tilde"),
            Operator::L(n) => write!(f, "L({n})"),
            Operator::G(k) => write!(f, "G({k}/2)"),
            Operator::MulP(n) => write!(f, "p({n})"),
            Operator::MulPTilde(n) => write!(f, "pt({n})"),
        }
    }
}

impl FromStr for Operator {
    type Err = OpError;
    fn from_str(s: &str) -> Result<Self, OpError> {
        let unknown = || OpError::Unknown(s.to_string());
        let s = s.trim();
        let (name, arg) = match s.split_once('(') {
            Some((n, rest)) => (n, Some(rest.strip_suffix(')').ok_or_else(unknown)?)),
            None => (s, None),
        };
        let int = |a: Option<&str>| -> Result<i64, OpError> {
            a.ok_or_else(unknown)?.trim().parse().map_err(|_| unknown())
        };
        Ok(match name {
            "1" | "Id" => Operator::Identity,
            "D" => Operator::D,
            "Delta" => Operator::Delta,
            "Cherednik" => Operator::Cherednik(int(arg)?.try_into().map_err(|_| unknown())?),
            "K" => {
                let (a, b) = arg.and_then(|a| a.split_once(',')).ok_or_else(unknown)?;
                Operator::SwapX(int(Some(a))? as usize, int(Some(b))? as usize)
            }
            "nabla" => Operator::Nabla,
            "nabla_perp" => Operator::NablaPerp,
            "q" => Operator::SmallQ,
            "q_perp" => Operator::SmallQPerp,
            "Q" => Operator::BigQ,
            "Q_perp" => Operator::BigQPerp,
            "E" => Operator::E,
            "calE" => Operator::CalE,
            "q_tilde" => Operator::QTilde,
            "L" => {
                let n = int(arg)? as i32;
                if n > 1 {
                    return Err(unknown());
                }
                Operator::L(n)
            }
            "G" => {
                let a = arg.ok_or_else(unknown)?.trim();
                let k = match a.strip_suffix("/2") {
                    Some(num) => int(Some(num))? as i32,
                    None => return Err(unknown()),
                };
                if k % 2 == 0 || k > 1 {
                    return Err(unknown());
                }
                Operator::G(k)
            }
            "p" => Operator::MulP(int(arg)? as usize),
            "pt" => Operator::MulPTilde(int(arg)? as usize),
            _ => return Err(unknown()),
        })
    }
}

fn x_times_xdiff<C: Ring>(f: &SuperPoly<C>, i: usize, j: usize) -> SuperPoly<C> {
    f.mul_x(i, 1).sub(&f.mul_x(j, 1))
}

/// Termwise map `θ_S x^e ↦ w(S, e) θ_S x^e`.
fn weighted<C: Ring>(f: &SuperPoly<C>, w: impl Fn(&Monomial) -> C) -> SuperPoly<C> {
    SuperPoly::from_terms(
        f.nvars(),
        f.terms().map(|(m, c)| (m.clone(), c.mul_ref(&w(m)))),
    )
}

fn half<C: Ring>(name: &Operator) -> Result<C, OpError> {
    C::from_int(2).try_inv().ok_or_else(|| OpError::NeedsInverse(name.to_string()))
}

fn n_over_alpha<C: Ring>(name: &Operator, nvars: usize, alpha: &C) -> Result<C, OpError> {
    let inv = alpha.try_inv().ok_or_else(|| OpError::NeedsInverse(name.to_string()))?;
    Ok(C::from_int(nvars as i64).mul_ref(&inv))
}

fn euler_x<C: Ring>(m: &Monomial, i: usize) -> C {
    C::from_int(m.exps[i] as i64)
}

fn theta_number<C: Ring>(m: &Monomial, i: usize) -> C {
    C::from_int((m.thetas >> i & 1) as i64)
}

/// `D = ½ Σ α x_i² ∂_i² + Σ_{i≠j} x_i x_j/(x_i - x_j) (∂_i - (θ_i - θ_j)/(x_i - x_j) ∂_{θ_i})`
pub fn op_d<C: Ring>(f: &SuperPoly<C>, alpha: &C) -> Result<SuperPoly<C>, OpError> {
    let n = f.nvars();
    let mut out = weighted(f, |m| {
        let s: i64 = m.exps.iter().map(|&e| e as i64 * (e as i64 - 1) / 2).sum();
        alpha.mul_ref(&C::from_int(s))
    });
    for i in 0..n {
        for j in i + 1..n {
            let d = f.deriv_x(i).sub(&f.deriv_x(j));
            let g = x_times_xdiff(&d, i, j).sub(&f.sub(&f.swap_theta(i, j)));
            let q = g.div_xdiff(i, j)?.div_xdiff(i, j)?;
            out.add_assign(&q.mul_x(i, 1).mul_x(j, 1));
        }
    }
    Ok(out)
}

/// `Δ = Σ α x_i θ_i ∂_i ∂_{θ_i} + Σ_{i≠j} (x_i θ_j + x_j θ_i)/(x_i - x_j) ∂_{θ_i}`
pub fn op_delta<C: Ring>(f: &SuperPoly<C>, alpha: &C) -> Result<SuperPoly<C>, OpError> {
    let n = f.nvars();
    let mut out = weighted(f, |m| {
        let s: i64 = (0..n).filter(|&i| m.thetas >> i & 1 == 1).map(|i| m.exps[i] as i64).sum();
        alpha.mul_ref(&C::from_int(s))
    });
    for i in 0..n {
        for j in i + 1..n {
            let h = f.deriv_theta(i).sub(&f.deriv_theta(j));
            let g = h.mul_x(i, 1).mul_theta(j).add(&h.mul_x(j, 1).mul_theta(i));
            out.add_assign(&g.div_xdiff(i, j)?);
        }
    }
    Ok(out)
}

/// Dunkl-Cherednik operator `𝓓_i` (1-based `i`).
pub fn op_cherednik<C: Ring>(f: &SuperPoly<C>, i: usize, alpha: &C) -> Result<SuperPoly<C>, OpError> {
    let n = f.nvars();
    if i == 0 || i > n {
        return Err(OpError::BadIndex { index: i, nvars: n });
    }
    let i0 = i - 1;
    let shift = C::from_int(-(i0 as i64));
    let mut out = weighted(f, |m| alpha.mul_ref(&euler_x(m, i0)).add_ref(&shift));
    for j in 0..n {
        if j == i0 {
            continue;
        }
        let dd = f.sub(&f.swap_x(i0, j)).div_xdiff(i0, j)?;
        let k = if j < i0 { i0 } else { j };
        out.add_assign(&dd.mul_x(k, 1));
    }
    Ok(out)
}

pub fn apply<C: Ring>(op: &Operator, f: &SuperPoly<C>, alpha: &C) -> Result<SuperPoly<C>, OpError> {
    let n = f.nvars();
    let sum = |g: &dyn Fn(usize) -> SuperPoly<C>| {
        let mut acc = SuperPoly::zero(n);
        for i in 0..n {
            acc.add_assign(&g(i));
        }
        acc
    };
    Ok(match op {
        Operator::Identity => f.clone(),
        Operator::D => op_d(f, alpha)?,
        Operator::Delta => op_delta(f, alpha)?,
        Operator::Cherednik(i) => op_cherednik(f, *i, alpha)?,
        Operator::SwapX(i, j) => {
            if *i == 0 || *j == 0 || *i > n || *j > n {
                return Err(OpError::BadIndex { index: (*i).max(*j), nvars: n });
            }
            f.swap_x(i - 1, j - 1)
        }
        Operator::Nabla => sum(&|i| f.deriv_x(i)),
        Operator::NablaPerp => {
            let c = n_over_alpha(op, n, alpha)?;
            sum(&|i| {
                weighted(f, |m| euler_x::<C>(m, i).add_ref(&theta_number(m, i)).add_ref(&c)).mul_x(i, 1)
            })
        }
        Operator::SmallQ => sum(&|i| f.deriv_x(i).mul_theta(i)),
        Operator::SmallQPerp => sum(&|i| f.deriv_theta(i).mul_x(i, 1)),
        Operator::BigQ => {
            let c = n_over_alpha(op, n, alpha)?;
            sum(&|i| weighted(f, |m| euler_x::<C>(m, i).add_ref(&c)).mul_theta(i))
        }
        Operator::BigQPerp => sum(&|i| f.deriv_theta(i)),
        Operator::E => {
            let c = n_over_alpha(op, n, alpha)?.mul_ref(&C::from_int(n as i64));
            weighted(f, |m| C::from_int(m.x_degree() as i64).add_ref(&c))
        }
        Operator::CalE => weighted(f, |m| C::from_int((m.x_degree() + m.theta_degree()) as i64)),
        Operator::QTilde => sum(&|i| weighted(f, |m| euler_x(m, i)).mul_theta(i)),
        Operator::L(k) => {
            let k = *k;
            if k == 1 {
                sum(&|i| f.deriv_x(i))
            } else if k > 1 {
                return Err(OpError::Unknown(op.to_string()));
            } else {
                let h = half::<C>(op)?;
                let c = C::from_int(1 - k as i64).mul_ref(&h);
                let p = (-k) as u16;
                sum(&|i| {
                    weighted(f, |m| euler_x::<C>(m, i).add_ref(&theta_number::<C>(m, i).mul_ref(&c)))
                        .mul_x(i, p)
                })
            }
        }
        Operator::G(k) => {
            if k % 2 == 0 || *k > 1 {
                return Err(OpError::Unknown(op.to_string()));
            }
            let p = ((1 - k) / 2) as u16;
            sum(&|i| f.deriv_theta(i).add(&f.deriv_x(i).mul_theta(i)).mul_x(i, p))
        }
        Operator::MulP(k) => power_sum::<C>(n, *k, false).mul(f),
        Operator::MulPTilde(k) => power_sum::<C>(n, *k, true).mul(f),
    })
}

/// Applies a word of operators, rightmost first.
pub fn apply_word<C: Ring>(word: &[Operator], f: &SuperPoly<C>, alpha: &C) -> Result<SuperPoly<C>, OpError> {
    let mut g = f.clone();
    for op in word.iter().rev() {
        g = apply(op, &g, alpha)?;
    }
    Ok(g)
}

/// `[A, B} = AB - (-1)^{|A||B|} BA` applied to `f`.
pub fn supercommutator<C: Ring>(
    a: &Operator,
    b: &Operator,
    f: &SuperPoly<C>,
    alpha: &C,
) -> Result<SuperPoly<C>, OpError> {
    let ab = apply(a, &apply(b, f, alpha)?, alpha)?;
    let ba = apply(b, &apply(a, f, alpha)?, alpha)?;
    Ok(if a.is_odd() && b.is_odd() { ab.add(&ba) } else { ab.sub(&ba) })
}

/// `f ↦ (1/α)` helper for fields.
pub fn inv_alpha<F: Field>(alpha: &F) -> F {
    alpha.inv()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{AlphaRational, BigRational};
    use crate::spart::SuperPartition;
    use crate::superpoly::monomial_symmetric;

    fn a() -> AlphaRational {
        AlphaRational::alpha()
    }

    #[test]
    fn operator_names_round_trip() {
        for s in ["D", "Delta", "Cherednik(2)", "K(1,3)", "nabla", "nabla_perp", "q", "q_perp", "Q", "Q_perp",
            "E", "calE", "q_tilde", "L(-2)", "G(-3/2)", "G(1/2)", "p(2)", "pt(0)"]
        {
            let op: Operator = s.parse().unwrap();
            assert_eq!(op.to_string(), s);
        }
        assert!("L(2)".parse::<Operator>().is_err());
        assert!("G(1)".parse::<Operator>().is_err());
        assert!("foo".parse::<Operator>().is_err());
    }

    #[test]
    fn d_on_single_power_sum() {
        // D p_2 in two variables: ½α·2·(x1²+x2²) + x1x2[(x1-x2)(2x1-2x2)]/(x1-x2)² = α p_2 + 2 x1 x2
        let p2 = power_sum::<AlphaRational>(2, 2, false);
        let got = op_d(&p2, &a()).unwrap();
        let expect = p2.scale(&a()).add(&SuperPoly::from_term(2, &[], &[1, 1], AlphaRational::from_i64(2)));
        assert_eq!(got, expect);
    }

    #[test]
    fn d_rejects_nonsymmetric_input_when_not_polynomial() {
        let f = SuperPoly::<BigRational>::theta(2, 0);
        assert!(op_d(&f, &BigRational::from_integer(2.into())).is_err());
    }

    #[test]
    fn eigenoperators_preserve_symmetry() {
        let m = monomial_symmetric::<AlphaRational>(&SuperPartition::from_parts(&[1, 0], &[1]), 3);
        assert!(op_d(&m, &a()).unwrap().check_symmetric().is_ok());
        assert!(op_delta(&m, &a()).unwrap().check_symmetric().is_ok());
    }
}
