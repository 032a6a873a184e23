//! Sekiguchi operators built from the Dunkl-Cherednik operators, with
//! the spectral parameter `u` kept formal.

use super::{op_cherednik, OpError};
use crate::coeffring::{Ring, UPoly};
use crate::par;
use crate::superpoly::SuperPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sekiguchi {
    /// `S(u) = ∏_i (𝓓_i + u)`
    S,
    /// `S̃(u)`: on the sector with `θ`-set `{1..m}`, the first `m` factors
    /// are shifted by `α`, then symmetrized.
    STilde,
}

fn lift<C: Ring>(f: &SuperPoly<C>) -> SuperPoly<UPoly<C>> {
    f.map_coeffs(|c| UPoly::constant(c.clone()))
}

/// `∏_{i≤m}(𝓓_i + α + u) ∏_{j>m}(𝓓_j + u)` applied to `f`.
fn shifted_product<C: Ring>(
    f: &SuperPoly<UPoly<C>>,
    m: usize,
    alpha: &C,
) -> Result<SuperPoly<UPoly<C>>, OpError> {
    let a = UPoly::constant(alpha.clone());
    let u = UPoly::u();
    let ua = u.add_ref(&a);
    let mut g = f.clone();
    for i in 1..=f.nvars() {
        let shift = if i <= m { &ua } else { &u };
        let mut next = op_cherednik(&g, i, &a)?;
        next.add_scaled(&g, shift);
        g = next;
    }
    Ok(g)
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
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

/// The sector-`m` piece `∏_{i≤m}(𝓓_i+α+u)∏_{j>m}(𝓓_j+u) π_{1..m} f`.
/// For symmetric `f` this is the `θ_1⋯θ_m` component of `S̃(u) f`.
pub fn sekiguchi_component<C: Ring>(
    f: &SuperPoly<C>,
    m: usize,
    alpha: &C,
) -> Result<SuperPoly<UPoly<C>>, OpError> {
    let mask = if m == 0 { 0 } else { (1u32 << m) - 1 };
    shifted_product(&lift(&f.theta_component(mask)), m, alpha)
}

pub fn sekiguchi_apply<C: Ring>(
    kind: Sekiguchi,
    f: &SuperPoly<C>,
    alpha: &C,
) -> Result<SuperPoly<UPoly<C>>, OpError> {
    let n = f.nvars();
    match kind {
        Sekiguchi::S => shifted_product(&lift(f), 0, alpha),
        Sekiguchi::STilde => {
            let perms = permutations(n);
            let mut out = SuperPoly::zero(n);
            for m in 0..=n {
                let w = C::from_int(factorial(m) * factorial(n - m))
                    .try_inv()
                    .ok_or_else(|| OpError::NeedsInverse("S_tilde".into()))?;
                let g = sekiguchi_component(f, m, alpha)?;
                if g.is_zero() {
                    continue;
                }
                let parts = par::map(&perms, |s| g.permute(s));
                let mut acc = SuperPoly::zero(n);
                for p in &parts {
                    acc.add_assign(p);
                }
                out.add_scaled(&acc, &UPoly::constant(w));
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{rat, BigRational};
    use crate::superpoly::monomial_symmetric;
    use crate::spart::SuperPartition;

    #[test]
    fn s_on_constant() {
        // 𝓓_i 1 = 1 - i
        let one = SuperPoly::<BigRational>::one(2);
        let got = sekiguchi_apply(Sekiguchi::S, &one, &rat(3, 1)).unwrap();
        let expect = UPoly::new(vec![rat(0, 1), rat(-1, 1), rat(1, 1)]);
        assert_eq!(got.coeff(&crate::superpoly::Monomial::new(0, vec![0, 0])), expect);
    }

    #[test]
    fn s_tilde_preserves_symmetry() {
        let m = monomial_symmetric::<BigRational>(&SuperPartition::parse("1;1").unwrap(), 3);
        let g = sekiguchi_apply(Sekiguchi::STilde, &m, &rat(2, 1)).unwrap();
        assert!(g.check_symmetric().is_ok());
        assert_eq!(permutations(3).len(), 6);
    }
}
