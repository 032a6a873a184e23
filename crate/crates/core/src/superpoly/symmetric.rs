//! Symmetric superpolynomials: monomial and power-sum bases, the
//! power-sum scalar product and the involution `ω̂_α`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{theta_word_sign, Monomial, SuperPoly, SuperPolyError};
use crate::coeffring::{AlphaPoly, AlphaRational, FieldMatrix, Ring, Solution};
use crate::spart::{z_factor, SuperPartition};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Fermion(usize),
    Boson(usize),
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `m_Λ` in `nvars` variables: the sum of the distinct terms of
/// `𝓚_σ (θ_1⋯θ_m x^Λ)` over permutations `σ`. Zero when `ℓ(Λ) > N`.
pub fn monomial_symmetric<C: Ring>(label: &SuperPartition, nvars: usize) -> SuperPoly<C> {
    let mut out = SuperPoly::zero(nvars);
    if label.len() > nvars {
        return out;
    }
    let m = label.m();
    let mut slots: Vec<Slot> = (0..m).map(Slot::Fermion).collect();
    slots.extend(label.sym().iter().map(|&v| Slot::Boson(v)));
    slots.resize(nvars, Slot::Boson(0));
    slots.sort();
    loop {
        let mut exps = vec![0u16; nvars];
        let mut word = vec![0usize; m];
        for (pos, s) in slots.iter().enumerate() {
            match *s {
                Slot::Fermion(i) => {
                    word[i] = pos;
                    exps[pos] = label.antisym()[i] as u16;
                }
                Slot::Boson(v) => exps[pos] = v as u16,
            }
        }
        let (sign, mask) = theta_word_sign(&word);
        out.add_term(Monomial::new(mask, exps), C::from_int(sign as i64));
        if !next_permutation(&mut slots) {
            break;
        }
    }
    out
}

/// `p_n = Σ x_i^n`, or `p̃_n = Σ θ_i x_i^n` when `fermionic`.
pub fn power_sum<C: Ring>(nvars: usize, n: usize, fermionic: bool) -> SuperPoly<C> {
    let mut out = SuperPoly::zero(nvars);
    for i in 0..nvars {
        let mut exps = vec![0u16; nvars];
        exps[i] = n as u16;
        let mask = if fermionic { 1 << i } else { 0 };
        out.add_term(Monomial::new(mask, exps), C::one());
    }
    out
}

/// `p_Λ = p̃_{Λ_1}⋯p̃_{Λ_m} p_{Λ_{m+1}}⋯p_{Λ_ℓ}`
pub fn power_sum_product<C: Ring>(label: &SuperPartition, nvars: usize) -> SuperPoly<C> {
    let mut acc = SuperPoly::one(nvars);
    for &a in label.antisym() {
        acc = acc.mul(&power_sum(nvars, a, true));
    }
    for &s in label.sym() {
        acc = acc.mul(&power_sum(nvars, s, false));
    }
    acc
}

/// `⟨⟨p_Λ | p_Ω⟩⟩ = δ_{ΛΩ} (-1)^{C(m,2)} α^{ℓ(Λ)} z_{Λˢ}`
pub fn scalar_product_p(a: &SuperPartition, b: &SuperPartition) -> AlphaRational {
    if a != b {
        return AlphaRational::from_i64(0);
    }
    let m = a.m();
    let sign = if (m * m.saturating_sub(1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let z = BigInt::from(z_factor(a.sym()));
    AlphaRational::from_poly(AlphaPoly::alpha().pow(a.len() as u32).scale(&(z * sign)))
}

/// `ω̂_α` on power-sum coordinates: `p_n ↦ (-1)^{n-1} α p_n`,
/// `p̃_n ↦ (-1)^n α p̃_n`.
pub fn omega_alpha_pbasis(
    v: &BTreeMap<SuperPartition, AlphaRational>,
) -> BTreeMap<SuperPartition, AlphaRational> {
    v.iter()
        .map(|(lab, c)| {
            let odd = lab.antisym().iter().sum::<usize>()
                + lab.sym().iter().map(|&s| s - 1).sum::<usize>();
            let f = AlphaPoly::alpha().pow(lab.len() as u32);
            let f = if odd % 2 == 1 { -f } else { f };
            (lab.clone(), c * &AlphaRational::from_poly(f))
        })
        .collect()
}

impl<C: Ring> SuperPoly<C> {
    /// Coefficients on the monomial basis, read from the dominant terms.
    /// Fails when the polynomial is not symmetric.
    pub fn to_mbasis(&self) -> Result<BTreeMap<SuperPartition, C>, SuperPolyError> {
        self.check_symmetric()?;
        Ok(self.mbasis_unchecked())
    }

    /// As [`Self::to_mbasis`], trusting that the input is symmetric.
    pub fn mbasis_unchecked(&self) -> BTreeMap<SuperPartition, C> {
        let mut out = BTreeMap::new();
        for (mono, c) in self.terms() {
            let m = mono.theta_degree();
            if mono.thetas != (1u32 << m) - 1 {
                continue;
            }
            let e: Vec<usize> = mono.exps.iter().map(|&x| x as usize).collect();
            if e[..m].windows(2).any(|w| w[0] <= w[1]) || e[m..].windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let lab = SuperPartition::new(e[..m].to_vec(), e[m..].to_vec()).expect("dominant exponent");
            out.insert(lab, c.clone());
        }
        out
    }

    /// `Σ c_Λ m_Λ`
    pub fn from_mbasis(coeffs: &BTreeMap<SuperPartition, C>, nvars: usize) -> Self {
        let mut out = SuperPoly::zero(nvars);
        for (lab, c) in coeffs {
            out.add_scaled(&monomial_symmetric(lab, nvars), c);
        }
        out
    }
}

/// Change of basis between monomials and power sums in a fixed degree
/// `(n|m)` and number of variables.
pub struct PowerSumTransition {
    pub labels: Vec<SuperPartition>,
    /// Row `Γ`: coefficients of `p_Γ` on `m_Ω`, columns in `labels` order.
    p_in_m: FieldMatrix<AlphaRational>,
}

impl PowerSumTransition {
    /// Fails with the rank when the power sums are dependent in this
    /// number of variables.
    pub fn new(n: usize, m: usize, nvars: usize) -> Result<Self, usize> {
        let labels = SuperPartition::enumerate(n, m, nvars);
        let k = labels.len();
        let mut mat = FieldMatrix::zeros(k, k);
        for (r, g) in labels.iter().enumerate() {
            let coeffs = power_sum_product::<AlphaRational>(g, nvars).mbasis_unchecked();
            for (c, o) in labels.iter().enumerate() {
                if let Some(v) = coeffs.get(o) {
                    mat.set(r, c, v.clone());
                }
            }
        }
        let rank = mat.rank();
        if rank < k {
            return Err(rank);
        }
        Ok(PowerSumTransition { labels, p_in_m: mat })
    }

    /// Power-sum coordinates of a vector given on the monomial basis.
    pub fn to_pbasis(
        &self,
        mvec: &BTreeMap<SuperPartition, AlphaRational>,
    ) -> BTreeMap<SuperPartition, AlphaRational> {
        // Σ_Γ a_Γ p_Γ = f  ⇔  Σ_Γ a_Γ M[Γ][Ω] = f_Ω  for all Ω
        let k = self.labels.len();
        let mut t = FieldMatrix::zeros(k, k);
        for r in 0..k {
            for c in 0..k {
                t.set(c, r, self.p_in_m.get(r, c).clone());
            }
        }
        let rhs: Vec<AlphaRational> = self
            .labels
            .iter()
            .map(|l| mvec.get(l).cloned().unwrap_or_else(|| AlphaRational::from_i64(0)))
            .collect();
        match t.solve(&rhs) {
            Solution::Unique(a) => {
                self.labels.iter().cloned().zip(a).filter(|(_, c)| !c.is_zero()).collect()
            }
            _ => unreachable!("transition matrix has full rank"),
        }
    }

    pub fn to_mbasis(
        &self,
        pvec: &BTreeMap<SuperPartition, AlphaRational>,
    ) -> BTreeMap<SuperPartition, AlphaRational> {
        let mut out: BTreeMap<SuperPartition, AlphaRational> = BTreeMap::new();
        for (r, g) in self.labels.iter().enumerate() {
            let Some(a) = pvec.get(g) else { continue };
            for (c, o) in self.labels.iter().enumerate() {
                let v = self.p_in_m.get(r, c);
                if !v.is_zero() {
                    let e = out.entry(o.clone()).or_insert_with(|| AlphaRational::from_i64(0));
                    *e = &*e + &(a * v);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `⟨⟨f | g⟩⟩` for two vectors given on the monomial basis.
    pub fn scalar_product(
        &self,
        f: &BTreeMap<SuperPartition, AlphaRational>,
        g: &BTreeMap<SuperPartition, AlphaRational>,
    ) -> AlphaRational {
        let (pf, pg) = (self.to_pbasis(f), self.to_pbasis(g));
        let mut acc = AlphaRational::from_i64(0);
        for (lab, a) in &pf {
            if let Some(b) = pg.get(lab) {
                acc = &acc + &(&(a * b) * &scalar_product_p(lab, lab));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{rat, BigRational};

    type P = SuperPoly<BigRational>;

    fn sp(s: &str) -> SuperPartition {
        SuperPartition::parse(s).unwrap()
    }

    #[test]
    fn monomial_example() {
        // θ1θ2 part of m_{(1,0;1,1)} is θ1θ2 (x1 - x2) x3 x4
        let m = monomial_symmetric::<BigRational>(&sp("1,0;1,1"), 4);
        let expect = P::from_term(4, &[0, 1], &[1, 0, 1, 1], rat(1, 1))
            .add(&P::from_term(4, &[0, 1], &[0, 1, 1, 1], rat(-1, 1)));
        assert_eq!(m.theta_component(0b11), expect);
        assert_eq!(m.num_terms(), 12);
        assert!(m.check_symmetric().is_ok());
    }

    #[test]
    fn monomial_term_counts() {
        // (2,0;1) in 3 variables: 3! placements, all distinct
        assert_eq!(monomial_symmetric::<BigRational>(&sp("2,0;1"), 3).num_terms(), 6);
        assert_eq!(monomial_symmetric::<BigRational>(&sp(";1,1"), 3).num_terms(), 3);
        assert!(monomial_symmetric::<BigRational>(&sp(";1,1,1"), 2).is_zero());
    }

    #[test]
    fn mbasis_round_trip() {
        let p = power_sum_product::<BigRational>(&sp("1;2,1"), 4);
        let mv = p.to_mbasis().unwrap();
        assert_eq!(P::from_mbasis(&mv, 4), p);
        assert!(P::x(2, 0).to_mbasis().is_err());
    }

    #[test]
    fn transition_round_trip() {
        let t = PowerSumTransition::new(3, 1, 4).unwrap();
        let f = power_sum_product::<AlphaRational>(&sp("1;2"), 4).mbasis_unchecked();
        let p = t.to_pbasis(&f);
        assert_eq!(p.len(), 1);
        assert_eq!(t.to_mbasis(&p), f);
    }
}
