//! Polynomials in commuting variables `x_1..x_N` and anticommuting
//! variables `θ_1..θ_N` with exact coefficients.
//!
//! Terms are stored with their `θ`'s in increasing order, so the stored
//! coefficient of `θ_{i1}⋯θ_{im} x^e` is the value obtained by applying
//! `∂_{θ_{im}}⋯∂_{θ_{i1}}` and setting the remaining `θ`'s to zero.

mod format;
mod symmetric;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeffring::Ring;

pub use format::{JsonTerm, TermFormatError};
pub use symmetric::{
    monomial_symmetric, omega_alpha_pbasis, power_sum, power_sum_product, scalar_product_p,
    PowerSumTransition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperPolyError {
    #[error("result is not a polynomial: remainder {remainder} when dividing by x{i} - x{j}")]
    NonPolynomialResult { i: usize, j: usize, remainder: String },
    #[error("polynomial is not symmetric under exchange of variables {0} and {1}")]
    NotSymmetric(usize, usize),
    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
}

/// `θ_S x^e` with `S` a bit set (bit `i` for `θ_{i+1}`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub thetas: u32,
    pub exps: Vec<u16>,
}

impl Monomial {
    pub fn new(thetas: u32, exps: Vec<u16>) -> Self {
        Monomial { thetas, exps }
    }

    pub fn theta_list(&self) -> Vec<usize> {
        (0..32).filter(|i| self.thetas >> i & 1 == 1).collect()
    }

    pub fn theta_degree(&self) -> usize {
        self.thetas.count_ones() as usize
    }

    pub fn x_degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }
}

/// Sign of `θ_S θ_T` rewritten in increasing order, `0` if they overlap.
pub fn theta_product_sign(s: u32, t: u32) -> i32 {
    if s & t != 0 {
        return 0;
    }
    let mut swaps = 0;
    let mut rest = t;
    while rest != 0 {
        let b = rest.trailing_zeros();
        swaps += (s >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign and bit set of the product `θ_{i1} θ_{i2} ⋯` in the given order.
pub fn theta_word_sign(word: &[usize]) -> (i32, u32) {
    let mut mask = 0u32;
    let mut sign = 1;
    for &i in word {
        let b = 1u32 << i;
        let s = theta_product_sign(mask, b);
        if s == 0 {
            return (0, 0);
        }
        sign *= s;
        mask |= b;
    }
    (sign, mask)
}

#[derive(Clone, PartialEq)]
pub struct SuperPoly<C: Ring> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

fn signed<C: Ring>(c: C, sign: i32) -> C {
    if sign < 0 {
        c.neg_ref()
    } else {
        c
    }
}

impl<C: Ring> SuperPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= 32, "at most 32 variables");
        SuperPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::new(0, vec![0; nvars]), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// `x_{i+1}`
    pub fn x(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_monomial(Monomial::new(0, e), C::one(), nvars)
    }

    /// `θ_{i+1}`
    pub fn theta(nvars: usize, i: usize) -> Self {
        Self::from_monomial(Monomial::new(1 << i, vec![0; nvars]), C::one(), nvars)
    }

    pub fn from_monomial(m: Monomial, c: C, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    /// `c θ_{w1} θ_{w2} ⋯ x^exps` with the `θ` word in any order.
    pub fn from_term(nvars: usize, theta_word: &[usize], exps: &[u16], c: C) -> Self {
        assert_eq!(exps.len(), nvars);
        let (sign, mask) = theta_word_sign(theta_word);
        let mut p = Self::zero(nvars);
        if sign != 0 {
            p.add_term(Monomial::new(mask, exps.to_vec()), signed(c, sign));
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.exps.len(), self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.neg_ref());
        }
        r
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, o: &Self, s: &C) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.mul_ref(s));
        }
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_coeffs(|c| c.mul_ref(s))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let sign = theta_product_sign(ma.thetas, mb.thetas);
                if sign == 0 {
                    continue;
                }
                let exps = ma.exps.iter().zip(&mb.exps).map(|(a, b)| a + b).collect();
                r.add_term(Monomial::new(ma.thetas | mb.thetas, exps), signed(ca.mul_ref(cb), sign));
            }
        }
        r
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> SuperPoly<D> {
        let mut r = SuperPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    pub fn try_map_coeffs<D: Ring, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<SuperPoly<D>, E> {
        let mut r = SuperPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c)?);
        }
        Ok(r)
    }

    /// Maps every monomial to a signed monomial (or drops it).
    fn map_monomials(&self, f: impl Fn(&Monomial) -> Option<(Monomial, C)>) -> Self {
        let mut r = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some((m2, k)) = f(m) {
                r.add_term(m2, c.mul_ref(&k));
            }
        }
        r
    }

    /// `∂/∂x_{i+1}`
    pub fn deriv_x(&self, i: usize) -> Self {
        self.map_monomials(|m| {
            let e = m.exps[i];
            if e == 0 {
                return None;
            }
            let mut exps = m.exps.clone();
            exps[i] -= 1;
            Some((Monomial::new(m.thetas, exps), C::from_int(e as i64)))
        })
    }

    /// `∂/∂θ_{i+1}`, acting from the left.
    pub fn deriv_theta(&self, i: usize) -> Self {
        self.map_monomials(|m| {
            if m.thetas >> i & 1 == 0 {
                return None;
            }
            let before = (m.thetas & ((1u32 << i) - 1)).count_ones();
            let k = if before.is_multiple_of(2) { C::one() } else { C::one().neg_ref() };
            Some((Monomial::new(m.thetas & !(1 << i), m.exps.clone()), k))
        })
    }

    /// Multiplication by `x_{i+1}^p`.
    pub fn mul_x(&self, i: usize, p: u16) -> Self {
        self.map_monomials(|m| {
            let mut exps = m.exps.clone();
            exps[i] += p;
            Some((Monomial::new(m.thetas, exps), C::one()))
        })
    }

    /// Left multiplication by `θ_{i+1}`.
    pub fn mul_theta(&self, i: usize) -> Self {
        self.map_monomials(|m| {
            if m.thetas >> i & 1 == 1 {
                return None;
            }
            let before = (m.thetas & ((1u32 << i) - 1)).count_ones();
            let k = if before.is_multiple_of(2) { C::one() } else { C::one().neg_ref() };
            Some((Monomial::new(m.thetas | (1 << i), m.exps.clone()), k))
        })
    }

    /// `𝓚_σ`: `x_i ↦ x_{σ(i)}`, `θ_i ↦ θ_{σ(i)}` (0-based `σ`).
    pub fn permute(&self, sigma: &[usize]) -> Self {
        assert_eq!(sigma.len(), self.nvars);
        self.map_monomials(|m| {
            let mut exps = vec![0; self.nvars];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[sigma[i]] = e;
            }
            let word: Vec<usize> = m.theta_list().iter().map(|&i| sigma[i]).collect();
            let (sign, mask) = theta_word_sign(&word);
            Some((Monomial::new(mask, exps), C::from_int(sign as i64)))
        })
    }

    /// `K_ij`: exchanges `x_i` and `x_j` only.
    pub fn swap_x(&self, i: usize, j: usize) -> Self {
        self.map_monomials(|m| {
            let mut exps = m.exps.clone();
            exps.swap(i, j);
            Some((Monomial::new(m.thetas, exps), C::one()))
        })
    }

    /// `κ_ij`: exchanges `θ_i` and `θ_j` only.
    pub fn swap_theta(&self, i: usize, j: usize) -> Self {
        let mut sigma: Vec<usize> = (0..self.nvars).collect();
        sigma.swap(i, j);
        self.map_monomials(|m| {
            let word: Vec<usize> = m.theta_list().iter().map(|&k| sigma[k]).collect();
            let (sign, mask) = theta_word_sign(&word);
            Some((Monomial::new(mask, m.exps.clone()), C::from_int(sign as i64)))
        })
    }

    /// `𝓚_ij = K_ij κ_ij`
    pub fn swap_both(&self, i: usize, j: usize) -> Self {
        let mut sigma: Vec<usize> = (0..self.nvars).collect();
        sigma.swap(i, j);
        self.permute(&sigma)
    }

    /// Exact division by `x_i - x_j`.
    pub fn div_xdiff(&self, i: usize, j: usize) -> Result<Self, SuperPolyError> {
        assert_ne!(i, j);
        let mut groups: BTreeMap<(Monomial, u16), BTreeMap<u16, C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.exps[i] + m.exps[j];
            let mut base = m.exps.clone();
            base[i] = 0;
            base[j] = 0;
            groups
                .entry((Monomial::new(m.thetas, base), d))
                .or_default()
                .insert(m.exps[i], c.clone());
        }
        let mut out = Self::zero(self.nvars);
        for ((base, d), cs) in groups {
            if d == 0 {
                let c = cs.values().next().unwrap();
                return Err(SuperPolyError::NonPolynomialResult {
                    i: i + 1,
                    j: j + 1,
                    remainder: format!("{c:?}"),
                });
            }
            // synthetic division of Σ c_p t^p by (t - 1), t = x_i / x_j
            let mut carry = C::zero();
            for p in (1..=d).rev() {
                let cp = cs.get(&p).cloned().unwrap_or_else(C::zero);
                carry = carry.add_ref(&cp);
                if !carry.is_zero() {
                    let mut exps = base.exps.clone();
                    exps[i] = p - 1;
                    exps[j] = d - p;
                    out.add_term(Monomial::new(base.thetas, exps), carry.clone());
                }
            }
            let rem = carry.add_ref(&cs.get(&0).cloned().unwrap_or_else(C::zero));
            if !rem.is_zero() {
                return Err(SuperPolyError::NonPolynomialResult {
                    i: i + 1,
                    j: j + 1,
                    remainder: format!("{rem:?}"),
                });
            }
        }
        Ok(out)
    }

    /// `(f - K_ij f) / (x_i - x_j)`, always a polynomial.
    pub fn divided_difference(&self, i: usize, j: usize) -> Self {
        self.sub(&self.swap_x(i, j)).div_xdiff(i, j).expect("divided difference is polynomial")
    }

    /// Terms whose `θ` set is exactly `mask`.
    pub fn theta_component(&self, mask: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.thetas == mask).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Coefficient of `θ_{i1}⋯θ_{im}` (increasing indices), a `θ`-free
    /// polynomial.
    pub fn theta_coefficient(&self, indices: &[usize]) -> Self {
        let (sign, mask) = theta_word_sign(indices);
        assert!(sign != 0, "repeated theta index");
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.thetas == mask)
                .map(|(m, c)| (Monomial::new(0, m.exps.clone()), signed(c.clone(), sign))),
        )
    }

    /// The polynomial with `x_{i+1} = 0`, `θ_{i+1} = 0` and the variable
    /// removed, shifting later indices down.
    pub fn drop_variable(&self, i: usize) -> Self {
        let mut r = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            if m.exps[i] != 0 || m.thetas >> i & 1 == 1 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps.remove(i);
            let low = m.thetas & ((1u32 << i) - 1);
            let high = (m.thetas >> (i + 1)) << i;
            r.add_term(Monomial::new(low | high, exps), c.clone());
        }
        r
    }

    /// `([f]_{x_N=θ_N=0}, [∂_{θ_N} f]_{x_N=θ_N=0})` in `N - 1` variables.
    pub fn restrict_last(&self) -> (Self, Self) {
        let last = self.nvars - 1;
        (self.drop_variable(last), self.deriv_theta(last).drop_variable(last))
    }

    /// Coefficient of `x_{i+1}^k`, still in `N` variables.
    pub fn x_coefficient(&self, i: usize, k: u16) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.exps[i] == k).map(|(m, c)| {
                let mut exps = m.exps.clone();
                exps[i] = 0;
                (Monomial::new(m.thetas, exps), c.clone())
            }),
        )
    }

    /// Substitutes `x_i ↦ x_{map[i]}`; `θ`'s are unchanged.
    pub fn identify_x(&self, map: &[usize]) -> Self {
        self.map_monomials(|m| {
            let mut exps = vec![0; self.nvars];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[map[i]] += e;
            }
            Some((Monomial::new(m.thetas, exps), C::one()))
        })
    }

    /// Substitutes `x_i ↦ images[i]` (`θ`-free polynomials); `θ`'s are
    /// unchanged and must exist in the target ring.
    pub fn substitute_x(&self, images: &[SuperPoly<C>]) -> Result<SuperPoly<C>, SuperPolyError> {
        if images.len() != self.nvars {
            return Err(SuperPolyError::DimensionMismatch(images.len(), self.nvars));
        }
        let target = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<SuperPoly<C>>> = images.iter().map(|p| vec![SuperPoly::one(p.nvars)]).collect();
        let mut out = SuperPoly::zero(target);
        for (m, c) in &self.terms {
            if let Some(&top) = m.theta_list().last() {
                if top >= target {
                    return Err(SuperPolyError::IndexOutOfRange { index: top + 1, nvars: target });
                }
            }
            let mut t = SuperPoly::from_monomial(Monomial::new(m.thetas, vec![0; target]), c.clone(), target);
            for (i, &e) in m.exps.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            out.add_assign(&t);
        }
        Ok(out)
    }

    /// Checks invariance under every `𝓚_{i,i+1}`.
    pub fn check_symmetric(&self) -> Result<(), SuperPolyError> {
        for i in 0..self.nvars.saturating_sub(1) {
            if self.swap_both(i, i + 1) != *self {
                return Err(SuperPolyError::NotSymmetric(i + 1, i + 2));
            }
        }
        Ok(())
    }

    /// Degree `(n|m)` when homogeneous.
    pub fn homogeneous_degree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|m| (m.x_degree(), m.theta_degree()));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn total_x_degree(&self) -> usize {
        self.terms.keys().map(|m| m.x_degree()).max().unwrap_or(0)
    }
}

impl<C: Ring> fmt::Debug for SuperPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperPoly[{}](", self.nvars)?;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}*{:?}{:?}", m.theta_list(), m.exps)?;
        }
        write!(f, ")")
    }
}

/// `∏_{i<j} (x_i - x_j)` over the given variables.
pub fn vandermonde<C: Ring>(nvars: usize, vars: &[usize]) -> SuperPoly<C> {
    let mut acc = SuperPoly::one(nvars);
    for (a, &i) in vars.iter().enumerate() {
        for &j in &vars[a + 1..] {
            acc = acc.mul(&SuperPoly::x(nvars, i).sub(&SuperPoly::x(nvars, j)));
        }
    }
    acc
}

/// `𝓟_{Λ,m}`: the coefficient of `θ_1⋯θ_m`, divided by the Vandermonde
/// determinant in `x_1..x_m`.
pub fn prescribed_part<C: Ring>(p: &SuperPoly<C>, m: usize) -> Result<SuperPoly<C>, SuperPolyError> {
    let idx: Vec<usize> = (0..m).collect();
    let mut g = p.theta_coefficient(&idx);
    for i in 0..m {
        for j in i + 1..m {
            g = g.div_xdiff(i, j)?;
        }
    }
    Ok(g)
}
