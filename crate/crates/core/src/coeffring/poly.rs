use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlphaRing, BigRational, Ring};

/// Polynomial in `α` with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<BigInt>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c0 + c1 α`
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::from_ints(&[c0, c1])
    }

    pub fn alpha() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        AlphaPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Division of every coefficient by `c`, which must divide them exactly.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        AlphaPoly { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    fn shift_scale(&self, k: usize, c: &BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().map(|x| x * c));
        Self::new(coeffs)
    }

    /// A nonzero multiple of the remainder of `self` by `g`.
    fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.degree().expect("pseudo_rem by zero");
        let lg = g.lead();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lr = r.lead();
            r = &r.scale(&lg) - &g.shift_scale(dr - dg, &lr);
        }
        r
    }

    /// Exact quotient in `ℤ[α]`, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::default());
        }
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let ld = d.lead();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&ld);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qk * c;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd over `ℚ[α]`, normalized to a positive leading coefficient.
    pub fn gcd_primitive(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        if a.is_constant() || b.is_constant() {
            return Self::one();
        }
        let (mut f, mut g) = if a.degree() >= b.degree() {
            (a.primitive(), b.primitive())
        } else {
            (b.primitive(), a.primitive())
        };
        while !g.is_zero() {
            if g.is_constant() {
                return Self::one();
            }
            let r = f.pseudo_rem(&g).primitive();
            f = g;
            g = r;
        }
        f.primitive()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }
}

impl One for AlphaPoly {
    fn one() -> Self {
        Self::from_ints(&[1])
    }
}

impl Zero for AlphaPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<'a> Add<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, o: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        AlphaPoly::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), o.coeffs.get(k)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, o: &AlphaPoly) -> AlphaPoly {
        self + &(-o)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, o: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || o.is_zero() {
            return AlphaPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        AlphaPoly::new(out)
    }
}

impl Add for AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, o: AlphaPoly) -> AlphaPoly {
        &self + &o
    }
}

impl Sub for AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, o: AlphaPoly) -> AlphaPoly {
        &self - &o
    }
}

impl Mul for AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, o: AlphaPoly) -> AlphaPoly {
        &self * &o
    }
}

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        -&self
    }
}

impl Ring for AlphaPoly {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(n.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_constant() && self.lead().abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn weight(&self) -> usize {
        self.coeffs.iter().map(|c| c.bits() as usize + 1).sum()
    }
}

impl AlphaRing for AlphaPoly {
    fn alpha() -> Self {
        AlphaPoly::alpha()
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self))
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_products() {
        let a = AlphaPoly::linear(1, 2);
        let b = AlphaPoly::linear(3, 1);
        let c = AlphaPoly::linear(-1, 1);
        let g = AlphaPoly::gcd_primitive(&(&(&a * &b) * &AlphaPoly::from_ints(&[6])), &(&a * &c));
        assert_eq!(g, a);
    }

    #[test]
    fn exact_division() {
        let a = AlphaPoly::linear(1, 2);
        let b = AlphaPoly::from_ints(&[3, 0, 5]);
        assert_eq!((&a * &b).div_exact(&a), Some(b.clone()));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn evaluation() {
        let p = AlphaPoly::from_ints(&[1, -3, 2]);
        assert!(p.eval(&super::super::rat(1, 2)).is_zero());
        assert_eq!(p.eval(&super::super::rat(2, 1)), super::super::rat(3, 1));
    }
}
