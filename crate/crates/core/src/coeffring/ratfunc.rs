use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlphaPoly, AlphaRing, BigRational, Field, ParseError, Ring};

/// Element of `ℚ(α)` in canonical form: integer numerator and denominator
/// with no common factor in `ℤ[α]`, denominator with positive leading
/// coefficient. Canonical form makes structural equality semantic equality.
#[derive(Clone, PartialEq, Eq)]
pub struct AlphaRational {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaRational {
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in AlphaRational");
        if num.is_zero() {
            return Self::zero_value();
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() && !num.is_constant() {
            let g = AlphaPoly::gcd_primitive(&num, &den);
            if !g.is_constant() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.lead().is_negative() {
            num = -num;
            den = -den;
        }
        AlphaRational { num, den }
    }

    fn zero_value() -> Self {
        AlphaRational { num: AlphaPoly::default(), den: <AlphaPoly as One>::one() }
    }

    pub fn from_poly(p: AlphaPoly) -> Self {
        AlphaRational { num: p, den: <AlphaPoly as One>::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::new(AlphaPoly::constant(q.numer().clone()), AlphaPoly::constant(q.denom().clone()))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_poly(AlphaPoly::from_ints(&[n]))
    }

    pub fn alpha() -> Self {
        Self::from_poly(AlphaPoly::alpha())
    }

    /// `c0 + c1 α`
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::from_poly(AlphaPoly::linear(c0, c1))
    }

    pub fn numer(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn denom(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(q)` when the value does not depend on `α`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::from_i64(1);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes `α ↦ 1/α`.
    pub fn invert_alpha(&self) -> Self {
        let d = self.num.coeffs().len().max(self.den.coeffs().len());
        let flip = |p: &AlphaPoly| {
            let mut c = p.coeffs().to_vec();
            c.resize(d, BigInt::zero());
            c.reverse();
            AlphaPoly::new(c)
        };
        Self::new(flip(&self.num), flip(&self.den))
    }
}

impl Hash for AlphaRational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl<'a> Add<&'a AlphaRational> for &'a AlphaRational {
    type Output = AlphaRational;
    fn add(self, o: &AlphaRational) -> AlphaRational {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return AlphaRational::new(&self.num + &o.num, self.den.clone());
        }
        let g = AlphaPoly::gcd_primitive(&self.den, &o.den);
        if g.is_constant() {
            return AlphaRational::new(
                &(&self.num * &o.den) + &(&o.num * &self.den),
                &self.den * &o.den,
            );
        }
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        AlphaRational::new(&(&self.num * &b) + &(&o.num * &a), &self.den * &b)
    }
}

impl<'a> Sub<&'a AlphaRational> for &'a AlphaRational {
    type Output = AlphaRational;
    fn sub(self, o: &AlphaRational) -> AlphaRational {
        self + &(-o)
    }
}

impl Neg for &AlphaRational {
    type Output = AlphaRational;
    fn neg(self) -> AlphaRational {
        AlphaRational { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Mul<&'a AlphaRational> for &'a AlphaRational {
    type Output = AlphaRational;
    fn mul(self, o: &AlphaRational) -> AlphaRational {
        if self.is_zero() || o.is_zero() {
            return AlphaRational::zero_value();
        }
        if self.den.is_constant() && o.den.is_constant() && self.num.is_constant() {
            return AlphaRational::new(o.num.scale(&self.num.coeff(0)), &self.den * &o.den);
        }
        AlphaRational::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'a> Div<&'a AlphaRational> for &'a AlphaRational {
    type Output = AlphaRational;
    fn div(self, o: &AlphaRational) -> AlphaRational {
        self * &o.recip()
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for AlphaRational {
            type Output = AlphaRational;
            fn $m(self, o: AlphaRational) -> AlphaRational {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for AlphaRational {
    type Output = AlphaRational;
    fn neg(self) -> AlphaRational {
        -&self
    }
}

impl Zero for AlphaRational {
    fn zero() -> Self {
        Self::zero_value()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for AlphaRational {
    fn one() -> Self {
        Self::from_i64(1)
    }
}

impl Ring for AlphaRational {
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
        Self::from_poly(AlphaPoly::constant(n.clone()))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn weight(&self) -> usize {
        self.num.weight() + self.den.weight()
    }
}

impl Field for AlphaRational {
    fn from_rational(q: &BigRational) -> Self {
        AlphaRational::from_rational(q)
    }
}

impl AlphaRing for AlphaRational {
    fn alpha() -> Self {
        AlphaRational::alpha()
    }
}

impl fmt::Display for AlphaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_rational_function(self))
    }
}

impl fmt::Debug for AlphaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for AlphaRational {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        super::parse_alpha_rational(s)
    }
}

impl From<AlphaPoly> for AlphaRational {
    fn from(p: AlphaPoly) -> Self {
        Self::from_poly(p)
    }
}
