//! Exact coefficient arithmetic: rationals, polynomials in `α`, rational
//! functions in `α`, polynomials in an auxiliary variable `u`, and exact
//! linear algebra over any of these fields.

mod matrix;
mod poly;
mod ratfunc;
mod text;
mod upoly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use matrix::{rank_integer, FieldMatrix, Solution};
pub use num_rational::BigRational;
pub use poly::AlphaPoly;
pub use ratfunc::AlphaRational;
pub use text::{parse_alpha_rational, ParseError};
pub use upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("pole at alpha = {at}: {value}")]
    Pole { value: String, at: String },
    #[error("indeterminate form 0/0 at alpha = {at}")]
    Indeterminate { at: String },
    #[error("division by zero")]
    DivisionByZero,
}

/// Commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + 'static {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_bigint(n: &BigInt) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self = self.sub_ref(other);
    }

    /// Multiplicative inverse when it exists in the ring.
    fn try_inv(&self) -> Option<Self>;

    /// Rough size measure, used to pick cheap pivots.
    fn weight(&self) -> usize;
}

pub trait Field: Ring {
    fn from_rational(q: &BigRational) -> Self;

    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.inv())
    }
}

/// Ring containing a distinguished element playing the role of `α`.
pub trait AlphaRing: Ring {
    fn alpha() -> Self;
}

impl Ring for BigRational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

/// Rational number `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::new(s, 0, "expected an integer or p/q");
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if Zero::is_zero(&q) {
                return Err(ParseError::new(s, 0, "zero denominator"));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Evaluates a rational function of `α` at a rational point.
pub fn alpha_eval(f: &AlphaRational, at: &BigRational) -> Result<BigRational, CoeffError> {
    eval_quotient(f.numer(), f.denom(), at).map_err(|e| match e {
        CoeffError::Pole { at, .. } => CoeffError::Pole { value: f.to_string(), at },
        other => other,
    })
}

/// Evaluates `num/den` without assuming the pair is reduced.
pub fn eval_quotient(
    num: &AlphaPoly,
    den: &AlphaPoly,
    at: &BigRational,
) -> Result<BigRational, CoeffError> {
    let d = den.eval(at);
    let n = num.eval(at);
    if Zero::is_zero(&d) {
        let at = format_rational(at);
        if Zero::is_zero(&n) {
            return Err(CoeffError::Indeterminate { at });
        }
        return Err(CoeffError::Pole { value: format!("({num})/({den})"), at });
    }
    Ok(n / d)
}

