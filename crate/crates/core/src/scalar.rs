//! Scalar fields the algebra is generic over.
//!
//! Everything in this crate is exact. The tower used in practice is
//! `Rational` (= ℚ) and `RationalFunction<Rational>` (= ℚ(r)), and both
//! implement [`Scalar`]. Floating point types do not.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// A commutative field with an embedding of ℚ.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&int(n))
    }
}

/// Scalars with a total order and a notion of integrality.
pub trait OrderedScalar: Scalar + PartialOrd {
    fn is_integer(&self) -> bool;
}

impl Scalar for BigRational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl OrderedScalar for BigRational {
    fn is_integer(&self) -> bool {
        BigRational::is_integer(self)
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

/// Rational as an `i64`, if it is an integer that fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

pub fn one() -> Rational {
    Rational::one()
}
