//! Univariate rational functions in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::scalar::{Rational, Scalar};

/// `numerator / denominator` with a monic denominator coprime to the
/// numerator. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction<T> {
    numerator: Polynomial<T>,
    denominator: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    /// Reduces `num/den`. Panics if `den` is zero.
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::from_poly(Polynomial::zero());
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().unwrap().clone();
        let inv = T::one() / lead;
        Self {
            numerator: num.scale(&inv),
            denominator: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        Self {
            numerator: p,
            denominator: Polynomial::one(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The variable.
    pub fn var() -> Self {
        Self::from_poly(Polynomial::x())
    }

    /// `slope·x + offset`.
    pub fn linear(slope: T, offset: T) -> Self {
        Self::from_poly(Polynomial::linear(slope, offset))
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial<T> {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_constant()
    }

    pub fn as_constant(&self) -> Option<T> {
        (self.numerator.is_constant() && self.denominator.is_constant()).then(|| self.numerator.coeff(0))
    }

    pub fn checked_inv(&self) -> Option<Self> {
        if self.numerator.is_zero() {
            None
        } else {
            Some(Self::new(self.denominator.clone(), self.numerator.clone()))
        }
    }

    /// Value at a point, `None` at a pole.
    pub fn eval(&self, at: &T) -> Option<T> {
        let d = self.denominator.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.numerator.eval(at) / d)
        }
    }

    /// Order of vanishing at `point`: positive for a zero, negative for a
    /// pole. `None` for the zero function.
    pub fn order_at(&self, point: &T) -> Option<i64> {
        let num = self.numerator.taylor_shift(point).valuation()? as i64;
        let den = self.denominator.taylor_shift(point).valuation()? as i64;
        Some(num - den)
    }

    /// `f(slope·x + offset)`.
    pub fn compose_affine(&self, slope: &T, offset: &T) -> Self {
        let inner = Polynomial::linear(slope.clone(), offset.clone());
        let sub = |p: &Polynomial<T>| {
            p.coeffs()
                .iter()
                .rev()
                .fold(Polynomial::zero(), |acc, c| &(&acc * &inner) + &Polynomial::constant(c.clone()))
        };
        Self::new(sub(&self.numerator), sub(&self.denominator))
    }

    pub fn render(&self, var: &str) -> String {
        if self.denominator.is_constant() {
            return self.numerator.render(var);
        }
        let wrap = |p: &Polynomial<T>| {
            let text = p.render(var);
            if text.contains(' ') || text.contains('*') || text.starts_with('-') {
                format!("({text})")
            } else {
                text
            }
        };
        format!("{}/{}", wrap(&self.numerator), wrap(&self.denominator))
    }
}

impl<T: Scalar> Zero for RationalFunction<T> {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl<T: Scalar> One for RationalFunction<T> {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl<T: Scalar> Add for RationalFunction<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.denominator == rhs.denominator {
            return Self::new(&self.numerator + &rhs.numerator, self.denominator);
        }
        Self::new(
            &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
    }
}

impl<T: Scalar> Sub for RationalFunction<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for RationalFunction<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
    }
}

impl<T: Scalar> Div for RationalFunction<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.checked_inv().expect("division by the zero rational function")
    }
}

impl<T: Scalar> Neg for RationalFunction<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            numerator: -&self.numerator,
            denominator: self.denominator,
        }
    }
}

impl<T: Scalar> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl<T: Scalar> Scalar for RationalFunction<T> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(T::from_rational(q))
    }
}
