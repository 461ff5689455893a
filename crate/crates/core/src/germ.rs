//! Truncated Laurent expansions at a rational base point.
//!
//! A germ at `b` is `Σ_{n ≥ v} a_n (s − b)^n`, known either exactly (all
//! omitted coefficients vanish) or up to an absolute precision `O((s − b)^p)`.
//! Arithmetic tracks precision the way truncated power series do, and reading
//! a coefficient at or beyond the precision is an error rather than a silent
//! zero.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ratfunc::RationalFunction;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentGerm<K> {
    base_point: Rational,
    /// Order of `coeffs[0]`; `coeffs[0]` is nonzero whenever `coeffs` is not empty.
    valuation: i64,
    coeffs: Vec<K>,
    /// `None` for an exact germ.
    precision: Option<i64>,
}

impl<K: Scalar> LaurentGerm<K> {
    pub fn zero(base_point: Rational) -> Self {
        Self {
            base_point,
            valuation: 0,
            coeffs: Vec::new(),
            precision: None,
        }
    }

    /// Exactly `Σ coeffs[i] (s − b)^{valuation + i}`.
    pub fn exact(base_point: Rational, valuation: i64, coeffs: Vec<K>) -> Self {
        Self {
            base_point,
            valuation,
            coeffs,
            precision: None,
        }
        .canonical()
    }

    /// `Σ coeffs[i] (s − b)^{valuation + i} + O((s − b)^{valuation + len})`.
    pub fn truncated(base_point: Rational, valuation: i64, coeffs: Vec<K>) -> Self {
        let precision = valuation + coeffs.len() as i64;
        Self {
            base_point,
            valuation,
            coeffs,
            precision: Some(precision),
        }
        .canonical()
    }

    /// Expansion of `f` at `base_point`.
    ///
    /// Polynomials expand exactly. Otherwise `depth` coefficients are kept,
    /// counted from order `min(0, ord f)`, so a holomorphic `f` is known
    /// modulo `(s − b)^depth`.
    pub fn expand(f: &RationalFunction<Rational>, base_point: &Rational, depth: usize) -> Self {
        let num = f.numerator().taylor_shift(base_point);
        let den = f.denominator().taylor_shift(base_point);
        let Some(num_val) = num.valuation() else {
            return Self::zero(base_point.clone());
        };
        let lift = |c: &Rational| K::from_rational(c);
        if den.is_constant() {
            let inv = den.coeff(0).recip();
            let coeffs = num.coeffs().iter().map(|c| lift(&(c * &inv))).collect();
            return Self::exact(base_point.clone(), 0, coeffs);
        }
        let den_val = den.valuation().expect("nonzero denominator");
        let order = num_val as i64 - den_val as i64;
        let precision = order.min(0) + depth as i64;
        let count = (precision - order).max(0) as usize;
        // power-series division of the unit parts
        let n: Vec<Rational> = num.coeffs()[num_val..].to_vec();
        let d: Vec<Rational> = den.coeffs()[den_val..].to_vec();
        let d0_inv = d[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = n.get(k).cloned().unwrap_or_default();
            for j in 1..=k.min(d.len() - 1) {
                acc -= &d[j] * &q[k - j];
            }
            q.push(acc * &d0_inv);
        }
        if count == 0 {
            return Self {
                base_point: base_point.clone(),
                valuation: precision,
                coeffs: Vec::new(),
                precision: Some(precision),
            };
        }
        Self::truncated(base_point.clone(), order, q.iter().map(lift).collect())
    }

    pub fn base_point(&self) -> &Rational {
        &self.base_point
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// Order of the leading term, if one is known to be nonzero.
    pub fn order(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.valuation)
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.precision.is_none()
    }

    /// Number of stored coefficients.
    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `(s − b)^n`.
    pub fn coefficient(&self, n: i64) -> Result<K> {
        if let Some(p) = self.precision {
            if n >= p {
                return Err(Error::PrecisionExhausted {
                    order: n,
                    precision: p,
                });
            }
        }
        if n < self.valuation {
            return Ok(K::zero());
        }
        Ok(self
            .coeffs
            .get((n - self.valuation) as usize)
            .cloned()
            .unwrap_or_else(K::zero))
    }

    /// Value at the base point: the order-0 coefficient, provided there is
    /// no pole.
    pub fn limit(&self) -> Result<K> {
        if let Some(v) = self.order() {
            if v < 0 {
                return Err(Error::Domain(format!(
                    "germ has a pole of order {} at {}",
                    -v, self.base_point
                )));
            }
        }
        self.coefficient(0)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.base_point.clone());
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            ..self.clone()
        }
    }

    /// Multiplies by `slope·s + offset`, exactly.
    pub fn mul_affine(&self, slope: &Rational, offset: &Rational) -> Self {
        let at_base = slope * &self.base_point + offset;
        let line = Self::exact(
            self.base_point.clone(),
            0,
            vec![K::from_rational(&at_base), K::from_rational(slope)],
        );
        self * &line
    }

    /// Multiplies by the expansion of `f` at the same base point.
    pub fn mul_rational_function(&self, f: &RationalFunction<Rational>, depth: usize) -> Self {
        self * &Self::expand(f, &self.base_point, depth)
    }

    fn canonical(mut self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(k) => {
                self.coeffs.drain(..k);
                self.valuation += k as i64;
                if self.precision.is_none() {
                    while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                        self.coeffs.pop();
                    }
                }
            }
            None => {
                self.coeffs.clear();
                self.valuation = self.precision.unwrap_or(0);
            }
        }
        self
    }

    fn check_base(&self, other: &Self) {
        assert_eq!(
            self.base_point, other.base_point,
            "germs at different base points"
        );
    }

    fn end(&self) -> i64 {
        self.valuation + self.coeffs.len() as i64
    }
}

fn min_precision(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<K: Scalar> Add for &LaurentGerm<K> {
    type Output = LaurentGerm<K>;
    fn add(self, rhs: Self) -> LaurentGerm<K> {
        self.check_base(rhs);
        let precision = min_precision(self.precision, rhs.precision);
        let low = self.valuation.min(rhs.valuation);
        let high = precision.unwrap_or_else(|| self.end().max(rhs.end()));
        let low = low.min(high);
        let coeffs = (low..high)
            .map(|n| {
                self.coefficient(n).expect("within precision")
                    + rhs.coefficient(n).expect("within precision")
            })
            .collect();
        LaurentGerm {
            base_point: self.base_point.clone(),
            valuation: low,
            coeffs,
            precision,
        }
        .canonical()
    }
}

impl<K: Scalar> Neg for &LaurentGerm<K> {
    type Output = LaurentGerm<K>;
    fn neg(self) -> LaurentGerm<K> {
        LaurentGerm {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            ..self.clone()
        }
    }
}

impl<K: Scalar> Sub for &LaurentGerm<K> {
    type Output = LaurentGerm<K>;
    fn sub(self, rhs: Self) -> LaurentGerm<K> {
        self + &(-rhs)
    }
}

impl<K: Scalar> Mul for &LaurentGerm<K> {
    type Output = LaurentGerm<K>;
    fn mul(self, rhs: Self) -> LaurentGerm<K> {
        self.check_base(rhs);
        if self.is_exact_zero() || rhs.is_exact_zero() {
            return LaurentGerm::zero(self.base_point.clone());
        }
        let valuation = self.valuation + rhs.valuation;
        let relative = |g: &LaurentGerm<K>| g.precision.map(|p| (p - g.valuation) as usize);
        let len = match (relative(self), relative(rhs)) {
            (None, None) => self.coeffs.len() + rhs.coeffs.len() - 1,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        let coeffs: Vec<K> = (0..len)
            .map(|k| {
                (0..=k).fold(K::zero(), |acc, i| match (self.coeffs.get(i), rhs.coeffs.get(k - i)) {
                    (Some(a), Some(b)) => acc + a.clone() * b.clone(),
                    _ => acc,
                })
            })
            .collect();
        let precision = self
            .precision
            .or(rhs.precision)
            .map(|_| valuation + len as i64);
        LaurentGerm {
            base_point: self.base_point.clone(),
            valuation,
            coeffs,
            precision,
        }
        .canonical()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl<K: Scalar> $tr for LaurentGerm<K> {
            type Output = LaurentGerm<K>;
            fn $method(self, rhs: Self) -> LaurentGerm<K> {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<K: Scalar> Neg for LaurentGerm<K> {
    type Output = LaurentGerm<K>;
    fn neg(self) -> LaurentGerm<K> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{half, int, ratio};

    type G = LaurentGerm<Rational>;
    type R = RationalFunction<Rational>;

    fn s() -> R {
        R::var()
    }

    #[test]
    fn expansion_of_a_simple_zero() {
        // (1/2 - s)/(1/2 + s) at 1/2 is -x/(1+x) = -x + x^2 - x^3 + ...
        let f = (R::constant(half()) - s()) / (R::constant(half()) + s());
        let g = G::expand(&f, &half(), 4);
        assert_eq!(g.order(), Some(1));
        assert_eq!(g.precision(), Some(4));
        assert_eq!(g.coefficient(1).unwrap(), int(-1));
        assert_eq!(g.coefficient(2).unwrap(), int(1));
        assert_eq!(g.coefficient(3).unwrap(), int(-1));
        assert!(matches!(
            g.coefficient(4),
            Err(Error::PrecisionExhausted { order: 4, precision: 4 })
        ));
    }

    #[test]
    fn expansion_with_a_pole() {
        // 1/(s - 1/2) + 3
        let f = R::constant(int(1)) / (s() - R::constant(half())) + R::constant(int(3));
        let g = G::expand(&f, &half(), 3);
        assert_eq!(g.order(), Some(-1));
        assert_eq!(g.coefficient(-1).unwrap(), int(1));
        assert_eq!(g.coefficient(0).unwrap(), int(3));
        assert_eq!(g.coefficient(1).unwrap(), int(0));
        assert!(g.coefficient(2).is_err());
        assert!(g.limit().is_err());
    }

    #[test]
    fn shallow_expansion_loses_the_zero() {
        let f = s() - R::constant(half());
        let f = f.clone() / (s() + R::constant(half()));
        let g = G::expand(&f, &half(), 1);
        assert_eq!(g.order(), None);
        assert_eq!(g.precision(), Some(1));
        assert!(!g.is_exact_zero());
    }

    #[test]
    fn product_precision_is_relative() {
        let pole = G::truncated(half(), -1, vec![int(2)]);
        let f = (R::constant(half()) - s()) / (R::constant(half()) + s());
        let deep = &pole * &G::expand(&f, &half(), 2);
        assert_eq!(deep.limit().unwrap(), int(-2));
        let shallow = &pole * &G::expand(&f, &half(), 1);
        assert!(matches!(shallow.limit(), Err(Error::PrecisionExhausted { .. })));
    }

    #[test]
    fn polynomials_expand_exactly() {
        let f = s() * s();
        let g = G::expand(&f, &ratio(1, 3), 1);
        assert!(g.is_exact());
        assert_eq!(g.coefficient(0).unwrap(), ratio(1, 9));
        assert_eq!(g.coefficient(1).unwrap(), ratio(2, 3));
        assert_eq!(g.coefficient(2).unwrap(), int(1));
        assert_eq!(g.coefficient(7).unwrap(), int(0));
    }

    #[test]
    fn cancellation_raises_valuation() {
        let a = G::truncated(half(), 0, vec![int(1), int(2), int(3)]);
        let b = G::exact(half(), 0, vec![int(1), int(2)]);
        let d = &a - &b;
        assert_eq!(d.order(), Some(2));
        assert_eq!(d.coefficient(2).unwrap(), int(3));
        let z = &a - &a;
        assert_eq!(z.order(), None);
        assert_eq!(z.precision(), Some(3));
    }

    #[test]
    fn mul_affine_matches_expansion() {
        let f = R::constant(int(1)) / (s() + R::constant(int(2)));
        let g = G::expand(&f, &half(), 5).mul_affine(&int(3), &int(-1));
        let h = G::expand(&(f * R::linear(int(3), int(-1))), &half(), 5);
        for n in 0..5 {
            assert_eq!(g.coefficient(n).unwrap(), h.coefficient(n).unwrap());
        }
    }
}
