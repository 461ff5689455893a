use super::module::{Coefficient, PSElement};
use crate::error::{Error, Result};
use crate::scalar::{half, int, Rational};
use crate::{QPolynomial, QRationalFunction};

/// `c_k(s) = Π_{j=0}^{|k|−1} (½ + j − s)/(½ + j + s)`.
pub fn intertwining_coefficient(k: i64) -> QRationalFunction {
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for j in 0..k.unsigned_abs() {
        let shift = half() + int(j as i64);
        num = &num * &QPolynomial::linear(int(-1), shift.clone());
        den = &den * &QPolynomial::linear(int(1), shift);
    }
    QRationalFunction::new(num, den)
}

/// Order of zero (positive) or pole (negative) of `f` at `point`.
pub fn vanishing_order(f: &QRationalFunction, point: &Rational) -> Result<i64> {
    f.order_at(point)
        .ok_or_else(|| Error::Domain("vanishing order of the zero function".into()))
}

/// `M φ^{(2k)}_σ = a(s) c_k(σ) φ^{(2k)}_{−σ}`.
pub fn intertwine<C: Coefficient>(
    v: &PSElement<C>,
    normalization: &QRationalFunction,
    depth: usize,
) -> PSElement<C> {
    let param = v.param();
    v.try_map(param.negated(), |w, c| {
        let ck = intertwining_coefficient(w / 2).compose_affine(&param.slope, &param.offset);
        Ok(c.times_function(&(normalization.clone() * ck), depth))
    })
    .expect("weights are preserved")
}
