use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::germ::LaurentGerm;
use crate::scalar::{half, int, Rational, Scalar};
use crate::QRationalFunction;

/// What a flat section may be multiplied by: exact rational functions of
/// `s`, or Laurent germs in `s`.
pub trait Coefficient:
    Clone + fmt::Debug + PartialEq + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
    fn is_exact_zero(&self) -> bool;
    fn scale_by(&self, c: &Rational) -> Self;
    /// Multiplication by `slope·s + offset`.
    fn times_affine(&self, slope: &Rational, offset: &Rational) -> Self;
    /// Multiplication by `f(s)`; germs expand `f` keeping `depth` terms.
    fn times_function(&self, f: &QRationalFunction, depth: usize) -> Self;
}

impl Coefficient for QRationalFunction {
    fn is_exact_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn scale_by(&self, c: &Rational) -> Self {
        self.clone() * Self::constant(c.clone())
    }

    fn times_affine(&self, slope: &Rational, offset: &Rational) -> Self {
        self.clone() * Self::linear(slope.clone(), offset.clone())
    }

    fn times_function(&self, f: &QRationalFunction, _depth: usize) -> Self {
        self.clone() * f.clone()
    }
}

impl<K: Scalar> Coefficient for LaurentGerm<K> {
    fn is_exact_zero(&self) -> bool {
        LaurentGerm::is_exact_zero(self)
    }

    fn scale_by(&self, c: &Rational) -> Self {
        self.scale(&K::from_rational(c))
    }

    fn times_affine(&self, slope: &Rational, offset: &Rational) -> Self {
        self.mul_affine(slope, offset)
    }

    fn times_function(&self, f: &QRationalFunction, depth: usize) -> Self {
        self.mul_rational_function(f, depth)
    }
}

/// The induction parameter `σ = slope·s + offset` of `I(σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectralParam {
    pub slope: Rational,
    pub offset: Rational,
}

impl SpectralParam {
    pub fn s() -> Self {
        Self::new(int(1), int(0))
    }

    pub fn minus_s() -> Self {
        Self::new(int(-1), int(0))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(int(0), c)
    }

    pub fn new(slope: Rational, offset: Rational) -> Self {
        Self { slope, offset }
    }

    pub fn negated(&self) -> Self {
        Self::new(-&self.slope, -&self.offset)
    }

    pub fn as_function(&self) -> QRationalFunction {
        QRationalFunction::linear(self.slope.clone(), self.offset.clone())
    }

    /// `σ` at `s = point`.
    pub fn specialize(&self, point: &Rational) -> Self {
        Self::constant(&self.slope * point + &self.offset)
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_function().render("s"))
    }
}

/// `Σ c_k φ^{(2k)}_σ`, keyed by the even weight `2k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PSElement<C> {
    param: SpectralParam,
    entries: BTreeMap<i64, C>,
}

impl<C: Coefficient> PSElement<C> {
    pub fn zero(param: SpectralParam) -> Self {
        Self {
            param,
            entries: BTreeMap::new(),
        }
    }

    /// `coeff · φ^{(weight)}_σ`.
    pub fn basis(param: SpectralParam, weight: i64, coeff: C) -> Result<Self> {
        let mut v = Self::zero(param);
        v.add_term(weight, coeff)?;
        Ok(v)
    }

    pub fn add_term(&mut self, weight: i64, coeff: C) -> Result<()> {
        if weight % 2 != 0 {
            return Err(Error::Domain(format!("weight {weight} is odd")));
        }
        let sum = match self.entries.remove(&weight) {
            Some(old) => old + coeff,
            None => coeff,
        };
        if !sum.is_exact_zero() {
            self.entries.insert(weight, sum);
        }
        Ok(())
    }

    pub fn param(&self) -> &SpectralParam {
        &self.param
    }

    pub fn coefficient(&self, weight: i64) -> Option<&C> {
        self.entries.get(&weight)
    }

    pub fn weights(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &C)> {
        self.entries.iter().map(|(w, c)| (*w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The single weight carrying a coefficient, if there is exactly one.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut ws = self.weights();
        match (ws.next(), ws.next()) {
            (Some(w), None) => Some(w),
            _ => None,
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.param, other.param, "sections of different principal series");
        let mut out = self.clone();
        for (w, c) in &other.entries {
            out.add_term(*w, c.clone()).expect("even weights");
        }
        out
    }

    pub fn negate(&self) -> Self {
        self.map_terms(|w, c| (w, -c.clone()))
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    pub fn scale_by(&self, c: &Rational) -> Self {
        self.map_terms(|w, a| (w, a.scale_by(c)))
    }

    /// Replaces every coefficient by `f(coefficient)` and relabels the
    /// parameter.
    pub fn try_map<D: Coefficient>(
        &self,
        param: SpectralParam,
        mut f: impl FnMut(i64, &C) -> Result<D>,
    ) -> Result<PSElement<D>> {
        let mut out = PSElement::zero(param);
        for (w, c) in &self.entries {
            out.add_term(*w, f(*w, c)?)?;
        }
        Ok(out)
    }

    fn map_terms(&self, mut f: impl FnMut(i64, &C) -> (i64, C)) -> Self {
        let mut out = Self::zero(self.param.clone());
        for (w, c) in &self.entries {
            let (w2, c2) = f(*w, c);
            out.add_term(w2, c2).expect("even weights");
        }
        out
    }

    /// `H φ^{(2k)} = 2k φ^{(2k)}`.
    pub fn act_h(&self) -> Self {
        self.map_terms(|w, c| (w, c.scale_by(&int(w))))
    }

    /// `X₊ φ^{(2k)}_σ = (σ + ½ + k) φ^{(2k+2)}_σ`.
    pub fn act_raise(&self) -> Self {
        self.shift(1)
    }

    /// `X₋ φ^{(2k)}_σ = (σ + ½ − k) φ^{(2k−2)}_σ`.
    pub fn act_lower(&self) -> Self {
        self.shift(-1)
    }

    fn shift(&self, dir: i64) -> Self {
        let slope = self.param.slope.clone();
        let base = &self.param.offset + half();
        self.map_terms(|w, c| {
            let k = w / 2;
            let offset = &base + int(dir * k);
            (w + 2 * dir, c.times_affine(&slope, &offset))
        })
    }
}

/// Eigenvalue of `Ω = ½H² + X₊X₋ + X₋X₊` on a nonzero homogeneous element.
pub fn casimir(v: &PSElement<QRationalFunction>) -> Result<QRationalFunction> {
    let weight = v
        .homogeneous_weight()
        .ok_or_else(|| Error::Domain("Casimir needs a nonzero element of a single weight".into()))?;
    let omega = v
        .act_h()
        .act_h()
        .scale_by(&half())
        .plus(&v.act_lower().act_raise())
        .plus(&v.act_raise().act_lower());
    let input = v.coefficient(weight).expect("homogeneous weight present");
    match omega.coefficient(weight) {
        None if omega.is_zero() => Ok(QRationalFunction::constant(int(0))),
        Some(out) if omega.homogeneous_weight() == Some(weight) => Ok(out.clone() / input.clone()),
        _ => Err(Error::InvariantViolation("Casimir changed the weight".into())),
    }
}
