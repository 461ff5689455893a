//! Exact coordinate vectors in the `e_i` basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A weight `Σ cᵢ eᵢ`, stored by its coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight<T> {
    coords: Vec<T>,
}

impl<T: Scalar> Weight<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![T::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| T::from_i64(c)).collect())
    }

    /// `c · e_i` (0-based index).
    pub fn unit(rank: usize, i: usize, c: i64) -> Self {
        let mut w = Self::zero(rank);
        w.coords[i] = T::from_i64(c);
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &T {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coords.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Standard Euclidean form `Σ aᵢbᵢ`.
    pub fn dot(&self, other: &Self) -> Result<T> {
        self.check_rank(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Drops the coordinates at the given (0-based) positions.
    pub fn without(&self, positions: &[usize]) -> Self {
        Self::new(
            self.coords
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, c)| c.clone())
                .collect(),
        )
    }

    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coords[..len].to_vec())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        )
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.rank(),
                right: other.rank(),
            })
        }
    }
}

// The operator impls panic on a rank mismatch; use the `checked_*` methods
// where ranks come from user input.
impl<T: Scalar> Add for &Weight<T> {
    type Output = Weight<T>;
    fn add(self, rhs: Self) -> Weight<T> {
        self.checked_add(rhs).expect("weight rank mismatch")
    }
}

impl<T: Scalar> Sub for &Weight<T> {
    type Output = Weight<T>;
    fn sub(self, rhs: Self) -> Weight<T> {
        self.checked_sub(rhs).expect("weight rank mismatch")
    }
}

impl<T: Scalar> Add for Weight<T> {
    type Output = Weight<T>;
    fn add(self, rhs: Self) -> Weight<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Weight<T> {
    type Output = Weight<T>;
    fn sub(self, rhs: Self) -> Weight<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for &Weight<T> {
    type Output = Weight<T>;
    fn neg(self) -> Weight<T> {
        Weight::new(self.coords.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Neg for Weight<T> {
    type Output = Weight<T>;
    fn neg(self) -> Weight<T> {
        -&self
    }
}

impl<T: fmt::Display> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
