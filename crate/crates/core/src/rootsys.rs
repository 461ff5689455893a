//! Type `Cₙ` root systems with sign-chamber positive systems.
//!
//! Chambers are taken modulo the compact Weyl group, which leaves one
//! positive system `Δ^ε = εΔ^{+,std}` per sign vector `ε ∈ {±1}ⁿ`. The rank-1
//! system `{±2e₁}` doubles as the `SL₂` case.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{OrderedScalar, Scalar};
use crate::weight::Weight;

/// A sign vector `ε`, acting on weights coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignChamber {
    signs: Vec<i8>,
}

impl SignChamber {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::InvalidRank(0));
        }
        if let Some(&bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::Domain(format!("chamber sign {bad} is not ±1")));
        }
        Ok(Self { signs })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            signs: vec![1; rank],
        }
    }

    /// All `2ⁿ` chambers, ordered as bit vectors with `+ = 0`, `− = 1` and
    /// the first coordinate most significant.
    pub fn all(rank: usize) -> impl Iterator<Item = SignChamber> {
        (0u64..1 << rank).map(move |bits| SignChamber {
            signs: (0..rank)
                .map(|i| if bits >> (rank - 1 - i) & 1 == 1 { -1 } else { 1 })
                .collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn negated(&self) -> Self {
        Self {
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    pub fn apply<T: Scalar>(&self, w: &Weight<T>) -> Weight<T> {
        Weight::new(
            w.coords()
                .iter()
                .zip(&self.signs)
                .map(|(c, &s)| if s < 0 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }
}

impl fmt::Display for SignChamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SignChamber {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let signs = text
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::Domain(format!(
                    "chamber character {other:?} at position {i} is not '+' or '-'"
                ))),
            })
            .collect::<Result<Vec<i8>>>()?;
        SignChamber::new(signs)
    }
}

/// The `Cₙ` root system `{±(eᵢ+eⱼ), ±(eᵢ−eⱼ) : i<j} ∪ {±2eᵢ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem<T> {
    rank: usize,
    roots: Vec<Weight<T>>,
}

pub fn build_root_system<T: OrderedScalar>(rank: usize) -> Result<RootSystem<T>> {
    RootSystem::new(rank)
}

impl<T: OrderedScalar> RootSystem<T> {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        let positive = standard_positive_roots::<T>(rank);
        let roots = positive
            .iter()
            .cloned()
            .chain(positive.iter().map(|r| -r))
            .collect();
        Ok(Self { rank, roots })
    }

    pub fn type_label(&self) -> String {
        format!("C{}", self.rank)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Weight<T>] {
        &self.roots
    }

    pub fn is_root(&self, w: &Weight<T>) -> bool {
        w.rank() == self.rank && self.roots.contains(w)
    }

    pub fn inner_product(&self, a: &Weight<T>, b: &Weight<T>) -> Result<T> {
        a.dot(b)
    }

    /// `2⟨w,β⟩/⟨β,β⟩` for a root `β`.
    pub fn coroot_pairing(&self, w: &Weight<T>, beta: &Weight<T>) -> Result<T> {
        self.require_root(beta)?;
        let num = w.dot(beta)?;
        let den = beta.dot(beta)?;
        Ok(T::from_i64(2) * num / den)
    }

    /// `Δ^ε`, in the order of the standard positive roots it is transported from.
    pub fn chamber_positive_roots(&self, eps: &SignChamber) -> Vec<Weight<T>> {
        standard_positive_roots::<T>(self.rank)
            .iter()
            .map(|r| eps.apply(r))
            .collect()
    }

    /// `ε(e₁−e₂), …, ε(e_{n−1}−eₙ), ε(2eₙ)`.
    pub fn simple_roots(&self, eps: &SignChamber) -> Vec<Weight<T>> {
        standard_simple_roots::<T>(self.rank)
            .iter()
            .map(|r| eps.apply(r))
            .collect()
    }

    /// Half the sum of `Δ^ε`; equals `ε·(n, n−1, …, 1)`.
    pub fn rho(&self, eps: &SignChamber) -> Weight<T> {
        half_sum(self.rank, &self.chamber_positive_roots(eps))
    }

    /// `w − ⟨w,β∨⟩β`.
    pub fn reflect(&self, w: &Weight<T>, beta: &Weight<T>) -> Result<Weight<T>> {
        let k = self.coroot_pairing(w, beta)?;
        w.checked_sub(&beta.scale(&k))
    }

    /// Integral with strictly positive pairing against every simple root
    /// of `Δ^ε`.
    pub fn is_dominant_regular_integral(&self, eps: &SignChamber, w: &Weight<T>) -> bool {
        w.rank() == self.rank
            && w.coords().iter().all(|c| c.is_integer())
            && self
                .simple_roots(eps)
                .iter()
                .all(|beta| self.coroot_pairing(w, beta).is_ok_and(|p| p > T::zero()))
    }

    /// Integral with nonnegative pairing against every simple root of `Δ^ε`.
    pub fn is_dominant_integral(&self, eps: &SignChamber, w: &Weight<T>) -> bool {
        w.rank() == self.rank
            && w.coords().iter().all(|c| c.is_integer())
            && self
                .simple_roots(eps)
                .iter()
                .all(|beta| self.coroot_pairing(w, beta).is_ok_and(|p| p >= T::zero()))
    }

    fn require_root(&self, beta: &Weight<T>) -> Result<()> {
        if self.is_root(beta) {
            Ok(())
        } else {
            Err(Error::InvalidRoot(format_root(beta)))
        }
    }
}

pub(crate) fn half_sum<T: Scalar>(rank: usize, roots: &[Weight<T>]) -> Weight<T> {
    let sum = roots
        .iter()
        .fold(Weight::zero(rank), |acc, r| &acc + r);
    sum.scale(&(T::one() / T::from_i64(2)))
}

/// `e_i − e_j`, `e_i + e_j` for `i < j`, then `2e_i`, grouped by `i`.
pub fn standard_positive_roots<T: Scalar>(rank: usize) -> Vec<Weight<T>> {
    let mut out = Vec::with_capacity(rank * rank);
    for i in 0..rank {
        for j in i + 1..rank {
            out.push(&Weight::unit(rank, i, 1) - &Weight::unit(rank, j, 1));
            out.push(&Weight::unit(rank, i, 1) + &Weight::unit(rank, j, 1));
        }
        out.push(Weight::unit(rank, i, 2));
    }
    out
}

pub fn standard_simple_roots<T: Scalar>(rank: usize) -> Vec<Weight<T>> {
    let mut out: Vec<Weight<T>> = (0..rank - 1)
        .map(|i| &Weight::unit(rank, i, 1) - &Weight::unit(rank, i + 1, 1))
        .collect();
    out.push(Weight::unit(rank, rank - 1, 2));
    out
}

/// Writes a weight in the `e1+e2` / `-2e2` surface syntax.
pub fn format_root<T: Scalar>(w: &Weight<T>) -> String {
    let mut out = String::new();
    for (i, c) in w.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        match magnitude.as_str() {
            "1" => {}
            m if m.contains('/') => out.push_str(&format!("({m})")),
            m => out.push_str(m),
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rational};

    type W = Weight<Rational>;

    fn rs(rank: usize) -> RootSystem<Rational> {
        build_root_system(rank).unwrap()
    }

    fn chamber(text: &str) -> SignChamber {
        text.parse().unwrap()
    }

    fn w(c: &[i64]) -> W {
        W::from_ints(c)
    }

    #[test]
    fn root_counts() {
        assert_eq!(rs(1).roots(), &[w(&[2]), w(&[-2])]);
        assert_eq!(rs(2).roots().len(), 8);
        assert_eq!(rs(3).roots().len(), 18);
        assert!(matches!(build_root_system::<Rational>(0), Err(Error::InvalidRank(0))));
    }

    #[test]
    fn coroot_pairings() {
        let r = rs(2);
        assert_eq!(r.coroot_pairing(&w(&[3, -2]), &w(&[1, 1])).unwrap(), int(1));
        assert_eq!(r.coroot_pairing(&w(&[3, -2]), &w(&[0, 2])).unwrap(), int(-2));
        for beta in r.roots() {
            assert_eq!(r.coroot_pairing(beta, beta).unwrap(), int(2));
        }
        assert!(matches!(
            r.coroot_pairing(&w(&[3, -2]), &w(&[0, 0])),
            Err(Error::InvalidRoot(_))
        ));
        assert!(r.coroot_pairing(&w(&[3, -2]), &w(&[1, 0])).is_err());
    }

    #[test]
    fn chamber_positive_systems() {
        let r = rs(2);
        assert_eq!(
            r.chamber_positive_roots(&chamber("++")),
            vec![w(&[1, -1]), w(&[1, 1]), w(&[2, 0]), w(&[0, 2])]
        );
        assert_eq!(
            r.chamber_positive_roots(&chamber("+-")),
            vec![w(&[1, 1]), w(&[1, -1]), w(&[2, 0]), w(&[0, -2])]
        );
        assert_eq!(rs(1).chamber_positive_roots(&chamber("-")), vec![w(&[-2])]);
    }

    #[test]
    fn simple_roots_and_rho() {
        assert_eq!(rs(2).simple_roots(&chamber("++")), vec![w(&[1, -1]), w(&[0, 2])]);
        assert_eq!(rs(2).simple_roots(&chamber("+-")), vec![w(&[1, 1]), w(&[0, -2])]);
        assert_eq!(
            rs(3).simple_roots(&chamber("+-+")),
            vec![w(&[1, 1, 0]), w(&[0, -1, -1]), w(&[0, 0, 2])]
        );
        assert_eq!(rs(2).rho(&chamber("++")), w(&[2, 1]));
        assert_eq!(rs(2).rho(&chamber("+-")), w(&[2, -1]));
        assert_eq!(rs(1).rho(&chamber("+")), w(&[1]));
    }

    #[test]
    fn reflections() {
        let r = rs(2);
        assert_eq!(r.reflect(&w(&[2, 1]), &w(&[1, -1])).unwrap(), w(&[1, 2]));
        assert_eq!(r.reflect(&w(&[3, -2]), &w(&[0, 2])).unwrap(), w(&[3, 2]));
        // pairing 1 against α₀ means the reflection subtracts α₀ once
        assert_eq!(r.reflect(&w(&[3, -2]), &w(&[1, 1])).unwrap(), w(&[2, -3]));
    }

    #[test]
    fn dominance() {
        let r = rs(2);
        assert!(r.is_dominant_regular_integral(&chamber("+-"), &w(&[3, -2])));
        assert!(!r.is_dominant_regular_integral(&chamber("++"), &w(&[2, 2])));
        let non_integral = W::new(vec![ratio(3, 2), int(1)]);
        assert!(!r.is_dominant_regular_integral(&chamber("++"), &non_integral));
        assert!(r.is_dominant_integral(&chamber("++"), &w(&[2, 2])));
    }

    #[test]
    fn chamber_parsing_and_order() {
        let all: Vec<String> = SignChamber::all(2).map(|c| c.to_string()).collect();
        assert_eq!(all, ["++", "+-", "-+", "--"]);
        assert!("+x".parse::<SignChamber>().is_err());
        assert!("".parse::<SignChamber>().is_err());
    }

    #[test]
    fn root_labels() {
        assert_eq!(format_root(&w(&[1, 1])), "e1+e2");
        assert_eq!(format_root(&w(&[0, -2])), "-2e2");
        assert_eq!(format_root(&w(&[0, -1, 1])), "-e2+e3");
    }
}
