//! The real form `Sp(2n,ℝ)`: compact roots `±(eᵢ−eⱼ)`, the split of `ρ`
//! into `ρ_c + ρ_n`, and weights of exterior powers of `𝔭`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootsys::{half_sum, RootSystem, SignChamber};
use crate::scalar::OrderedScalar;
use crate::weight::Weight;

/// Largest rank [`wedge_weights`] enumerates by default. The enumeration
/// visits all `2^{n(n+1)}` subsets of the noncompact roots.
pub const DEFAULT_WEDGE_RANK_CAP: usize = 3;

/// `±(eᵢ−eⱼ)`: exactly two nonzero coordinates, summing to zero.
pub fn is_compact<T: OrderedScalar>(root: &Weight<T>) -> bool {
    let nonzero: Vec<&T> = root.coords().iter().filter(|c| !c.is_zero()).collect();
    nonzero.len() == 2 && (nonzero[0].clone() + nonzero[1].clone()).is_zero()
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompactnessTable<T> {
    pub rank: usize,
    pub compact_roots: Vec<Weight<T>>,
}

impl<T: OrderedScalar> CompactnessTable<T> {
    pub fn new(rs: &RootSystem<T>) -> Self {
        Self {
            rank: rs.rank(),
            compact_roots: rs.roots().iter().filter(|r| is_compact(*r)).cloned().collect(),
        }
    }

    pub fn is_compact(&self, root: &Weight<T>) -> bool {
        self.compact_roots.contains(root)
    }
}

pub fn compact_positive_roots<T: OrderedScalar>(rs: &RootSystem<T>, eps: &SignChamber) -> Vec<Weight<T>> {
    rs.chamber_positive_roots(eps)
        .into_iter()
        .filter(is_compact)
        .collect()
}

pub fn noncompact_positive_roots<T: OrderedScalar>(rs: &RootSystem<T>, eps: &SignChamber) -> Vec<Weight<T>> {
    rs.chamber_positive_roots(eps)
        .into_iter()
        .filter(|r| !is_compact(r))
        .collect()
}

/// Simple roots of `Δ^ε ∩ Δ_c`: the compact positive roots that are not a
/// sum of two others.
pub fn compact_simple_roots<T: OrderedScalar>(rs: &RootSystem<T>, eps: &SignChamber) -> Vec<Weight<T>> {
    let positive = compact_positive_roots(rs, eps);
    positive
        .iter()
        .filter(|r| {
            !positive
                .iter()
                .any(|a| positive.iter().any(|b| &(a + b) == *r))
        })
        .cloned()
        .collect()
}

pub fn rho_c<T: OrderedScalar>(rs: &RootSystem<T>, eps: &SignChamber) -> Weight<T> {
    half_sum(rs.rank(), &compact_positive_roots(rs, eps))
}

pub fn rho_n<T: OrderedScalar>(rs: &RootSystem<T>, eps: &SignChamber) -> Weight<T> {
    half_sum(rs.rank(), &noncompact_positive_roots(rs, eps))
}

/// `{εᵢ(eᵢ+e_{i+1}) : εᵢ ≠ ε_{i+1}}` followed by `2εₙeₙ`.
pub fn noncompact_simple_roots<T: OrderedScalar>(rs: &RootSystem<T>, eps: &SignChamber) -> Vec<Weight<T>> {
    rs.simple_roots(eps)
        .into_iter()
        .filter(|r| !is_compact(r))
        .collect()
}

/// All `n(n+1)` noncompact roots, i.e. the weights of `𝔭`.
pub fn noncompact_roots<T: OrderedScalar>(rs: &RootSystem<T>) -> Vec<Weight<T>> {
    rs.roots().iter().filter(|r| !is_compact(*r)).cloned().collect()
}

/// `½ dim G/K = n(n+1)/2`.
pub fn middle_degree(rank: usize) -> usize {
    rank * (rank + 1) / 2
}

pub fn dim_p(rank: usize) -> usize {
    rank * (rank + 1)
}

/// Weights with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset<T: Ord> {
    entries: BTreeMap<Weight<T>, u64>,
}

impl<T: OrderedScalar + Ord> WeightMultiset<T> {
    pub fn new() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, w: Weight<T>) {
        *self.entries.entry(w).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, w: &Weight<T>) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight<T>, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }
}

impl<T: OrderedScalar + Ord> Default for WeightMultiset<T> {
    fn default() -> Self {
        Self::new()
    }
}

pub fn contains_weight<T: OrderedScalar + Ord>(ws: &WeightMultiset<T>, mu: &Weight<T>) -> u64 {
    ws.multiplicity(mu)
}

/// Weights of `⋀^q 𝔭`: sums over all `q`-element subsets of the noncompact
/// roots, each root used once. Ranks above [`DEFAULT_WEDGE_RANK_CAP`] are
/// refused.
pub fn wedge_weights<T: OrderedScalar + Ord>(rank: usize, q: usize) -> Result<WeightMultiset<T>> {
    wedge_weights_capped(rank, q, DEFAULT_WEDGE_RANK_CAP)
}

pub fn wedge_weights_capped<T: OrderedScalar + Ord>(
    rank: usize,
    q: usize,
    rank_cap: usize,
) -> Result<WeightMultiset<T>> {
    if rank > rank_cap {
        return Err(Error::OutOfRange {
            what: "rank",
            value: rank as i64,
            min: 1,
            max: rank_cap as i64,
        });
    }
    let rs = RootSystem::<T>::new(rank)?;
    let p = noncompact_roots(&rs);
    if q > p.len() {
        return Err(Error::OutOfRange {
            what: "wedge degree",
            value: q as i64,
            min: 0,
            max: p.len() as i64,
        });
    }
    let mut out = WeightMultiset::new();
    for mask in 0u64..1 << p.len() {
        if mask.count_ones() as usize != q {
            continue;
        }
        let sum = p
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(Weight::zero(rank), |acc, (_, r)| &acc + r);
        out.insert(sum);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::scalar::{ratio, Rational};

    type W = Weight<Rational>;

    fn rs(rank: usize) -> RootSystem<Rational> {
        build_root_system(rank).unwrap()
    }

    fn chamber(text: &str) -> SignChamber {
        text.parse().unwrap()
    }

    #[test]
    fn compact_roots() {
        let t = CompactnessTable::new(&rs(2));
        assert_eq!(t.compact_roots, vec![W::from_ints(&[1, -1]), W::from_ints(&[-1, 1])]);
        assert!(CompactnessTable::new(&rs(1)).compact_roots.is_empty());
        assert_eq!(CompactnessTable::new(&rs(3)).compact_roots.len(), 6);
    }

    #[test]
    fn rho_split() {
        let r = rs(2);
        assert_eq!(rho_c(&r, &chamber("++")), W::new(vec![ratio(1, 2), ratio(-1, 2)]));
        assert_eq!(rho_n(&r, &chamber("++")), W::new(vec![ratio(3, 2), ratio(3, 2)]));
        assert_eq!(rho_c(&r, &chamber("+-")), W::new(vec![ratio(1, 2), ratio(-1, 2)]));
        assert_eq!(rho_n(&r, &chamber("+-")), W::new(vec![ratio(3, 2), ratio(-1, 2)]));
        assert_eq!(rho_c(&rs(1), &chamber("+")), W::from_ints(&[0]));
        assert_eq!(rho_n(&rs(1), &chamber("+")), W::from_ints(&[1]));
    }

    #[test]
    fn noncompact_simple() {
        assert_eq!(
            noncompact_simple_roots(&rs(2), &chamber("+-")),
            vec![W::from_ints(&[1, 1]), W::from_ints(&[0, -2])]
        );
        assert_eq!(noncompact_simple_roots(&rs(2), &chamber("++")), vec![W::from_ints(&[0, 2])]);
        assert_eq!(noncompact_simple_roots(&rs(1), &chamber("+")), vec![W::from_ints(&[2])]);
    }

    #[test]
    fn middle_degrees() {
        assert_eq!(middle_degree(1), 1);
        assert_eq!(middle_degree(2), 3);
        assert_eq!(middle_degree(3), 6);
        for n in 1..=6 {
            assert_eq!(noncompact_roots(&rs(n)).len() / 2, middle_degree(n));
        }
    }

    #[test]
    fn wedge_examples() {
        let w0 = wedge_weights::<Rational>(2, 0).unwrap();
        assert_eq!(w0.total(), 1);
        assert_eq!(contains_weight(&w0, &W::from_ints(&[0, 0])), 1);
        let w3 = wedge_weights::<Rational>(2, 3).unwrap();
        assert!(contains_weight(&w3, &W::from_ints(&[3, -1])) >= 1);
        assert!(contains_weight(&w3, &W::from_ints(&[1, -3])) >= 1);
        let w2 = wedge_weights::<Rational>(2, 2).unwrap();
        assert!(contains_weight(&w2, &W::from_ints(&[2, -2])) >= 1);
        let w1 = wedge_weights::<Rational>(2, 1).unwrap();
        assert_eq!(contains_weight(&w1, &W::from_ints(&[5, 5])), 0);
    }

    #[test]
    fn wedge_range_errors() {
        assert!(matches!(
            wedge_weights::<Rational>(2, 7),
            Err(Error::OutOfRange { what: "wedge degree", .. })
        ));
        assert!(matches!(
            wedge_weights::<Rational>(4, 1),
            Err(Error::OutOfRange { what: "rank", .. })
        ));
        assert!(wedge_weights_capped::<Rational>(4, 1, 4).is_ok());
    }

    #[test]
    fn compact_simple_in_rank_three() {
        let simple = compact_simple_roots(&rs(3), &chamber("+-+"));
        assert_eq!(simple, vec![W::from_ints(&[1, 0, -1]), W::from_ints(&[0, -1, 1])]);
    }
}
