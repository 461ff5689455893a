use super::datum::{validate_datum, HCDatum};
use crate::error::{Error, Result};
use crate::realform::noncompact_simple_roots;
use crate::rootsys::SignChamber;
use crate::{QRootSystem, QWeight};

/// All valid data with `max |λᵢ| ≤ weight_bound`, ordered by chamber,
/// then by position of `α₀` among the noncompact simple roots, then by `Λ`.
pub fn enumerate_data(rank: usize, weight_bound: u64) -> Result<Vec<HCDatum>> {
    if weight_bound < 1 {
        return Err(Error::OutOfRange {
            what: "weight bound",
            value: weight_bound as i64,
            min: 1,
            max: i64::MAX,
        });
    }
    let rs = QRootSystem::new(rank)?;
    let magnitudes = decreasing_tuples(rank, weight_bound as i64);
    let mut out = Vec::new();
    for eps in SignChamber::all(rank) {
        let mut lambdas: Vec<QWeight> = magnitudes
            .iter()
            .map(|m| {
                let signed: Vec<i64> = m
                    .iter()
                    .enumerate()
                    .map(|(i, a)| a * eps.sign(i) as i64)
                    .collect();
                QWeight::from_ints(&signed)
            })
            .collect();
        lambdas.sort();
        for alpha0 in noncompact_simple_roots(&rs, &eps) {
            for lambda in &lambdas {
                if let Ok(d) = validate_datum(rank, &eps, &alpha0, lambda) {
                    out.push(d);
                }
            }
        }
    }
    Ok(out)
}

/// Strictly decreasing tuples `bound ≥ a₁ > … > aₙ ≥ 1`.
fn decreasing_tuples(len: usize, bound: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, upper: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let remaining = (len - prefix.len()) as i64;
        for a in (remaining..=upper).rev() {
            prefix.push(a);
            go(len, a - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, bound, &mut Vec::new(), &mut out);
    out
}
