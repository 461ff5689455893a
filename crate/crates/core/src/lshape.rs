//! Shape of the Langlands–Shahidi factor in the constant term along the
//! maximal parabolics `P₁`, `P₂` of `Sp_{2n}`: levels of the dual
//! nilradical, the `L`-function arguments, and a rule-based pole verdict.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{int, Rational};
use crate::setup::{s0_for_root, HCDatum, ParabolicClass};
use crate::{QPolynomial, QRootSystem, QWeight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bucket {
    pub level: i64,
    pub dim: usize,
    pub label: Option<String>,
}

/// `slope·s + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub slope: Rational,
    pub offset: Rational,
}

impl LinearForm {
    pub fn eval(&self, s: &Rational) -> Rational {
        &self.slope * s + &self.offset
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = QPolynomial::linear(self.slope.clone(), self.offset.clone());
        f.write_str(&p.render("s"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LShape {
    pub parabolic_class: ParabolicClass,
    pub rank: usize,
    pub buckets: Vec<Bucket>,
    pub s0: Rational,
    pub numerator_arguments: Vec<LinearForm>,
    pub denominator_arguments: Vec<LinearForm>,
}

/// The representative root `α̃` of the class: `e₁+e₂` or `2e₁`.
fn class_root(rank: usize, class: ParabolicClass) -> QWeight {
    match class {
        ParabolicClass::P2 => &QWeight::unit(rank, 0, 1) + &QWeight::unit(rank, 1, 1),
        ParabolicClass::P1 => QWeight::unit(rank, 0, 2),
    }
}

fn check_rank(rank: usize, class: ParabolicClass) -> Result<()> {
    let min = match class {
        ParabolicClass::P1 => 1i64,
        ParabolicClass::P2 => 2,
    };
    if (rank as i64) < min {
        return Err(Error::OutOfRange {
            what: "rank",
            value: rank as i64,
            min,
            max: i64::MAX,
        });
    }
    Ok(())
}

/// `2eᵢ ↦ eᵢ`, `eᵢ ± eⱼ ↦ eᵢ ± eⱼ`.
fn coroot_coordinates(root: &QWeight) -> QWeight {
    let two = int(2);
    let long = root.coords().iter().filter(|c| **c != int(0)).count() == 1;
    if long {
        QWeight::new(root.coords().iter().map(|c| c / &two).collect())
    } else {
        root.clone()
    }
}

fn bucket_label(rank: usize, class: ParabolicClass, level: i64) -> Option<String> {
    match (class, level) {
        (ParabolicClass::P2, 1) => Some(format!("std_GL2 ⊠ std_SO({})", 2 * rank - 3)),
        (ParabolicClass::P2, 2) => Some("det ⊠ 1".to_string()),
        (ParabolicClass::P1, 2) => Some(format!("std_SO({})", 2 * rank - 1)),
        _ => None,
    }
}

pub fn dual_nilradical_buckets(rank: usize, class: ParabolicClass) -> Result<Vec<Bucket>> {
    check_rank(rank, class)?;
    let rs = QRootSystem::new(rank)?;
    let alpha = class_root(rank, class);
    let mut counts = std::collections::BTreeMap::<i64, usize>::new();
    for beta in rs.roots() {
        if rs.coroot_pairing(beta, &alpha)? > int(0) {
            let level = coroot_coordinates(beta).dot(&alpha)?;
            let level = level.to_integer().try_into().map_err(|_| {
                Error::InvariantViolation(format!("level {level} does not fit in i64"))
            })?;
            *counts.entry(level).or_default() += 1;
        }
    }
    Ok(counts
        .into_iter()
        .map(|(level, dim)| Bucket {
            level,
            dim,
            label: bucket_label(rank, class, level),
        })
        .collect())
}

/// Level `p` contributes `L(p·s/(2s₀))` over `L(p·s/(2s₀) + 1)`.
pub fn l_shape(rank: usize, class: ParabolicClass) -> Result<LShape> {
    let buckets = dual_nilradical_buckets(rank, class)?;
    let rs = QRootSystem::new(rank)?;
    let s0 = s0_for_root(&rs, &class_root(rank, class))?;
    let numerator_arguments: Vec<LinearForm> = buckets
        .iter()
        .map(|b| LinearForm {
            slope: int(b.level) / (int(2) * &s0),
            offset: int(0),
        })
        .collect();
    let denominator_arguments = numerator_arguments
        .iter()
        .map(|f| LinearForm {
            slope: f.slope.clone(),
            offset: &f.offset + int(1),
        })
        .collect();
    Ok(LShape {
        parabolic_class: class,
        rank,
        buckets,
        s0,
        numerator_arguments,
        denominator_arguments,
    })
}

pub fn l_shape_for_datum(datum: &HCDatum) -> LShape {
    l_shape(datum.rank(), datum.parabolic_class()).expect("valid datum has admissible rank")
}

/// Roots of `B_n`: `±eᵢ` and `±eᵢ±eⱼ`.
fn b_roots(rank: usize) -> Vec<QWeight> {
    let mut out = Vec::new();
    for i in 0..rank {
        for sign in [1, -1] {
            out.push(QWeight::unit(rank, i, sign));
            for j in (i + 1)..rank {
                for sign2 in [1, -1] {
                    out.push(&QWeight::unit(rank, i, sign) + &QWeight::unit(rank, j, sign2));
                }
            }
        }
    }
    out
}

/// `s₀` computed in `SO(2n+1)`: the reciprocal of the sum of positive
/// coroot pairings `⟨γ, α∨⟩` over roots `γ` of `B_n`, where `α` is the
/// `B_n` root dual to `α̃` (`e₁+e₂` or `e₁`).
pub fn dual_s0(rank: usize, class: ParabolicClass) -> Result<Rational> {
    check_rank(rank, class)?;
    let alpha = coroot_coordinates(&class_root(rank, class));
    let norm = alpha.dot(&alpha)?;
    let mut total = int(0);
    for gamma in b_roots(rank) {
        let p = int(2) * gamma.dot(&alpha)? / &norm;
        if p > int(0) {
            total += p;
        }
    }
    Ok(total.recip())
}

/// `Σ p · dim_p` over the buckets.
pub fn level_weighted_sum(shape: &LShape) -> i64 {
    shape.buckets.iter().map(|b| b.level * b.dim as i64).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct PoleHypotheses {
    pub central_character_trivial: bool,
    pub temperedness_assumed: bool,
    pub central_value_nonzero: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pole,
    NoPole,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pole => "pole",
            Verdict::NoPole => "no_pole",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleCertificate {
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

pub const NON_GENERIC_REASON: &str = "non-generic input requires L-function arithmetic out of scope";

/// Decides whether the intertwining operator has a pole at `s = s₀`.
pub fn pole_certificate(shape: &LShape, hyp: &PoleHypotheses) -> PoleCertificate {
    let unknown = |reasons: Vec<String>| PoleCertificate {
        verdict: Verdict::Unknown,
        reasons,
    };
    if shape.parabolic_class == ParabolicClass::P1 {
        return unknown(vec![NON_GENERIC_REASON.to_string()]);
    }
    let mut missing = Vec::new();
    if !hyp.central_character_trivial {
        missing.push("central character of the GL2 factor not known to be trivial".to_string());
    }
    if !hyp.temperedness_assumed {
        missing.push("temperedness not assumed".to_string());
    }
    if !missing.is_empty() {
        return unknown(missing);
    }

    let args = |forms: &[LinearForm]| -> Vec<Rational> { forms.iter().map(|f| f.eval(&shape.s0)).collect() };
    let num = args(&shape.numerator_arguments);
    let den = args(&shape.denominator_arguments);
    let top = shape.numerator_arguments.last().expect("P2 has two buckets");
    let zeta = format!("zeta^S({top}) has a simple pole at s = s0 = {}", shape.s0);
    let central = format!("level-1 numerator L^S({}, pi, R_1) is evaluated at {}", shape.numerator_arguments[0], num[0]);
    let denominators = format!(
        "denominators are evaluated at {} and lie in the region of absolute convergence",
        den.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
    );
    if hyp.central_value_nonzero {
        PoleCertificate {
            verdict: Verdict::Pole,
            reasons: vec![zeta, central, "central value is nonzero".into(), denominators],
        }
    } else {
        PoleCertificate {
            verdict: Verdict::NoPole,
            reasons: vec![zeta, central, "central value vanishes and cancels the residue".into(), denominators],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn levels(b: &[Bucket]) -> Vec<(i64, usize)> {
        b.iter().map(|b| (b.level, b.dim)).collect()
    }

    #[test]
    fn p2_buckets() {
        assert_eq!(levels(&dual_nilradical_buckets(2, ParabolicClass::P2).unwrap()), vec![(1, 2), (2, 1)]);
        let b = dual_nilradical_buckets(5, ParabolicClass::P2).unwrap();
        assert_eq!(levels(&b), vec![(1, 14), (2, 1)]);
        assert_eq!(b[0].label.as_deref(), Some("std_GL2 ⊠ std_SO(7)"));
        assert_eq!(b[1].label.as_deref(), Some("det ⊠ 1"));
    }

    #[test]
    fn p1_buckets() {
        let b = dual_nilradical_buckets(3, ParabolicClass::P1).unwrap();
        assert_eq!(levels(&b), vec![(2, 5)]);
        assert_eq!(b[0].label.as_deref(), Some("std_SO(5)"));
    }

    #[test]
    fn rank_too_small() {
        assert!(dual_nilradical_buckets(1, ParabolicClass::P2).is_err());
        assert!(dual_nilradical_buckets(0, ParabolicClass::P1).is_err());
    }

    #[test]
    fn arguments() {
        let shape = l_shape(4, ParabolicClass::P2).unwrap();
        let render = |v: &[LinearForm]| v.iter().map(|f| f.to_string()).collect::<Vec<_>>();
        assert_eq!(render(&shape.numerator_arguments), ["7*s", "14*s"]);
        assert_eq!(render(&shape.denominator_arguments), ["7*s + 1", "14*s + 1"]);
        assert_eq!(shape.numerator_arguments[1].eval(&shape.s0), int(1));
        assert_eq!(shape.numerator_arguments[0].eval(&shape.s0), ratio(1, 2));
        let shape = l_shape(3, ParabolicClass::P1).unwrap();
        assert_eq!(render(&shape.numerator_arguments), ["6*s"]);
    }

    #[test]
    fn dual_side_s0() {
        assert_eq!(dual_s0(2, ParabolicClass::P2).unwrap(), ratio(1, 4));
        assert_eq!(dual_s0(3, ParabolicClass::P1).unwrap(), ratio(1, 10));
        assert_eq!(b_roots(3).len(), 18);
    }

    #[test]
    fn certificates() {
        let p2 = l_shape(3, ParabolicClass::P2).unwrap();
        let all = PoleHypotheses {
            central_character_trivial: true,
            temperedness_assumed: true,
            central_value_nonzero: true,
        };
        assert_eq!(pole_certificate(&p2, &all).verdict, Verdict::Pole);
        let vanishing = PoleHypotheses {
            central_value_nonzero: false,
            ..all
        };
        assert_eq!(pole_certificate(&p2, &vanishing).verdict, Verdict::NoPole);
        let untempered = PoleHypotheses {
            temperedness_assumed: false,
            ..all
        };
        assert_eq!(pole_certificate(&p2, &untempered).verdict, Verdict::Unknown);
        let p1 = l_shape(3, ParabolicClass::P1).unwrap();
        let c = pole_certificate(&p1, &all);
        assert_eq!(c.verdict, Verdict::Unknown);
        assert_eq!(c.reasons, vec![NON_GENERIC_REASON.to_string()]);
    }
}
