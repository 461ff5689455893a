use std::fmt;

use crate::error::{Error, Result};
use crate::realform::is_compact;
use crate::rootsys::{format_root, SignChamber};
use crate::scalar::{int, Rational};
use crate::{QRootSystem, QWeight};

/// Conjugacy class of the maximal parabolic attached to `α₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParabolicClass {
    /// `α₀ = 2εₙeₙ`, Levi `GL₁ × Sp_{2n−2}`.
    P1,
    /// `α₀ = ε_{i₀}(e_{i₀}+e_{i₀+1})`, Levi `GL₂ × Sp_{2n−4}`.
    P2,
}

impl fmt::Display for ParabolicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParabolicClass::P1 => "P1",
            ParabolicClass::P2 => "P2",
        })
    }
}

/// A validated `(n, ε, α₀, Λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HCDatum {
    rank: usize,
    eps: SignChamber,
    alpha0: QWeight,
    lambda: QWeight,
    class: ParabolicClass,
    /// 0-based `i₀` for P2 data.
    i0: Option<usize>,
}

impl HCDatum {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn eps(&self) -> &SignChamber {
        &self.eps
    }

    pub fn alpha0(&self) -> &QWeight {
        &self.alpha0
    }

    pub fn lambda(&self) -> &QWeight {
        &self.lambda
    }

    pub fn parabolic_class(&self) -> ParabolicClass {
        self.class
    }

    pub fn i0(&self) -> Option<usize> {
        self.i0
    }

    pub fn root_system(&self) -> QRootSystem {
        QRootSystem::new(self.rank).expect("validated rank")
    }
}

/// One failed admissibility condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    AlphaNotRoot(String),
    AlphaCompact(String),
    AlphaNotSimple { alpha0: String, chamber: String },
    NotIntegral { index: usize, value: String },
    NotDominantRegular { simple_root: String, pairing: String },
    PairingNotOne(String),
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::LengthMismatch { .. } => "length_mismatch",
            Violation::AlphaNotRoot(_) => "alpha0_not_root",
            Violation::AlphaCompact(_) => "alpha0_compact",
            Violation::AlphaNotSimple { .. } => "alpha0_not_simple",
            Violation::NotIntegral { .. } => "lambda_not_integral",
            Violation::NotDominantRegular { .. } => "lambda_not_dominant_regular",
            Violation::PairingNotOne(_) => "coroot_pairing",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LengthMismatch { what, expected, found } => {
                write!(f, "{what} has length {found}, expected {expected}")
            }
            Violation::AlphaNotRoot(a) => write!(f, "alpha0 {a} is not a root"),
            Violation::AlphaCompact(a) => write!(f, "alpha0 {a} is compact"),
            Violation::AlphaNotSimple { alpha0, chamber } => {
                write!(f, "alpha0 {alpha0} is not simple in chamber {chamber}")
            }
            Violation::NotIntegral { index, value } => {
                write!(f, "lambda_{} = {value} is not an integer", index + 1)
            }
            Violation::NotDominantRegular { simple_root, pairing } => {
                write!(f, "coroot pairing with simple root {simple_root} is {pairing} ≤ 0")
            }
            Violation::PairingNotOne(p) => write!(f, "coroot pairing {p} ≠ 1"),
        }
    }
}

/// Checks integrality, dominance-regularity, that `α₀` is a noncompact
/// simple root of `Δ^ε`, and `⟨Λ, α₀∨⟩ = 1`. All failures are collected.
pub fn validate_datum(
    rank: usize,
    eps: &SignChamber,
    alpha0: &QWeight,
    lambda: &QWeight,
) -> Result<HCDatum> {
    if rank == 0 {
        return Err(Error::InvalidRank(rank));
    }
    let mut violations = Vec::new();
    for (what, found) in [
        ("chamber", eps.rank()),
        ("alpha0", alpha0.rank()),
        ("lambda", lambda.rank()),
    ] {
        if found != rank {
            violations.push(Violation::LengthMismatch {
                what,
                expected: rank,
                found,
            });
        }
    }
    if !violations.is_empty() {
        return Err(Error::InvalidDatum(violations));
    }

    let rs = QRootSystem::new(rank)?;
    let alpha_label = format_root(alpha0);
    let alpha_is_root = rs.is_root(alpha0);
    if !alpha_is_root {
        violations.push(Violation::AlphaNotRoot(alpha_label.clone()));
    } else {
        if is_compact(alpha0) {
            violations.push(Violation::AlphaCompact(alpha_label.clone()));
        }
        if !rs.simple_roots(eps).contains(alpha0) {
            violations.push(Violation::AlphaNotSimple {
                alpha0: alpha_label.clone(),
                chamber: eps.to_string(),
            });
        }
    }

    let mut integral = true;
    for (index, c) in lambda.coords().iter().enumerate() {
        if !c.is_integer() {
            integral = false;
            violations.push(Violation::NotIntegral {
                index,
                value: c.to_string(),
            });
        }
    }
    if integral {
        for beta in rs.simple_roots(eps) {
            let p = rs.coroot_pairing(lambda, &beta)?;
            if p <= int(0) {
                violations.push(Violation::NotDominantRegular {
                    simple_root: format_root(&beta),
                    pairing: p.to_string(),
                });
            }
        }
    }
    if alpha_is_root {
        let p: Rational = rs.coroot_pairing(lambda, alpha0)?;
        if p != int(1) {
            violations.push(Violation::PairingNotOne(p.to_string()));
        }
    }

    if !violations.is_empty() {
        return Err(Error::InvalidDatum(violations));
    }

    let last = rank - 1;
    let (class, i0) = if alpha0.coord(last) != &int(0) && alpha0.coords()[..last].iter().all(|c| c == &int(0)) {
        (ParabolicClass::P1, None)
    } else {
        let i0 = alpha0
            .coords()
            .iter()
            .position(|c| c != &int(0))
            .expect("nonzero root");
        (ParabolicClass::P2, Some(i0))
    };
    Ok(HCDatum {
        rank,
        eps: eps.clone(),
        alpha0: alpha0.clone(),
        lambda: lambda.clone(),
        class,
        i0,
    })
}
