use std::collections::BTreeMap;
use std::fmt;

use super::cohomology::CohTable;
use super::datum::{HCDatum, ParabolicClass};
use crate::error::{Error, Result};
use crate::realform::{compact_simple_roots, middle_degree, rho_c, rho_n};
use crate::rootsys::format_root;
use crate::scalar::{abs, int, is_positive, to_i64, Rational};
use crate::{QRootSystem, QWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Harish-Chandra parameter of the Levi component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviParameter {
    pub parabolic_class: ParabolicClass,
    /// Weight of the discrete series of `GL₂`, present for P2 only.
    pub gl_weight: Option<i64>,
    pub sp_parameter: QWeight,
    /// Parity of the exponent in `sign^{n−1}`, present for P1 only.
    pub sign_character_parity: Option<Parity>,
}

/// Everything attached to a valid datum.
#[derive(Clone, Debug, PartialEq)]
pub struct DSPackage {
    pub datum: HCDatum,
    pub s0: Rational,
    pub blattner_plus: QWeight,
    pub blattner_minus: QWeight,
    pub j_lowest_ktype: QWeight,
    pub e_highest_weight: QWeight,
    pub levi_param: LeviParameter,
    pub d: usize,
    /// Multiplicity of the residual representation; `Sp(2n,ℝ)` is connected.
    pub m: u32,
    pub coh_table: CohTable,
}

/// Roots orthogonal to `α₀`.
pub fn levi_roots(datum: &HCDatum) -> Vec<QWeight> {
    let rs = datum.root_system();
    rs.roots()
        .iter()
        .filter(|b| b.dot(datum.alpha0()).is_ok_and(|p| p == int(0)))
        .cloned()
        .collect()
}

/// Roots `β` with `⟨β, α₀∨⟩ > 0`, keyed to that pairing.
pub fn nilradical_levels(datum: &HCDatum) -> BTreeMap<QWeight, Rational> {
    levels_for_root(&datum.root_system(), datum.alpha0())
}

fn levels_for_root(rs: &QRootSystem, alpha0: &QWeight) -> BTreeMap<QWeight, Rational> {
    rs.roots()
        .iter()
        .filter_map(|b| {
            let p = rs.coroot_pairing(b, alpha0).ok()?;
            is_positive(&p).then(|| (b.clone(), p))
        })
        .collect()
}

/// `(Σ_{⟨β,α∨⟩>0} ⟨β,α∨⟩)⁻¹` for any root `α`.
pub fn s0_for_root(rs: &QRootSystem, alpha0: &QWeight) -> Result<Rational> {
    if !rs.is_root(alpha0) {
        return Err(Error::InvalidRoot(format_root(alpha0)));
    }
    let total = levels_for_root(rs, alpha0)
        .into_values()
        .fold(int(0), |acc, p| acc + p);
    Ok(total.recip())
}

pub fn compute_s0(datum: &HCDatum) -> Rational {
    s0_for_root(&datum.root_system(), datum.alpha0()).expect("validated root")
}

pub fn levi_restriction(datum: &HCDatum) -> LeviParameter {
    let n = datum.rank();
    let lambda = datum.lambda();
    match datum.parabolic_class() {
        ParabolicClass::P2 => {
            let i0 = datum.i0().expect("P2 datum has i0");
            let next = to_i64(&abs(lambda.coord(i0 + 1))).expect("integral lambda");
            LeviParameter {
                parabolic_class: ParabolicClass::P2,
                gl_weight: Some(2 * next + 1),
                sp_parameter: lambda.without(&[i0, i0 + 1]),
                sign_character_parity: None,
            }
        }
        ParabolicClass::P1 => LeviParameter {
            parabolic_class: ParabolicClass::P1,
            gl_weight: None,
            sp_parameter: lambda.truncate(n - 1),
            sign_character_parity: Some(Parity::of(n - 1)),
        },
    }
}

pub fn derive_package(datum: &HCDatum) -> Result<DSPackage> {
    let rs = datum.root_system();
    let eps = datum.eps();
    let lambda = datum.lambda();
    let alpha0 = datum.alpha0();

    let blattner_plus = lambda - &rho_c(&rs, eps) + rho_n(&rs, eps);
    let blattner_minus = &blattner_plus - &alpha0.scale(&int(2));
    let j_lowest_ktype = &blattner_plus - alpha0;
    let e_highest_weight = lambda - &rs.rho(eps);

    let package = DSPackage {
        datum: datum.clone(),
        s0: compute_s0(datum),
        blattner_plus,
        blattner_minus,
        j_lowest_ktype,
        e_highest_weight,
        levi_param: levi_restriction(datum),
        d: middle_degree(datum.rank()),
        m: 1,
        coh_table: CohTable::new(middle_degree(datum.rank())),
    };
    check_package(&rs, &package)?;
    Ok(package)
}

fn check_package(rs: &QRootSystem, p: &DSPackage) -> Result<()> {
    let fail = |msg: String| Err(Error::InvariantViolation(msg));
    let datum = &p.datum;
    let eps = datum.eps();
    let alpha0 = datum.alpha0();

    if rs.reflect(datum.lambda(), alpha0)? != datum.lambda() - alpha0 {
        return fail("reflection of lambda in alpha0 is not lambda - alpha0".into());
    }
    if !rs.is_dominant_integral(eps, &p.e_highest_weight) {
        return fail(format!("E weight {} is not dominant integral", p.e_highest_weight));
    }
    let compact_simple = compact_simple_roots(rs, eps);
    for (name, w) in [
        ("blattner_plus", &p.blattner_plus),
        ("blattner_minus", &p.blattner_minus),
        ("j_lowest_ktype", &p.j_lowest_ktype),
        ("e_highest_weight", &p.e_highest_weight),
    ] {
        for beta in &compact_simple {
            if rs.coroot_pairing(w, beta)? < int(0) {
                return fail(format!("{name} {w} is not K-dominant against {}", format_root(beta)));
            }
        }
    }
    if !is_positive(&p.s0) {
        return fail(format!("s0 = {} is not positive", p.s0));
    }
    let levi = &p.levi_param;
    match levi.parabolic_class {
        ParabolicClass::P2 => {
            let k = levi.gl_weight.unwrap_or(0);
            if k < 3 || k % 2 == 0 {
                return fail(format!("GL2 weight {k} is not odd and at least 3"));
            }
        }
        ParabolicClass::P1 => {
            if let Some(last) = levi.sp_parameter.coords().last() {
                if abs(last) < int(2) {
                    return fail(format!("last Sp coordinate {last} has absolute value below 2"));
                }
            }
        }
    }
    Ok(())
}
