use std::fmt;

use super::cochain::{boundary_d1, Cochain1};
use super::intertwining::{intertwine, intertwining_coefficient, vanishing_order};
use super::module::{PSElement, SpectralParam};
use crate::error::{Error, Result};
use crate::germ::LaurentGerm;
use crate::scalar::{half, int, Rational};
use crate::{QRationalFunction, SymbolField, ZetaGerm};

pub const DEFAULT_GERM_DEPTH: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct BabyConfig {
    pub a_plus: Rational,
    pub a_minus: Rational,
    pub germ_depth: usize,
    /// The unit `a(s)` in `M φ^{(0)}_s = a(s) φ^{(0)}_{−s}`.
    pub normalization: QRationalFunction,
}

impl Default for BabyConfig {
    fn default() -> Self {
        Self {
            a_plus: int(-1),
            a_minus: int(1),
            germ_depth: DEFAULT_GERM_DEPTH,
            normalization: QRationalFunction::constant(int(1)),
        }
    }
}

impl BabyConfig {
    pub fn with_coefficients(a_plus: Rational, a_minus: Rational) -> Self {
        Self {
            a_plus,
            a_minus,
            ..Self::default()
        }
    }
}

/// `ζ(2s)/ζ(2s+1)` near `s = ½`: a simple pole with residue `r`, nothing
/// further known.
pub fn zeta_germ() -> ZetaGerm {
    LaurentGerm::truncated(half(), -1, vec![SymbolField::var()])
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstantTerm {
    /// `a₋X₊φ^{(−2)}_{1/2} − a₊X₋φ^{(2)}_{1/2}`.
    pub first_terms: PSElement<SymbolField>,
    /// `lim_{s→½} Z(s)·d₁c(s)`, in `I(−½)`.
    pub value: PSElement<SymbolField>,
}

impl ConstantTerm {
    /// Coefficient of `φ^{(0)}_{−1/2}`.
    pub fn coefficient(&self) -> SymbolField {
        self.value
            .coefficient(0)
            .cloned()
            .unwrap_or_else(|| SymbolField::constant(int(0)))
    }

    pub fn is_weight_zero_line(&self) -> bool {
        self.value.weights().all(|w| w == 0)
    }
}

pub fn constant_term_d1c(a_plus: &Rational, a_minus: &Rational) -> Result<ConstantTerm> {
    constant_term(&BabyConfig::with_coefficients(a_plus.clone(), a_minus.clone()))
}

/// `a₋X₊φ^{(−2)}_{1/2} − a₊X₋φ^{(2)}_{1/2} + lim_{s→½} Z(s)·d₁c(s)` with
/// `c(X±) = a± M(s) φ^{(±2)}_s`.
pub fn constant_term(config: &BabyConfig) -> Result<ConstantTerm> {
    let b = half();
    let depth = config.germ_depth;
    let section = |weight: i64, a: &Rational| -> Result<PSElement<ZetaGerm>> {
        let coeff = LaurentGerm::exact(b.clone(), 0, vec![SymbolField::constant(a.clone())]);
        PSElement::basis(SpectralParam::s(), weight, coeff)
    };
    let minus_section = section(-2, &config.a_minus)?;
    let plus_section = section(2, &config.a_plus)?;

    let first = minus_section.act_raise().minus(&plus_section.act_lower());
    let first_terms = first.try_map(SpectralParam::constant(b.clone()), |_, g| g.limit())?;

    let cochain = Cochain1 {
        x_plus: intertwine(&plus_section, &config.normalization, depth),
        x_minus: intertwine(&minus_section, &config.normalization, depth),
    };
    let z = zeta_germ();
    let residual = boundary_d1(&cochain)?;
    let value = residual.try_map(SpectralParam::constant(-half()), |_, g| (&z * g).limit())?;
    Ok(ConstantTerm { first_terms, value })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The check is vacuous for the chosen input.
    Degenerate,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Degenerate => "degenerate",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// The degree-2 class is `d₁` of an explicit cochain.
    Coboundary,
    Inconclusive,
    Failed,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Coboundary => "residual class in degree 2 is a coboundary",
            Conclusion::Inconclusive => "inconclusive: degenerate choice of a_plus, a_minus",
            Conclusion::Failed => "verification failed",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Report {
    pub config: BabyConfig,
    pub checks: Vec<Check>,
    pub constant_term_coefficient: SymbolField,
    pub degenerate_choice: bool,
    pub conclusion: Conclusion,
}

impl Sl2Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }
}

pub fn verify_baby_theorem(config: &BabyConfig) -> Result<Sl2Report> {
    let b = half();
    let a_at_half = config
        .normalization
        .eval(&b)
        .filter(|v| v != &int(0))
        .ok_or_else(|| Error::Domain("normalization a(s) must be finite and nonzero at s = 1/2".into()))?;
    let mut checks = Vec::new();

    let orders = [1, -1]
        .map(|k| vanishing_order(&(config.normalization.clone() * intertwining_coefficient(k)), &b));
    let [o_plus, o_minus] = [orders[0].clone()?, orders[1].clone()?];
    checks.push(Check {
        name: "intertwining_vanishing_order",
        status: status(o_plus == 1 && o_minus == 1),
        detail: format!("order of a*c_1 at 1/2 is {o_plus}, order of a*c_-1 is {o_minus}"),
    });

    let at_half = SpectralParam::constant(b.clone());
    let one = QRationalFunction::constant(int(1));
    let lowered = PSElement::basis(at_half.clone(), 2, one.clone())?.act_lower();
    let raised = PSElement::basis(at_half, -2, one)?.act_raise();
    checks.push(Check {
        name: "weight_two_lines_killed",
        status: status(lowered.is_zero() && raised.is_zero()),
        detail: "X- phi(2) and X+ phi(-2) at s = 1/2".into(),
    });

    let ct = constant_term(config)?;
    let coefficient = ct.coefficient();
    let degenerate_choice = config.a_plus == config.a_minus;
    let nonzero = !num_traits::Zero::is_zero(&coefficient);
    let shaped = ct.first_terms.is_zero() && ct.is_weight_zero_line();
    let expected = SymbolField::constant((&config.a_minus - &config.a_plus) * a_at_half) * SymbolField::var();
    let ct_status = if !shaped || coefficient != expected {
        CheckStatus::Fail
    } else if nonzero {
        CheckStatus::Pass
    } else if degenerate_choice {
        CheckStatus::Degenerate
    } else {
        CheckStatus::Fail
    };
    checks.push(Check {
        name: "constant_term_nonzero",
        status: ct_status,
        detail: format!("constant term of d1 c is ({})*phi(0) at s = -1/2", coefficient.render("r")),
    });

    let conclusion = if checks.iter().any(|c| c.status == CheckStatus::Fail) {
        Conclusion::Failed
    } else if checks.iter().all(|c| c.status == CheckStatus::Pass) {
        Conclusion::Coboundary
    } else {
        Conclusion::Inconclusive
    };
    Ok(Sl2Report {
        config: config.clone(),
        checks,
        constant_term_coefficient: coefficient,
        degenerate_choice,
        conclusion,
    })
}

fn status(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}
