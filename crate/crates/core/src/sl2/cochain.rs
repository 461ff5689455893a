use super::module::{Coefficient, PSElement};
use crate::error::{Error, Result};

/// A 1-cochain, determined by its values on `X₊` and `X₋`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain1<C> {
    pub x_plus: PSElement<C>,
    pub x_minus: PSElement<C>,
}

fn require_support<C: Coefficient>(v: &PSElement<C>, weight: i64, what: &str) -> Result<()> {
    match v.weights().find(|w| *w != weight) {
        Some(w) => Err(Error::Cochain(format!(
            "{what} has a component of weight {w}, expected only weight {weight}"
        ))),
        None => Ok(()),
    }
}

/// `(d₀v)(X) = Xv` on a `K`-invariant `v`.
pub fn boundary_d0<C: Coefficient>(v: &PSElement<C>) -> Result<Cochain1<C>> {
    require_support(v, 0, "0-cochain")?;
    Ok(Cochain1 {
        x_plus: v.act_raise(),
        x_minus: v.act_lower(),
    })
}

/// `d₁c = X₊c(X₋) − X₋c(X₊)`, the value on `X₊ ∧ X₋`.
pub fn boundary_d1<C: Coefficient>(c: &Cochain1<C>) -> Result<PSElement<C>> {
    require_support(&c.x_plus, 2, "c(X+)")?;
    require_support(&c.x_minus, -2, "c(X-)")?;
    if c.x_plus.param() != c.x_minus.param() {
        return Err(Error::Cochain(format!(
            "c(X+) lies in I({}) but c(X-) lies in I({})",
            c.x_plus.param(),
            c.x_minus.param()
        )));
    }
    Ok(c.x_minus.act_raise().minus(&c.x_plus.act_lower()))
}
