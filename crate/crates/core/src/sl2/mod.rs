//! The principal series of `SL₂(ℝ)` as a weight module, its intertwining
//! operator, the relative Lie algebra complex in degrees 0–2, and the
//! constant term of `d₁c` at `s = ½`.

mod baby;
mod cochain;
mod intertwining;
mod module;

pub use baby::{
    constant_term, constant_term_d1c, verify_baby_theorem, zeta_germ, BabyConfig, Check,
    DEFAULT_GERM_DEPTH,
    CheckStatus, Conclusion, ConstantTerm, Sl2Report,
};
pub use cochain::{boundary_d0, boundary_d1, Cochain1};
pub use intertwining::{intertwine, intertwining_coefficient, vanishing_order};
pub use module::{casimir, Coefficient, PSElement, SpectralParam};
