//! Harish-Chandra data for `Sp(2n,ℝ)` and everything derived from them:
//! `s₀`, Blattner parameters, the lowest K-type of `J`, the coefficient
//! weight `Λ − ρ`, the Levi restriction and the cohomology tables.

mod cohomology;
mod datum;
mod enumerate;
mod package;

pub use cohomology::{les_consistency, CohTable, ResidualDegrees, LEFT_TABLE, RIGHT_TABLE};
pub use datum::{validate_datum, HCDatum, ParabolicClass, Violation};
pub use enumerate::enumerate_data;
pub use package::{
    compute_s0, derive_package, levi_restriction, levi_roots, nilradical_levels, s0_for_root,
    DSPackage, LeviParameter, Parity,
};
