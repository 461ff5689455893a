//! Exact computations around the residual Eisenstein cohomology attached to
//! a maximal parabolic of `Sp(2n,ℝ)` whose Levi carries a discrete series.
//!
//! Everything is over `ℚ` or over the symbol field `ℚ(r)`; no floating point
//! is used anywhere.

pub mod cli;
pub mod error;
pub mod germ;
pub mod lshape;
pub mod poly;
pub mod ratfunc;
pub mod realform;
pub mod rootsys;
pub mod scalar;
pub mod setup;
pub mod sl2;
pub mod weight;

pub use error::{Error, Result};
pub use scalar::Rational;

pub type QWeight = weight::Weight<Rational>;
pub type QPolynomial = poly::Polynomial<Rational>;
pub type QRationalFunction = ratfunc::RationalFunction<Rational>;
/// `ℚ(r)`, where `r` stands for the residue of `ζ(2s)/ζ(2s+1)` at `s = ½`.
pub type SymbolField = ratfunc::RationalFunction<Rational>;
pub type ZetaGerm = germ::LaurentGerm<SymbolField>;
pub type QRootSystem = rootsys::RootSystem<Rational>;
