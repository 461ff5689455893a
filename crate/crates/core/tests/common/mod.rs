#![allow(dead_code)]

use eiscoh::rootsys::SignChamber;
use eiscoh::setup::{validate_datum, HCDatum};
use eiscoh::QWeight;

pub fn w(c: &[i64]) -> QWeight {
    QWeight::from_ints(c)
}

pub fn chamber(s: &str) -> SignChamber {
    s.parse().unwrap()
}

pub fn datum(eps: &str, alpha0: &[i64], lambda: &[i64]) -> HCDatum {
    validate_datum(lambda.len(), &chamber(eps), &w(alpha0), &w(lambda)).unwrap()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI in-process.
pub fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("eiscoh").chain(args.iter().copied());
    let code = eiscoh::cli::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/golden")
        .join(name)
}

pub fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name)).unwrap_or_else(|e| panic!("golden file {name}: {e}"))
}

/// Uniform rational with numerator in `[-bound, bound]` and denominator in `[1, bound]`.
pub fn random_rational(rng: &mut impl rand::Rng, bound: i64) -> eiscoh::Rational {
    eiscoh::scalar::ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}
