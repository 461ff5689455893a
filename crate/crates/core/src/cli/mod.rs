//! Command-line front end.

pub mod document;
mod rootspec;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use rootspec::{parse_root_spec, RootSpecError};

use crate::error::Error;
use crate::lshape::{l_shape, l_shape_for_datum, pole_certificate, PoleHypotheses};
use crate::rootsys::SignChamber;
use crate::scalar::parse_rational;
use crate::setup::{derive_package, enumerate_data, validate_datum, DSPackage, HCDatum, ParabolicClass};
use crate::sl2::{verify_baby_theorem, BabyConfig, DEFAULT_GERM_DEPTH};
use crate::{QWeight, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "eiscoh", version, about = "Exact residual Eisenstein cohomology data for Sp(2n,R)")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a Harish-Chandra datum.
    Validate(DatumArgs),
    /// Derive the full parameter package of a datum.
    Package(DatumArgs),
    /// List every valid datum up to a weight bound.
    Enumerate(EnumerateArgs),
    /// Verify the SL2 vanishing theorem symbolically.
    Sl2Verify(Sl2Args),
    /// L-function shape and pole certificate for a parabolic class.
    Lshape(LshapeArgs),
}

#[derive(Args, Debug)]
struct DatumArgs {
    #[arg(long)]
    rank: usize,
    /// Sign chamber, e.g. "+-".
    #[arg(long, allow_hyphen_values = true)]
    chamber: String,
    /// Root, e.g. "e1+e2" or "2e2".
    #[arg(long, allow_hyphen_values = true)]
    alpha0: String,
    /// Comma-separated coordinates, e.g. "3,-2".
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    weight_bound: u64,
}

#[derive(Args, Debug)]
struct Sl2Args {
    #[arg(long, allow_hyphen_values = true, default_value = "-1")]
    a_plus: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    a_minus: String,
    #[arg(long, default_value_t = DEFAULT_GERM_DEPTH)]
    germ_depth: usize,
}

#[derive(Args, Debug)]
struct LshapeArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long)]
    central_character_trivial: bool,
    #[arg(long)]
    tempered: bool,
    #[arg(long)]
    central_value_nonzero: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    #[value(name = "P1")]
    P1,
    #[value(name = "P2")]
    P2,
}

/// Outcome of a subcommand before it is written out.
struct Outcome {
    code: i32,
    body: String,
    diagnostic: Option<String>,
}

impl Outcome {
    fn json(code: i32, value: Value) -> Self {
        Self {
            code,
            body: render_json(&value),
            diagnostic: None,
        }
    }

    fn with_diagnostic(mut self, msg: impl Into<String>) -> Self {
        self.diagnostic = Some(msg.into());
        self
    }
}

fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn usage(msg: impl Into<String>) -> Outcome {
    let msg = msg.into();
    Outcome {
        code: EXIT_USAGE,
        body: String::new(),
        diagnostic: Some(format!("error: {msg}")),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let outcome = dispatch(&cli);
    if let Some(msg) = &outcome.diagnostic {
        let _ = writeln!(stderr, "{msg}");
    }
    if outcome.body.is_empty() {
        return outcome.code;
    }
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.body),
        None => stdout.write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_VERIFICATION;
    }
    outcome.code
}

fn dispatch(cli: &Cli) -> Outcome {
    if cli.format == Format::Tsv && !matches!(cli.command, Command::Enumerate(_)) {
        return usage("--format tsv is only available for enumerate");
    }
    match &cli.command {
        Command::Validate(args) => cmd_validate(args),
        Command::Package(args) => cmd_package(args),
        Command::Enumerate(args) => cmd_enumerate(args, cli.format),
        Command::Sl2Verify(args) => cmd_sl2_verify(args),
        Command::Lshape(args) => cmd_lshape(args),
    }
}

fn parse_lambda(text: &str) -> Result<QWeight, String> {
    text.split(',')
        .enumerate()
        .map(|(i, part)| {
            parse_rational(part.trim())
                .ok_or_else(|| format!("--lambda entry {} ({:?}) is not a rational number", i + 1, part))
        })
        .collect::<Result<Vec<Rational>, String>>()
        .map(QWeight::new)
}

fn parse_datum(args: &DatumArgs) -> Result<HCDatum, Outcome> {
    let eps: SignChamber = args
        .chamber
        .parse()
        .map_err(|e: Error| usage(format!("--chamber: {e}")))?;
    let alpha0 = parse_root_spec(&args.alpha0, args.rank).map_err(|e| usage(format!("--alpha0 {:?}: {e}", args.alpha0)))?;
    let lambda = parse_lambda(&args.lambda).map_err(usage)?;
    validate_datum(args.rank, &eps, &alpha0, &lambda).map_err(invalid_input)
}

fn invalid_input(e: Error) -> Outcome {
    match &e {
        Error::InvalidDatum(vs) => Outcome::json(EXIT_INVALID_INPUT, document::violations(vs)).with_diagnostic(e.to_string()),
        Error::InvariantViolation(_) => {
            Outcome::json(EXIT_VERIFICATION, document::error("invariant_violation", &e)).with_diagnostic(e.to_string())
        }
        _ => Outcome::json(EXIT_INVALID_INPUT, document::error("invalid_input", &e)).with_diagnostic(e.to_string()),
    }
}

fn cmd_validate(args: &DatumArgs) -> Outcome {
    match parse_datum(args) {
        Ok(d) => Outcome::json(EXIT_OK, json!({ "hc_datum": document::hc_datum(&d) })),
        Err(o) => o,
    }
}

fn package_document(p: &DSPackage) -> Value {
    json!({
        "hc_datum": document::hc_datum(&p.datum),
        "package": document::package(p),
        "levi": document::levi(&p.levi_param),
        "lshape": document::lshape(&l_shape_for_datum(&p.datum)),
    })
}

fn cmd_package(args: &DatumArgs) -> Outcome {
    let datum = match parse_datum(args) {
        Ok(d) => d,
        Err(o) => return o,
    };
    match derive_package(&datum) {
        Ok(p) => Outcome::json(EXIT_OK, package_document(&p)),
        Err(e) => invalid_input(e),
    }
}

fn cmd_enumerate(args: &EnumerateArgs, format: Format) -> Outcome {
    if args.weight_bound < 1 {
        return usage("--weight-bound must be at least 1");
    }
    if args.rank < 1 {
        return usage("--rank must be at least 1");
    }
    let data = match enumerate_data(args.rank, args.weight_bound) {
        Ok(d) => d,
        Err(e) => return invalid_input(e),
    };
    let packages = match data.iter().map(derive_package).collect::<Result<Vec<_>, _>>() {
        Ok(p) => p,
        Err(e) => return invalid_input(e),
    };
    match format {
        Format::Tsv => Outcome {
            code: EXIT_OK,
            body: document::tsv(&packages),
            diagnostic: None,
        },
        Format::Json => Outcome::json(
            EXIT_OK,
            json!({
                "enumeration": {
                    "rank": args.rank,
                    "weight_bound": args.weight_bound,
                    "count": packages.len(),
                    "data": packages.iter().map(package_document).collect::<Vec<_>>(),
                }
            }),
        ),
    }
}

fn cmd_sl2_verify(args: &Sl2Args) -> Outcome {
    let parse = |flag: &str, text: &str| parse_rational(text.trim()).ok_or_else(|| usage(format!("{flag} {text:?} is not a rational number")));
    let (a_plus, a_minus) = match (parse("--a-plus", &args.a_plus), parse("--a-minus", &args.a_minus)) {
        (Ok(p), Ok(m)) => (p, m),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let config = BabyConfig {
        a_plus,
        a_minus,
        germ_depth: args.germ_depth,
        ..BabyConfig::default()
    };
    match verify_baby_theorem(&config) {
        Ok(report) => {
            let code = if report.any_failed() { EXIT_VERIFICATION } else { EXIT_OK };
            let out = Outcome::json(code, json!({ "sl2_report": document::sl2_report(&report) }));
            if code == EXIT_OK {
                out
            } else {
                out.with_diagnostic("error: SL2 verification failed")
            }
        }
        Err(e @ Error::PrecisionExhausted { .. }) => {
            Outcome::json(EXIT_VERIFICATION, document::error("precision_exhausted", &e)).with_diagnostic(format!("error: {e}"))
        }
        Err(e) => invalid_input(e),
    }
}

fn cmd_lshape(args: &LshapeArgs) -> Outcome {
    let class = match args.class {
        ClassArg::P1 => ParabolicClass::P1,
        ClassArg::P2 => ParabolicClass::P2,
    };
    let shape = match l_shape(args.rank, class) {
        Ok(s) => s,
        Err(e) => return invalid_input(e),
    };
    let hyp = PoleHypotheses {
        central_character_trivial: args.central_character_trivial,
        temperedness_assumed: args.tempered,
        central_value_nonzero: args.central_value_nonzero,
    };
    Outcome::json(
        EXIT_OK,
        json!({
            "lshape": document::lshape(&shape),
            "pole_certificate": document::certificate(&pole_certificate(&shape, &hyp)),
        }),
    )
}
