//! Command-line front end. Results go to the output stream in the requested
//! format; one-line diagnostics go to the error stream.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::codec::{emit_json, format_q, parse_gauss, parse_q};
use crate::curvemap::CurveMap;
use crate::enumerate::{census, enumerate_curves, PRACTICAL_MAX_CROSSINGS};
use crate::error::Error;
use crate::invariants::{universal_report, XYVector};
use crate::rational::Q;
use crate::symbols::{f1_of_symbol, reduce_to_basis, symbol_class, Symbol};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_NOT_REALIZABLE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "orderone",
    version,
    about = "Order-one invariants of spherical curves"
)]
pub struct Config {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a signed Gauss code and check that it embeds in the sphere.
    Validate { file: PathBuf },
    /// Print F, the functionals on it and Arnold's invariants.
    Invariants {
        file: PathBuf,
        #[arg(long, default_value = "0", value_parser = rational)]
        k1: Q,
        #[arg(long, default_value = "0", value_parser = rational)]
        k2: Q,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List stable curves with at most the given number of crossings.
    Enumerate {
        #[arg(long, value_parser = crossing_bound)]
        max_crossings: usize,
        /// Identify isomorphic curves (the default).
        #[arg(long, overrides_with = "no_dedup")]
        dedup: bool,
        /// Identify codes only up to rotation of the word.
        #[arg(long)]
        no_dedup: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Write one JSON line per curve class.
    Census {
        #[arg(long, value_parser = crossing_bound)]
        max_crossings: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a singularity symbol such as `J+[0,1]` or `S[2^,0,-1]`.
    Symbol {
        #[arg(value_enum)]
        action: SymbolAction,
        symbol: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite over the corpus.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, value_parser = crossing_bound)]
        max_crossings: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SymbolAction {
    F1,
    Reduce,
    Class,
}

fn rational(s: &str) -> Result<Q, String> {
    parse_q(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

fn crossing_bound(s: &str) -> Result<usize, String> {
    let n: usize = s
        .parse()
        .map_err(|_| format!("`{s}` is not a crossing count"))?;
    if n > PRACTICAL_MAX_CROSSINGS {
        return Err(format!(
            "at most {PRACTICAL_MAX_CROSSINGS} crossings are supported"
        ));
    }
    Ok(n)
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotRealizable { .. } => EXIT_NOT_REALIZABLE,
            Error::AssertionFailure(_) => EXIT_VERIFICATION,
            _ => EXIT_MALFORMED,
        };
        Failure(code, e.to_string())
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure(EXIT_MALFORMED, format!("{}: {e}", path.display()))
}

fn load(path: &std::path::Path) -> Result<CurveMap, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let code = parse_gauss(&text)?;
    Ok(CurveMap::from_code(&code)?)
}

fn vector_json(v: &XYVector) -> serde_json::Value {
    json!({
        "X": v.x_part().iter().map(|(&(a, b), c)| json!([a, b, format_q(c)])).collect::<Vec<_>>(),
        "Y": v.y_part().iter().map(|(&d, c)| json!([d, format_q(c)])).collect::<Vec<_>>(),
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let w = |out: &mut dyn Write, s: String| {
        writeln!(out, "{s}").map_err(|e| Failure(EXIT_MALFORMED, format!("write failed: {e}")))
    };
    match cmd {
        Command::Validate { file } => {
            let map = load(&file)?;
            w(
                out,
                format!(
                    "ok: {} crossings, class {}",
                    map.n_crossings(),
                    map.regular_homotopy_class().as_str()
                ),
            )
        }
        Command::Invariants {
            file,
            k1,
            k2,
            format,
        } => {
            let map = load(&file)?;
            let report = universal_report(&map, k1, k2)?;
            match format {
                Format::Json => w(out, emit_json(&report.to_json())),
                Format::Text => {
                    let list = |v: &[Q]| v.iter().map(format_q).collect::<Vec<_>>().join(" ");
                    w(
                        out,
                        format!(
                            "crossings: {}\nclass: {}\nF: {}\npsi: {}\neta: {}\nJ+: {}\nJ-: {}\nSt: {}",
                            report.crossings,
                            report.class.as_str(),
                            report.f,
                            list(&report.psi),
                            list(&report.eta),
                            report.j_plus,
                            report.j_minus,
                            report.st
                        ),
                    )
                }
            }
        }
        Command::Enumerate {
            max_crossings,
            no_dedup,
            format,
            ..
        } => {
            let corpus = enumerate_curves(max_crossings, !no_dedup);
            for (code, map) in &corpus.entries {
                let line = match format {
                    Format::Text => code.to_text(),
                    Format::Json => json!({
                        "code": code.to_text(),
                        "crossings": map.n_crossings(),
                        "class": map.regular_homotopy_class().as_str(),
                    })
                    .to_string(),
                };
                w(out, line)?;
            }
            Ok(())
        }
        Command::Census {
            max_crossings,
            out: path,
        } => {
            let text = census(max_crossings)?;
            fs::write(&path, &text).map_err(|e| io_failure(&path, e))?;
            w(
                out,
                format!("wrote {} rows to {}", text.lines().count(), path.display()),
            )
        }
        Command::Symbol {
            action,
            symbol,
            format,
        } => {
            let s: Symbol = symbol.parse()?;
            let text = match (action, format) {
                (SymbolAction::F1, Format::Json) => vector_json(&f1_of_symbol(&s)).to_string(),
                (SymbolAction::F1, Format::Text) => f1_of_symbol(&s).to_string(),
                (SymbolAction::Class, Format::Json) => {
                    json!({ "class": symbol_class(&s).as_str() }).to_string()
                }
                (SymbolAction::Class, Format::Text) => symbol_class(&s).as_str().to_string(),
                (SymbolAction::Reduce, fmt) => {
                    let coords = reduce_to_basis(&s);
                    match fmt {
                        Format::Json => json!(coords
                            .0
                            .iter()
                            .map(|(k, c)| json!([k.to_string(), format_q(c)]))
                            .collect::<Vec<_>>())
                        .to_string(),
                        Format::Text => coords
                            .0
                            .iter()
                            .map(|(k, c)| format!("{} {k}", format_q(c)))
                            .collect::<Vec<_>>()
                            .join("\n"),
                    }
                }
            };
            w(out, text)
        }
        Command::Verify {
            suite,
            max_crossings,
        } => {
            let report = run_suite(suite, max_crossings);
            w(out, report.to_string())?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure(
                    EXIT_VERIFICATION,
                    format!("suite {suite}: {} failures", report.failures.len()),
                ))
            }
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match Config::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_MALFORMED
                }
            };
        }
    };
    match dispatch(config.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
