//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification claim failed, 2 bad arguments or
//! a domain error, 3 no natural-cohomology table exists.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chern::{chi_value_in, euler_characteristic, twist, validate_parity, ChernData};
use crate::cohomtable::{monad_chern, natural_table, MonadType};
use crate::constants::{Constants, Fault};
use crate::curvelink::bundle_to_curve;
use crate::error::Error;
use crate::moduli::{charge2_dimension_chain, moduli_report, Hypothesis};
use crate::spectrum::{enumerate_spectra, h1_from_spectrum, h2_from_spectrum, is_instanton_spectrum, SpectrumContext};
use crate::verify::verify_paper_in;
use crate::Q;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_NATURAL: i32 = 3;

const RANGE_LIMIT: i64 = 100;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "p3-instanton", version, about = "Chern-class and cohomology calculator for sheaves on P^3")]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler characteristic chi(F(m)).
    Chi {
        rank: u32,
        c1: i64,
        c2: i64,
        c3: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        m: i64,
    },
    /// Natural-cohomology table over [t_min, t_max].
    #[command(allow_negative_numbers = true)]
    Table {
        rank: u32,
        c1: i64,
        c2: i64,
        c3: i64,
        t_min: i64,
        t_max: i64,
    },
    /// Zero-sum spectra of length n with their h1/h2 profile at l = -2.
    Spectra {
        n: usize,
        #[arg(long, default_value_t = 1)]
        bound: i64,
    },
    /// Chern classes of F(k).
    #[command(allow_negative_numbers = true)]
    Twist {
        rank: u32,
        c1: i64,
        c2: i64,
        c3: i64,
        k: i64,
    },
    /// Degree and genus of the curve attached to a rank-3 bundle.
    #[command(allow_negative_numbers = true)]
    Curve { c1: i64, c2: i64, c3: i64 },
    /// Chern classes of the cohomology of O(-1)^a -> O^b -> O(1)^c.
    Monad { a: u32, b: u32, c: u32 },
    /// Ext difference and smooth-point dimension for a rank-3 bundle.
    #[command(allow_negative_numbers = true)]
    Moduli {
        c1: i64,
        c2: i64,
        c3: i64,
        /// Assert the bundle is stable.
        #[arg(long)]
        stable: bool,
        /// Assert Ext^2(F,F) = 0.
        #[arg(long)]
        ext2_vanishes: bool,
    },
    /// The charge-2 dimension chain.
    Chain,
    /// Replay every reference value; exit 1 if any fails.
    VerifyPaper {
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<Fault>,
    },
}

/// Validated ranges shared by commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub format: Format,
    pub t_min: i64,
    pub t_max: i64,
    pub bound: i64,
}

impl CliConfig {
    pub fn new(format: Format, t_min: i64, t_max: i64, bound: i64) -> Result<Self, String> {
        if t_min > t_max {
            return Err(format!("t_min = {t_min} exceeds t_max = {t_max}"));
        }
        for (name, v) in [("t_min", t_min), ("t_max", t_max), ("bound", bound)] {
            if !(-RANGE_LIMIT..=RANGE_LIMIT).contains(&v) {
                return Err(format!("{name} = {v} is outside [-{RANGE_LIMIT}, {RANGE_LIMIT}]"));
            }
        }
        Ok(CliConfig { format, t_min, t_max, bound })
    }
}

/// Result of one invocation: what to print and how to exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::NotNaturalizable { .. } => EXIT_NOT_NATURAL,
            _ => EXIT_USAGE,
        };
        Outcome::fail(code, format!("error: {e}"))
    }
}

fn line(s: impl Into<String>) -> String {
    let mut s = s.into();
    s.push('\n');
    s
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    let fmt = cli.format;
    match cli.command {
        Command::Chi { rank, c1, c2, c3, m } => chern(rank, c1, c2, c3).map_or_else(
            |e| Outcome::from_error(&e),
            |d| cmd_chi(&d, m, fmt),
        ),
        Command::Table { rank, c1, c2, c3, t_min, t_max } => {
            let cfg = match CliConfig::new(fmt, t_min, t_max, 1) {
                Ok(c) => c,
                Err(msg) => return Outcome::fail(EXIT_USAGE, format!("error: {msg}")),
            };
            chern(rank, c1, c2, c3).map_or_else(|e| Outcome::from_error(&e), |d| cmd_table(&d, &cfg))
        }
        Command::Spectra { n, bound } => {
            let cfg = match CliConfig::new(fmt, 0, 0, bound) {
                Ok(c) => c,
                Err(msg) => return Outcome::fail(EXIT_USAGE, format!("error: {msg}")),
            };
            cmd_spectra(n, &cfg)
        }
        Command::Twist { rank, c1, c2, c3, k } => match chern(rank, c1, c2, c3) {
            Ok(d) => render_chern(&twist(&d, k), fmt),
            Err(e) => Outcome::from_error(&e),
        },
        Command::Curve { c1, c2, c3 } => match bundle_to_curve(&ChernData::rank3(c1, c2, c3)) {
            Ok(cv) => match fmt {
                Format::Text => Outcome::ok(line(format!("d={} g={}", cv.degree(), cv.genus()))),
                Format::Json => Outcome::ok(line(json!({"d": cv.degree(), "g": cv.genus()}).to_string())),
            },
            Err(e) => Outcome::from_error(&e),
        },
        Command::Monad { a, b, c } => match MonadType::new(a, b, c) {
            Ok(mt) => render_chern(&monad_chern(&mt), fmt),
            Err(e) => Outcome::from_error(&e),
        },
        Command::Moduli { c1, c2, c3, stable, ext2_vanishes } => {
            let mut hyps = Vec::new();
            if stable {
                hyps.push(Hypothesis::Stable);
            }
            if ext2_vanishes {
                hyps.push(Hypothesis::Ext2Vanishes);
            }
            match moduli_report(&ChernData::rank3(c1, c2, c3), &hyps) {
                Ok(r) => render_report(&r, fmt),
                Err(e) => Outcome::from_error(&e),
            }
        }
        Command::Chain => match charge2_dimension_chain() {
            Ok(r) => render_report(&r, fmt),
            Err(e) => Outcome::from_error(&e),
        },
        Command::VerifyPaper { inject_fault } => {
            let constants = inject_fault.map_or(Constants::STANDARD, Constants::with_fault);
            cmd_verify_paper(&constants, fmt)
        }
    }
}

fn chern(rank: u32, c1: i64, c2: i64, c3: i64) -> Result<ChernData, Error> {
    ChernData::new(rank, c1, c2, c3)
}

fn render_chern(d: &ChernData, fmt: Format) -> Outcome {
    match fmt {
        Format::Text => Outcome::ok(line(d.to_string())),
        Format::Json => Outcome::ok(line(json!({ "chern": d }).to_string())),
    }
}

fn render_report(r: &crate::moduli::ModuliReport, fmt: Format) -> Outcome {
    match fmt {
        Format::Json => Outcome::ok(line(r.to_json())),
        Format::Text => {
            let mut out = String::new();
            out.push_str(&line(format!("chern {}", r.chern)));
            for s in &r.derivation {
                out.push_str(&line(format!("{:<48} {:>5}   {}", s.quantity, s.value, s.provenance)));
            }
            match r.dimension {
                Some(d) => out.push_str(&line(format!("dimension {d}"))),
                None => out.push_str(&line("dimension undetermined (hypotheses missing)")),
            }
            Outcome::ok(out)
        }
    }
}

/// Prints χ(F(m)); a non-integral value is reported as `p/q` with exit 2.
pub fn cmd_chi(d: &ChernData, m: i64, fmt: Format) -> Outcome {
    match euler_characteristic(d, m) {
        Ok(v) => match fmt {
            Format::Text => Outcome::ok(line(v.to_string())),
            Format::Json => Outcome::ok(line(json!({ "chern": d, "chi": v, "m": m }).to_string())),
        },
        Err(e) => {
            let exact: Q = chi_value_in(&Constants::STANDARD, d, m);
            Outcome::fail(EXIT_USAGE, format!("error: {e} (chi = {exact})"))
        }
    }
}

pub fn cmd_table(d: &ChernData, cfg: &CliConfig) -> Outcome {
    if d.rank() == 3 && validate_parity(d) == Ok(false) {
        let e = Error::ParityViolation { discrepancy: d.c3() - d.c1() * d.c2() };
        return Outcome::fail(EXIT_USAGE, format!("error: parity violation: {e}"));
    }
    match natural_table(d, cfg.t_min, cfg.t_max) {
        Ok(tbl) => match cfg.format {
            Format::Text => Outcome::ok(tbl.render_text()),
            Format::Json => Outcome::ok(line(tbl.to_json())),
        },
        Err(e) => Outcome::from_error(&e),
    }
}

pub fn cmd_spectra(n: usize, cfg: &CliConfig) -> Outcome {
    let spectra = match enumerate_spectra(n, cfg.bound) {
        Ok(s) => s,
        Err(e) => return Outcome::from_error(&e),
    };
    let ctx = SpectrumContext::default();
    let mut text = String::new();
    let mut rows = Vec::new();
    for sp in &spectra {
        let h1 = h1_from_spectrum(sp, -2, &ctx).expect("l = -2 is in range");
        let h2 = h2_from_spectrum(sp, -2, &ctx).expect("l = -2 is in range");
        let inst = is_instanton_spectrum(sp);
        text.push_str(&line(format!(
            "{sp}: h1(-2)={h1} h2(-2)={h2} instanton={}",
            if inst { "yes" } else { "no" }
        )));
        rows.push(json!({ "h1_at_minus_2": h1, "h2_at_minus_2": h2, "instanton": inst, "ks": sp }));
    }
    match cfg.format {
        Format::Text => Outcome::ok(text),
        Format::Json => Outcome::ok(line(json!({ "bound": cfg.bound, "n": n, "spectra": rows }).to_string())),
    }
}

pub fn cmd_verify_paper(constants: &Constants, fmt: Format) -> Outcome {
    let report = verify_paper_in(constants);
    let stdout = match fmt {
        Format::Text => report.render_text(),
        Format::Json => line(report.to_json()),
    };
    if report.passed {
        Outcome::ok(stdout)
    } else {
        let failed: Vec<&str> = report.claims.iter().filter(|c| !c.passed).map(|c| c.id).collect();
        Outcome {
            code: EXIT_VERIFY_FAILED,
            stdout,
            stderr: line(format!("{} claim(s) failed: {}", failed.len(), failed.join(", "))),
        }
    }
}
