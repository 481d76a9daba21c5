//! Argument handling for the `antisym` binary.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::interval::PrecisionMode;
use crate::prover::{claim_registry, parse_rational, run_with_overrides, ProverConfig, Status};
use crate::report::{exit, RunReport};

#[derive(Debug, Parser)]
#[command(name = "antisym", version, about = "Certify the inequalities behind antisymmetry of the second eigenfunction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run claims and emit certificates.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Machine,
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run all twenty claims.
    #[arg(long, conflicts_with = "claim", required_unless_present = "claim")]
    all: bool,
    /// Run one claim (repeatable).
    #[arg(long, value_name = "ID")]
    claim: Vec<String>,
    #[arg(long, value_name = "N", default_value_t = 60)]
    max_depth: u32,
    /// Starting precision: machine escalates to extended(BITS) and
    /// extended(2·BITS); extended starts at BITS.
    #[arg(long, value_enum, default_value_t = Mode::Machine)]
    mode: Mode,
    #[arg(long, value_name = "BITS", default_value_t = PrecisionMode::DEFAULT_EXTENDED_BITS)]
    prec: u32,
    /// Lower end of the direct end-to-end check, e.g. 1/10000 or 1e-4.
    #[arg(long, value_name = "RATIONAL", default_value = "1/10000")]
    delta: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Force a claim outcome, as ID=STATUS.
    #[arg(long, value_name = "ID=STATUS", hide = true)]
    inject: Vec<String>,
}

fn config(a: &VerifyArgs) -> Result<ProverConfig, String> {
    let ext = |bits: u32| PrecisionMode::extended(bits).map_err(|e| e.to_string());
    let precision = match a.mode {
        Mode::Machine => vec![PrecisionMode::Machine, ext(a.prec)?, ext(a.prec.saturating_mul(2))?],
        Mode::Extended => vec![ext(a.prec)?, ext(a.prec.saturating_mul(2))?],
    };
    let cfg = ProverConfig {
        max_depth: a.max_depth,
        delta: parse_rational(&a.delta).map_err(|e| e.to_string())?,
        precision,
        ..ProverConfig::default()
    };
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn injections(a: &VerifyArgs) -> Result<BTreeMap<String, Status>, String> {
    a.inject
        .iter()
        .map(|s| {
            let (id, st) = s.split_once('=').ok_or_else(|| format!("--inject expects ID=STATUS, got {s:?}"))?;
            let status = match st {
                "verified" => Status::Verified,
                "failed" => Status::Failed,
                "undecided" => Status::Undecided,
                _ => return Err(format!("unknown status {st:?}")),
            };
            Ok((id.to_string(), status))
        })
        .collect()
}

/// Runs the command line and returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    exit::VERIFIED
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    exit::USAGE
                }
            };
        }
    };
    let Command::Verify(args) = cli.command;
    let usage = |stderr: &mut dyn Write, msg: &str| {
        let _ = writeln!(stderr, "error: {msg}");
        exit::USAGE
    };
    let cfg = match config(&args) {
        Ok(c) => c,
        Err(m) => return usage(stderr, &m),
    };
    let overrides = match injections(&args) {
        Ok(o) => o,
        Err(m) => return usage(stderr, &m),
    };
    let ids: Vec<String> = if args.all {
        claim_registry().iter().map(|c| c.id.to_string()).collect()
    } else {
        args.claim.clone()
    };
    let start = Instant::now();
    let certs = match run_with_overrides(&ids, &cfg, &overrides) {
        Ok(c) => c,
        Err(e @ Error::UnknownClaimId(_)) => return usage(stderr, &e.to_string()),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit::FAILED;
        }
    };
    let report = RunReport::new(cfg, certs, start.elapsed().as_millis() as u64);
    let body = match args.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return exit::FAILED;
            }
        }
        None => {
            let _ = stdout.write_all(body.as_bytes());
        }
    }
    report.exit_code()
}
