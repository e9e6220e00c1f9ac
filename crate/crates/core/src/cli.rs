//! Command-line driver.
//!
//! Exit codes: 0 success / valid, 1 invalid (a witness was found),
//! 2 usage, parse or structure error, 3 search exhausted.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::builtin::{all_builtins, builtin_certificate};
use crate::certificate::{parse_certificate, ColoringCertificate};
use crate::circulant::CirculantGraph;
use crate::clique::{max_clique_bounded_with, CliqueOptions};
use crate::error::{Error, Result};
use crate::search::{default_tenure, search, SearchConfig};
use crate::verifier::{verify_with, verify_with_oracle_opts, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;

const WITNESS_NOTE: &str = "# witness vertices are numbered from 0";

#[derive(Parser, Debug)]
#[command(
    name = "cyclic-ramsey",
    version,
    about = "Verify and search for cyclic-coloring Ramsey lower-bound certificates",
    after_help = "Vertices are numbered 0..n-1; printed witnesses use this 0-based numbering.\n\
                  Exit codes: 0 valid/success, 1 invalid, 2 usage or input error, 3 search exhausted.\n\
                  Set RAMSEY_NO_COLOR=1 to disable output decoration."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify one certificate and print its report
    Verify(VerifyArgs),
    /// Verify every built-in certificate
    VerifyAll(VerifyAllArgs),
    /// Tabu search for a good coloring
    Search(SearchArgs),
    /// Clique number of one color class, up to a cap
    Clique(CliqueArgs),
    /// Print a certificate in the file format
    Show(ShowArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Certificate file
    file: Option<PathBuf>,
    /// Built-in certificate name
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// Decide cliques by exhaustive enumeration (n <= 32 only)
    #[arg(long)]
    brute_force: bool,
    /// Stop at the first violated color
    #[arg(long)]
    fail_fast: bool,
    /// Print one line: name=<name> valid=<bool> bound="R(..)>=N"|none ms=<t>
    #[arg(long)]
    summary: bool,
    /// Prune the clique search with greedy coloring bounds
    #[arg(long)]
    coloring_bound: bool,
}

#[derive(Args, Debug)]
struct VerifyAllArgs {
    /// Machine-readable key=value lines
    #[arg(long)]
    summary: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Number of vertices
    #[arg(short = 'n', value_name = "N")]
    n: usize,
    /// Clique size each color must avoid, comma separated
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    targets: Vec<usize>,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_MAX_ITERS)]
    max_iters: u64,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_RESTARTS)]
    restarts: u64,
    /// Defaults to about a third of n/2 times (colors - 1), within 1..=12
    #[arg(long)]
    tabu_tenure: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Write the certificate here instead of stdout
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CliqueArgs {
    #[command(flatten)]
    source: Source,
    /// 1-based color class
    #[arg(long)]
    color: usize,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
}

#[derive(Args, Debug)]
struct ShowArgs {
    #[command(flatten)]
    source: Source,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, out, err, false)
}

/// Like [`run`]; `decorate` highlights result lines with ANSI colors.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, decorate: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_ERROR
                }
            };
        }
    };
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(&args, out, decorate),
        Command::VerifyAll(args) => Ok(verify_all(&all_builtins(), args.summary, out, err)),
        Command::Search(args) => cmd_search(&args, out, err),
        Command::Clique(args) => cmd_clique(&args, out),
        Command::Show(args) => load(&args.source).map(|cert| {
            let _ = write!(out, "{}", cert.to_text());
            EXIT_OK
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn load(source: &Source) -> Result<ColoringCertificate> {
    match (&source.file, &source.builtin) {
        (_, Some(name)) => builtin_certificate(name),
        (Some(path), None) => load_file(path),
        (None, None) => unreachable!("clap requires a source"),
    }
}

fn load_file(path: &Path) -> Result<ColoringCertificate> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_certificate(&text)
}

fn result_line(line: &str, valid: bool, decorate: bool) -> String {
    if !decorate {
        return line.to_string();
    }
    let code = if valid { "32" } else { "31" };
    format!("\x1b[1;{code}m{line}\x1b[0m")
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, decorate: bool) -> Result<i32> {
    let cert = load(&args.source)?;
    let options = VerifyOptions {
        fail_fast: args.fail_fast,
        clique: CliqueOptions {
            coloring_bound: args.coloring_bound,
        },
    };
    let report = if args.brute_force {
        verify_with_oracle_opts(&cert, &options)?
    } else {
        verify_with(&cert, &options)?
    };

    let mut text = String::new();
    if args.summary {
        text.push_str(&report.summary_line());
        text.push('\n');
    } else {
        if report.has_witness() {
            text.push_str(WITNESS_NOTE);
            text.push('\n');
        }
        let rendered = report.render();
        let result = report.result_line();
        text.push_str(
            rendered
                .strip_suffix(&format!("{result}\n"))
                .unwrap_or(&rendered),
        );
        text.push_str(&result_line(&result, report.is_valid(), decorate));
        text.push('\n');
    }
    let _ = out.write_all(text.as_bytes());
    Ok(if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

/// Verifies `certs` in order, one line each plus a total. Exit 0 iff all
/// are valid, 2 if any is malformed.
pub fn verify_all(
    certs: &[ColoringCertificate],
    summary: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let malformed: Vec<_> = certs
        .iter()
        .filter_map(|c| {
            let v = c.validate_structure();
            (!v.is_empty()).then(|| (c.display_name().to_string(), Error::Structure(v)))
        })
        .collect();
    if !malformed.is_empty() {
        for (name, e) in malformed {
            let _ = writeln!(err, "error: {name}: {e}");
        }
        return EXIT_ERROR;
    }

    let start = Instant::now();
    let mut valid = 0;
    for cert in certs {
        let report = match verify_with(cert, &VerifyOptions::default()) {
            Ok(r) => r,
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", cert.display_name());
                return EXIT_ERROR;
            }
        };
        valid += usize::from(report.is_valid());
        let line = if summary {
            report.summary_line()
        } else {
            let verdict = match report.proven_bound() {
                Some(bound) => format!("VALID — proves {bound}"),
                None => "INVALID".to_string(),
            };
            format!(
                "{}: {verdict} ({} ms)",
                report.display_name(),
                report.elapsed().as_millis()
            )
        };
        let _ = writeln!(out, "{line}");
    }
    let total_ms = start.elapsed().as_millis();
    let _ = if summary {
        writeln!(
            out,
            "total_ms={total_ms} valid={valid} count={}",
            certs.len()
        )
    } else {
        writeln!(out, "total: {valid}/{} valid in {total_ms} ms", certs.len())
    };
    if valid == certs.len() {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

fn cmd_search(args: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let config = SearchConfig {
        n: args.n,
        targets: args.targets.clone(),
        seed: args.seed,
        max_iters: args.max_iters,
        restarts: args.restarts,
        tabu_tenure: args
            .tabu_tenure
            .unwrap_or_else(|| default_tenure(args.n, args.targets.len())),
        workers: args.workers,
    };
    let outcome = search(&config)?;
    for line in &outcome.log {
        let _ = writeln!(err, "{line}");
    }
    let Some(cert) = outcome.certificate else {
        return Ok(EXIT_EXHAUSTED);
    };
    match &args.output {
        Some(path) => std::fs::write(path, cert.to_text()).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot write {}: {e}", path.display()),
        })?,
        None => {
            let _ = write!(out, "{}", cert.to_text());
        }
    }
    let report = verify_with(&cert, &VerifyOptions::default())?;
    let _ = write!(out, "{}", report.render());
    Ok(EXIT_OK)
}

fn cmd_clique(args: &CliqueArgs, out: &mut dyn Write) -> Result<i32> {
    let cert = load(&args.source)?;
    let m = cert.color_count();
    if !(1..=m).contains(&args.color) {
        return Err(Error::Config(format!(
            "color {} outside 1..={m}",
            args.color
        )));
    }
    let g = CirculantGraph::for_color(&cert, args.color)?;
    let cap = usize::try_from(args.cap).unwrap_or(usize::MAX);
    let omega = max_clique_bounded_with(&g, cap, CliqueOptions::default());
    let _ = if omega >= cap {
        writeln!(out, "color {}: omega>={cap} (cap reached)", args.color)
    } else {
        writeln!(out, "color {}: omega={omega}", args.color)
    };
    Ok(EXIT_OK)
}
