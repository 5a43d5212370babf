//! Command-line front end.
//!
//! Exit codes: 0 for informational output and `FiniteDimensional` verdicts,
//! 1 for `NotEstablished` verdicts, 2 for usage, parse and validation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use zerocycle_core::config::Incidence;
use zerocycle_core::criteria::report_for;
use zerocycle_core::{ComplexPair, GluingConfiguration, Verdict, Violation};

use crate::catalog::{get_fixture, list_fixtures};
use crate::report::{counts_line, counts_to_json, report_to_json, report_to_text, reports_to_json};
use crate::schema::{parse_configuration, SCHEMA_HELP};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_ESTABLISHED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "zerocycle",
    version,
    about = "Checks finite dimensionality of zero-cycle Chow groups of surfaces glued along curve configurations",
    after_help = SCHEMA_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Configuration file(s)
    #[arg(value_name = "FILE")]
    pub files: Vec<PathBuf>,
    /// Use a bundled fixture instead of a file
    #[arg(long, conflicts_with = "files")]
    pub fixture: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the modelling assumptions of a configuration
    Validate(Input),
    /// Print n1 n2 n3 m1 m2
    Counts(Input),
    /// Run the full criterion and print the report
    Check {
        #[command(flatten)]
        input: Input,
        /// Append the complex matrices to the text report
        #[arg(long)]
        dump_matrices: bool,
        /// Assert that CH0 of the normalisation is finite dimensional.
        /// Defaults to true for bundled fixtures and false for files.
        /// Takes an optional value as `--assume-normalization-fd=false`.
        #[arg(
            long,
            num_args = 0..=1,
            require_equals = true,
            default_missing_value = "true",
            value_name = "BOOL"
        )]
        assume_normalization_fd: Option<bool>,
    },
    /// Dump the complex matrices
    Matrices(Input),
    /// List bundled fixtures
    Fixtures {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

struct Loaded {
    origin: String,
    config: GluingConfiguration,
    bundled: bool,
}

pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let _ = write!(err, "{rendered}");
            if !rendered.contains(SCHEMA_HELP) {
                let _ = writeln!(err, "\n{SCHEMA_HELP}");
            }
            EXIT_INVALID
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match &cli.command {
        Command::Fixtures { format } => fixtures(*format, out),
        Command::Validate(input) => match load_inputs(input, err) {
            Ok(all) => worst(all.iter().map(|l| validate(l, input.format, out, err))),
            Err(code) => code,
        },
        Command::Counts(input) => match load_inputs(input, err) {
            Ok(all) => worst(all.iter().map(|l| counts(l, input.format, out, err))),
            Err(code) => code,
        },
        Command::Matrices(input) => match load_inputs(input, err) {
            Ok(all) => worst(all.iter().map(|l| matrices(l, out, err))),
            Err(code) => code,
        },
        Command::Check {
            input,
            dump_matrices,
            assume_normalization_fd,
        } => {
            if *dump_matrices && input.format == Format::Json {
                let _ = writeln!(
                    err,
                    "error: --dump-matrices is only available with text output; use the `matrices` subcommand"
                );
                return EXIT_INVALID;
            }
            check(input, *dump_matrices, *assume_normalization_fd, out, err)
        }
    }
}

fn load_inputs(input: &Input, err: &mut dyn Write) -> Result<Vec<Loaded>, u8> {
    if let Some(name) = &input.fixture {
        return match get_fixture(name) {
            Ok(f) => Ok(vec![Loaded {
                origin: f.name.to_string(),
                config: f.config,
                bundled: true,
            }]),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                Err(EXIT_INVALID)
            }
        };
    }
    if input.files.is_empty() {
        let _ = writeln!(
            err,
            "error: give a configuration file or --fixture NAME\n\n{SCHEMA_HELP}"
        );
        return Err(EXIT_INVALID);
    }
    input
        .files
        .iter()
        .map(|path| load_file(path, err))
        .collect()
}

fn load_file(path: &Path, err: &mut dyn Write) -> Result<Loaded, u8> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return Err(EXIT_INVALID);
        }
    };
    match parse_configuration(&text) {
        Ok(config) => Ok(Loaded {
            origin: path.display().to_string(),
            config,
            bundled: false,
        }),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            Err(EXIT_INVALID)
        }
    }
}

fn worst(codes: impl Iterator<Item = u8>) -> u8 {
    codes.fold(EXIT_OK, u8::max)
}

fn incidence_or_report(loaded: &Loaded, err: &mut dyn Write) -> Result<Incidence, u8> {
    Incidence::new(&loaded.config).map_err(|violations| {
        report_violations(&loaded.origin, &violations, err);
        EXIT_INVALID
    })
}

fn report_violations(origin: &str, violations: &[Violation], err: &mut dyn Write) {
    let _ = writeln!(err, "{origin}: {} violation(s)", violations.len());
    for v in violations {
        let _ = writeln!(err, "  - {v}");
    }
}

fn fixtures(format: Format, out: &mut dyn Write) -> u8 {
    let list = list_fixtures();
    match format {
        Format::Text => {
            let width = list.iter().map(|f| f.0.len()).max().unwrap_or(0);
            let lines: Vec<String> = list.iter().map(|f| counts_line(&f.2)).collect();
            let cwidth = lines.iter().map(String::len).max().unwrap_or(0);
            for ((name, source, _), line) in list.iter().zip(&lines) {
                let _ = writeln!(out, "{name:width$}  {line:cwidth$}  {source}");
            }
        }
        Format::Json => {
            let items: Vec<_> = list
                .iter()
                .map(|(name, source, k)| {
                    json!({
                        "name": name,
                        "source": source,
                        "counts": {"n1": k.n1, "n2": k.n2, "n3": k.n3, "m1": k.m1, "m2": k.m2},
                    })
                })
                .collect();
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&items).unwrap());
        }
    }
    EXIT_OK
}

fn validate(loaded: &Loaded, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let violations = zerocycle_core::validate(&loaded.config);
    let warnings: Vec<String> = if violations.is_empty() {
        Incidence::new(&loaded.config)
            .map(|inc| inc.warnings().iter().map(ToString::to_string).collect())
            .unwrap_or_default()
    } else {
        Vec::new()
    };
    match format {
        Format::Text => {
            if violations.is_empty() {
                let _ = writeln!(out, "{}: valid", loaded.origin);
            } else {
                report_violations(&loaded.origin, &violations, err);
            }
            for w in &warnings {
                let _ = writeln!(out, "  warning: {w}");
            }
        }
        Format::Json => {
            let doc = json!({
                "name": loaded.config.name,
                "valid": violations.is_empty(),
                "violations": violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "warnings": warnings,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

fn counts(loaded: &Loaded, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let inc = match incidence_or_report(loaded, err) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let k = inc.counts();
    let _ = match format {
        Format::Text => writeln!(out, "{}", counts_line(&k)),
        Format::Json => writeln!(out, "{}", counts_to_json(&k)),
    };
    EXIT_OK
}

fn matrices(loaded: &Loaded, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let inc = match incidence_or_report(loaded, err) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let _ = write!(out, "{}", ComplexPair::from_incidence(&inc).dump());
    EXIT_OK
}

fn check(
    input: &Input,
    dump_matrices: bool,
    assume: Option<bool>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let loaded = match load_inputs(input, err) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let mut code = EXIT_OK;
    let mut json_reports = Vec::new();
    for l in &loaded {
        let inc = match incidence_or_report(l, err) {
            Ok(i) => i,
            Err(c) => {
                code = code.max(c);
                continue;
            }
        };
        let hypothesis = assume.unwrap_or(l.bundled);
        if assume.is_none() && !l.bundled {
            let _ = writeln!(
                err,
                "note: {}: finite dimensionality of the normalisation not asserted; pass --assume-normalization-fd to assume it",
                l.origin
            );
        }
        let report = report_for(&inc, hypothesis);
        if report.verdict == Verdict::NotEstablished {
            code = code.max(EXIT_NOT_ESTABLISHED);
        }
        match input.format {
            Format::Text => {
                let _ = write!(out, "{}", report_to_text(&l.origin, &report));
                if dump_matrices {
                    let _ = write!(out, "{}", ComplexPair::from_incidence(&inc).dump());
                }
            }
            Format::Json if loaded.len() == 1 => {
                let _ = writeln!(out, "{}", report_to_json(&report));
            }
            Format::Json => json_reports.push(report),
        }
    }
    if !json_reports.is_empty() {
        let _ = writeln!(out, "{}", reports_to_json(&json_reports));
    }
    code
}
