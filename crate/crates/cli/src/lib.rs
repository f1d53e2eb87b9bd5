//! Command-line front end for `lapchi`.
//!
//! Every subcommand produces a report with the same envelope:
//! `command`, `input_digest` (SHA-256 of the input bytes), `parameters`,
//! `results` and `warnings`. JSON is the canonical format; keys are emitted
//! in sorted order so a report is byte-identical across runs.
//!
//! Exit codes: `0` success, `1` input or usage error, `2` a spectral theorem
//! check failed on the input.

mod commands;
mod corpus;
pub mod parse;
mod render;

use std::path::PathBuf;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub use render::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: lapchi::Error },
    #[error(transparent)]
    Lapchi(#[from] lapchi::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Spectrum,
    Bound,
    Certify,
    Psi,
    Phi,
    HyperCheck,
    HyperGen,
    Compare,
    Corpus,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Bound => "bound",
            Command::Certify => "certify",
            Command::Psi => "psi",
            Command::Phi => "phi",
            Command::HyperCheck => "hyper-check",
            Command::HyperGen => "hyper-gen",
            Command::Compare => "compare",
            Command::Corpus => "corpus",
        }
    }
}

/// Everything a run depends on; nothing is read from the environment.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input_path: Option<PathBuf>,
    /// Optional `vertex colour` file for `certify`.
    pub colouring_path: Option<PathBuf>,
    pub tol: f64,
    pub seed: u64,
    pub format: Format,
    pub k: Option<usize>,
    /// Uniformity, edge count and vertex budget for `hyper-gen`.
    pub m: Option<usize>,
    pub e: Option<usize>,
    pub n: Option<usize>,
    pub exact_limit: usize,
    pub enum_limit: usize,
    pub with_exact: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            input_path: None,
            colouring_path: None,
            tol: 1e-9,
            seed: 0,
            format: Format::Json,
            k: None,
            m: None,
            e: None,
            n: None,
            exact_limit: lapchi::colouring::DEFAULT_EXACT_LIMIT,
            enum_limit: lapchi::expansion::DEFAULT_ENUMERATION_LIMIT,
            with_exact: false,
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Usage(format!(
                "--tol must be positive (got {})",
                self.tol
            )));
        }
        if self.exact_limit == 0 || self.enum_limit == 0 {
            return Err(CliError::Usage("limits must be positive".into()));
        }
        Ok(())
    }

    fn parameters(&self) -> Value {
        serde_json::json!({
            "tol": self.tol,
            "seed": self.seed,
            "k": self.k,
            "m": self.m,
            "e": self.e,
            "n": self.n,
            "exact_limit": self.exact_limit,
            "enum_limit": self.enum_limit,
            "with_exact": self.with_exact,
        })
    }
}

/// A rendered report and the process exit code it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

/// Tabular view of a result for CSV output.
#[derive(Debug, Clone, Default)]
pub(crate) struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// What a subcommand hands back before rendering.
#[derive(Debug, Default)]
pub(crate) struct CommandOutput {
    pub results: Value,
    pub warnings: Vec<String>,
    pub violations: Vec<String>,
    pub table: Option<Table>,
    /// Raw text to print in text mode instead of the generic rendering.
    pub text: Option<String>,
}

#[derive(Debug, Serialize)]
struct Report<'a> {
    command: &'a str,
    input_digest: Option<String>,
    parameters: Value,
    results: Value,
    warnings: &'a [String],
}

pub(crate) fn read_input(path: &Option<PathBuf>) -> Result<(String, String), CliError> {
    let path = path
        .as_ref()
        .ok_or_else(|| CliError::Usage("an input file is required".into()))?;
    let bytes = std::fs::read(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let digest = format!("{:x}", Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| CliError::Parse {
        line: 0,
        message: "input is not valid UTF-8".into(),
    })?;
    Ok((text, digest))
}

/// Runs one command and renders its report.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let (out, digest) = commands::dispatch(config)?;
    let mut results = out.results;
    if !out.violations.is_empty() {
        if let Value::Object(map) = &mut results {
            map.insert("violations".into(), serde_json::json!(out.violations));
        }
    }
    let report = Report {
        command: config.command.name(),
        input_digest: digest,
        parameters: config.parameters(),
        results,
        warnings: &out.warnings,
    };
    let value = serde_json::to_value(&report).expect("reports serialize");
    let output = match config.format {
        Format::Json => render::json(&value),
        Format::Text => out.text.unwrap_or_else(|| render::text(&value)),
        Format::Csv => render::csv(out.table.as_ref(), &value),
    };
    Ok(Outcome {
        exit_code: if out.violations.is_empty() { 0 } else { 2 },
        output,
    })
}
