//! File formats, the built-in corpus, report files and the scan driver.

mod corpus;
mod file;
mod scan;

use serde::Serialize;
use thiserror::Error;

pub use corpus::{example, example_names, example_text, EXAMPLES};
pub use file::{parse_field, AlgebraFile};
pub use scan::{
    enumerate_shapes, record_from_report, run_scan, ScanMode, ScanOptions, ScanRecord, Shape, MAX_ARROWS, MAX_VERTICES,
};

use crate::invariants::{InvariantReport, ReportOptions};

pub const SCHEMA: &str = "syzygy-lab/1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("PARSE_ERROR line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("SEMANTIC_ERROR{}: {message}", line.map(|l| format!(" line {l}")).unwrap_or_default())]
    Semantic { line: Option<usize>, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("unknown example `{name}`; available: {known}")]
    UnknownExample { name: String, known: String },
    #[error("{0}")]
    Bounds(String),
}

#[derive(Serialize)]
struct ReportFile<'a> {
    schema: &'static str,
    tool: &'static str,
    version: &'static str,
    seed: u64,
    depth: usize,
    pool_cap: usize,
    conventions: Conventions,
    report: &'a InvariantReport,
}

#[derive(Serialize)]
struct Conventions {
    modules: &'static str,
    transpose: &'static str,
}

const CONVENTIONS: Conventions =
    Conventions { modules: "right", transpose: "Auslander-Bridger, from the minimal projective presentation" };

/// The JSON report document, pretty-printed with a trailing newline.
pub fn report_json(report: &InvariantReport, options: &ReportOptions) -> String {
    let file = ReportFile {
        schema: SCHEMA,
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        seed: crate::seed(),
        depth: options.depth,
        pool_cap: options.pool_cap,
        conventions: CONVENTIONS,
        report,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("report serializes");
    s.push('\n');
    s
}

/// Reads, parses and optionally re-fields an algebra file.
pub fn load_algebra_file(path: &std::path::Path, field: Option<crate::linalg::Field>) -> Result<AlgebraFile, LabError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LabError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let file = AlgebraFile::parse(&text)?;
    Ok(match field {
        Some(f) => file.with_field(f),
        None => file,
    })
}
