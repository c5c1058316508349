use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use syzygy_lab::invariants::{build_report, ReportOptions};
use syzygy_lab::lab::{self, LabError, ScanMode, ScanOptions};
use syzygy_lab::linalg::Field;

#[derive(Parser)]
#[command(name = "syzygy-lab", version, about = "Homological invariants of quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn field_arg(s: &str) -> Result<Field, String> {
    lab::parse_field(s)
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for an algebra file, as JSON.
    Report {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 64)]
        pool_cap: usize,
        /// Override the field declared in the file (gf2, gf3, q, ...).
        #[arg(long, value_parser = field_arg)]
        field: Option<Field>,
    },
    /// Print a built-in algebra file.
    Example { name: String },
    /// Enumerate small algebras and report each on one JSON line.
    Scan {
        #[arg(long, default_value_t = 2)]
        vertices: usize,
        #[arg(long, default_value_t = 2)]
        arrows: usize,
        /// Monomial length-two relations with J³ = 0 instead of J² = 0.
        #[arg(long)]
        rad_cube_zero: bool,
        #[arg(long, value_parser = field_arg, default_value = "gf2")]
        field: Field,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn report(file: PathBuf, depth: usize, pool_cap: usize, field: Option<Field>) -> Result<ExitCode, LabError> {
    let parsed = lab::load_algebra_file(&file, field)?;
    let algebra = parsed.build()?;
    let id = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let options = ReportOptions { depth, pool_cap, ..ReportOptions::default() };
    let report = build_report(&id, &algebra, &options);
    print!("{}", lab::report_json(&report, &options));
    let failures = report.failures();
    if failures.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }
    for f in failures {
        eprintln!("cross-check {} is FALSE: {}", f.name, f.detail);
    }
    Ok(ExitCode::from(2))
}

fn scan(options: ScanOptions) -> Result<ExitCode, LabError> {
    let records = lab::run_scan(&options)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for r in &records {
        let line = serde_json::to_string(r).expect("record serializes");
        let _ = writeln!(out, "{line}");
        if r.theorem_violation() {
            let _ = out.flush();
            eprintln!("THEOREM_VIOLATION on {}", r.id);
            return Ok(ExitCode::from(3));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Report { file, depth, pool_cap, field } => report(file, depth, pool_cap, field),
        Command::Example { name } => lab::example_text(&name).map(|t| {
            print!("{t}");
            ExitCode::SUCCESS
        }),
        Command::Scan { vertices, arrows, rad_cube_zero, field, depth, jobs } => scan(ScanOptions {
            vertices,
            arrows,
            mode: if rad_cube_zero { ScanMode::RadCubeZero } else { ScanMode::RadSquareZero },
            field,
            report: ReportOptions { depth, ..ReportOptions::default() },
            jobs,
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
