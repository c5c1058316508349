//! Full report for a built-in algebra, as written by `syzygy-lab report`.
//!
//! `cargo run --example invariant_report -- dual2 4`

use syzygy_lab::invariants::{build_report, ReportOptions};
use syzygy_lab::lab;

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "a2".to_string());
    let depth = args.next().and_then(|d| d.parse().ok()).unwrap_or(4);
    let alg = lab::example(&name).unwrap().build().unwrap();
    let options = ReportOptions { depth, ..ReportOptions::default() };
    let report = build_report(&name, &alg, &options);
    print!("{}", lab::report_json(&report, &options));
    eprintln!("cross-check failures: {}", report.failures().len());
}
