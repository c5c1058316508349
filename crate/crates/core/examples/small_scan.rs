//! Enumerating small algebras up to relabeling and scanning them.

use syzygy_lab::invariants::ReportOptions;
use syzygy_lab::lab::{enumerate_shapes, run_scan, ScanMode, ScanOptions};
use syzygy_lab::linalg::Field;

fn main() {
    for mode in [ScanMode::RadSquareZero, ScanMode::RadCubeZero] {
        let shapes = enumerate_shapes(2, 2, mode).unwrap();
        println!("{mode:?}: {} algebras with at most 2 vertices and 2 arrows", shapes.len());
    }
    let options = ScanOptions {
        vertices: 2,
        arrows: 2,
        mode: ScanMode::RadSquareZero,
        field: Field::gf2(),
        report: ReportOptions { depth: 4, ..ReportOptions::default() },
        jobs: Some(2),
    };
    for record in run_scan(&options).unwrap() {
        println!(
            "{:<24} dim {:>2}  dom.dim {:>3}  selfinjective {:<5} flags {:?}",
            record.id,
            record.dimension,
            record.dominant_dimension.to_string(),
            record.selfinjective,
            record.flags
        );
    }
}
