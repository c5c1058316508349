//! Building path algebras with relations and reading off their structure.

use syzygy_lab::algebra::{build_algebra, QuiverPresentation};
use syzygy_lab::linalg::Field;

fn main() {
    let mut p = QuiverPresentation::new(&["1", "2", "3", "4"], 3);
    p.add_arrow("a", "1", "2").unwrap();
    p.add_arrow("b", "2", "4").unwrap();
    p.add_arrow("c", "1", "3").unwrap();
    p.add_arrow("d", "3", "4").unwrap();
    p.add_relation("a*b - c*d").unwrap();
    let alg = build_algebra(&p, Field::Rationals).unwrap();
    println!("commutative square over ℚ: dim {}", alg.dim());
    for i in 0..alg.dim() {
        println!("  basis {i}: {}", alg.basis_label(i));
    }
    println!("loewy length {}, associative: {}", alg.loewy_length(), alg.is_associative());

    let mut bad = QuiverPresentation::new(&["1"], 2);
    bad.add_arrow("x", "1", "1").unwrap();
    match build_algebra(&bad, Field::gf2()) {
        Ok(_) => println!("unexpectedly admissible"),
        Err(e) => println!("k[x] with nilpotency 2 and no relation: {e}"),
    }
}
