//! Dominant and injective dimensions, selfinjectivity and GNC witnesses.

use syzygy_lab::invariants::{gnc_witness_scan, AlgebraContext};
use syzygy_lab::lab;

fn main() {
    let depth = 6;
    for name in lab::example_names() {
        let alg = lab::example(name).unwrap().build().unwrap();
        let ctx = AlgebraContext::new(&alg, depth);
        let witnesses: Vec<String> = gnc_witness_scan(&ctx)
            .iter()
            .zip(&alg.presentation().vertices)
            .map(|(w, v)| match w {
                Some(n) => format!("P{v}:{n}"),
                None => format!("P{v}:NONE"),
            })
            .collect();
        println!(
            "{name:>13}: dom.dim {}, inj.dim Λ {}, selfinjective {}, GNC {}",
            ctx.dominant_dimension(),
            ctx.inj_dim_regular(),
            ctx.is_selfinjective(),
            witnesses.join(" ")
        );
    }
}
