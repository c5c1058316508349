//! The individual checks behind a report, run on the local algebra LOC3.

use syzygy_lab::invariants::{
    co_gorenstein_check, default_pool, extension_closure_sample, hoshino_check, left_right_symmetry_report,
    nakayama_probe, syzygy_ext_closed_test, syzygy_lemma_check, AlgebraContext,
};
use syzygy_lab::lab;

fn main() {
    let alg = lab::example("loc3").unwrap().build().unwrap();
    let depth = 4;
    let ctx = AlgebraContext::new(&alg, depth);
    let pool = default_pool(&alg, depth, 64);

    let cg = co_gorenstein_check(&ctx, &pool);
    println!("co-Gorenstein at depth {depth}: {:?}, certified members {:?}", cg.verdict.value, cg.certified);

    let closed: Vec<_> = syzygy_ext_closed_test(&ctx, depth).iter().map(|v| v.value).collect();
    println!("Ω^k extension closed by the injective-dimension test: {closed:?}");

    let sample = extension_closure_sample(&ctx, 1, &pool, 256);
    println!("level-one closure sample: {}", sample.outcome());
    if let Some(w) = &sample.counterexample {
        println!("  middle term dims {:?} from members {} and {}", w.middle_dims, w.x, w.z);
    }

    for row in left_right_symmetry_report(&ctx, depth) {
        println!("n={}: injective side {:?}, projective side {:?}", row.n, row.injective_side, row.projective_side);
    }
    println!("Hoshino rows without disagreement: {}", hoshino_check(&ctx, depth).iter().all(|r| r.agree != Some(false)));
    println!("Nakayama probe consistent: {}", nakayama_probe(&ctx).consistent);
    let lemma = syzygy_lemma_check(&ctx, &pool, 256);
    println!("syzygy lemma consistent on {} members: {}", lemma.len(), lemma.iter().all(|r| r.consistent));
}
