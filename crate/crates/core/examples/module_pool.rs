//! The test pool: simples, projectives, injectives and their Ω, DTrΩ orbits.

use syzygy_lab::invariants::default_pool;
use syzygy_lab::lab;

fn main() {
    for name in ["loc3", "a3", "nakayama-3-2"] {
        let alg = lab::example(name).unwrap().build().unwrap();
        let pool = default_pool(&alg, 3, 64);
        println!("{name}: {} members, truncated {}", pool.len(), pool.truncated);
        for m in &pool.members {
            println!("  {:<20} dims {:?}", m.label, m.module.dims());
        }
    }
}
