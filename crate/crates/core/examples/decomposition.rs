//! Krull–Schmidt decomposition and isomorphism tests.

use syzygy_lab::homology::syzygy_power;
use syzygy_lab::lab;
use syzygy_lab::module::{decompose, direct_sum, injective, is_isomorphic, projective, simple};

fn main() {
    let alg = lab::example("loc3").unwrap().build().unwrap();
    let s = simple(&alg, 0);
    for k in 0..=4 {
        let omega = syzygy_power(&s, k);
        let parts = decompose(&omega).unwrap().parts();
        let all_simple = parts.iter().all(|p| is_isomorphic(p, &s).unwrap());
        println!("Ω^{k}(S): dim {}, {} summands, all ≅ S: {all_simple}", omega.dim(), parts.len());
    }

    let b = lab::example("a2").unwrap().build().unwrap();
    let sum = direct_sum(&b, &[projective(&b, 0), simple(&b, 0), injective(&b, 0)]).module;
    let parts = decompose(&sum).unwrap().parts();
    println!("A2: P1 ⊕ S1 ⊕ I1 splits into dims {:?}", parts.iter().map(|p| p.dims().to_vec()).collect::<Vec<_>>());
    println!("A2: P1 ≅ I2 {}", is_isomorphic(&projective(&b, 0), &injective(&b, 1)).unwrap());
}
