//! Three-valued membership in Ω^n(mod-Λ) with checkable certificates.

use syzygy_lab::invariants::{cosyzygy_chain, omega_membership, torsionfree_degree};
use syzygy_lab::lab;
use syzygy_lab::module::{simple, Module};

fn main() {
    let alg = lab::example("loc3").unwrap().build().unwrap();
    let s = simple(&alg, 0);
    for n in 0..=3 {
        let verdict = omega_membership(&s, n);
        println!("S ∈ Ω^{n}: {} (certificate rechecks: {})", verdict.value.membership_label(), verdict.recheck());
    }
    println!("torsionfree degree of S: {}", torsionfree_degree(&s, 4));
    let chain = cosyzygy_chain(&Module::regular(&alg), 3);
    println!("Λ: chain of length {}, terminated {}", chain.length(), chain.terminated);

    let a2 = lab::example("a2").unwrap().build().unwrap();
    let verdict = omega_membership(&simple(&a2, 0), 1);
    println!("A2 S1 ∈ Ω^1: {}", verdict.value.membership_label());
    println!("{}", serde_json::to_string_pretty(&verdict).unwrap());
}
