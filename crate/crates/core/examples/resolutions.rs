//! Minimal projective and injective resolutions over the linear A3 quiver.

use syzygy_lab::homology::{min_inj_resolution, min_proj_resolution};
use syzygy_lab::lab;
use syzygy_lab::module::{simple, Module};

fn main() {
    let alg = lab::example("a3").unwrap().build().unwrap();
    let names = &alg.presentation().vertices;
    for v in 0..alg.num_vertices() {
        let s = simple(&alg, v);
        let proj = min_proj_resolution(&s, 4);
        let inj = min_inj_resolution(&s, 4);
        let show = |terms: &[Vec<usize>]| {
            terms.iter().map(|t| t.iter().map(|&w| names[w].as_str()).collect::<Vec<_>>().join("+")).collect::<Vec<_>>()
        };
        let last = |t: Option<usize>| t.map_or("≥5".to_string(), |t| t.to_string());
        println!("S{}: projective terms {:?}, pd {}", names[v], show(&proj.summands), last(proj.terminated));
        println!("     injective terms {:?}, id {}", show(&inj.summands), last(inj.terminated));
        assert!(proj.is_exact() && inj.is_exact());
    }
    let regular = Module::regular(&alg);
    let r = min_inj_resolution(&regular, 3);
    println!("injective resolution of Λ has {} terms", r.terms.len());
}
