//! Stable Hom spaces and the map induced by the syzygy functor.

use syzygy_lab::homology::{stable_hom, syzygy_stable_map};
use syzygy_lab::lab;
use syzygy_lab::module::{hom_space, simple};

fn main() {
    for name in ["loc3", "a2", "nakayama-3-2"] {
        let alg = lab::example(name).unwrap().build().unwrap();
        for v in 0..alg.num_vertices() {
            let s = simple(&alg, v);
            let hom = hom_space(&s, &s).unwrap().dim();
            let stable = stable_hom(&s, &s).unwrap().dim();
            let (before, after, map) = syzygy_stable_map(&s, &s).unwrap();
            println!(
                "{name} S{}: Hom {hom}, stable Hom {stable}, Ω: {} -> {} of rank {}",
                alg.presentation().vertices[v],
                before.dim(),
                after.dim(),
                map.rank()
            );
        }
    }
}
