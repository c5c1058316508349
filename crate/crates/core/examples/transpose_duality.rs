//! Vector space duality, the transpose and torsionless modules.

use syzygy_lab::homology::{is_torsionless, star_dual, transpose};
use syzygy_lab::lab;
use syzygy_lab::module::{dual, is_isomorphic, simple, Module};

fn main() {
    for name in ["loc3", "a2", "a3"] {
        let alg = lab::example(name).unwrap().build().unwrap();
        for v in 0..alg.num_vertices() {
            let s = simple(&alg, v);
            let dd = dual(&dual(&s));
            let tr = transpose(&s);
            let star = star_dual(&s).unwrap();
            println!(
                "{name} S{}: DD S ≅ S {}, Tr S dims {:?}, S* dims {:?}, torsionless {}",
                alg.presentation().vertices[v],
                is_isomorphic(&dd, &s).unwrap(),
                tr.dims(),
                star.module.dims(),
                is_torsionless(&s).unwrap()
            );
        }
        let radical = Module::regular(&alg).radical().0;
        println!("{name} rad Λ torsionless: {}", is_torsionless(&radical).unwrap());
    }
}
