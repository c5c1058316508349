//! Ext groups, explicit classes and the middle terms they determine.

use syzygy_lab::homology::{ext, ext_dims, extension_middle_term};
use syzygy_lab::lab;
use syzygy_lab::linalg::Field;
use syzygy_lab::module::{decompose, simple, Module};

fn main() {
    let alg = lab::example("loc3").unwrap().build().unwrap();
    let s = simple(&alg, 0);
    let regular = Module::regular(&alg);
    println!("LOC3: dim Ext^i(S, S) = {:?}", ext_dims(&s, &s, 4).unwrap());
    println!("LOC3: dim Ext^i(S, Λ) = {:?}", ext_dims(&s, &regular, 4).unwrap());

    let group = ext(&s, &s, 1).unwrap();
    let f = Field::gf2();
    for coeffs in [vec![f.one(), f.zero()], vec![f.one(), f.one()]] {
        let sequence = extension_middle_term(&group.class(&coeffs)).unwrap();
        let middle = sequence.middle();
        let parts = decompose(middle).unwrap().parts();
        println!(
            "class {:?}: middle term dims {:?}, splits {}, {} summand(s)",
            coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            middle.dims(),
            sequence.splits().unwrap(),
            parts.len()
        );
    }
    let zero = extension_middle_term(&group.zero_class()).unwrap();
    println!("zero class splits: {}", zero.splits().unwrap());
}
