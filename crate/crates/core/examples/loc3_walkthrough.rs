//! The local algebra k[x,y]/(x², xy, yx, y²) end to end, over GF(2) and ℚ.

use syzygy_lab::homology::syzygy_power;
use syzygy_lab::invariants::{co_gorenstein_check, default_pool, omega_membership, AlgebraContext};
use syzygy_lab::lab;
use syzygy_lab::linalg::Field;
use syzygy_lab::module::{decompose, simple, Module};

fn main() {
    for field in [Field::gf2(), Field::Rationals] {
        let alg = lab::example("loc3").unwrap().with_field(field).build().unwrap();
        let s = simple(&alg, 0);
        println!("over {}: dim Λ = {}, socle dims {:?}", field.label(), alg.dim(), Module::regular(&alg).socle_dims());
        for k in 1..=5 {
            let omega = syzygy_power(&s, k);
            println!("  Ω^{k}(S) = S^{} ({} summands)", omega.dim(), decompose(&omega).unwrap().len());
        }
        let ctx = AlgebraContext::new(&alg, 4);
        let pool = default_pool(&alg, 4, 64);
        let cg = co_gorenstein_check(&ctx, &pool);
        println!("  dominant dimension {}, selfinjective {}", ctx.dominant_dimension(), ctx.is_selfinjective());
        println!("  co-Gorenstein at depth 4: {:?}", cg.verdict.value);
        println!("  S ∈ Ω^2: {}", omega_membership(&s, 2).value.membership_label());
    }
}
