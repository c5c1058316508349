use std::sync::Arc;

use proptest::prelude::*;
use syzygy_lab::algebra::{build_algebra, Algebra};
use syzygy_lab::homology::{min_inj_resolution, min_proj_resolution};
use syzygy_lab::lab::{self, AlgebraFile, Shape};
use syzygy_lab::linalg::Field;
use syzygy_lab::module::{decompose, dual, hom_space, is_isomorphic, map_from_projective_sum, projective_sum, Module};

fn corpus_algebra(k: usize, rational: bool) -> Arc<Algebra> {
    let names = lab::example_names();
    let file = lab::example(names[k % names.len()]).unwrap();
    let file = if rational { file.with_field(Field::Rationals) } else { file };
    file.build().unwrap()
}

/// Cokernel of a map `P1 → P0` between projective sums with generator
/// images drawn from `coeffs`.
fn presented(alg: &Arc<Algebra>, top: &[usize], rels: &[usize], coeffs: &[i64]) -> Module {
    let f = alg.field();
    let nv = alg.num_vertices();
    let top: Vec<usize> = top.iter().map(|v| v % nv).collect();
    let rels: Vec<usize> = rels.iter().map(|v| v % nv).collect();
    let p0 = projective_sum(alg, &top);
    let p1 = projective_sum(alg, &rels);
    let mut next = coeffs.iter().cycle();
    let images: Vec<_> = rels
        .iter()
        .map(|&v| {
            (0..p0.dim_at(v)).map(|_| f.from_i64(*next.next().unwrap())).collect::<Vec<_>>()
        })
        .collect();
    map_from_projective_sum(&p1, &rels, &p0, &images).cokernel().0
}

fn module_strategy() -> impl Strategy<Value = Module> {
    (
        0usize..6,
        any::<bool>(),
        prop::collection::vec(0usize..3, 1..3),
        prop::collection::vec(0usize..3, 0..3),
        prop::collection::vec(-2i64..3, 1..16),
    )
        .prop_map(|(k, rational, top, rels, coeffs)| presented(&corpus_algebra(k, rational), &top, &rels, &coeffs))
}

fn pair_strategy() -> impl Strategy<Value = (Module, Module)> {
    (
        0usize..6,
        prop::collection::vec(0usize..3, 1..3),
        prop::collection::vec(0usize..3, 0..2),
        prop::collection::vec(0usize..3, 1..3),
        prop::collection::vec(0usize..3, 0..2),
        prop::collection::vec(0i64..2, 1..12),
    )
        .prop_map(|(k, t1, r1, t2, r2, coeffs)| {
            let alg = corpus_algebra(k, false);
            (presented(&alg, &t1, &r1, &coeffs), presented(&alg, &t2, &r2, &coeffs[coeffs.len() / 2..]))
        })
}

fn shape_strategy() -> impl Strategy<Value = Shape> {
    (1usize..=3, prop::collection::vec((0usize..3, 0usize..3), 0..=3), any::<u16>(), any::<bool>()).prop_map(
        |(vertices, arrows, mask, cube)| {
            let arrows: Vec<(usize, usize)> = arrows.into_iter().map(|(s, t)| (s % vertices, t % vertices)).collect();
            let composable: Vec<(usize, usize)> = (0..arrows.len())
                .flat_map(|x| (0..arrows.len()).map(move |y| (x, y)))
                .filter(|&(x, y)| arrows[x].1 == arrows[y].0)
                .collect();
            let relations = if cube {
                composable.into_iter().enumerate().filter(|(i, _)| mask >> (i % 16) & 1 == 1).map(|(_, r)| r).collect()
            } else {
                composable
            };
            Shape { vertices, arrows, relations, nilpotency: if cube { 3 } else { 2 } }
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hom_dimension_is_dual_invariant((m, n) in pair_strategy()) {
        let forward = hom_space(&m, &n).unwrap().dim();
        let backward = hom_space(&dual(&n), &dual(&m)).unwrap().dim();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn double_dual_is_identity(m in module_strategy()) {
        let dd = dual(&dual(&m));
        prop_assert!(dd.algebra().same_as(m.algebra()));
        prop_assert!(is_isomorphic(&dd, &m).unwrap());
    }

    #[test]
    fn decomposition_parts_sum_back(m in module_strategy()) {
        let parts = decompose(&m).unwrap().parts();
        let mut dims = vec![0; m.dims().len()];
        for p in &parts {
            prop_assert!(decompose(p).unwrap().is_indecomposable());
            for (d, x) in dims.iter_mut().zip(p.dims()) {
                *d += x;
            }
        }
        prop_assert_eq!(dims.as_slice(), m.dims());
    }

    #[test]
    fn resolutions_are_exact(m in module_strategy()) {
        let proj = min_proj_resolution(&m, 3);
        prop_assert!(proj.is_exact());
        prop_assert!(proj.terms.iter().all(Module::is_projective));
        let inj = min_inj_resolution(&m, 3);
        prop_assert!(inj.is_exact());
        prop_assert!(inj.terms.iter().all(Module::is_injective));
    }

    #[test]
    fn shape_files_round_trip(shape in shape_strategy()) {
        let file = AlgebraFile { field: Field::gf2(), presentation: shape.presentation() };
        let text = file.to_text();
        let parsed = AlgebraFile::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &file);
        prop_assert_eq!(parsed.to_text(), text);
        let built = build_algebra(&shape.presentation(), Field::gf2()).unwrap();
        prop_assert!(parsed.build().unwrap().same_as(&built));
    }

    #[test]
    fn canonical_form_ignores_labels(shape in shape_strategy(), seed in any::<u64>()) {
        // relabel vertices by rotation and arrows by reversal
        let shift = (seed % 3) as usize;
        let n = shape.arrows.len();
        let relabeled = Shape {
            vertices: shape.vertices,
            arrows: shape.arrows.iter().rev().map(|&(s, t)| ((s + shift) % shape.vertices, (t + shift) % shape.vertices)).collect(),
            relations: shape.relations.iter().map(|&(x, y)| (n - 1 - x, n - 1 - y)).collect(),
            nilpotency: shape.nilpotency,
        };
        prop_assert_eq!(relabeled.canonical(), shape.canonical());
    }
}
