use crate::algebra::SparseVec;
use crate::linalg::{Matrix, Scalar};
use crate::module::{
    direct_sum, hom_space, map_from_projective_sum, projective, projective_cover, projective_sum, HomSpace, Module,
    ModuleError, Morphism,
};

/// Minimal presentation `P_1 → P_0 → m → 0`.
///
/// `entries[t][s]` is the algebra element `λ_{ts} ∈ e_{v_s} Λ e_{u_t}` with
/// `d(e_{u_t}) = Σ_s e_{v_s} λ_{ts}`, where `u_t` runs over `p1_summands`
/// and `v_s` over `p0_summands`.
#[derive(Clone, Debug)]
pub struct MinimalPresentation {
    pub p0_summands: Vec<usize>,
    pub p1_summands: Vec<usize>,
    pub differential: Morphism,
    pub entries: Vec<Vec<SparseVec>>,
}

pub fn minimal_presentation(m: &Module) -> MinimalPresentation {
    let alg = m.algebra();
    let c0 = projective_cover(m);
    let omega = m.syzygy();
    let c1 = projective_cover(&omega);
    let differential = c1.epi.compose(&m.syzygy_inclusion());
    let inclusion = m.syzygy_inclusion();
    let mut entries = Vec::with_capacity(c1.summands.len());
    for (&u, g) in c1.summands.iter().zip(&c1.generators) {
        let y = inclusion.component(u).apply(g);
        let mut pos = 0;
        let mut row = Vec::with_capacity(c0.summands.len());
        for &v in &c0.summands {
            let mut lambda: SparseVec = Vec::new();
            for b in alg.basis_between(v, u) {
                if !y[pos].is_zero() {
                    lambda.push((b, y[pos].clone()));
                }
                pos += 1;
            }
            row.push(lambda);
        }
        entries.push(row);
    }
    MinimalPresentation { p0_summands: c0.summands, p1_summands: c1.summands, differential, entries }
}

/// `d^* : P_0^* → P_1^*` over the opposite algebra, where `P_v^* = Λ e_v`
/// is the opposite projective at `v`.
pub fn dual_differential(p: &MinimalPresentation, algebra: &std::sync::Arc<crate::algebra::Algebra>) -> Morphism {
    let op = algebra.opposite();
    let f = algebra.field();
    let source = projective_sum(&op, &p.p0_summands);
    let target = projective_sum(&op, &p.p1_summands);
    let comps = (0..algebra.num_vertices())
        .map(|w| {
            let cols: Vec<(usize, Vec<usize>)> =
                p.p1_summands.iter().map(|&u| (u, algebra.basis_between(w, u))).collect();
            let width: usize = cols.iter().map(|(_, b)| b.len()).sum();
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for (s, &v) in p.p0_summands.iter().enumerate() {
                for b in algebra.basis_between(w, v) {
                    let mut row = vec![f.zero(); width];
                    let mut offset = 0;
                    for (t, (_, basis)) in cols.iter().enumerate() {
                        for (k, c) in algebra.multiply_basis_sparse(b, &p.entries[t][s]) {
                            let j = basis.iter().position(|&x| x == k).expect("product stays in e_w Λ e_u");
                            row[offset + j] = f.add(&row[offset + j], &c);
                        }
                        offset += basis.len();
                    }
                    rows.push(row);
                }
            }
            Matrix::from_rows(f, width, rows).expect("row width")
        })
        .collect();
    Morphism::new(source, target, comps).expect("dual of a presentation map is a module map")
}

/// The Auslander–Bridger transpose `Tr m = Coker(d^*)`, a module over the
/// opposite algebra.
pub fn transpose(m: &Module) -> Module {
    let p = minimal_presentation(m);
    dual_differential(&p, m.algebra()).cokernel().0
}

/// `L_a: P_j → P_i`, left multiplication by the arrow `a: i → j`.
fn left_multiplication(m: &Module, a: usize) -> Morphism {
    let alg = m.algebra();
    let f = alg.field();
    let arrow = alg.arrow(a);
    let (pi, pj) = (projective(alg, arrow.source), projective(alg, arrow.target));
    let basis = alg.basis_between(arrow.source, arrow.target);
    let mut image = vec![f.zero(); basis.len()];
    for (k, c) in alg.arrow_element(a) {
        let j = basis.iter().position(|x| x == k).expect("arrow lies in e_i Λ e_j");
        image[j] = c.clone();
    }
    map_from_projective_sum(&pj, &[arrow.target], &pi, &[image])
}

/// `m^* = Hom(m, Λ)` as a module over the opposite algebra, with
/// `(m^*)_v = Hom(m, P_v)` in its canonical basis.
pub struct StarDual {
    pub module: Module,
    pub components: Vec<HomSpace>,
}

pub fn star_dual(m: &Module) -> Result<StarDual, ModuleError> {
    let alg = m.algebra();
    let op = alg.opposite();
    let nv = alg.num_vertices();
    let components: Vec<HomSpace> = (0..nv).map(|v| hom_space(m, &projective(alg, v))).collect::<Result<_, _>>()?;
    let dims: Vec<usize> = components.iter().map(HomSpace::dim).collect();
    let f = alg.field();
    let actions = (0..alg.num_arrows())
        .map(|a| {
            let arrow = alg.arrow(a);
            let la = left_multiplication(m, a);
            let rows: Vec<Vec<Scalar>> = components[arrow.target]
                .morphisms()
                .iter()
                .map(|phi| components[arrow.source].coordinates(&phi.compose(&la)))
                .collect();
            Matrix::from_rows(f, dims[arrow.source], rows).expect("row width")
        })
        .collect();
    Ok(StarDual { module: Module::new(op, dims, actions).expect("m^* satisfies the opposite relations"), components })
}

/// The evaluation map `m → m^{**}`.
pub fn evaluation_map(m: &Module) -> Result<Morphism, ModuleError> {
    let alg = m.algebra();
    let f = alg.field();
    let first = star_dual(m)?;
    let second = star_dual(&first.module)?;
    let nv = alg.num_vertices();
    let basis_maps: Vec<Vec<Morphism>> = first.components.iter().map(HomSpace::morphisms).collect();
    let comps = (0..nv)
        .map(|v| {
            let target = &second.components[v];
            let rows: Vec<Vec<Scalar>> = (0..m.dim_at(v))
                .map(|r| {
                    let mut x = vec![f.zero(); m.dim_at(v)];
                    x[r] = f.one();
                    // ψ_x at vertex w sends φ ∈ Hom(m, P_w) to φ(x) ∈ e_w Λ e_v
                    let psi: Vec<Matrix> = (0..nv)
                        .map(|w| {
                            let images: Vec<Vec<Scalar>> =
                                basis_maps[w].iter().map(|phi| phi.component(v).apply(&x)).collect();
                            Matrix::from_rows(f, target.target().dim_at(w), images).expect("row width")
                        })
                        .collect();
                    let psi = Morphism::new(first.module.clone(), target.target().clone(), psi).expect("evaluation is linear");
                    target.coordinates(&psi)
                })
                .collect();
            Matrix::from_rows(f, target.dim(), rows).expect("row width")
        })
        .collect();
    Morphism::new(m.clone(), second.module, comps)
}

/// Per-vertex basis of the kernel of evaluation: vectors killed by every
/// map into `Λ`.
pub fn torsion_spans(m: &Module) -> Result<Vec<Matrix>, ModuleError> {
    let alg = m.algebra();
    let f = alg.field();
    let mut stacked: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
    for v in 0..alg.num_vertices() {
        for phi in hom_space(m, &projective(alg, v))?.morphisms() {
            for (w, s) in stacked.iter_mut().enumerate() {
                *s = s.hstack(phi.component(w));
            }
        }
    }
    Ok(stacked.iter().map(Matrix::left_kernel_basis).collect())
}

/// Whether `m` embeds in a projective module.
pub fn is_torsionless(m: &Module) -> Result<bool, ModuleError> {
    Ok(torsion_spans(m)?.iter().all(|s| s.rows() == 0))
}

/// Minimal left `add Λ`-approximation `m → Q`, from a minimal generating
/// set of `m^*`.
#[derive(Clone, Debug)]
pub struct LeftApproximation {
    pub map: Morphism,
    pub summands: Vec<usize>,
}

pub fn left_approximation(m: &Module) -> Result<LeftApproximation, ModuleError> {
    let alg = m.algebra();
    let f = alg.field();
    let star = star_dual(m)?;
    let generators = star.module.top_generators();
    let mut summands = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    for (v, gens) in generators {
        for g in gens {
            summands.push(v);
            maps.push(star.components[v].combine(&g));
        }
    }
    let parts: Vec<Module> = summands.iter().map(|&v| projective(alg, v)).collect();
    let sum = direct_sum(alg, &parts);
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let mut c = Matrix::zeros(f, m.dim_at(w), 0);
            for phi in &maps {
                c = c.hstack(phi.component(w));
            }
            c
        })
        .collect();
    Ok(LeftApproximation { map: Morphism::new(m.clone(), sum.module, comps)?, summands })
}
