use crate::linalg::{quotient_with_section, Matrix, Quotient, Scalar};
use crate::module::{hom_space, map_from_projective_sum, projective, projective_cover, HomSpace, Module, ModuleError, Morphism};

/// `Hom(m, n)` modulo the maps factoring through a projective.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub total: HomSpace,
    /// Coordinates (in `total`) of a basis of the factoring maps.
    pub factoring: Matrix,
    quotient: Quotient,
}

impl StableHom {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Coordinates of the stable class of `f` in the canonical quotient basis.
    pub fn class_coordinates(&self, f: &Morphism) -> Vec<Scalar> {
        let field = self.total.source().algebra().field();
        let c = self.total.coordinates(f);
        Matrix::row_vector(field, c).mul(&self.quotient.projection).row(0).to_vec()
    }

    /// A representative of the `k`-th basis class.
    pub fn representative(&self, k: usize) -> Morphism {
        self.total.combine(self.quotient.section.row(k))
    }

    pub fn is_stably_zero(&self, f: &Morphism) -> bool {
        self.class_coordinates(f).iter().all(Scalar::is_zero)
    }
}

/// Maps factoring through a projective are exactly those factoring through
/// the projective cover of the target.
pub fn stable_hom(m: &Module, n: &Module) -> Result<StableHom, ModuleError> {
    let total = hom_space(m, n)?;
    let f = m.algebra().field();
    let mut rows = Vec::new();
    if total.dim() > 0 && !n.is_projective() {
        // Hom(m, ⊕ P_v) splits over the summands of the cover
        let alg = m.algebra();
        let cover = projective_cover(n);
        let mut into: Vec<Option<Vec<Morphism>>> = vec![None; alg.num_vertices()];
        for (&v, gen) in cover.summands.iter().zip(&cover.generators) {
            let p = projective(alg, v);
            let maps = match &into[v] {
                Some(maps) => maps,
                None => into[v].insert(hom_space(m, &p)?.morphisms()),
            };
            let onto = map_from_projective_sum(&p, &[v], n, std::slice::from_ref(gen));
            for g in maps {
                rows.push(total.coordinates(&g.compose(&onto)));
            }
        }
    } else if n.is_projective() {
        rows = (0..total.dim())
            .map(|k| {
                let mut e = vec![f.zero(); total.dim()];
                e[k] = f.one();
                e
            })
            .collect();
    }
    let factoring = Matrix::from_rows(f, total.dim(), rows)?.row_space();
    let quotient = quotient_with_section(f, total.dim(), &factoring)?;
    Ok(StableHom { total, factoring, quotient })
}

/// Lifts `f: m → n` to the projective covers and restricts to the
/// syzygies, giving a map `Ω m → Ω n` determined up to maps factoring
/// through a projective.
pub fn syzygy_induced_map(f: &Morphism) -> Morphism {
    let (m, n) = (f.source(), f.target());
    let cm = projective_cover(m);
    let cn = projective_cover(n);
    let images: Vec<Vec<Scalar>> = cm
        .summands
        .iter()
        .zip(&cm.generators)
        .map(|(&v, g)| {
            let target = f.component(v).apply(g);
            cn.epi.component(v).solve_left(&target).expect("shape").expect("cover is surjective")
        })
        .collect();
    let lift = map_from_projective_sum(cm.module(), &cm.summands, cn.module(), &images);
    let (om, on) = (m.syzygy(), n.syzygy());
    let restricted = m.syzygy_inclusion().compose(&lift);
    let inclusion_n = n.syzygy_inclusion();
    let comps = (0..m.algebra().num_vertices())
        .map(|v| {
            let basis = inclusion_n.component(v);
            let pivots = basis.row_reduce().pivots;
            let coords = restricted.component(v).select_cols(&pivots);
            debug_assert_eq!(coords.mul(basis), *restricted.component(v));
            coords
        })
        .collect();
    Morphism::new(om, on, comps).expect("restriction of a lift is a module map")
}

/// The linear map `Hom(a, b)/P → Hom(Ω a, Ω b)/P` induced by [`syzygy_induced_map`],
/// in canonical quotient coordinates (rows are images of basis classes).
pub fn syzygy_stable_map(a: &Module, b: &Module) -> Result<(StableHom, StableHom, Matrix), ModuleError> {
    let before = stable_hom(a, b)?;
    let after = stable_hom(&a.syzygy(), &b.syzygy())?;
    let field = a.algebra().field();
    let rows: Vec<Vec<Scalar>> =
        (0..before.dim()).map(|k| after.class_coordinates(&syzygy_induced_map(&before.representative(k)))).collect();
    let map = Matrix::from_rows(field, after.dim(), rows)?;
    Ok((before, after, map))
}
