use std::collections::BTreeMap;

use super::{dual, map_from_projective_sum, projective_sum, CoverCache, Module, Morphism, TopCache};
use crate::linalg::{quotient_with_section, Matrix, Scalar};

pub(crate) fn compute_top(m: &Module) -> TopCache {
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.num_vertices();
    let mut projection = Vec::with_capacity(nv);
    let mut section = Vec::with_capacity(nv);
    let mut radical = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut rad = Matrix::zeros(f, 0, m.dim_at(v));
        for a in 0..alg.num_arrows() {
            if alg.arrow(a).target == v {
                rad = rad.vstack(m.action(a));
            }
        }
        let rad = rad.row_space();
        let q = quotient_with_section(f, m.dim_at(v), &rad).expect("radical width");
        projection.push(q.projection);
        section.push(q.section);
        radical.push(rad);
    }
    TopCache { projection, section, radical }
}

pub(crate) fn compute_cover(m: &Module) -> CoverCache {
    let alg = m.algebra();
    let top = m.top_cache();
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for (v, sec) in top.section.iter().enumerate() {
        for row in sec.row_vecs() {
            summands.push(v);
            generators.push(row);
        }
    }
    let cover = projective_sum(alg, &summands);
    let epi = map_from_projective_sum(&cover, &summands, m, &generators);
    let (kernel, inclusion) = epi.kernel();
    let lift = epi.components().iter().map(right_inverse).collect();
    CoverCache {
        summands,
        generators,
        cover,
        epi: epi.components().to_vec(),
        lift,
        kernel,
        inclusion: inclusion.components().to_vec(),
    }
}

/// `R` with `R · e = I` for a matrix `e` of full column rank, supported on
/// a maximal set of independent rows of `e`.
fn right_inverse(e: &Matrix) -> Matrix {
    let rows = e.transpose().row_reduce().pivots;
    let square = e.select_rows(&rows).inverse().expect("independent rows");
    let mut r = Matrix::zeros(e.field(), e.cols(), e.rows());
    for (k, &i) in rows.iter().enumerate() {
        for c in 0..e.cols() {
            r.set(c, i, square.get(c, k).clone());
        }
    }
    r
}

/// Minimal projective cover `P(m) ↠ m`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub epi: Morphism,
    /// Vertex of each indecomposable summand `P_v` of the cover, in order.
    pub summands: Vec<usize>,
    /// Image of the generator `e_v` of each summand.
    pub generators: Vec<Vec<Scalar>>,
}

impl ProjectiveCover {
    pub fn module(&self) -> &Module {
        self.epi.source()
    }

    /// Multiplicity of each `P_v`, indexed by vertex.
    pub fn multiplicities(&self) -> Vec<usize> {
        let nv = self.epi.target().algebra().num_vertices();
        let mut mult = vec![0; nv];
        for &v in &self.summands {
            mult[v] += 1;
        }
        mult
    }
}

pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let c = m.cover_cache();
    ProjectiveCover {
        epi: Morphism::from_parts(c.cover.clone(), m.clone(), c.epi.clone()),
        summands: c.summands.clone(),
        generators: c.generators.clone(),
    }
}

/// Minimal injective envelope `m ↪ I(m)`.
#[derive(Clone, Debug)]
pub struct InjectiveEnvelope {
    pub mono: Morphism,
    /// Vertex of each indecomposable summand `I_v`, in order.
    pub summands: Vec<usize>,
}

impl InjectiveEnvelope {
    pub fn module(&self) -> &Module {
        self.mono.target()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        let nv = self.mono.source().algebra().num_vertices();
        let mut mult = vec![0; nv];
        for &v in &self.summands {
            mult[v] += 1;
        }
        mult
    }
}

/// `D` of the projective cover of `D m` over the opposite algebra.
pub fn injective_envelope(m: &Module) -> InjectiveEnvelope {
    let cover = projective_cover(&dual(m));
    let mono = cover.epi.dual();
    let mono = mono.with_endpoints(m.clone(), mono.target().clone());
    InjectiveEnvelope { mono, summands: cover.summands }
}

impl Module {
    /// `m·J` with its inclusion.
    pub fn radical(&self) -> (Module, Morphism) {
        let spans = self.top_cache().radical.clone();
        self.submodule(&spans)
    }

    /// `m / m·J` with its projection.
    pub fn top(&self) -> (Module, Morphism) {
        let spans = self.top_cache().radical.clone();
        self.quotient(&spans)
    }

    /// Per-vertex row bases of the socle, the common kernel of all outgoing
    /// arrow actions.
    pub fn socle_spans(&self) -> Vec<Matrix> {
        let alg = self.algebra();
        let f = alg.field();
        (0..alg.num_vertices())
            .map(|v| {
                let mut out = Matrix::zeros(f, self.dim_at(v), 0);
                for a in 0..alg.num_arrows() {
                    if alg.arrow(a).source == v {
                        out = out.hstack(self.action(a));
                    }
                }
                out.left_kernel_basis().row_space()
            })
            .collect()
    }

    pub fn socle(&self) -> (Module, Morphism) {
        self.submodule(&self.socle_spans())
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spans().iter().map(Matrix::rows).collect()
    }

    /// The first syzygy `Ω m`, kernel of the projective cover.
    pub fn syzygy(&self) -> Module {
        self.cover_cache().kernel.clone()
    }

    pub fn syzygy_inclusion(&self) -> Morphism {
        let c = self.cover_cache();
        Morphism::from_parts(c.kernel.clone(), c.cover.clone(), c.inclusion.clone())
    }

    /// Top representatives grouped by vertex, as used by the cover.
    pub fn top_generators(&self) -> BTreeMap<usize, Vec<Vec<Scalar>>> {
        let c = self.cover_cache();
        let mut out: BTreeMap<usize, Vec<Vec<Scalar>>> = BTreeMap::new();
        for (v, g) in c.summands.iter().zip(&c.generators) {
            out.entry(*v).or_default().push(g.clone());
        }
        out
    }

    pub fn is_projective(&self) -> bool {
        self.syzygy().is_zero()
    }

    pub fn is_injective(&self) -> bool {
        dual(self).is_projective()
    }
}

/// Envelope built on the Λ side from functionals that restrict to a basis of
/// the dual of the socle. Agrees with [`injective_envelope`] up to
/// isomorphism.
pub fn injective_envelope_from_socle(m: &Module) -> InjectiveEnvelope {
    let alg = m.algebra();
    let f = alg.field();
    let op = alg.opposite();
    let nv = alg.num_vertices();
    let socle = m.socle_spans();
    // functionals: unit vectors at the socle pivots
    let mut summands = Vec::new();
    let mut functionals: Vec<(usize, usize)> = Vec::new();
    for (v, s) in socle.iter().enumerate() {
        for p in s.row_reduce().pivots {
            summands.push(v);
            functionals.push((v, p));
        }
    }
    let parts: Vec<Module> = summands.iter().map(|&v| super::injective(alg, v)).collect();
    let target = super::direct_sum(alg, &parts).module;
    let comps = (0..nv)
        .map(|w| {
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for &(v, p) in &functionals {
                for b in op.basis_between(v, w) {
                    let act = m.basis_action(b);
                    cols.push((0..m.dim_at(w)).map(|r| act.get(r, p).clone()).collect());
                }
            }
            Matrix::from_rows(f, m.dim_at(w), cols).expect("column length").transpose()
        })
        .collect();
    InjectiveEnvelope { mono: Morphism::from_parts(m.clone(), target, comps), summands }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{a2, loc3};
    use super::super::{dual_regular, injective, is_isomorphic, projective, simple, Module};
    use super::*;

    #[test]
    fn loc3_top_radical_socle() {
        let a = loc3();
        let l = Module::regular(&a);
        assert_eq!(l.top().0.dim(), 1);
        assert_eq!(l.radical().0.dim(), 2);
        assert_eq!(l.socle().0.dim(), 2);
        assert!(simple(&a, 0).radical().0.is_zero());
    }

    #[test]
    fn covers() {
        let a = loc3();
        let c = projective_cover(&simple(&a, 0));
        assert_eq!(c.module().dim(), 3);
        assert_eq!(simple(&a, 0).syzygy().dim(), 2);
        assert!(projective_cover(&Module::regular(&a)).epi.is_isomorphism());

        let b = a2();
        let d = dual_regular(&b);
        let c = projective_cover(&d);
        assert_eq!(c.summands, vec![0, 0]);
        assert!(c.epi.is_surjective());
    }

    #[test]
    fn cover_kernel_lies_in_radical() {
        let a = loc3();
        for m in [simple(&a, 0), injective(&a, 0), Module::regular(&a)] {
            let c = projective_cover(&m);
            let incl = c.module().top().1;
            assert!(m.syzygy_inclusion().compose(&incl).is_zero());
        }
    }

    #[test]
    fn envelopes() {
        let a = loc3();
        let l = Module::regular(&a);
        let env = injective_envelope(&l);
        assert_eq!(env.module().dim(), 6);
        assert_eq!(env.summands, vec![0, 0]);
        assert!(env.mono.is_injective());
        assert!(injective_envelope(&injective(&a, 0)).mono.is_isomorphism());

        let b = a2();
        let env = injective_envelope(&Module::regular(&b));
        assert_eq!(env.summands, vec![1, 1]);
        assert!(is_isomorphic(env.module(), &projective_sum(&b, &[0, 0])).unwrap());
    }

    #[test]
    fn both_envelope_routes_agree() {
        for a in [loc3(), a2()] {
            for m in [Module::regular(&a), simple(&a, 0), projective(&a, 0)] {
                let d = injective_envelope(&m);
                let s = injective_envelope_from_socle(&m);
                assert!(s.mono.is_injective());
                assert_eq!(d.summands, s.summands);
                assert_eq!(d.module().socle_dims(), m.socle_dims());
                let (cd, _) = d.mono.cokernel();
                let (cs, _) = s.mono.cokernel();
                assert!(is_isomorphic(&cd, &cs).unwrap());
            }
        }
    }
}
