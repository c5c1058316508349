use crate::linalg::{quotient_with_section, Matrix, Quotient, Scalar};
use crate::module::{
    direct_sum, hom_space, map_from_projective_sum, projective_cover, HomSpace, Module, ModuleError, Morphism,
};

use super::resolution::syzygy_power;

/// `Ext^i(m, n)` presented as `Hom(Ω^i m, n)` modulo the maps that extend
/// to the projective cover of `Ω^{i-1} m`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub source: Module,
    pub target: Module,
    pub degree: usize,
    /// `Hom(Ω^i m, n)`.
    pub cocycles: HomSpace,
    /// Coordinates (in `cocycles`) of a basis of the coboundaries.
    pub coboundaries: Matrix,
    quotient: Quotient,
    /// Cover `P_{i-1} ↠ Ω^{i-1} m` and the inclusion `Ω^i m ↪ P_{i-1}`,
    /// absent in degree zero.
    inclusion: Option<Morphism>,
}

/// A single class of `Ext^i(m, n)` represented by a cocycle `Ω^i m → n`.
#[derive(Clone, Debug)]
pub struct ExtClass {
    pub source: Module,
    pub target: Module,
    pub degree: usize,
    pub cocycle: Morphism,
    /// `Ω^i m ↪ P_{i-1}` for degree at least one.
    pub inclusion: Option<Morphism>,
}

/// Short exact sequence `0 → n → E → m → 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub mono: Morphism,
    pub epi: Morphism,
}

impl ShortExactSequence {
    pub fn middle(&self) -> &Module {
        self.mono.target()
    }

    /// Whether `epi` has a section, i.e. the sequence splits.
    pub fn splits(&self) -> Result<bool, ModuleError> {
        let back = hom_space(self.epi.target(), self.epi.source())?;
        let id = Morphism::identity(self.epi.target());
        let composites: Vec<Vec<Scalar>> = back.morphisms().iter().map(|s| s.compose(&self.epi).flatten()).collect();
        let f = self.epi.target().algebra().field();
        let len = id.flatten().len();
        let system = Matrix::from_rows(f, len, composites)?;
        Ok(system.solve_left(&id.flatten())?.is_some())
    }
}

pub fn ext(m: &Module, n: &Module, degree: usize) -> Result<ExtGroup, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let f = m.algebra().field();
    if degree == 0 {
        let cocycles = hom_space(m, n)?;
        let coboundaries = Matrix::zeros(f, 0, cocycles.dim());
        let quotient = quotient_with_section(f, cocycles.dim(), &coboundaries)?;
        return Ok(ExtGroup { source: m.clone(), target: n.clone(), degree, cocycles, coboundaries, quotient, inclusion: None });
    }
    let previous = syzygy_power(m, degree - 1);
    let kernel = previous.syzygy();
    let inclusion = previous.syzygy_inclusion();
    let cocycles = hom_space(&kernel, n)?;
    let cover = projective_cover(&previous);
    // Hom(P, n) has a basis indexed by a summand and a vector of n there
    let mut rows = Vec::new();
    if cocycles.dim() > 0 {
        for (s, &v) in cover.summands.iter().enumerate() {
            for k in 0..n.dim_at(v) {
                let images: Vec<Vec<Scalar>> = cover
                    .summands
                    .iter()
                    .enumerate()
                    .map(|(t, &w)| {
                        let mut x = vec![f.zero(); n.dim_at(w)];
                        if t == s {
                            x[k] = f.one();
                        }
                        x
                    })
                    .collect();
                let phi = map_from_projective_sum(cover.module(), &cover.summands, n, &images);
                rows.push(cocycles.coordinates(&inclusion.compose(&phi)));
            }
        }
    }
    let coboundaries = Matrix::from_rows(f, cocycles.dim(), rows)?.row_space();
    let quotient = quotient_with_section(f, cocycles.dim(), &coboundaries)?;
    Ok(ExtGroup {
        source: m.clone(),
        target: n.clone(),
        degree,
        cocycles,
        coboundaries,
        quotient,
        inclusion: Some(inclusion),
    })
}

/// Dimensions of `Ext^i(m, n)` for `i = 1..=max_degree`.
pub fn ext_dims(m: &Module, n: &Module, max_degree: usize) -> Result<Vec<usize>, ModuleError> {
    (1..=max_degree).map(|i| ext(m, n, i).map(|e| e.dim())).collect()
}

impl ExtGroup {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The class with the given coordinates in the canonical quotient basis.
    pub fn class(&self, coeffs: &[Scalar]) -> ExtClass {
        let f = self.source.algebra().field();
        let lifted = Matrix::row_vector(f, coeffs.to_vec()).mul(&self.quotient.section);
        ExtClass {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            cocycle: self.cocycles.combine(lifted.row(0)),
            inclusion: self.inclusion.clone(),
        }
    }

    /// Representatives of a basis of the group.
    pub fn basis_classes(&self) -> Vec<ExtClass> {
        let f = self.source.algebra().field();
        (0..self.dim())
            .map(|k| {
                let mut c = vec![f.zero(); self.dim()];
                c[k] = f.one();
                self.class(&c)
            })
            .collect()
    }

    pub fn zero_class(&self) -> ExtClass {
        let f = self.source.algebra().field();
        self.class(&vec![f.zero(); self.dim()])
    }

    /// Coordinates of the class of a cocycle `Ω^i m → n`.
    pub fn class_coordinates(&self, cocycle: &Morphism) -> Vec<Scalar> {
        let f = self.source.algebra().field();
        let c = self.cocycles.coordinates(cocycle);
        Matrix::row_vector(f, c).mul(&self.quotient.projection).row(0).to_vec()
    }
}

/// The middle term of the extension of `m` by `n` given by a degree-one
/// class: the pushout of `Ω m ↪ P(m)` along the cocycle.
pub fn extension_middle_term(class: &ExtClass) -> Result<ShortExactSequence, ModuleError> {
    if class.degree != 1 {
        return Err(ModuleError::Shape(format!("extension classes have degree 1, got {}", class.degree)));
    }
    let m = &class.source;
    let n = &class.target;
    let alg = m.algebra();
    let f = alg.field();
    let inclusion = class.inclusion.as_ref().expect("degree one carries the inclusion");
    let cover = projective_cover(m);
    let p = cover.module();
    let sum = direct_sum(alg, &[p.clone(), n.clone()]);
    // the submodule {(ι k, −c k)} of P ⊕ n
    let spans: Vec<Matrix> = (0..alg.num_vertices())
        .map(|v| inclusion.component(v).hstack(&class.cocycle.component(v).scale(&f.from_i64(-1))))
        .collect();
    let (middle, quotient) = sum.module.quotient(&spans);
    let mono = sum.injections[1].compose(&quotient);
    // E → m induced by (π, 0) on P ⊕ n
    let to_m = sum.projections[0].compose(&cover.epi);
    let section_comps: Vec<Matrix> = (0..alg.num_vertices())
        .map(|v| {
            let q = crate::linalg::quotient_with_section(f, sum.module.dim_at(v), &spans[v]).expect("span width");
            q.section.mul(to_m.component(v))
        })
        .collect();
    let epi = Morphism::new(middle, m.clone(), section_comps)?;
    Ok(ShortExactSequence { mono, epi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::tests::{a2, loc3};
    use crate::module::{decompose, dual, is_isomorphic, projective, simple};

    #[test]
    fn loc3_ext_dimensions() {
        let a = loc3();
        let s = simple(&a, 0);
        let l = Module::regular(&a);
        assert_eq!(ext(&s, &l, 1).unwrap().dim(), 3);
        assert_eq!(ext(&s, &s, 1).unwrap().dim(), 2);
        assert_eq!(ext(&s, &s, 0).unwrap().dim(), 1);
        assert_eq!(ext(&l, &s, 1).unwrap().dim(), 0);
    }

    #[test]
    fn projectives_have_no_extensions() {
        let a = a2();
        for v in 0..2 {
            let p = projective(&a, v);
            for w in 0..2 {
                assert_eq!(ext_dims(&p, &simple(&a, w), 3).unwrap(), vec![0, 0, 0]);
            }
        }
        assert_eq!(ext(&simple(&a, 0), &simple(&a, 1), 1).unwrap().dim(), 1);
    }

    #[test]
    fn duality_transport() {
        let a = loc3();
        let s = simple(&a, 0);
        let l = Module::regular(&a);
        for i in 1..=3 {
            let lhs = ext(&s, &l, i).unwrap().dim();
            let rhs = ext(&dual(&l), &dual(&s), i).unwrap().dim();
            assert_eq!(lhs, rhs, "degree {i}");
        }
    }

    #[test]
    fn middle_terms() {
        let a = loc3();
        let s = simple(&a, 0);
        let e = ext(&s, &s, 1).unwrap();
        let zero = extension_middle_term(&e.zero_class()).unwrap();
        assert!(zero.splits().unwrap());
        let sum = crate::module::direct_sum(&a, &[s.clone(), s.clone()]).module;
        assert!(is_isomorphic(zero.middle(), &sum).unwrap());
        for class in e.basis_classes() {
            let seq = extension_middle_term(&class).unwrap();
            assert_eq!(seq.middle().dim(), 2);
            assert!(!seq.splits().unwrap());
            assert!(decompose(seq.middle()).unwrap().is_indecomposable());
            assert!(seq.mono.compose(&seq.epi).is_zero());
            assert!(seq.mono.is_injective() && seq.epi.is_surjective());
        }
    }
}
