use std::fmt;

use super::{dual, Module, ModuleError};
use crate::linalg::{Matrix, Scalar};

/// A module homomorphism, stored as one matrix per vertex
/// (`dims_src(v) × dims_tgt(v)`). Composition follows the row convention:
/// `f.compose(&g)` is "first `f`, then `g`" with components `F_v · G_v`.
#[derive(Clone)]
pub struct Morphism {
    source: Module,
    target: Module,
    components: Vec<Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({:?} -> {:?})", self.source.dims(), self.target.dims())
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.components == other.components
    }
}

impl Morphism {
    /// Checked constructor: shapes and `F_i M^tgt_a = M^src_a F_j` for every
    /// arrow `a: i → j`.
    pub fn new(source: Module, target: Module, components: Vec<Matrix>) -> Result<Morphism, ModuleError> {
        if !source.same_algebra(&target) {
            return Err(ModuleError::AlgebraMismatch);
        }
        let alg = source.algebra().clone();
        if components.len() != alg.num_vertices() {
            return Err(ModuleError::Shape(format!("expected {} components", alg.num_vertices())));
        }
        for (v, c) in components.iter().enumerate() {
            if c.rows() != source.dim_at(v) || c.cols() != target.dim_at(v) {
                return Err(ModuleError::Shape(format!("component at vertex {v} has the wrong shape")));
            }
        }
        let m = Morphism { source, target, components };
        for a in 0..alg.num_arrows() {
            let arrow = alg.arrow(a);
            let lhs = m.components[arrow.source].mul(m.target.action(a));
            let rhs = m.source.action(a).mul(&m.components[arrow.target]);
            if lhs != rhs {
                return Err(ModuleError::NotIntertwining(arrow.name.clone()));
            }
        }
        Ok(m)
    }

    pub(crate) fn from_parts(source: Module, target: Module, components: Vec<Matrix>) -> Morphism {
        debug_assert!(Morphism::new(source.clone(), target.clone(), components.clone()).is_ok());
        Morphism { source, target, components }
    }

    pub fn identity(m: &Module) -> Morphism {
        let f = m.algebra().field();
        let comps = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        Morphism { source: m.clone(), target: m.clone(), components: comps }
    }

    pub fn zero(source: &Module, target: &Module) -> Morphism {
        let f = source.algebra().field();
        let comps = source.dims().iter().zip(target.dims()).map(|(&r, &c)| Matrix::zeros(f, r, c)).collect();
        Morphism { source: source.clone(), target: target.clone(), components: comps }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    /// First `self`, then `next`.
    pub fn compose(&self, next: &Morphism) -> Morphism {
        assert_eq!(self.target.dims(), next.source.dims(), "morphisms are not composable");
        let comps = self.components.iter().zip(&next.components).map(|(a, b)| a.mul(b)).collect();
        Morphism { source: self.source.clone(), target: next.target.clone(), components: comps }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let comps = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), components: comps }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        let comps = self.components.iter().zip(&other.components).map(|(a, b)| a.sub(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), components: comps }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let comps = self.components.iter().map(|a| a.scale(c)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), components: comps }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Components concatenated row-major, vertex by vertex.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.components.iter().flat_map(|c| c.entries().iter().cloned()).collect()
    }

    pub(crate) fn from_flat(source: &Module, target: &Module, flat: &[Scalar]) -> Morphism {
        let f = source.algebra().field();
        let mut comps = Vec::with_capacity(source.dims().len());
        let mut at = 0;
        for (&r, &c) in source.dims().iter().zip(target.dims()) {
            comps.push(Matrix::from_vec(f, r, c, flat[at..at + r * c].to_vec()).expect("flat length"));
            at += r * c;
        }
        Morphism { source: source.clone(), target: target.clone(), components: comps }
    }

    pub fn kernel(&self) -> (Module, Morphism) {
        let spans: Vec<Matrix> = self.components.iter().map(Matrix::left_kernel_basis).collect();
        self.source.submodule(&spans)
    }

    pub fn image(&self) -> (Module, Morphism) {
        let spans: Vec<Matrix> = self.components.iter().map(Matrix::row_space).collect();
        self.target.submodule(&spans)
    }

    pub fn cokernel(&self) -> (Module, Morphism) {
        let spans: Vec<Matrix> = self.components.iter().map(Matrix::row_space).collect();
        self.target.quotient(&spans)
    }

    /// The dual map `D(target) → D(source)`, transposed components.
    pub fn dual(&self) -> Morphism {
        let comps = self.components.iter().map(Matrix::transpose).collect();
        Morphism { source: dual(&self.target), target: dual(&self.source), components: comps }
    }

    /// Precomposition with an isomorphic copy: same matrices, new endpoints.
    pub(crate) fn with_endpoints(&self, source: Module, target: Module) -> Morphism {
        Morphism::from_parts(source, target, self.components.clone())
    }
}
