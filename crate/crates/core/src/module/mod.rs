//! The category of finitely generated right modules, as quiver
//! representations.
//!
//! A module assigns a vector space to every vertex and a matrix to every
//! arrow `a: i → j`; vectors are rows and act by `v · a = v · M_a`, so the
//! action of a path is the product of its arrow matrices in path order.

mod decompose;
mod hom;
mod morphism;
mod structure;

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::algebra::{Algebra, Path};
use crate::linalg::{LinalgError, Matrix, Scalar};

pub use decompose::{decompose, decompose_with, is_isomorphic, is_isomorphic_with, Decomposition, SearchBudget};
pub(crate) use decompose::CoefficientPatterns;
pub use hom::{hom_space, HomSpace};
pub use morphism::Morphism;
pub use structure::{
    injective_envelope, injective_envelope_from_socle, projective_cover, InjectiveEnvelope, ProjectiveCover,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("relation `{0}` is not satisfied")]
    RelationViolated(String),
    #[error("morphism does not intertwine the action of arrow `{0}`")]
    NotIntertwining(String),
    #[error("no splitting idempotent found within the search budget (module of dimension {0})")]
    DecomposeInconclusive(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) struct CoverCache {
    pub summands: Vec<usize>,
    pub generators: Vec<Vec<Scalar>>,
    pub cover: Module,
    pub epi: Vec<Matrix>,
    /// Per vertex a right inverse of `epi`: `lift · epi = I`.
    pub lift: Vec<Matrix>,
    pub kernel: Module,
    pub inclusion: Vec<Matrix>,
}

pub(crate) struct TopCache {
    /// Per vertex: `dims(v) × top(v)` projection onto the top.
    pub projection: Vec<Matrix>,
    /// Per vertex: `top(v) × dims(v)` representatives of a top basis.
    pub section: Vec<Matrix>,
    /// Per vertex: row basis of the radical.
    pub radical: Vec<Matrix>,
}

struct ModuleData {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    actions: Vec<Matrix>,
    cover: OnceLock<Arc<CoverCache>>,
    top: OnceLock<Arc<TopCache>>,
    basis_actions: OnceLock<Vec<Matrix>>,
}

/// A finite-dimensional right module over an [`Algebra`]. Cheap to clone.
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.algebra.same_as(&other.0.algebra)
                && self.0.dims == other.0.dims
                && self.0.actions == other.0.actions)
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dims={:?})", self.0.dims)
    }
}

impl Module {
    /// Builds a representation after checking shapes and every relation
    /// (including the vanishing of all paths of length `N`).
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, actions: Vec<Matrix>) -> Result<Module, ModuleError> {
        if dims.len() != algebra.num_vertices() {
            return Err(ModuleError::Shape(format!(
                "expected {} vertex dimensions, got {}",
                algebra.num_vertices(),
                dims.len()
            )));
        }
        if actions.len() != algebra.num_arrows() {
            return Err(ModuleError::Shape(format!(
                "expected {} arrow matrices, got {}",
                algebra.num_arrows(),
                actions.len()
            )));
        }
        for (a, m) in actions.iter().enumerate() {
            let arrow = algebra.arrow(a);
            if m.rows() != dims[arrow.source] || m.cols() != dims[arrow.target] || m.field() != algebra.field() {
                return Err(ModuleError::Shape(format!("matrix of arrow `{}` has the wrong shape", arrow.name)));
            }
        }
        let module = Module::from_parts(algebra, dims, actions);
        module.check_relations()?;
        Ok(module)
    }

    pub(crate) fn from_parts(algebra: Arc<Algebra>, dims: Vec<usize>, actions: Vec<Matrix>) -> Module {
        debug_assert_eq!(dims.len(), algebra.num_vertices());
        debug_assert_eq!(actions.len(), algebra.num_arrows());
        Module(Arc::new(ModuleData { algebra, dims, actions, cover: OnceLock::new(), top: OnceLock::new(), basis_actions: OnceLock::new() }))
    }

    fn check_relations(&self) -> Result<(), ModuleError> {
        let alg = self.algebra();
        let pres = alg.presentation();
        let f = alg.field();
        for rel in &pres.relations {
            let (s, t) = pres.relation_endpoints(rel).expect("validated presentation");
            let mut sum = Matrix::zeros(f, self.dim_at(s), self.dim_at(t));
            for term in &rel.terms {
                let c = f.from_rational(&term.coefficient)?;
                let m = self.path_action(&Path { source: s, target: t, arrows: term.path.clone() });
                sum = sum.add(&m.scale(&c));
            }
            if !sum.is_zero() {
                return Err(ModuleError::RelationViolated(pres.relation_text(rel)));
            }
        }
        // paths of length N act by zero
        let n = pres.nilpotency;
        let mut layer: Vec<(usize, Matrix)> =
            (0..alg.num_vertices()).map(|v| (v, Matrix::identity(f, self.dim_at(v)))).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for (v, m) in &layer {
                for (a, arrow) in pres.arrows.iter().enumerate() {
                    if arrow.source == *v {
                        let prod = m.mul(&self.0.actions[a]);
                        if !prod.is_zero() {
                            next.push((arrow.target, prod));
                        }
                    }
                }
            }
            layer = next;
        }
        if !layer.is_empty() {
            return Err(ModuleError::RelationViolated(format!("paths of length {n} act by zero")));
        }
        Ok(())
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Module {
        let f = algebra.field();
        let dims = vec![0; algebra.num_vertices()];
        let actions = (0..algebra.num_arrows()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module::from_parts(algebra.clone(), dims, actions)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn action(&self, a: usize) -> &Matrix {
        &self.0.actions[a]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.actions
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        self.algebra().same_as(other.algebra())
    }

    /// Matrix of the action of a path, `dims(source) × dims(target)`.
    pub fn path_action(&self, path: &Path) -> Matrix {
        let f = self.algebra().field();
        let mut m = Matrix::identity(f, self.dim_at(path.source));
        for &a in &path.arrows {
            m = m.mul(self.action(a));
        }
        m
    }

    /// Matrix of the action of the `i`-th algebra basis element.
    pub fn basis_action(&self, i: usize) -> Matrix {
        self.basis_actions()[i].clone()
    }

    /// Action matrices of all algebra basis elements, computed once.
    pub fn basis_actions(&self) -> &[Matrix] {
        self.0.basis_actions.get_or_init(|| self.algebra().basis().iter().map(|p| self.path_action(p)).collect())
    }

    /// Offset of vertex `v` in the flat coordinate vector of the module.
    pub fn vertex_offset(&self, v: usize) -> usize {
        self.0.dims[..v].iter().sum()
    }

    /// Submodule spanned by the given per-vertex row vectors, with its
    /// inclusion. The spans must be closed under the arrow actions.
    pub fn submodule(&self, spans: &[Matrix]) -> (Module, Morphism) {
        let alg = self.algebra();
        let mut bases = Vec::with_capacity(spans.len());
        let mut pivots = Vec::with_capacity(spans.len());
        for s in spans {
            let ech = s.row_reduce();
            bases.push(ech.reduced.submatrix(0, ech.rank, 0, s.cols()));
            pivots.push(ech.pivots);
        }
        let dims: Vec<usize> = bases.iter().map(Matrix::rows).collect();
        let mut actions = Vec::with_capacity(alg.num_arrows());
        for a in 0..alg.num_arrows() {
            let arrow = alg.arrow(a);
            let image = bases[arrow.source].mul(self.action(a));
            let coords = image.select_cols(&pivots[arrow.target]);
            debug_assert_eq!(coords.mul(&bases[arrow.target]), image, "span is not a submodule");
            actions.push(coords);
        }
        let sub = Module::from_parts(alg.clone(), dims, actions);
        let incl = Morphism::from_parts(sub.clone(), self.clone(), bases);
        (sub, incl)
    }

    /// Quotient by the submodule spanned by the given per-vertex rows, with
    /// the projection.
    pub fn quotient(&self, spans: &[Matrix]) -> (Module, Morphism) {
        let alg = self.algebra();
        let f = alg.field();
        let quotients: Vec<_> = spans
            .iter()
            .enumerate()
            .map(|(v, s)| crate::linalg::quotient_with_section(f, self.dim_at(v), s).expect("span width"))
            .collect();
        let dims: Vec<usize> = quotients.iter().map(|q| q.dim()).collect();
        let actions = (0..alg.num_arrows())
            .map(|a| {
                let arrow = alg.arrow(a);
                quotients[arrow.source].section.mul(self.action(a)).mul(&quotients[arrow.target].projection)
            })
            .collect();
        let q = Module::from_parts(alg.clone(), dims, actions);
        let proj = Morphism::from_parts(self.clone(), q.clone(), quotients.into_iter().map(|q| q.projection).collect());
        (q, proj)
    }

    /// The regular representation as a right module over itself.
    pub fn regular(algebra: &Arc<Algebra>) -> Module {
        let summands: Vec<usize> = (0..algebra.num_vertices()).collect();
        projective_sum(algebra, &summands)
    }

    pub(crate) fn cover_cache(&self) -> &Arc<CoverCache> {
        self.0.cover.get_or_init(|| Arc::new(structure::compute_cover(self)))
    }

    pub(crate) fn top_cache(&self) -> &Arc<TopCache> {
        self.0.top.get_or_init(|| Arc::new(structure::compute_top(self)))
    }

    /// Dimension vector of the top `m / mJ`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.top_cache().section.iter().map(Matrix::rows).collect()
    }

    pub fn is_semisimple(&self) -> bool {
        self.0.actions.iter().all(Matrix::is_zero)
    }
}

/// The indecomposable projective `P_v = e_v Λ`: basis the basis paths
/// starting at `v`, acted on by right multiplication.
pub fn projective(algebra: &Arc<Algebra>, v: usize) -> Module {
    let f = algebra.field();
    let nv = algebra.num_vertices();
    let spaces: Vec<Vec<usize>> = (0..nv).map(|w| algebra.basis_between(v, w)).collect();
    let dims: Vec<usize> = spaces.iter().map(Vec::len).collect();
    let actions = (0..algebra.num_arrows())
        .map(|a| {
            let arrow = algebra.arrow(a);
            let (src, tgt) = (&spaces[arrow.source], &spaces[arrow.target]);
            let mut m = Matrix::zeros(f, src.len(), tgt.len());
            for (r, &b) in src.iter().enumerate() {
                for (k, c) in algebra.multiply_basis_sparse(b, algebra.arrow_element(a)) {
                    let col = tgt.iter().position(|&x| x == k).expect("product stays in e_v Λ e_w");
                    m.set(r, col, c);
                }
            }
            m
        })
        .collect();
    Module::from_parts(algebra.clone(), dims, actions)
}

/// Direct sum of indecomposable projectives, one `P_v` per entry.
pub fn projective_sum(algebra: &Arc<Algebra>, summands: &[usize]) -> Module {
    let parts: Vec<Module> = summands.iter().map(|&v| projective(algebra, v)).collect();
    direct_sum(algebra, &parts).module
}

pub fn simple(algebra: &Arc<Algebra>, v: usize) -> Module {
    let f = algebra.field();
    let mut dims = vec![0; algebra.num_vertices()];
    dims[v] = 1;
    let actions = (0..algebra.num_arrows())
        .map(|a| {
            let arrow = algebra.arrow(a);
            Matrix::zeros(f, dims[arrow.source], dims[arrow.target])
        })
        .collect();
    Module::from_parts(algebra.clone(), dims, actions)
}

/// `I_v = D(Λ e_v)`, the dual of the opposite algebra's projective at `v`.
pub fn injective(algebra: &Arc<Algebra>, v: usize) -> Module {
    dual(&projective(&algebra.opposite(), v))
}

/// `DΛ`, the direct sum of all indecomposable injectives.
pub fn dual_regular(algebra: &Arc<Algebra>) -> Module {
    dual(&Module::regular(&algebra.opposite()))
}

/// The vector-space duality `D = Hom_k(−, k)`, landing in modules over the
/// opposite algebra. Arrow matrices are transposed.
pub fn dual(m: &Module) -> Module {
    let op = m.algebra().opposite();
    let actions = m.actions().iter().map(Matrix::transpose).collect();
    Module::from_parts(op, m.dims().to_vec(), actions)
}

pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

/// Block-diagonal direct sum; the empty sum is the zero module.
pub fn direct_sum(algebra: &Arc<Algebra>, parts: &[Module]) -> DirectSum {
    let f = algebra.field();
    let nv = algebra.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dim_at(v)).sum()).collect();
    let actions = (0..algebra.num_arrows())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| p.action(a)).collect();
            Matrix::block_diagonal(f, &blocks)
        })
        .collect();
    let module = Module::from_parts(algebra.clone(), dims.clone(), actions);
    let mut offsets = vec![0usize; nv];
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    for p in parts {
        let mut inj = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut i = Matrix::zeros(f, p.dim_at(v), dims[v]);
            let mut pr = Matrix::zeros(f, dims[v], p.dim_at(v));
            for k in 0..p.dim_at(v) {
                i.set(k, offsets[v] + k, f.one());
                pr.set(offsets[v] + k, k, f.one());
            }
            offsets[v] += p.dim_at(v);
            inj.push(i);
            proj.push(pr);
        }
        injections.push(Morphism::from_parts(p.clone(), module.clone(), inj));
        projections.push(Morphism::from_parts(module.clone(), p.clone(), proj));
    }
    DirectSum { module, injections, projections }
}

/// Morphism out of a sum of indecomposable projectives determined by the
/// images of the generators: summand `s` sends `e_{v_s}` to `images[s]`.
pub fn map_from_projective_sum(source: &Module, summands: &[usize], target: &Module, images: &[Vec<Scalar>]) -> Morphism {
    let alg = target.algebra();
    let f = alg.field();
    let nv = alg.num_vertices();
    let mut comps = Vec::with_capacity(nv);
    for w in 0..nv {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (s, &v) in summands.iter().enumerate() {
            for b in alg.basis_between(v, w) {
                rows.push(target.basis_actions()[b].apply(&images[s]));
            }
        }
        comps.push(Matrix::from_rows(f, target.dim_at(w), rows).expect("rows have target width"));
    }
    Morphism::from_parts(source.clone(), target.clone(), comps)
}
