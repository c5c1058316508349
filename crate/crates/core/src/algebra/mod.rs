//! Finite-dimensional algebras presented by quivers with relations.
//!
//! An algebra is built as `kQ / (I + J^N)` where `I` is generated by the
//! relations and `N` is the user-supplied nilpotency bound. The ideal is
//! spanned inside the truncated path space (paths of length at most `N`) by
//! all products `p · r · q`; every path of length `N` must reduce to zero
//! there, otherwise the presentation is rejected as not admissible.
//!
//! Paths compose left to right: `p * q` means "first `p`, then `q`", which is
//! the orientation of right modules, `m · (p * q) = (m · p) · q`.

mod presentation;

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use thiserror::Error;

use crate::linalg::{Field, LinalgError, Matrix, Scalar};

pub use presentation::{Arrow, Path, QuiverPresentation, Relation, RelationTerm};

/// Sparse vector: `(basis index, coefficient)` pairs with nonzero coefficients.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("quiver has no vertices")]
    EmptyQuiver,
    #[error("nilpotency bound must be positive")]
    ZeroNilpotency,
    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("path `{0}` is not composable")]
    NonComposable(String),
    #[error("relation terms are not parallel at `{0}`")]
    NonParallel(String),
    #[error("empty relation")]
    EmptyRelation,
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Field(#[from] LinalgError),
}

enum OppositeLink {
    Owned(Arc<Algebra>),
    Back(Weak<Algebra>),
}

/// A basic finite-dimensional algebra with a basis of path representatives.
pub struct Algebra {
    field: Field,
    presentation: QuiverPresentation,
    basis: Vec<Path>,
    /// `products[i][j]` expresses `basis[i] * basis[j]`.
    products: Vec<Vec<SparseVec>>,
    arrow_elements: Vec<SparseVec>,
    /// Normal forms of every path of length at most `N`.
    path_forms: Vec<(Path, SparseVec)>,
    fingerprint: u64,
    opposite: OnceLock<OppositeLink>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("dim", &self.basis.len())
            .field("vertices", &self.presentation.vertices)
            .finish()
    }
}

fn enumerate_paths(p: &QuiverPresentation, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..p.vertices.len()).map(Path::trivial).collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for path in &frontier {
            for (ai, a) in p.arrows.iter().enumerate() {
                if a.source == path.target {
                    let mut arrows = path.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { source: path.source, target: a.target, arrows });
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Builds the algebra of a quiver presentation over `field`.
pub fn build_algebra(p: &QuiverPresentation, field: Field) -> Result<Arc<Algebra>, AlgebraError> {
    p.validate()?;
    let n = p.nilpotency;
    let paths = enumerate_paths(p, n);
    let index: HashMap<(usize, &[usize]), usize> =
        paths.iter().enumerate().map(|(i, q)| ((q.source, q.arrows.as_slice()), i)).collect();

    // Columns of each (source, target) block: longest paths first, ties broken
    // by descending arrow sequence, so pivots eliminate long paths and the
    // surviving representatives are short.
    let nv = p.vertices.len();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); nv * nv];
    for (i, q) in paths.iter().enumerate() {
        groups[q.source * nv + q.target].push(i);
    }
    let mut column_of = vec![0usize; paths.len()];
    for g in groups.iter_mut() {
        g.sort_by(|&a, &b| {
            paths[b].len().cmp(&paths[a].len()).then_with(|| paths[b].arrows.cmp(&paths[a].arrows))
        });
        for (c, &pi) in g.iter().enumerate() {
            column_of[pi] = c;
        }
    }

    // ideal generators p·r·q, truncated above length N
    let mut generators: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); nv * nv];
    for rel in &p.relations {
        let (rs, rt) = p.relation_endpoints(rel)?;
        let coeffs: Vec<Scalar> =
            rel.terms.iter().map(|t| field.from_rational(&t.coefficient)).collect::<Result<_, _>>()?;
        let min_len = rel.terms.iter().map(|t| t.path.len()).min().unwrap_or(0);
        for left in paths.iter().filter(|q| q.target == rs && q.len() + min_len <= n) {
            for right in paths.iter().filter(|q| q.source == rt && left.len() + min_len + q.len() <= n) {
                let g = left.source * nv + right.target;
                let mut v = vec![field.zero(); groups[g].len()];
                let mut any = false;
                for (t, c) in rel.terms.iter().zip(&coeffs) {
                    if left.len() + t.path.len() + right.len() > n {
                        continue;
                    }
                    let mut arrows = left.arrows.clone();
                    arrows.extend_from_slice(&t.path);
                    arrows.extend_from_slice(&right.arrows);
                    let pi = index[&(left.source, arrows.as_slice())];
                    let col = column_of[pi];
                    v[col] = field.add(&v[col], c);
                    any = true;
                }
                if any && v.iter().any(|x| !x.is_zero()) {
                    generators[g].push(v);
                }
            }
        }
    }

    // Per block: echelon form of the ideal, admissibility check, normal forms.
    struct Block {
        reduced: Matrix,
        pivots: Vec<usize>,
        free: Vec<usize>,
    }
    let mut blocks = Vec::with_capacity(nv * nv);
    for (g, cols) in groups.iter().enumerate() {
        let width = cols.len();
        let rows = std::mem::take(&mut generators[g]);
        let m = Matrix::from_rows(field, width, rows)?;
        let ech = m.row_reduce();
        let mut is_pivot = vec![false; width];
        for &pc in &ech.pivots {
            is_pivot[pc] = true;
        }
        let free: Vec<usize> = (0..width).filter(|&c| !is_pivot[c]).collect();
        let reduced = ech.reduced.submatrix(0, ech.rank, 0, width);
        for &pi in cols {
            if paths[pi].len() == n {
                let col = column_of[pi];
                let in_ideal = match ech.pivots.iter().position(|&pc| pc == col) {
                    Some(r) => free.iter().all(|&fc| reduced.get(r, fc).is_zero()),
                    None => false,
                };
                if !in_ideal {
                    return Err(AlgebraError::NotAdmissible(format!(
                        "path {} of length {} does not lie in the ideal",
                        paths[pi].label(p),
                        n
                    )));
                }
            }
        }
        blocks.push(Block { reduced, pivots: ech.pivots, free });
    }

    // basis = surviving representatives, sorted by (length, source, target, arrows)
    let mut basis: Vec<Path> = Vec::new();
    for (g, b) in blocks.iter().enumerate() {
        for &fc in &b.free {
            basis.push(paths[groups[g][fc]].clone());
        }
    }
    basis.sort_by(|a, b| {
        (a.len(), a.source, a.target, &a.arrows).cmp(&(b.len(), b.source, b.target, &b.arrows))
    });
    let basis_index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, q)| (q, i)).collect();

    let mut path_forms = Vec::with_capacity(paths.len());
    for (pi, path) in paths.iter().enumerate() {
        let g = path.source * nv + path.target;
        let b = &blocks[g];
        let col = column_of[pi];
        let form: SparseVec = if let Some(r) = b.pivots.iter().position(|&pc| pc == col) {
            b.free
                .iter()
                .filter_map(|&fc| {
                    let v = b.reduced.get(r, fc);
                    (!v.is_zero()).then(|| (basis_index[&paths[groups[g][fc]]], field.neg(v)))
                })
                .collect()
        } else {
            vec![(basis_index[path], field.one())]
        };
        path_forms.push((path.clone(), form));
    }
    let mut forms_sorted = path_forms;
    forms_sorted.sort_by(|a, b| a.0.cmp(&b.0));
    let form_of = |arrows: &[usize], source: usize| -> SparseVec {
        if arrows.len() > n {
            return Vec::new();
        }
        let key = (source, arrows);
        let pi = index[&key];
        let path = &paths[pi];
        let pos = forms_sorted.binary_search_by(|(q, _)| q.cmp(path)).expect("path form present");
        forms_sorted[pos].1.clone()
    };

    let dim = basis.len();
    let mut products = vec![vec![Vec::new(); dim]; dim];
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            if bi.target != bj.source {
                continue;
            }
            let mut arrows = bi.arrows.clone();
            arrows.extend_from_slice(&bj.arrows);
            products[i][j] = form_of(&arrows, bi.source);
        }
    }
    let arrow_elements = (0..p.arrows.len()).map(|a| form_of(&[a], p.arrows[a].source)).collect();

    Ok(Arc::new(Algebra::assemble(field, p.clone(), basis, products, arrow_elements, forms_sorted)))
}

impl Algebra {
    fn assemble(
        field: Field,
        presentation: QuiverPresentation,
        basis: Vec<Path>,
        products: Vec<Vec<SparseVec>>,
        arrow_elements: Vec<SparseVec>,
        path_forms: Vec<(Path, SparseVec)>,
    ) -> Algebra {
        let mut h = DefaultHasher::new();
        field.hash(&mut h);
        presentation.vertices.hash(&mut h);
        basis.hash(&mut h);
        products.hash(&mut h);
        arrow_elements.hash(&mut h);
        Algebra {
            field,
            presentation,
            basis,
            products,
            arrow_elements,
            path_forms,
            fingerprint: h.finish(),
            opposite: OnceLock::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.presentation.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.presentation.arrows.len()
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.presentation.arrows[a]
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_label(&self, i: usize) -> String {
        self.basis[i].label(&self.presentation)
    }

    /// Stable identifier of the multiplication table; equal for an algebra
    /// and its double opposite.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    /// Index of the trivial path `e_v`; trivial paths come first.
    pub fn idempotent(&self, v: usize) -> usize {
        debug_assert!(self.basis[v].is_trivial() && self.basis[v].source == v);
        v
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i][j]
    }

    pub fn arrow_element(&self, a: usize) -> &SparseVec {
        &self.arrow_elements[a]
    }

    /// Normal form of an arbitrary path of length at most `N`; longer paths
    /// are zero.
    pub fn path_form(&self, path: &Path) -> SparseVec {
        if path.len() > self.presentation.nilpotency {
            return Vec::new();
        }
        match self.path_forms.binary_search_by(|(q, _)| q.cmp(path)) {
            Ok(pos) => self.path_forms[pos].1.clone(),
            Err(_) => Vec::new(),
        }
    }

    pub fn one(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        for x in 0..self.num_vertices() {
            v[self.idempotent(x)] = self.field.one();
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = f.mul(a, b);
                for (k, c) in &self.products[i][j] {
                    out[*k] = f.mul_add(&out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// Sparse product of a sparse element with a basis element.
    pub fn multiply_sparse_basis(&self, u: &SparseVec, j: usize) -> SparseVec {
        let f = self.field;
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (i, a) in u {
            for (k, c) in &self.products[*i][j] {
                match acc.iter_mut().find(|(idx, _)| idx == k) {
                    Some(slot) => slot.1 = f.mul_add(&slot.1, a, c),
                    None => acc.push((*k, f.mul(a, c))),
                }
            }
        }
        acc.retain(|(_, x)| !x.is_zero());
        acc.sort_by_key(|(k, _)| *k);
        acc
    }

    /// Sparse product of a basis element with a sparse element.
    pub fn multiply_basis_sparse(&self, i: usize, v: &SparseVec) -> SparseVec {
        let f = self.field;
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (j, b) in v {
            for (k, c) in &self.products[i][*j] {
                match acc.iter_mut().find(|(idx, _)| idx == k) {
                    Some(slot) => slot.1 = f.mul_add(&slot.1, b, c),
                    None => acc.push((*k, f.mul(b, c))),
                }
            }
        }
        acc.retain(|(_, x)| !x.is_zero());
        acc.sort_by_key(|(k, _)| *k);
        acc
    }

    /// Basis indices of the paths starting at `v` and ending at `w`, in
    /// basis order.
    pub fn basis_between(&self, v: usize, w: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == v && self.basis[i].target == w).collect()
    }

    /// Radical layers `J ⊇ J² ⊇ …`, each as a row basis in algebra
    /// coordinates; stops before the first zero power.
    pub fn radical_filtration(&self) -> Vec<Matrix> {
        let f = self.field;
        let mut layers = Vec::new();
        for k in 1..=self.presentation.nilpotency {
            let rows: Vec<Vec<Scalar>> = self
                .path_forms
                .iter()
                .filter(|(p, _)| p.len() >= k)
                .map(|(_, form)| {
                    let mut v = vec![f.zero(); self.dim()];
                    for (i, c) in form {
                        v[*i] = c.clone();
                    }
                    v
                })
                .collect();
            let span = Matrix::from_rows(f, self.dim(), rows).expect("well-formed rows").row_space();
            if span.rows() == 0 {
                break;
            }
            layers.push(span);
        }
        layers
    }

    /// Loewy length: the least `m` with `J^m = 0`.
    pub fn loewy_length(&self) -> usize {
        self.radical_filtration().len() + 1
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on every basis triple.
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.product(i, j).clone();
                for k in 0..d {
                    let left = self.multiply_sparse_basis(&ij, k);
                    let right = self.multiply_basis_sparse(i, self.product(j, k));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn build_opposite(&self) -> Algebra {
        let d = self.dim();
        let basis = self.basis.iter().map(Path::reversed).collect();
        let products = (0..d).map(|i| (0..d).map(|j| self.products[j][i].clone()).collect()).collect();
        let mut path_forms: Vec<(Path, SparseVec)> =
            self.path_forms.iter().map(|(p, f)| (p.reversed(), f.clone())).collect();
        path_forms.sort_by(|a, b| a.0.cmp(&b.0));
        Algebra::assemble(
            self.field,
            self.presentation.opposite(),
            basis,
            products,
            self.arrow_elements.clone(),
            path_forms,
        )
    }

    /// The opposite algebra: same basis labels, transposed structure
    /// constants, presented by the opposite quiver. Taking the opposite
    /// twice returns this very algebra while it is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(link) = self.opposite.get() {
            match link {
                OppositeLink::Owned(a) => return a.clone(),
                OppositeLink::Back(w) => {
                    if let Some(a) = w.upgrade() {
                        return a;
                    }
                    return Arc::new(self.build_opposite());
                }
            }
        }
        let op = self.build_opposite();
        let _ = op.opposite.set(OppositeLink::Back(Arc::downgrade(self)));
        let op = Arc::new(op);
        match self.opposite.set(OppositeLink::Owned(op.clone())) {
            Ok(()) => op,
            Err(_) => self.opposite(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loc3(field: Field) -> Arc<Algebra> {
        let mut p = QuiverPresentation::new(&["1"], 2);
        p.add_arrow("x", "1", "1").unwrap();
        p.add_arrow("y", "1", "1").unwrap();
        for r in ["x*x", "x*y", "y*x", "y*y"] {
            p.add_relation(r).unwrap();
        }
        build_algebra(&p, field).unwrap()
    }

    fn a2() -> Arc<Algebra> {
        let mut p = QuiverPresentation::new(&["1", "2"], 2);
        p.add_arrow("a", "1", "2").unwrap();
        build_algebra(&p, Field::gf2()).unwrap()
    }

    #[test]
    fn loc3_basis() {
        for f in [Field::gf2(), Field::Rationals] {
            let a = loc3(f);
            assert_eq!(a.dim(), 3);
            let labels: Vec<String> = (0..3).map(|i| a.basis_label(i)).collect();
            assert_eq!(labels, ["e1", "x", "y"]);
            let x = a.basis_vector(1);
            assert!(a.multiply(&x, &x).iter().all(Scalar::is_zero));
            assert!(a.is_associative());
        }
    }

    #[test]
    fn semisimple_one_vertex() {
        let p = QuiverPresentation::new(&["1"], 1);
        let a = build_algebra(&p, Field::gf2()).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.radical_filtration().is_empty());
    }

    #[test]
    fn a2_products() {
        let a = a2();
        assert_eq!(a.dim(), 3);
        let labels: Vec<String> = (0..3).map(|i| a.basis_label(i)).collect();
        assert_eq!(labels, ["e1", "e2", "a"]);
        let e1 = a.basis_vector(0);
        let arrow = a.basis_vector(2);
        assert_eq!(a.multiply(&e1, &arrow), arrow);
        assert!(a.multiply(&arrow, &e1).iter().all(Scalar::is_zero));
        let op = a.opposite();
        assert_eq!(op.multiply(&arrow, &e1), arrow);
        let back = op.opposite();
        assert!(Arc::ptr_eq(&back, &a));
    }

    #[test]
    fn radical_layers() {
        let a = loc3(Field::gf2());
        let layers = a.radical_filtration();
        assert_eq!(layers.len(), 1);
        assert_eq!(layers[0].rows(), 2);
        assert_eq!(a2().radical_filtration()[0].rows(), 1);
    }

    #[test]
    fn identity_is_unit() {
        let a = loc3(Field::Rationals);
        let one = a.one();
        for i in 0..a.dim() {
            let b = a.basis_vector(i);
            assert_eq!(a.multiply(&one, &b), b);
            assert_eq!(a.multiply(&b, &one), b);
        }
    }

    #[test]
    fn not_admissible_when_long_paths_survive() {
        let mut p = QuiverPresentation::new(&["1"], 2);
        p.add_arrow("x", "1", "1").unwrap();
        assert!(matches!(build_algebra(&p, Field::gf2()), Err(AlgebraError::NotAdmissible(_))));
        let empty = QuiverPresentation::new(&[], 2);
        assert!(matches!(build_algebra(&empty, Field::gf2()), Err(AlgebraError::EmptyQuiver)));
    }

    #[test]
    fn commutativity_relation_keeps_one_representative() {
        let mut p = QuiverPresentation::new(&["1", "2", "3", "4"], 3);
        p.add_arrow("a", "1", "2").unwrap();
        p.add_arrow("b", "2", "4").unwrap();
        p.add_arrow("c", "1", "3").unwrap();
        p.add_arrow("d", "3", "4").unwrap();
        p.add_relation("a*b - c*d").unwrap();
        let alg = build_algebra(&p, Field::Rationals).unwrap();
        // 4 vertices + 4 arrows + one length-2 class
        assert_eq!(alg.dim(), 9);
        assert!(alg.is_associative());
        let ab = alg.path_form(&Path { source: 0, target: 3, arrows: vec![0, 1] });
        let cd = alg.path_form(&Path { source: 0, target: 3, arrows: vec![2, 3] });
        assert_eq!(ab, cd);
    }
}
