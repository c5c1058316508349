use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space, simple, Module, ModuleError, Morphism};
use crate::linalg::{quotient_with_section, Field, Matrix, Scalar};

/// Limits for the searches behind [`decompose`] and [`is_isomorphic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Exhaustive enumeration is used while `q^d` stays at or below this.
    pub enumeration_limit: u64,
    /// Seeded random trials when enumeration is out of reach.
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { enumeration_limit: 1 << 16, random_trials: 512, seed: crate::seed() }
    }
}

/// Krull–Schmidt decomposition: isomorphism classes of indecomposable
/// summands with multiplicities, in order of first appearance.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub classes: Vec<(Module, usize)>,
}

impl Decomposition {
    /// All summands, each class repeated by its multiplicity.
    pub fn parts(&self) -> Vec<Module> {
        self.classes.iter().flat_map(|(m, k)| std::iter::repeat_n(m.clone(), *k)).collect()
    }

    /// Number of indecomposable summands counted with multiplicity.
    pub fn len(&self) -> usize {
        self.classes.iter().map(|(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.len() == 1
    }
}

pub fn decompose(m: &Module) -> Result<Decomposition, ModuleError> {
    decompose_with(m, &SearchBudget::default())
}

pub fn decompose_with(m: &Module, budget: &SearchBudget) -> Result<Decomposition, ModuleError> {
    let mut parts = Vec::new();
    split_into(m, budget, &mut parts)?;
    let mut classes: Vec<(Module, usize)> = Vec::new();
    'parts: for p in parts {
        for (rep, k) in classes.iter_mut() {
            if iso_indecomposable(rep, &p)? {
                *k += 1;
                continue 'parts;
            }
        }
        classes.push((p, 1));
    }
    Ok(Decomposition { classes })
}

fn split_into(m: &Module, budget: &SearchBudget, out: &mut Vec<Module>) -> Result<(), ModuleError> {
    if m.is_zero() {
        return Ok(());
    }
    if m.is_semisimple() {
        for (v, &d) in m.dims().iter().enumerate() {
            for _ in 0..d {
                out.push(simple(m.algebra(), v));
            }
        }
        return Ok(());
    }
    if m.top_dims().iter().sum::<usize>() == 1 || m.socle_dims().iter().sum::<usize>() == 1 {
        out.push(m.clone());
        return Ok(());
    }
    match splitting_endomorphism(m, budget)? {
        None => out.push(m.clone()),
        Some(phi) => {
            let power: Vec<Matrix> = phi.components().iter().map(|c| c.pow(m.dim())).collect();
            let psi = Morphism::from_parts(m.clone(), m.clone(), power);
            let (k, _) = psi.kernel();
            let (i, _) = psi.image();
            debug_assert_eq!(k.dim() + i.dim(), m.dim());
            split_into(&k, budget, out)?;
            split_into(&i, budget, out)?;
        }
    }
    Ok(())
}

/// Top blocks of a morphism: the induced maps `top(source)_v → top(target)_v`.
pub(crate) fn top_blocks(f: &Morphism) -> Vec<Matrix> {
    let (s, t) = (f.source().top_cache(), f.target().top_cache());
    f.components().iter().enumerate().map(|(v, c)| s.section[v].mul(c).mul(&t.projection[v])).collect()
}

fn flatten_blocks(blocks: &[Matrix]) -> Vec<Scalar> {
    blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
}

fn unflatten_square(field: Field, sizes: &[usize], flat: &[Scalar]) -> Vec<Matrix> {
    let mut at = 0;
    sizes
        .iter()
        .map(|&t| {
            let m = Matrix::from_vec(field, t, t, flat[at..at + t * t].to_vec()).expect("block length");
            at += t * t;
            m
        })
        .collect()
}

/// An endomorphism that is neither invertible nor nilpotent, if one exists;
/// `None` certifies that `m` is indecomposable.
fn splitting_endomorphism(m: &Module, budget: &SearchBudget) -> Result<Option<Morphism>, ModuleError> {
    let f = m.algebra().field();
    let end = hom_space(m, m)?;
    let morphisms = end.morphisms();
    let sizes = m.top_dims();
    let top_len: usize = sizes.iter().map(|t| t * t).sum();
    let top_rows: Vec<Vec<Scalar>> = morphisms.iter().map(|g| flatten_blocks(&top_blocks(g))).collect();
    let top = Matrix::from_rows(f, top_len, top_rows)?;

    // endomorphisms killing the top or the socle are nilpotent
    let socle = m.socle_spans();
    let socle_pivots: Vec<Vec<usize>> = socle.iter().map(|s| s.row_reduce().pivots).collect();
    let soc_len: usize = socle.iter().map(|s| s.rows() * s.rows()).sum();
    let soc_rows: Vec<Vec<Scalar>> = morphisms
        .iter()
        .map(|g| {
            g.components()
                .iter()
                .enumerate()
                .flat_map(|(v, c)| socle[v].mul(c).select_cols(&socle_pivots[v]).entries().to_vec())
                .collect()
        })
        .collect();
    let soc = Matrix::from_rows(f, soc_len, soc_rows)?;
    let nil = top.left_kernel_basis().vstack(&soc.left_kernel_basis());
    let quotient = quotient_with_section(f, end.dim(), &nil)?;
    if quotient.dim() <= 1 {
        return Ok(None);
    }
    // top images of lifts of a basis of End / (nilpotent ideal)
    let lifted_top = quotient.section.mul(&top);
    let d = quotient.dim();
    let build = |coeffs: &[Scalar]| -> Morphism { end.combine(Matrix::row_vector(f, coeffs.to_vec()).mul(&quotient.section).row(0)) };
    let identity_top = flatten_blocks(&top_blocks(&Morphism::identity(m)));

    let is_splitting = |t: &[Scalar]| -> bool {
        let blocks = unflatten_square(f, &sizes, t);
        let all_invertible = blocks.iter().all(Matrix::is_invertible);
        let all_nilpotent = blocks.iter().all(Matrix::is_nilpotent);
        !all_invertible && !all_nilpotent
    };

    // basis elements first
    for i in 0..d {
        if is_splitting(lifted_top.row(i)) {
            let mut c = vec![f.zero(); d];
            c[i] = f.one();
            return Ok(Some(build(&c)));
        }
    }
    if let Some(q) = f.order() {
        if (d as u32) < 64 && q.checked_pow(d as u32).is_some_and(|n| n <= budget.enumeration_limit) {
            let elements = f.elements().expect("finite field");
            for c in CoefficientPatterns::new(&elements, d) {
                let t = Matrix::row_vector(f, c.clone()).mul(&lifted_top);
                if is_splitting(t.row(0)) {
                    return Ok(Some(build(&c)));
                }
            }
            return Ok(None);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ (m.dim() as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    for _ in 0..budget.random_trials {
        let c: Vec<Scalar> = (0..d).map(|_| random_scalar(f, &mut rng)).collect();
        let t = Matrix::row_vector(f, c.clone()).mul(&lifted_top);
        let t = t.row(0).to_vec();
        let mut shifts = vec![f.zero()];
        for block in unflatten_square(f, &sizes, &t) {
            for k in 0..block.rows() {
                if !shifts.contains(block.get(k, k)) {
                    shifts.push(block.get(k, k).clone());
                }
            }
        }
        for lambda in shifts {
            let shifted: Vec<Scalar> = t.iter().zip(&identity_top).map(|(x, e)| f.sub(x, &f.mul(&lambda, e))).collect();
            if is_splitting(&shifted) {
                let phi = build(&c).sub(&Morphism::identity(m).scale(&lambda));
                return Ok(Some(phi));
            }
        }
    }
    Err(ModuleError::DecomposeInconclusive(m.dim()))
}

pub(crate) fn random_scalar(f: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match f.order() {
        Some(p) => Scalar::Fp(rng.gen_range(0..p)),
        None => f.from_i64(rng.gen_range(-4..=4)),
    }
}

/// All nonzero coefficient vectors of length `d`, in lexicographic order of
/// element indices.
pub(crate) struct CoefficientPatterns<'a> {
    elements: &'a [Scalar],
    index: Vec<usize>,
    done: bool,
}

impl<'a> CoefficientPatterns<'a> {
    pub(crate) fn new(elements: &'a [Scalar], d: usize) -> Self {
        CoefficientPatterns { elements, index: vec![0; d], done: d == 0 }
    }
}

impl Iterator for CoefficientPatterns<'_> {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.done {
            return None;
        }
        let q = self.elements.len();
        let mut k = self.index.len();
        loop {
            if k == 0 {
                self.done = true;
                return None;
            }
            k -= 1;
            self.index[k] += 1;
            if self.index[k] < q {
                break;
            }
            self.index[k] = 0;
        }
        Some(self.index.iter().map(|&i| self.elements[i].clone()).collect())
    }
}

/// Isomorphism test for indecomposables: `m ≅ n` iff some composite of
/// basis maps `m → n → m` induces an invertible map on the top.
fn iso_indecomposable(m: &Module, n: &Module) -> Result<bool, ModuleError> {
    if m.dims() != n.dims() || m.top_dims() != n.top_dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let forward = hom_space(m, n)?;
    if forward.dim() == 0 {
        return Ok(false);
    }
    let backward = hom_space(n, m)?;
    let tf: Vec<Vec<Matrix>> = forward.morphisms().iter().map(top_blocks).collect();
    let tb: Vec<Vec<Matrix>> = backward.morphisms().iter().map(top_blocks).collect();
    for a in &tf {
        for b in &tb {
            if a.iter().zip(b).all(|(x, y)| x.mul(y).is_invertible()) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool, ModuleError> {
    is_isomorphic_with(m, n, &SearchBudget::default())
}

pub fn is_isomorphic_with(m: &Module, n: &Module, budget: &SearchBudget) -> Result<bool, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() || m == n {
        return Ok(true);
    }
    match (m.is_semisimple(), n.is_semisimple()) {
        (true, true) => return Ok(true),
        (true, false) | (false, true) => return Ok(false),
        _ => {}
    }
    if m.top_dims() != n.top_dims() || m.socle_dims() != n.socle_dims() {
        return Ok(false);
    }
    let forward = hom_space(m, n)?;
    let backward = hom_space(n, m)?;
    if forward.dim() != backward.dim() || forward.dim() == 0 {
        return Ok(false);
    }
    let f = m.algebra().field();
    let sizes = m.top_dims();
    let len: usize = sizes.iter().map(|t| t * t).sum();
    let rows: Vec<Vec<Scalar>> = forward.morphisms().iter().map(|g| flatten_blocks(&top_blocks(g))).collect();
    let tops = Matrix::from_rows(f, len, rows)?.row_space();
    let d = tops.rows();
    let invertible = |c: &[Scalar]| -> bool {
        let t = Matrix::row_vector(f, c.to_vec()).mul(&tops);
        unflatten_square(f, &sizes, t.row(0)).iter().all(Matrix::is_invertible)
    };
    if let Some(q) = f.order() {
        if (d as u32) < 64 && q.checked_pow(d as u32).is_some_and(|x| x <= budget.enumeration_limit) {
            let elements = f.elements().expect("finite field");
            return Ok(CoefficientPatterns::new(&elements, d).any(|c| invertible(&c)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ (m.dim() as u64).rotate_left(17));
    for _ in 0..budget.random_trials {
        let c: Vec<Scalar> = (0..d).map(|_| random_scalar(f, &mut rng)).collect();
        if invertible(&c) {
            return Ok(true);
        }
    }
    // exact fallback through Krull–Schmidt
    let (dm, dn) = (decompose_with(m, budget)?, decompose_with(n, budget)?);
    if dm.len() != dn.len() || dm.classes.len() != dn.classes.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.classes.len()];
    for (a, k) in &dm.classes {
        let mut found = false;
        for (j, (b, l)) in dn.classes.iter().enumerate() {
            if !used[j] && k == l && iso_indecomposable(a, b)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}
