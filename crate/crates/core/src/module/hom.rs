use super::{Module, ModuleError, Morphism};
use crate::linalg::{Matrix, Scalar};

/// A basis of `Hom_Λ(source, target)`.
///
/// Basis morphisms are rows of [`HomSpace::basis`] in flattened form. Basis
/// element `k` has a one at flat position `free[k]` and zeros at the other
/// free positions, so coordinates are read off directly.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Module,
    target: Module,
    basis: Matrix,
    free: Vec<usize>,
}

/// Basis of `Hom_Λ(m, n)`, canonical: the flattened basis morphisms form
/// the reduced row echelon basis of the solution space.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let spanning = if m.dim() * n.dim() <= 64 { hom_by_equations(m, n)? } else { hom_by_presentation(m, n) };
    let ech = spanning.row_reduce();
    let basis = ech.reduced.submatrix(0, ech.rank, 0, spanning.cols());
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis, free: ech.pivots })
}

/// Solves the intertwining equations directly, one unknown per entry of
/// every component.
pub(crate) fn hom_by_equations(m: &Module, n: &Module) -> Result<Matrix, ModuleError> {
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.num_vertices();
    let mut offsets = Vec::with_capacity(nv + 1);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += m.dim_at(v) * n.dim_at(v);
    }
    // one equation block per arrow a: i → j, entries of F_i N_a − M_a F_j
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..alg.num_arrows() {
        let arrow = alg.arrow(a);
        let (i, j) = (arrow.source, arrow.target);
        let (ma, na) = (m.action(a), n.action(a));
        let (di_m, dj_m, di_n, dj_n) = (m.dim_at(i), m.dim_at(j), n.dim_at(i), n.dim_at(j));
        for r in 0..di_m {
            for c in 0..dj_n {
                let mut eq = vec![f.zero(); total];
                let mut nonzero = false;
                // (F_i N_a)[r][c] = Σ_k F_i[r][k] N_a[k][c]
                for k in 0..di_n {
                    let x = na.get(k, c);
                    if !x.is_zero() {
                        let idx = offsets[i] + r * di_n + k;
                        eq[idx] = f.add(&eq[idx], x);
                        nonzero = true;
                    }
                }
                // (M_a F_j)[r][c] = Σ_k M_a[r][k] F_j[k][c]
                for k in 0..dj_m {
                    let x = ma.get(r, k);
                    if !x.is_zero() {
                        let idx = offsets[j] + k * dj_n + c;
                        eq[idx] = f.sub(&eq[idx], x);
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(eq);
                }
            }
        }
    }
    let system = Matrix::from_rows(f, total, rows)?;
    Ok(system.kernel_basis())
}

/// Maps out of the projective cover `P_0 ↠ m` are given by generator
/// images; they descend to `m` iff they kill the generators of `Ω m`.
pub(crate) fn hom_by_presentation(m: &Module, n: &Module) -> Matrix {
    let alg = m.algebra();
    let f = alg.field();
    let cover = m.cover_cache();
    let syz_top = cover.kernel.top_cache();
    let mut actions: Vec<Option<Matrix>> = vec![None; alg.dim()];
    let mut action = |b: usize| -> Matrix { actions[b].get_or_insert_with(|| n.basis_action(b)).clone() };

    let blocks: Vec<usize> = cover.summands.iter().map(|&v| n.dim_at(v)).collect();
    let unknowns: usize = blocks.iter().sum();
    let mut blocks_out: Vec<Matrix> = Vec::new();
    for (u, sec) in syz_top.section.iter().enumerate() {
        for g in sec.row_vecs() {
            let y = cover.inclusion[u].apply(&g);
            let mut col = Matrix::zeros(f, unknowns, n.dim_at(u));
            let (mut pos, mut row0) = (0, 0);
            for (s, &v) in cover.summands.iter().enumerate() {
                let mut c = Matrix::zeros(f, blocks[s], n.dim_at(u));
                for b in alg.basis_between(v, u) {
                    if !y[pos].is_zero() {
                        c = c.add(&action(b).scale(&y[pos]));
                    }
                    pos += 1;
                }
                col.paste(row0, 0, &c);
                row0 += blocks[s];
            }
            blocks_out.push(col);
        }
    }
    let width = blocks_out.iter().map(Matrix::cols).sum();
    let mut constraint = Matrix::zeros(f, unknowns, width);
    let mut c0 = 0;
    for b in &blocks_out {
        constraint.paste(0, c0, b);
        c0 += b.cols();
    }
    let solutions = constraint.left_kernel_basis();
    let mut rows = Vec::with_capacity(solutions.rows());
    for x in solutions.row_vecs() {
        let mut images = Vec::with_capacity(blocks.len());
        let mut at = 0;
        for &d in &blocks {
            images.push(x[at..at + d].to_vec());
            at += d;
        }
        let phi = super::map_from_projective_sum(&cover.cover, &cover.summands, n, &images);
        let flat: Vec<Scalar> = phi
            .components()
            .iter()
            .zip(&cover.lift)
            .flat_map(|(c, l)| l.mul(c).entries().to_vec())
            .collect();
        rows.push(flat);
    }
    let total = m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
    Matrix::from_rows(f, total, rows).expect("flat length")
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    /// Basis morphisms as rows of flattened components.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn morphism(&self, k: usize) -> Morphism {
        Morphism::from_flat(&self.source, &self.target, self.basis.row(k))
    }

    pub fn morphisms(&self) -> Vec<Morphism> {
        (0..self.dim()).map(|k| self.morphism(k)).collect()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Morphism {
        let flat = Matrix::row_vector(self.source.algebra().field(), coeffs.to_vec()).mul(&self.basis);
        Morphism::from_flat(&self.source, &self.target, flat.row(0))
    }

    /// Coordinates of a morphism in this basis.
    pub fn coordinates(&self, f: &Morphism) -> Vec<Scalar> {
        let flat = f.flatten();
        self.free.iter().map(|&c| flat[c].clone()).collect()
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        f.source().dims() == self.source.dims()
            && f.target().dims() == self.target.dims()
            && self.combine(&self.coordinates(f)) == *f
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{a2, loc3};
    use super::super::{injective, projective, simple, Module};
    use super::*;

    #[test]
    fn loc3_hom_dimensions() {
        let a = loc3();
        let s = simple(&a, 0);
        let l = Module::regular(&a);
        assert_eq!(hom_space(&s, &l).unwrap().dim(), 2);
        assert_eq!(hom_space(&l, &s).unwrap().dim(), 1);
        assert_eq!(hom_space(&l, &l).unwrap().dim(), 3);
        assert_eq!(hom_space(&s, &s).unwrap().dim(), 1);
    }

    #[test]
    fn a2_hom_dimensions() {
        let a = a2();
        let (p1, p2) = (projective(&a, 0), projective(&a, 1));
        assert_eq!(hom_space(&p2, &p1).unwrap().dim(), 1);
        assert_eq!(hom_space(&p1, &p2).unwrap().dim(), 0);
        assert_eq!(hom_space(&p1, &injective(&a, 1)).unwrap().dim(), 1);
    }

    #[test]
    fn coordinates_recover_combinations() {
        let a = loc3();
        let l = Module::regular(&a);
        let h = hom_space(&l, &l).unwrap();
        let f = a.field();
        let coeffs = vec![f.one(), f.zero(), f.one()];
        let g = h.combine(&coeffs);
        assert_eq!(h.coordinates(&g), coeffs);
        assert!(h.contains(&g));
        for m in h.morphisms() {
            assert!(Morphism::new(l.clone(), l.clone(), m.components().to_vec()).is_ok());
        }
    }

    #[test]
    fn both_routes_span_the_same_space() {
        for a in [loc3(), a2()] {
            let mods = [Module::regular(&a), simple(&a, 0), injective(&a, 0), projective(&a, 0), injective(&a, a.num_vertices() - 1)];
            for m in &mods {
                for n in &mods {
                    let e = hom_by_equations(m, n).unwrap().row_space();
                    let p = hom_by_presentation(m, n).row_space();
                    assert_eq!(e, p, "{m:?} -> {n:?}");
                }
            }
        }
    }
}
