use std::fmt;

use super::{Field, LinalgError, Scalar};

/// A dense row-major matrix over a [`Field`].
///
/// Vectors are treated as rows throughout the crate: a linear map `V -> W`
/// is a `dim V × dim W` matrix acting by `v ↦ v · M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of Gauss–Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    /// Reduced row echelon form, same shape as the input.
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// A quotient `k^n / U` together with a linear section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// `n × q`; its kernel is exactly `U`.
    pub projection: Matrix,
    /// `q × n`; `section · projection = id`.
    pub section: Matrix,
    /// Columns of `k^n` whose unit vectors form the section.
    pub free_columns: Vec<usize>,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.section.rows()
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        if let Some(bad) = data.iter().find(|x| !field.contains(x)) {
            return Err(LinalgError::ForeignScalar(bad.to_string(), field));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Matrix::from_vec(field, n, cols, data)
    }

    /// Convenience constructor from small integer entries.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn row_vector(field: Field, entries: Vec<Scalar>) -> Matrix {
        let cols = entries.len();
        Matrix { field, rows: 1, cols, data: entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] = f.mul_add(&out.data[base + j], a, b);
                    }
                }
            }
        }
        out
    }

    /// `v · M` for a row vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let f = self.field;
        let mut out = vec![f.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.row(k).iter().enumerate() {
                if !b.is_zero() {
                    out[j] = f.mul_add(&out[j], a, b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.from_i64(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { field: self.field, rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diagonal(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in r0..r0 + rows {
            data.extend_from_slice(&self.row(i)[c0..c0 + cols]);
        }
        Matrix { field: self.field, rows, cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { field: self.field, rows: self.rows, cols: idx.len(), data }
    }

    /// Gauss–Jordan elimination with the leftmost-pivot convention: columns
    /// are scanned left to right and the first row at or below the current
    /// position with a nonzero entry becomes the pivot row.
    pub fn row_reduce(&self) -> RowEchelon {
        match self.field {
            Field::Prime(2) => self.row_reduce_gf2(),
            Field::Prime(p) => self.row_reduce_fp(p),
            Field::Rationals => self.row_reduce_generic(),
        }
    }

    fn residue(x: &Scalar) -> u64 {
        match x {
            Scalar::Fp(v) => *v,
            Scalar::Q(_) => unreachable!("rational entry in a prime-field matrix"),
        }
    }

    fn echelon_from_residues(&self, rows: Vec<Vec<u64>>, pivots: Vec<usize>) -> RowEchelon {
        let data = rows.into_iter().flatten().map(Scalar::Fp).collect();
        RowEchelon {
            reduced: Matrix { field: self.field, rows: self.rows, cols: self.cols, data },
            rank: pivots.len(),
            pivots,
        }
    }

    /// Bit-packed elimination over `GF(2)`.
    fn row_reduce_gf2(&self) -> RowEchelon {
        let words = self.cols.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| {
                let mut w = vec![0u64; words];
                for (j, x) in self.row(i).iter().enumerate() {
                    if Self::residue(x) == 1 {
                        w[j / 64] |= 1 << (j % 64);
                    }
                }
                w
            })
            .collect();
        let bit = |row: &[u64], c: usize| row[c / 64] >> (c % 64) & 1 == 1;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| bit(&rows[i], c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = std::mem::take(&mut rows[r]);
            let start = c / 64;
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && bit(row, c) {
                    for (x, y) in row[start..].iter_mut().zip(&pivot_row[start..]) {
                        *x ^= y;
                    }
                }
            }
            rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        let unpacked = rows.iter().map(|w| (0..self.cols).map(|j| u64::from(bit(w, j))).collect()).collect();
        self.echelon_from_residues(unpacked, pivots)
    }

    /// Elimination on raw residues modulo an odd prime.
    fn row_reduce_fp(&self, p: u64) -> RowEchelon {
        let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
        let inverse = |a: u64| {
            let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, base);
                }
                base = mulmod(base, base);
                e >>= 1;
            }
            acc
        };
        let mut rows: Vec<Vec<u64>> =
            (0..self.rows).map(|i| self.row(i).iter().map(Self::residue).collect()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = inverse(rows[r][c]);
            if inv != 1 {
                for x in rows[r][c..].iter_mut() {
                    *x = mulmod(*x, inv);
                }
            }
            let support: Vec<usize> = (c..self.cols).filter(|&j| rows[r][j] != 0).collect();
            let pivot_row = std::mem::take(&mut rows[r]);
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let factor = p - row[c];
                for &j in &support {
                    row[j] = ((row[j] as u128 + factor as u128 * pivot_row[j] as u128) % p as u128) as u64;
                }
            }
            rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        self.echelon_from_residues(rows, pivots)
    }

    fn row_reduce_generic(&self) -> RowEchelon {
        let f = self.field;
        let mut rows: Vec<Vec<Scalar>> = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = f.inv(&rows[r][c]);
            if !inv.is_one() {
                for x in rows[r][c..].iter_mut() {
                    if !x.is_zero() {
                        *x = f.mul(x, &inv);
                    }
                }
            }
            let support: Vec<usize> = (c..self.cols).filter(|&j| !rows[r][j].is_zero()).collect();
            let pivot_row = std::mem::take(&mut rows[r]);
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = f.neg(&row[c]);
                for &j in &support {
                    row[j] = f.mul_add(&row[j], &factor, &pivot_row[j]);
                }
            }
            rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        let data = rows.into_iter().flatten().collect();
        RowEchelon {
            reduced: Matrix { field: f, rows: self.rows, cols: self.cols, data },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Basis of the right null space `{ v : M vᵀ = 0 }`, one vector per row.
    pub fn kernel_basis(&self) -> Matrix {
        self.kernel_with_free_columns().0
    }

    /// Like [`Matrix::kernel_basis`], also returning the free columns. Basis
    /// row `k` has a one in free column `k` and zeros in the other free
    /// columns, so the coordinates of a kernel vector are its free entries.
    pub fn kernel_with_free_columns(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let ech = self.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, f.one());
            for (i, &pc) in ech.pivots.iter().enumerate() {
                let v = ech.reduced.get(i, fc);
                if !v.is_zero() {
                    basis.set(k, pc, f.neg(v));
                }
            }
        }
        (basis, free)
    }

    /// Basis of the left null space `{ v : v M = 0 }`.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis()
    }

    /// Basis of the row space in reduced echelon form.
    pub fn row_space(&self) -> Matrix {
        let ech = self.row_reduce();
        ech.reduced.submatrix(0, ech.rank, 0, self.cols)
    }

    /// Solves `M x = rhs` for a column vector `x`. Returns `Ok(None)` when
    /// `rhs` is not in the column space. Free variables are set to zero.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: rhs.len() });
        }
        let f = self.field;
        let column = Matrix { field: f, rows: self.rows, cols: 1, data: rhs.to_vec() };
        let ech = self.hstack(&column).row_reduce();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.reduced.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solves `x M = rhs` for a row vector `x`.
    pub fn solve_left(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        self.transpose().solve(rhs)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let ech = self.hstack(&Matrix::identity(self.field, n)).row_reduce();
        if n > 0 && (ech.pivots.len() < n || ech.pivots[n - 1] != n - 1) {
            return None;
        }
        Some(ech.reduced.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square(), "nilpotency of a non-square matrix");
        let mut p = self.clone();
        let mut e = 1;
        while e < self.rows {
            p = p.mul(&p);
            e *= 2;
        }
        p.is_zero()
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }
}

/// The quotient of `k^ambient_dim` by the row space of `subspace`, with a
/// projection and a section built from the non-pivot unit vectors.
pub fn quotient_with_section(field: Field, ambient_dim: usize, subspace: &Matrix) -> Result<Quotient, LinalgError> {
    if subspace.cols() != ambient_dim {
        return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: subspace.cols() });
    }
    let ech = subspace.row_reduce();
    let mut pivot_row = vec![None; ambient_dim];
    for (i, &p) in ech.pivots.iter().enumerate() {
        pivot_row[p] = Some(i);
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| pivot_row[c].is_none()).collect();
    let q = free.len();
    let mut projection = Matrix::zeros(field, ambient_dim, q);
    let mut section = Matrix::zeros(field, q, ambient_dim);
    for (k, &fc) in free.iter().enumerate() {
        section.set(k, fc, field.one());
        projection.set(fc, k, field.one());
    }
    for (c, row) in pivot_row.iter().enumerate() {
        if let Some(i) = row {
            for (k, &fc) in free.iter().enumerate() {
                let v = ech.reduced.get(*i, fc);
                if !v.is_zero() {
                    projection.set(c, k, field.neg(v));
                }
            }
        }
    }
    Ok(Quotient { projection, section, free_columns: free })
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
