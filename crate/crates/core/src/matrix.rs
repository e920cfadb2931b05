//! Dense exact matrices and row-echelon subspaces.
//!
//! Everything here is small and exact: matrices of `Scalar` entries with
//! reduced row echelon form, right kernels, and linear solves. `Subspace`
//! keeps a row space in RREF incrementally and hands out canonical
//! complement coordinates, which the module theory uses for quotients.

use crate::field::{FieldSpec, Scalar};
use std::fmt;

/// Dense row-major matrix over one field. Zero rows or columns are fine.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zero(rows.len(), cols, field);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Builds from column vectors (each of length `rows`).
    pub fn from_columns(cols: &[Vec<Scalar>], rows: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zero(rows, cols.len(), field);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar field mismatch");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        assert_eq!(self.field, rhs.field, "field mismatch in product");
        let mut out = Matrix::zero(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Applies to a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.at(i, k).is_zero() {
                        acc = acc + self.at(i, k).clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = a.clone() + b.clone();
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = a.clone() - b.clone();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.clone() * c.clone();
        }
        out
    }

    /// Reduced row echelon form with the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.at(r, c).inv();
            for j in c..m.cols {
                let v = m.at(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j).clone() - f.clone() * m.at(r, j).clone();
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of the right kernel `{v : self * v = 0}`, one column vector per
    /// free column of the RREF.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One particular solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Matrix::zero(self.rows, self.cols + 1, self.field);
        for (i, bv) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, bv.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Solves `self * X = rhs` column by column; `None` when any column is
    /// inconsistent.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        let mut cols = Vec::with_capacity(rhs.cols);
        for c in 0..rhs.cols {
            cols.push(self.solve(&rhs.column(c))?);
        }
        Some(Matrix::from_columns(&cols, self.cols, self.field))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of a fixed coordinate space, stored as an RREF row basis.
///
/// Pivot columns are the earliest possible; the canonical complement is the
/// set of non-pivot standard basis vectors, so `reduce` composed with
/// `complement coordinates` is a deterministic linear projection along the
/// subspace.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn empty(ambient: usize, field: FieldSpec) -> Subspace {
        Subspace {
            ambient,
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Subspace {
        let mut s = Subspace::empty(ambient, field);
        for i in 0..ambient {
            let mut v = vec![field.zero(); ambient];
            v[i] = field.one();
            s.insert(&v);
        }
        s
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a Vec<Scalar>>>(
        ambient: usize,
        field: FieldSpec,
        vs: I,
    ) -> Subspace {
        let mut s = Subspace::empty(ambient, field);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Eliminates the pivot coordinates of `v`; the result is the canonical
    /// representative of `v` modulo the subspace (zero iff contained).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (wi, ri) in w.iter_mut().zip(row.iter()) {
                if !ri.is_zero() {
                    *wi = wi.clone() - f.clone() * ri.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span. Returns true when the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv();
        let mut newrow: Vec<Scalar> = w.into_iter().map(|x| x * inv.clone()).collect();
        // Keep existing rows reduced against the new pivot.
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (ri, ni) in row.iter_mut().zip(newrow.iter()) {
                    if !ni.is_zero() {
                        *ri = ri.clone() - f.clone() * ni.clone();
                    }
                }
            }
        }
        // Reduce the new row against existing pivots that come after p.
        for (row, &q) in self.rows.iter().zip(self.pivots.iter()) {
            if !newrow[q].is_zero() {
                let f = newrow[q].clone();
                for (ni, ri) in newrow.iter_mut().zip(row.iter()) {
                    if !ri.is_zero() {
                        *ni = ni.clone() - f.clone() * ri.clone();
                    }
                }
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&q| q > p)
            .unwrap_or(self.pivots.len());
        self.rows.insert(at, newrow);
        self.pivots.insert(at, p);
        true
    }

    pub fn insert_all(&mut self, vs: &[Vec<Scalar>]) -> bool {
        let mut grew = false;
        for v in vs {
            grew |= self.insert(v);
        }
        grew
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Row basis in RREF, one `Vec` per dimension.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Basis as the columns of an ambient x dim matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.rows, self.ambient, self.field)
    }

    /// Indices of the non-pivot coordinates, in increasing order.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut piv = vec![false; self.ambient];
        for &p in &self.pivots {
            piv[p] = true;
        }
        (0..self.ambient).filter(|&i| !piv[i]).collect()
    }

    /// Canonical coordinates of `v` in the quotient by this subspace:
    /// reduce, then read off the non-pivot entries.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let w = self.reduce(v);
        self.complement_indices()
            .into_iter()
            .map(|i| w[i].clone())
            .collect()
    }

    /// Coordinates of `v` in the stored RREF basis, or `None` if `v` is
    /// outside the span. Since each basis row is 1 on its own pivot and 0
    /// on the others, the coordinates are the pivot entries of `v`.
    pub fn coords_in_basis(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// dim(self ∩ other) computed through dim(self + other).
    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        assert_eq!(self.ambient, other.ambient);
        let mut sum = self.clone();
        for row in &other.rows {
            sum.insert(row);
        }
        self.dim() + other.dim() - sum.dim()
    }
}
