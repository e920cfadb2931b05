//! Finite-dimensional right modules over a basic algebra.
//!
//! A representation stores one action matrix per algebra basis element
//! (idempotents act as identities on their vertex component, everything
//! else maps V_src -> V_tgt). Keeping the action total over the basis makes
//! every construction below uniform in the algebra: it works the same for
//! quiver-presented algebras, corners, and quotients.
//!
//! Multiplicities come for free: [M : S(w)] = dim M e_w = dims[w].

use crate::algebra::Algebra;
use crate::field::Scalar;
use crate::matrix::{Matrix, Subspace};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("expected {expected} arrow matrices, got {got}")]
    ArrowCountMismatch { expected: usize, got: usize },
    #[error("arrow {arrow} needs a {rows}x{cols} matrix, got {got_rows}x{got_cols}")]
    ArrowShapeMismatch {
        arrow: usize,
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("relation {relation} is not satisfied by the arrow matrices")]
    RelationNotSatisfied { relation: usize },
    #[error("a path of length {bound} acts nonzero, violating the nilpotency bound")]
    NilpotencyNotSatisfied { bound: usize },
    #[error("algebra has no quiver presentation")]
    NoQuiver,
    #[error("dimension vector has {got} entries, algebra has {expected} vertices")]
    DimCountMismatch { expected: usize, got: usize },
}

#[derive(Clone)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    /// act[b]: dims[tgt b] x dims[src b], so m.b = act[b] * m on columns.
    act: Vec<Matrix>,
}

/// A homomorphism M -> N, one matrix per vertex (shape N_w x M_w).
#[derive(Clone, Debug)]
pub struct Morphism {
    pub mats: Vec<Matrix>,
}

impl Morphism {
    /// Intertwining check: f_tgt . act_M[b] = act_N[b] . f_src for all b.
    pub fn is_map(&self, from: &Representation, to: &Representation) -> bool {
        (0..from.algebra.dim()).all(|b| {
            let (s, t) = (from.algebra.source(b), from.algebra.target(b));
            self.mats[t].mul(&from.act[b]) == to.act[b].mul(&self.mats[s])
        })
    }
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation(dims={:?})", self.dims)
    }
}

impl Representation {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Dimension at every vertex; entry w is also [M : S(w)].
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dim_total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn act(&self, b: usize) -> &Matrix {
        &self.act[b]
    }

    /// Same dimension vector and the same action matrices. Meaningful for
    /// modules produced in canonical coordinates (e.g. trace quotients).
    pub fn identical(&self, other: &Representation) -> bool {
        self.dims == other.dims && self.act == other.act
    }

    pub fn zero(algebra: Arc<Algebra>) -> Representation {
        let dims = vec![0; algebra.n()];
        Self::from_dims_with(algebra, dims, |_| None)
    }

    /// Helper: allocate zero action matrices of the right shapes, then let
    /// `fill` override individual ones.
    fn from_dims_with(
        algebra: Arc<Algebra>,
        dims: Vec<usize>,
        fill: impl Fn(usize) -> Option<Matrix>,
    ) -> Representation {
        let field = algebra.field();
        let act = (0..algebra.dim())
            .map(|b| {
                if let Some(m) = fill(b) {
                    return m;
                }
                let (s, t) = (algebra.source(b), algebra.target(b));
                if algebra.is_idempotent(b) {
                    Matrix::identity(dims[s], field)
                } else {
                    Matrix::zero(dims[t], dims[s], field)
                }
            })
            .collect();
        Representation { algebra, dims, act }
    }

    pub fn simple(algebra: &Arc<Algebra>, v: usize) -> Representation {
        let mut dims = vec![0; algebra.n()];
        dims[v] = 1;
        Self::from_dims_with(algebra.clone(), dims, |_| None)
    }

    /// The indecomposable projective P(v) = e_v A, with basis the algebra
    /// basis elements of source v, grouped by target in index order.
    pub fn projective(algebra: &Arc<Algebra>, v: usize) -> Representation {
        let field = algebra.field();
        let n = algebra.n();
        let mut component: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &x in algebra.basis_with_source(v) {
            component[algebra.target(x)].push(x);
        }
        let pos_of = |x: usize| -> (usize, usize) {
            let t = algebra.target(x);
            (t, component[t].iter().position(|&y| y == x).unwrap())
        };
        let dims: Vec<usize> = component.iter().map(Vec::len).collect();
        let act = (0..algebra.dim())
            .map(|b| {
                let (s, t) = (algebra.source(b), algebra.target(b));
                let mut m = Matrix::zero(dims[t], dims[s], field);
                for (col, &x) in component[s].iter().enumerate() {
                    for (k, c) in algebra.mult_basis(x, b) {
                        let (tk, row) = pos_of(*k);
                        debug_assert_eq!(tk, t);
                        m.set(row, col, c.clone());
                    }
                }
                m
            })
            .collect();
        Representation {
            algebra: algebra.clone(),
            dims,
            act,
        }
    }

    pub fn direct_sum(algebra: &Arc<Algebra>, parts: &[&Representation]) -> Representation {
        let field = algebra.field();
        for p in parts {
            assert!(
                Arc::ptr_eq(&p.algebra, algebra),
                "direct sum across algebras"
            );
        }
        let n = algebra.n();
        let dims: Vec<usize> = (0..n)
            .map(|w| parts.iter().map(|p| p.dims[w]).sum())
            .collect();
        let act = (0..algebra.dim())
            .map(|b| {
                let (s, t) = (algebra.source(b), algebra.target(b));
                let mut m = Matrix::zero(dims[t], dims[s], field);
                let (mut ro, mut co) = (0, 0);
                for p in parts {
                    let blk = &p.act[b];
                    for r in 0..blk.rows() {
                        for c in 0..blk.cols() {
                            m.set(ro + r, co + c, blk.at(r, c).clone());
                        }
                    }
                    ro += p.dims[t];
                    co += p.dims[s];
                }
                m
            })
            .collect();
        Representation {
            algebra: algebra.clone(),
            dims,
            act,
        }
    }

    pub fn regular(algebra: &Arc<Algebra>) -> Representation {
        let projs: Vec<Representation> = (0..algebra.n())
            .map(|v| Self::projective(algebra, v))
            .collect();
        let refs: Vec<&Representation> = projs.iter().collect();
        Self::direct_sum(algebra, &refs)
    }

    /// The dual module over `target`, which must be (a copy of) the
    /// opposite algebra: same dimensions, transposed action matrices.
    pub fn dual(&self, target: &Arc<Algebra>) -> Representation {
        assert_eq!(
            target.dim(),
            self.algebra.dim(),
            "dual against a different algebra"
        );
        let act: Vec<Matrix> = (0..self.algebra.dim())
            .map(|b| self.act[b].transpose())
            .collect();
        for (b, m) in act.iter().enumerate() {
            debug_assert_eq!(m.rows(), self.dims[target.target(b)]);
            debug_assert_eq!(m.cols(), self.dims[target.source(b)]);
        }
        Representation {
            algebra: target.clone(),
            dims: self.dims.clone(),
            act,
        }
    }

    /// The indecomposable injective I(v) = D(e_v A^op).
    pub fn injective(algebra: &Arc<Algebra>, v: usize) -> Representation {
        Self::projective(&algebra.opposite(), v).dual(algebra)
    }

    /// Builds a module from matrices for the arrows of the presenting
    /// quiver, checking the relations and the nilpotency bound.
    pub fn from_arrow_matrices(
        algebra: &Arc<Algebra>,
        dims: Vec<usize>,
        arrow_mats: Vec<Matrix>,
    ) -> Result<Representation, RepError> {
        let q = algebra.quiver().ok_or(RepError::NoQuiver)?.clone();
        if dims.len() != algebra.n() {
            return Err(RepError::DimCountMismatch {
                expected: algebra.n(),
                got: dims.len(),
            });
        }
        if arrow_mats.len() != q.arrows.len() {
            return Err(RepError::ArrowCountMismatch {
                expected: q.arrows.len(),
                got: arrow_mats.len(),
            });
        }
        for (ai, a) in q.arrows.iter().enumerate() {
            let (rows, cols) = (dims[a.target], dims[a.source]);
            let m = &arrow_mats[ai];
            if m.rows() != rows || m.cols() != cols {
                return Err(RepError::ArrowShapeMismatch {
                    arrow: ai,
                    rows,
                    cols,
                    got_rows: m.rows(),
                    got_cols: m.cols(),
                });
            }
        }
        let field = algebra.field();
        // First arrow acts first: matrix(a1..ak) = A_k ... A_1.
        let path_matrix = |arrows: &[usize], source: usize| -> Matrix {
            let mut m = Matrix::identity(dims[source], field);
            for &a in arrows {
                m = arrow_mats[a].mul(&m);
            }
            m
        };
        for (ri, r) in algebra.relations().iter().enumerate() {
            let first = q.path(&r.terms[0].arrows).unwrap();
            let (src, tgt) = (first.source, first.target(&q));
            let mut sum = Matrix::zero(dims[tgt], dims[src], field);
            for t in &r.terms {
                let mut m = path_matrix(&t.arrows, src);
                if t.coeff != 1 {
                    let c = field.from_int(t.coeff);
                    m = m.scale(&c);
                }
                sum = sum.add(&m);
            }
            if !sum.is_zero() {
                return Err(RepError::RelationNotSatisfied { relation: ri });
            }
        }
        let bound = algebra.nilpotency();
        for p in q.paths_below(bound + 1) {
            if p.len() == bound && !path_matrix(&p.arrows, p.source).is_zero() {
                return Err(RepError::NilpotencyNotSatisfied { bound });
            }
        }
        let act = (0..algebra.dim())
            .map(|b| {
                let p = algebra.basis_path(b).expect("quiver-presented basis");
                path_matrix(&p.arrows, p.source)
            })
            .collect();
        Ok(Representation {
            algebra: algebra.clone(),
            dims,
            act,
        })
    }

    /// Checks that the stored action respects every basis product. Cubic in
    /// the algebra dimension; for tests.
    pub fn check_homomorphism_property(&self) -> bool {
        let a = &self.algebra;
        let field = a.field();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if a.target(i) != a.source(j) {
                    continue;
                }
                let composed = self.act[j].mul(&self.act[i]);
                let mut expanded =
                    Matrix::zero(self.dims[a.target(j)], self.dims[a.source(i)], field);
                for (k, c) in a.mult_basis(i, j) {
                    expanded = expanded.add(&self.act[*k].scale(c));
                }
                if composed != expanded {
                    return false;
                }
            }
        }
        true
    }

    /// The trace of the vertex set: the smallest submodule containing every
    /// component V_w for w in the set. One pass suffices because products
    /// of basis elements reduce to basis combinations with the same source.
    pub fn trace(&self, vertices: &[usize]) -> Vec<Subspace> {
        let field = self.algebra.field();
        let in_set = {
            let mut f = vec![false; self.algebra.n()];
            for &v in vertices {
                f[v] = true;
            }
            f
        };
        (0..self.algebra.n())
            .map(|w| {
                if in_set[w] {
                    return Subspace::full(self.dims[w], field);
                }
                let mut sub = Subspace::empty(self.dims[w], field);
                for b in self.algebra.n()..self.algebra.dim() {
                    if in_set[self.algebra.source(b)] && self.algebra.target(b) == w {
                        for c in 0..self.act[b].cols() {
                            sub.insert(&self.act[b].column(c));
                        }
                    }
                }
                sub
            })
            .collect()
    }

    /// rad M = M . rad A, the span of all non-idempotent basis actions.
    pub fn radical_subrep(&self) -> Vec<Subspace> {
        let field = self.algebra.field();
        (0..self.algebra.n())
            .map(|w| {
                let mut sub = Subspace::empty(self.dims[w], field);
                for b in self.algebra.n()..self.algebra.dim() {
                    if self.algebra.target(b) == w {
                        for c in 0..self.act[b].cols() {
                            sub.insert(&self.act[b].column(c));
                        }
                    }
                }
                sub
            })
            .collect()
    }

    pub fn sub_dims(spaces: &[Subspace]) -> Vec<usize> {
        spaces.iter().map(Subspace::dim).collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical_subrep();
        (0..self.dims.len())
            .map(|w| self.dims[w] - rad[w].dim())
            .collect()
    }

    /// The submodule spanned by the given per-vertex subspaces, which must
    /// be closed under the action.
    pub fn restrict(&self, spaces: &[Subspace]) -> Representation {
        let a = &self.algebra;
        let dims: Vec<usize> = Self::sub_dims(spaces);
        let act = (0..a.dim())
            .map(|b| {
                let (s, t) = (a.source(b), a.target(b));
                let cols: Vec<Vec<Scalar>> = spaces[s]
                    .basis()
                    .iter()
                    .map(|v| {
                        let w = self.act[b].mul_vec(v);
                        spaces[t]
                            .coords_in_basis(&w)
                            .expect("subspaces are closed under the action")
                    })
                    .collect();
                Matrix::from_columns(&cols, dims[t], a.field())
            })
            .collect();
        Representation {
            algebra: a.clone(),
            dims,
            act,
        }
    }

    /// The quotient by an action-closed family of subspaces, in canonical
    /// coordinates (the non-pivot coordinates of each subspace).
    pub fn quotient(&self, spaces: &[Subspace]) -> Representation {
        let a = &self.algebra;
        let dims: Vec<usize> = (0..a.n()).map(|w| self.dims[w] - spaces[w].dim()).collect();
        let field = a.field();
        let act = (0..a.dim())
            .map(|b| {
                let (s, t) = (a.source(b), a.target(b));
                let cols: Vec<Vec<Scalar>> = spaces[s]
                    .complement_indices()
                    .iter()
                    .map(|&c| {
                        let mut e = vec![field.zero(); self.dims[s]];
                        e[c] = field.one();
                        spaces[t].quotient_coords(&self.act[b].mul_vec(&e))
                    })
                    .collect();
                Matrix::from_columns(&cols, dims[t], field)
            })
            .collect();
        Representation {
            algebra: a.clone(),
            dims,
            act,
        }
    }

    pub fn radical(&self) -> Representation {
        self.restrict(&self.radical_subrep())
    }

    pub fn top(&self) -> Representation {
        self.quotient(&self.radical_subrep())
    }

    /// Kernel of a morphism out of this module, per vertex. Closed under
    /// the action since f intertwines.
    pub fn kernel_subrep(&self, f: &Morphism) -> Vec<Subspace> {
        (0..self.algebra.n())
            .map(|w| {
                let vecs = f.mats[w].kernel_basis();
                let mut sub = Subspace::empty(self.dims[w], self.algebra.field());
                for v in &vecs {
                    sub.insert(v);
                }
                sub
            })
            .collect()
    }

    /// Image of a morphism into this module, per vertex.
    pub fn image_subrep(&self, f: &Morphism) -> Vec<Subspace> {
        (0..self.algebra.n())
            .map(|w| {
                let mut sub = Subspace::empty(self.dims[w], self.algebra.field());
                for c in 0..f.mats[w].cols() {
                    sub.insert(&f.mats[w].column(c));
                }
                sub
            })
            .collect()
    }

    /// Constraint matrix whose kernel is Hom(self, other). Unknowns are the
    /// entries of all f_w in vertex order, row-major. Idempotent
    /// constraints hold by construction; each non-idempotent basis element
    /// contributes one block of equations.
    fn hom_system(&self, other: &Representation) -> (Matrix, usize) {
        let a = &self.algebra;
        let field = a.field();
        let n = a.n();
        let var_offset: Vec<usize> = {
            let mut off = vec![0; n + 1];
            for w in 0..n {
                off[w + 1] = off[w] + other.dims[w] * self.dims[w];
            }
            off
        };
        let unknowns = var_offset[n];
        let var = |w: usize, r: usize, c: usize| var_offset[w] + r * self.dims[w] + c;
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for b in n..a.dim() {
            let (s, t) = (a.source(b), a.target(b));
            let am = &self.act[b];
            let an = &other.act[b];
            // f_t . am - an . f_s = 0, entry (r, c): r < other.dims[t], c < self.dims[s].
            for r in 0..other.dims[t] {
                for c in 0..self.dims[s] {
                    let mut row = vec![field.zero(); unknowns];
                    let mut nonzero = false;
                    for k in 0..self.dims[t] {
                        let coef = am.at(k, c);
                        if !coef.is_zero() {
                            let v = var(t, r, k);
                            row[v] = row[v].clone() + coef.clone();
                            nonzero = true;
                        }
                    }
                    for k in 0..other.dims[s] {
                        let coef = an.at(r, k);
                        if !coef.is_zero() {
                            let v = var(s, k, c);
                            row[v] = row[v].clone() - coef.clone();
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        rows.push(row);
                    }
                }
            }
        }
        let mat = Matrix::from_rows(rows, unknowns, field);
        (mat, unknowns)
    }

    pub fn hom_dim(&self, other: &Representation) -> usize {
        let (sys, unknowns) = self.hom_system(other);
        unknowns - sys.rank()
    }

    pub fn hom_basis(&self, other: &Representation) -> Vec<Morphism> {
        let a = &self.algebra;
        let n = a.n();
        let (sys, _) = self.hom_system(other);
        sys.kernel_basis()
            .into_iter()
            .map(|sol| {
                let mut mats = Vec::with_capacity(n);
                let mut off = 0;
                for w in 0..n {
                    let (r, c) = (other.dims[w], self.dims[w]);
                    let mut m = Matrix::zero(r, c, a.field());
                    for i in 0..r {
                        for j in 0..c {
                            m.set(i, j, sol[off + i * c + j].clone());
                        }
                    }
                    off += r * c;
                    mats.push(m);
                }
                Morphism { mats }
            })
            .collect()
    }

    /// A projective cover P0 ->> M. Generators are the earliest standard
    /// basis vectors of each component extending rad M.
    pub fn projective_cover(&self) -> (Representation, Morphism) {
        let a = &self.algebra;
        let field = a.field();
        let rad = self.radical_subrep();
        // (vertex, generator vector) per top basis element.
        let mut gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for (w, rad_w) in rad.iter().enumerate() {
            let mut span = rad_w.clone();
            for i in 0..self.dims[w] {
                let mut e = vec![field.zero(); self.dims[w]];
                e[i] = field.one();
                if span.insert(&e) {
                    gens.push((w, e));
                }
            }
        }
        let projs: Vec<Representation> =
            gens.iter().map(|(w, _)| Self::projective(a, *w)).collect();
        let refs: Vec<&Representation> = projs.iter().collect();
        let p0 = Self::direct_sum(a, &refs);
        // Column layout of P0 at vertex u follows direct_sum: generators in
        // order, within each the basis elements x (src = w, tgt = u) in
        // index order; pi sends that column to act[x] . g.
        let mut cols_at: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); a.n()];
        for (w, g) in &gens {
            for &x in a.basis_with_source(*w) {
                let u = a.target(x);
                cols_at[u].push(self.act[x].mul_vec(g));
            }
        }
        let mats: Vec<Matrix> = (0..a.n())
            .map(|u| Matrix::from_columns(&cols_at[u], self.dims[u], field))
            .collect();
        let pi = Morphism { mats };
        debug_assert!(pi.is_map(&p0, self));
        debug_assert_eq!(
            Self::sub_dims(&self.image_subrep(&pi)),
            self.dims,
            "cover must be surjective"
        );
        (p0, pi)
    }

    /// dim Ext^1(self, other) via a projective presentation
    /// 0 -> K -> P0 -> M -> 0:
    /// hom(K, N) - hom(P0, N) + hom(M, N).
    pub fn ext1_dim(&self, other: &Representation) -> usize {
        let (p0, pi) = self.projective_cover();
        let omega = p0.restrict(&p0.kernel_subrep(&pi));
        omega.hom_dim(other) + self.hom_dim(other) - p0.hom_dim(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::algebra::fixtures::{linear_algebra, paper_algebra, semisimple};
    use crate::field::FieldSpec;
    use crate::quiver::{Arrow, Quiver};

    fn r(v: i64) -> Scalar {
        FieldSpec::Rational.from_int(v)
    }

    #[test]
    fn projective_dimension_vectors() {
        let a = paper_algebra();
        let expect = [
            vec![1, 1, 2, 1],
            vec![0, 1, 1, 1],
            vec![0, 0, 1, 1],
            vec![0, 0, 0, 1],
        ];
        for (v, want) in expect.iter().enumerate() {
            let p = Representation::projective(&a, v);
            assert_eq!(p.dims(), &want[..], "P({})", v + 1);
            assert!(p.check_homomorphism_property());
        }
        let reg = Representation::regular(&a);
        assert_eq!(reg.dims(), &[1, 2, 4, 4]);
        assert_eq!(reg.dim_total(), 11);
    }

    #[test]
    fn injective_dimension_vectors() {
        let a = paper_algebra();
        let expect = [
            vec![1, 0, 0, 0],
            vec![1, 1, 0, 0],
            vec![2, 1, 1, 0],
            vec![1, 1, 1, 1],
        ];
        for (v, want) in expect.iter().enumerate() {
            let i = Representation::injective(&a, v);
            assert_eq!(i.dims(), &want[..], "I({})", v + 1);
            assert!(i.check_homomorphism_property());
        }
    }

    #[test]
    fn radical_and_top() {
        let a = paper_algebra();
        let p1 = Representation::projective(&a, 0);
        let rad = p1.radical();
        assert_eq!(rad.dims(), &[0, 1, 2, 1]);
        assert!(rad.check_homomorphism_property());
        assert_eq!(p1.top_dims(), &[1, 0, 0, 0]);
        assert!(p1.top().identical(&Representation::simple(&a, 0)));
        // Simples have no radical.
        assert_eq!(Representation::simple(&a, 2).radical().dim_total(), 0);
    }

    #[test]
    fn trace_submodules() {
        let a = paper_algebra();
        let p1 = Representation::projective(&a, 0);
        assert_eq!(Representation::sub_dims(&p1.trace(&[3])), vec![0, 0, 0, 1]);
        assert_eq!(
            Representation::sub_dims(&p1.trace(&[1, 2])),
            vec![0, 1, 2, 1]
        );
        assert_eq!(Representation::sub_dims(&p1.trace(&[0])), vec![1, 1, 2, 1]);
        assert_eq!(Representation::sub_dims(&p1.trace(&[])), vec![0, 0, 0, 0]);
        // Quotient by the full trace of everything above vertex 1 is S(1).
        let q = p1.quotient(&p1.trace(&[1, 2, 3]));
        assert!(q.identical(&Representation::simple(&a, 0)));
    }

    #[test]
    fn yoneda_hom_from_projectives() {
        let a = paper_algebra();
        let mods: Vec<Representation> = (0..4)
            .map(|v| Representation::projective(&a, v))
            .chain((0..4).map(|v| Representation::injective(&a, v)))
            .chain(std::iter::once(Representation::projective(&a, 0).radical()))
            .collect();
        for i in 0..4 {
            let p = Representation::projective(&a, i);
            for m in &mods {
                assert_eq!(p.hom_dim(m), m.dim_at(i), "hom(P({}), {:?})", i + 1, m);
            }
        }
    }

    #[test]
    fn hom_basis_consists_of_maps() {
        let a = paper_algebra();
        let p1 = Representation::projective(&a, 0);
        let p2 = Representation::projective(&a, 1);
        let fs = p2.hom_basis(&p1);
        assert_eq!(fs.len(), p1.dim_at(1));
        for f in &fs {
            assert!(f.is_map(&p2, &p1));
        }
    }

    #[test]
    fn ext_between_simples_counts_arrows() {
        let a = paper_algebra();
        let s: Vec<Representation> = (0..4).map(|v| Representation::simple(&a, v)).collect();
        let mut expect = vec![vec![0usize; 4]; 4];
        expect[0][1] = 1; // a
        expect[0][2] = 1; // b
        expect[1][2] = 1; // c
        expect[2][3] = 1; // d
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(
                    s[i].ext1_dim(&s[j]),
                    expect[i][j],
                    "ext(S{}, S{})",
                    i + 1,
                    j + 1
                );
            }
        }
        // Projectives have no self-extensions or extensions at all.
        for i in 0..4 {
            let p = Representation::projective(&a, i);
            for simple in &s {
                assert_eq!(p.ext1_dim(simple), 0);
            }
        }
    }

    #[test]
    fn ext_is_presentation_independent() {
        // Same Ext value through a redundant, non-minimal presentation.
        let a = paper_algebra();
        let s1 = Representation::simple(&a, 0);
        let s3 = Representation::simple(&a, 2);
        let (p0, pi) = s1.projective_cover();
        let extra = Representation::projective(&a, 1);
        let p0big = Representation::direct_sum(&a, &[&p0, &extra]);
        let mats = (0..4)
            .map(|w| {
                let mut m = Matrix::zero(s1.dim_at(w), p0big.dim_at(w), a.field());
                for r_ in 0..pi.mats[w].rows() {
                    for c_ in 0..pi.mats[w].cols() {
                        m.set(r_, c_, pi.mats[w].at(r_, c_).clone());
                    }
                }
                m
            })
            .collect();
        let pi_big = Morphism { mats };
        assert!(pi_big.is_map(&p0big, &s1));
        let omega = p0big.restrict(&p0big.kernel_subrep(&pi_big));
        let via_big = omega.hom_dim(&s3) + s1.hom_dim(&s3) - p0big.hom_dim(&s3);
        assert_eq!(via_big, s1.ext1_dim(&s3));
        assert_eq!(via_big, 1);
    }

    #[test]
    fn arrow_matrix_construction_checks_relations() {
        let a = paper_algebra();
        let f = a.field();
        let m1 = |v: i64| Matrix::from_rows(vec![vec![f.from_int(v)]], 1, f);
        // a*c*d = 1 but b*d = 0: violates a*c*d - b*d.
        let bad = Representation::from_arrow_matrices(
            &a,
            vec![1, 1, 1, 1],
            vec![m1(1), m1(0), m1(1), m1(1)],
        );
        assert!(matches!(
            bad,
            Err(RepError::RelationNotSatisfied { relation: 0 })
        ));
        let good = Representation::from_arrow_matrices(
            &a,
            vec![1, 1, 1, 1],
            vec![m1(1), m1(1), m1(1), m1(1)],
        )
        .unwrap();
        assert!(good.check_homomorphism_property());
        assert_eq!(good.radical().dims(), &[0, 1, 1, 1]);
    }

    #[test]
    fn arrow_matrix_construction_checks_nilpotency() {
        let q = Quiver {
            n: 1,
            arrows: vec![Arrow {
                label: "x".into(),
                source: 0,
                target: 0,
            }],
        };
        let a = build_algebra("loop", q, vec![], Some(2), FieldSpec::Rational).unwrap();
        let id = Matrix::identity(1, a.field());
        assert!(matches!(
            Representation::from_arrow_matrices(&a, vec![1], vec![id]),
            Err(RepError::NilpotencyNotSatisfied { bound: 2 })
        ));
        let nil = Matrix::from_rows(
            vec![vec![r(0), r(1)], vec![r(0), r(0)]],
            2,
            FieldSpec::Rational,
        );
        let m = Representation::from_arrow_matrices(&a, vec![2], vec![nil]).unwrap();
        assert!(m.check_homomorphism_property());
        assert_eq!(m.radical().dim_total(), 1);
    }

    #[test]
    fn duality_swaps_projectives_and_injectives() {
        let a = paper_algebra();
        let op = a.opposite();
        for v in 0..4 {
            // D(I_A(v)) over A^op is the projective e_v A^op.
            let i = Representation::injective(&a, v);
            let di = i.dual(&op);
            assert!(di.identical(&Representation::projective(&op, v)));
        }
        let s = Representation::simple(&a, 1);
        assert!(s.dual(&op).identical(&Representation::simple(&op, 1)));
    }

    #[test]
    fn semisimple_and_linear_sanity() {
        let ss = semisimple(3);
        let reg = Representation::regular(&ss);
        assert_eq!(reg.dims(), &[1, 1, 1]);
        assert_eq!(reg.radical().dim_total(), 0);
        let l3 = linear_algebra(3);
        let p1 = Representation::projective(&l3, 0);
        assert_eq!(p1.dims(), &[1, 1, 1]);
        assert_eq!(
            Representation::simple(&l3, 0).ext1_dim(&Representation::simple(&l3, 1)),
            1
        );
        assert_eq!(
            Representation::simple(&l3, 0).ext1_dim(&Representation::simple(&l3, 2)),
            0
        );
    }

    #[test]
    fn hom_respects_algebra_not_just_quiver() {
        // Over the corner on {3, 4} the module theory is the A2 one.
        let a = paper_algebra();
        let (c, _) = crate::algebra::corner(&a, &[2, 3]).unwrap();
        let p1 = Representation::projective(&c, 0);
        assert_eq!(p1.dims(), &[1, 1]);
        let s2 = Representation::simple(&c, 1);
        assert_eq!(Representation::simple(&c, 0).ext1_dim(&s2), 1);
        assert!(p1.check_homomorphism_property());
    }

    #[test]
    fn prime_field_agrees_with_rationals() {
        let (q, r) = crate::quiver::four_vertex_test_quiver();
        let ap = build_algebra("p", q, r, None, FieldSpec::Prime(32003)).unwrap();
        let aq = paper_algebra();
        for v in 0..4 {
            assert_eq!(
                Representation::projective(&ap, v).dims(),
                Representation::projective(&aq, v).dims()
            );
            assert_eq!(
                Representation::injective(&ap, v).dims(),
                Representation::injective(&aq, v).dims()
            );
        }
        let s0p = Representation::simple(&ap, 0);
        let s2p = Representation::simple(&ap, 2);
        assert_eq!(s0p.ext1_dim(&s2p), 1);
    }
}
