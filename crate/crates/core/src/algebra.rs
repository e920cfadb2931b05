//! Finite-dimensional basic algebras with a fixed graded basis.
//!
//! `build_algebra` constructs a bound quiver algebra KQ/I from a quiver,
//! relations, and a nilpotency bound N with J^N inside I: the basis is the
//! set of paths of length < N not hitting a pivot of the row space spanned
//! by all products u*r*v of relations with paths (terms of length >= N
//! dropped). Corner and quotient constructions return plain
//! structure-constant algebras without a quiver presentation.
//!
//! Invariants kept by every constructor:
//! - basis elements 0..n-1 are the vertex idempotents, in vertex order;
//! - every basis element b lives in one Peirce block e_src A e_tgt;
//! - the radical is exactly the span of the non-idempotent basis elements.

use crate::field::{is_prime, FieldSpec, Scalar};
use crate::matrix::Subspace;
use crate::quiver::{Path, Quiver, Relation};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("relation {relation} has a term of length < 2; the ideal must sit inside the arrow radical squared")]
    NonAdmissibleRelation { relation: usize },
    #[error("relation {relation} has a non-composable term")]
    NonComposableTerm { relation: usize },
    #[error("relation {relation} mixes terms with different sources or targets")]
    NonParallelTerms { relation: usize },
    #[error("quiver has an oriented cycle; a nilpotency bound is required")]
    CyclicWithoutBound,
    #[error("nilpotency bound must be at least 2, got {given}")]
    NilpotencyTooSmall { given: usize },
    #[error("{value} is not prime")]
    NotPrime { value: u64 },
    #[error("prime {prime} must exceed the algebra dimension {dimension}")]
    PrimeTooSmall { prime: u64, dimension: usize },
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("spanning set is not a two-sided ideal")]
    NotTwoSided,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// One basis element: its Peirce block and a display label.
#[derive(Clone, Debug)]
pub struct BasisElem {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

type SparseVec = Vec<(usize, Scalar)>;

/// A basic algebra with a fixed basis and structure constants.
pub struct Algebra {
    name: String,
    field: FieldSpec,
    n: usize,
    basis: Vec<BasisElem>,
    /// mult[i][j] = basis_i * basis_j as a sparse combination, sorted by index.
    mult: Vec<Vec<SparseVec>>,
    /// Basis indices grouped by source vertex / target vertex.
    by_source: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
    quiver: Option<Quiver>,
    relations: Vec<Relation>,
    nilpotency: usize,
    /// For quiver-presented algebras: basis index of each arrow.
    arrow_basis: Vec<usize>,
    /// For quiver-presented algebras: the path behind each basis element.
    paths: Option<Vec<Path>>,
    opposite_cache: OnceLock<Arc<Algebra>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Algebra({}, n={}, dim={}, {})",
            self.name,
            self.n,
            self.dim(),
            self.field
        )
    }
}

impl Algebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Number of vertices (= simple modules).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_elem(&self, i: usize) -> &BasisElem {
        &self.basis[i]
    }

    pub fn source(&self, i: usize) -> usize {
        self.basis[i].source
    }

    pub fn target(&self, i: usize) -> usize {
        self.basis[i].target
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        i < self.n
    }

    pub fn basis_with_source(&self, v: usize) -> &[usize] {
        &self.by_source[v]
    }

    pub fn basis_with_target(&self, v: usize) -> &[usize] {
        &self.by_target[v]
    }

    pub fn quiver(&self) -> Option<&Quiver> {
        self.quiver.as_ref()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// Basis index of arrow `a` of the presenting quiver.
    pub fn arrow_basis_index(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    /// The path a basis element stands for, if this algebra has a quiver.
    pub fn basis_path(&self, i: usize) -> Option<&Path> {
        self.paths.as_ref().map(|p| &p[i])
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }

    /// dim e_i A e_j for all i, j.
    pub fn graded_dims(&self) -> Vec<Vec<usize>> {
        let mut g = vec![vec![0; self.n]; self.n];
        for b in &self.basis {
            g[b.source][b.target] += 1;
        }
        g
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    /// The identity, i.e. the sum of the vertex idempotents.
    pub fn unit_element(&self) -> Vec<Scalar> {
        let mut u = self.zero_element();
        u[..self.n].fill(self.field.one());
        u
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_element();
        v[i] = self.field.one();
        v
    }

    /// Bilinear product of two coefficient vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut acc = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in &self.mult[i][j] {
                    acc[*k] = acc[*k].clone() + xi.clone() * yj.clone() * c.clone();
                }
            }
        }
        acc
    }

    /// Class of a quiver path, as a coefficient vector. `None` for algebras
    /// without a quiver presentation.
    pub fn class_of_path(&self, path: &Path) -> Option<Vec<Scalar>> {
        self.quiver.as_ref()?;
        let mut acc = self.basis_element(path.source);
        for &a in &path.arrows {
            acc = self.multiply(&acc, &self.basis_element(self.arrow_basis[a]));
        }
        Some(acc)
    }

    /// Exhaustive associativity check over basis triples. Quadratic-memory
    /// free, cubic time; meant for tests on small fixtures.
    pub fn check_associativity(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.multiply(&self.basis_element(i), &self.basis_element(j));
                for k in 0..d {
                    let left = self.multiply(&ij, &self.basis_element(k));
                    let jk = self.multiply(&self.basis_element(j), &self.basis_element(k));
                    let right = self.multiply(&self.basis_element(i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The opposite algebra: same basis, Peirce blocks transposed, products
    /// reversed. Quiver-presented algebras get the reversed quiver. Cached.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        self.opposite_cache
            .get_or_init(|| {
                let d = self.dim();
                let basis: Vec<BasisElem> = self
                    .basis
                    .iter()
                    .map(|b| BasisElem {
                        source: b.target,
                        target: b.source,
                        label: reverse_label(&b.label),
                    })
                    .collect();
                let mult: Vec<Vec<_>> = (0..d)
                    .map(|i| (0..d).map(|j| self.mult[j][i].clone()).collect())
                    .collect();
                let quiver = self.quiver.as_ref().map(|q| Quiver {
                    n: q.n,
                    arrows: q
                        .arrows
                        .iter()
                        .map(|a| crate::quiver::Arrow {
                            label: a.label.clone(),
                            source: a.target,
                            target: a.source,
                        })
                        .collect(),
                });
                let relations = self
                    .relations
                    .iter()
                    .map(|r| Relation {
                        terms: r
                            .terms
                            .iter()
                            .map(|t| crate::quiver::RelationTerm {
                                coeff: t.coeff,
                                arrows: t.arrows.iter().rev().copied().collect(),
                            })
                            .collect(),
                    })
                    .collect();
                let paths = self.paths.as_ref().map(|ps| {
                    ps.iter()
                        .map(|p| Path {
                            source: if p.arrows.is_empty() {
                                p.source
                            } else {
                                self.quiver.as_ref().unwrap().arrows[*p.arrows.last().unwrap()]
                                    .target
                            },
                            arrows: p.arrows.iter().rev().copied().collect(),
                        })
                        .collect()
                });
                Arc::new(finish_algebra(
                    format!("{}^op", self.name),
                    self.field,
                    self.n,
                    basis,
                    mult,
                    quiver,
                    relations,
                    self.nilpotency,
                    paths,
                ))
            })
            .clone()
    }

    /// Two-sided ideal generated by the idempotents of `vertices`: the span
    /// of all products through those vertices, returned as graded vectors
    /// closed under multiplication by basis elements.
    pub fn trace_ideal(&self, vertices: &[usize]) -> Vec<Vec<Scalar>> {
        let d = self.dim();
        let mut span = Subspace::empty(d, self.field);
        let mut work: Vec<Vec<Scalar>> = Vec::new();
        for &v in vertices {
            let e = self.basis_element(v);
            if span.insert(&e) {
                work.push(e);
            }
        }
        while let Some(w) = work.pop() {
            for b in 0..d {
                let eb = self.basis_element(b);
                for prod in [self.multiply(&w, &eb), self.multiply(&eb, &w)] {
                    if span.insert(&prod) {
                        work.push(prod);
                    }
                }
            }
        }
        span.basis().to_vec()
    }
}

fn reverse_label(label: &str) -> String {
    label.split('*').rev().collect::<Vec<_>>().join("*")
}

#[allow(clippy::too_many_arguments)]
fn finish_algebra(
    name: String,
    field: FieldSpec,
    n: usize,
    basis: Vec<BasisElem>,
    mult: Vec<Vec<SparseVec>>,
    quiver: Option<Quiver>,
    relations: Vec<Relation>,
    nilpotency: usize,
    paths: Option<Vec<Path>>,
) -> Algebra {
    let mut by_source = vec![Vec::new(); n];
    let mut by_target = vec![Vec::new(); n];
    for (i, b) in basis.iter().enumerate() {
        by_source[b.source].push(i);
        by_target[b.target].push(i);
    }
    let arrow_basis = match &quiver {
        Some(q) => q
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, _)| {
                basis
                    .iter()
                    .position(|b| {
                        b.label == q.arrows[ai].label
                            && b.source == q.arrows[ai].source
                            && b.target == q.arrows[ai].target
                    })
                    .expect("arrows survive in the basis")
            })
            .collect(),
        None => Vec::new(),
    };
    Algebra {
        name,
        field,
        n,
        basis,
        mult,
        by_source,
        by_target,
        quiver,
        relations,
        nilpotency,
        arrow_basis,
        paths,
        opposite_cache: OnceLock::new(),
    }
}

fn validate_relations(q: &Quiver, relations: &[Relation]) -> Result<(), AlgebraError> {
    for (ri, r) in relations.iter().enumerate() {
        let mut endpoints = None;
        for t in &r.terms {
            if t.arrows.len() < 2 {
                return Err(AlgebraError::NonAdmissibleRelation { relation: ri });
            }
            let Some(p) = q.path(&t.arrows) else {
                return Err(AlgebraError::NonComposableTerm { relation: ri });
            };
            let ep = (p.source, p.target(q));
            if *endpoints.get_or_insert(ep) != ep {
                return Err(AlgebraError::NonParallelTerms { relation: ri });
            }
        }
    }
    Ok(())
}

/// Builds KQ/I over the given field. The ideal is generated by the
/// relations together with all paths of length >= `nilpotency` (defaulted
/// to longest-path + 1 for acyclic quivers; mandatory otherwise).
pub fn build_algebra(
    name: &str,
    quiver: Quiver,
    relations: Vec<Relation>,
    nilpotency: Option<usize>,
    field: FieldSpec,
) -> Result<Arc<Algebra>, AlgebraError> {
    if let FieldSpec::Prime(p) = field {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime { value: p });
        }
    }
    validate_relations(&quiver, &relations)?;
    let bound = match nilpotency {
        Some(b) => {
            if b < 2 {
                return Err(AlgebraError::NilpotencyTooSmall { given: b });
            }
            b
        }
        None => match quiver.longest_path_len() {
            Some(l) => l + 1,
            None => return Err(AlgebraError::CyclicWithoutBound),
        },
    };

    // Column order: longer paths first, so pivots prefer long paths and
    // normal forms prefer short ones. Vertices and arrows can never be
    // pivots because every ideal row lives in paths of length >= 2.
    let mut columns = quiver.paths_below(bound);
    columns.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.source.cmp(&b.source))
            .then_with(|| a.arrows.cmp(&b.arrows))
    });
    let col_index: HashMap<Path, usize> = columns
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();

    let mut ideal = Subspace::empty(columns.len(), field);
    for r in &relations {
        let paths: Vec<Path> = r
            .terms
            .iter()
            .map(|t| quiver.path(&t.arrows).unwrap())
            .collect();
        let (src, tgt) = (paths[0].source, paths[0].target(&quiver));
        for u in &columns {
            if u.target(&quiver) != src {
                continue;
            }
            for v in &columns {
                if v.source != tgt {
                    continue;
                }
                let mut row = vec![field.zero(); columns.len()];
                let mut nonzero = false;
                for (t, p) in r.terms.iter().zip(paths.iter()) {
                    let full = u.compose(p, &quiver).unwrap().compose(v, &quiver).unwrap();
                    if full.len() >= bound {
                        continue; // declared nilpotent, already in the ideal
                    }
                    let c = col_index[&full];
                    row[c] = row[c].clone() + field.from_int(t.coeff);
                    nonzero = true;
                }
                if nonzero {
                    ideal.insert(&row);
                }
            }
        }
    }

    // Basis = non-pivot columns, stored idempotents-first.
    let mut basis_paths: Vec<&Path> = ideal
        .complement_indices()
        .iter()
        .map(|&i| &columns[i])
        .collect();
    basis_paths.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.source.cmp(&b.source))
            .then_with(|| a.arrows.cmp(&b.arrows))
    });
    for v in 0..quiver.n {
        if basis_paths.get(v).map(|p| (p.len(), p.source)) != Some((0, v)) {
            return Err(AlgebraError::Internal(format!(
                "trivial path at vertex {} lost during reduction",
                v + 1
            )));
        }
    }
    let basis_index: HashMap<&Path, usize> = basis_paths
        .iter()
        .enumerate()
        .map(|(i, p)| (*p, i))
        .collect();
    // Where each non-pivot column lands in the stored basis order.
    let complement = ideal.complement_indices();
    let col_to_basis: HashMap<usize, usize> = complement
        .iter()
        .map(|&c| (c, basis_index[&&columns[c]]))
        .collect();

    let d = basis_paths.len();
    let reduce_path = |p: &Path| -> SparseVec {
        if let Some(&b) = basis_index.get(p) {
            return vec![(b, field.one())];
        }
        let mut indicator = vec![field.zero(); columns.len()];
        indicator[col_index[p]] = field.one();
        let reduced = ideal.reduce(&indicator);
        let mut out: SparseVec = reduced
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (col_to_basis[&c], x.clone()))
            .collect();
        out.sort_by_key(|(k, _)| *k);
        out
    };

    let mut mult = vec![vec![Vec::new(); d]; d];
    for (i, p) in basis_paths.iter().enumerate() {
        for (j, q) in basis_paths.iter().enumerate() {
            let Some(pq) = p.compose(q, &quiver) else {
                continue;
            };
            if pq.len() >= bound {
                continue;
            }
            mult[i][j] = reduce_path(&pq);
        }
    }

    let basis: Vec<BasisElem> = basis_paths
        .iter()
        .map(|p| BasisElem {
            source: p.source,
            target: p.target(&quiver),
            label: p.display(&quiver),
        })
        .collect();

    if let FieldSpec::Prime(p) = field {
        if (p as u128) <= d as u128 {
            return Err(AlgebraError::PrimeTooSmall {
                prime: p,
                dimension: d,
            });
        }
    }

    let owned_paths: Vec<Path> = basis_paths.iter().map(|p| (*p).clone()).collect();
    Ok(Arc::new(finish_algebra(
        name.to_string(),
        field,
        quiver.n,
        basis,
        mult,
        Some(quiver),
        relations,
        bound,
        Some(owned_paths),
    )))
}

/// The corner algebra on a vertex subset: basis elements whose source and
/// target both lie in the subset, with the restricted products. Returns the
/// reindexing map (new vertex -> old vertex, sorted ascending).
pub fn corner(
    a: &Arc<Algebra>,
    vertices: &[usize],
) -> Result<(Arc<Algebra>, Vec<usize>), AlgebraError> {
    if vertices.is_empty() {
        return Err(AlgebraError::EmptyVertexSet);
    }
    let mut vmap: Vec<usize> = vertices.to_vec();
    vmap.sort_unstable();
    vmap.dedup();
    if let Some(&v) = vmap.iter().find(|&&v| v >= a.n()) {
        return Err(AlgebraError::VertexOutOfRange {
            vertex: v + 1,
            n: a.n(),
        });
    }
    let new_vertex: HashMap<usize, usize> =
        vmap.iter().enumerate().map(|(nv, &ov)| (ov, nv)).collect();
    let keep: Vec<usize> = (0..a.dim())
        .filter(|&i| new_vertex.contains_key(&a.source(i)) && new_vertex.contains_key(&a.target(i)))
        .collect();
    // Idempotents of kept vertices come first because vertices precede all
    // other basis elements in the parent and `keep` is increasing.
    let old_to_new: HashMap<usize, usize> =
        keep.iter().enumerate().map(|(ni, &oi)| (oi, ni)).collect();
    let basis: Vec<BasisElem> = keep
        .iter()
        .map(|&i| {
            let b = a.basis_elem(i);
            BasisElem {
                source: new_vertex[&b.source],
                target: new_vertex[&b.target],
                label: b.label.clone(),
            }
        })
        .collect();
    let mut mult = vec![vec![Vec::new(); keep.len()]; keep.len()];
    for (ni, &oi) in keep.iter().enumerate() {
        for (nj, &oj) in keep.iter().enumerate() {
            mult[ni][nj] = a
                .mult_basis(oi, oj)
                .iter()
                .map(|(k, c)| {
                    (
                        *old_to_new.get(k).expect("corner closed under products"),
                        c.clone(),
                    )
                })
                .collect();
        }
    }
    let alg = finish_algebra(
        format!("{}|corner", a.name()),
        a.field(),
        vmap.len(),
        basis,
        mult,
        None,
        Vec::new(),
        a.nilpotency(),
        None,
    );
    Ok((Arc::new(alg), vmap))
}

/// Quotient by the span of `ideal` (graded vectors over the basis). The
/// span must be a two-sided ideal; vertices whose idempotent falls into it
/// disappear. Returns the reindexing map (new vertex -> old vertex).
pub fn quotient_by_ideal(
    a: &Arc<Algebra>,
    ideal: &[Vec<Scalar>],
) -> Result<(Arc<Algebra>, Vec<usize>), AlgebraError> {
    let d = a.dim();
    let field = a.field();
    // Graded pieces of every generator, one subspace per Peirce block.
    // Blocks are keyed (source, target); coordinates are parent basis indices.
    let mut blocks: HashMap<(usize, usize), Subspace> = HashMap::new();
    let split_insert = |v: &[Scalar], blocks: &mut HashMap<(usize, usize), Subspace>| {
        let mut pieces: HashMap<(usize, usize), Vec<Scalar>> = HashMap::new();
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let key = (a.source(i), a.target(i));
            let piece = pieces.entry(key).or_insert_with(|| vec![field.zero(); d]);
            piece[i] = x.clone();
        }
        for (key, piece) in pieces {
            blocks
                .entry(key)
                .or_insert_with(|| Subspace::empty(d, field))
                .insert(&piece);
        }
    };
    for v in ideal {
        assert_eq!(v.len(), d, "ideal vector length mismatch");
        split_insert(v, &mut blocks);
    }
    let contains = |blocks: &HashMap<(usize, usize), Subspace>, v: &[Scalar]| -> bool {
        let mut rem = v.to_vec();
        for (key, sub) in blocks {
            let _ = key;
            rem = sub.reduce(&rem);
        }
        rem.iter().all(Scalar::is_zero)
    };
    // Two-sidedness: multiplying any block vector by any basis element stays
    // inside the span.
    let mut closed = true;
    'outer: for sub in blocks.values() {
        for row in sub.basis() {
            for b in 0..d {
                let eb = a.basis_element(b);
                if !contains(&blocks, &a.multiply(row, &eb))
                    || !contains(&blocks, &a.multiply(&eb, row))
                {
                    closed = false;
                    break 'outer;
                }
            }
        }
    }
    if !closed {
        return Err(AlgebraError::NotTwoSided);
    }

    let killed: Vec<bool> = (0..a.n())
        .map(|v| {
            blocks
                .get(&(v, v))
                .map(|s| s.contains(&a.basis_element(v)))
                .unwrap_or(false)
        })
        .collect();
    let vmap: Vec<usize> = (0..a.n()).filter(|&v| !killed[v]).collect();
    let new_vertex: HashMap<usize, usize> =
        vmap.iter().enumerate().map(|(nv, &ov)| (ov, nv)).collect();

    // Surviving coordinates: non-pivot parent indices whose block endpoints
    // survive. Pivot bookkeeping is global because block coordinate spaces
    // all embed in the parent coordinate space.
    let mut is_pivot = vec![false; d];
    for sub in blocks.values() {
        for &p in sub.pivots() {
            is_pivot[p] = true;
        }
    }
    let keep: Vec<usize> = (0..d)
        .filter(|&i| {
            !is_pivot[i]
                && new_vertex.contains_key(&a.source(i))
                && new_vertex.contains_key(&a.target(i))
        })
        .collect();
    let old_to_new: HashMap<usize, usize> =
        keep.iter().enumerate().map(|(ni, &oi)| (oi, ni)).collect();

    let reduce_full = |v: Vec<Scalar>| -> Vec<Scalar> {
        let mut rem = v;
        for sub in blocks.values() {
            rem = sub.reduce(&rem);
        }
        rem
    };

    let basis: Vec<BasisElem> = keep
        .iter()
        .map(|&i| {
            let b = a.basis_elem(i);
            BasisElem {
                source: new_vertex[&b.source],
                target: new_vertex[&b.target],
                label: b.label.clone(),
            }
        })
        .collect();
    let mut mult = vec![vec![Vec::new(); keep.len()]; keep.len()];
    for (ni, &oi) in keep.iter().enumerate() {
        for (nj, &oj) in keep.iter().enumerate() {
            let prod: Vec<Scalar> = {
                let mut full = a.zero_element();
                for (k, c) in a.mult_basis(oi, oj) {
                    full[*k] = c.clone();
                }
                reduce_full(full)
            };
            let mut sv: SparseVec = prod
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| {
                    (
                        *old_to_new
                            .get(&k)
                            .expect("reduction lands on surviving coordinates"),
                        x.clone(),
                    )
                })
                .collect();
            sv.sort_by_key(|(k, _)| *k);
            mult[ni][nj] = sv;
        }
    }
    let alg = finish_algebra(
        format!("{}|quotient", a.name()),
        field,
        vmap.len(),
        basis,
        mult,
        None,
        Vec::new(),
        a.nilpotency(),
        None,
    );
    Ok((Arc::new(alg), vmap))
}

#[cfg(test)]
pub mod fixtures {
    use super::*;
    use crate::quiver::four_vertex_test_quiver;

    /// The four-vertex commutativity-relation algebra over Q.
    pub fn paper_algebra() -> Arc<Algebra> {
        let (q, r) = four_vertex_test_quiver();
        build_algebra("paper_example", q, r, None, FieldSpec::Rational).unwrap()
    }

    /// Linear quiver 1 -> 2 -> ... -> n with no relations.
    pub fn linear_algebra(n: usize) -> Arc<Algebra> {
        let arrows = (0..n.saturating_sub(1))
            .map(|i| crate::quiver::Arrow {
                label: format!("a{}", i + 1),
                source: i,
                target: i + 1,
            })
            .collect();
        build_algebra(
            &format!("linear_{n}"),
            Quiver { n, arrows },
            vec![],
            None,
            FieldSpec::Rational,
        )
        .unwrap()
    }

    /// n isolated vertices.
    pub fn semisimple(n: usize) -> Arc<Algebra> {
        build_algebra(
            "semisimple",
            Quiver { n, arrows: vec![] },
            vec![],
            None,
            FieldSpec::Rational,
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::quiver::{four_vertex_test_quiver, Arrow, RelationTerm};

    #[test]
    fn paper_algebra_dimensions() {
        // Oracle: 12 paths, one independent ideal row (a*c*d - b*d and all
        // its translates u*r*v collapse to that single row), so dim = 11.
        let a = paper_algebra();
        assert_eq!(a.dim(), 11);
        let by_source: Vec<usize> = (0..4).map(|v| a.basis_with_source(v).len()).collect();
        assert_eq!(by_source, vec![5, 3, 2, 1]);
        assert!(a.check_associativity());
        // Idempotents are orthogonal and sum to the unit.
        let u = a.unit_element();
        assert_eq!(a.multiply(&u, &u), u);
    }

    #[test]
    fn path_classes_collapse_under_the_relation() {
        let a = paper_algebra();
        let q = a.quiver().unwrap().clone();
        let acd = a.class_of_path(&q.path(&[0, 2, 3]).unwrap()).unwrap();
        let bd = a.class_of_path(&q.path(&[1, 3]).unwrap()).unwrap();
        assert_eq!(acd, bd);
        assert!(!acd.iter().all(Scalar::is_zero));
        // e1 * a = a.
        let e1 = a.basis_element(0);
        let arrow_a = a.basis_element(a.arrow_basis_index(0));
        assert_eq!(a.multiply(&e1, &arrow_a), arrow_a);
        // d * d is not composable, hence zero.
        let arrow_d = a.basis_element(a.arrow_basis_index(3));
        assert!(a.multiply(&arrow_d, &arrow_d).iter().all(Scalar::is_zero));
    }

    #[test]
    fn small_algebra_dimensions() {
        assert_eq!(semisimple(3).dim(), 3);
        assert_eq!(linear_algebra(3).dim(), 6);
        assert_eq!(linear_algebra(4).dim(), 10);
    }

    #[test]
    fn cyclic_quiver_needs_bound() {
        let q = Quiver {
            n: 1,
            arrows: vec![Arrow {
                label: "x".into(),
                source: 0,
                target: 0,
            }],
        };
        assert!(matches!(
            build_algebra("loop", q.clone(), vec![], None, FieldSpec::Rational),
            Err(AlgebraError::CyclicWithoutBound)
        ));
        // K[x]/x^3 via the bound alone.
        let a = build_algebra("loop", q, vec![], Some(3), FieldSpec::Rational).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.check_associativity());
    }

    #[test]
    fn admissibility_is_enforced() {
        let (q, _) = four_vertex_test_quiver();
        let bad = Relation {
            terms: vec![RelationTerm {
                coeff: 1,
                arrows: vec![0],
            }],
        };
        assert!(matches!(
            build_algebra("bad", q, vec![bad], None, FieldSpec::Rational),
            Err(AlgebraError::NonAdmissibleRelation { .. })
        ));
    }

    #[test]
    fn opposite_transposes_grading() {
        let a = paper_algebra();
        let op = a.opposite();
        assert_eq!(op.dim(), 11);
        let g = a.graded_dims();
        let go = op.graded_dims();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g[i][j], go[j][i]);
            }
        }
        assert!(op.check_associativity());
        // Reversed quiver: arrows now run 2->1, 3->1, 3->2, 4->3.
        let rq = op.quiver().unwrap();
        assert_eq!(rq.arrows[0].source, 1);
        assert_eq!(rq.arrows[0].target, 0);
        // Opposite twice is value-identical where it counts.
        let opop = op.opposite();
        assert_eq!(opop.graded_dims(), g);
        assert_eq!(
            a.multiply(&a.basis_element(4), &a.basis_element(6)),
            opop.multiply(&opop.basis_element(4), &opop.basis_element(6))
        );
    }

    #[test]
    fn corner_restricts_basis() {
        let a = paper_algebra();
        let (c, vmap) = corner(&a, &[2, 3]).unwrap();
        assert_eq!(vmap, vec![2, 3]);
        // e3, e4, d.
        assert_eq!(c.dim(), 3);
        assert!(c.check_associativity());
        let (c1, _) = corner(&a, &[0]).unwrap();
        assert_eq!(c1.dim(), 1);
        let (call, _) = corner(&a, &[0, 1, 2, 3]).unwrap();
        assert_eq!(call.dim(), 11);
        assert!(corner(&a, &[]).is_err());
        assert!(corner(&a, &[7]).is_err());
    }

    #[test]
    fn quotient_by_vertex_trace_ideal() {
        // Kill vertex 4: the ideal A e4 A picks up every basis path with
        // target 4 (e4, d, c*d, b*d ~ a*c*d), so the quotient has dim 7.
        let a = paper_algebra();
        let ideal = a.trace_ideal(&[3]);
        assert_eq!(ideal.len(), 4);
        let (b, vmap) = quotient_by_ideal(&a, &ideal).unwrap();
        assert_eq!(vmap, vec![0, 1, 2]);
        assert_eq!(b.dim(), 7);
        assert!(b.check_associativity());
        // Quotient by zero ideal is a full copy.
        let (b0, _) = quotient_by_ideal(&a, &[]).unwrap();
        assert_eq!(b0.dim(), 11);
        // Quotient by everything is the zero algebra.
        let whole = a.trace_ideal(&[0, 1, 2, 3]);
        let (bz, vmap) = quotient_by_ideal(&a, &whole).unwrap();
        assert_eq!(bz.dim(), 0);
        assert!(vmap.is_empty());
    }

    #[test]
    fn quotient_rejects_one_sided_spans() {
        let a = paper_algebra();
        // The span of e1 alone is not two-sided (e1 * a = a escapes).
        let bad = vec![a.basis_element(0)];
        assert!(matches!(
            quotient_by_ideal(&a, &bad),
            Err(AlgebraError::NotTwoSided)
        ));
    }

    #[test]
    fn prime_field_constraints() {
        let (q, r) = four_vertex_test_quiver();
        assert!(matches!(
            build_algebra("p", q.clone(), r.clone(), None, FieldSpec::Prime(32004)),
            Err(AlgebraError::NotPrime { .. })
        ));
        assert!(matches!(
            build_algebra("p", q.clone(), r.clone(), None, FieldSpec::Prime(7)),
            Err(AlgebraError::PrimeTooSmall { .. })
        ));
        let a = build_algebra("p", q, r, None, FieldSpec::Prime(32003)).unwrap();
        assert_eq!(a.dim(), 11);
        assert!(a.check_associativity());
    }
}
