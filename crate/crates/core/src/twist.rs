//! Invariants of adjacent order positions and the twistability test.
//!
//! For an order sigma and a position pair (p, p+1) with occupants x and y,
//! the four numbers
//!   H = dim Hom(Delta(x), Delta(y)),   E = dim Ext^1(Delta(x), Delta(y)),
//! and their costandard counterparts (computed as the same numbers over
//! the opposite algebra) control whether swapping x and y preserves
//! quasi-heredity.
//!
//! The swap is twistable when one of two one-sided conditions holds, on
//! the algebra or on its opposite: the Ext group vanishes and the trace of
//! x inside Delta(y) is a direct sum of H copies of Delta(x). Since that
//! trace is generated at x and Delta(x) has no factors above x, the
//! isomorphism holds exactly when the dimension vectors agree.

use crate::algebra::Algebra;
use crate::perm::Perm;
use crate::qh::{standard_dims, standard_module};
use crate::rep::Representation;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborInvariants {
    /// 0-indexed lower position p of the pair (p, p+1).
    pub position: usize,
    /// Vertex at position p.
    pub lower_vertex: usize,
    /// Vertex at position p+1.
    pub upper_vertex: usize,
    /// dim Hom(Delta(lower), Delta(upper)).
    pub hom: usize,
    /// dim Ext^1(Delta(lower), Delta(upper)).
    pub ext: usize,
    /// dim Hom(Nabla(upper), Nabla(lower)) = hom over the opposite.
    pub cohom: usize,
    /// dim Ext^1(Nabla(upper), Nabla(lower)) = ext over the opposite.
    pub coext: usize,
}

pub fn neighbor_invariants(a: &Arc<Algebra>, sigma: &Perm, p: usize) -> NeighborInvariants {
    assert!(p + 1 < sigma.n(), "position pair out of range");
    let x = sigma.vertex_at(p);
    let y = sigma.vertex_at(p + 1);
    let (hom, ext) = hom_ext_pair(a, sigma, x, y);
    let (cohom, coext) = hom_ext_pair(&a.opposite(), sigma, x, y);
    NeighborInvariants {
        position: p,
        lower_vertex: x,
        upper_vertex: y,
        hom,
        ext,
        cohom,
        coext,
    }
}

fn hom_ext_pair(a: &Arc<Algebra>, sigma: &Perm, x: usize, y: usize) -> (usize, usize) {
    let dx = standard_module(a, sigma, x);
    let dy = standard_module(a, sigma, y);
    (dx.hom_dim(&dy), dx.ext1_dim(&dy))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistDecision {
    pub twistable: bool,
    /// The standard-side condition fired.
    pub standard_side: bool,
    /// The costandard-side condition fired (i.e. on the opposite algebra).
    pub costandard_side: bool,
}

/// One-sided condition: Ext^1(Delta(x), Delta(y)) = 0 and the trace of x
/// in Delta(y) is Delta(x)^H. H = 0 degenerates to "no trace at all".
fn eps_one_side(a: &Arc<Algebra>, sigma: &Perm, p: usize) -> bool {
    let x = sigma.vertex_at(p);
    let y = sigma.vertex_at(p + 1);
    let dx = standard_module(a, sigma, x);
    let dy = standard_module(a, sigma, y);
    if dx.ext1_dim(&dy) != 0 {
        return false;
    }
    let h = dx.hom_dim(&dy);
    let trace_dims = Representation::sub_dims(&dy.trace(&[x]));
    let expected: Vec<usize> = dx.dims().iter().map(|d| d * h).collect();
    trace_dims == expected
}

/// Can positions p and p+1 be swapped while staying quasi-hereditary?
/// Meaningful for quasi-hereditary sigma.
pub fn twistable(a: &Arc<Algebra>, sigma: &Perm, p: usize) -> TwistDecision {
    assert!(p + 1 < sigma.n(), "position pair out of range");
    let standard_side = eps_one_side(a, sigma, p);
    let costandard_side = eps_one_side(&a.opposite(), sigma, p);
    TwistDecision {
        twistable: standard_side || costandard_side,
        standard_side,
        costandard_side,
    }
}

/// Everything the two-layer order diagram needs: standard dimension
/// vectors by position and Hom/Ext numbers for every adjacent pair. Solid
/// edges mark nonzero Ext, dotted edges nonzero Hom (1-based positions).
#[derive(Clone, Debug)]
pub struct Biquiver {
    pub order: Vec<usize>,
    /// 1-based vertex at each position.
    pub vertex_by_position: Vec<usize>,
    pub standard_dims_by_position: Vec<Vec<usize>>,
    pub invariants: Vec<NeighborInvariants>,
    /// 1-based positions p where Ext(Delta_p, Delta_{p+1}) != 0.
    pub solid: Vec<usize>,
    /// 1-based positions p where Hom(Delta_p, Delta_{p+1}) != 0.
    pub dotted: Vec<usize>,
}

pub fn biquiver(a: &Arc<Algebra>, sigma: &Perm) -> Biquiver {
    let n = sigma.n();
    let sdims = standard_dims(a, sigma);
    let invariants: Vec<NeighborInvariants> = (0..n.saturating_sub(1))
        .map(|p| neighbor_invariants(a, sigma, p))
        .collect();
    Biquiver {
        order: sigma.one_line(),
        vertex_by_position: (0..n).map(|p| sigma.vertex_at(p) + 1).collect(),
        standard_dims_by_position: (0..n).map(|p| sdims[sigma.vertex_at(p)].clone()).collect(),
        solid: invariants
            .iter()
            .filter(|iv| iv.ext != 0)
            .map(|iv| iv.position + 1)
            .collect(),
        dotted: invariants
            .iter()
            .filter(|iv| iv.hom != 0)
            .map(|iv| iv.position + 1)
            .collect(),
        invariants,
    }
}
