//! Exact-arithmetic toolkit for quasi-hereditary structures on bound
//! quiver algebras: standard and costandard modules for any total order on
//! the simples, the quasi-heredity test along with an independent heredity
//! chain certifier, neighbor Hom/Ext invariants, the twistability test for
//! adjacent transpositions, and an explorer that enumerates all
//! quasi-hereditary orders and certifies that they are connected by
//! twists.

pub mod algebra;
pub mod dot;
pub mod explorer;
pub mod field;
pub mod format;
pub mod matrix;
pub mod perm;
pub mod qh;
pub mod quiver;
pub mod random;
pub mod rep;
pub mod report;
pub mod twist;

pub use algebra::{build_algebra, corner, quotient_by_ideal, Algebra, AlgebraError};
pub use dot::{biquiver_dot, twist_graph_dot};
pub use explorer::{
    connect, enumerate_qh, transposition_word, twist_graph, verify_connectedness, ConnectPath,
    ExplorerError, Strategy, TwistGraph,
};
pub use field::{FieldSpec, Scalar};
pub use format::{AlgebraFile, ParseError};
pub use matrix::{Matrix, Subspace};
pub use perm::{Perm, PermError};
pub use qh::{
    costandard_module, heredity_chain_check, is_quasi_hereditary, standard_module, QhReport,
};
pub use quiver::{Arrow, Path, Quiver, Relation, RelationTerm};
pub use rep::{Morphism, RepError, Representation};
pub use report::{
    biquiver_report, check_report, connect_report, enumerate_report, standard_report, to_json,
    twist_graph_report, verify_report,
};
pub use twist::{
    biquiver, neighbor_invariants, twistable, Biquiver, NeighborInvariants, TwistDecision,
};
