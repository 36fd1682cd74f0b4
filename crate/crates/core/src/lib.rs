//! Group graphs for three presentation families.
//!
//! This crate builds the power graph, enhanced power graph, and commuting
//! graph of cyclic, dihedral, and dicyclic groups given by their
//! presentations, evaluates structural graph expressions (complete graphs,
//! copies, unions, joins) over labeled vertices, and decides graph
//! isomorphism with an invariant-guided backtracking search that returns
//! either an explicit bijection witness or a re-checkable non-isomorphism
//! certificate. On top of those pieces, [`verify`] re-derives a catalog of
//! named structural claims about these families (normal forms, unique
//! involutions, centralizer shapes, graph decompositions, and two
//! isomorphism theorems) as machine-checked reports.
//!
//! Everything is deterministic: element enumeration, vertex labels, edge
//! ordering, witness search, and serialized output are all fixed by the
//! input, never by hash or timing nondeterminism.

pub mod graphs;
pub mod groups;
pub mod iso;
pub mod verify;

pub use graphs::{
    commuting_graph, enhanced_power_graph, eval, power_graph, structure_expr_for, GraphDocument,
    GraphError, GraphExpr, LabeledGraph, StructureKind,
};
pub use groups::{FiniteGroup, GroupElement, GroupError, GroupFamily};
pub use iso::{
    check_witness, explicit_label_map, find_isomorphism, find_isomorphism_with_budget,
    fingerprint, Bijection, CertificateKind, Fingerprint, IsoError, IsoOutcome,
    NonIsoCertificate, RefinementRound, DEFAULT_NODE_BUDGET,
};
pub use verify::{
    survey, verify_lemmas, verify_remarks, verify_theorem1, verify_theorem2, ClaimReport,
    ClaimStatus, SurveyRow, VerifyError,
};
