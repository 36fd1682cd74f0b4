//! Labeled simple graphs, the three group-graph builders, and an
//! expression algebra for structural graph formulas.
//!
//! [`LabeledGraph`] is an undirected simple graph over string-labeled
//! vertices: no loops, no multi-edges, symmetric adjacency. Vertices keep
//! their insertion order internally, but every export (edge lists, JSON,
//! DOT) is sorted lexicographically so identical inputs produce identical
//! bytes.
//!
//! [`GraphExpr`] captures structural formulas as data: complete graphs on
//! explicit label lists, k-fold copies, disjoint union, label-merging
//! union, and graph join. [`structure_expr_for`] emits the decompositions
//! of the three group graphs with canonical labels, so that evaluating the
//! expression reproduces the corresponding builder output label-for-label.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{FiniteGroup, GroupError};

/// Structural errors from graph construction and evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}` is not allowed")]
    SelfLoop(String),
    #[error("join operands share the vertex label `{0}`")]
    JoinOverlap(String),
    #[error("graphs have different vertex label sets")]
    VertexSetMismatch,
    #[error("relabeling maps two vertices to `{0}`")]
    RelabelCollision(String),
}

/// A simple undirected graph over unique string-labeled vertices.
#[derive(Debug, Clone, Default)]
pub struct LabeledGraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl LabeledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph with the given vertices and no edges.
    pub fn with_vertices<I, S>(labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut graph = Self::new();
        for label in labels {
            graph.add_vertex(label)?;
        }
        Ok(graph)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<(), GraphError> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(GraphError::DuplicateVertex(label));
        }
        self.index.insert(label.clone(), self.labels.len());
        self.labels.push(label);
        self.adjacency.push(BTreeSet::new());
        Ok(())
    }

    fn index_of(&self, label: &str) -> Result<usize, GraphError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        let ui = self.index_of(u)?;
        let vi = self.index_of(v)?;
        self.adjacency[ui].insert(vi);
        self.adjacency[vi].insert(ui);
        Ok(())
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&ui), Some(&vi)) => self.adjacency[ui].contains(&vi),
            _ => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Vertex labels in insertion order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    /// Vertex labels in lexicographic order.
    pub fn sorted_vertices(&self) -> Vec<&str> {
        self.index.keys().map(String::as_str).collect()
    }

    /// Neighbors of `label` in lexicographic order.
    pub fn neighbors(&self, label: &str) -> Result<Vec<&str>, GraphError> {
        let i = self.index_of(label)?;
        let mut out: Vec<&str> = self.adjacency[i]
            .iter()
            .map(|&j| self.labels[j].as_str())
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn degree(&self, label: &str) -> Result<usize, GraphError> {
        Ok(self.adjacency[self.index_of(label)?].len())
    }

    /// Degrees as a sorted (ascending) multiset.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(BTreeSet::len).collect();
        degrees.sort_unstable();
        degrees
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(&str, &str)> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (ui, neighbors) in self.adjacency.iter().enumerate() {
            for &vi in neighbors {
                let (a, b) = (self.labels[ui].as_str(), self.labels[vi].as_str());
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    /// True iff the two graphs have equal labeled edge sets. Requires
    /// equal vertex label sets.
    pub fn are_edge_identical(&self, other: &Self) -> Result<bool, GraphError> {
        if !self.same_vertex_set(other) {
            return Err(GraphError::VertexSetMismatch);
        }
        Ok(self.edges() == other.edges())
    }

    /// True iff every edge of `self` is an edge of `other`. Requires equal
    /// vertex label sets.
    pub fn edges_subset_of(&self, other: &Self) -> Result<bool, GraphError> {
        if !self.same_vertex_set(other) {
            return Err(GraphError::VertexSetMismatch);
        }
        Ok(self
            .edges()
            .iter()
            .all(|(u, v)| other.has_edge(u, v)))
    }

    fn same_vertex_set(&self, other: &Self) -> bool {
        self.labels.len() == other.labels.len()
            && self.index.keys().zip(other.index.keys()).all(|(a, b)| a == b)
    }

    /// A copy with every label rewritten through `f`; rejects collisions.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Self, GraphError> {
        let mut out = Self::new();
        for label in &self.labels {
            let new = f(label);
            if out.add_vertex(new.clone()).is_err() {
                return Err(GraphError::RelabelCollision(new));
            }
        }
        for (ui, neighbors) in self.adjacency.iter().enumerate() {
            for &vi in neighbors {
                if ui < vi {
                    out.adjacency[ui].insert(vi);
                    out.adjacency[vi].insert(ui);
                }
            }
        }
        Ok(out)
    }

    /// The serializable document form of this graph.
    pub fn to_document(&self, group: Option<&str>) -> GraphDocument {
        GraphDocument {
            group: group.map(str::to_string),
            vertices: self.index.keys().cloned().collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| (u.to_string(), v.to_string()))
                .collect(),
        }
    }

    /// Byte-stable DOT rendering: vertices then edges, both sorted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for label in self.index.keys() {
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  \"{u}\" -- \"{v}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Semantic equality: same vertex label set and same labeled edge set,
/// regardless of insertion order.
impl PartialEq for LabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.same_vertex_set(other) && self.edges() == other.edges()
    }
}

impl Eq for LabeledGraph {}

/// JSON document form of a graph: optional group descriptor, sorted
/// vertex list, and sorted `u < v` edge pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub group: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl GraphDocument {
    pub fn to_graph(&self) -> Result<LabeledGraph, GraphError> {
        let mut graph = LabeledGraph::with_vertices(self.vertices.iter().cloned())?;
        for (u, v) in &self.edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }
}

/// Power graph: `s ~ t` iff one is a power of the other. The identity is
/// adjacent to every other vertex.
pub fn power_graph(group: &FiniteGroup) -> LabeledGraph {
    let elements: Vec<_> = group.elements().collect();
    let n = elements.len();
    let mut in_cyclic = vec![vec![false; n]; n];
    for (si, &s) in elements.iter().enumerate() {
        for t in group.cyclic_subgroup(s) {
            in_cyclic[si][group.ordinal(t)] = true;
        }
    }
    build_graph(group, &elements, |si, ti| {
        in_cyclic[si][ti] || in_cyclic[ti][si]
    })
}

/// Enhanced power graph: `s ~ t` iff `s` and `t` generate a cyclic
/// subgroup — equivalently, iff some cyclic subgroup contains both.
pub fn enhanced_power_graph(group: &FiniteGroup) -> LabeledGraph {
    let elements: Vec<_> = group.elements().collect();
    let n = elements.len();
    let mut adjacent = vec![vec![false; n]; n];
    for &u in &elements {
        let members = group.cyclic_subgroup(u);
        for (k, &s) in members.iter().enumerate() {
            for &t in &members[k + 1..] {
                adjacent[group.ordinal(s)][group.ordinal(t)] = true;
                adjacent[group.ordinal(t)][group.ordinal(s)] = true;
            }
        }
    }
    build_graph(group, &elements, |si, ti| adjacent[si][ti])
}

/// Commuting graph: `s ~ t` iff `st = ts`. Central elements are universal.
pub fn commuting_graph(group: &FiniteGroup) -> LabeledGraph {
    let elements: Vec<_> = group.elements().collect();
    build_graph(group, &elements, |si, ti| {
        group.commutes(elements[si], elements[ti])
    })
}

fn build_graph(
    group: &FiniteGroup,
    elements: &[crate::groups::GroupElement],
    mut adjacent: impl FnMut(usize, usize) -> bool,
) -> LabeledGraph {
    let labels: Vec<String> = elements.iter().map(|&e| group.label(e)).collect();
    let mut graph = LabeledGraph::with_vertices(labels.iter().cloned())
        .expect("group element labels are unique");
    for si in 0..elements.len() {
        for ti in si + 1..elements.len() {
            if adjacent(si, ti) {
                graph.adjacency[si].insert(ti);
                graph.adjacency[ti].insert(si);
            }
        }
    }
    graph
}

/// A structural graph formula over labeled graphs.
///
/// `DisjointUnion` treats operand vertices as distinct regardless of their
/// labels: when operand label sets overlap, every operand's labels get a
/// `#<operand index>` suffix (1-based); label-disjoint operands are left
/// untouched so canonical labelings survive. `MergingUnion` unions
/// vertices and edges by label. `Join` requires label-disjoint operands
/// and adds all edges between them. `Copies(k, e)` is the disjoint union
/// of `k` copies of `e`.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphExpr {
    /// Complete graph on an explicit label list; `K_0` and `K_1` are legal.
    CompleteOn(Vec<String>),
    Copies(usize, Box<GraphExpr>),
    DisjointUnion(Vec<GraphExpr>),
    MergingUnion(Vec<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Literal(LabeledGraph),
}

impl GraphExpr {
    pub fn complete_on<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        GraphExpr::CompleteOn(labels.into_iter().map(Into::into).collect())
    }

    pub fn join(left: GraphExpr, right: GraphExpr) -> Self {
        GraphExpr::Join(Box::new(left), Box::new(right))
    }
}

/// Evaluates a structural expression to a labeled graph.
pub fn eval(expr: &GraphExpr) -> Result<LabeledGraph, GraphError> {
    match expr {
        GraphExpr::CompleteOn(labels) => {
            let mut graph = LabeledGraph::with_vertices(labels.iter().cloned())?;
            for (i, u) in labels.iter().enumerate() {
                for v in &labels[i + 1..] {
                    graph.add_edge(u, v)?;
                }
            }
            Ok(graph)
        }
        GraphExpr::Copies(k, inner) => {
            let parts = vec![(**inner).clone(); *k];
            eval(&GraphExpr::DisjointUnion(parts))
        }
        GraphExpr::DisjointUnion(parts) => {
            let evaluated: Vec<LabeledGraph> =
                parts.iter().map(eval).collect::<Result<_, _>>()?;
            let mut seen: BTreeSet<&str> = BTreeSet::new();
            let disjoint = evaluated
                .iter()
                .flat_map(|g| g.vertices())
                .all(|label| seen.insert(label));
            let mut out = LabeledGraph::new();
            for (i, part) in evaluated.iter().enumerate() {
                let part = if disjoint {
                    part.clone()
                } else {
                    part.relabel(|label| format!("{label}#{}", i + 1))?
                };
                merge_into(&mut out, &part)?;
            }
            Ok(out)
        }
        GraphExpr::MergingUnion(parts) => {
            let mut out = LabeledGraph::new();
            for part in parts {
                merge_into(&mut out, &eval(part)?)?;
            }
            Ok(out)
        }
        GraphExpr::Join(left, right) => {
            let left = eval(left)?;
            let right = eval(right)?;
            if let Some(shared) = left
                .index
                .keys()
                .find(|label| right.has_vertex(label))
            {
                return Err(GraphError::JoinOverlap(shared.clone()));
            }
            let mut out = left.clone();
            merge_into(&mut out, &right)?;
            for u in left.vertices() {
                for v in right.vertices() {
                    out.add_edge(u, v)?;
                }
            }
            Ok(out)
        }
        GraphExpr::Literal(graph) => Ok(graph.clone()),
    }
}

/// Adds `part`'s vertices and edges into `target`, merging by label.
fn merge_into(target: &mut LabeledGraph, part: &LabeledGraph) -> Result<(), GraphError> {
    for label in part.vertices() {
        if !target.has_vertex(label) {
            target.add_vertex(label)?;
        }
    }
    for (u, v) in part.edges() {
        target.add_edge(u, v)?;
    }
    Ok(())
}

/// Which group-graph decomposition to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    /// Power graph of the generalized quaternion group of order `2^{n+1}`:
    /// `(K_{2^n - 2} u (2^{n-1})K_2) join K_2`.
    PowGenQuaternion(u32),
    /// Commuting graph of the dihedral group of order `4m`:
    /// `(K_{2m-2} u mK_2) join K_2`.
    ComDihedral(u32),
    /// Enhanced power graph of the dicyclic group of order `4m`:
    /// `(K_{2m-2} u mK_2) join K_2`.
    EPowDicyclic(u32),
    /// Power graph of the dicyclic group of order `4m`: the power graph of
    /// the rotation subgroup, merged by label with `mK_2` joined to the
    /// power graph of the center.
    PowDicyclic(u32),
}

/// Emits the structural decomposition with canonical element labels, so
/// that `eval` output is label-identical to the corresponding graph
/// builder output.
pub fn structure_expr_for(kind: StructureKind) -> Result<GraphExpr, GroupError> {
    match kind {
        StructureKind::PowGenQuaternion(n) => {
            if n == 0 {
                return Err(GroupError::ZeroParameter);
            }
            let m = 1u32 << (n - 1);
            let group = FiniteGroup::dicyclic(m)?;
            Ok(hub_and_pairs_expr(&group))
        }
        StructureKind::ComDihedral(m) => {
            let group = FiniteGroup::dihedral(m)?;
            Ok(hub_and_pairs_expr(&group))
        }
        StructureKind::EPowDicyclic(m) => {
            let group = FiniteGroup::dicyclic(m)?;
            Ok(hub_and_pairs_expr(&group))
        }
        StructureKind::PowDicyclic(m) => {
            let group = FiniteGroup::dicyclic(m)?;
            let rotations = FiniteGroup::cyclic(2 * m)?;
            let rotation_pow = power_graph(&rotations)
                .relabel(|label| label.replacen('g', "h", 1))
                .expect("injective generator rename");
            let center_pow = GraphExpr::complete_on([
                group.label(group.identity()),
                group.label(group.element(m as i64, false)),
            ]);
            Ok(GraphExpr::MergingUnion(vec![
                GraphExpr::Literal(rotation_pow),
                GraphExpr::join(
                    GraphExpr::DisjointUnion(flip_pair_exprs(&group)),
                    center_pow,
                ),
            ]))
        }
    }
}

/// `(K_{R-2} u mK_2) join K_2` with canonical labels: the big complete
/// part on the non-central rotations, one `K_2` per inverse pair of flip
/// elements, joined to the complete graph on the center.
fn hub_and_pairs_expr(group: &FiniteGroup) -> GraphExpr {
    let m = group.parameter();
    let hub: Vec<String> = (0..group.rotation_order())
        .filter(|&i| i != 0 && i != m)
        .map(|i| group.label(group.element(i as i64, false)))
        .collect();
    let mut parts = vec![GraphExpr::CompleteOn(hub)];
    parts.extend(flip_pair_exprs(group));
    let center = GraphExpr::complete_on([
        group.label(group.identity()),
        group.label(group.element(m as i64, false)),
    ]);
    GraphExpr::join(GraphExpr::DisjointUnion(parts), center)
}

/// The `m` complete graphs on the inverse pairs `{r^i f, r^{i+m} f}`.
fn flip_pair_exprs(group: &FiniteGroup) -> Vec<GraphExpr> {
    let m = group.parameter();
    (0..m)
        .map(|i| {
            GraphExpr::complete_on([
                group.label(group.element(i as i64, true)),
                group.label(group.element((i + m) as i64, true)),
            ])
        })
        .collect()
}
