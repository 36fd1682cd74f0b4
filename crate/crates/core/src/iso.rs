//! Graph isomorphism: explicit-map witness checking, invariant
//! fingerprints for fast rejection, and a refinement-guided backtracking
//! search.
//!
//! [`find_isomorphism`] first compares [`Fingerprint`]s (vertex count,
//! edge count, degree sequence, neighbor-degree multisets, the iterated
//! neighbor-signature refinement run to a fixed point, and triangle
//! count); a mismatch yields a [`NonIsoCertificate`] naming the first
//! failing invariant, re-checkable from the two graphs alone. When all
//! invariants agree, a backtracking search matches vertices only within
//! equal-signature refinement cells, expanding the most constrained vertex
//! first with incremental adjacency consistency. The search returns a
//! [`Bijection`] witness, an `ExhaustedSearch` certificate, or — if the
//! node budget runs out — an explicit undecided error, never a wrong
//! answer. Everything is deterministic for fixed inputs: cells and
//! candidates are ordered lexicographically by label.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::LabeledGraph;
use crate::groups::{FiniteGroup, GroupFamily};

/// Default backtracking budget, in candidate-consistency checks.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoError {
    /// The supplied map is not a bijection between the vertex sets.
    #[error("not a bijection between the vertex sets: {0}")]
    NotABijection(String),
    /// `explicit_label_map` needs a dicyclic and a dihedral group of equal order.
    #[error("incompatible groups: {0}")]
    GroupMismatch(String),
    /// The search budget ran out; the instance is undecided.
    #[error("node budget {budget} exhausted after {explored} nodes; isomorphism undecided")]
    BudgetExhausted { budget: u64, explored: u64 },
}

/// A total one-to-one map between two vertex label sets, stored sorted by
/// domain label and serialized as a plain JSON object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Bijection {
    pairs: BTreeMap<String, String>,
}

impl Bijection {
    /// Builds a bijection from pairs, rejecting repeated domain or image
    /// labels.
    pub fn new<I, S, T>(pairs: I) -> Result<Self, IsoError>
    where
        I: IntoIterator<Item = (S, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let mut forward = BTreeMap::new();
        let mut image = BTreeMap::new();
        for (u, v) in pairs {
            let (u, v) = (u.into(), v.into());
            if let Some(prev) = image.insert(v.clone(), u.clone()) {
                return Err(IsoError::NotABijection(format!(
                    "`{prev}` and `{u}` both map to `{v}`"
                )));
            }
            if forward.insert(u.clone(), v).is_some() {
                return Err(IsoError::NotABijection(format!(
                    "domain label `{u}` appears twice"
                )));
            }
        }
        Ok(Bijection { pairs: forward })
    }

    pub fn get(&self, label: &str) -> Option<&str> {
        self.pairs.get(label).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.pairs.iter().map(|(u, v)| (u.as_str(), v.as_str()))
    }

    /// The inverse map. Always valid since the forward map is one-to-one.
    pub fn inverse(&self) -> Bijection {
        Bijection {
            pairs: self
                .pairs
                .iter()
                .map(|(u, v)| (v.clone(), u.clone()))
                .collect(),
        }
    }
}

/// The label bijection `h^i x^j -> a^i b^j` from a dicyclic group onto a
/// dihedral group of the same order.
pub fn explicit_label_map(
    dicyclic: &FiniteGroup,
    dihedral: &FiniteGroup,
) -> Result<Bijection, IsoError> {
    if dicyclic.family() != GroupFamily::Dicyclic || dihedral.family() != GroupFamily::Dihedral {
        return Err(IsoError::GroupMismatch(format!(
            "expected a dicyclic source and dihedral target, got {} and {}",
            dicyclic.family(),
            dihedral.family()
        )));
    }
    if dicyclic.order() != dihedral.order() {
        return Err(IsoError::GroupMismatch(format!(
            "orders differ: {} vs {}",
            dicyclic.order(),
            dihedral.order()
        )));
    }
    Bijection::new(
        dicyclic
            .elements()
            .map(|e| (dicyclic.label(e), dihedral.label(e))),
    )
}

/// Checks whether `map` is an edge-preserving bijection from `left` onto
/// `right`: for every pair `u != v`, `{u, v}` is an edge of `left` iff
/// `{map(u), map(v)}` is an edge of `right`.
///
/// Fails with a structural error when `map` is not a bijection from
/// `V(left)` onto `V(right)`.
pub fn check_witness(
    left: &LabeledGraph,
    right: &LabeledGraph,
    map: &Bijection,
) -> Result<bool, IsoError> {
    if map.len() != left.vertex_count() || left.vertex_count() != right.vertex_count() {
        return Err(IsoError::NotABijection(format!(
            "map has {} pairs for {} and {} vertices",
            map.len(),
            left.vertex_count(),
            right.vertex_count()
        )));
    }
    for u in left.vertices() {
        match map.get(u) {
            None => {
                return Err(IsoError::NotABijection(format!(
                    "vertex `{u}` has no image"
                )))
            }
            Some(v) if !right.has_vertex(v) => {
                return Err(IsoError::NotABijection(format!(
                    "image `{v}` of `{u}` is not a vertex of the target graph"
                )))
            }
            Some(_) => {}
        }
    }
    let vertices: Vec<&str> = left.vertices().collect();
    let images: Vec<&str> = vertices.iter().map(|u| map.get(u).unwrap()).collect();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if left.has_edge(vertices[i], vertices[j]) != right.has_edge(images[i], images[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One refinement round: the sorted multiset of vertex signatures with
/// multiplicities, each signature being `[own color, neighbor colors...]`.
pub type RefinementRound = Vec<(Vec<usize>, usize)>;

/// Isomorphism-invariant record; equality is necessary for isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Degrees, ascending.
    pub degree_sequence: Vec<usize>,
    /// Sorted multiset of per-vertex sorted neighbor-degree multisets.
    pub neighbor_degree_multisets: Vec<Vec<usize>>,
    /// Refinement rounds iterated to a fixed point.
    pub refinement_rounds: Vec<RefinementRound>,
    pub triangle_count: usize,
}

/// Which invariant or search stage certifies non-isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    VertexCount,
    EdgeCount,
    DegreeSequence,
    RefinementPartition,
    TriangleCount,
    ExhaustedSearch,
}

/// A re-checkable non-isomorphism certificate: the distinguishing
/// invariant plus the values it takes on the two graphs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NonIsoCertificate {
    pub certificate: CertificateKind,
    pub detail: serde_json::Value,
}

/// Outcome of an isomorphism decision: an explicit witness or a
/// certificate of non-isomorphism.
#[derive(Debug, Clone, PartialEq)]
pub enum IsoOutcome {
    Witness(Bijection),
    NonIso(NonIsoCertificate),
}

impl IsoOutcome {
    pub fn is_witness(&self) -> bool {
        matches!(self, IsoOutcome::Witness(_))
    }
}

/// Dense indexed form of a graph, vertices sorted by label.
struct Dense {
    labels: Vec<String>,
    words: usize,
    adjacency: Vec<u64>,
    neighbors: Vec<Vec<u32>>,
    degrees: Vec<usize>,
}

impl Dense {
    fn build(graph: &LabeledGraph) -> Dense {
        let labels: Vec<String> = graph
            .sorted_vertices()
            .into_iter()
            .map(str::to_string)
            .collect();
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let n = labels.len();
        let words = n.div_ceil(64);
        let mut adjacency = vec![0u64; n * words];
        let mut neighbors = vec![Vec::new(); n];
        for (u, v) in graph.edges() {
            let (ui, vi) = (index[u], index[v]);
            adjacency[ui * words + vi / 64] |= 1 << (vi % 64);
            adjacency[vi * words + ui / 64] |= 1 << (ui % 64);
            neighbors[ui].push(vi as u32);
            neighbors[vi].push(ui as u32);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let degrees = neighbors.iter().map(Vec::len).collect();
        Dense { labels, words, adjacency, neighbors, degrees }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.adjacency[u * self.words..(u + 1) * self.words]
    }

    fn triangle_count(&self) -> usize {
        let mut incidences = 0usize;
        for u in 0..self.len() {
            for &v in &self.neighbors[u] {
                let v = v as usize;
                if u < v {
                    incidences += self
                        .row(u)
                        .iter()
                        .zip(self.row(v))
                        .map(|(a, b)| (a & b).count_ones() as usize)
                        .sum::<usize>();
                }
            }
        }
        incidences / 3
    }

    /// Iterated neighbor-signature refinement from degree classes to a
    /// fixed point. Colors are ranks of sorted distinct signatures, so
    /// they are canonical: isomorphic graphs get identical color
    /// assignments up to the isomorphism.
    fn refine(&self) -> (Vec<usize>, Vec<RefinementRound>) {
        let n = self.len();
        let mut distinct_degrees: Vec<usize> = self.degrees.clone();
        distinct_degrees.sort_unstable();
        distinct_degrees.dedup();
        let mut colors: Vec<usize> = self
            .degrees
            .iter()
            .map(|d| distinct_degrees.binary_search(d).unwrap())
            .collect();
        let mut class_count = distinct_degrees.len();
        let mut rounds = Vec::new();
        loop {
            let signatures: Vec<Vec<usize>> = (0..n)
                .map(|u| {
                    let mut sig = Vec::with_capacity(self.degrees[u] + 1);
                    sig.push(colors[u]);
                    let mut nbr: Vec<usize> = self.neighbors[u]
                        .iter()
                        .map(|&v| colors[v as usize])
                        .collect();
                    nbr.sort_unstable();
                    sig.extend(nbr);
                    sig
                })
                .collect();
            let mut histogram: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
            for sig in &signatures {
                *histogram.entry(sig).or_insert(0) += 1;
            }
            rounds.push(
                histogram
                    .iter()
                    .map(|(sig, count)| ((*sig).clone(), *count))
                    .collect(),
            );
            let ranks: BTreeMap<&Vec<usize>, usize> = histogram
                .keys()
                .enumerate()
                .map(|(rank, sig)| (*sig, rank))
                .collect();
            let new_count = ranks.len();
            colors = signatures.iter().map(|sig| ranks[sig]).collect();
            // Signatures include the previous color, so cells only ever
            // split; an unchanged class count means a fixed point.
            if new_count == class_count {
                return (colors, rounds);
            }
            class_count = new_count;
        }
    }
}

/// Computes the invariant fingerprint of a graph.
pub fn fingerprint(graph: &LabeledGraph) -> Fingerprint {
    let dense = Dense::build(graph);
    let (_, rounds) = dense.refine();
    fingerprint_dense(&dense, rounds)
}

fn fingerprint_dense(dense: &Dense, refinement_rounds: Vec<RefinementRound>) -> Fingerprint {
    let mut degree_sequence = dense.degrees.clone();
    degree_sequence.sort_unstable();
    let mut neighbor_degree_multisets: Vec<Vec<usize>> = (0..dense.len())
        .map(|u| {
            let mut ds: Vec<usize> = dense.neighbors[u]
                .iter()
                .map(|&v| dense.degrees[v as usize])
                .collect();
            ds.sort_unstable();
            ds
        })
        .collect();
    neighbor_degree_multisets.sort_unstable();
    Fingerprint {
        vertex_count: dense.len(),
        edge_count: dense.degrees.iter().sum::<usize>() / 2,
        degree_sequence,
        neighbor_degree_multisets,
        refinement_rounds,
        triangle_count: dense.triangle_count(),
    }
}

/// First fingerprint component on which the two records differ, if any.
fn fingerprint_mismatch(left: &Fingerprint, right: &Fingerprint) -> Option<NonIsoCertificate> {
    let cert = |certificate, detail| Some(NonIsoCertificate { certificate, detail });
    if left.vertex_count != right.vertex_count {
        return cert(
            CertificateKind::VertexCount,
            serde_json::json!({ "left": left.vertex_count, "right": right.vertex_count }),
        );
    }
    if left.edge_count != right.edge_count {
        return cert(
            CertificateKind::EdgeCount,
            serde_json::json!({ "left": left.edge_count, "right": right.edge_count }),
        );
    }
    if left.degree_sequence != right.degree_sequence {
        return cert(
            CertificateKind::DegreeSequence,
            serde_json::json!({ "left": left.degree_sequence, "right": right.degree_sequence }),
        );
    }
    if left.neighbor_degree_multisets != right.neighbor_degree_multisets {
        return cert(
            CertificateKind::RefinementPartition,
            serde_json::json!({ "invariant": "neighbor-degree multisets" }),
        );
    }
    if left.refinement_rounds != right.refinement_rounds {
        let round = left
            .refinement_rounds
            .iter()
            .zip(&right.refinement_rounds)
            .position(|(a, b)| a != b)
            .unwrap_or_else(|| left.refinement_rounds.len().min(right.refinement_rounds.len()));
        return cert(
            CertificateKind::RefinementPartition,
            serde_json::json!({ "invariant": "refinement signatures", "round": round }),
        );
    }
    if left.triangle_count != right.triangle_count {
        return cert(
            CertificateKind::TriangleCount,
            serde_json::json!({ "left": left.triangle_count, "right": right.triangle_count }),
        );
    }
    None
}

/// Decides isomorphism with the default node budget.
pub fn find_isomorphism(
    left: &LabeledGraph,
    right: &LabeledGraph,
) -> Result<IsoOutcome, IsoError> {
    find_isomorphism_with_budget(left, right, DEFAULT_NODE_BUDGET)
}

/// Decides isomorphism of two labeled graphs.
///
/// Returns a non-isomorphism certificate as soon as a fingerprint
/// component differs; otherwise runs the refinement-cell backtracking
/// search. The result is deterministic for fixed inputs. Exceeding
/// `node_budget` yields [`IsoError::BudgetExhausted`] rather than a wrong
/// answer.
pub fn find_isomorphism_with_budget(
    left: &LabeledGraph,
    right: &LabeledGraph,
    node_budget: u64,
) -> Result<IsoOutcome, IsoError> {
    let d1 = Dense::build(left);
    let d2 = Dense::build(right);
    let (colors1, rounds1) = d1.refine();
    let (colors2, rounds2) = d2.refine();
    if let Some(cert) = fingerprint_mismatch(
        &fingerprint_dense(&d1, rounds1),
        &fingerprint_dense(&d2, rounds2),
    ) {
        return Ok(IsoOutcome::NonIso(cert));
    }
    let mut search = Search::new(&d1, &d2, &colors1, &colors2, node_budget);
    if search.run()? {
        let witness = Bijection::new(
            search
                .image
                .iter()
                .enumerate()
                .map(|(u, &v)| (d1.labels[u].clone(), d2.labels[v as usize].clone())),
        )
        .expect("search image is a bijection");
        debug_assert_eq!(check_witness(left, right, &witness), Ok(true));
        Ok(IsoOutcome::Witness(witness))
    } else {
        Ok(IsoOutcome::NonIso(NonIsoCertificate {
            certificate: CertificateKind::ExhaustedSearch,
            detail: serde_json::json!({ "nodes_explored": search.nodes }),
        }))
    }
}

const UNMAPPED: u32 = u32::MAX;

struct Search<'a> {
    d1: &'a Dense,
    d2: &'a Dense,
    colors1: &'a [usize],
    /// Vertices of the right graph per color, in label order.
    cells2: Vec<Vec<u32>>,
    cell_size: Vec<usize>,
    image: Vec<u32>,
    taken: Vec<bool>,
    /// Left vertices in assignment order, for consistency checks.
    assigned: Vec<u32>,
    /// Number of already-mapped neighbors per left vertex.
    mapped_neighbors: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(
        d1: &'a Dense,
        d2: &'a Dense,
        colors1: &'a [usize],
        colors2: &[usize],
        budget: u64,
    ) -> Self {
        let class_count = colors2.iter().copied().max().map_or(0, |c| c + 1);
        let mut cells2 = vec![Vec::new(); class_count];
        for (v, &c) in colors2.iter().enumerate() {
            cells2[c].push(v as u32);
        }
        let cell_size = cells2.iter().map(Vec::len).collect();
        Search {
            d1,
            d2,
            colors1,
            cells2,
            cell_size,
            image: vec![UNMAPPED; d1.len()],
            taken: vec![false; d2.len()],
            assigned: Vec::with_capacity(d1.len()),
            mapped_neighbors: vec![0; d1.len()],
            nodes: 0,
            budget,
        }
    }

    /// Unmapped left vertex with the most mapped neighbors; ties go to the
    /// smaller refinement cell, then to the lexicographically smaller
    /// label (= smaller index).
    fn select(&self) -> usize {
        (0..self.d1.len())
            .filter(|&u| self.image[u] == UNMAPPED)
            .max_by_key(|&u| {
                (
                    self.mapped_neighbors[u],
                    std::cmp::Reverse(self.cell_size[self.colors1[u]]),
                    std::cmp::Reverse(u),
                )
            })
            .expect("called with at least one unmapped vertex")
    }

    fn consistent(&self, u: usize, v: usize) -> bool {
        self.assigned
            .iter()
            .all(|&w| self.d1.has_edge(u, w as usize) == self.d2.has_edge(v, self.image[w as usize] as usize))
    }

    fn run(&mut self) -> Result<bool, IsoError> {
        if self.assigned.len() == self.d1.len() {
            return Ok(true);
        }
        let u = self.select();
        let candidates = self.cells2[self.colors1[u]].clone();
        for v in candidates {
            if self.taken[v as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(IsoError::BudgetExhausted {
                    budget: self.budget,
                    explored: self.nodes - 1,
                });
            }
            if !self.consistent(u, v as usize) {
                continue;
            }
            self.image[u] = v;
            self.taken[v as usize] = true;
            self.assigned.push(u as u32);
            for &w in &self.d1.neighbors[u] {
                self.mapped_neighbors[w as usize] += 1;
            }
            if self.run()? {
                return Ok(true);
            }
            for &w in &self.d1.neighbors[u] {
                self.mapped_neighbors[w as usize] -= 1;
            }
            self.assigned.pop();
            self.taken[v as usize] = false;
            self.image[u] = UNMAPPED;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{commuting_graph, enhanced_power_graph, power_graph, LabeledGraph};
    use crate::groups::FiniteGroup;

    fn path(n: usize) -> LabeledGraph {
        let mut g =
            LabeledGraph::with_vertices((0..n).map(|i| format!("p{i}"))).unwrap();
        for i in 1..n {
            g.add_edge(&format!("p{}", i - 1), &format!("p{i}")).unwrap();
        }
        g
    }

    #[test]
    fn bijection_rejects_repeats() {
        assert!(Bijection::new([("u", "x"), ("u", "y")]).is_err());
        assert!(Bijection::new([("u", "x"), ("v", "x")]).is_err());
        let b = Bijection::new([("u", "x"), ("v", "y")]).unwrap();
        assert_eq!(b.inverse().get("x"), Some("u"));
    }

    #[test]
    fn identity_map_is_a_witness() {
        let g = power_graph(&FiniteGroup::dicyclic(3).unwrap());
        let id = Bijection::new(g.vertices().map(|v| (v, v))).unwrap();
        assert_eq!(check_witness(&g, &g, &id), Ok(true));
    }

    #[test]
    fn explicit_map_is_a_witness_for_the_quaternion_case() {
        let q32 = FiniteGroup::dicyclic(8).unwrap();
        let d32 = FiniteGroup::dihedral(8).unwrap();
        let map = explicit_label_map(&q32, &d32).unwrap();
        assert_eq!(map.get("h^1*x"), Some("a^1*b"));
        assert_eq!(
            check_witness(&power_graph(&q32), &commuting_graph(&d32), &map),
            Ok(true)
        );
    }

    #[test]
    fn explicit_map_fails_on_the_power_graph_of_q12() {
        let q12 = FiniteGroup::dicyclic(3).unwrap();
        let d12 = FiniteGroup::dihedral(3).unwrap();
        let map = explicit_label_map(&q12, &d12).unwrap();
        assert_eq!(map.len(), 12);
        assert_eq!(
            check_witness(&power_graph(&q12), &commuting_graph(&d12), &map),
            Ok(false)
        );
    }

    #[test]
    fn explicit_map_rejects_mismatched_groups() {
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        let d12 = FiniteGroup::dihedral(3).unwrap();
        assert!(matches!(
            explicit_label_map(&q8, &d12),
            Err(IsoError::GroupMismatch(_))
        ));
        assert!(explicit_label_map(&d12, &q8).is_err());
    }

    #[test]
    fn check_witness_rejects_non_bijections() {
        let g = path(3);
        let partial = Bijection::new([("p0", "p1")]).unwrap();
        assert!(matches!(
            check_witness(&g, &g, &partial),
            Err(IsoError::NotABijection(_))
        ));
        let wrong = Bijection::new([("p0", "q0"), ("p1", "p1"), ("p2", "p2")]).unwrap();
        assert!(check_witness(&g, &g, &wrong).is_err());
    }

    #[test]
    fn fingerprints_distinguish_matching_from_path() {
        // Two disjoint edges vs the path on four vertices: degree sequences
        // {1,1,1,1} vs {1,1,2,2}.
        let mut matching = LabeledGraph::with_vertices(["a", "b", "c", "d"]).unwrap();
        matching.add_edge("a", "b").unwrap();
        matching.add_edge("c", "d").unwrap();
        let p4 = path(4);
        let fp_matching = fingerprint(&matching);
        let fp_path = fingerprint(&p4);
        assert_eq!(fp_matching.degree_sequence, vec![1, 1, 1, 1]);
        assert_eq!(fp_path.degree_sequence, vec![1, 1, 2, 2]);
        assert!(!find_isomorphism(&matching, &p4).unwrap().is_witness());
    }

    #[test]
    fn degree_sequence_certificate_for_star_versus_path() {
        // Same vertex and edge counts; degrees {1,1,1,3} vs {1,1,2,2}.
        let mut star = LabeledGraph::with_vertices(["s", "a", "b", "c"]).unwrap();
        for leaf in ["a", "b", "c"] {
            star.add_edge("s", leaf).unwrap();
        }
        let outcome = find_isomorphism(&star, &path(4)).unwrap();
        match outcome {
            IsoOutcome::NonIso(cert) => {
                assert_eq!(cert.certificate, CertificateKind::DegreeSequence)
            }
            IsoOutcome::Witness(_) => panic!("graphs are not isomorphic"),
        }
    }

    #[test]
    fn fingerprints_agree_on_the_theorem_pair() {
        let q32 = FiniteGroup::dicyclic(8).unwrap();
        let d32 = FiniteGroup::dihedral(8).unwrap();
        assert_eq!(
            fingerprint(&power_graph(&q32)),
            fingerprint(&commuting_graph(&d32))
        );
    }

    #[test]
    fn edge_count_certificate_for_q12() {
        let q12 = FiniteGroup::dicyclic(3).unwrap();
        let d12 = FiniteGroup::dihedral(3).unwrap();
        let outcome =
            find_isomorphism(&power_graph(&q12), &commuting_graph(&d12)).unwrap();
        match outcome {
            IsoOutcome::NonIso(cert) => {
                assert_eq!(cert.certificate, CertificateKind::EdgeCount);
                assert_eq!(cert.detail["left"], 28);
                assert_eq!(cert.detail["right"], 30);
            }
            IsoOutcome::Witness(_) => panic!("graphs are not isomorphic"),
        }
    }

    #[test]
    fn finds_witnesses_for_both_theorems() {
        for n in 2..=6u32 {
            let m = 1 << (n - 1);
            let q = FiniteGroup::dicyclic(m).unwrap();
            let d = FiniteGroup::dihedral(m).unwrap();
            let outcome =
                find_isomorphism(&power_graph(&q), &commuting_graph(&d)).unwrap();
            assert!(outcome.is_witness(), "n = {n}");
        }
        for m in [3u32, 5, 6] {
            let q = FiniteGroup::dicyclic(m).unwrap();
            let d = FiniteGroup::dihedral(m).unwrap();
            let outcome =
                find_isomorphism(&enhanced_power_graph(&q), &commuting_graph(&d)).unwrap();
            assert!(outcome.is_witness(), "m = {m}");
        }
    }

    #[test]
    fn triangle_count_splits_wl_equivalent_graphs() {
        // C_6 and two triangles: both 2-regular, same refinement, but 0 vs
        // 2 triangles.
        let mut hexagon =
            LabeledGraph::with_vertices((0..6).map(|i| format!("c{i}"))).unwrap();
        for i in 0..6 {
            hexagon
                .add_edge(&format!("c{i}"), &format!("c{}", (i + 1) % 6))
                .unwrap();
        }
        let mut triangles =
            LabeledGraph::with_vertices((0..6).map(|i| format!("t{i}"))).unwrap();
        for base in [0, 3] {
            for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                triangles
                    .add_edge(&format!("t{}", base + i), &format!("t{}", base + j))
                    .unwrap();
            }
        }
        let outcome = find_isomorphism(&hexagon, &triangles).unwrap();
        match outcome {
            IsoOutcome::NonIso(cert) => {
                assert_eq!(cert.certificate, CertificateKind::TriangleCount)
            }
            IsoOutcome::Witness(_) => panic!("graphs are not isomorphic"),
        }
    }

    #[test]
    fn exhausted_search_certificate_for_two_squares_versus_octagon() {
        // Same degree sequence, neighbor degrees, refinement partition,
        // and triangle count; only the search separates an 8-cycle from
        // two 4-cycles.
        let cycle = |prefix: &str, base: usize, len: usize, g: &mut LabeledGraph| {
            for i in 0..len {
                g.add_edge(
                    &format!("{prefix}{}", base + i),
                    &format!("{prefix}{}", base + (i + 1) % len),
                )
                .unwrap();
            }
        };
        let mut octagon = LabeledGraph::with_vertices((0..8).map(|i| format!("o{i}"))).unwrap();
        cycle("o", 0, 8, &mut octagon);
        let mut squares = LabeledGraph::with_vertices((0..8).map(|i| format!("s{i}"))).unwrap();
        cycle("s", 0, 4, &mut squares);
        cycle("s", 4, 4, &mut squares);
        assert_eq!(fingerprint(&octagon), fingerprint(&squares));
        match find_isomorphism(&octagon, &squares).unwrap() {
            IsoOutcome::NonIso(cert) => {
                assert_eq!(cert.certificate, CertificateKind::ExhaustedSearch);
                assert!(cert.detail["nodes_explored"].as_u64().unwrap() > 0);
            }
            IsoOutcome::Witness(_) => panic!("graphs are not isomorphic"),
        }
    }

    #[test]
    fn budget_exhaustion_is_an_explicit_error() {
        let g = power_graph(&FiniteGroup::dicyclic(4).unwrap());
        let shuffled = g.relabel(|l| format!("z/{l}")).unwrap();
        match find_isomorphism_with_budget(&g, &shuffled, 2) {
            Err(IsoError::BudgetExhausted { budget: 2, .. }) => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn empty_graphs_are_isomorphic() {
        let g = LabeledGraph::new();
        let h = LabeledGraph::new();
        assert!(find_isomorphism(&g, &h).unwrap().is_witness());
    }

    #[test]
    fn witness_serializes_as_sorted_object() {
        let b = Bijection::new([("v", "y"), ("u", "x")]).unwrap();
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"u":"x","v":"y"}"#);
    }
}
