//! Shared test oracles and helpers, independent of the library's
//! implementation paths: a string-rewriting multiplier driven directly by
//! the presentation relations, a brute-force permutation isomorphism
//! oracle, the standard group catalog, and seeded random-graph builders.
#![allow(dead_code)]

use group_graphs::{FiniteGroup, GroupElement, GroupFamily, LabeledGraph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Generator letters of a word: `R` is the rotation generator (`h`, `a`,
/// or `g`), `F` the flip generator (`x` or `b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Letter {
    R,
    F,
}

/// Multiplies two normal forms by concatenating their generator words and
/// rewriting with the presentation relations until the word is normal
/// again. The rules used are exactly the relations:
///
/// - `F R -> R^{2m-1} F` (conjugation inverts the rotation),
/// - `F F -> R^m` for dicyclic (`x^2 = h^m`), `F F -> e` for dihedral,
/// - `R^{rotation order} -> e`.
///
/// Rules are applied leftmost-first, which terminates: the flip count
/// never grows, and between flip eliminations the leftmost flip strictly
/// loses rotation letters on its right.
pub fn word_multiply(group: &FiniteGroup, s: GroupElement, t: GroupElement) -> GroupElement {
    let rot = group.rotation_order() as usize;
    let mut word: Vec<Letter> = Vec::new();
    for e in [s, t] {
        word.extend(std::iter::repeat_n(Letter::R, e.rotation_index() as usize));
        if e.flip() {
            word.push(Letter::F);
        }
    }
    while let Some(pos) = leftmost_rule(&word, rot) {
        match rule_at(&word, pos, rot) {
            Rule::RotationRun => {
                word.drain(pos..pos + rot);
            }
            Rule::FlipFlip => {
                word.splice(
                    pos..pos + 2,
                    match group.family() {
                        GroupFamily::Dicyclic => {
                            vec![Letter::R; group.parameter() as usize]
                        }
                        _ => Vec::new(),
                    },
                );
            }
            Rule::FlipRotation => {
                let mut replacement = vec![Letter::R; rot - 1];
                replacement.push(Letter::F);
                word.splice(pos..pos + 2, replacement);
            }
        }
    }
    let rotation = word.iter().take_while(|&&l| l == Letter::R).count();
    let flips = word.len() - rotation;
    assert!(flips <= 1, "normal form has at most one flip letter");
    group.element(rotation as i64, flips == 1)
}

enum Rule {
    RotationRun,
    FlipFlip,
    FlipRotation,
}

fn rule_at(word: &[Letter], pos: usize, rot: usize) -> Rule {
    if word[pos..].len() >= rot && word[pos..pos + rot].iter().all(|&l| l == Letter::R) {
        Rule::RotationRun
    } else if word[pos] == Letter::F && word[pos + 1] == Letter::F {
        Rule::FlipFlip
    } else {
        Rule::FlipRotation
    }
}

fn leftmost_rule(word: &[Letter], rot: usize) -> Option<usize> {
    let mut run = 0;
    for (i, &letter) in word.iter().enumerate() {
        match letter {
            Letter::R => {
                run += 1;
                if run == rot {
                    return Some(i + 1 - rot);
                }
            }
            Letter::F => {
                run = 0;
                if i + 1 < word.len() {
                    return Some(i);
                }
            }
        }
    }
    None
}

/// Every group the invariants quantify over: cyclic up to order 24 and
/// both order-4m families up to m = 16.
pub fn catalog() -> Vec<FiniteGroup> {
    let mut groups: Vec<FiniteGroup> = (1..=24).map(|n| FiniteGroup::cyclic(n).unwrap()).collect();
    for m in 1..=16 {
        groups.push(FiniteGroup::dihedral(m).unwrap());
        groups.push(FiniteGroup::dicyclic(m).unwrap());
    }
    groups
}

/// Erdos-Renyi graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> LabeledGraph {
    let labels: Vec<String> = (0..n).map(|i| format!("v{i:03}")).collect();
    let mut graph = LabeledGraph::with_vertices(labels.iter().cloned()).unwrap();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                graph.add_edge(&labels[i], &labels[j]).unwrap();
            }
        }
    }
    graph
}

/// A copy of `graph` with its labels permuted uniformly at random.
pub fn shuffled_copy(rng: &mut StdRng, graph: &LabeledGraph) -> LabeledGraph {
    let mut targets: Vec<String> = graph.vertices().map(str::to_string).collect();
    targets.shuffle(rng);
    let map: std::collections::BTreeMap<String, String> = graph
        .vertices()
        .map(str::to_string)
        .zip(targets)
        .collect();
    graph.relabel(|label| map[label].clone()).unwrap()
}

/// Factorial-time isomorphism oracle: tries every vertex permutation.
pub fn brute_force_isomorphic(left: &LabeledGraph, right: &LabeledGraph) -> bool {
    use itertools::Itertools;

    if left.vertex_count() != right.vertex_count() {
        return false;
    }
    let lv: Vec<&str> = left.sorted_vertices();
    let rv: Vec<&str> = right.sorted_vertices();
    let n = lv.len();
    let ladj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| left.has_edge(lv[i], lv[j])).collect())
        .collect();
    let radj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| right.has_edge(rv[i], rv[j])).collect())
        .collect();
    'perms: for perm in (0..n).permutations(n) {
        for i in 0..n {
            for j in i + 1..n {
                if ladj[i][j] != radj[perm[i]][perm[j]] {
                    continue 'perms;
                }
            }
        }
        return true;
    }
    false
}

/// Triangle count by naive triple loop, for certificate re-validation.
pub fn naive_triangle_count(graph: &LabeledGraph) -> usize {
    let vs: Vec<&str> = graph.sorted_vertices();
    let mut count = 0;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !graph.has_edge(vs[i], vs[j]) {
                continue;
            }
            for k in j + 1..vs.len() {
                if graph.has_edge(vs[i], vs[k]) && graph.has_edge(vs[j], vs[k]) {
                    count += 1;
                }
            }
        }
    }
    count
}
