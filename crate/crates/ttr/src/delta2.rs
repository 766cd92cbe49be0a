//! Period-2 solver: enumerate labelings of internal edges, decide leaf-edge
//! labels by 2-SAT.
//!
//! With period 2 every travel delay is 1 when the two edge labels differ and
//! 2 when they coincide, so durations are direction-symmetric and bounds can
//! be folded to one value per unordered pair. Internal edges (neither
//! endpoint a leaf) are enumerated depth-first with the first one pinned to
//! label 1; bounds between internal vertices prune prefixes as soon as the
//! last edge of their path is assigned. For each surviving internal labeling
//! the remaining freedom is one binary choice per leaf edge, and each bound
//! involving a leaf reduces to a constant, a forced label, or a two-literal
//! clause over adjacent leaf edges.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::model::{verify_labeling, Edge, PeriodicLabeling, Tree, TtrInstance, VertexId};
use crate::oracle::SolveResult;
use crate::twosat::{solve_2sat, Literal, TwoSatFormula};

/// Partition of a tree's edges into internal edges and leaf edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalEdgeSplit {
    /// Edges whose endpoints are both non-leaves, in lexicographic order.
    pub internal_edges: Vec<Edge>,
    /// Edges incident with at least one leaf, in lexicographic order.
    pub leaf_edges: Vec<Edge>,
}

/// Splits the edges of a tree by whether they touch a leaf.
pub fn split_edges(tree: &Tree) -> InternalEdgeSplit {
    let mut internal_edges = Vec::new();
    let mut leaf_edges = Vec::new();
    for e in tree.edges() {
        let (u, v) = e.endpoints();
        if tree.is_leaf(u) || tree.is_leaf(v) {
            leaf_edges.push(e);
        } else {
            internal_edges.push(e);
        }
    }
    InternalEdgeSplit {
        internal_edges,
        leaf_edges,
    }
}

/// What a leaf-involving bound contributes for a fixed internal labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum CaseAction {
    /// No extension can satisfy the bound; the internal labeling dies.
    Reject,
    /// Every extension satisfies the bound.
    Free,
    /// The listed clauses characterize the satisfying extensions.
    Clauses(Vec<(Literal, Literal)>),
}

/// Literal forcing the leaf-edge variable away from the given internal label.
/// Convention: a true variable means label 1.
fn differ_from(leaf_var: usize, internal_label: u32) -> Literal {
    if internal_label == 2 {
        Literal::pos(leaf_var)
    } else {
        Literal::neg(leaf_var)
    }
}

/// Internal vertex to leaf: `q` is the slack left after the internal part of
/// the path, `inner_label` the label of the internal edge at the leaf's
/// neighbor.
pub(crate) fn internal_leaf_action(q: i64, inner_label: u32, leaf_var: usize) -> CaseAction {
    match q {
        q if q <= 0 => CaseAction::Reject,
        1 => {
            let lit = differ_from(leaf_var, inner_label);
            CaseAction::Clauses(vec![(lit, lit)])
        }
        _ => CaseAction::Free,
    }
}

/// Two leaves hanging off the same vertex; only the bound matters.
pub(crate) fn shared_pair_action(bound: u64, var_a: usize, var_b: usize) -> CaseAction {
    match bound {
        0 | 1 => CaseAction::Reject,
        2 => CaseAction::Clauses(vec![
            (Literal::pos(var_a), Literal::pos(var_b)),
            (Literal::neg(var_a), Literal::neg(var_b)),
        ]),
        _ => CaseAction::Free,
    }
}

/// Two leaves with distinct neighbors; `q` is the slack after the internal
/// path between the neighbors, `u_inner`/`v_inner` the labels of the internal
/// edges adjacent to each leaf edge.
pub(crate) fn distinct_pair_action(
    q: i64,
    u_inner: u32,
    v_inner: u32,
    var_u: usize,
    var_v: usize,
) -> CaseAction {
    match q {
        q if q <= 1 => CaseAction::Reject,
        2 => {
            let lu = differ_from(var_u, u_inner);
            let lv = differ_from(var_v, v_inner);
            CaseAction::Clauses(vec![(lu, lu), (lv, lv)])
        }
        3 => CaseAction::Clauses(vec![(
            differ_from(var_u, u_inner),
            differ_from(var_v, v_inner),
        )]),
        _ => CaseAction::Free,
    }
}

/// A bound between internal vertices, pruned as soon as the deepest edge of
/// its path is assigned.
struct InternalCheck {
    path: Vec<usize>,
    bound: u64,
}

enum LeafBound {
    InternalToLeaf {
        leaf_var: usize,
        /// Internal path from the internal vertex to the leaf's neighbor.
        path: Vec<usize>,
        bound: u64,
    },
    SharedPair {
        var_a: usize,
        var_b: usize,
        bound: u64,
    },
    DistinctPair {
        var_u: usize,
        var_v: usize,
        /// Internal path between the two leaf neighbors; the first edge is
        /// adjacent to `var_u`'s edge, the last to `var_v`'s.
        path: Vec<usize>,
        bound: u64,
    },
}

struct Delta2Search {
    internal_edges: Vec<Edge>,
    leaf_edges: Vec<Edge>,
    /// Internal checks grouped by the depth at which they become decidable.
    triggered: Vec<Vec<InternalCheck>>,
    leaf_bounds: Vec<LeafBound>,
    examined: u64,
}

fn duration_over(labels: &[u32], path: &[usize]) -> u64 {
    let mut duration = 1;
    for pair in path.windows(2) {
        duration += if labels[pair[0]] == labels[pair[1]] {
            2
        } else {
            1
        };
    }
    duration
}

impl Delta2Search {
    fn passes_trigger(&self, depth: usize, labels: &[u32]) -> bool {
        self.triggered[depth]
            .iter()
            .all(|check| duration_over(labels, &check.path) <= check.bound)
    }

    /// Runs the leaf-edge stage for a complete internal labeling.
    fn extend(&mut self, labels: &[u32]) -> Result<Option<PeriodicLabeling>, Error> {
        self.examined += 1;
        let mut formula = TwoSatFormula::new(self.leaf_edges.len());
        for lb in &self.leaf_bounds {
            let action = match lb {
                LeafBound::InternalToLeaf {
                    leaf_var,
                    path,
                    bound,
                } => {
                    let q = *bound as i64 - duration_over(labels, path) as i64;
                    let inner = labels[*path.last().expect("nonempty path")];
                    internal_leaf_action(q, inner, *leaf_var)
                }
                LeafBound::SharedPair { var_a, var_b, bound } => {
                    shared_pair_action(*bound, *var_a, *var_b)
                }
                LeafBound::DistinctPair {
                    var_u,
                    var_v,
                    path,
                    bound,
                } => {
                    let q = *bound as i64 - duration_over(labels, path) as i64;
                    let u_inner = labels[path[0]];
                    let v_inner = labels[*path.last().expect("nonempty path")];
                    distinct_pair_action(q, u_inner, v_inner, *var_u, *var_v)
                }
            };
            match action {
                CaseAction::Reject => return Ok(None),
                CaseAction::Free => {}
                CaseAction::Clauses(clauses) => {
                    for (a, b) in clauses {
                        formula.add_clause(a, b);
                    }
                }
            }
        }
        let Some(assignment) = solve_2sat(&formula)? else {
            return Ok(None);
        };
        let mut labeling = PeriodicLabeling::new();
        for (i, &e) in self.internal_edges.iter().enumerate() {
            labeling.set(e, labels[i]);
        }
        for (i, &e) in self.leaf_edges.iter().enumerate() {
            labeling.set(e, if assignment[i] { 1 } else { 2 });
        }
        Ok(Some(labeling))
    }

    fn dfs(&mut self, depth: usize, labels: &mut Vec<u32>) -> Result<Option<PeriodicLabeling>, Error> {
        if depth == self.internal_edges.len() {
            return self.extend(labels);
        }
        // The very first internal edge is pinned to 1: a global cyclic shift
        // preserves all delays, so this loses no solutions.
        let choices: &[u32] = if depth == 0 { &[1] } else { &[1, 2] };
        for &label in choices {
            labels[depth] = label;
            if !self.passes_trigger(depth, labels) {
                continue;
            }
            if let Some(found) = self.dfs(depth + 1, labels)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Decides a period-2 instance.
///
/// Directed bounds are folded to their minimum per unordered pair, which is
/// exact because period-2 durations are direction-symmetric. The reported
/// `examined` count is the number of complete internal labelings that reached
/// the leaf-edge stage.
pub fn solve_delta2(instance: &TtrInstance) -> Result<SolveResult, Error> {
    if instance.delta() != 2 {
        return Err(Error::RequiresPeriodTwo(instance.delta()));
    }
    let tree = instance.tree();
    let n = tree.vertex_count();
    if n <= 2 {
        let labeling: PeriodicLabeling = tree.edges().into_iter().map(|e| (e, 1)).collect();
        return Ok(SolveResult::yes(labeling, 0));
    }

    // Fold directed bounds to one value per unordered pair.
    let mut folded: BTreeMap<(VertexId, VertexId), u64> = BTreeMap::new();
    for (s, t, b) in instance.bounds().explicit_entries() {
        let key = (s.min(t), s.max(t));
        folded
            .entry(key)
            .and_modify(|cur| *cur = (*cur).min(b))
            .or_insert(b);
    }

    let split = split_edges(tree);
    let internal_index: BTreeMap<Edge, usize> = split
        .internal_edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let leaf_index: BTreeMap<Edge, usize> = split
        .leaf_edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let internal_path = |a: VertexId, b: VertexId| -> Result<Vec<usize>, Error> {
        Ok(tree
            .path(a, b)?
            .windows(2)
            .map(|w| internal_index[&Edge::new(w[0], w[1]).expect("path edge")])
            .collect())
    };

    let mut triggered: Vec<Vec<InternalCheck>> = (0..split.internal_edges.len())
        .map(|_| Vec::new())
        .collect();
    let mut leaf_bounds = Vec::new();
    for (&(a, b), &bound) in &folded {
        if tree.distance(a, b)? == 1 {
            continue;
        }
        match (tree.is_leaf(a), tree.is_leaf(b)) {
            (false, false) => {
                let path = internal_path(a, b)?;
                let depth = *path.iter().max().expect("distance >= 2");
                triggered[depth].push(InternalCheck { path, bound });
            }
            (false, true) | (true, false) => {
                let (internal, leaf) = if tree.is_leaf(a) { (b, a) } else { (a, b) };
                let neighbor = tree.neighbors(leaf)[0];
                let leaf_var = leaf_index[&Edge::new(leaf, neighbor)?];
                leaf_bounds.push(LeafBound::InternalToLeaf {
                    leaf_var,
                    path: internal_path(internal, neighbor)?,
                    bound,
                });
            }
            (true, true) => {
                let na = tree.neighbors(a)[0];
                let nb = tree.neighbors(b)[0];
                let var_a = leaf_index[&Edge::new(a, na)?];
                let var_b = leaf_index[&Edge::new(b, nb)?];
                if na == nb {
                    leaf_bounds.push(LeafBound::SharedPair { var_a, var_b, bound });
                } else {
                    leaf_bounds.push(LeafBound::DistinctPair {
                        var_u: var_a,
                        var_v: var_b,
                        path: internal_path(na, nb)?,
                        bound,
                    });
                }
            }
        }
    }

    let mut search = Delta2Search {
        internal_edges: split.internal_edges,
        leaf_edges: split.leaf_edges,
        triggered,
        leaf_bounds,
        examined: 0,
    };
    let mut labels = vec![0u32; search.internal_edges.len()];
    let found = search.dfs(0, &mut labels)?;
    match found {
        Some(witness) => {
            let report = verify_labeling(instance, &witness)?;
            if let Some(v) = report.violations().first() {
                return Err(Error::Internal(format!(
                    "period-2 witness violates bound ({}, {}): {} > {}",
                    v.from, v.to, v.duration, v.bound
                )));
            }
            Ok(SolveResult::yes(witness, search.examined))
        }
        None => Ok(SolveResult::no(search.examined)),
    }
}
