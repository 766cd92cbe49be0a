//! Exhaustive ground-truth solver for small instances.
//!
//! Enumerates labelings in mixed-radix order over the lexicographic edge
//! list. Because a cyclic shift of all labels preserves every travel delay,
//! the first edge's label is pinned to 1, shrinking the space to Δ^(|E|-1)
//! without losing completeness.

use crate::error::Error;
use crate::model::{Edge, PeriodicLabeling, TtrInstance};

/// Default cap on the pruned search space Δ^(|E|-1).
pub const DEFAULT_BUDGET: u128 = 1 << 26;

/// Outcome of a solver run: the decision, a verified witness when realizable,
/// and how many candidates (labelings or configurations) were examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub realizable: bool,
    pub witness: Option<PeriodicLabeling>,
    pub examined: u64,
}

impl SolveResult {
    pub fn no(examined: u64) -> Self {
        SolveResult {
            realizable: false,
            witness: None,
            examined,
        }
    }

    pub fn yes(witness: PeriodicLabeling, examined: u64) -> Self {
        SolveResult {
            realizable: true,
            witness: Some(witness),
            examined,
        }
    }
}

/// Precomputed path (as edge indices) and bound for one constrained pair.
struct PairCheck {
    edge_indices: Vec<usize>,
    bound: u64,
}

struct Enumeration {
    edges: Vec<Edge>,
    delta: u32,
    checks: Vec<PairCheck>,
}

impl Enumeration {
    fn prepare(instance: &TtrInstance, budget: u128) -> Result<Self, Error> {
        let tree = instance.tree();
        let edges = tree.edges();
        let delta = instance.delta();
        if !edges.is_empty() {
            let required = (delta as u128)
                .checked_pow(edges.len() as u32 - 1)
                .unwrap_or(u128::MAX);
            if required > budget {
                return Err(Error::BudgetExceeded { required, budget });
            }
        }
        let edge_index: std::collections::BTreeMap<Edge, usize> = edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let mut checks = Vec::new();
        for (s, t, bound) in instance.bounds().explicit_entries() {
            let path = tree.path(s, t)?;
            let edge_indices = path
                .windows(2)
                .map(|w| edge_index[&Edge::new(w[0], w[1]).expect("tree path edge")])
                .collect();
            checks.push(PairCheck {
                edge_indices,
                bound,
            });
        }
        Ok(Enumeration {
            edges,
            delta,
            checks,
        })
    }

    fn satisfies(&self, labels: &[u32]) -> bool {
        let delta = self.delta as u64;
        for check in &self.checks {
            let mut duration: u64 = 1;
            for pair in check.edge_indices.windows(2) {
                let a = labels[pair[0]] as u64;
                let b = labels[pair[1]] as u64;
                duration += if b > a { b - a } else { b + delta - a };
                if duration > check.bound {
                    break;
                }
            }
            if duration > check.bound {
                return false;
            }
        }
        true
    }

    fn to_labeling(&self, labels: &[u32]) -> PeriodicLabeling {
        self.edges
            .iter()
            .zip(labels)
            .map(|(&e, &l)| (e, l))
            .collect()
    }

    /// Advances the mixed-radix counter over digits 1..edges.len(),
    /// returning false once the space is exhausted.
    fn advance(&self, labels: &mut [u32]) -> bool {
        for digit in (1..labels.len()).rev() {
            if labels[digit] < self.delta {
                labels[digit] += 1;
                labels[digit + 1..].fill(1);
                return true;
            }
        }
        false
    }
}

/// Decides an instance by enumerating the pruned labeling space, returning
/// the lexicographically smallest witness when one exists.
///
/// `budget` caps Δ^(|E|-1); exceeding it is a resource error.
pub fn brute_force_solve(instance: &TtrInstance, budget: u128) -> Result<SolveResult, Error> {
    let en = Enumeration::prepare(instance, budget)?;
    if en.edges.is_empty() {
        return Ok(SolveResult::yes(PeriodicLabeling::new(), 1));
    }
    let mut labels = vec![1u32; en.edges.len()];
    let mut examined = 0u64;
    loop {
        examined += 1;
        if en.satisfies(&labels) {
            return Ok(SolveResult::yes(en.to_labeling(&labels), examined));
        }
        if !en.advance(&mut labels) {
            return Ok(SolveResult::no(examined));
        }
    }
}

/// Collects every satisfying labeling in the pruned space (first edge label
/// fixed to 1), in lexicographic order.
pub fn brute_force_all_witnesses(
    instance: &TtrInstance,
    budget: u128,
) -> Result<Vec<PeriodicLabeling>, Error> {
    let en = Enumeration::prepare(instance, budget)?;
    if en.edges.is_empty() {
        return Ok(vec![PeriodicLabeling::new()]);
    }
    let mut labels = vec![1u32; en.edges.len()];
    let mut witnesses = Vec::new();
    loop {
        if en.satisfies(&labels) {
            witnesses.push(en.to_labeling(&labels));
        }
        if !en.advance(&mut labels) {
            return Ok(witnesses);
        }
    }
}
