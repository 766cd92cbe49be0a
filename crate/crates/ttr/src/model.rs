//! Core instance model: trees, periodic labelings, travel delays and
//! fastest-path durations.
//!
//! A Δ-periodic labeling puts every edge at one time label in `[1, Δ]`,
//! repeating with period Δ. A temporal path traverses edges at strictly
//! increasing times; its duration is last time minus first time plus one.
//! On a tree the vertex sequence of a fastest path is fixed, so the duration
//! decomposes into a sum of per-vertex travel delays ([`travel_delay`]).

use std::collections::BTreeMap;

use crate::error::Error;

/// Vertex index into a [`Tree`]. The identity order on indices is the fixed
/// total vertex order used by all solvers.
pub type VertexId = usize;

/// Undirected edge, stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds an edge from two distinct endpoints, normalizing the order.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self, Error> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    /// Smaller endpoint.
    pub fn min_end(&self) -> VertexId {
        self.u
    }

    /// Larger endpoint.
    pub fn max_end(&self) -> VertexId {
        self.v
    }

    /// Both endpoints, ascending.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    /// The endpoint different from `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            debug_assert_eq!(x, self.v);
            self.u
        }
    }

    /// Whether `x` is one of the endpoints.
    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// Undirected tree on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<VertexId>>,
}

impl Tree {
    /// Builds a tree from an edge list, validating connectivity and acyclicity.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::NotATree("a tree has at least one vertex".into()));
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, count: n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, count: n });
            }
            let e = Edge::new(a, b)?;
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices need {} edges, got {}",
                n,
                n - 1,
                edges.len()
            )));
        }
        // n-1 edges and connected together imply acyclicity.
        let mut visited = vec![false; n];
        let mut stack = vec![0];
        visited[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !visited[w] {
                    visited[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != n {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Tree { adj })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, always `vertex_count() - 1`.
    pub fn edge_count(&self) -> usize {
        self.adj.len() - 1
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// A leaf is a vertex of degree one.
    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.adj[v].len() == 1
    }

    /// All edges in lexicographic order of (min endpoint, max endpoint).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// Whether the given edge exists.
    pub fn contains_edge(&self, e: Edge) -> bool {
        e.v < self.adj.len() && self.adj[e.u].binary_search(&e.v).is_ok()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), Error> {
        if v >= self.adj.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.adj.len(),
            });
        }
        Ok(())
    }

    /// The unique path from `s` to `t` as a vertex sequence, `s` first.
    pub fn path(&self, s: VertexId, t: VertexId) -> Result<Vec<VertexId>, Error> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        if s == t {
            return Err(Error::PathEndpointsEqual(s));
        }
        let parents = self.parents_from(s);
        let mut path = vec![t];
        let mut cur = t;
        while cur != s {
            cur = parents[cur];
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// Number of edges on the unique `s`–`t` path.
    pub fn distance(&self, s: VertexId, t: VertexId) -> Result<usize, Error> {
        if s == t {
            self.check_vertex(s)?;
            return Ok(0);
        }
        Ok(self.path(s, t)?.len() - 1)
    }

    /// BFS parent array rooted at `s` (parent of the root is the root itself).
    pub fn parents_from(&self, s: VertexId) -> Vec<VertexId> {
        let n = self.adj.len();
        let mut parents = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        parents[s] = s;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if parents[w] == usize::MAX {
                    parents[w] = v;
                    queue.push_back(w);
                }
            }
        }
        parents
    }
}

/// One entry of the bound matrix: either an explicit positive integer or the
/// implicit trivial bound `(k-1)·Δ+1`, which no fastest path can exceed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Trivial,
    Explicit(u64),
}

impl Bound {
    /// The explicit value, if any.
    pub fn explicit(self) -> Option<u64> {
        match self {
            Bound::Trivial => None,
            Bound::Explicit(b) => Some(b),
        }
    }
}

/// Duration upper-bound matrix with implicit trivial entries.
///
/// Entries are ordered: `(s, t)` bounds the duration from `s` to `t` and may
/// differ from `(t, s)`. Diagonal entries are meaningless and dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundMatrix {
    explicit: BTreeMap<(VertexId, VertexId), u64>,
}

impl BoundMatrix {
    /// Matrix with every entry trivial.
    pub fn all_trivial() -> Self {
        BoundMatrix::default()
    }

    /// Sets the bound for the ordered pair `(s, t)`. Diagonal entries are
    /// ignored; a zero bound is rejected.
    pub fn set(&mut self, s: VertexId, t: VertexId, bound: u64) -> Result<(), Error> {
        if bound == 0 {
            return Err(Error::NonPositiveBound);
        }
        if s != t {
            self.explicit.insert((s, t), bound);
        }
        Ok(())
    }

    /// Sets the same bound in both directions.
    pub fn set_symmetric(&mut self, s: VertexId, t: VertexId, bound: u64) -> Result<(), Error> {
        self.set(s, t, bound)?;
        self.set(t, s, bound)
    }

    /// Removes an explicit entry, making the pair trivial again.
    pub fn clear(&mut self, s: VertexId, t: VertexId) {
        self.explicit.remove(&(s, t));
    }

    pub fn get(&self, s: VertexId, t: VertexId) -> Bound {
        match self.explicit.get(&(s, t)) {
            Some(&b) => Bound::Explicit(b),
            None => Bound::Trivial,
        }
    }

    /// Iterates over explicit entries in key order.
    pub fn explicit_entries(&self) -> impl Iterator<Item = (VertexId, VertexId, u64)> + '_ {
        self.explicit.iter().map(|(&(s, t), &b)| (s, t, b))
    }

    pub fn explicit_len(&self) -> usize {
        self.explicit.len()
    }

    /// Whether every explicit entry has a matching reverse entry.
    pub fn is_symmetric(&self) -> bool {
        self.explicit
            .iter()
            .all(|(&(s, t), &b)| self.explicit.get(&(t, s)) == Some(&b))
    }

    /// Largest vertex index mentioned by an explicit entry, if any.
    pub fn max_vertex(&self) -> Option<VertexId> {
        self.explicit.keys().map(|&(s, t)| s.max(t)).max()
    }
}

/// A realization instance: tree, period, and duration upper bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TtrInstance {
    tree: Tree,
    delta: u32,
    bounds: BoundMatrix,
}

impl TtrInstance {
    pub fn new(tree: Tree, delta: u32, bounds: BoundMatrix) -> Result<Self, Error> {
        if delta == 0 {
            return Err(Error::InvalidDelta);
        }
        if let Some(v) = bounds.max_vertex() {
            if v >= tree.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: tree.vertex_count(),
                });
            }
        }
        Ok(TtrInstance {
            tree,
            delta,
            bounds,
        })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn bounds(&self) -> &BoundMatrix {
        &self.bounds
    }

    /// The bound for `(s, t)` as a number, resolving trivial entries through
    /// the pair's distance.
    pub fn effective_bound(&self, s: VertexId, t: VertexId) -> Result<u64, Error> {
        match self.bounds.get(s, t) {
            Bound::Explicit(b) => Ok(b),
            Bound::Trivial => {
                let k = self.tree.distance(s, t)? as u64;
                Ok(trivial_bound(k.max(1), self.delta as u64))
            }
        }
    }
}

/// A Δ-periodic labeling: one label in `[1, Δ]` per edge.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PeriodicLabeling {
    labels: BTreeMap<Edge, u32>,
}

impl PeriodicLabeling {
    pub fn new() -> Self {
        PeriodicLabeling::default()
    }

    pub fn set(&mut self, e: Edge, label: u32) {
        self.labels.insert(e, label);
    }

    pub fn get(&self, e: Edge) -> Option<u32> {
        self.labels.get(&e).copied()
    }

    /// Label of an edge, or an error naming the unlabeled edge.
    pub fn label_of(&self, e: Edge) -> Result<u32, Error> {
        self.get(e).ok_or(Error::MissingLabel(e.u, e.v))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Iterates over `(edge, label)` pairs in edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.labels.iter().map(|(&e, &l)| (e, l))
    }

    /// Checks that exactly the edges of `tree` are labeled, with labels in
    /// `[1, delta]`.
    pub fn validate_for(&self, tree: &Tree, delta: u32) -> Result<(), Error> {
        for (e, l) in self.iter() {
            if !tree.contains_edge(e) {
                return Err(Error::UnknownEdge(e.u, e.v));
            }
            if l < 1 || l > delta {
                return Err(Error::LabelOutOfRange { label: l, delta });
            }
        }
        for e in tree.edges() {
            if self.get(e).is_none() {
                return Err(Error::MissingLabel(e.u, e.v));
            }
        }
        Ok(())
    }
}

impl FromIterator<(Edge, u32)> for PeriodicLabeling {
    fn from_iter<T: IntoIterator<Item = (Edge, u32)>>(iter: T) -> Self {
        PeriodicLabeling {
            labels: iter.into_iter().collect(),
        }
    }
}

/// One bound violation found by [`verify_labeling`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub from: VertexId,
    pub to: VertexId,
    pub duration: u64,
    pub bound: u64,
}

/// Fastest durations for every ordered vertex pair, plus any bound violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DurationReport {
    durations: BTreeMap<(VertexId, VertexId), u64>,
    violations: Vec<Violation>,
}

impl DurationReport {
    pub fn duration(&self, s: VertexId, t: VertexId) -> Option<u64> {
        self.durations.get(&(s, t)).copied()
    }

    pub fn durations(&self) -> impl Iterator<Item = ((VertexId, VertexId), u64)> + '_ {
        self.durations.iter().map(|(&k, &v)| (k, v))
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn is_realizing(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Travel delay at the middle vertex when entering on an edge labeled
/// `label_in` and leaving on an edge labeled `label_out`.
///
/// The wait is `label_out - label_in` when the outgoing label is strictly
/// later within the period, and wraps by Δ otherwise; equal labels force a
/// full period. The result is always in `[1, delta]`.
pub fn travel_delay(label_in: u32, label_out: u32, delta: u32) -> Result<u32, Error> {
    for label in [label_in, label_out] {
        if label < 1 || label > delta {
            return Err(Error::LabelOutOfRange { label, delta });
        }
    }
    Ok(if label_out > label_in {
        label_out - label_in
    } else {
        label_out + delta - label_in
    })
}

/// The largest duration any fastest path over `k` edges can have,
/// `(k-1)·Δ+1`. A bound of this value constrains nothing.
pub fn trivial_bound(path_len: u64, delta: u64) -> u64 {
    debug_assert!(path_len >= 1 && delta >= 1);
    (path_len - 1) * delta + 1
}

/// Duration of the fastest temporal path from `s` to `t`: one plus the sum of
/// travel delays along the unique tree path.
pub fn path_duration(
    tree: &Tree,
    labeling: &PeriodicLabeling,
    delta: u32,
    s: VertexId,
    t: VertexId,
) -> Result<u64, Error> {
    let path = tree.path(s, t)?;
    let mut duration: u64 = 1;
    let mut prev_label: Option<u32> = None;
    for pair in path.windows(2) {
        let label = labeling.label_of(Edge::new(pair[0], pair[1])?)?;
        if let Some(prev) = prev_label {
            duration += travel_delay(prev, label, delta)? as u64;
        }
        prev_label = Some(label);
    }
    Ok(duration)
}

/// Durations for every ordered pair of distinct vertices.
///
/// Runs one labeled BFS per source, extending durations along parent edges,
/// so the whole table costs O(n²) instead of O(n³).
pub fn all_pairs_durations(
    tree: &Tree,
    labeling: &PeriodicLabeling,
    delta: u32,
) -> Result<DurationReport, Error> {
    labeling.validate_for(tree, delta)?;
    let n = tree.vertex_count();
    let mut durations = BTreeMap::new();
    for s in 0..n {
        // (duration so far, label of the edge that reached the vertex)
        let mut state: Vec<Option<(u64, u32)>> = vec![None; n];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        let mut seen = vec![false; n];
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            for &w in tree.neighbors(v) {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                let label = labeling.label_of(Edge::new(v, w)?)?;
                let duration = match state[v] {
                    None => 1,
                    Some((d, last)) => d + travel_delay(last, label, delta)? as u64,
                };
                state[w] = Some((duration, label));
                durations.insert((s, w), duration);
                queue.push_back(w);
            }
        }
    }
    Ok(DurationReport {
        durations,
        violations: Vec::new(),
    })
}

/// Checks a labeling against an instance's bounds.
///
/// The returned report lists every ordered pair's duration and one violation
/// per explicit bound that is exceeded; trivial bounds can never be violated.
pub fn verify_labeling(
    instance: &TtrInstance,
    labeling: &PeriodicLabeling,
) -> Result<DurationReport, Error> {
    let mut report = all_pairs_durations(instance.tree(), labeling, instance.delta())?;
    let mut violations = Vec::new();
    for (s, t, bound) in instance.bounds().explicit_entries() {
        if let Some(duration) = report.duration(s, t) {
            if duration > bound {
                violations.push(Violation {
                    from: s,
                    to: t,
                    duration,
                    bound,
                });
            }
        }
    }
    report.violations = violations;
    Ok(report)
}

/// Why preprocessing declared an instance infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfeasibilityReason {
    /// An explicit bound is below the tree distance, the minimum possible
    /// duration.
    BoundBelowDistance { bound: u64, distance: u64 },
    /// Both directed bounds are explicit and their sum is below the floor
    /// `(k-1)·Δ+2` that every labeling must spend on the round trip.
    RoundTripBelowFloor { sum: u64, floor: u64 },
}

/// Infeasibility certificate identified during preprocessing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasibility {
    pub from: VertexId,
    pub to: VertexId,
    pub reason: InfeasibilityReason,
}

/// Outcome of [`preprocess`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preprocessed {
    /// Normalized instance: bounds at or above the trivial value are dropped.
    Feasible(TtrInstance),
    Infeasible(Infeasibility),
}

/// Normalizes bounds and rejects instances that cannot be realized for
/// counting reasons alone.
///
/// Every travel delay is at least one, so a path over `k` edges has duration
/// at least `k`; and a round trip over `k ≥ 2` edges costs at least
/// `(k-1)·Δ+2`. Bounds at or above the trivial `(k-1)·Δ+1` are dropped.
pub fn preprocess(instance: &TtrInstance) -> Preprocessed {
    let tree = instance.tree();
    let delta = instance.delta() as u64;
    let mut distances: BTreeMap<(VertexId, VertexId), u64> = BTreeMap::new();
    let mut bounds = BoundMatrix::all_trivial();
    for (s, t, bound) in instance.bounds().explicit_entries() {
        let key = (s.min(t), s.max(t));
        let k = *distances
            .entry(key)
            .or_insert_with(|| tree.distance(s, t).expect("validated pair") as u64);
        if bound < k {
            return Preprocessed::Infeasible(Infeasibility {
                from: s,
                to: t,
                reason: InfeasibilityReason::BoundBelowDistance {
                    bound,
                    distance: k,
                },
            });
        }
        if bound < trivial_bound(k, delta) {
            bounds.set(s, t, bound).expect("positive bound");
        }
    }
    // Round-trip floor, only meaningful when both directions stayed explicit.
    let pairs: Vec<(VertexId, VertexId, u64)> = bounds.explicit_entries().collect();
    for (s, t, b) in pairs {
        if s < t {
            if let Bound::Explicit(back) = bounds.get(t, s) {
                let k = distances[&(s, t)];
                if k >= 2 {
                    let floor = (k - 1) * delta + 2;
                    if b + back < floor {
                        return Preprocessed::Infeasible(Infeasibility {
                            from: s,
                            to: t,
                            reason: InfeasibilityReason::RoundTripBelowFloor {
                                sum: b + back,
                                floor,
                            },
                        });
                    }
                }
            }
        }
    }
    Preprocessed::Feasible(
        TtrInstance::new(tree.clone(), instance.delta(), bounds).expect("validated instance"),
    )
}

/// Shifts every label by `amount` positions around the period. All travel
/// delays, and therefore all durations, are unchanged.
pub fn cyclic_shift(
    labeling: &PeriodicLabeling,
    delta: u32,
    amount: u32,
) -> Result<PeriodicLabeling, Error> {
    if amount >= delta {
        return Err(Error::ShiftOutOfRange { amount, delta });
    }
    Ok(labeling
        .iter()
        .map(|(e, l)| (e, (l - 1 + amount) % delta + 1))
        .collect())
}
