//! Leaves-parameterized solver: enumerate global label configurations,
//! solve one MILP per configuration, and rebuild a witness labeling from the
//! solved travel delays.
//!
//! Every degree-2 vertex contributes one fractional delay variable; every
//! vertex of degree above two contributes integer label variables for its
//! incident edges, with one ordered partition of those edges (a label
//! configuration) fixed per MILP. Within a configuration the per-vertex
//! delay expressions are linear in the label variables, each bound becomes a
//! single row over the path's delays, and the fractional part of the matrix
//! is a network matrix, so a feasible MILP always has an all-integer vertex
//! and the realized labeling can be propagated edge by edge.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, ToPrimitive, Zero};

use crate::error::Error;
use crate::milp::{
    milp_feasible, MilpModel, MilpOutcome, Rational, RationalVector, VarId, DEFAULT_NODE_LIMIT,
};
use crate::model::{
    travel_delay, verify_labeling, Edge, PeriodicLabeling, Tree, TtrInstance, VertexId,
};
use crate::oracle::SolveResult;

/// Vertices of a tree grouped by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClasses {
    pub leaves: Vec<VertexId>,
    pub degree_two: Vec<VertexId>,
    /// Degree strictly above two, ascending. Bounded in size and degree by
    /// the leaf count.
    pub high_degree: Vec<VertexId>,
}

impl VertexClasses {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }
}

pub fn classify_vertices(tree: &Tree) -> VertexClasses {
    let mut classes = VertexClasses {
        leaves: Vec::new(),
        degree_two: Vec::new(),
        high_degree: Vec::new(),
    };
    for v in 0..tree.vertex_count() {
        match tree.degree(v) {
            1 => classes.leaves.push(v),
            2 => classes.degree_two.push(v),
            d if d > 2 => classes.high_degree.push(v),
            _ => {}
        }
    }
    classes
}

/// Ordered partition of one vertex's incident edges; parts are listed in
/// increasing label order and each part's edges share a label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexConfiguration {
    pub parts: Vec<Vec<Edge>>,
}

/// One ordered partition per high-degree vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GlobalLabelConfiguration {
    assignments: BTreeMap<VertexId, VertexConfiguration>,
}

impl GlobalLabelConfiguration {
    pub fn new(assignments: BTreeMap<VertexId, VertexConfiguration>) -> Self {
        GlobalLabelConfiguration { assignments }
    }

    pub fn get(&self, v: VertexId) -> Option<&VertexConfiguration> {
        self.assignments.get(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.assignments.keys().copied()
    }

    /// Index of the part holding `e` at vertex `v`.
    pub fn part_of(&self, v: VertexId, e: Edge) -> Option<usize> {
        self.assignments
            .get(&v)?
            .parts
            .iter()
            .position(|part| part.contains(&e))
    }
}

/// All ordered partitions of `edges` into at most `max_parts` nonempty
/// parts, in a fixed lexicographic order (partitions by restricted-growth
/// string, orderings by permutation rank).
pub fn vertex_configurations(edges: &[Edge], max_parts: usize) -> Vec<VertexConfiguration> {
    let d = edges.len();
    let mut out = Vec::new();
    if d == 0 || max_parts == 0 {
        return out;
    }
    let mut rgs = vec![0usize; d];
    loop {
        let blocks_count = rgs.iter().copied().max().unwrap() + 1;
        if blocks_count <= max_parts {
            let mut blocks: Vec<Vec<Edge>> = vec![Vec::new(); blocks_count];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(edges[i]);
            }
            for order in permutations(blocks_count) {
                out.push(VertexConfiguration {
                    parts: order.iter().map(|&b| blocks[b].clone()).collect(),
                });
            }
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    out
}

fn next_rgs(a: &mut [usize]) -> bool {
    for i in (1..a.len()).rev() {
        let max_prefix = a[..i].iter().copied().max().unwrap();
        if a[i] <= max_prefix {
            a[i] += 1;
            a[i + 1..].fill(0);
            return true;
        }
    }
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

/// Number of ordered partitions of a `degree`-set into at most `max_parts`
/// parts: Σ k!·S(degree, k).
pub fn count_vertex_configurations(degree: usize, max_parts: usize) -> u128 {
    if degree == 0 || max_parts == 0 {
        return 0;
    }
    // Stirling numbers of the second kind.
    let kmax = degree.min(max_parts);
    let mut stirling = vec![vec![0u128; kmax + 1]; degree + 1];
    stirling[0][0] = 1;
    for n in 1..=degree {
        for k in 1..=kmax.min(n) {
            stirling[n][k] = stirling[n - 1][k - 1]
                .saturating_add((k as u128).saturating_mul(stirling[n - 1][k]));
        }
    }
    let mut total = 0u128;
    let mut factorial = 1u128;
    for k in 1..=kmax {
        factorial = factorial.saturating_mul(k as u128);
        total = total.saturating_add(factorial.saturating_mul(stirling[degree][k]));
    }
    total
}

/// Streaming Cartesian product of per-vertex configuration lists. The empty
/// product (no high-degree vertices) yields one empty configuration.
pub struct ConfigurationStream {
    per_vertex: Vec<(VertexId, Vec<VertexConfiguration>)>,
    indices: Vec<usize>,
    done: bool,
}

impl ConfigurationStream {
    fn new(per_vertex: Vec<(VertexId, Vec<VertexConfiguration>)>) -> Self {
        let done = per_vertex.iter().any(|(_, configs)| configs.is_empty());
        let indices = vec![0; per_vertex.len()];
        ConfigurationStream {
            per_vertex,
            indices,
            done,
        }
    }
}

impl Iterator for ConfigurationStream {
    type Item = GlobalLabelConfiguration;

    fn next(&mut self) -> Option<GlobalLabelConfiguration> {
        if self.done {
            return None;
        }
        let current = GlobalLabelConfiguration::new(
            self.per_vertex
                .iter()
                .zip(&self.indices)
                .map(|((v, configs), &i)| (*v, configs[i].clone()))
                .collect(),
        );
        // Odometer: last vertex varies fastest.
        let mut pos = self.per_vertex.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.indices[pos] += 1;
            if self.indices[pos] < self.per_vertex[pos].1.len() {
                break;
            }
            self.indices[pos] = 0;
        }
        Some(current)
    }
}

/// Streams every global label configuration exactly once.
pub fn enumerate_configurations(
    tree: &Tree,
    classes: &VertexClasses,
    delta: u32,
) -> ConfigurationStream {
    let max_parts = classes.leaf_count().min(delta as usize);
    let per_vertex = classes
        .high_degree
        .iter()
        .map(|&v| {
            let edges: Vec<Edge> = tree
                .neighbors(v)
                .iter()
                .map(|&u| Edge::new(u, v).expect("tree edge"))
                .collect();
            (v, vertex_configurations(&edges, max_parts))
        })
        .collect();
    ConfigurationStream::new(per_vertex)
}

/// Total number of global label configurations, saturating.
pub fn count_configurations(tree: &Tree, classes: &VertexClasses, delta: u32) -> u128 {
    let max_parts = classes.leaf_count().min(delta as usize);
    classes
        .high_degree
        .iter()
        .map(|&v| count_vertex_configurations(tree.degree(v), max_parts))
        .fold(1u128, |acc, c| acc.saturating_mul(c))
}

/// Internal vertices of one ordered path, split by degree and orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    /// Degree-2 internal vertices whose source-side neighbor precedes the
    /// target-side neighbor in vertex order.
    pub forward_deg2: Vec<VertexId>,
    /// Degree-2 internal vertices oriented the other way.
    pub backward_deg2: Vec<VertexId>,
    /// High-degree internal vertices as (vertex, source-side neighbor,
    /// target-side neighbor).
    pub high_degree: Vec<(VertexId, VertexId, VertexId)>,
}

/// Splits the internal vertices of the `s`→`t` path for constraint assembly.
pub fn decompose_path(tree: &Tree, s: VertexId, t: VertexId) -> Result<PathDecomposition, Error> {
    let path = tree.path(s, t)?;
    let mut out = PathDecomposition {
        forward_deg2: Vec::new(),
        backward_deg2: Vec::new(),
        high_degree: Vec::new(),
    };
    for window in path.windows(3) {
        let (prev, v, next) = (window[0], window[1], window[2]);
        if tree.degree(v) == 2 {
            if prev < next {
                out.forward_deg2.push(v);
            } else {
                out.backward_deg2.push(v);
            }
        } else {
            out.high_degree.push((v, prev, next));
        }
    }
    Ok(out)
}

/// Why a configuration was discarded while building its MILP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaRejection {
    /// Two parts that the ordering requires to differ were forced onto the
    /// same label variable by part merges elsewhere.
    PartOrderCollapsed { vertex: VertexId },
    /// A bound's row contains no variables and its constant side already
    /// exceeds the bound.
    ConstantRowViolated { from: VertexId, to: VertexId },
}

/// A built MILP plus the variable-role metadata needed to read delays back
/// out of a solution.
#[derive(Debug, Clone)]
pub struct FptModel {
    pub model: MilpModel,
    sigma: GlobalLabelConfiguration,
    x_vars: BTreeMap<VertexId, VarId>,
    /// Label-variable class per edge incident to a high-degree vertex.
    edge_class: BTreeMap<Edge, usize>,
    class_vars: Vec<VarId>,
}

#[derive(Debug, Clone)]
pub enum BuiltMilp {
    Model(Box<FptModel>),
    Rejected(SigmaRejection),
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Builds the constraint system for one configuration.
///
/// Same-part label equalities are contracted to one representative variable
/// per merged class, per-vertex delay definitions are substituted into the
/// bound rows, and every representative is boxed to `[1, Δ]`. When a class
/// component touches a single high-degree vertex, the first part of that
/// vertex is pinned to label 1; a cyclic shift of the component's labels
/// makes this lossless.
pub fn build_milp(
    instance: &TtrInstance,
    sigma: &GlobalLabelConfiguration,
) -> Result<BuiltMilp, Error> {
    let tree = instance.tree();
    let delta = instance.delta() as i64;
    let classes = classify_vertices(tree);
    let max_parts = classes.leaf_count().min(instance.delta() as usize);

    // Validate sigma against the tree.
    for &v in &classes.high_degree {
        let config = sigma.get(v).ok_or(Error::MalformedConfiguration(v))?;
        if config.parts.len() > max_parts {
            return Err(Error::TooManyParts {
                vertex: v,
                parts: config.parts.len(),
                max: max_parts,
            });
        }
        let mut seen = BTreeSet::new();
        for part in &config.parts {
            if part.is_empty() {
                return Err(Error::MalformedConfiguration(v));
            }
            for e in part {
                if !tree.contains_edge(*e) || !e.touches(v) || !seen.insert(*e) {
                    return Err(Error::MalformedConfiguration(v));
                }
            }
        }
        if seen.len() != tree.degree(v) {
            return Err(Error::MalformedConfiguration(v));
        }
    }
    for v in sigma.vertices() {
        if !classes.high_degree.contains(&v) {
            return Err(Error::MalformedConfiguration(v));
        }
    }

    // Union edges that must share a label.
    let mut edge_ids = BTreeMap::new();
    let mut labeled_edges = Vec::new();
    for &v in &classes.high_degree {
        for &u in tree.neighbors(v) {
            let e = Edge::new(u, v)?;
            if let std::collections::btree_map::Entry::Vacant(slot) = edge_ids.entry(e) {
                slot.insert(labeled_edges.len());
                labeled_edges.push(e);
            }
        }
    }
    let mut uf = UnionFind::new(labeled_edges.len());
    for &v in &classes.high_degree {
        for part in &sigma.get(v).expect("validated").parts {
            for pair in part.windows(2) {
                uf.union(edge_ids[&pair[0]], edge_ids[&pair[1]]);
            }
        }
    }
    // Classes indexed in order of their smallest member edge.
    let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut class_members: Vec<Vec<Edge>> = Vec::new();
    for (i, &e) in labeled_edges.iter().enumerate() {
        let root = uf.find(i);
        let idx = *class_of_root.entry(root).or_insert(class_members.len());
        if idx == class_members.len() {
            class_members.push(Vec::new());
        }
        class_members[idx].push(e);
    }
    let mut edge_class = BTreeMap::new();
    for (idx, members) in class_members.iter().enumerate() {
        for &e in members {
            edge_class.insert(e, idx);
        }
    }

    // A part ordering collapses when two differently ordered parts land in
    // one class.
    let mut difference_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &v in &classes.high_degree {
        let parts = &sigma.get(v).expect("validated").parts;
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                let ci = edge_class[&parts[i][0]];
                let cj = edge_class[&parts[j][0]];
                if ci == cj {
                    return Ok(BuiltMilp::Rejected(SigmaRejection::PartOrderCollapsed {
                        vertex: v,
                    }));
                }
                difference_pairs.insert((ci, cj));
            }
        }
    }

    let mut model = MilpModel::new();
    let class_vars: Vec<VarId> = class_members
        .iter()
        .enumerate()
        .map(|(idx, members)| {
            let e = members[0];
            model.add_integer(
                format!("z{}_{}c{}", e.min_end(), e.max_end(), idx),
                1,
                delta,
            )
        })
        .collect();
    let mut x_vars = BTreeMap::new();
    for &v in &classes.degree_two {
        x_vars.insert(
            v,
            model.add_fractional(format!("x{v}"), rat(1), rat(delta - 1)),
        );
    }

    // Label-order rows: each ordered part pair needs a gap of 1..=Δ-1.
    for &(ci, cj) in &difference_pairs {
        let (zi, zj) = (class_vars[ci], class_vars[cj]);
        model.add_le(vec![(zi, rat(1)), (zj, rat(-1))], rat(-1));
        model.add_le(vec![(zj, rat(1)), (zi, rat(-1))], rat(delta - 1));
    }

    // Pin one class per single-vertex component to label 1. Components are
    // connected through difference rows.
    {
        let mut comp = UnionFind::new(class_members.len());
        for &(ci, cj) in &difference_pairs {
            comp.union(ci, cj);
        }
        let mut component_vertices: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
        for (idx, members) in class_members.iter().enumerate() {
            let root = comp.find(idx);
            let entry = component_vertices.entry(root).or_default();
            for e in members {
                for end in [e.min_end(), e.max_end()] {
                    if tree.degree(end) > 2 {
                        entry.insert(end);
                    }
                }
            }
        }
        for (&root, vertices) in &component_vertices {
            if vertices.len() != 1 {
                continue;
            }
            let v = *vertices.iter().next().expect("nonempty component");
            let first_part_edge = sigma.get(v).expect("validated").parts[0][0];
            let idx = edge_class[&first_part_edge];
            if comp.find(idx) == root {
                model.set_box(class_vars[idx], rat(1), rat(1));
            }
        }
    }

    // One row per explicit directed bound over a path with internal
    // vertices: the path's delays must sum to at most bound - 1.
    for (s, t, bound) in instance.bounds().explicit_entries() {
        if tree.distance(s, t)? < 2 {
            continue;
        }
        let decomposition = decompose_path(tree, s, t)?;
        let mut coeffs: BTreeMap<VarId, Rational> = BTreeMap::new();
        let mut constant: i64 = 0;
        for &v in &decomposition.forward_deg2 {
            *coeffs.entry(x_vars[&v]).or_insert_with(Rational::zero) += rat(1);
        }
        for &v in &decomposition.backward_deg2 {
            *coeffs.entry(x_vars[&v]).or_insert_with(Rational::zero) -= rat(1);
            constant += delta;
        }
        for &(v, prev, next) in &decomposition.high_degree {
            let e_in = Edge::new(prev, v)?;
            let e_out = Edge::new(v, next)?;
            let pi = sigma.part_of(v, e_in).ok_or(Error::MalformedConfiguration(v))?;
            let pj = sigma
                .part_of(v, e_out)
                .ok_or(Error::MalformedConfiguration(v))?;
            if pi == pj {
                constant += delta;
            } else {
                let zi = class_vars[edge_class[&e_in]];
                let zj = class_vars[edge_class[&e_out]];
                *coeffs.entry(zj).or_insert_with(Rational::zero) += rat(1);
                *coeffs.entry(zi).or_insert_with(Rational::zero) -= rat(1);
                if pi > pj {
                    constant += delta;
                }
            }
        }
        let rhs = rat(bound as i64 - 1 - constant);
        let terms: Vec<(VarId, Rational)> = coeffs
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            if rhs < rat(0) {
                return Ok(BuiltMilp::Rejected(SigmaRejection::ConstantRowViolated {
                    from: s,
                    to: t,
                }));
            }
            continue;
        }
        model.add_le(terms, rhs);
    }

    Ok(BuiltMilp::Model(Box::new(FptModel {
        model,
        sigma: sigma.clone(),
        x_vars,
        edge_class,
        class_vars,
    })))
}

impl FptModel {
    /// Reads the solved travel delays out of a feasible point.
    pub fn delays_from(
        &self,
        tree: &Tree,
        delta: u32,
        point: &RationalVector,
    ) -> Result<DelayAssignment, Error> {
        let mut deg2 = BTreeMap::new();
        for (&v, &var) in &self.x_vars {
            let value = point.get(var);
            if !value.is_integer() {
                return Err(Error::NonIntegralVertex(self.model.var(var).name.clone()));
            }
            deg2.insert(v, value.to_integer().to_u32().expect("boxed delay"));
        }
        let mut high = BTreeMap::new();
        for v in self.sigma.vertices() {
            let neighbors = tree.neighbors(v);
            for &u in neighbors {
                for &w in neighbors {
                    if u == w {
                        continue;
                    }
                    let e_in = Edge::new(u, v)?;
                    let e_out = Edge::new(v, w)?;
                    let pi = self
                        .sigma
                        .part_of(v, e_in)
                        .ok_or(Error::MalformedConfiguration(v))?;
                    let pj = self
                        .sigma
                        .part_of(v, e_out)
                        .ok_or(Error::MalformedConfiguration(v))?;
                    let delay = if pi == pj {
                        delta
                    } else {
                        let zi = point.get(self.class_vars[self.edge_class[&e_in]]);
                        let zj = point.get(self.class_vars[self.edge_class[&e_out]]);
                        let diff = (zj - zi).to_integer().to_i64().expect("boxed label");
                        let raw = if pi < pj { diff } else { diff + delta as i64 };
                        u32::try_from(raw).map_err(|_| Error::InconsistentDelays(v))?
                    };
                    high.insert((v, u, w), delay);
                }
            }
        }
        Ok(DelayAssignment { deg2, high })
    }
}

/// Solved travel delays: one value per degree-2 vertex (in its vertex-order
/// orientation) and one per ordered neighbor pair at high-degree vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DelayAssignment {
    /// Delay from the smaller-indexed neighbor to the larger one.
    pub deg2: BTreeMap<VertexId, u32>,
    /// `(v, u, w)` maps to the delay at `v` entering from `u`, leaving to `w`.
    pub high: BTreeMap<(VertexId, VertexId, VertexId), u32>,
}

impl DelayAssignment {
    /// Delay at `v` when traversing `{from, v}` then `{v, to}`.
    pub fn delay_through(
        &self,
        tree: &Tree,
        delta: u32,
        v: VertexId,
        from: VertexId,
        to: VertexId,
    ) -> Result<u32, Error> {
        if tree.degree(v) == 2 {
            let x = *self.deg2.get(&v).ok_or(Error::MissingDelay(v))?;
            Ok(if from < to { x } else { delta - x })
        } else {
            self.high
                .get(&(v, from, to))
                .copied()
                .ok_or(Error::MissingDelay(v))
        }
    }
}

/// Rebuilds a labeling realizing the given delays: the lexicographically
/// smallest edge gets label 1 and labels propagate outward, each new edge
/// receiving the unique label that realizes the solved delay at the shared
/// vertex. A full consistency pass re-checks every defined delay afterwards.
pub fn reconstruct_labeling(
    tree: &Tree,
    delta: u32,
    delays: &DelayAssignment,
) -> Result<PeriodicLabeling, Error> {
    let edges = tree.edges();
    let mut labeling = PeriodicLabeling::new();
    let Some(&first) = edges.first() else {
        return Ok(labeling);
    };
    labeling.set(first, 1);
    let mut queue = std::collections::VecDeque::from([first]);
    while let Some(labeled) = queue.pop_front() {
        let label = labeling.get(labeled).expect("queued edges are labeled");
        for v in [labeled.min_end(), labeled.max_end()] {
            let w = labeled.other(v);
            for &u in tree.neighbors(v) {
                if u == w {
                    continue;
                }
                let e = Edge::new(u, v)?;
                if labeling.get(e).is_some() {
                    continue;
                }
                let delay = delays.delay_through(tree, delta, v, u, w)?;
                // delay ≡ label(v,w) − label(u,v) (mod Δ), both in [1, Δ].
                let m = (label as i64 - delay as i64).rem_euclid(delta as i64);
                let new_label = if m == 0 { delta } else { m as u32 };
                labeling.set(e, new_label);
                queue.push_back(e);
            }
        }
    }
    // Consistency: every defined delay must be realized.
    for v in 0..tree.vertex_count() {
        let neighbors = tree.neighbors(v);
        if neighbors.len() < 2 {
            continue;
        }
        for &u in neighbors {
            for &w in neighbors {
                if u == w {
                    continue;
                }
                let expected = delays.delay_through(tree, delta, v, u, w)?;
                let l_in = labeling.label_of(Edge::new(u, v)?)?;
                let l_out = labeling.label_of(Edge::new(v, w)?)?;
                if travel_delay(l_in, l_out, delta)? != expected {
                    return Err(Error::InconsistentDelays(v));
                }
            }
        }
    }
    Ok(labeling)
}

/// Knobs for [`solve_fpt`].
#[derive(Debug, Clone)]
pub struct FptOptions {
    /// Cap on the number of global label configurations.
    pub max_configs: u128,
    /// Cap on branch nodes per MILP.
    pub node_limit: u64,
    /// Worker threads; configurations are dispatched in deterministic
    /// batches so the first feasible configuration still wins.
    pub workers: usize,
}

impl Default for FptOptions {
    fn default() -> Self {
        FptOptions {
            max_configs: 10_000_000,
            node_limit: DEFAULT_NODE_LIMIT,
            workers: 1,
        }
    }
}

fn all_ones_labeling(tree: &Tree) -> PeriodicLabeling {
    tree.edges().into_iter().map(|e| (e, 1)).collect()
}

fn try_sigma(
    instance: &TtrInstance,
    sigma: &GlobalLabelConfiguration,
    node_limit: u64,
) -> Result<Option<PeriodicLabeling>, Error> {
    let built = match build_milp(instance, sigma)? {
        BuiltMilp::Rejected(_) => return Ok(None),
        BuiltMilp::Model(m) => m,
    };
    match milp_feasible(&built.model, node_limit)? {
        MilpOutcome::Infeasible => Ok(None),
        MilpOutcome::Feasible(point) => {
            let delays = built.delays_from(instance.tree(), instance.delta(), &point)?;
            let labeling = reconstruct_labeling(instance.tree(), instance.delta(), &delays)?;
            let report = verify_labeling(instance, &labeling)?;
            if let Some(v) = report.violations().first() {
                return Err(Error::Internal(format!(
                    "reconstructed witness violates bound ({}, {}): {} > {}",
                    v.from, v.to, v.duration, v.bound
                )));
            }
            Ok(Some(labeling))
        }
    }
}

/// Decides an instance by configuration enumeration. `examined` counts the
/// configurations consumed from the stream.
pub fn solve_fpt(instance: &TtrInstance, options: &FptOptions) -> Result<SolveResult, Error> {
    let tree = instance.tree();
    if tree.vertex_count() <= 2 {
        return Ok(SolveResult::yes(all_ones_labeling(tree), 0));
    }
    if instance.delta() == 1 {
        // Only one labeling exists; durations equal distances.
        let labeling = all_ones_labeling(tree);
        let report = verify_labeling(instance, &labeling)?;
        return Ok(if report.is_realizing() {
            SolveResult::yes(labeling, 0)
        } else {
            SolveResult::no(0)
        });
    }
    let classes = classify_vertices(tree);
    let required = count_configurations(tree, &classes, instance.delta());
    if required > options.max_configs {
        return Err(Error::ConfigBudgetExceeded {
            required,
            budget: options.max_configs,
        });
    }
    let mut stream = enumerate_configurations(tree, &classes, instance.delta());
    let mut examined: u64 = 0;

    if options.workers <= 1 {
        for sigma in stream {
            examined += 1;
            if let Some(witness) = try_sigma(instance, &sigma, options.node_limit)? {
                return Ok(SolveResult::yes(witness, examined));
            }
        }
        return Ok(SolveResult::no(examined));
    }

    use rayon::prelude::*;
    let batch_size = options.workers * 8;
    loop {
        let batch: Vec<GlobalLabelConfiguration> = stream.by_ref().take(batch_size).collect();
        if batch.is_empty() {
            return Ok(SolveResult::no(examined));
        }
        examined += batch.len() as u64;
        let results: Result<Vec<Option<PeriodicLabeling>>, Error> = batch
            .par_iter()
            .map(|sigma| try_sigma(instance, sigma, options.node_limit))
            .collect();
        if let Some(witness) = results?.into_iter().flatten().next() {
            return Ok(SolveResult::yes(witness, examined));
        }
    }
}
