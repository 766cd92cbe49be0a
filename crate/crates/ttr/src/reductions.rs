//! Instance generators translating graph coloring and monotone NAE-3-SAT
//! into tree realization instances, with witness maps in both directions.
//!
//! Three families are produced:
//!
//! * a star whose leaf-pair bounds encode proper coloring (period = color
//!   count, at least 3);
//! * a diameter-bounded tree for period 2, one hub carrying a two-leaf
//!   gadget per variable and a fifteen-vertex gadget per clause;
//! * a bounded-degree tree for period 2, the same gadgets strung along an
//!   alternating spine.
//!
//! Equal-label forcing does all the work: a bound of 2 on a two-edge path
//! pins its edges to different labels, and chains of such bounds copy truth
//! values from variable gadgets into clause gadgets, where one path of three
//! edges may not be monochromatic.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::model::{
    verify_labeling, BoundMatrix, Edge, PeriodicLabeling, Tree, TtrInstance, VertexId,
};

/// Simple undirected graph used as coloring input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, count: n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, count: n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            normalized.push(e);
        }
        normalized.sort_unstable();
        Ok(SimpleGraph {
            n,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Checks a proper coloring with colors `1..=colors`.
    pub fn is_proper_coloring(&self, coloring: &[u32], colors: u32) -> Result<(), Error> {
        if coloring.len() != self.n {
            return Err(Error::AssignmentLengthMismatch {
                got: coloring.len(),
                want: self.n,
            });
        }
        for (v, &c) in coloring.iter().enumerate() {
            if c < 1 || c > colors {
                return Err(Error::ColorOutOfRange {
                    vertex: v,
                    color: c,
                    colors,
                });
            }
        }
        for &(a, b) in &self.edges {
            if coloring[a] == coloring[b] {
                return Err(Error::ImproperColoring(a, b));
            }
        }
        Ok(())
    }
}

/// Coloring input: a graph plus the number of colors, which doubles as the
/// period of the generated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringInstance {
    pub graph: SimpleGraph,
    pub colors: u32,
}

/// Star instance generated from a coloring question, plus the vertex map
/// needed for witness translation. Graph vertex `i` is leaf `i`; the center
/// is the last index.
#[derive(Debug, Clone)]
pub struct StarReduction {
    pub instance: TtrInstance,
    pub center: VertexId,
}

/// Builds the star: adjacent graph vertices get leaf-pair bound Δ (their
/// star path may not repeat a label), non-adjacent pairs stay trivial, and
/// center pairs get the vacuous bound 1.
pub fn from_coloring(coloring: &ColoringInstance) -> Result<StarReduction, Error> {
    if coloring.colors < 3 {
        return Err(Error::TooFewColors(coloring.colors));
    }
    let n = coloring.graph.vertex_count();
    let center = n;
    let edges: Vec<(VertexId, VertexId)> = (0..n).map(|v| (v, center)).collect();
    let tree = Tree::new(n + 1, &edges)?;
    let mut bounds = BoundMatrix::all_trivial();
    for v in 0..n {
        bounds.set_symmetric(v, center, 1)?;
    }
    for &(a, b) in coloring.graph.edges() {
        bounds.set_symmetric(a, b, coloring.colors as u64)?;
    }
    let instance = TtrInstance::new(tree, coloring.colors, bounds)?;
    Ok(StarReduction { instance, center })
}

impl StarReduction {
    fn graph_size(&self) -> usize {
        self.center
    }

    /// Maps a proper coloring to the labeling that uses each vertex's color
    /// as its star edge's label, verifying the result.
    pub fn coloring_to_labeling(
        &self,
        graph: &SimpleGraph,
        coloring: &[u32],
    ) -> Result<PeriodicLabeling, Error> {
        let colors = self.instance.delta();
        graph.is_proper_coloring(coloring, colors)?;
        let labeling: PeriodicLabeling = (0..self.graph_size())
            .map(|v| (Edge::new(v, self.center).expect("star edge"), coloring[v]))
            .collect();
        let report = verify_labeling(&self.instance, &labeling)?;
        if let Some(v) = report.violations().first() {
            return Err(Error::WitnessViolation {
                from: v.from,
                to: v.to,
                duration: v.duration,
                bound: v.bound,
            });
        }
        Ok(labeling)
    }

    /// Reads a proper coloring back out of a realizing labeling.
    pub fn labeling_to_coloring(
        &self,
        graph: &SimpleGraph,
        labeling: &PeriodicLabeling,
    ) -> Result<Vec<u32>, Error> {
        let report = verify_labeling(&self.instance, labeling)?;
        if let Some(v) = report.violations().first() {
            return Err(Error::WitnessViolation {
                from: v.from,
                to: v.to,
                duration: v.duration,
                bound: v.bound,
            });
        }
        let coloring: Vec<u32> = (0..self.graph_size())
            .map(|v| {
                labeling
                    .get(Edge::new(v, self.center).expect("star edge"))
                    .expect("realizing labelings are complete")
            })
            .collect();
        graph.is_proper_coloring(&coloring, self.instance.delta())?;
        Ok(coloring)
    }
}

/// Monotone NAE-3-SAT formula: clauses are ordered variable triples, no
/// negations; a clause is satisfied when its variables are not all equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeFormula {
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl NaeFormula {
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self, Error> {
        if num_vars == 0 {
            return Err(Error::NotATree(
                "a formula needs at least one variable".into(),
            ));
        }
        for (i, clause) in clauses.iter().enumerate() {
            for &v in clause {
                if v >= num_vars {
                    return Err(Error::ClauseVarOutOfRange {
                        clause: i,
                        var: v,
                        count: num_vars,
                    });
                }
            }
        }
        Ok(NaeFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    pub fn is_nae_satisfied(&self, assignment: &[bool]) -> Result<bool, Error> {
        if assignment.len() != self.num_vars {
            return Err(Error::AssignmentLengthMismatch {
                got: assignment.len(),
                want: self.num_vars,
            });
        }
        Ok(self.clauses.iter().all(|c| {
            let values = [assignment[c[0]], assignment[c[1]], assignment[c[2]]];
            values.contains(&true) && values.contains(&false)
        }))
    }
}

/// Vertex ids of one clause gadget. The `x` occurrence has two copies at the
/// hub, `y` adds two more below the first chain vertex, `z` adds a third
/// pair below the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClauseGadget {
    pub hub: VertexId,
    pub u1: VertexId,
    pub u2: VertexId,
    pub u3: VertexId,
    pub x: [VertexId; 2],
    pub y: [VertexId; 4],
    pub z: [VertexId; 6],
}

impl ClauseGadget {
    /// Hub-adjacent copy pair for occurrence 0, 1 or 2.
    fn hub_pair(&self, occurrence: usize) -> (VertexId, VertexId) {
        match occurrence {
            0 => (self.x[0], self.x[1]),
            1 => (self.y[0], self.y[1]),
            _ => (self.z[0], self.z[1]),
        }
    }

    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        vec![
            (self.hub, self.u1),
            (self.u1, self.u2),
            (self.u2, self.u3),
            (self.hub, self.x[0]),
            (self.hub, self.x[1]),
            (self.hub, self.y[0]),
            (self.hub, self.y[1]),
            (self.hub, self.z[0]),
            (self.hub, self.z[1]),
            (self.u1, self.y[2]),
            (self.u1, self.y[3]),
            (self.u1, self.z[2]),
            (self.u1, self.z[3]),
            (self.u2, self.z[4]),
            (self.u2, self.z[5]),
        ]
    }

    fn add_bounds(&self, bounds: &mut BoundMatrix) -> Result<(), Error> {
        // Copies of the variable gadget inside the clause.
        bounds.set_symmetric(self.x[0], self.x[1], 2)?;
        bounds.set_symmetric(self.y[0], self.y[1], 2)?;
        bounds.set_symmetric(self.y[2], self.y[3], 2)?;
        bounds.set_symmetric(self.z[0], self.z[1], 2)?;
        bounds.set_symmetric(self.z[2], self.z[3], 2)?;
        bounds.set_symmetric(self.z[4], self.z[5], 2)?;
        // Copy the first occurrence's value onto the chain's first edge.
        bounds.set_symmetric(self.x[1], self.u1, 2)?;
        // Tie the second occurrence's lower copy to the upper one, then to
        // the chain's second edge.
        bounds.set_symmetric(self.y[0], self.y[3], 4)?;
        bounds.set_symmetric(self.y[1], self.y[2], 4)?;
        bounds.set_symmetric(self.y[3], self.u2, 2)?;
        // Same for the third occurrence, one level further down.
        bounds.set_symmetric(self.z[0], self.z[3], 4)?;
        bounds.set_symmetric(self.z[1], self.z[2], 4)?;
        bounds.set_symmetric(self.z[2], self.z[5], 4)?;
        bounds.set_symmetric(self.z[3], self.z[4], 4)?;
        bounds.set_symmetric(self.z[5], self.u3, 2)?;
        // The chain may not be monochromatic.
        bounds.set_symmetric(self.hub, self.u3, 4)?;
        Ok(())
    }

    /// Labels every gadget edge from the three occurrence labels (the label
    /// of each occurrence's first copy; the second copy gets the other
    /// period-2 label).
    fn label(&self, labeling: &mut PeriodicLabeling, occ_labels: [u32; 3]) {
        let set = |labeling: &mut PeriodicLabeling, a: VertexId, b: VertexId, l: u32| {
            labeling.set(Edge::new(a, b).expect("gadget edge"), l);
        };
        let [l1, l2, l3] = occ_labels;
        set(labeling, self.hub, self.x[0], l1);
        set(labeling, self.hub, self.x[1], 3 - l1);
        set(labeling, self.hub, self.y[0], l2);
        set(labeling, self.hub, self.y[1], 3 - l2);
        set(labeling, self.hub, self.z[0], l3);
        set(labeling, self.hub, self.z[1], 3 - l3);
        set(labeling, self.u1, self.y[2], l2);
        set(labeling, self.u1, self.y[3], 3 - l2);
        set(labeling, self.u1, self.z[2], l3);
        set(labeling, self.u1, self.z[3], 3 - l3);
        set(labeling, self.u2, self.z[4], l3);
        set(labeling, self.u2, self.z[5], 3 - l3);
        set(labeling, self.hub, self.u1, l1);
        set(labeling, self.u1, self.u2, l2);
        set(labeling, self.u2, self.u3, l3);
    }
}

/// Diameter-bounded period-2 instance: every gadget hangs off one hub.
#[derive(Debug, Clone)]
pub struct DiameterReduction {
    pub instance: TtrInstance,
    pub hub: VertexId,
    /// Per variable: its two leaves.
    pub variables: Vec<(VertexId, VertexId)>,
    pub clauses: Vec<ClauseGadget>,
    formula: NaeFormula,
}

/// Builds the hub layout: `1 + 2·vars + 15·clauses` vertices.
pub fn from_nae3sat_diameter(formula: &NaeFormula) -> DiameterReduction {
    let n = formula.num_vars();
    let hub = 0;
    let mut edges = Vec::new();
    let mut bounds = BoundMatrix::all_trivial();
    let variables: Vec<(VertexId, VertexId)> = (0..n).map(|i| (1 + 2 * i, 2 + 2 * i)).collect();
    for &(v1, v2) in &variables {
        edges.push((hub, v1));
        edges.push((hub, v2));
        bounds.set_symmetric(v1, v2, 2).expect("positive bound");
    }
    let mut clauses = Vec::new();
    for (j, clause) in formula.clauses().iter().enumerate() {
        let base = 1 + 2 * n + 15 * j;
        let gadget = ClauseGadget {
            hub,
            u1: base,
            u2: base + 1,
            u3: base + 2,
            x: [base + 3, base + 4],
            y: [base + 5, base + 6, base + 7, base + 8],
            z: [base + 9, base + 10, base + 11, base + 12, base + 13, base + 14],
        };
        edges.extend(gadget.edges());
        gadget.add_bounds(&mut bounds).expect("positive bound");
        // Tie each occurrence's copies to its variable gadget, crosswise:
        // first leaf against second copy and vice versa.
        for (occ, &var) in clause.iter().enumerate() {
            let (v1, v2) = variables[var];
            let (c1, c2) = gadget.hub_pair(occ);
            bounds.set_symmetric(v1, c2, 2).expect("positive bound");
            bounds.set_symmetric(v2, c1, 2).expect("positive bound");
        }
        clauses.push(gadget);
    }
    let tree = Tree::new(1 + 2 * n + 15 * formula.clauses().len(), &edges)
        .expect("construction yields a tree");
    let instance = TtrInstance::new(tree, 2, bounds).expect("valid instance");
    DiameterReduction {
        instance,
        hub,
        variables,
        clauses,
        formula: formula.clone(),
    }
}

impl DiameterReduction {
    /// The labeling induced by an NAE-satisfying assignment; verified before
    /// it is returned, so a non-satisfying assignment surfaces as the bound
    /// its labeling violates.
    pub fn assignment_to_labeling(&self, assignment: &[bool]) -> Result<PeriodicLabeling, Error> {
        if assignment.len() != self.formula.num_vars() {
            return Err(Error::AssignmentLengthMismatch {
                got: assignment.len(),
                want: self.formula.num_vars(),
            });
        }
        let mut labeling = PeriodicLabeling::new();
        let var_label = |i: usize| if assignment[i] { 1 } else { 2 };
        for (i, &(v1, v2)) in self.variables.iter().enumerate() {
            labeling.set(Edge::new(self.hub, v1)?, var_label(i));
            labeling.set(Edge::new(self.hub, v2)?, 3 - var_label(i));
        }
        for (gadget, clause) in self.clauses.iter().zip(self.formula.clauses()) {
            gadget.label(
                &mut labeling,
                [
                    var_label(clause[0]),
                    var_label(clause[1]),
                    var_label(clause[2]),
                ],
            );
        }
        let report = verify_labeling(&self.instance, &labeling)?;
        if let Some(v) = report.violations().first() {
            return Err(Error::WitnessViolation {
                from: v.from,
                to: v.to,
                duration: v.duration,
                bound: v.bound,
            });
        }
        Ok(labeling)
    }

    /// Reads the assignment off the variable leaves of a realizing labeling.
    pub fn labeling_to_assignment(&self, labeling: &PeriodicLabeling) -> Result<Vec<bool>, Error> {
        let report = verify_labeling(&self.instance, labeling)?;
        if let Some(v) = report.violations().first() {
            return Err(Error::WitnessViolation {
                from: v.from,
                to: v.to,
                duration: v.duration,
                bound: v.bound,
            });
        }
        let assignment: Vec<bool> = self
            .variables
            .iter()
            .map(|&(v1, _)| labeling.get(Edge::new(self.hub, v1).expect("edge")) == Some(1))
            .collect();
        if !self.formula.is_nae_satisfied(&assignment)? {
            return Err(Error::Internal(
                "realizing labeling decodes to a non-satisfying assignment".into(),
            ));
        }
        Ok(assignment)
    }
}

/// Per-variable vertices of the bounded-degree layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpineVariable {
    pub w_prime: VertexId,
    pub w: VertexId,
    pub v1: VertexId,
    pub v2: VertexId,
}

/// Per-clause vertices of the bounded-degree layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpineClause {
    pub w_prime: VertexId,
    pub gadget: ClauseGadget,
}

/// Bounded-degree period-2 instance: variable and clause blocks on a spine.
#[derive(Debug, Clone)]
pub struct DegreeReduction {
    pub instance: TtrInstance,
    pub variables: Vec<SpineVariable>,
    pub clauses: Vec<SpineClause>,
    formula: NaeFormula,
}

/// Builds the spine layout: `4·vars + 17·clauses` vertices, blocks chained
/// `w′–w` with each block's `w` linked to the next block's `w′`.
pub fn from_nae3sat_degree(formula: &NaeFormula) -> DegreeReduction {
    let n = formula.num_vars();
    let m = formula.clauses().len();
    let mut edges = Vec::new();
    let mut bounds = BoundMatrix::all_trivial();
    let variables: Vec<SpineVariable> = (0..n)
        .map(|i| SpineVariable {
            w_prime: 4 * i,
            w: 4 * i + 1,
            v1: 4 * i + 2,
            v2: 4 * i + 3,
        })
        .collect();
    let clauses: Vec<SpineClause> = (0..m)
        .map(|j| {
            let base = 4 * n + 17 * j;
            SpineClause {
                w_prime: base,
                gadget: ClauseGadget {
                    hub: base + 1,
                    u1: base + 2,
                    u2: base + 3,
                    u3: base + 4,
                    x: [base + 5, base + 6],
                    y: [base + 7, base + 8, base + 9, base + 10],
                    z: [
                        base + 11,
                        base + 12,
                        base + 13,
                        base + 14,
                        base + 15,
                        base + 16,
                    ],
                },
            }
        })
        .collect();

    for v in &variables {
        edges.push((v.w_prime, v.w));
        edges.push((v.w, v.v1));
        edges.push((v.w, v.v2));
        bounds.set_symmetric(v.v1, v.v2, 2).expect("positive bound");
    }
    for c in &clauses {
        edges.push((c.w_prime, c.gadget.hub));
        edges.extend(c.gadget.edges());
        c.gadget.add_bounds(&mut bounds).expect("positive bound");
    }
    // Spine links and the distance-2 bounds that force alternation.
    for i in 0..n.saturating_sub(1) {
        edges.push((variables[i].w, variables[i + 1].w_prime));
        bounds
            .set_symmetric(variables[i].w, variables[i + 1].w, 2)
            .expect("positive bound");
        bounds
            .set_symmetric(variables[i].w_prime, variables[i + 1].w_prime, 2)
            .expect("positive bound");
    }
    if m > 0 {
        edges.push((variables[n - 1].w, clauses[0].w_prime));
        bounds
            .set_symmetric(variables[n - 1].w, clauses[0].gadget.hub, 2)
            .expect("positive bound");
        bounds
            .set_symmetric(variables[n - 1].w_prime, clauses[0].w_prime, 2)
            .expect("positive bound");
    }
    for j in 0..m.saturating_sub(1) {
        edges.push((clauses[j].gadget.hub, clauses[j + 1].w_prime));
        bounds
            .set_symmetric(clauses[j].gadget.hub, clauses[j + 1].gadget.hub, 2)
            .expect("positive bound");
        bounds
            .set_symmetric(clauses[j].w_prime, clauses[j + 1].w_prime, 2)
            .expect("positive bound");
    }
    // Occurrence copies, tied straight (first to first): the spine keeps
    // the two blocks in phase, with slack for exactly one repeated label.
    for (j, clause) in formula.clauses().iter().enumerate() {
        for (occ, &var) in clause.iter().enumerate() {
            let b = 2 * (n as u64 - var as u64 + j as u64) + 3;
            let v = &variables[var];
            let (c1, c2) = clauses[j].gadget.hub_pair(occ);
            bounds.set_symmetric(v.v1, c1, b).expect("positive bound");
            bounds.set_symmetric(v.v2, c2, b).expect("positive bound");
        }
    }
    let tree = Tree::new(4 * n + 17 * m, &edges).expect("construction yields a tree");
    let instance = TtrInstance::new(tree, 2, bounds).expect("valid instance");
    DegreeReduction {
        instance,
        variables,
        clauses,
        formula: formula.clone(),
    }
}

impl DegreeReduction {
    pub fn assignment_to_labeling(&self, assignment: &[bool]) -> Result<PeriodicLabeling, Error> {
        if assignment.len() != self.formula.num_vars() {
            return Err(Error::AssignmentLengthMismatch {
                got: assignment.len(),
                want: self.formula.num_vars(),
            });
        }
        let n = self.formula.num_vars();
        let m = self.formula.clauses().len();
        let mut labeling = PeriodicLabeling::new();
        let var_label = |i: usize| if assignment[i] { 1 } else { 2 };
        for (i, v) in self.variables.iter().enumerate() {
            labeling.set(Edge::new(v.w_prime, v.w)?, 1);
            labeling.set(Edge::new(v.w, v.v1)?, var_label(i));
            labeling.set(Edge::new(v.w, v.v2)?, 3 - var_label(i));
            if i + 1 < n {
                labeling.set(Edge::new(v.w, self.variables[i + 1].w_prime)?, 2);
            } else if m > 0 {
                labeling.set(Edge::new(v.w, self.clauses[0].w_prime)?, 2);
            }
        }
        for (j, (clause, spine)) in self
            .formula
            .clauses()
            .iter()
            .zip(&self.clauses)
            .enumerate()
        {
            labeling.set(Edge::new(spine.w_prime, spine.gadget.hub)?, 1);
            if j + 1 < m {
                labeling.set(Edge::new(spine.gadget.hub, self.clauses[j + 1].w_prime)?, 2);
            }
            spine.gadget.label(
                &mut labeling,
                [
                    var_label(clause[0]),
                    var_label(clause[1]),
                    var_label(clause[2]),
                ],
            );
        }
        let report = verify_labeling(&self.instance, &labeling)?;
        if let Some(v) = report.violations().first() {
            return Err(Error::WitnessViolation {
                from: v.from,
                to: v.to,
                duration: v.duration,
                bound: v.bound,
            });
        }
        Ok(labeling)
    }

    pub fn labeling_to_assignment(&self, labeling: &PeriodicLabeling) -> Result<Vec<bool>, Error> {
        let report = verify_labeling(&self.instance, labeling)?;
        if let Some(v) = report.violations().first() {
            return Err(Error::WitnessViolation {
                from: v.from,
                to: v.to,
                duration: v.duration,
                bound: v.bound,
            });
        }
        let assignment: Vec<bool> = self
            .variables
            .iter()
            .map(|v| labeling.get(Edge::new(v.w, v.v1).expect("edge")) == Some(1))
            .collect();
        if !self.formula.is_nae_satisfied(&assignment)? {
            return Err(Error::Internal(
                "realizing labeling decodes to a non-satisfying assignment".into(),
            ));
        }
        Ok(assignment)
    }
}
