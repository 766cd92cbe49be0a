//! Linear-time 2-SAT via strongly connected components of the implication
//! graph.
//!
//! Every clause `(a ∨ b)` contributes the implications `¬a → b` and
//! `¬b → a`. The formula is satisfiable iff no variable shares a component
//! with its negation; the SCC order then yields a concrete assignment. The
//! traversal is iterative and visits vertices and edges in a fixed order, so
//! the produced assignment is reproducible.

use crate::error::Error;

/// A literal: variable index plus polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// Conjunction of two-literal clauses. Single-literal constraints are encoded
/// as `(l ∨ l)`.
#[derive(Debug, Clone, Default)]
pub struct TwoSatFormula {
    num_vars: usize,
    clauses: Vec<(Literal, Literal)>,
}

impl TwoSatFormula {
    pub fn new(num_vars: usize) -> Self {
        TwoSatFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(Literal, Literal)] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Literal, b: Literal) {
        self.clauses.push((a, b));
    }

    /// Adds `(l ∨ l)`, forcing the literal.
    pub fn add_unit(&mut self, l: Literal) {
        self.clauses.push((l, l));
    }

    /// Whether an assignment satisfies every clause.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|&(a, b)| a.eval(assignment) || b.eval(assignment))
    }
}

/// Solves the formula, returning a satisfying assignment or `None` when
/// unsatisfiable.
pub fn solve_2sat(formula: &TwoSatFormula) -> Result<Option<Vec<bool>>, Error> {
    let n = formula.num_vars;
    for &(a, b) in &formula.clauses {
        for lit in [a, b] {
            if lit.var >= n {
                return Err(Error::LiteralOutOfRange {
                    var: lit.var,
                    count: n,
                });
            }
        }
    }

    // Implication graph in CSR form, two nodes per variable.
    let nodes = 2 * n;
    let mut degree = vec![0usize; nodes];
    let mut arcs = Vec::with_capacity(2 * formula.clauses.len());
    for &(a, b) in &formula.clauses {
        arcs.push((a.negated().node(), b.node()));
        arcs.push((b.negated().node(), a.node()));
    }
    for &(from, _) in &arcs {
        degree[from] += 1;
    }
    let mut start = vec![0usize; nodes + 1];
    for v in 0..nodes {
        start[v + 1] = start[v] + degree[v];
    }
    let mut targets = vec![0usize; arcs.len()];
    let mut cursor = start.clone();
    for &(from, to) in &arcs {
        targets[cursor[from]] = to;
        cursor[from] += 1;
    }

    let component = tarjan_scc(nodes, &start, &targets);

    let mut assignment = vec![false; n];
    for v in 0..n {
        let pos = component[Literal::pos(v).node()];
        let neg = component[Literal::neg(v).node()];
        if pos == neg {
            return Ok(None);
        }
        // Tarjan numbers components in reverse topological order, so the
        // smaller id is closer to the sinks; prefer the literal reachable
        // last along implications.
        assignment[v] = pos < neg;
    }
    debug_assert!(formula.is_satisfied_by(&assignment));
    Ok(Some(assignment))
}

/// Iterative Tarjan SCC over a CSR graph; returns the component id per node.
fn tarjan_scc(nodes: usize, start: &[usize], targets: &[usize]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; nodes];
    let mut low = vec![0usize; nodes];
    let mut component = vec![UNSET; nodes];
    let mut on_stack = vec![false; nodes];
    let mut stack: Vec<usize> = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_component = 0;

    for root in 0..nodes {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, start[root]));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if *edge < start[v + 1] {
                let w = targets[*edge];
                *edge += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, start[w]));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("scc stack");
                        on_stack[w] = false;
                        component[w] = next_component;
                        if w == v {
                            break;
                        }
                    }
                    next_component += 1;
                }
                call.pop();
                if let Some(&mut (p, _)) = call.last_mut() {
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }
    component
}
