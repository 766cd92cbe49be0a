//! Bounded-integer MILP feasibility with an exact rational LP underneath.
//!
//! All variables are boxed, so no direction is unbounded and a plain phase-1
//! simplex decides LP feasibility. Arithmetic is exact (`BigRational`) and
//! pivoting follows Bland's rule, so there are no tolerances and no cycling.
//! Integer variables are decided by depth-first search over their boxes in
//! declared order, pruning any partial assignment whose LP relaxation is
//! infeasible. The payoff of this split: when the constraint matrix of the
//! fractional variables is totally unimodular with integer data, the vertex
//! the LP returns is automatically integral.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;

pub type Rational = BigRational;

/// Handle to a model variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Fractional,
    Integer,
}

#[derive(Debug, Clone)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
    pub lower: Rational,
    pub upper: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

/// A rational-coefficient linear constraint `Σ aᵢ·xᵢ (≤|=) rhs`.
#[derive(Debug, Clone)]
pub struct LinearConstraint {
    pub terms: Vec<(VarId, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Feasibility model: boxed fractional and integer variables plus linear
/// constraints. There is no objective; only existence is asked.
#[derive(Debug, Clone, Default)]
pub struct MilpModel {
    vars: Vec<Variable>,
    constraints: Vec<LinearConstraint>,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl MilpModel {
    pub fn new() -> Self {
        MilpModel::default()
    }

    pub fn add_fractional(
        &mut self,
        name: impl Into<String>,
        lower: Rational,
        upper: Rational,
    ) -> VarId {
        self.vars.push(Variable {
            name: name.into(),
            kind: VarKind::Fractional,
            lower,
            upper,
        });
        VarId(self.vars.len() - 1)
    }

    pub fn add_integer(&mut self, name: impl Into<String>, lower: i64, upper: i64) -> VarId {
        self.vars.push(Variable {
            name: name.into(),
            kind: VarKind::Integer,
            lower: rat(lower),
            upper: rat(upper),
        });
        VarId(self.vars.len() - 1)
    }

    /// Adds `Σ terms ≤ rhs`.
    pub fn add_le(&mut self, terms: Vec<(VarId, Rational)>, rhs: Rational) {
        self.constraints.push(LinearConstraint {
            terms,
            relation: Relation::Le,
            rhs,
        });
    }

    /// Adds `Σ terms = rhs`.
    pub fn add_eq(&mut self, terms: Vec<(VarId, Rational)>, rhs: Rational) {
        self.constraints.push(LinearConstraint {
            terms,
            relation: Relation::Eq,
            rhs,
        });
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn var(&self, id: VarId) -> &Variable {
        &self.vars[id.0]
    }

    /// Narrows a variable's box; used to fix integers during branching.
    pub fn set_box(&mut self, id: VarId, lower: Rational, upper: Rational) {
        self.vars[id.0].lower = lower;
        self.vars[id.0].upper = upper;
    }

    pub fn integer_vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, v)| v.kind == VarKind::Integer)
            .map(|(i, _)| VarId(i))
    }

    pub fn validate(&self) -> Result<(), Error> {
        for c in &self.constraints {
            for &(VarId(i), _) in &c.terms {
                if i >= self.vars.len() {
                    return Err(Error::UnknownVariable(i));
                }
            }
        }
        for (i, v) in self.vars.iter().enumerate() {
            if v.kind == VarKind::Integer && (!v.lower.is_integer() || !v.upper.is_integer()) {
                return Err(Error::NonIntegralBox(i));
            }
        }
        Ok(())
    }

    /// Coefficients of the fractional variables over all constraints that
    /// mention at least one, duplicate rows removed. Entries that are not
    /// small integers are mapped to ±2 so a unimodularity check flags them.
    pub fn fractional_submatrix(&self) -> Vec<Vec<i64>> {
        let frac_cols: Vec<usize> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, v)| v.kind == VarKind::Fractional)
            .map(|(i, _)| i)
            .collect();
        let col_of: std::collections::BTreeMap<usize, usize> = frac_cols
            .iter()
            .enumerate()
            .map(|(j, &i)| (i, j))
            .collect();
        let mut seen = BTreeSet::new();
        let mut rows = Vec::new();
        for c in &self.constraints {
            let mut row = vec![0i64; frac_cols.len()];
            let mut mentions = false;
            for &(VarId(i), ref coeff) in &c.terms {
                if let Some(&j) = col_of.get(&i) {
                    if !coeff.is_zero() {
                        mentions = true;
                    }
                    row[j] = if coeff.is_integer() {
                        use num::ToPrimitive;
                        coeff.to_integer().to_i64().unwrap_or(2)
                    } else if coeff.is_positive() {
                        2
                    } else {
                        -2
                    };
                }
            }
            if mentions && seen.insert(row.clone()) {
                rows.push(row);
            }
        }
        rows
    }

    /// Plain-text rendering of the model for inspection.
    pub fn dump_lp(&self) -> String {
        let mut out = String::from("feasibility\nsubject to\n");
        for (i, c) in self.constraints.iter().enumerate() {
            let _ = write!(out, "  r{i}:");
            if c.terms.is_empty() {
                let _ = write!(out, " 0");
            }
            for (k, (VarId(v), coeff)) in c.terms.iter().enumerate() {
                if k == 0 {
                    let _ = write!(out, " {} {}", coeff, self.vars[*v].name);
                } else if coeff.is_negative() {
                    let _ = write!(out, " - {} {}", -coeff, self.vars[*v].name);
                } else {
                    let _ = write!(out, " + {} {}", coeff, self.vars[*v].name);
                }
            }
            let rel = match c.relation {
                Relation::Le => "<=",
                Relation::Eq => "=",
            };
            let _ = writeln!(out, " {rel} {}", c.rhs);
        }
        out.push_str("bounds\n");
        for v in &self.vars {
            let _ = writeln!(out, "  {} <= {} <= {}", v.lower, v.name, v.upper);
        }
        let integers: Vec<&str> = self
            .vars
            .iter()
            .filter(|v| v.kind == VarKind::Integer)
            .map(|v| v.name.as_str())
            .collect();
        if !integers.is_empty() {
            let _ = writeln!(out, "integers\n  {}", integers.join(" "));
        }
        out
    }
}

/// Exact rational point indexed by [`VarId`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector {
    values: Vec<Rational>,
}

impl RationalVector {
    pub fn get(&self, id: VarId) -> &Rational {
        &self.values[id.0]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.values.iter()
    }

    /// Whether every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Checks a point against the model's constraints and boxes, exactly.
    pub fn satisfies(&self, model: &MilpModel) -> bool {
        for (i, v) in model.variables().iter().enumerate() {
            let x = &self.values[i];
            if x < &v.lower || x > &v.upper {
                return false;
            }
        }
        model.constraints().iter().all(|c| {
            let lhs: Rational = c
                .terms
                .iter()
                .map(|(VarId(i), coeff)| coeff * &self.values[*i])
                .sum();
            match c.relation {
                Relation::Le => lhs <= c.rhs,
                Relation::Eq => lhs == c.rhs,
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(RationalVector),
    Infeasible,
}

/// Decides LP feasibility for a model whose integer variables are all fixed
/// (lower bound equal to upper bound); other integer variables are a
/// precondition violation.
pub fn lp_feasible(model: &MilpModel) -> Result<LpOutcome, Error> {
    model.validate()?;
    for id in model.integer_vars() {
        let v = model.var(id);
        if v.lower != v.upper {
            return Err(Error::UnfixedIntegerVariable(id.0));
        }
    }
    Ok(lp_relaxation(model))
}

/// Phase-1 simplex treating every variable as continuous within its box.
fn lp_relaxation(model: &MilpModel) -> LpOutcome {
    match simplex_feasible(model) {
        Some(values) => LpOutcome::Feasible(RationalVector { values }),
        None => LpOutcome::Infeasible,
    }
}

fn simplex_feasible(model: &MilpModel) -> Option<Vec<Rational>> {
    let n = model.variables().len();
    // Shift x = lower + y with y in [0, range]; zero-range variables are
    // folded away as constants.
    let mut range = Vec::with_capacity(n);
    for v in model.variables() {
        if v.lower > v.upper {
            return None;
        }
        range.push(&v.upper - &v.lower);
    }
    let free: Vec<usize> = (0..n).filter(|&i| !range[i].is_zero()).collect();
    let col_of: std::collections::BTreeMap<usize, usize> =
        free.iter().enumerate().map(|(j, &i)| (i, j)).collect();
    let ny = free.len();

    // Rows in shifted coordinates: (dense coeffs, relation, rhs).
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    for c in model.constraints() {
        let mut coeffs = vec![Rational::zero(); ny];
        let mut rhs = c.rhs.clone();
        for (VarId(i), coeff) in &c.terms {
            rhs -= coeff * &model.variables()[*i].lower;
            if let Some(&j) = col_of.get(i) {
                coeffs[j] += coeff;
            }
        }
        if coeffs.iter().all(|a| a.is_zero()) {
            // Constant row: decide it immediately.
            let ok = match c.relation {
                Relation::Le => Rational::zero() <= rhs,
                Relation::Eq => rhs.is_zero(),
            };
            if ok {
                continue;
            }
            return None;
        }
        rows.push((coeffs, c.relation, rhs));
    }
    // Upper bounds of the shifted variables.
    for (j, &i) in free.iter().enumerate() {
        let mut coeffs = vec![Rational::zero(); ny];
        coeffs[j] = Rational::one();
        rows.push((coeffs, Relation::Le, range[i].clone()));
    }

    let m = rows.len();
    if m == 0 {
        // No constraints left: the lower-bound point works.
        return Some(model.variables().iter().map(|v| v.lower.clone()).collect());
    }

    // Build the phase-1 tableau: columns are y-vars, then one slack/surplus
    // per row where applicable, then artificials, then the rhs.
    #[derive(Clone, Copy, PartialEq)]
    enum Aux {
        Slack,
        Surplus,
        None,
    }
    let mut aux = Vec::with_capacity(m);
    let mut needs_artificial = Vec::with_capacity(m);
    for (coeffs, relation, rhs) in &mut rows {
        if rhs.is_negative() {
            for a in coeffs.iter_mut() {
                *a = -std::mem::take(a);
            }
            *rhs = -std::mem::take(rhs);
            match relation {
                Relation::Le => {
                    aux.push(Aux::Surplus);
                    needs_artificial.push(true);
                }
                Relation::Eq => {
                    aux.push(Aux::None);
                    needs_artificial.push(true);
                }
            }
        } else {
            match relation {
                Relation::Le => {
                    aux.push(Aux::Slack);
                    needs_artificial.push(false);
                }
                Relation::Eq => {
                    aux.push(Aux::None);
                    needs_artificial.push(true);
                }
            }
        }
    }
    let n_aux = aux.iter().filter(|a| **a != Aux::None).count();
    let n_art = needs_artificial.iter().filter(|b| **b).count();
    let width = ny + n_aux + n_art + 1;
    let rhs_col = width - 1;

    let mut tableau = vec![vec![Rational::zero(); width]; m];
    let mut basis = vec![usize::MAX; m];
    let mut aux_col = ny;
    let mut art_col = ny + n_aux;
    let mut artificial_cols = Vec::new();
    for (r, (coeffs, _, rhs)) in rows.into_iter().enumerate() {
        for (j, a) in coeffs.into_iter().enumerate() {
            tableau[r][j] = a;
        }
        tableau[r][rhs_col] = rhs;
        match aux[r] {
            Aux::Slack => {
                tableau[r][aux_col] = Rational::one();
                basis[r] = aux_col;
                aux_col += 1;
            }
            Aux::Surplus => {
                tableau[r][aux_col] = -Rational::one();
                aux_col += 1;
            }
            Aux::None => {}
        }
        if needs_artificial[r] {
            tableau[r][art_col] = Rational::one();
            basis[r] = art_col;
            artificial_cols.push(art_col);
            art_col += 1;
        }
    }

    // Objective: minimize the sum of artificials. The objective row holds
    // the negated reduced costs; initialize by subtracting artificial rows.
    let mut obj = vec![Rational::zero(); width];
    for c in &artificial_cols {
        obj[*c] = Rational::one();
    }
    for r in 0..m {
        if needs_artificial[r] {
            let row = tableau[r].clone();
            for j in 0..width {
                obj[j] -= &row[j];
            }
        }
    }

    // Bland's rule: entering column is the smallest index with a negative
    // objective entry; leaving row breaks ratio ties by smallest basis index.
    loop {
        let Some(pivot_col) = (0..width - 1).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut pivot_row: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for r in 0..m {
            if tableau[r][pivot_col].is_positive() {
                let ratio = &tableau[r][rhs_col] / &tableau[r][pivot_col];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[pivot_row.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    pivot_row = Some(r);
                }
            }
        }
        let Some(pr) = pivot_row else {
            // Unbounded improving direction cannot happen with boxed
            // variables; treat defensively as infeasible.
            return None;
        };
        pivot(&mut tableau, &mut obj, pr, pivot_col, rhs_col);
        basis[pr] = pivot_col;
    }

    // Feasible iff no artificial retains a positive value.
    let mut art_total = Rational::zero();
    for r in 0..m {
        if artificial_cols.contains(&basis[r]) {
            art_total += &tableau[r][rhs_col];
        }
    }
    if !art_total.is_zero() {
        return None;
    }

    let mut y = vec![Rational::zero(); ny];
    for r in 0..m {
        if basis[r] < ny {
            y[basis[r]] = tableau[r][rhs_col].clone();
        }
    }
    let mut values: Vec<Rational> = model.variables().iter().map(|v| v.lower.clone()).collect();
    for (j, &i) in free.iter().enumerate() {
        values[i] += &y[j];
    }
    Some(values)
}

fn pivot(
    tableau: &mut [Vec<Rational>],
    obj: &mut [Rational],
    pr: usize,
    pc: usize,
    width_hint: usize,
) {
    let width = width_hint + 1;
    let pivot_value = tableau[pr][pc].clone();
    for j in 0..width {
        tableau[pr][j] = &tableau[pr][j] / &pivot_value;
    }
    for r in 0..tableau.len() {
        if r != pr && !tableau[r][pc].is_zero() {
            let factor = tableau[r][pc].clone();
            for j in 0..width {
                let delta = &factor * &tableau[pr][j];
                tableau[r][j] -= delta;
            }
        }
    }
    if !obj[pc].is_zero() {
        let factor = obj[pc].clone();
        for j in 0..width {
            let delta = &factor * &tableau[pr][j];
            obj[j] -= delta;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MilpOutcome {
    Feasible(RationalVector),
    Infeasible,
}

/// Default cap on branch nodes explored by [`milp_feasible`].
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000;

/// Complete feasibility search: branch on integer variables in declared
/// order, values ascending, pruning any partial assignment whose LP
/// relaxation (remaining integers relaxed to their boxes) is infeasible.
pub fn milp_feasible(model: &MilpModel, node_limit: u64) -> Result<MilpOutcome, Error> {
    model.validate()?;
    use num::ToPrimitive;
    let order: Vec<VarId> = model.integer_vars().collect();
    let mut working = model.clone();
    let mut nodes: u64 = 0;

    fn search(
        working: &mut MilpModel,
        order: &[VarId],
        depth: usize,
        nodes: &mut u64,
        node_limit: u64,
    ) -> Result<Option<RationalVector>, Error> {
        *nodes += 1;
        if *nodes > node_limit {
            return Err(Error::NodeLimitExceeded(node_limit));
        }
        if !interval_feasible(working) {
            return Ok(None);
        }
        match lp_relaxation(working) {
            LpOutcome::Infeasible => Ok(None),
            LpOutcome::Feasible(point) => {
                if depth == order.len() {
                    return Ok(Some(point));
                }
                let id = order[depth];
                use num::ToPrimitive;
                let lower = working.var(id).lower.to_integer().to_i64().expect("boxed");
                let upper = working.var(id).upper.to_integer().to_i64().expect("boxed");
                for value in lower..=upper {
                    let v = Rational::from_integer(BigInt::from(value));
                    working.set_box(id, v.clone(), v);
                    let found = search(working, order, depth + 1, nodes, node_limit)?;
                    if found.is_some() {
                        // Leave the box narrowed; the caller restores it.
                        working.set_box(
                            id,
                            Rational::from_integer(BigInt::from(lower)),
                            Rational::from_integer(BigInt::from(upper)),
                        );
                        return Ok(found);
                    }
                }
                working.set_box(
                    id,
                    Rational::from_integer(BigInt::from(lower)),
                    Rational::from_integer(BigInt::from(upper)),
                );
                Ok(None)
            }
        }
    }

    // Bounds must fit machine integers for branching.
    for id in &order {
        let v = working.var(*id);
        if v.lower.to_integer().to_i64().is_none() || v.upper.to_integer().to_i64().is_none() {
            return Err(Error::NonIntegralBox(id.0));
        }
    }
    match search(&mut working, &order, 0, &mut nodes, node_limit)? {
        Some(point) => Ok(MilpOutcome::Feasible(point)),
        None => Ok(MilpOutcome::Infeasible),
    }
}

/// Cheap necessary condition: every row must be satisfiable when each
/// variable sits at whichever end of its box helps most.
fn interval_feasible(model: &MilpModel) -> bool {
    for v in model.variables() {
        if v.lower > v.upper {
            return false;
        }
    }
    for c in model.constraints() {
        let mut min = Rational::zero();
        let mut max = Rational::zero();
        for (VarId(i), coeff) in &c.terms {
            let var = &model.variables()[*i];
            if coeff.is_positive() {
                min += coeff * &var.lower;
                max += coeff * &var.upper;
            } else {
                min += coeff * &var.upper;
                max += coeff * &var.lower;
            }
        }
        let ok = match c.relation {
            Relation::Le => min <= c.rhs,
            Relation::Eq => min <= c.rhs && max >= c.rhs,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Outcome of a total-unimodularity sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TuVerdict {
    TotallyUnimodular,
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
    },
    NonUnimodularMinor {
        rows: Vec<usize>,
        cols: Vec<usize>,
        det: i64,
    },
}

impl TuVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, TuVerdict::TotallyUnimodular)
    }
}

const TU_EXHAUSTIVE_CAP: u128 = 200_000;
const TU_SAMPLES: usize = 50_000;

/// Checks that every square submatrix up to `max_order` has determinant in
/// {-1, 0, 1}.
///
/// All submatrices are enumerated when their count is small; otherwise a
/// seeded sample is drawn. Entries outside {-1, 0, 1} fail immediately with
/// their position.
pub fn is_totally_unimodular_sample(matrix: &[Vec<i64>], max_order: usize, seed: u64) -> TuVerdict {
    let m = matrix.len();
    if m == 0 || max_order == 0 {
        return TuVerdict::TotallyUnimodular;
    }
    let n = matrix[0].len();
    for (r, row) in matrix.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return TuVerdict::EntryOutOfRange {
                    row: r,
                    col: c,
                    value: v,
                };
            }
        }
    }
    let kmax = max_order.min(m).min(n);
    let mut total: u128 = 0;
    for k in 2..=kmax {
        total = total.saturating_add(binom(m, k).saturating_mul(binom(n, k)));
    }
    if total <= TU_EXHAUSTIVE_CAP {
        for k in 2..=kmax {
            let mut row_sel = first_combination(k);
            loop {
                let mut col_sel = first_combination(k);
                loop {
                    if let Some(det) = check_minor(matrix, &row_sel, &col_sel) {
                        return TuVerdict::NonUnimodularMinor {
                            rows: row_sel,
                            cols: col_sel,
                            det,
                        };
                    }
                    if !next_combination(&mut col_sel, n) {
                        break;
                    }
                }
                if !next_combination(&mut row_sel, m) {
                    break;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..TU_SAMPLES {
            let k = rng.gen_range(2..=kmax);
            let row_sel = sample_indices(&mut rng, m, k);
            let col_sel = sample_indices(&mut rng, n, k);
            if let Some(det) = check_minor(matrix, &row_sel, &col_sel) {
                return TuVerdict::NonUnimodularMinor {
                    rows: row_sel,
                    cols: col_sel,
                    det,
                };
            }
        }
    }
    TuVerdict::TotallyUnimodular
}

fn check_minor(matrix: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Option<i64> {
    let k = rows.len();
    let mut sub = vec![vec![0i128; k]; k];
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            sub[i][j] = matrix[r][c] as i128;
        }
    }
    let det = bareiss_det(&mut sub);
    if det.abs() > 1 {
        Some(det as i64)
    } else {
        None
    }
}

/// Fraction-free Gaussian elimination; exact for integer matrices.
fn bareiss_det(m: &mut [Vec<i128>]) -> i128 {
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    out
}

fn first_combination(k: usize) -> Vec<usize> {
    (0..k).collect()
}

fn next_combination(sel: &mut [usize], n: usize) -> bool {
    let k = sel.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if sel[i] < n - (k - i) {
            sel[i] += 1;
            for j in i + 1..k {
                sel[j] = sel[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn sample_indices(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        pool.swap(i, j);
    }
    let mut sel = pool[..k].to_vec();
    sel.sort_unstable();
    sel
}
