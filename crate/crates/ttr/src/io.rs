//! Plain-text file formats: instances, labelings, coloring graphs and
//! NAE formulas.
//!
//! Instance files are line-oriented. `#` starts a comment, blank lines are
//! skipped, and each record line is one of:
//!
//! ```text
//! n <vertex count>
//! delta <period>
//! edge <u> <v>
//! bound <from> <to> <value>
//! meta <key> <value...>
//! ```
//!
//! Bounds are sparse: pairs without a `bound` line carry the trivial bound.
//! Unknown keywords, duplicate records and out-of-range references are
//! rejected with their line number. Serialization emits a canonical order
//! (n, delta, meta, edges, bounds), so parse ∘ serialize is the identity on
//! valid documents.
//!
//! Labeling files hold one `label <u> <v> <value>` line per edge. Coloring
//! graphs reuse the `n`/`edge` records. NAE formulas follow the DIMACS
//! convention: a `p nae <vars> <clauses>` header, `c` comments, and one
//! zero-terminated triple of 1-based variable indices per clause.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error as ModelError;
use crate::model::{BoundMatrix, Edge, PeriodicLabeling, Tree, TtrInstance, VertexId};
use crate::reductions::{NaeFormula, SimpleGraph};

/// Parse failure with the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// An instance plus free-form metadata carried by its file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceDocument {
    pub instance: TtrInstance,
    pub metadata: BTreeMap<String, String>,
}

fn tokenize(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_field<T: std::str::FromStr>(
    token: &str,
    line: usize,
    what: &str,
) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("invalid {what}: {token:?}")))
}

fn expect_len(tokens: &[&str], want: usize, line: usize) -> Result<(), ParseError> {
    if tokens.len() != want {
        return Err(ParseError::new(
            line,
            format!(
                "record {:?} takes {} fields, got {}",
                tokens[0],
                want - 1,
                tokens.len() - 1
            ),
        ));
    }
    Ok(())
}

/// Parses an instance document, validating all model invariants.
pub fn parse_instance(text: &str) -> Result<InstanceDocument, ParseError> {
    let mut n: Option<(usize, usize)> = None;
    let mut delta: Option<(u32, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId, usize)> = Vec::new();
    let mut bound_records: Vec<(VertexId, VertexId, u64, usize)> = Vec::new();
    let mut metadata = BTreeMap::new();

    for (line, tokens) in tokenize(text) {
        match tokens[0] {
            "n" => {
                expect_len(&tokens, 2, line)?;
                if n.is_some() {
                    return Err(ParseError::new(line, "duplicate n record"));
                }
                n = Some((parse_field(tokens[1], line, "vertex count")?, line));
            }
            "delta" => {
                expect_len(&tokens, 2, line)?;
                if delta.is_some() {
                    return Err(ParseError::new(line, "duplicate delta record"));
                }
                delta = Some((parse_field(tokens[1], line, "period")?, line));
            }
            "edge" => {
                expect_len(&tokens, 3, line)?;
                edges.push((
                    parse_field(tokens[1], line, "vertex")?,
                    parse_field(tokens[2], line, "vertex")?,
                    line,
                ));
            }
            "bound" => {
                expect_len(&tokens, 4, line)?;
                bound_records.push((
                    parse_field(tokens[1], line, "vertex")?,
                    parse_field(tokens[2], line, "vertex")?,
                    parse_field(tokens[3], line, "bound")?,
                    line,
                ));
            }
            "meta" => {
                if tokens.len() < 3 {
                    return Err(ParseError::new(line, "meta takes a key and a value"));
                }
                metadata.insert(tokens[1].to_string(), tokens[2..].join(" "));
            }
            other => {
                return Err(ParseError::new(line, format!("unknown field {other:?}")));
            }
        }
    }

    let (n, _) = n.ok_or_else(|| ParseError::new(0, "missing n record"))?;
    let (delta, delta_line) = delta.ok_or_else(|| ParseError::new(0, "missing delta record"))?;
    if delta == 0 {
        return Err(ParseError::new(delta_line, "period must be at least 1"));
    }

    let mut seen_edges = std::collections::BTreeSet::new();
    let mut edge_list = Vec::with_capacity(edges.len());
    let mut last_edge_line = 0;
    for (a, b, line) in edges {
        last_edge_line = line;
        if a >= n || b >= n {
            return Err(ParseError::new(
                line,
                format!("edge ({a}, {b}) references a vertex outside 0..{n}"),
            ));
        }
        if a == b {
            return Err(ParseError::new(line, format!("self-loop at vertex {a}")));
        }
        if !seen_edges.insert((a.min(b), a.max(b))) {
            return Err(ParseError::new(line, format!("duplicate edge ({a}, {b})")));
        }
        edge_list.push((a, b));
    }
    let tree = Tree::new(n, &edge_list).map_err(|e| match e {
        ModelError::NotATree(msg) => ParseError::new(last_edge_line, format!("not a tree: {msg}")),
        other => ParseError::new(last_edge_line, other.to_string()),
    })?;

    let mut bounds = BoundMatrix::all_trivial();
    let mut seen_bounds = std::collections::BTreeSet::new();
    for (s, t, value, line) in bound_records {
        if s >= n || t >= n {
            return Err(ParseError::new(
                line,
                format!("bound ({s}, {t}) references a vertex outside 0..{n}"),
            ));
        }
        if s == t {
            return Err(ParseError::new(line, "bounds on the diagonal are meaningless"));
        }
        if value == 0 {
            return Err(ParseError::new(line, "bounds must be positive"));
        }
        if !seen_bounds.insert((s, t)) {
            return Err(ParseError::new(line, format!("duplicate bound ({s}, {t})")));
        }
        bounds
            .set(s, t, value)
            .map_err(|e| ParseError::new(line, e.to_string()))?;
    }

    let instance =
        TtrInstance::new(tree, delta, bounds).map_err(|e| ParseError::new(0, e.to_string()))?;
    Ok(InstanceDocument { instance, metadata })
}

/// Canonical rendering of an instance document.
pub fn serialize_instance(document: &InstanceDocument) -> String {
    let mut out = String::new();
    let instance = &document.instance;
    let _ = writeln!(out, "n {}", instance.tree().vertex_count());
    let _ = writeln!(out, "delta {}", instance.delta());
    for (key, value) in &document.metadata {
        let _ = writeln!(out, "meta {key} {value}");
    }
    for e in instance.tree().edges() {
        let _ = writeln!(out, "edge {} {}", e.min_end(), e.max_end());
    }
    for (s, t, b) in instance.bounds().explicit_entries() {
        let _ = writeln!(out, "bound {s} {t} {b}");
    }
    out
}

/// Parses a labeling file against a tree: every tree edge must appear
/// exactly once.
pub fn parse_labeling(text: &str, tree: &Tree) -> Result<PeriodicLabeling, ParseError> {
    let mut labeling = PeriodicLabeling::new();
    for (line, tokens) in tokenize(text) {
        match tokens[0] {
            "label" => {
                expect_len(&tokens, 4, line)?;
                let a: VertexId = parse_field(tokens[1], line, "vertex")?;
                let b: VertexId = parse_field(tokens[2], line, "vertex")?;
                let value: u32 = parse_field(tokens[3], line, "label")?;
                let e = Edge::new(a, b).map_err(|e| ParseError::new(line, e.to_string()))?;
                if !tree.contains_edge(e) {
                    return Err(ParseError::new(
                        line,
                        format!("edge ({a}, {b}) does not exist in the tree"),
                    ));
                }
                if labeling.get(e).is_some() {
                    return Err(ParseError::new(
                        line,
                        format!("edge ({a}, {b}) is labeled twice"),
                    ));
                }
                labeling.set(e, value);
            }
            other => {
                return Err(ParseError::new(line, format!("unknown field {other:?}")));
            }
        }
    }
    for e in tree.edges() {
        if labeling.get(e).is_none() {
            return Err(ParseError::new(
                0,
                format!("edge ({}, {}) carries no label", e.min_end(), e.max_end()),
            ));
        }
    }
    Ok(labeling)
}

pub fn serialize_labeling(labeling: &PeriodicLabeling) -> String {
    let mut out = String::new();
    for (e, l) in labeling.iter() {
        let _ = writeln!(out, "label {} {} {}", e.min_end(), e.max_end(), l);
    }
    out
}

/// Parses a coloring input graph (`n` and `edge` records).
pub fn parse_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (line, tokens) in tokenize(text) {
        match tokens[0] {
            "n" => {
                expect_len(&tokens, 2, line)?;
                if n.is_some() {
                    return Err(ParseError::new(line, "duplicate n record"));
                }
                n = Some(parse_field(tokens[1], line, "vertex count")?);
            }
            "edge" => {
                expect_len(&tokens, 3, line)?;
                edges.push((
                    parse_field::<usize>(tokens[1], line, "vertex")?,
                    parse_field::<usize>(tokens[2], line, "vertex")?,
                    line,
                ));
            }
            other => {
                return Err(ParseError::new(line, format!("unknown field {other:?}")));
            }
        }
    }
    let n = n.ok_or_else(|| ParseError::new(0, "missing n record"))?;
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
    SimpleGraph::new(n, &pairs).map_err(|e| {
        let line = edges.last().map(|&(_, _, l)| l).unwrap_or(0);
        ParseError::new(line, e.to_string())
    })
}

/// Parses a DIMACS-like NAE formula: `p nae <vars> <clauses>` then
/// zero-terminated triples of 1-based variable indices.
pub fn parse_nae_formula(text: &str) -> Result<NaeFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[usize; 3]> = Vec::new();
    for (line, tokens) in tokenize(text) {
        match tokens[0] {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(ParseError::new(line, "duplicate problem line"));
                }
                if tokens.len() != 4 || tokens[1] != "nae" {
                    return Err(ParseError::new(line, "expected: p nae <vars> <clauses>"));
                }
                header = Some((
                    parse_field(tokens[2], line, "variable count")?,
                    parse_field(tokens[3], line, "clause count")?,
                ));
            }
            _ => {
                let Some((num_vars, _)) = header else {
                    return Err(ParseError::new(line, "clause before the problem line"));
                };
                if tokens.len() != 4 || tokens[3] != "0" {
                    return Err(ParseError::new(
                        line,
                        "expected three variables terminated by 0",
                    ));
                }
                let mut clause = [0usize; 3];
                for (i, token) in tokens[..3].iter().enumerate() {
                    let v: usize = parse_field(token, line, "variable")?;
                    if v == 0 || v > num_vars {
                        return Err(ParseError::new(
                            line,
                            format!("variable {v} outside 1..={num_vars}"),
                        ));
                    }
                    clause[i] = v - 1;
                }
                clauses.push(clause);
            }
        }
    }
    let (num_vars, clause_count) = header.ok_or_else(|| ParseError::new(0, "missing problem line"))?;
    if clauses.len() != clause_count {
        return Err(ParseError::new(
            0,
            format!(
                "problem line promises {clause_count} clauses, found {}",
                clauses.len()
            ),
        ));
    }
    NaeFormula::new(num_vars, clauses).map_err(|e| ParseError::new(0, e.to_string()))
}
