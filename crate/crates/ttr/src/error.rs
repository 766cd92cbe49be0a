//! Shared error type for model construction and the solver modules.
//!
//! File-format parse errors live in [`crate::io`] and carry line numbers.

use crate::model::VertexId;
use thiserror::Error;

/// Errors produced by instance construction, the duration calculus, and the
/// solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {label} out of range [1, {delta}]")]
    LabelOutOfRange { label: u32, delta: u32 },

    #[error("path endpoints must differ, got vertex {0} twice")]
    PathEndpointsEqual(VertexId),

    #[error("vertex {vertex} out of range, tree has {count} vertices")]
    VertexOutOfRange { vertex: VertexId, count: usize },

    #[error("self-loop at vertex {0} is not a valid edge")]
    SelfLoop(VertexId),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("period must be at least 1")]
    InvalidDelta,

    #[error("bounds must be positive")]
    NonPositiveBound,

    #[error("edge ({0}, {1}) does not exist in the tree")]
    UnknownEdge(VertexId, VertexId),

    #[error("edge ({0}, {1}) carries no label")]
    MissingLabel(VertexId, VertexId),

    #[error("edge ({0}, {1}) is labeled more than once")]
    DuplicateLabel(VertexId, VertexId),

    #[error("shift amount {amount} out of range [0, {delta})")]
    ShiftOutOfRange { amount: u32, delta: u32 },

    #[error("search space of {required} labelings exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("{required} global label configurations exceed budget {budget}")]
    ConfigBudgetExceeded { required: u128, budget: u128 },

    #[error("branch search exceeded node limit {0}")]
    NodeLimitExceeded(u64),

    #[error("solver requires period 2, instance has period {0}")]
    RequiresPeriodTwo(u32),

    #[error("literal references variable {var}, formula has {count} variables")]
    LiteralOutOfRange { var: usize, count: usize },

    #[error("variable {0} referenced by a constraint does not exist")]
    UnknownVariable(usize),

    #[error("variable {0} has lower bound above upper bound")]
    EmptyVariableBox(usize),

    #[error("integer variable {0} has non-integral bounds")]
    NonIntegralBox(usize),

    #[error("model still contains unfixed integer variables, e.g. variable {0}")]
    UnfixedIntegerVariable(usize),

    #[error("label configuration at vertex {vertex} has {parts} parts, at most {max} allowed")]
    TooManyParts {
        vertex: VertexId,
        parts: usize,
        max: usize,
    },

    #[error("label configuration at vertex {0} does not partition its incident edges")]
    MalformedConfiguration(VertexId),

    #[error("delay assignment is missing the delay at vertex {0}")]
    MissingDelay(VertexId),

    #[error("delay assignment is inconsistent at vertex {0}")]
    InconsistentDelays(VertexId),

    #[error("solved vertex has non-integral value for variable {0}")]
    NonIntegralVertex(String),

    #[error("witness fails verification: duration {duration} from {from} to {to} exceeds bound {bound}")]
    WitnessViolation {
        from: VertexId,
        to: VertexId,
        duration: u64,
        bound: u64,
    },

    #[error("coloring assigns color {color} to vertex {vertex}, valid colors are 1..={colors}")]
    ColorOutOfRange {
        vertex: VertexId,
        color: u32,
        colors: u32,
    },

    #[error("coloring is not proper: vertices {0} and {1} share a color")]
    ImproperColoring(VertexId, VertexId),

    #[error("color count must be at least 3, got {0}")]
    TooFewColors(u32),

    #[error("clause {clause} references variable {var}, formula has {count} variables")]
    ClauseVarOutOfRange {
        clause: usize,
        var: usize,
        count: usize,
    },

    #[error("assignment has {got} values, formula has {want} variables")]
    AssignmentLengthMismatch { got: usize, want: usize },

    #[error("internal solver error: {0}")]
    Internal(String),
}
