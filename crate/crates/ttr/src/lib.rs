//! Solvers, verifiers and instance generators for the periodic upper-bounded
//! temporal tree realization problem.
//!
//! An instance consists of a tree, a period `Δ`, and a matrix `D` of upper
//! bounds on the durations of fastest temporal paths between vertex pairs.
//! The question is whether some Δ-periodic edge labeling `λ: E → {1,…,Δ}`
//! keeps every pairwise fastest-path duration within its bound.
//!
//! The crate provides:
//!
//! * [`model`] — trees, instances, labelings and the travel-delay /
//!   fastest-duration calculus, plus preprocessing.
//! * [`oracle`] — an exhaustive ground-truth solver for small instances.
//! * [`twosat`] — a linear-time 2-SAT engine.
//! * [`delta2`] — the Δ = 2 solver: enumerate internal-edge labelings, decide
//!   leaf edges by 2-SAT.
//! * [`milp`] — a bounded-integer MILP feasibility engine with exact rational
//!   LP underneath.
//! * [`fpt`] — the leaves-parameterized solver: enumerate global label
//!   configurations, solve one MILP per configuration, reconstruct a witness.
//! * [`reductions`] — generators translating graph coloring and monotone
//!   NAE-3-SAT instances into realization instances, with witness maps in
//!   both directions.
//! * [`io`] — plain-text instance and labeling file formats.
//! * [`solver`] — top-level dispatch shared by the CLI and the test suites.

pub mod delta2;
pub mod error;
pub mod fpt;
pub mod io;
pub mod milp;
pub mod model;
pub mod oracle;
pub mod reductions;
pub mod solver;
pub mod twosat;

pub use error::Error;
pub use model::{
    all_pairs_durations, cyclic_shift, path_duration, preprocess, travel_delay, trivial_bound,
    verify_labeling, Bound, BoundMatrix, DurationReport, Edge, PeriodicLabeling, Preprocessed,
    Tree, TtrInstance, VertexId,
};
pub use oracle::{brute_force_all_witnesses, brute_force_solve, SolveResult};
