//! Top-level solve pipeline shared by the CLI and the test suites:
//! preprocess, pick an algorithm, run it, and time the whole thing.

use std::time::Instant;

use crate::delta2::solve_delta2;
use crate::error::Error;
use crate::fpt::{solve_fpt, FptOptions};
use crate::model::{preprocess, PeriodicLabeling, Preprocessed, TtrInstance};
use crate::oracle::{brute_force_solve, SolveResult, DEFAULT_BUDGET};

/// Algorithm selection. `Auto` picks the period-2 solver when it applies and
/// the configuration solver otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Auto,
    Delta2,
    Fpt,
    Oracle,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Delta2 => "delta2",
            Algorithm::Fpt => "fpt",
            Algorithm::Oracle => "oracle",
        }
    }
}

/// Knobs for [`solve`].
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    /// Cap on the oracle's pruned search space.
    pub oracle_budget: u128,
    pub fpt: FptOptions,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algorithm: Algorithm::Auto,
            oracle_budget: DEFAULT_BUDGET,
            fpt: FptOptions::default(),
        }
    }
}

/// Outcome of a full solve run.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub realizable: bool,
    pub witness: Option<PeriodicLabeling>,
    /// The algorithm that actually ran (after `auto` dispatch), or "preprocess"
    /// when normalization already decided the instance.
    pub algorithm: &'static str,
    pub examined: u64,
    pub wall_ms: u128,
}

/// Preprocesses and solves an instance.
///
/// Infeasibility found during normalization short-circuits to a no-answer.
/// Instances with at most two vertices are realizable by any labeling.
pub fn solve(instance: &TtrInstance, options: &SolveOptions) -> Result<SolveReport, Error> {
    let start = Instant::now();
    let normalized = match preprocess(instance) {
        Preprocessed::Infeasible(_) => {
            return Ok(SolveReport {
                realizable: false,
                witness: None,
                algorithm: "preprocess",
                examined: 0,
                wall_ms: start.elapsed().as_millis(),
            });
        }
        Preprocessed::Feasible(normalized) => normalized,
    };
    if normalized.tree().vertex_count() <= 2 {
        let witness: PeriodicLabeling =
            normalized.tree().edges().into_iter().map(|e| (e, 1)).collect();
        return Ok(SolveReport {
            realizable: true,
            witness: Some(witness),
            algorithm: "preprocess",
            examined: 0,
            wall_ms: start.elapsed().as_millis(),
        });
    }
    let algorithm = match options.algorithm {
        Algorithm::Auto => {
            if normalized.delta() == 2 {
                Algorithm::Delta2
            } else {
                Algorithm::Fpt
            }
        }
        chosen => chosen,
    };
    let result: SolveResult = match algorithm {
        Algorithm::Delta2 => solve_delta2(&normalized)?,
        Algorithm::Fpt => solve_fpt(&normalized, &options.fpt)?,
        Algorithm::Oracle => brute_force_solve(&normalized, options.oracle_budget)?,
        Algorithm::Auto => unreachable!("auto resolved above"),
    };
    Ok(SolveReport {
        realizable: result.realizable,
        witness: result.witness,
        algorithm: algorithm.name(),
        examined: result.examined,
        wall_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{verify_labeling, BoundMatrix, Tree};

    fn p3(delta: u32, d02: Option<u64>, d20: Option<u64>) -> TtrInstance {
        let tree = Tree::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mut bounds = BoundMatrix::all_trivial();
        if let Some(b) = d02 {
            bounds.set(0, 2, b).unwrap();
        }
        if let Some(b) = d20 {
            bounds.set(2, 0, b).unwrap();
        }
        TtrInstance::new(tree, delta, bounds).unwrap()
    }

    #[test]
    fn auto_dispatches_by_period() {
        let report = solve(&p3(2, Some(2), None), &SolveOptions::default()).unwrap();
        assert_eq!(report.algorithm, "delta2");
        assert!(report.realizable);

        let report = solve(&p3(3, Some(2), None), &SolveOptions::default()).unwrap();
        assert_eq!(report.algorithm, "fpt");
        assert!(report.realizable);
    }

    #[test]
    fn preprocess_short_circuits_infeasible_instances() {
        let report = solve(&p3(3, Some(2), Some(2)), &SolveOptions::default()).unwrap();
        assert!(!report.realizable);
        assert_eq!(report.algorithm, "preprocess");
    }

    #[test]
    fn tiny_instances_are_yes() {
        let tree = Tree::new(2, &[(0, 1)]).unwrap();
        let instance = TtrInstance::new(tree, 7, BoundMatrix::all_trivial()).unwrap();
        let report = solve(&instance, &SolveOptions::default()).unwrap();
        assert!(report.realizable);
        let witness = report.witness.unwrap();
        assert!(verify_labeling(&instance, &witness).unwrap().is_realizing());
    }

    #[test]
    fn all_algorithms_agree_on_a_nontrivial_instance() {
        let instance = p3(3, Some(2), None);
        let mut answers = Vec::new();
        for algorithm in [Algorithm::Delta2, Algorithm::Fpt, Algorithm::Oracle] {
            if algorithm == Algorithm::Delta2 {
                continue; // period is 3
            }
            let options = SolveOptions {
                algorithm,
                ..SolveOptions::default()
            };
            let report = solve(&instance, &options).unwrap();
            answers.push(report.realizable);
            if let Some(w) = &report.witness {
                assert!(verify_labeling(&instance, w).unwrap().is_realizing());
            }
        }
        assert!(answers.iter().all(|&a| a));
    }

    #[test]
    fn wrong_algorithm_for_period_is_an_error()  {
        let options = SolveOptions {
            algorithm: Algorithm::Delta2,
            ..SolveOptions::default()
        };
        assert!(matches!(
            solve(&p3(3, Some(2), None), &options),
            Err(Error::RequiresPeriodTwo(3))
        ));
    }
}
