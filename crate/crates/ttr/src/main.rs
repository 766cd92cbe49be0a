//! Command-line interface.
//!
//! Exit codes: 0 for yes/valid, 1 for no/invalid, 2 for usage or input
//! errors, 3 when a resource budget was exceeded.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ttr::error::Error;
use ttr::fpt::FptOptions;
use ttr::io;
use ttr::model::{all_pairs_durations, verify_labeling, PeriodicLabeling, TtrInstance};
use ttr::oracle::{brute_force_all_witnesses, brute_force_solve, DEFAULT_BUDGET};
use ttr::reductions::{
    from_coloring, from_nae3sat_degree, from_nae3sat_diameter, ColoringInstance,
};
use ttr::solver::{solve, Algorithm, SolveOptions, SolveReport};

#[derive(Parser)]
#[command(
    name = "ttr",
    about = "Decide whether a tree admits a periodic edge labeling keeping all fastest-path durations within given bounds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Auto,
    Delta2,
    Fpt,
    Oracle,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Algorithm {
        match a {
            AlgoArg::Auto => Algorithm::Auto,
            AlgoArg::Delta2 => Algorithm::Delta2,
            AlgoArg::Fpt => Algorithm::Fpt,
            AlgoArg::Oracle => Algorithm::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratorKind {
    Coloring,
    NaeDiameter,
    NaeDegree,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file.
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    algo: AlgoArg,
    /// Cap on the oracle's pruned search space.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Cap on label configurations examined by the fpt path.
    #[arg(long, default_value_t = 10_000_000)]
    max_configs: u128,
    /// Cap on branch nodes per MILP.
    #[arg(long, default_value_t = ttr::milp::DEFAULT_NODE_LIMIT)]
    node_limit: u64,
    /// Worker threads for configuration dispatch.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a witness labeling when one exists.
    Solve(SolveArgs),
    /// Check a labeling file against an instance's bounds.
    Verify {
        instance: PathBuf,
        labeling: PathBuf,
    },
    /// Print the all-pairs fastest-duration table of a labeling.
    Durations {
        instance: PathBuf,
        labeling: PathBuf,
    },
    /// Decide an instance by exhaustive search.
    Oracle {
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Print every satisfying labeling in the pruned space.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Translate a coloring or NAE-3-SAT input into an instance file.
    Generate {
        #[arg(long, value_enum)]
        from: GeneratorKind,
        /// Source file: `n`/`edge` records for coloring, DIMACS-like
        /// `p nae` format otherwise.
        #[arg(long)]
        input: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Color count for the coloring generator (also the period).
        #[arg(long)]
        delta: Option<u32>,
        /// Recorded in the generated file's metadata.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit)
        }
    }
}

struct Failure {
    message: String,
    exit: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            exit: EXIT_INPUT,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let exit = match e {
            Error::BudgetExceeded { .. }
            | Error::ConfigBudgetExceeded { .. }
            | Error::NodeLimitExceeded(_) => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        };
        Failure {
            message: e.to_string(),
            exit,
        }
    }
}

impl From<io::ParseError> for Failure {
    fn from(e: io::ParseError) -> Failure {
        Failure::input(e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    std::fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn load_instance(path: &Path) -> Result<TtrInstance, Failure> {
    Ok(io::parse_instance(&read_file(path)?)?.instance)
}

fn load_labeling(path: &Path, instance: &TtrInstance) -> Result<PeriodicLabeling, Failure> {
    Ok(io::parse_labeling(&read_file(path)?, instance.tree())?)
}

fn print_report(report: &SolveReport) {
    println!("answer {}", if report.realizable { "yes" } else { "no" });
    println!("algorithm {}", report.algorithm);
    println!("examined {}", report.examined);
    println!("time_ms {}", report.wall_ms);
    if let Some(witness) = &report.witness {
        print!("{}", io::serialize_labeling(witness));
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Solve(args) => {
            let instance = load_instance(&args.instance)?;
            let options = SolveOptions {
                algorithm: args.algo.into(),
                oracle_budget: args.budget,
                fpt: FptOptions {
                    max_configs: args.max_configs,
                    node_limit: args.node_limit,
                    workers: args.parallel.max(1),
                },
            };
            let report = solve(&instance, &options)?;
            print_report(&report);
            Ok(if report.realizable { EXIT_YES } else { EXIT_NO })
        }
        Command::Verify { instance, labeling } => {
            let instance = load_instance(&instance)?;
            let labeling = load_labeling(&labeling, &instance)?;
            let report = verify_labeling(&instance, &labeling)?;
            println!(
                "valid {}",
                if report.is_realizing() { "yes" } else { "no" }
            );
            for v in report.violations() {
                println!("violation {} {} {} {}", v.from, v.to, v.duration, v.bound);
            }
            Ok(if report.is_realizing() {
                EXIT_YES
            } else {
                EXIT_NO
            })
        }
        Command::Durations { instance, labeling } => {
            let instance = load_instance(&instance)?;
            let labeling = load_labeling(&labeling, &instance)?;
            let report = all_pairs_durations(instance.tree(), &labeling, instance.delta())?;
            for ((s, t), d) in report.durations() {
                println!("duration {s} {t} {d}");
            }
            Ok(EXIT_YES)
        }
        Command::Oracle {
            instance,
            budget,
            all_witnesses,
        } => {
            let instance = load_instance(&instance)?;
            if all_witnesses {
                let witnesses = brute_force_all_witnesses(&instance, budget)?;
                println!("witness_count {}", witnesses.len());
                for (i, w) in witnesses.iter().enumerate() {
                    println!("witness {i}");
                    print!("{}", io::serialize_labeling(w));
                }
                Ok(if witnesses.is_empty() { EXIT_NO } else { EXIT_YES })
            } else {
                let result = brute_force_solve(&instance, budget)?;
                println!("answer {}", if result.realizable { "yes" } else { "no" });
                println!("algorithm oracle");
                println!("examined {}", result.examined);
                if let Some(w) = &result.witness {
                    print!("{}", io::serialize_labeling(w));
                }
                Ok(if result.realizable { EXIT_YES } else { EXIT_NO })
            }
        }
        Command::Generate {
            from,
            input,
            output,
            delta,
            seed,
        } => {
            let text = read_file(&input)?;
            let (instance, generator) = match from {
                GeneratorKind::Coloring => {
                    let graph = io::parse_graph(&text)?;
                    let colors = delta.ok_or_else(|| {
                        Failure::input("--delta is required for the coloring generator")
                    })?;
                    let reduction = from_coloring(&ColoringInstance { graph, colors })?;
                    (reduction.instance, "coloring")
                }
                GeneratorKind::NaeDiameter => {
                    let formula = io::parse_nae_formula(&text)?;
                    (from_nae3sat_diameter(&formula).instance, "nae-diameter")
                }
                GeneratorKind::NaeDegree => {
                    let formula = io::parse_nae_formula(&text)?;
                    (from_nae3sat_degree(&formula).instance, "nae-degree")
                }
            };
            let mut metadata = std::collections::BTreeMap::new();
            metadata.insert("generator".to_string(), generator.to_string());
            metadata.insert("seed".to_string(), seed.to_string());
            let document = io::InstanceDocument { instance, metadata };
            let rendered = io::serialize_instance(&document);
            match output {
                Some(path) => std::fs::write(&path, rendered).map_err(|e| {
                    Failure::input(format!("cannot write {}: {e}", path.display()))
                })?,
                None => print!("{rendered}"),
            }
            Ok(EXIT_YES)
        }
    }
}
