//! Command-line front end for the triangular-partition toolkit.

use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use tridyck::lattice::{build_lattice, enumerate_intervals, interval_polynomial};
use tridyck::partition::enumerate_triangular_partitions;
use tridyck::poly::{a_lambda_polynomial, decompose_schur_2var};
use tridyck::reference::reference_expansion;
use tridyck::simsym::enumerate_sim_sym;
use tridyck::tableau::{
    row_regular_tableau, statistics, top_down_tableau, triangular_tableau,
    triangular_tableau_by_sort,
};
use tridyck::verify::{run_suite, SuiteBounds, SUITE_NAMES};
use tridyck::{Partition, Result, StandardTableau};

#[derive(Parser)]
#[command(
    name = "tridyck",
    version,
    about = "Exact combinatorics of triangular partitions: statistics, tableaux, \
             Schur expansions, interval lattices, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Which labelling to use for the fixed tableau theta.
#[derive(Clone, Debug)]
enum TableauKind {
    Triangular,
    BySort,
    TopDown,
    RowRegular(u32),
}

impl FromStr for TableauKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "triangular" => Ok(TableauKind::Triangular),
            "bysort" => Ok(TableauKind::BySort),
            "topdown" => Ok(TableauKind::TopDown),
            _ => match s.strip_prefix("rowregular:") {
                Some(i) => i
                    .parse()
                    .map(TableauKind::RowRegular)
                    .map_err(|e| format!("bad row-regular index: {e}")),
                None => Err(format!(
                    "unknown tableau kind {s:?} (expected triangular, bysort, topdown, \
                     or rowregular:<i>)"
                )),
            },
        }
    }
}

impl TableauKind {
    fn build(&self, shape: &Partition) -> Result<StandardTableau> {
        match self {
            TableauKind::Triangular => triangular_tableau(shape),
            TableauKind::BySort => triangular_tableau_by_sort(shape),
            TableauKind::TopDown => top_down_tableau(shape),
            TableauKind::RowRegular(i) => {
                if shape.len() > 2 || shape.is_empty() {
                    return Err(tridyck::Error::NotTwoPart);
                }
                row_regular_tableau(shape.part(0), shape.part(1), *i)
            }
        }
    }
}

#[derive(Args)]
struct ShapeArg {
    /// Outer shape, e.g. "7,3" (use "0" for the empty partition)
    #[arg(long = "lambda")]
    lambda: Partition,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a partition is triangular and print its slope data
    CheckTriangular {
        /// Partition to test, e.g. "7,6,4,3,1"
        shape: Partition,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// List (or count) the triangular partitions of a given size
    EnumerateTriangular {
        /// Number of cells
        #[arg(long)]
        size: usize,
        /// Print only the number of shapes
        #[arg(long)]
        count: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the (area, sim, deficit) statistics of a subpartition
    Stats {
        #[command(flatten)]
        shape: ShapeArg,
        /// Subpartition of lambda
        #[arg(long = "mu")]
        mu: Partition,
        /// Tableau fixing the sim/deficit split
        #[arg(long, default_value = "triangular")]
        tableau: TableauKind,
    },
    /// Print a distinguished standard tableau of a triangular shape
    Tableau {
        #[command(flatten)]
        shape: ShapeArg,
        /// One of: triangular, bysort, topdown, rowregular:<i>
        #[arg(long)]
        kind: TableauKind,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the two-variable polynomial A_lambda(q,t)
    Aqt {
        #[command(flatten)]
        shape: ShapeArg,
        /// Also print its expansion in Schur polynomials s_nu(q,t)
        #[arg(long)]
        schur: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the sim-sym standard tableaux of a shape
    Simsym {
        #[command(flatten)]
        shape: ShapeArg,
        /// Print only how many there are
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print every sim-sym tableau (default)
        #[arg(long)]
        list: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Build the rotation lattice on subpartitions of a triangular shape
    Lattice {
        #[command(flatten)]
        shape: ShapeArg,
        /// Write the Hasse diagram in DOT format to this file
        #[arg(long, value_name = "FILE")]
        dot: Option<std::path::PathBuf>,
        /// Print node/cover/interval counts
        #[arg(long)]
        stats: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the interval polynomial sum of q^dist t^sim over lattice intervals
    Intervals {
        #[command(flatten)]
        shape: ShapeArg,
        /// Tableau fixing the sim statistic
        #[arg(long, default_value = "topdown")]
        tableau: TableauKind,
        /// Compare against the embedded three-variable Schur expansion at r=1
        #[arg(long)]
        schur3: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite (or "all")
    Verify {
        /// Suite name
        #[arg(long)]
        suite: String,
        /// Override the suite's default size bound
        #[arg(long)]
        max_size: Option<u32>,
        /// Include the expensive opt-in cases
        #[arg(long)]
        slow: bool,
        /// Write the full report as JSON to this file
        #[arg(long, value_name = "FILE")]
        json: Option<std::path::PathBuf>,
    },
}

fn emit<T: Display>(json_mode: bool, value: &serde_json::Value, human: T) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{human}");
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::CheckTriangular { shape, json } => {
            let triangular = shape.is_triangular();
            let (bounds, mean) = if triangular && !shape.is_empty() {
                let (lo, hi) = shape.slope_bounds()?;
                (Some((lo, hi)), Some(shape.mean_slope()?))
            } else {
                (None, None)
            };
            let value = json!({
                "shape": shape,
                "triangular": triangular,
                "slope_bounds": bounds.as_ref().map(|(lo, hi)| vec![lo.to_string(), hi.to_string()]),
                "mean_slope": mean.as_ref().map(|m| m.to_string()),
            });
            let human = match (&bounds, &mean) {
                (Some((lo, hi)), Some(m)) => {
                    format!("{shape}: triangular, slopes in ({lo}, {hi}), mean slope {m}")
                }
                _ if triangular => format!("{shape}: triangular"),
                _ => format!("{shape}: not triangular"),
            };
            emit(json, &value, human);
            Ok(if triangular { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::EnumerateTriangular { size, count, json } => {
            let shapes = enumerate_triangular_partitions(size);
            if count {
                emit(json, &json!({ "size": size, "count": shapes.len() }), shapes.len());
            } else if json {
                println!("{}", serde_json::to_string_pretty(&shapes).expect("serializable"));
            } else {
                for shape in &shapes {
                    println!("{shape}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { shape, mu, tableau } => {
            let theta = tableau.build(&shape.lambda)?;
            let stats = statistics(&theta, &mu)?;
            println!("{}", serde_json::to_string(&stats).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Tableau { shape, kind, json } => {
            let theta = kind.build(&shape.lambda)?;
            emit(json, &serde_json::to_value(&theta).expect("serializable"), &theta);
            Ok(ExitCode::SUCCESS)
        }
        Command::Aqt { shape, schur, json } => {
            let poly = a_lambda_polynomial(&shape.lambda)?;
            let expansion = if schur { Some(decompose_schur_2var(&poly)?) } else { None };
            let value = json!({
                "shape": shape.lambda,
                "polynomial": poly.to_json_value(),
                "schur": expansion,
            });
            let mut human = poly.to_string();
            if let Some(e) = &expansion {
                human.push_str(&format!("\n= {e}"));
            }
            emit(json, &value, human);
            Ok(ExitCode::SUCCESS)
        }
        Command::Simsym { shape, count, list: _, json } => {
            let tableaux = enumerate_sim_sym(&shape.lambda)?;
            if count {
                emit(
                    json,
                    &json!({ "shape": shape.lambda, "count": tableaux.len() }),
                    tableaux.len(),
                );
            } else if json {
                println!("{}", serde_json::to_string_pretty(&tableaux).expect("serializable"));
            } else {
                for t in &tableaux {
                    println!("{t}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { shape, dot, stats, json } => {
            let lattice = build_lattice(&shape.lambda)?;
            if let Some(path) = dot {
                std::fs::write(&path, lattice.to_dot()).map_err(|e| tridyck::Error::Parse {
                    what: "dot output file",
                    detail: e.to_string(),
                })?;
            }
            let intervals = enumerate_intervals(&lattice);
            if stats || json {
                let value = json!({
                    "shape": shape.lambda,
                    "nodes": lattice.node_count(),
                    "covers": lattice.cover_count(),
                    "intervals": intervals.len(),
                });
                emit(
                    json,
                    &value,
                    format!(
                        "{}: {} nodes, {} covers, {} intervals",
                        shape.lambda,
                        lattice.node_count(),
                        lattice.cover_count(),
                        intervals.len()
                    ),
                );
            } else {
                for node in lattice.nodes() {
                    println!("{node}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Intervals { shape, tableau, schur3, json } => {
            let theta = tableau.build(&shape.lambda)?;
            let poly = interval_polynomial(&shape.lambda, &theta)?;
            let mut matches = None;
            let mut reference = None;
            if schur3 {
                if let Some(entry) = reference_expansion(&shape.lambda) {
                    let specialized = entry
                        .expansion
                        .reconstruct(3)?
                        .substitute(&[None, None, Some(1)])?
                        .restrict_arity(2)?;
                    matches = Some(specialized == poly);
                    reference = Some(entry);
                }
            }
            let value = json!({
                "shape": shape.lambda,
                "polynomial": poly.to_json_value(),
                "reference_expansion": reference.map(|e| &e.expansion),
                "reference_conjectural": reference.map(|e| e.conjectural),
                "matches_reference_at_r1": matches,
            });
            let mut human = poly.to_string();
            if schur3 {
                match (reference, matches) {
                    (Some(entry), Some(ok)) => {
                        human.push_str(&format!(
                            "\nreference{}: {}\nmatch at r=1: {}",
                            if entry.conjectural { " (conjectural)" } else { "" },
                            entry.expansion,
                            if ok { "yes" } else { "NO" }
                        ));
                    }
                    _ => human.push_str("\nno reference expansion for this shape"),
                }
            }
            emit(json, &value, human);
            Ok(if matches == Some(false) { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Command::Verify { suite, max_size, slow, json } => {
            let bounds = SuiteBounds { max_size, slow };
            let names: Vec<&str> = if suite == "all" {
                SUITE_NAMES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut reports = Vec::new();
            let mut all_ok = true;
            for name in names {
                let report = run_suite(name, &bounds)?;
                all_ok &= report.all_ok();
                println!(
                    "suite {}: {} passed, {} failed, {} not-applicable, {} reference-uncertain \
                     ({} cases, {:.2}s)",
                    report.suite,
                    report.passed,
                    report.failed,
                    report.not_applicable,
                    report.reference_uncertain,
                    report.cases.len(),
                    report.wall_time.as_secs_f64()
                );
                for case in &report.cases {
                    use tridyck::verify::CaseStatus;
                    if case.status == CaseStatus::Fail {
                        println!("  FAIL {}: {}", case.input, case.details);
                    } else if case.status == CaseStatus::ReferenceUncertain {
                        println!("  reference-uncertain {}: {}", case.input, case.details);
                    }
                }
                reports.push(report);
            }
            if let Some(path) = json {
                let value = if reports.len() == 1 {
                    serde_json::to_value(&reports[0])
                } else {
                    serde_json::to_value(&reports)
                }
                .expect("serializable");
                std::fs::write(&path, serde_json::to_string_pretty(&value).expect("serializable"))
                    .map_err(|e| tridyck::Error::Parse {
                        what: "json output file",
                        detail: e.to_string(),
                    })?;
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
