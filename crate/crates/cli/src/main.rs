//! Command-line front end: twin analysis, recognition, kernelization,
//! structure verification and exhaustive oracle runs.

mod report;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgAction, Args, Parser, Subcommand};
use equistable::kernel::{k_kernel_bound, lift_structure, target_kernel_bound};
use equistable::oracle::{
    min_k_exhaustive, min_k_naive, verify_structure_exhaustive, verify_structure_quotient,
    OracleError, OracleLimits, MASK_BITS,
};
use equistable::recognizer::recognize_with;
use equistable::{
    kernel_k, kernel_target_t, normalize_and_lift, quotient_graph, twin_partition,
    EquistableStructure, Graph, Kernel, KernelOutcome, SearchOptions,
};
use serde::Serialize;
use serde_json::json;

use report::{Report, Status};

#[derive(Parser)]
#[command(
    name = "equistable",
    version,
    about = "Equistable graph recognition with bounded weights or targets"
)]
struct Cli {
    /// Worker threads for candidate checking.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
    /// Print the JSON report on stdout (`--json=false` prints the summary there instead).
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set,
          num_args = 0..=1, default_missing_value = "true")]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Twin classes, their kinds and the quotient graph.
    Twins { graph: PathBuf },
    /// Decide k-equistability, target-t equistability, or both at once.
    Recognize {
        graph: PathBuf,
        #[command(flatten)]
        params: Params,
    },
    /// Kernelize for a weight bound or a target and write the kernel.
    Kernel {
        graph: PathBuf,
        #[command(flatten)]
        params: ExclusiveParams,
        /// Output prefix for `<prefix>.graph` and `<prefix>.recipe.json`.
        #[arg(long)]
        out: PathBuf,
        /// On rejection, write a P4 as the kernel graph.
        #[arg(long)]
        emit_p4: bool,
    },
    /// Check a structure file against a graph.
    Verify {
        graph: PathBuf,
        structure: PathBuf,
        /// Check every vertex subset instead of using the twin quotient.
        #[arg(long)]
        exhaustive: bool,
        /// Lift the oracle size caps.
        #[arg(long)]
        force: bool,
    },
    /// Smallest weight bound by exhaustive search.
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        max_k: u64,
        /// Lift the oracle size caps.
        #[arg(long)]
        force: bool,
        /// Try all k^n weight functions instead of the candidate family.
        #[arg(long)]
        naive: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = true)]
struct Params {
    /// Largest allowed weight.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: Option<u64>,
    /// Prescribed target.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    target: Option<u64>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ExclusiveParams {
    /// Largest allowed weight.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: Option<u64>,
    /// Prescribed target.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    target: Option<u64>,
}

/// Failures that end a command early, with their exit codes.
enum Failure {
    /// Usage, parse and I/O problems: exit 2.
    Input(String),
    /// Oracle size cap exceeded: exit 3.
    Cap(String),
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge { cap, .. } if cap < MASK_BITS => {
                Failure::Cap(format!("{e}; pass --force to run anyway"))
            }
            OracleError::TooLarge { .. } => Failure::Cap(e.to_string()),
            OracleError::Structure(e) => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read_input(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn yes_no(found: bool) -> Status {
    if found {
        Status::Yes
    } else {
        Status::No
    }
}

fn cmd_twins(path: &Path) -> Outcome {
    let g = read_graph(path)?;
    let tp = twin_partition(&g);
    let q = quotient_graph(&g, &tp);
    let quotient: Vec<&[usize]> = (0..q.p()).map(|c| q.neighbors(c)).collect();
    let mut report = Report::new("twins", Status::Yes);
    report.details = json!({
        "n": g.n(),
        "m": g.m(),
        "pi": tp.pi(),
        "classes": tp.classes(),
        "quotient": quotient,
    });
    Ok(report)
}

fn cmd_recognize(
    path: &Path,
    k: Option<u64>,
    target: Option<u64>,
    options: &SearchOptions,
) -> Outcome {
    let g = read_graph(path)?;
    let mut report = Report::new("recognize", Status::No);
    report.k = k;
    report.target = target;
    let found = match (k, target) {
        (Some(k), None) => match kernel_k(&g, k) {
            KernelOutcome::Reject(r) => {
                report.reason = Some(r.code().to_string());
                None
            }
            KernelOutcome::Kernel(kernel) => {
                report.details = json!({ "kernel_n": kernel.graph.n(), "case": kernel.case });
                recognize_with(&kernel.graph, k, None, options).map(|s| {
                    normalize_and_lift(&kernel, &s, &g)
                        .expect("kernel structures lift to the input graph")
                })
            }
        },
        (k, Some(t)) => match kernel_target_t(&g, t) {
            KernelOutcome::Reject(r) => {
                report.reason = Some(r.code().to_string());
                None
            }
            KernelOutcome::Kernel(kernel) => {
                report.details = json!({ "kernel_n": kernel.graph.n(), "case": kernel.case });
                recognize_with(&kernel.graph, k.unwrap_or(t), Some(t), options).map(|s| {
                    lift_structure(&s, &kernel.recipe, &g).expect("clique truncation always lifts")
                })
            }
        },
        (None, None) => return Err(Failure::Input("one of --k and --target is required".into())),
    };
    if let Some(s) = found {
        if !verify_structure_quotient(&g, &s).unwrap_or(false) {
            return Ok(Report::error(
                "recognize",
                "internal error: produced structure failed verification",
            ));
        }
        report.status = Status::Yes;
        report.target = Some(s.target);
        report.structure = Some(s);
    }
    Ok(report)
}

/// Contents of `<prefix>.recipe.json`; `original_n` and `steps` read back as
/// a lifting recipe.
#[derive(Serialize)]
struct RecipeFile<'a> {
    mode: &'static str,
    parameter: u64,
    original_n: usize,
    kernel_n: usize,
    mapping: &'a [Option<usize>],
    steps: &'a [equistable::kernel::ReductionStep],
    case: equistable::kernel::KernelCase,
}

fn cmd_kernel(
    path: &Path,
    k: Option<u64>,
    target: Option<u64>,
    out: &Path,
    emit_p4: bool,
) -> Outcome {
    let g = read_graph(path)?;
    let (mode, parameter, outcome, bound) = match (k, target) {
        (Some(k), _) => ("k", k, kernel_k(&g, k), k_kernel_bound(k)),
        (None, Some(t)) => ("target", t, kernel_target_t(&g, t), target_kernel_bound(t)),
        (None, None) => return Err(Failure::Input("one of --k and --target is required".into())),
    };
    let graph_path = with_suffix(out, ".graph");
    let mut report = Report::new("kernel", Status::Yes);
    report.k = k;
    report.target = target;
    match outcome {
        KernelOutcome::Reject(r) => {
            report.status = Status::No;
            report.reason = Some(r.code().to_string());
            let mut details = json!({ "original_n": g.n(), "original_m": g.m(), "bound": bound });
            if emit_p4 {
                write_file(&graph_path, &Graph::path(4).to_edge_list())?;
                details["graph_file"] = json!(graph_path);
            }
            report.details = details;
        }
        KernelOutcome::Kernel(Kernel {
            graph,
            mapping,
            recipe,
            case,
        }) => {
            let recipe_path = with_suffix(out, ".recipe.json");
            let file = RecipeFile {
                mode,
                parameter,
                original_n: recipe.original_n,
                kernel_n: graph.n(),
                mapping: &mapping,
                steps: &recipe.steps,
                case,
            };
            write_file(&graph_path, &graph.to_edge_list())?;
            write_file(
                &recipe_path,
                &serde_json::to_string_pretty(&file).expect("recipe serializes"),
            )?;
            report.details = json!({
                "original_n": g.n(),
                "original_m": g.m(),
                "kernel_n": graph.n(),
                "kernel_m": graph.m(),
                "bound": bound,
                "case": case,
                "graph_file": graph_path,
                "recipe_file": recipe_path,
            });
        }
    }
    Ok(report)
}

fn cmd_verify(path: &Path, structure: &Path, exhaustive: bool, force: bool) -> Outcome {
    let g = read_graph(path)?;
    let s: EquistableStructure = serde_json::from_str(&read_input(structure)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", structure.display())))?;
    let ok = if exhaustive {
        verify_structure_exhaustive(
            &g,
            &s,
            &OracleLimits {
                force,
                ..OracleLimits::default()
            },
        )?
    } else {
        verify_structure_quotient(&g, &s).map_err(|e| Failure::Input(e.to_string()))?
    };
    let mut report = Report::new("verify", yes_no(ok));
    report.k = Some(s.max_weight());
    report.target = Some(s.target);
    report.details = json!({ "method": if exhaustive { "exhaustive" } else { "quotient" } });
    Ok(report)
}

fn cmd_oracle(path: &Path, max_k: u64, force: bool, naive: bool) -> Outcome {
    let g = read_graph(path)?;
    let limits = OracleLimits {
        force,
        ..OracleLimits::default()
    };
    let found = if naive {
        min_k_naive(&g, max_k, &limits)?
    } else {
        min_k_exhaustive(&g, max_k, &limits)?
    };
    let mut report = Report::new("oracle", yes_no(found.is_some()));
    report.details =
        json!({ "max_k": max_k, "method": if naive { "naive" } else { "candidates" } });
    if let Some((k, s)) = found {
        report.k = Some(k);
        report.target = Some(s.target);
        report.structure = Some(s);
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let options = SearchOptions {
        threads: cli.threads as usize,
        ..SearchOptions::default()
    };
    let start = Instant::now();
    let (name, outcome) = match &cli.command {
        Command::Twins { graph } => ("twins", cmd_twins(graph)),
        Command::Recognize { graph, params } => (
            "recognize",
            cmd_recognize(graph, params.k, params.target, &options),
        ),
        Command::Kernel {
            graph,
            params,
            out,
            emit_p4,
        } => (
            "kernel",
            cmd_kernel(graph, params.k, params.target, out, *emit_p4),
        ),
        Command::Verify {
            graph,
            structure,
            exhaustive,
            force,
        } => ("verify", cmd_verify(graph, structure, *exhaustive, *force)),
        Command::Oracle {
            graph,
            max_k,
            force,
            naive,
        } => ("oracle", cmd_oracle(graph, *max_k, *force, *naive)),
    };
    let (report, code) = match outcome {
        Ok(r) => {
            let code = match r.status {
                Status::Yes => 0,
                Status::No => 1,
                Status::Error => 2,
            };
            (r, code)
        }
        Err(Failure::Input(e)) => (Report::error(name, e), 2),
        Err(Failure::Cap(e)) => (Report::error(name, e), 3),
    };
    let report = report.timed(start.elapsed());
    if cli.json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
        eprintln!("{}", report.summary());
    } else {
        println!("{}", report.summary());
    }
    ExitCode::from(code)
}
