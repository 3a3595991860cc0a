use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use roman_core::classifier::{classify, roman_bondage_number};
use roman_core::enumeration::{free_trees, unicyclic_graphs};
use roman_core::labelled::generate_family;
use roman_core::{graph6, Graph, Solver};
use roman_verify::output::{class_report_json, function_json, set_json, write_json, write_table};
use roman_verify::suite::{run_suite, select, Limits, RunOptions};
use roman_verify::{explore, io as corpus_io, Result, VerifyError};

#[derive(Parser)]
#[command(name = "roman", version, about = "Exact Roman domination computations and theorem checks on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant for every graph in a graph6 input.
    Compute {
        what: Invariant,
        #[command(flatten)]
        input: Input,
        /// Largest edge-set size tried for `bondage`.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print a class report for every graph in a graph6 input.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Also compute the Roman bondage number.
        #[arg(long)]
        bondage: bool,
    },
    /// Print generated graphs as graph6 lines.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Run theorem checks over the generated corpus.
    Verify(VerifyArgs),
    /// Exploration reports for open questions.
    Explore {
        #[command(subcommand)]
        problem: ExploreProblem,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Gamma,
    GammaR,
    Differential,
    Bondage,
    Eds,
}

#[derive(Args)]
struct Input {
    /// graph6 file; standard input when absent or `-`.
    path: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Labelled family members up to the given order, with status words.
    TTrees {
        #[arg(long)]
        max_n: usize,
    },
    /// All free trees of one order.
    FreeTrees {
        #[arg(long)]
        n: usize,
    },
    /// All unicyclic graphs of one order.
    Unicyclic {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// A check id, a comma-separated list of ids, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = Limits::default().trees_max_n)]
    trees_max_n: usize,
    #[arg(long, default_value_t = Limits::default().graphs_max_n)]
    graphs_max_n: usize,
    #[arg(long, default_value_t = Limits::default().unicyclic_n)]
    unicyclic_n: usize,
    /// JSON lines (the default).
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// Per-check summary table.
    #[arg(long)]
    table: bool,
    /// Corrupt the Roman domination number on a seeded half of all graphs.
    #[arg(long)]
    fault_seed: Option<u64>,
    /// Include per-result timings (makes reports differ between runs).
    #[arg(long)]
    timings: bool,
    /// List the registered checks and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Subcommand)]
enum ExploreProblem {
    /// Unicyclic graphs of order n in R_UVR.
    Unicyclic {
        #[arg(long)]
        n: usize,
    },
    /// Largest size of an R_UVR graph of order n, per value of gamma_R.
    Sizes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
}

fn read_input(input: &Input) -> Result<Vec<Graph>> {
    match &input.path {
        Some(p) if p.as_os_str() != "-" => {
            let file = File::open(p).map_err(|source| VerifyError::Io { path: p.clone(), source })?;
            corpus_io::read_graph6(file, &p.display().to_string())
        }
        _ => corpus_io::read_graph6(io::stdin().lock(), "<stdin>"),
    }
}

fn emit(out: &mut impl Write, value: serde_json::Value) -> Result<()> {
    writeln!(out, "{value}").map_err(|source| VerifyError::Io { path: "<stdout>".into(), source })
}

fn compute(out: &mut impl Write, what: Invariant, graphs: &[Graph], cap: Option<usize>) -> Result<()> {
    let s = Solver::default();
    for g in graphs {
        let g6 = graph6::write(g)?;
        let value = match what {
            Invariant::Gamma => {
                let d = s.minimum_dominating_sets(g)?;
                json!({ "graph6": g6, "gamma": d.gamma, "unique": d.unique, "sets": d.all_min_sets.iter().map(set_json).collect::<Vec<_>>() })
            }
            Invariant::GammaR => {
                let fs = s.gamma_r_functions(g)?;
                json!({ "graph6": g6, "gamma_r": s.roman_domination_number(g)?, "functions": fs.iter().map(function_json).collect::<Vec<_>>() })
            }
            Invariant::Differential => {
                let sets = s.differential_sets(g)?;
                json!({ "graph6": g6, "differential": s.differential_value(g)?, "sets": sets.iter().map(set_json).collect::<Vec<_>>() })
            }
            Invariant::Bondage => json!({ "graph6": g6, "bondage": roman_bondage_number(&s, g, cap)? }),
            Invariant::Eds => {
                let sets = s.efficient_dominating_sets(g)?;
                json!({ "graph6": g6, "sets": sets.iter().map(set_json).collect::<Vec<_>>() })
            }
        };
        emit(out, value)?;
    }
    Ok(())
}

fn generate(out: &mut impl Write, kind: &GenerateKind) -> Result<()> {
    let lines: Vec<String> = match *kind {
        GenerateKind::TTrees { max_n } => generate_family(max_n)?.iter().map(|t| t.to_line()).collect::<roman_core::Result<_>>()?,
        GenerateKind::FreeTrees { n } => free_trees(n)?.map(|g| graph6::write(&g)).collect::<roman_core::Result<_>>()?,
        GenerateKind::Unicyclic { n } => unicyclic_graphs(n)?.map(|g| graph6::write(&g)).collect::<roman_core::Result<_>>()?,
    };
    for line in lines {
        writeln!(out, "{line}").map_err(|source| VerifyError::Io { path: "<stdout>".into(), source })?;
    }
    Ok(())
}

/// Returns whether every check passed.
fn verify(out: &mut impl Write, args: &VerifyArgs) -> Result<bool> {
    let io_err = |source| VerifyError::Io { path: "<stdout>".into(), source };
    if args.list {
        for c in roman_verify::checks::REGISTRY {
            writeln!(out, "{:<16} {}", c.id, c.statement).map_err(io_err)?;
        }
        return Ok(true);
    }
    let checks = select(&args.suite)?;
    let options = RunOptions {
        limits: Limits { trees_max_n: args.trees_max_n, graphs_max_n: args.graphs_max_n, unicyclic_n: args.unicyclic_n },
        fault_seed: args.fault_seed,
        timings: args.timings,
    };
    let report = run_suite(&checks, &options)?;
    if args.table {
        write_table(&report, &mut *out).map_err(io_err)?;
    } else {
        write_json(&report, &mut *out).map_err(io_err)?;
    }
    Ok(report.all_passed())
}

fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let ok = match &cli.command {
        Command::Compute { what, input, cap } => compute(&mut out, *what, &read_input(input)?, *cap).map(|_| true)?,
        Command::Classify { input, bondage } => {
            let s = Solver::default();
            for g in read_input(input)? {
                let report = classify(&s, &g, *bondage && g.max_degree() >= 2)?;
                emit(&mut out, class_report_json(&graph6::write(&g)?, &report))?;
            }
            true
        }
        Command::Generate { kind } => generate(&mut out, kind).map(|_| true)?,
        Command::Verify(args) => verify(&mut out, args)?,
        Command::Explore { problem } => {
            let s = Solver::default();
            let value = match *problem {
                ExploreProblem::Unicyclic { n } => {
                    let members = explore::unicyclic_members(&s, n)?;
                    let lines = members.iter().map(graph6::write).collect::<roman_core::Result<Vec<_>>>()?;
                    json!({ "n": n, "count": lines.len(), "members": lines })
                }
                ExploreProblem::Sizes { n, k } => serde_json::to_value(explore::sizes(&s, n, k)?).expect("plain data"),
            };
            emit(&mut out, value)?;
            true
        }
    };
    out.flush().map_err(|source| VerifyError::Io { path: "<stdout>".into(), source })?;
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("roman: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
