use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use raag_aut::families::{cycle_hub, frucht, join_complete, SpokeSet};
use raag_aut::report::analyze;
use raag_aut::symmetry::SearchLimits;
use raag_aut::verify::Harness;
use raag_aut::words::{normal_form, Word};
use raag_aut::SimplicialGraph;

/// Automorphisms of right-angled Artin groups.
#[derive(Parser)]
#[command(name = "raagaut", version)]
struct Cli {
    /// Largest graph accepted by the symmetry search.
    #[arg(long, global = true, default_value_t = 64)]
    max_vertices: usize,
    /// Sampling seed; reports are exact and do not depend on it.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the graph in a file.
    Analyze { path: PathBuf },
    /// Print a witness graph in the graph file format.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run a verification harness.
    Verify {
        /// table, prop-3-1, prop-3-4, split, theorem-a-center,
        /// theorem-a-centreless or theorem-b
        which: String,
    },
    /// Same as `verify table`.
    #[command(name = "verify-table", hide = true)]
    VerifyTable,
    /// Normal form of a word in A_Γ.
    Nf { path: PathBuf, word: String },
}

#[derive(Subcommand)]
enum Family {
    Frucht,
    CycleHub {
        #[arg(long, value_delimiter = ',', required = true)]
        spokes: Vec<u64>,
    },
    JoinComplete {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
}

enum Failure {
    Input(String),
    Verification,
}

impl From<raag_aut::Error> for Failure {
    fn from(e: raag_aut::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<SimplicialGraph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    SimplicialGraph::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run_harness(which: Harness) -> Result<(), Failure> {
    let report = which.run()?;
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = SearchLimits {
        max_vertices: cli.max_vertices,
        ..SearchLimits::default()
    };
    match cli.command {
        Command::Analyze { path } => {
            let g = read_graph(&path)?;
            print!("{}", analyze(&g, limits)?);
        }
        Command::Generate { family } => {
            let g = match family {
                Family::Frucht => frucht(),
                Family::CycleHub { spokes } => cycle_hub(&SpokeSet::new(spokes)?)?,
                Family::JoinComplete { k, sizes } => join_complete(k, &sizes)?,
            };
            print!("{}", g.to_file_string());
        }
        Command::Verify { which } => run_harness(which.parse()?)?,
        Command::VerifyTable => run_harness(Harness::ConjugationTable)?,
        Command::Nf { path, word } => {
            let g = read_graph(&path)?;
            let w = Word::parse(&g, &word)?;
            println!("{}", normal_form(&g, &w)?.word().display(&g));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
