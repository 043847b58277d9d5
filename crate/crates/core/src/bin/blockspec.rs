use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use blockspec::families::{
    enumerate_clique_trees, enumerate_connected_graphs, enumerate_trees, FamilySpec,
};
use blockspec::graph::{parse_edge_list, to_edge_list};
use blockspec::spectral::{format_significant, spectral_radius, MatrixKind, DEFAULT_TOL};
use blockspec::verify::{
    self, TheoremId, VerifyOptions, MAX_CLIQUE_TREE_ORDER, MAX_CONNECTED_ORDER,
};
use blockspec::Graph;

const DIGITS: usize = 12;

#[derive(Parser)]
#[command(
    name = "blockspec",
    version,
    about = "Spectral radii of complements of clique trees and block graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a family spec such as `path:5` or `cliquestar:2,3;3;2`.
    Gen {
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print λ1 and the Perron vector of a matrix of an edge-list graph.
    Spectrum {
        /// Edge-list file; `-` or absent reads stdin.
        input: Option<PathBuf>,
        #[arg(long, default_value = "adjacency")]
        matrix: MatrixKind,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Check a statement and write its report; exit 2 on violations.
    Verify {
        theorem: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List non-isomorphic graphs of a family as edge-list blocks.
    Enumerate {
        family: EnumFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFamily {
    Trees,
    Cliquetrees,
    Connected,
}

enum Failure {
    Usage(String),
    Violations(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violations(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_graph(input: Option<&PathBuf>) -> Result<Graph, Failure> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_edge_list(&text)?)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen { family, out } => {
            let g = family.parse::<FamilySpec>()?.build()?;
            emit(&to_edge_list(&g), out.as_ref())
        }
        Command::Spectrum { input, matrix, tol } => {
            let g = read_graph(input.as_ref())?;
            let pair = spectral_radius(&g, matrix, tol)?;
            let vector: Vec<String> = pair
                .vector
                .iter()
                .map(|x| format_significant(*x, DIGITS))
                .collect();
            emit(
                &format!(
                    "{}\n{}\n",
                    format_significant(pair.value, DIGITS),
                    vector.join(" ")
                ),
                None,
            )
        }
        Command::Verify {
            theorem,
            n,
            s,
            d,
            trials,
            seed,
            format,
            out,
            jobs,
        } => {
            let id: TheoremId = theorem.parse()?;
            let opts = VerifyOptions {
                n,
                s,
                d,
                trials,
                seed,
            };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                pool = pool.num_threads(j);
            }
            let report = pool.build()?.install(|| verify::run(id, &opts))?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv()?,
            };
            emit(&text, out.as_ref())?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Violations(format!(
                    "{id}: {} violation(s) among {} instances",
                    report.violations.len(),
                    report.checked
                )))
            }
        }
        Command::Enumerate {
            family,
            n,
            s,
            count_only,
        } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let graphs = match family {
                EnumFamily::Trees => {
                    check_order(n, MAX_CLIQUE_TREE_ORDER)?;
                    enumerate_trees(n)
                }
                EnumFamily::Cliquetrees => {
                    check_order(n, MAX_CLIQUE_TREE_ORDER)?;
                    match s {
                        Some(s) => enumerate_clique_trees(n, s),
                        None => (1..n.max(2))
                            .flat_map(|s| enumerate_clique_trees(n, s))
                            .collect(),
                    }
                }
                EnumFamily::Connected => {
                    check_order(n, MAX_CONNECTED_ORDER)?;
                    enumerate_connected_graphs(n)
                }
            };
            if count_only {
                return emit(&format!("{}\n", graphs.len()), None);
            }
            let blocks: Vec<String> = graphs.iter().map(to_edge_list).collect();
            emit(&blocks.join("\n"), None)
        }
    }
}

fn check_order(n: usize, max: usize) -> Result<(), Failure> {
    if n > max {
        return Err(Failure::Usage(format!(
            "--n {n} exceeds the enumeration limit {max}"
        )));
    }
    Ok(())
}
