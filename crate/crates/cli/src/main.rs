//! `bcpbook`: check, color, decompose, embed, verify and render bipartite
//! cubic planar graphs from the command line.
//!
//! Graphs are read as JSON (`{"n": .., "edges": [[u, v], ..]}`) or graph6,
//! from a file or standard input. Results go to standard output as JSON
//! (SVG for `render`), diagnostics to standard error. Exit status is 0 on
//! success, 1 on invalid input or usage, 2 on an internal failure.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bcp_book::coloring::{induced_edge_coloring, three_face_coloring};
use bcp_book::decomposition::ternary_decompose;
use bcp_book::format::json::{coloring_to_json, decomposition_to_json, embedding_from_json, embedding_to_json, graph_to_json};
use bcp_book::format::{emit_graph6, read_graph};
use bcp_book::generate::{gen_chain, gen_cube, gen_join, gen_ladder, gen_prism};
use bcp_book::render::render_svg;
use bcp_book::verify::{check_structure, mbt_oracle_with_limit, DEFAULT_ORACLE_LIMIT};
use bcp_book::{embed, planar_embedding, verify_matching_book_embedding, Error, Graph, Mbt};

#[derive(Parser)]
#[command(name = "bcpbook", version, about = "Matching book embeddings of bipartite cubic planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report structural predicates and connectivity
    Check(Input),
    /// Face 3-coloring and the induced edge coloring
    Color(Input),
    /// Ladder decomposition tree
    Decompose(Input),
    /// 3-page matching book embedding
    Embed(Input),
    /// Check an embedding; exits 1 when there are violations
    Verify {
        /// Embedding JSON (default: standard input)
        input: Option<PathBuf>,
        /// Graph to check against; derived from the embedding when absent
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Allowed number of pages
        #[arg(long, default_value_t = 3)]
        pages: usize,
    },
    /// Exact matching book thickness by exhaustive search
    Mbt {
        input: Option<PathBuf>,
        /// Page bound; prints "exceeds bound" above it
        #[arg(long)]
        pages: Option<usize>,
        /// Largest order the search accepts
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
    /// Generate a graph
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
        format: Format,
    },
    /// SVG arc diagram of an embedding
    Render {
        /// Embedding JSON (default: standard input)
        input: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file, JSON or graph6 (default: standard input)
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// Prism C_m x K2 (m even, at least 4)
    Prism { m: usize },
    /// The 3-cube
    Cube,
    /// Ladder T_k alone
    Ladder { k: usize },
    /// Two prisms joined through a ladder T_k at their edges (0,1)
    Join {
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
        #[arg(short, long, default_value_t = 0)]
        k: usize,
    },
    /// Prisms joined left to right through ladders
    Chain {
        /// Prism sizes, e.g. 8,8,8
        #[arg(long, value_delimiter = ',', required = true)]
        prisms: Vec<usize>,
        /// Ladder lengths between consecutive prisms, e.g. 2,1
        #[arg(long, value_delimiter = ',')]
        ladders: Vec<usize>,
        /// Pick join edges at random with this seed
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Graph6,
}

enum Failure {
    Invalid(String),
    Internal(String),
    /// Output was written; only the exit status signals failure.
    Rejected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_invalid_input() {
            Failure::Invalid(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::Invalid(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Invalid(format!("standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn load_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    Ok(read_graph(&read_text(path)?)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Check(i) => {
            let g = load_graph(i.input.as_deref())?;
            print_json(&json!(check_structure(&g)?));
        }
        Command::Color(i) => {
            let g = load_graph(i.input.as_deref())?;
            let emb = planar_embedding(&g)?;
            let fc = three_face_coloring(&emb)?;
            let ec = induced_edge_coloring(&emb, &fc)?;
            print_json(&coloring_to_json(&fc, &ec));
        }
        Command::Decompose(i) => {
            let g = load_graph(i.input.as_deref())?;
            print_json(&decomposition_to_json(&ternary_decompose(&g)?));
        }
        Command::Embed(i) => {
            let g = load_graph(i.input.as_deref())?;
            print_json(&embedding_to_json(&embed(&g)?));
        }
        Command::Verify { input, graph, pages } => {
            let be = embedding_from_json(&read_text(input.as_deref())?)?;
            let g = match graph {
                Some(p) => load_graph(Some(&p))?,
                None => be.graph()?,
            };
            let violations = verify_matching_book_embedding(&g, &be, pages)?;
            print_json(&json!({
                "valid": violations.is_empty(),
                "pages": be.page_count(),
                "violations": violations,
            }));
            if !violations.is_empty() {
                for v in &violations {
                    eprintln!("violation: {}", serde_json::to_string(v).expect("serializable"));
                }
                return Err(Failure::Rejected);
            }
        }
        Command::Mbt { input, pages, limit } => {
            let g = load_graph(input.as_deref())?;
            let bound = pages.unwrap_or(g.edge_count().max(1));
            match mbt_oracle_with_limit(&g, bound, limit)? {
                Mbt::Exact(p) => print_json(&json!(p)),
                Mbt::ExceedsBound => print_json(&json!("exceeds bound")),
            }
        }
        Command::Gen { family, format } => {
            let g = match family {
                Family::Prism { m } => gen_prism(m)?,
                Family::Cube => gen_cube(),
                Family::Ladder { k } => gen_ladder(k)?,
                Family::Join { left, right, k } => gen_join(&gen_prism(left)?, (0, 1), &gen_prism(right)?, (0, 1), k)?,
                Family::Chain { prisms, ladders, seed } => gen_chain(&prisms, &ladders, seed)?,
            };
            match format {
                Format::Json => print_json(&graph_to_json(&g)),
                Format::Graph6 => println!("{}", emit_graph6(&g)),
            }
        }
        Command::Render { input } => {
            let be = embedding_from_json(&read_text(input.as_deref())?)?;
            print!("{}", render_svg(&be));
        }
    }
    Ok(())
}
