use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cobox_core::blocks::block_decomposition;
use cobox_core::cointerval::cointerval_representation;
use cobox_core::cover::{cover_to_box_representation, min_cover_with, verify_cover, CoverOptions};
use cobox_core::generate::{random_block_graph, BlockGraphParams};
use cobox_core::oracle::{brute_cointerval_cover, brute_threshold_cover, DEFAULT_BOUND};
use cobox_core::{Cover, CoverKind, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cobox::dot::export_dot;
use cobox::harness;
use cobox::io::{parse_graph, write_graph, write_intervals, GraphFormat, ParseError};
use cobox::json::{box_doc, cover_doc, parse_cover, ReportDoc};

#[derive(Parser)]
#[command(
    name = "cobox",
    version,
    about = "Co-boxicity and threshold co-dimension of block graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file; standard input when omitted
    input: Option<PathBuf>,
    /// Input format; guessed from the first character when omitted
    #[arg(long, value_enum)]
    format: Option<GraphFormat>,
    /// Write the result here instead of standard output
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the co-boxicity of a block graph
    Coboxicity {
        #[command(flatten)]
        io: Input,
        /// Use the exhaustive oracle (small graphs, any graph for up to 9 vertices)
        #[arg(long)]
        oracle: bool,
        /// Also print the cover as JSON
        #[arg(long)]
        show_cover: bool,
    },
    /// Print the threshold co-dimension of a block graph
    Cothdim {
        #[command(flatten)]
        io: Input,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        show_cover: bool,
    },
    /// Emit a minimum cover with its iteration traces as JSON
    Cover {
        #[command(flatten)]
        io: Input,
        #[arg(long, default_value = "cointerval", value_parser = ["cointerval", "threshold"])]
        kind: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Check a cover (JSON) against a graph
    Verify {
        graph: PathBuf,
        cover: PathBuf,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Emit a box representation of the complement as JSON
    Boxrep {
        #[command(flatten)]
        io: Input,
    },
    /// Print a co-interval representation, one `v lo hi` line per vertex
    Intervals {
        #[command(flatten)]
        io: Input,
    },
    /// Emit a seeded random block graph
    Gen {
        #[arg(long)]
        seed: u64,
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Probability that a block is a single edge
        #[arg(long, default_value_t = 0.6)]
        edge_block_prob: f64,
        #[arg(long, default_value_t = 3)]
        min_clique: usize,
        #[arg(long, default_value_t = 5)]
        max_clique: usize,
        /// Relabel vertices randomly
        #[arg(long)]
        shuffle: bool,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Graphviz export of the graph, its block-cut tree and optionally a cover
    Dot {
        #[command(flatten)]
        io: Input,
        /// Colour the edges by a minimum cover of this kind
        #[arg(long, value_parser = ["cointerval", "threshold"])]
        cover: Option<String>,
    },
    /// Run the acceptance criteria and print one line per criterion
    Harness {
        /// Only these criteria (default: all)
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

/// Failures mapped onto the documented exit codes.
enum Failure {
    Input(String),
    NotBlockGraph,
    Internal(String),
    Negative(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Input(_) => 2,
            Failure::NotBlockGraph => 3,
            Failure::Internal(_) => 4,
        }
    }
}

impl From<cobox_core::Error> for Failure {
    fn from(e: cobox_core::Error) -> Self {
        match e {
            cobox_core::Error::NotBlockGraph => Failure::NotBlockGraph,
            cobox_core::Error::Internal(m) => Failure::Internal(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load(io: &Input) -> Result<Graph, Failure> {
    Ok(parse_graph(&read_text(io.input.as_deref())?, io.format)?)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents always serialize") + "\n"
}

fn compute(
    g: &Graph,
    kind: CoverKind,
    oracle: bool,
) -> Result<(Cover, Vec<cobox_core::cover::IterationTrace>), Failure> {
    if oracle {
        let cover = match kind {
            CoverKind::Cointerval => brute_cointerval_cover(g, DEFAULT_BOUND)?,
            CoverKind::Threshold => brute_threshold_cover(g, DEFAULT_BOUND)?,
        };
        return Ok((cover, Vec::new()));
    }
    Ok(min_cover_with(
        g,
        kind,
        &CoverOptions {
            record_components: true,
        },
    )?)
}

fn number(io: &Input, kind: CoverKind, oracle: bool, show_cover: bool) -> Result<(), Failure> {
    let g = load(io)?;
    let (cover, traces) = compute(&g, kind, oracle)?;
    let mut text = format!("{}\n", cover.len());
    if show_cover {
        text.push_str(&to_json(&cover_doc(&cover, &traces)));
    }
    emit(io.output.as_deref(), &text)
}

fn parse_kind(s: &str) -> CoverKind {
    CoverKind::parse(s).expect("clap restricts the kind")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Coboxicity {
            io,
            oracle,
            show_cover,
        } => number(&io, CoverKind::Cointerval, oracle, show_cover),
        Command::Cothdim {
            io,
            oracle,
            show_cover,
        } => number(&io, CoverKind::Threshold, oracle, show_cover),
        Command::Cover { io, kind, oracle } => {
            let g = load(&io)?;
            let (cover, traces) = compute(&g, parse_kind(&kind), oracle)?;
            emit(io.output.as_deref(), &to_json(&cover_doc(&cover, &traces)))
        }
        Command::Verify {
            graph,
            cover,
            format,
            json,
        } => {
            let g = parse_graph(&read_text(Some(&graph))?, format)?;
            let c = parse_cover(&read_text(Some(&cover))?)?;
            let report = verify_cover(&g, &c);
            let text = if json {
                to_json(&ReportDoc::from(&report))
            } else {
                format!("{}\n", report.summary())
            };
            emit(None, &text)?;
            if report.is_valid() {
                Ok(())
            } else {
                Err(Failure::Negative(String::from("cover is invalid")))
            }
        }
        Command::Boxrep { io } => {
            let g = load(&io)?;
            let (cover, _) = min_cover_with(&g, CoverKind::Cointerval, &CoverOptions::default())?;
            let boxes = cover_to_box_representation(&g, &cover)?;
            if !boxes.realizes(&g) {
                return Err(Failure::Internal(String::from(
                    "box representation does not realize the graph",
                )));
            }
            emit(io.output.as_deref(), &to_json(&box_doc(&boxes)))
        }
        Command::Intervals { io } => {
            let g = load(&io)?;
            match cointerval_representation(&g) {
                Ok(rep) => emit(io.output.as_deref(), &write_intervals(&rep)),
                Err(cobox_core::Error::NotCointerval) => {
                    Err(Failure::Negative(String::from("graph is not co-interval")))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Gen {
            seed,
            n,
            edge_block_prob,
            min_clique,
            max_clique,
            shuffle,
            format,
            output,
        } => {
            if !(0.0..=1.0).contains(&edge_block_prob) || min_clique < 2 || max_clique < min_clique
            {
                return Err(Failure::Input(String::from(
                    "need 0 <= edge-block-prob <= 1 and 2 <= min-clique <= max-clique",
                )));
            }
            let params = BlockGraphParams {
                vertices: n,
                edge_block_prob,
                min_clique,
                max_clique,
                shuffle,
            };
            let g = random_block_graph(&mut ChaCha8Rng::seed_from_u64(seed), &params);
            emit(output.as_deref(), &write_graph(&g, format))
        }
        Command::Dot { io, cover } => {
            let g = load(&io)?;
            let cover = match cover {
                Some(kind) => {
                    Some(min_cover_with(&g, parse_kind(&kind), &CoverOptions::default())?.0)
                }
                None => None,
            };
            let dot = export_dot(&g, &block_decomposition(&g), cover.as_ref())
                .map_err(|e| Failure::Internal(e.to_string()))?;
            emit(io.output.as_deref(), &dot)
        }
        Command::Harness { only } => {
            let numbers: Vec<u8> = if only.is_empty() {
                harness::CRITERIA.iter().map(|(n, _)| *n).collect()
            } else {
                only
            };
            let mut failed = 0;
            for n in numbers {
                let result = harness::run_criterion(n);
                println!("{result}");
                if !result.passed {
                    failed += 1;
                }
            }
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Negative(format!("{failed} criteria failed")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::NotBlockGraph => eprintln!("error: input is not a block graph"),
                Failure::Internal(m) => eprintln!("internal error: {m}"),
                Failure::Negative(m) => eprintln!("{m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
