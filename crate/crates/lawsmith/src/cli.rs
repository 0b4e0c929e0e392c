//! Command-line front end.
//!
//! Every verdict subcommand is a thin wrapper over one library call; the
//! process exit code carries the answer. Conventions:
//!
//! * exit 0: the checked property holds, or the command succeeded;
//! * exit 1: the checked property does not hold;
//! * exit 2: usage, parse, validation, or budget errors (message on stderr).
//!
//! `--law` and `--profile` accept either a file path or an inline JSON
//! object (anything starting with `{`). `LAWSMITH_BUDGET_MS` overrides the
//! exact-oracle wall-clock cutoff unless `--max-millis` is given.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::exact;
use crate::game::{ActionId, Game, Law, Profile};
use crate::generate::{generate, Generated, GeneratorKind, GeneratorSpec};
use crate::io;
use crate::law_design::{self, ReductionResult};
use crate::reductions;

pub const BUDGET_ENV_VAR: &str = "LAWSMITH_BUDGET_MS";

#[derive(Debug, Parser)]
#[command(
    name = "lawsmith",
    version,
    about = "Design and verify prohibition laws for one-shot concurrent games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GameLawArgs {
    /// Path to a game document.
    #[arg(long)]
    game: PathBuf,
    /// Law document: a file path or inline JSON like {"banned": ["x"]}.
    #[arg(long)]
    law: String,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest universe the exact search will attempt.
    #[arg(long)]
    max_universe: Option<usize>,
    /// Wall-clock cutoff for the exact search, in milliseconds.
    #[arg(long)]
    max_millis: Option<u64>,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[command(flatten)]
    target: GameLawArgs,
    /// Also run the exact oracle and report the minimum size and the ratio.
    #[arg(long)]
    exact: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Write the reduced law document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Does the law strike every prohibited profile?
    CheckUseful(GameLawArgs),
    /// Is the law useful with no useful proper subset?
    CheckMinimalUseful(GameLawArgs),
    /// Shrink a useful law within a factor |agents| of the minimum.
    ReduceUseful(ReduceArgs),
    /// Does every prohibited profile leave a responsible agent?
    CheckGapfree(GameLawArgs),
    /// Is the law gap-free with no gap-free proper subset?
    CheckMinimalGapfree(GameLawArgs),
    /// Shrink a gap-free law within a factor |agents| of the minimum.
    ReduceGapfree(ReduceArgs),
    /// Attribute responsibility for a prohibited profile, one line per agent.
    Attribute {
        #[command(flatten)]
        target: GameLawArgs,
        /// Profile document: a file path or inline JSON like {"a": "x"}.
        #[arg(long)]
        profile: String,
    },
    /// Translate between games and graphs.
    Convert {
        #[command(subcommand)]
        mode: ConvertMode,
    },
    /// Emit a seeded instance document.
    Generate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Agent count (game kinds).
        #[arg(long, default_value_t = 3)]
        agents: usize,
        /// Actions per agent (game kinds).
        #[arg(long, default_value_t = 3)]
        actions: usize,
        /// Prohibited profile count (game kinds).
        #[arg(long, default_value_t = 8)]
        prohibitions: usize,
        /// Vertex count (graph kinds).
        #[arg(long, default_value_t = 8)]
        vertices: usize,
        /// Edge count upper bound (graph kinds).
        #[arg(long, default_value_t = 10)]
        edges: usize,
        /// Edge size bound (graph kinds).
        #[arg(long, default_value_t = 3)]
        rank: usize,
        /// Write the document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive minimum searches (budget-gated).
    Exact {
        #[command(subcommand)]
        problem: ExactProblem,
    },
}

#[derive(Debug, Subcommand)]
enum ConvertMode {
    /// Game to its prohibited-support hypergraph.
    GameToGraph {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank-k hypergraph to its k-agent cover game.
    GraphToGame {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Game to the extension whose gap-free laws are the original's useful laws.
    GameToGapfree {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    RandomGame,
    RandomGraph,
    Factory,
    MatchingPennies,
    GraphGadget,
    GapfreeGadget,
}

// Variant names define the CLI subcommand names, so the shared prefix stays.
#[allow(clippy::enum_variant_names)]
#[derive(Debug, Subcommand)]
enum ExactProblem {
    /// Minimum vertex cover of a graph document.
    MinVertexCover {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Minimum useful subset of a useful law.
    MinUsefulReduction {
        #[command(flatten)]
        target: GameLawArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Minimum gap-free subset of a gap-free law.
    MinGapfreeReduction {
        #[command(flatten)]
        target: GameLawArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// Parses argv and runs the selected command, writing to the given streams.
/// Returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(parse_err) => {
            use clap::error::ErrorKind;
            return match parse_err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{parse_err}");
                    0
                }
                _ => {
                    let _ = write!(err, "{parse_err}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(error) => {
            let _ = writeln!(err, "error: {error}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::CheckUseful(args) => {
            let (game, law) = load_game_and_law(&args)?;
            verdict(out, "useful", law_design::is_useful_law(&game, &law)?)
        }
        Command::CheckMinimalUseful(args) => {
            let (game, law) = load_game_and_law(&args)?;
            verdict(
                out,
                "minimal-useful",
                law_design::is_minimal_useful_law(&game, &law)?,
            )
        }
        Command::CheckGapfree(args) => {
            let (game, law) = load_game_and_law(&args)?;
            verdict(out, "gap-free", law_design::is_gap_free_law(&game, &law)?)
        }
        Command::CheckMinimalGapfree(args) => {
            let (game, law) = load_game_and_law(&args)?;
            verdict(
                out,
                "minimal-gap-free",
                law_design::is_minimal_gap_free_law(&game, &law)?,
            )
        }
        Command::ReduceUseful(args) => {
            let (game, law) = load_game_and_law(&args.target)?;
            let result = law_design::approx_min_useful_reduction(&game, &law)?;
            let exact_size = if args.exact {
                exact_size_or_note(out, &args.budget, || {
                    exact::exact_min_useful_reduction(&game, &law, &budget_from(&args.budget))
                        .map(|l| l.len())
                })?
            } else {
                None
            };
            report_reduction(out, &result, exact_size, args.out.as_deref())
        }
        Command::ReduceGapfree(args) => {
            let (game, law) = load_game_and_law(&args.target)?;
            let result = law_design::approx_min_gap_free_reduction(&game, &law)?;
            let exact_size = if args.exact {
                exact_size_or_note(out, &args.budget, || {
                    exact::exact_min_gap_free_reduction(&game, &law, &budget_from(&args.budget))
                        .map(|l| l.len())
                })?
            } else {
                None
            };
            report_reduction(out, &result, exact_size, args.out.as_deref())
        }
        Command::Attribute { target, profile } => {
            let (game, law) = load_game_and_law(&target)?;
            let profile = read_profile_arg(&profile)?;
            let verdict = game.attribute_responsibility(&law, &profile)?;
            for (agent, responsibility) in verdict.iter() {
                writeln!(out, "{agent}: {}", responsibility.label())?;
            }
            Ok(0)
        }
        Command::Convert { mode } => match mode {
            ConvertMode::GameToGraph { game, out: path } => {
                let game = io::load_game(game)?;
                emit(
                    out,
                    io::graph_to_json(&reductions::game_to_graph(&game)),
                    path,
                )
            }
            ConvertMode::GraphToGame { graph, out: path } => {
                let graph = io::load_graph(graph)?;
                emit(
                    out,
                    io::game_to_json(&reductions::graph_to_game(&graph)),
                    path,
                )
            }
            ConvertMode::GameToGapfree { game, out: path } => {
                let game = io::load_game(game)?;
                let extended =
                    reductions::useful_to_gapfree_game(&game, &reductions::FreshNames::default())?;
                emit(out, io::game_to_json(&extended), path)
            }
        },
        Command::Generate {
            kind,
            seed,
            agents,
            actions,
            prohibitions,
            vertices,
            edges,
            rank,
            out: path,
        } => {
            let kind = match kind {
                KindArg::RandomGame => GeneratorKind::RandomGame {
                    agents,
                    actions_per_agent: actions,
                    prohibitions,
                },
                KindArg::RandomGraph => GeneratorKind::RandomGraph {
                    vertices,
                    edges,
                    rank,
                },
                KindArg::Factory => GeneratorKind::Factory,
                KindArg::MatchingPennies => GeneratorKind::MatchingPennies,
                KindArg::GraphGadget => GeneratorKind::GraphGadget {
                    vertices,
                    edges,
                    rank,
                },
                KindArg::GapfreeGadget => GeneratorKind::GapfreeGadget {
                    agents,
                    actions_per_agent: actions,
                    prohibitions,
                },
            };
            let document = match generate(&GeneratorSpec { seed, kind })? {
                Generated::Game(game) => io::game_to_json(&game),
                Generated::Graph(graph) => io::graph_to_json(&graph),
            };
            emit(out, document, path)
        }
        Command::Exact { problem } => match problem {
            ExactProblem::MinVertexCover { graph, budget } => {
                let graph = io::load_graph(graph)?;
                let cover = exact::exact_min_vertex_cover(&graph, &budget_from(&budget))?;
                report_exact_set(out, &cover)
            }
            ExactProblem::MinUsefulReduction { target, budget } => {
                let (game, law) = load_game_and_law(&target)?;
                let minimum =
                    exact::exact_min_useful_reduction(&game, &law, &budget_from(&budget))?;
                report_exact_set(out, minimum.banned())
            }
            ExactProblem::MinGapfreeReduction { target, budget } => {
                let (game, law) = load_game_and_law(&target)?;
                let minimum =
                    exact::exact_min_gap_free_reduction(&game, &law, &budget_from(&budget))?;
                report_exact_set(out, minimum.banned())
            }
        },
    }
}

fn load_game_and_law(args: &GameLawArgs) -> Result<(Game, Law)> {
    let game = io::load_game(&args.game)?;
    let law = read_law_arg(&args.law)?;
    Ok((game, law))
}

fn read_law_arg(arg: &str) -> Result<Law> {
    if arg.trim_start().starts_with('{') {
        io::law_from_json(arg)
    } else {
        io::load_law(arg)
    }
}

fn read_profile_arg(arg: &str) -> Result<Profile> {
    if arg.trim_start().starts_with('{') {
        io::profile_from_json(arg)
    } else {
        io::load_profile(arg)
    }
}

fn verdict(out: &mut dyn Write, name: &str, holds: bool) -> Result<i32> {
    writeln!(out, "{name}: {holds}")?;
    Ok(if holds { 0 } else { 1 })
}

/// Resolution order for the wall-clock cutoff: the flag, then the
/// environment variable, then the default.
fn budget_from(args: &BudgetArgs) -> exact::SearchBudget {
    let mut budget = exact::SearchBudget::default();
    if let Some(max_universe) = args.max_universe {
        budget.max_universe = max_universe;
    }
    let env_millis = std::env::var(BUDGET_ENV_VAR)
        .ok()
        .and_then(|raw| raw.parse::<u64>().ok());
    if let Some(max_millis) = args.max_millis.or(env_millis) {
        budget.max_millis = max_millis;
    }
    budget
}

/// Runs the exact oracle for a reduction report; a blown budget becomes a
/// note instead of a failure, because the reduction itself already succeeded.
fn exact_size_or_note(
    out: &mut dyn Write,
    _budget: &BudgetArgs,
    run: impl FnOnce() -> Result<usize>,
) -> Result<Option<usize>> {
    match run() {
        Ok(size) => Ok(Some(size)),
        Err(Error::BudgetExceeded { detail }) => {
            writeln!(out, "exact: budget exceeded ({detail})")?;
            Ok(None)
        }
        Err(other) => Err(other),
    }
}

fn report_reduction(
    out: &mut dyn Write,
    result: &ReductionResult,
    exact_size: Option<usize>,
    path: Option<&std::path::Path>,
) -> Result<i32> {
    let document = io::law_to_json(&result.law);
    match path {
        Some(path) => std::fs::write(path, &document)?,
        None => write!(out, "{document}")?,
    }
    writeln!(out, "size: {}", result.law.len())?;
    match &result.witness {
        Some(witness) => writeln!(out, "witness: {witness}")?,
        None => writeln!(out, "witness: input-law")?,
    }
    if let Some(exact_size) = exact_size {
        writeln!(out, "exact-minimum: {exact_size}")?;
        let ratio = if exact_size == 0 {
            1.0
        } else {
            result.law.len() as f64 / exact_size as f64
        };
        writeln!(out, "ratio: {ratio:.2}")?;
    }
    Ok(0)
}

fn report_exact_set(out: &mut dyn Write, set: &BTreeSet<ActionId>) -> Result<i32> {
    let law: Law = set.iter().cloned().collect();
    write!(out, "{}", io::law_to_json(&law))?;
    writeln!(out, "size: {}", set.len())?;
    Ok(0)
}

fn emit(out: &mut dyn Write, document: String, path: Option<PathBuf>) -> Result<i32> {
    match path {
        Some(path) => std::fs::write(path, document)?,
        None => write!(out, "{document}")?,
    }
    Ok(0)
}
