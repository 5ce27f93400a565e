//! `kostant`: run games, explore configuration graphs, build automata, compute
//! root sums, classify graphs and list tableaux.
//!
//! Exit status: 0 on success, 1 on a domain error (a diverging game, an
//! invalid play, ...), 2 on a usage error.

use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kostant::automaton::{build_config_dfa, build_dfa};
use kostant::classification::{affine_extension, is_kostant_finite};
use kostant::game::{
    board_from_diagram, board_from_dual, board_from_graph, classic_start, explore, run,
    Configuration, GameBoard, Limits, Mode, Strategy,
};
use kostant::graph::SimpleGraph;
use kostant::report::{
    classify_report, dfa_report, emit_report, explore_report, play_report, rootsum_report,
    tableaux_report, Format,
};
use kostant::rootsystem::{build_diagram, DynkinDiagram, Family};
use kostant::tableaux::{play_to_tableau, tableaux_by_play};
use kostant::weyl::ParabolicSubset;
use kostant_service::ServeOptions;

#[derive(Parser)]
#[command(name = "kostant", version, about = "Kostant game workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Play one game to the end with a fixed strategy.
    Play(PlayArgs),
    /// Explore every configuration reachable from the start.
    Explore(ExploreArgs),
    /// Build the automaton of reduced words of minimal coset representatives.
    Dfa(DfaArgs),
    /// Single-source finals and the positive-root sum.
    Rootsum(RootsumArgs),
    /// Decide whether the classic game on a graph terminates.
    Classify(ClassifyArgs),
    /// Standard tableaux from plays on A_{n-1} with one source.
    Tableaux(TableauxArgs),
    /// Start the HTTP session service.
    Serve(ServeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Ascii,
}

impl From<Emit> for Format {
    fn from(e: Emit) -> Format {
        match e {
            Emit::Json => Format::Json,
            Emit::Dot => Format::Dot,
            Emit::Ascii => Format::Ascii,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyName {
    FirstSad,
    Random,
}

#[derive(Args)]
struct DiagramArgs {
    /// Diagram family: A B C D E F G.
    #[arg(long = "type", value_name = "FAMILY")]
    family: Option<Family>,
    #[arg(long)]
    rank: Option<usize>,
}

impl DiagramArgs {
    fn diagram(&self) -> Result<DynkinDiagram, CliError> {
        match (self.family, self.rank) {
            (Some(f), Some(n)) => Ok(build_diagram(f, n)?),
            _ => Err(CliError::Usage("--type and --rank are both required".into())),
        }
    }
}

#[derive(Args)]
struct BoardArgs {
    #[command(flatten)]
    diagram: DiagramArgs,
    /// Play on the dual diagram instead.
    #[arg(long)]
    dual: bool,
    /// Simple graph file (DOT or JSON) instead of a diagram.
    #[arg(long, conflicts_with_all = ["family", "rank", "dual"])]
    graph: Option<PathBuf>,
    /// Source vertices of the modified game, e.g. 1,2.
    #[arg(long, value_delimiter = ',')]
    sources: Vec<usize>,
    /// Start vertex of the classic game.
    #[arg(long, conflicts_with = "sources")]
    start: Option<usize>,
    #[arg(long)]
    max_chips: Option<i64>,
    #[arg(long)]
    max_states: Option<usize>,
}

impl BoardArgs {
    fn board(&self) -> Result<(GameBoard, Configuration, Limits), CliError> {
        let mode = match (self.sources.is_empty(), self.start) {
            (false, None) => Mode::Modified,
            (true, Some(_)) => Mode::Classic,
            (true, None) => {
                return Err(CliError::Usage(
                    "give --sources for the modified game or --start for the classic game".into(),
                ))
            }
            (false, Some(_)) => unreachable!("clap rejects --sources with --start"),
        };
        let sources = self.sources.iter().copied();
        let board = match &self.graph {
            Some(path) => board_from_graph(&read_graph(path)?, mode, sources)?,
            None if self.dual => board_from_dual(&self.diagram.diagram()?, mode, sources)?,
            None => board_from_diagram(&self.diagram.diagram()?, mode, sources)?,
        };
        let start = match self.start {
            Some(v) => classic_start(&board, v)?,
            None => Configuration::zero(board.rank()),
        };
        let mut limits = Limits::for_board(&board);
        if let Some(c) = self.max_chips {
            limits.max_chips = c;
        }
        if let Some(s) = self.max_states {
            limits.max_states = s;
        }
        Ok((board, start, limits))
    }
}

#[derive(Args)]
struct PlayArgs {
    #[command(flatten)]
    board: BoardArgs,
    #[arg(long, value_enum, default_value = "first-sad")]
    strategy: StrategyName,
    /// Seed of the random strategy.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Args)]
struct ExploreArgs {
    #[command(flatten)]
    board: BoardArgs,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Args)]
struct DfaArgs {
    #[command(flatten)]
    diagram: DiagramArgs,
    /// Parabolic subset J, e.g. 1,3. Empty by default.
    #[arg(long = "J", value_delimiter = ',')]
    parabolic: Vec<usize>,
    /// Automaton reading game moves rather than word letters.
    #[arg(long)]
    moves: bool,
    /// Drop states that cannot reach an accepting state.
    #[arg(long)]
    trim: bool,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Args)]
struct RootsumArgs {
    #[command(flatten)]
    diagram: DiagramArgs,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    diagram: DiagramArgs,
    #[arg(long, conflicts_with_all = ["family", "rank", "edges"])]
    graph: Option<PathBuf>,
    /// Inline edge list, e.g. 1-2,2-3,3-1.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["family", "rank"])]
    edges: Vec<String>,
    /// Classify the affine extension of the diagram instead.
    #[arg(long)]
    affine: bool,
    #[arg(long)]
    max_chips: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Args)]
struct TableauxArgs {
    /// Size of the symmetric group (the board is A_{n-1}).
    #[arg(long)]
    n: usize,
    /// The source vertex.
    #[arg(long)]
    k: usize,
    /// A single play instead of every complete play.
    #[arg(long, value_delimiter = ',')]
    moves: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    host: std::net::IpAddr,
    /// Load sessions from this file at start and save them on shutdown.
    #[arg(long)]
    snapshot: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(kostant::Error),
    Io(String),
}

impl From<kostant::Error> for CliError {
    fn from(e: kostant::Error) -> Self {
        match e {
            kostant::Error::UnsupportedFormat { .. } => CliError::Usage(e.to_string()),
            other => CliError::Domain(other),
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<SimpleGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(|e| CliError::Domain(kostant::Error::Parse(e.to_string())))
    } else {
        Ok(SimpleGraph::parse_dot(&text)?)
    }
}

fn parse_edges(items: &[String]) -> Result<SimpleGraph, CliError> {
    let mut edges = Vec::new();
    for item in items {
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| CliError::Usage(format!("edge {item:?} is not of the form a-b")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad vertex {s:?}")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    Ok(SimpleGraph::new(n, edges)?)
}

fn execute(cmd: Command) -> Result<String, CliError> {
    match cmd {
        Command::Play(a) => {
            let (board, start, limits) = a.board.board()?;
            let strategy = match (a.strategy, a.seed) {
                (StrategyName::FirstSad, _) => Strategy::FirstSad,
                (StrategyName::Random, Some(seed)) => Strategy::Random(seed),
                (StrategyName::Random, None) => {
                    return Err(CliError::Usage("--strategy random needs --seed".into()))
                }
            };
            let trace = run(&board, &start, strategy, limits)?;
            Ok(emit_report(&play_report(&trace)?, a.emit.into())?)
        }
        Command::Explore(a) => {
            let (board, start, limits) = a.board.board()?;
            let graph = explore(&board, &start, limits)?;
            Ok(emit_report(&explore_report(&graph)?, a.emit.into())?)
        }
        Command::Dfa(a) => {
            let d = a.diagram.diagram()?;
            let j = ParabolicSubset::new(a.parabolic, d.rank())?;
            let dfa = if a.moves { build_config_dfa(&d, &j)? } else { build_dfa(&d, &j)? };
            let dfa = if a.trim { dfa.trimmed() } else { dfa };
            Ok(emit_report(&dfa_report(&dfa)?, a.emit.into())?)
        }
        Command::Rootsum(a) => {
            let d = a.diagram.diagram()?;
            Ok(emit_report(&rootsum_report(&d)?, a.emit.into())?)
        }
        Command::Classify(a) => {
            let graph = if let Some(path) = &a.graph {
                read_graph(path)?
            } else if !a.edges.is_empty() {
                parse_edges(&a.edges)?
            } else if a.affine {
                affine_extension(&a.diagram.diagram()?)?.graph
            } else {
                SimpleGraph::from_diagram(&a.diagram.diagram()?)
            };
            let limits = a.max_chips.map(|max_chips| Limits {
                max_states: Limits::DEFAULT_STATES,
                max_chips,
            });
            let verdict = is_kostant_finite(&graph, limits)?;
            Ok(emit_report(&classify_report(&graph, &verdict)?, a.emit.into())?)
        }
        Command::Tableaux(a) => {
            let pairs = match a.moves {
                Some(moves) => {
                    let t = play_to_tableau(&moves, a.k, a.n)?;
                    vec![(moves, t)]
                }
                None => tableaux_by_play(a.n, a.k)?,
            };
            Ok(emit_report(&tableaux_report(a.n, a.k, &pairs)?, a.emit.into())?)
        }
        Command::Serve(a) => {
            let opts = ServeOptions {
                addr: SocketAddr::new(a.host, a.port),
                snapshot: a.snapshot,
            };
            eprintln!("listening on http://{}", opts.addr);
            kostant_service::serve_blocking(opts).map_err(|e| CliError::Io(e.to_string()))?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("see `kostant --help`");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
