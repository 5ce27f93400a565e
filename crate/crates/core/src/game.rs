//! The Kostant game: classic, multiply-laced and multi-source variants.
//!
//! A vertex `v` is Sad when `2 c_v < sum_u n(v, u) c_u + [v in I]`, and firing it
//! sets `c_v <- -c_v + sum_u n(v, u) c_u + [v in I]`. Sources are not part of
//! the chip vector; they only contribute the constant `[v in I]`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::rootsystem::{dual, positive_roots, DynkinDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Classic,
    Modified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoardShape {
    Diagram(DynkinDiagram),
    Graph(SimpleGraph),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameBoard {
    shape: BoardShape,
    rank: usize,
    arrows: Vec<i64>,
    sources: BTreeSet<usize>,
    mode: Mode,
}

#[derive(Serialize, Deserialize)]
struct BoardJson {
    #[serde(flatten)]
    shape: BoardShape,
    mode: Mode,
    sources: Vec<usize>,
}

impl Serialize for GameBoard {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BoardJson {
            shape: self.shape.clone(),
            mode: self.mode,
            sources: self.sources.iter().copied().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GameBoard {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BoardJson::deserialize(d)?;
        let board = match &raw.shape {
            BoardShape::Diagram(dg) => board_from_diagram(dg, raw.mode, raw.sources),
            BoardShape::Graph(g) => board_from_graph(g, raw.mode, raw.sources),
        };
        board.map_err(serde::de::Error::custom)
    }
}

fn build_board(
    shape: BoardShape,
    rank: usize,
    arrows: Vec<i64>,
    mode: Mode,
    sources: impl IntoIterator<Item = usize>,
) -> Result<GameBoard> {
    let sources: BTreeSet<usize> = sources.into_iter().collect();
    if let Some(&vertex) = sources.iter().find(|&&v| v == 0 || v > rank) {
        return Err(Error::IndexOutOfRange { vertex, rank });
    }
    if mode == Mode::Classic && !sources.is_empty() {
        return Err(Error::ModeMismatch("classic boards carry no sources".into()));
    }
    Ok(GameBoard {
        shape,
        rank,
        arrows,
        sources,
        mode,
    })
}

/// Board whose arrow counts are those of `d`.
pub fn board_from_diagram(
    d: &DynkinDiagram,
    mode: Mode,
    sources: impl IntoIterator<Item = usize>,
) -> Result<GameBoard> {
    let r = d.rank();
    let arrows = (0..r * r).map(|k| d.arrows(k / r + 1, k % r + 1)).collect();
    build_board(BoardShape::Diagram(d.clone()), r, arrows, mode, sources)
}

/// Board on the dual diagram (all arrows reversed).
pub fn board_from_dual(
    d: &DynkinDiagram,
    mode: Mode,
    sources: impl IntoIterator<Item = usize>,
) -> Result<GameBoard> {
    board_from_diagram(&dual(d), mode, sources)
}

/// Board on an arbitrary simple graph, every edge carrying one arrow each way.
pub fn board_from_graph(
    g: &SimpleGraph,
    mode: Mode,
    sources: impl IntoIterator<Item = usize>,
) -> Result<GameBoard> {
    let r = g.vertex_count();
    let mut arrows = vec![0; r * r];
    for (a, b) in g.edges() {
        arrows[(a - 1) * r + (b - 1)] = 1;
        arrows[(b - 1) * r + (a - 1)] = 1;
    }
    build_board(BoardShape::Graph(g.clone()), r, arrows, mode, sources)
}

impl GameBoard {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn shape(&self) -> &BoardShape {
        &self.shape
    }

    pub fn diagram(&self) -> Option<&DynkinDiagram> {
        match &self.shape {
            BoardShape::Diagram(d) => Some(d),
            BoardShape::Graph(_) => None,
        }
    }

    pub fn sources(&self) -> &BTreeSet<usize> {
        &self.sources
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.sources.contains(&v)
    }

    /// `n(v, u)`, arrows from `u` to `v`.
    pub fn arrows(&self, v: usize, u: usize) -> i64 {
        self.arrows[(v - 1) * self.rank + (u - 1)]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.vertices()
            .filter(|&u| u != v && self.arrows(v, u) > 0)
            .collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.rank {
            Err(Error::IndexOutOfRange {
                vertex: v,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    fn check_config(&self, c: &Configuration) -> Result<()> {
        if c.0.len() != self.rank {
            return Err(Error::ShapeMismatch {
                got: c.0.len(),
                rank: self.rank,
            });
        }
        match c.0.iter().position(|&x| x < 0) {
            Some(k) => Err(Error::NegativeChips(k + 1)),
            None => Ok(()),
        }
    }

    /// `sum_u n(v, u) c_u + [v in I]`.
    fn pressure(&self, chips: &[i64], v: usize) -> i64 {
        let row = &self.arrows[(v - 1) * self.rank..v * self.rank];
        let sum = crate::rootsystem::checked_dot(row, chips);
        sum.checked_add(i64::from(self.is_source(v)))
            .expect("integer overflow")
    }

    /// Raw update at `v`, with no status check.
    pub(crate) fn reflect_raw(&self, chips: &[i64], v: usize) -> Vec<i64> {
        let mut out = chips.to_vec();
        out[v - 1] = self
            .pressure(chips, v)
            .checked_sub(chips[v - 1])
            .expect("integer overflow");
        out
    }

    /// Positive-root count and maximal root height of the diagram, when the
    /// board has one.
    pub fn root_data(&self) -> Option<(usize, i64)> {
        self.diagram().map(|d| {
            let roots = positive_roots(d);
            let top = roots.iter().map(|r| r.height()).max().unwrap_or(0);
            (roots.len(), top)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Configuration(pub Vec<i64>);

impl Configuration {
    pub fn zero(rank: usize) -> Self {
        Configuration(vec![0; rank])
    }

    pub fn chips(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn get(&self, v: usize) -> i64 {
        self.0[v - 1]
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexStatus {
    Happy,
    Sad,
    Excited,
}

impl fmt::Display for VertexStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexStatus::Happy => "happy",
            VertexStatus::Sad => "sad",
            VertexStatus::Excited => "excited",
        };
        f.write_str(s)
    }
}

pub fn status(board: &GameBoard, c: &Configuration, v: usize) -> Result<VertexStatus> {
    board.check_vertex(v)?;
    board.check_config(c)?;
    Ok(status_of(board, c, v))
}

fn status_of(board: &GameBoard, c: &Configuration, v: usize) -> VertexStatus {
    let twice = 2 * c.0[v - 1];
    let pressure = board.pressure(&c.0, v);
    match twice.cmp(&pressure) {
        std::cmp::Ordering::Less => VertexStatus::Sad,
        std::cmp::Ordering::Equal => VertexStatus::Happy,
        std::cmp::Ordering::Greater => VertexStatus::Excited,
    }
}

pub fn statuses(board: &GameBoard, c: &Configuration) -> Result<Vec<VertexStatus>> {
    board.check_config(c)?;
    Ok(board.vertices().map(|v| status_of(board, c, v)).collect())
}

/// Sad vertices in increasing order.
pub fn legal_moves(board: &GameBoard, c: &Configuration) -> Result<Vec<usize>> {
    board.check_config(c)?;
    Ok(sad_vertices(board, c))
}

fn sad_vertices(board: &GameBoard, c: &Configuration) -> Vec<usize> {
    board
        .vertices()
        .filter(|&v| status_of(board, c, v) == VertexStatus::Sad)
        .collect()
}

pub fn is_terminal(board: &GameBoard, c: &Configuration) -> Result<bool> {
    Ok(legal_moves(board, c)?.is_empty())
}

pub fn fire(board: &GameBoard, c: &Configuration, v: usize) -> Result<Configuration> {
    let st = status(board, c, v)?;
    if st != VertexStatus::Sad {
        return Err(Error::IllegalMove { vertex: v, status: st });
    }
    Ok(Configuration(board.reflect_raw(&c.0, v)))
}

/// Change in total chips caused by firing `v`: `-2 c_v + sum_u n(v, u) c_u + [v in I]`.
pub fn chip_gain(board: &GameBoard, c: &Configuration, v: usize) -> i64 {
    board.pressure(&c.0, v) - 2 * c.0[v - 1]
}

pub fn classic_start(board: &GameBoard, v0: usize) -> Result<Configuration> {
    if board.mode() != Mode::Classic {
        return Err(Error::ModeMismatch(
            "a start chip only applies to classic boards".into(),
        ));
    }
    board.check_vertex(v0)?;
    let mut c = Configuration::zero(board.rank());
    c.0[v0 - 1] = 1;
    Ok(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    StepLimit,
    ChipBound,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::StepLimit => f.write_str("step-limit"),
            Bound::ChipBound => f.write_str("chip-bound"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_states: usize,
    pub max_chips: i64,
}

impl Limits {
    pub const FALLBACK_CHIPS: i64 = 1_000_000;
    pub const DEFAULT_STATES: usize = 1_000_000;

    /// Chip bound `4 |positive roots|` for classic diagram boards, scaled by
    /// `|I| * (highest root height)` for modified ones; `10^6` for graphs.
    pub fn for_board(board: &GameBoard) -> Self {
        let max_chips = board.root_data().map_or(Self::FALLBACK_CHIPS, |(count, top)| {
            let scale = match board.mode() {
                Mode::Classic => 1,
                Mode::Modified => (board.sources().len() as i64 * top).max(1),
            };
            4 * count as i64 * scale
        });
        Limits {
            max_states: Self::DEFAULT_STATES,
            max_chips,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    FirstSad,
    Random(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameTrace {
    pub board: GameBoard,
    pub start: Configuration,
    pub moves: Vec<usize>,
    pub states: Vec<Configuration>,
}

impl GameTrace {
    pub fn new(board: GameBoard, start: Configuration) -> Self {
        GameTrace {
            board,
            states: vec![start.clone()],
            start,
            moves: Vec::new(),
        }
    }

    pub fn current(&self) -> &Configuration {
        self.states.last().expect("trace holds its start state")
    }

    pub fn is_terminal(&self) -> bool {
        sad_vertices(&self.board, self.current()).is_empty()
    }

    pub fn push(&mut self, v: usize) -> Result<&Configuration> {
        let next = fire(&self.board, self.current(), v)?;
        self.moves.push(v);
        self.states.push(next);
        Ok(self.current())
    }

    pub fn pop(&mut self) -> Option<usize> {
        let v = self.moves.pop()?;
        self.states.pop();
        Some(v)
    }

    /// Replay `moves` from `start`.
    pub fn replay(board: &GameBoard, start: &Configuration, moves: &[usize]) -> Result<GameTrace> {
        board.check_config(start)?;
        let mut trace = GameTrace::new(board.clone(), start.clone());
        for &v in moves {
            trace.push(v)?;
        }
        Ok(trace)
    }
}

pub fn run(
    board: &GameBoard,
    start: &Configuration,
    strategy: Strategy,
    limits: Limits,
) -> Result<GameTrace> {
    match strategy {
        Strategy::FirstSad => run_with(board, start, limits, |_, sad| sad[0]),
        Strategy::Random(seed) => {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
            run_with(board, start, limits, move |_, sad| {
                sad[rng.random_range(0..sad.len())]
            })
        }
    }
}

/// Play until no vertex is Sad, asking `choose` for each move among the Sad
/// vertices (given in increasing order).
pub fn run_with<F>(
    board: &GameBoard,
    start: &Configuration,
    limits: Limits,
    mut choose: F,
) -> Result<GameTrace>
where
    F: FnMut(&Configuration, &[usize]) -> usize,
{
    board.check_config(start)?;
    let mut trace = GameTrace::new(board.clone(), start.clone());
    loop {
        let sad = sad_vertices(board, trace.current());
        if sad.is_empty() {
            return Ok(trace);
        }
        if trace.moves.len() >= limits.max_states {
            return Err(Error::Diverged {
                bound: Bound::StepLimit,
                steps: trace.moves.len(),
            });
        }
        let v = choose(trace.current(), &sad);
        trace.push(v)?;
        if trace.current().total() > limits.max_chips {
            return Err(Error::Diverged {
                bound: Bound::ChipBound,
                steps: trace.moves.len(),
            });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEdge {
    pub from: usize,
    pub vertex: usize,
    pub to: usize,
}

/// Reachable configurations; node 0 is the start.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationGraph {
    pub nodes: Vec<Configuration>,
    pub edges: Vec<ConfigEdge>,
    pub terminal: Vec<bool>,
    pub complete: bool,
}

impl ConfigurationGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn initial(&self) -> &Configuration {
        &self.nodes[0]
    }

    pub fn sinks(&self) -> Vec<&Configuration> {
        self.nodes
            .iter()
            .zip(&self.terminal)
            .filter(|(_, &t)| t)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph configurations {\n");
        for (k, c) in self.nodes.iter().enumerate() {
            let shape = if self.terminal[k] { ", shape=doublecircle" } else { "" };
            let _ = writeln!(out, "  n{k} [label=\"{c}\"{shape}];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.vertex);
        }
        out.push_str("}\n");
        out
    }
}

pub fn explore(board: &GameBoard, start: &Configuration, limits: Limits) -> Result<ConfigurationGraph> {
    board.check_config(start)?;
    let mut graph = ConfigurationGraph {
        nodes: vec![start.clone()],
        edges: Vec::new(),
        terminal: Vec::new(),
        complete: false,
    };
    let mut index: HashMap<Configuration, usize> = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut exceeded = None;
    while let Some(k) = queue.pop_front() {
        let c = graph.nodes[k].clone();
        let sad = sad_vertices(board, &c);
        graph.terminal.push(sad.is_empty());
        for v in sad {
            let next = Configuration(board.reflect_raw(&c.0, v));
            let to = match index.get(&next) {
                Some(&to) => to,
                None => {
                    if next.total() > limits.max_chips {
                        exceeded = Some(Bound::ChipBound);
                        break;
                    }
                    if graph.nodes.len() >= limits.max_states {
                        exceeded = Some(Bound::StepLimit);
                        break;
                    }
                    let to = graph.nodes.len();
                    index.insert(next.clone(), to);
                    graph.nodes.push(next);
                    queue.push_back(to);
                    to
                }
            };
            graph.edges.push(ConfigEdge { from: k, vertex: v, to });
        }
        if let Some(bound) = exceeded {
            // nodes not yet expanded are not known to be terminal
            graph.terminal.resize(graph.nodes.len(), false);
            return Err(Error::LimitExceeded {
                bound,
                partial: Box::new(graph),
            });
        }
    }
    graph.complete = true;
    Ok(graph)
}

/// Checks the commutation or braid identity between the raw updates at `i`
/// and `j`, ignoring status. The braid length follows the bond:
/// 2 (no bond), 3 (single), 4 (double), 6 (triple).
pub fn check_local_confluence(board: &GameBoard, c: &Configuration, i: usize, j: usize) -> Result<bool> {
    board.check_vertex(i)?;
    board.check_vertex(j)?;
    if c.0.len() != board.rank() {
        return Err(Error::ShapeMismatch {
            got: c.0.len(),
            rank: board.rank(),
        });
    }
    if i == j {
        return Err(Error::InvalidGraph("local confluence needs two distinct vertices".into()));
    }
    let m = match board.arrows(i, j) * board.arrows(j, i) {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => 6,
    };
    let alternate = |first: usize, second: usize| {
        (0..m).fold(c.0.clone(), |acc, k| {
            board.reflect_raw(&acc, if k % 2 == 0 { first } else { second })
        })
    };
    Ok(alternate(i, j) == alternate(j, i))
}
