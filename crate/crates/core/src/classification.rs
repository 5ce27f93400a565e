//! Kostant finiteness of simple graphs, by forbidden-subgraph certificates
//! and by bounded simulation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{
    board_from_diagram, board_from_graph, classic_start, explore, run, statuses, Bound,
    Configuration, GameBoard, Limits, Mode, Strategy, VertexStatus,
};
pub use crate::graph::SimpleGraph;
use crate::graph::invariant_key;
use crate::rootsystem::{DynkinDiagram, Family};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Cycle { vertices: Vec<usize> },
    HighDegree { vertex: usize },
    TwoBranchPoints { first: usize, second: usize },
    ArmInequality { p: usize, q: usize, r: usize },
    AffineSubgraph { name: String },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Cycle { vertices } => write!(f, "cycle through {vertices:?}"),
            Certificate::HighDegree { vertex } => write!(f, "vertex {vertex} has degree >= 4"),
            Certificate::TwoBranchPoints { first, second } => {
                write!(f, "branch points at {first} and {second}")
            }
            Certificate::ArmInequality { p, q, r } => {
                write!(f, "arms ({p},{q},{r}) fail 1/(p+1)+1/(q+1)+1/(r+1) > 1")
            }
            Certificate::AffineSubgraph { name } => write!(f, "contains {name}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum FinitenessVerdict {
    Finite { final_config: Configuration },
    Infinite { certificate: Certificate },
    Unknown { bound: Bound },
}

impl FinitenessVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, FinitenessVerdict::Finite { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, FinitenessVerdict::Infinite { .. })
    }
}

fn require_connected(g: &SimpleGraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// First obstruction found among: a cycle, a vertex of degree at least 4, two
/// branch points, or three arms failing `1/(p+1) + 1/(q+1) + 1/(r+1) > 1`.
/// `None` means the graph is a path or a star with admissible arms.
pub fn certificate(g: &SimpleGraph) -> Result<Option<Certificate>> {
    require_connected(g)?;
    let n = g.vertex_count();
    if g.edge_count() >= n {
        return Ok(Some(Certificate::Cycle {
            vertices: find_cycle(g),
        }));
    }
    if let Some(vertex) = (1..=n).find(|&v| g.degree(v) >= 4) {
        return Ok(Some(Certificate::HighDegree { vertex }));
    }
    let branches: Vec<usize> = (1..=n).filter(|&v| g.degree(v) == 3).collect();
    if branches.len() >= 2 {
        return Ok(Some(Certificate::TwoBranchPoints {
            first: branches[0],
            second: branches[1],
        }));
    }
    if let [centre] = branches[..] {
        let mut arms: Vec<usize> = g
            .neighbors(centre)
            .into_iter()
            .map(|start| arm_length(g, centre, start))
            .collect();
        arms.sort_unstable();
        let (p, q, r) = (arms[0], arms[1], arms[2]);
        let (a, b, c) = (p as u64 + 1, q as u64 + 1, r as u64 + 1);
        if b * c + a * c + a * b <= a * b * c {
            return Ok(Some(Certificate::ArmInequality { p, q, r }));
        }
    }
    Ok(None)
}

// number of vertices on the arm leaving `centre` through `start`
fn arm_length(g: &SimpleGraph, centre: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, start, 1);
    loop {
        let next: Vec<usize> = g.neighbors(cur).into_iter().filter(|&u| u != prev).collect();
        match next[..] {
            [u] => {
                prev = cur;
                cur = u;
                len += 1;
            }
            _ => return len,
        }
    }
}

fn find_cycle(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![0usize; n + 1];
    let mut depth = vec![usize::MAX; n + 1];
    let mut stack = vec![(1usize, 0usize)];
    while let Some((v, from)) = stack.pop() {
        if depth[v] != usize::MAX {
            continue;
        }
        parent[v] = from;
        depth[v] = if from == 0 { 0 } else { depth[from] + 1 };
        for u in g.neighbors(v) {
            if u == from {
                continue;
            }
            if depth[u] != usize::MAX {
                // back edge v-u closes a cycle
                let (mut a, mut b) = (v, u);
                let (mut left, mut right) = (vec![a], vec![b]);
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                return left;
            }
            stack.push((u, v));
        }
    }
    Vec::new()
}

/// Largest positive-root count among simply-laced finite types of rank `n`.
pub fn max_simply_laced_roots(n: usize) -> usize {
    let mut best = n * (n + 1) / 2;
    if n >= 4 {
        best = best.max(n * (n - 1));
    }
    match n {
        6 => best.max(36),
        7 => best.max(63),
        8 => best.max(120),
        _ => best,
    }
}

/// Chip bound `4 * max_simply_laced_roots(n)` for an `n`-vertex graph.
pub fn classification_limits(g: &SimpleGraph) -> Limits {
    Limits {
        max_states: Limits::DEFAULT_STATES,
        max_chips: 4 * max_simply_laced_roots(g.vertex_count()) as i64,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum SimulationOutcome {
    Terminated { sinks: Vec<Configuration> },
    Diverged { bound: Bound },
}

/// Classic game from a chip on vertex 1. A first-sad run decides
/// termination; if it terminates, the full configuration graph is explored
/// and its sinks returned.
pub fn simulate(board: &GameBoard, limits: Limits) -> Result<SimulationOutcome> {
    let start = classic_start(board, 1)?;
    match run(board, &start, Strategy::FirstSad, limits) {
        Ok(_) => {}
        Err(Error::Diverged { bound, .. }) => return Ok(SimulationOutcome::Diverged { bound }),
        Err(e) => return Err(e),
    }
    match explore(board, &start, limits) {
        Ok(graph) => Ok(SimulationOutcome::Terminated {
            sinks: graph.sinks().into_iter().cloned().collect(),
        }),
        Err(Error::LimitExceeded { bound, .. }) => Ok(SimulationOutcome::Diverged { bound }),
        Err(e) => Err(e),
    }
}

pub fn simulate_graph(g: &SimpleGraph, limits: Option<Limits>) -> Result<SimulationOutcome> {
    require_connected(g)?;
    let board = board_from_graph(g, Mode::Classic, [])?;
    simulate(&board, limits.unwrap_or_else(|| classification_limits(g)))
}

/// Certificate first; otherwise bounded simulation, which must end in a
/// single sink for a finite verdict.
pub fn is_kostant_finite(g: &SimpleGraph, limits: Option<Limits>) -> Result<FinitenessVerdict> {
    if let Some(certificate) = certificate(g)? {
        return Ok(FinitenessVerdict::Infinite { certificate });
    }
    Ok(verdict_from(simulate_graph(g, limits)?))
}

fn verdict_from(outcome: SimulationOutcome) -> FinitenessVerdict {
    match outcome {
        SimulationOutcome::Terminated { mut sinks } if sinks.len() == 1 => FinitenessVerdict::Finite {
            final_config: sinks.remove(0),
        },
        SimulationOutcome::Terminated { .. } => FinitenessVerdict::Unknown {
            bound: Bound::StepLimit,
        },
        SimulationOutcome::Diverged { bound } => FinitenessVerdict::Unknown { bound },
    }
}

/// Bounded simulation of the classic game on a diagram board, including
/// multiply-laced ones. Finite diagrams may end in two sinks; the verdict
/// reports the first.
pub fn classify_diagram_board(d: &DynkinDiagram, limits: Option<Limits>) -> Result<SimulationOutcome> {
    let board = board_from_diagram(d, Mode::Classic, [])?;
    simulate(&board, limits.unwrap_or_else(|| Limits::for_board(&board)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineExtension {
    pub graph: SimpleGraph,
    /// Set for `A_1`, whose extension should carry a double edge that a
    /// simple graph cannot hold.
    pub doubled_edge: bool,
    pub excited: Vec<usize>,
}

/// Join a new vertex to the Excited vertices of the classic final
/// configuration.
pub fn affine_extension(d: &DynkinDiagram) -> Result<AffineExtension> {
    if !d.is_simply_laced() {
        return Err(Error::NotSimplyLaced(d.name()));
    }
    let board = board_from_diagram(d, Mode::Classic, [])?;
    let start = classic_start(&board, 1)?;
    let trace = match run(&board, &start, Strategy::FirstSad, Limits::for_board(&board)) {
        Ok(t) => t,
        Err(Error::Diverged { .. }) => return Err(Error::NonTerminating),
        Err(e) => return Err(e),
    };
    let excited: Vec<usize> = statuses(&board, trace.current())?
        .into_iter()
        .enumerate()
        .filter(|(_, s)| *s == VertexStatus::Excited)
        .map(|(k, _)| k + 1)
        .collect();
    Ok(AffineExtension {
        graph: SimpleGraph::from_diagram(d).with_apex(&excited),
        doubled_edge: d.rank() == 1,
        excited,
    })
}

/// Simply-laced affine diagrams as graphs: `A~_n` (`n >= 2`), `D~_n`
/// (`n >= 4`), `E~_6`, `E~_7`, `E~_8`. The graph has `n + 1` vertices.
pub fn affine_graph(family: Family, n: usize) -> Result<SimpleGraph> {
    let bad = || Error::IllegalRank {
        family: format!("{family}~"),
        rank: n,
    };
    match family {
        Family::A if n >= 2 => Ok(SimpleGraph::cycle(n + 1)),
        Family::D if n == 4 => Ok(SimpleGraph::star(&[1, 1, 1, 1])),
        Family::D if n > 4 => {
            // path 1..n-1 with an extra leaf at each end's neighbour
            let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|k| (k, k + 1)).collect();
            edges.push((2, n));
            edges.push((n - 2, n + 1));
            SimpleGraph::new(n + 1, edges)
        }
        Family::E if n == 6 => Ok(SimpleGraph::star(&[2, 2, 2])),
        Family::E if n == 7 => Ok(SimpleGraph::star(&[1, 3, 3])),
        Family::E if n == 8 => Ok(SimpleGraph::star(&[1, 2, 5])),
        _ => Err(bad()),
    }
}

/// Every connected graph on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![SimpleGraph::path(1)];
    for size in 2..=n {
        let mut buckets: HashMap<_, Vec<SimpleGraph>> = HashMap::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << (size - 1)) {
                let attach: Vec<usize> = (1..size).filter(|v| mask & (1 << (v - 1)) != 0).collect();
                let candidate = g.with_apex(&attach);
                let bucket = buckets.entry(invariant_key(&candidate)).or_default();
                if bucket.iter().all(|h| !h.is_isomorphic(&candidate)) {
                    bucket.push(candidate.clone());
                    next.push(candidate);
                }
            }
        }
        level = next;
    }
    let unique: BTreeSet<SimpleGraph> = level.into_iter().collect();
    unique.into_iter().collect()
}
