//! Game sessions and the views derived from them. All game logic comes from
//! the library; this layer only stores traces.

use std::collections::BTreeSet;
use std::time::{SystemTime, UNIX_EPOCH};

use kostant::automaton::{build_dfa, export_dot, export_json};
use kostant::correspondence::word_of_play;
use kostant::game::{
    board_from_diagram, classic_start, legal_moves, statuses, Configuration, GameBoard, GameTrace,
    Mode,
};
use kostant::rootsystem::{build_diagram, DynkinDiagram, Family, RootSystem};
use kostant::tableaux::{grassmannian_shape, play_to_tableau};
use kostant::weyl::{ParabolicSubset, WeylElement};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::ServiceError;

fn default_mode() -> Mode {
    Mode::Modified
}

/// Body of `POST /sessions`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionSpec {
    pub family: Family,
    pub rank: usize,
    #[serde(default)]
    pub sources: Vec<usize>,
    #[serde(default = "default_mode")]
    pub mode: Mode,
    /// Start vertex of a classic game.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<usize>,
}

impl SessionSpec {
    fn diagram(&self) -> Result<DynkinDiagram, ServiceError> {
        Ok(build_diagram(self.family, self.rank)?)
    }

    fn board(&self) -> Result<(GameBoard, Configuration), ServiceError> {
        let d = self.diagram()?;
        let board = board_from_diagram(&d, self.mode, self.sources.iter().copied())?;
        let start = match (self.mode, self.start) {
            (Mode::Classic, Some(v)) => classic_start(&board, v)?,
            (Mode::Classic, None) => {
                return Err(ServiceError::BadRequest("a classic game needs a start vertex".into()))
            }
            (Mode::Modified, None) => Configuration::zero(d.rank()),
            (Mode::Modified, Some(_)) => {
                return Err(ServiceError::BadRequest("a modified game starts from zero chips".into()))
            }
        };
        Ok((board, start))
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

#[derive(Debug, Clone)]
pub struct Session {
    pub id: String,
    pub spec: SessionSpec,
    trace: GameTrace,
    diagram: DynkinDiagram,
    pub created: u64,
    pub updated: u64,
}

/// What a snapshot keeps of a session: enough to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionRecord {
    pub id: String,
    pub spec: SessionSpec,
    pub moves: Vec<usize>,
    pub created: u64,
}

impl Session {
    pub fn new(id: String, spec: SessionSpec) -> Result<Self, ServiceError> {
        let (board, start) = spec.board()?;
        let diagram = spec.diagram()?;
        let t = now();
        Ok(Session {
            id,
            spec,
            trace: GameTrace::new(board, start),
            diagram,
            created: t,
            updated: t,
        })
    }

    pub fn restore(record: SessionRecord) -> Result<Self, ServiceError> {
        let mut s = Session::new(record.id, record.spec)?;
        for v in record.moves {
            s.trace.push(v)?;
        }
        s.created = record.created;
        Ok(s)
    }

    pub fn record(&self) -> SessionRecord {
        SessionRecord {
            id: self.id.clone(),
            spec: self.spec.clone(),
            moves: self.trace.moves.clone(),
            created: self.created,
        }
    }

    pub fn trace(&self) -> &GameTrace {
        &self.trace
    }

    pub fn fire(&mut self, vertex: usize) -> Result<(), ServiceError> {
        self.trace.push(vertex)?;
        self.updated = now();
        Ok(())
    }

    pub fn undo(&mut self) -> Result<(), ServiceError> {
        self.trace
            .pop()
            .ok_or_else(|| ServiceError::Conflict("no move to undo".into()))?;
        self.updated = now();
        Ok(())
    }

    fn non_sources(&self) -> ParabolicSubset {
        let all: BTreeSet<usize> = self.diagram.vertices().collect();
        let rest = all.difference(self.trace.board.sources()).copied();
        ParabolicSubset::new(rest, self.diagram.rank()).expect("vertices in range")
    }

    fn element(&self, rs: &RootSystem) -> Result<WeylElement, ServiceError> {
        Ok(rs.element_of(&word_of_play(&self.trace.moves))?)
    }

    pub fn state_view(&self) -> Result<Value, ServiceError> {
        let board = &self.trace.board;
        let c = self.trace.current();
        Ok(json!({
            "id": self.id,
            "board": board,
            "configuration": c,
            "statuses": statuses(board, c)?,
            "legal_moves": legal_moves(board, c)?,
            "moves": self.trace.moves,
            "states": self.trace.states,
            "terminal": self.trace.is_terminal(),
            "word": self.word_view()?,
            "tableau": self.tableau_view().ok(),
            "created": self.created,
            "updated": self.updated,
        }))
    }

    /// Word of the play so far, its length, and (for modified boards)
    /// whether it is a minimal coset representative.
    pub fn word_view(&self) -> Result<Value, ServiceError> {
        let rs = RootSystem::new(&self.diagram);
        let word = word_of_play(&self.trace.moves);
        let w = self.element(&rs)?;
        let min_rep = match self.spec.mode {
            Mode::Modified => Some(rs.is_min_rep(&w, &self.non_sources())?),
            Mode::Classic => None,
        };
        Ok(json!({
            "word": word,
            "text": word.to_string(),
            "length": rs.length(&w),
            "min_rep": min_rep,
        }))
    }

    pub fn inversions_view(&self) -> Result<Value, ServiceError> {
        let rs = RootSystem::new(&self.diagram);
        let inv = rs.inversion_set(&self.element(&rs)?);
        let text: Vec<String> = inv.iter().map(|r| r.to_string()).collect();
        Ok(json!({ "count": inv.len(), "roots": inv, "text": text }))
    }

    /// Only for type A boards with a single source.
    pub fn tableau_view(&self) -> Result<Value, ServiceError> {
        let board = &self.trace.board;
        let single = board.sources().iter().next().copied().filter(|_| board.sources().len() == 1);
        let k = match (self.spec.family, self.spec.mode, single) {
            (Family::A, Mode::Modified, Some(k)) => k,
            _ => {
                return Err(ServiceError::Conflict(
                    "tableaux need a modified type A board with one source".into(),
                ))
            }
        };
        let n = self.diagram.rank() + 1;
        let t = play_to_tableau(&self.trace.moves, k, n)?;
        let shape = grassmannian_shape(&word_of_play(&self.trace.moves), k, n)?;
        Ok(json!({ "k": k, "n": n, "shape": shape, "rows": t, "ascii": t.to_ascii() }))
    }

    pub fn dfa_view(&self) -> Result<Value, ServiceError> {
        let j = match self.spec.mode {
            Mode::Modified => self.non_sources(),
            Mode::Classic => ParabolicSubset::empty(),
        };
        let dfa = build_dfa(&self.diagram, &j)?;
        let state = word_of_play(&self.trace.moves)
            .letters()
            .iter()
            .fold(dfa.initial, |q, &a| dfa.step(q, a));
        Ok(json!({
            "automaton": export_json(&dfa),
            "dot": export_dot(&dfa),
            "current_state": state,
            "accepting": dfa.accepting[state],
        }))
    }
}
