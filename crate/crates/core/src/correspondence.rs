//! Plays of the multi-source game versus reduced words of minimal coset
//! representatives, and the extended-space simulation that mirrors the game.
//!
//! A play `(i_1, ..., i_t)` maps to the word `[i_t, ..., i_1]`, which lies in
//! `W^J` with `J` the non-source vertices.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{board_from_diagram, legal_moves, Configuration, GameBoard, Mode};
use crate::rootsystem::{CartanMatrix, DynkinDiagram, RootSystem};
use crate::weyl::{ParabolicSubset, WeylElement, WeylGroup, WeylWord};

/// Root-lattice coefficients plus one coefficient per source vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtendedState {
    pub root_part: Vec<i64>,
    pub source_part: Vec<i64>,
}

impl ExtendedState {
    /// The state `sum_p beta_p` with no root part.
    pub fn initial(rank: usize, sources: &BTreeSet<usize>) -> Self {
        ExtendedState {
            root_part: vec![0; rank],
            source_part: vec![1; sources.len()],
        }
    }

    fn source_coefficient(&self, sources: &BTreeSet<usize>, i: usize) -> i64 {
        sources
            .iter()
            .position(|&p| p == i)
            .map_or(0, |k| self.source_part[k])
    }
}

/// `<s, alpha_i^vee>`: the root part pairs through the Cartan matrix and each
/// source `beta_p` pairs to `-delta_{p,i}`.
pub fn extended_pairing(
    s: &ExtendedState,
    i: usize,
    a: &CartanMatrix,
    sources: &BTreeSet<usize>,
) -> i64 {
    a.pairing(&s.root_part, i) - s.source_coefficient(sources, i)
}

pub fn extended_reflect(
    s: &ExtendedState,
    i: usize,
    a: &CartanMatrix,
    sources: &BTreeSet<usize>,
) -> ExtendedState {
    let k = extended_pairing(s, i, a, sources);
    let mut out = s.clone();
    out.root_part[i - 1] = out.root_part[i - 1].checked_sub(k).expect("integer overflow");
    out
}

/// A move at `i` is valid exactly when this is positive.
pub fn k_value(s: &ExtendedState, i: usize, a: &CartanMatrix, sources: &BTreeSet<usize>) -> i64 {
    -extended_pairing(s, i, a, sources)
}

/// Cartan matrix whose reflections reproduce the board's firing rule:
/// `E_{ij} = -n(i, j)` off the diagonal. For a diagram board this is the
/// diagram's own Cartan matrix; for `B_n` boards it is the transpose of the
/// `C_n` matrix.
pub fn engine_matrix(board: &GameBoard) -> CartanMatrix {
    let r = board.rank();
    let rows: Vec<Vec<i64>> = board
        .vertices()
        .map(|i| {
            board
                .vertices()
                .map(|j| if i == j { 2 } else { -board.arrows(i, j) })
                .collect()
        })
        .collect();
    debug_assert_eq!(rows.len(), r);
    CartanMatrix::from_rows(&rows).expect("board arrows form a Cartan matrix")
}

fn modified_board(d: &DynkinDiagram, sources: &BTreeSet<usize>) -> Result<GameBoard> {
    board_from_diagram(d, Mode::Modified, sources.iter().copied())
}

/// Apply `word` (rightmost letter first) to the initial extended state and
/// return the root part.
pub fn simulate_word(
    d: &DynkinDiagram,
    sources: &BTreeSet<usize>,
    word: &WeylWord,
) -> Result<Configuration> {
    let board = modified_board(d, sources)?;
    for &a in word.letters() {
        board.check_vertex(a)?;
    }
    let engine = engine_matrix(&board);
    let mut s = ExtendedState::initial(d.rank(), sources);
    for &a in word.letters().iter().rev() {
        s = extended_reflect(&s, a, &engine, sources);
    }
    if s.source_part.iter().any(|&c| c != 1) {
        return Err(Error::InternalInconsistency("source part changed".into()));
    }
    Ok(Configuration(s.root_part))
}

/// Word of a play: the moves in reverse order.
pub fn word_of_play(moves: &[usize]) -> WeylWord {
    WeylWord(moves.iter().rev().copied().collect())
}

/// Validate a play through `K` values and return its group element, checking
/// that the word is reduced and lies in `W^J`.
pub fn verify_play(
    d: &DynkinDiagram,
    sources: &BTreeSet<usize>,
    moves: &[usize],
) -> Result<WeylElement> {
    let board = modified_board(d, sources)?;
    let engine = engine_matrix(&board);
    let mut s = ExtendedState::initial(d.rank(), sources);
    for (k, &v) in moves.iter().enumerate() {
        board.check_vertex(v)?;
        if k_value(&s, v, &engine, sources) <= 0 {
            return Err(Error::InvalidMoveAt {
                step: k + 1,
                vertex: v,
            });
        }
        s = extended_reflect(&s, v, &engine, sources);
    }
    let rs = RootSystem::new(d);
    let word = word_of_play(moves);
    let w = rs.element_of(&word)?;
    let j = ParabolicSubset::new(sources.iter().copied(), d.rank())?.complement(d.rank());
    if !rs.is_reduced(&word)? || !rs.is_min_rep(&w, &j)? {
        return Err(Error::NotMinRep(moves.to_vec()));
    }
    Ok(w)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlayWordPair {
    pub moves: Vec<usize>,
    pub word: WeylWord,
}

impl PlayWordPair {
    pub fn from_moves(moves: Vec<usize>) -> Self {
        let word = word_of_play(&moves);
        PlayWordPair { moves, word }
    }
}

/// Every play from the empty configuration (all prefixes, or only the ones
/// ending in a terminal configuration), sorted by moves.
pub fn enumerate_plays(
    d: &DynkinDiagram,
    sources: &BTreeSet<usize>,
    terminal_only: bool,
) -> Result<Vec<PlayWordPair>> {
    let board = modified_board(d, sources)?;
    let mut out = Vec::new();
    let mut path = Vec::new();
    walk(&board, &Configuration::zero(d.rank()), &mut path, terminal_only, &mut out)?;
    out.sort();
    Ok(out)
}

fn walk(
    board: &GameBoard,
    c: &Configuration,
    path: &mut Vec<usize>,
    terminal_only: bool,
    out: &mut Vec<PlayWordPair>,
) -> Result<()> {
    let moves = legal_moves(board, c)?;
    if !terminal_only || moves.is_empty() {
        out.push(PlayWordPair::from_moves(path.clone()));
    }
    for v in moves {
        let next = crate::game::fire(board, c, v)?;
        path.push(v);
        walk(board, &next, path, terminal_only, out)?;
        path.pop();
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionSummary {
    pub plays: usize,
    pub coset_reps: usize,
    pub reduced_words: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Compare the words of all plays with the reduced words of every element of
/// `W^J`, `J` being the non-source vertices.
pub fn bijection_summary(d: &DynkinDiagram, sources: &BTreeSet<usize>) -> Result<BijectionSummary> {
    let plays = enumerate_plays(d, sources, false)?;
    let from_plays: BTreeSet<WeylWord> = plays.iter().map(|p| p.word.clone()).collect();
    let rs = RootSystem::new(d);
    let group = WeylGroup::enumerate(&rs, WeylGroup::DEFAULT_LIMIT)?;
    let j = ParabolicSubset::new(sources.iter().copied(), d.rank())?.complement(d.rank());
    let mut reps = 0;
    let mut words = BTreeSet::new();
    for w in group.elements() {
        if rs.is_min_rep(w, &j)? {
            reps += 1;
            words.extend(rs.reduced_words(w));
        }
    }
    Ok(BijectionSummary {
        plays: plays.len(),
        coset_reps: reps,
        reduced_words: words.len(),
        matches: from_plays == words && plays.len() == words.len(),
    })
}
