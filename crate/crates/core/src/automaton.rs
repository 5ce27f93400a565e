//! Finite automata for the language of reduced words of minimal coset
//! representatives.
//!
//! [`build_dfa`] has one state per group element plus a trap. It reads the
//! letters of a word left to right, moving `w -> w s_i` while the length grows,
//! and accepts in the states that lie in `W^J`.
//!
//! [`build_config_dfa`] has one state per game configuration plus a trap and
//! reads game moves. Because a play is the reversed word, it accepts exactly
//! the reversals of the words accepted by [`build_dfa`].

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{board_from_diagram, explore, Configuration, Limits, Mode};
use crate::rootsystem::{DynkinDiagram, RootSystem};
use crate::weyl::{ParabolicSubset, WeylGroup, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dfa {
    /// Alphabet is `1..=letters`.
    pub letters: usize,
    pub labels: Vec<String>,
    /// `transitions[q][a - 1]` is the successor of `q` on letter `a`.
    pub transitions: Vec<Vec<usize>>,
    pub initial: usize,
    pub accepting: Vec<bool>,
    pub trap: usize,
}

impl Dfa {
    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.accepting[q]).collect()
    }

    pub fn step(&self, q: usize, letter: usize) -> usize {
        self.transitions[q][letter - 1]
    }

    /// Keep only the states from which an accepting state can be reached;
    /// every other transition is sent to the trap.
    pub fn trimmed(&self) -> Dfa {
        let n = self.state_count();
        let mut live = self.accepting.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..n {
                if !live[q] && self.transitions[q].iter().any(|&t| live[t]) {
                    live[q] = true;
                    changed = true;
                }
            }
        }
        live[self.trap] = true;
        let keep: Vec<usize> = (0..n).filter(|&q| live[q]).collect();
        let renum: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &q)| (q, k)).collect();
        let trap = renum[&self.trap];
        Dfa {
            letters: self.letters,
            labels: keep.iter().map(|&q| self.labels[q].clone()).collect(),
            transitions: keep
                .iter()
                .map(|&q| {
                    self.transitions[q]
                        .iter()
                        .map(|t| renum.get(t).copied().unwrap_or(trap))
                        .collect()
                })
                .collect(),
            initial: renum.get(&self.initial).copied().unwrap_or(trap),
            accepting: keep.iter().map(|&q| self.accepting[q]).collect(),
            trap,
        }
    }
}

pub fn build_dfa(d: &DynkinDiagram, j: &ParabolicSubset) -> Result<Dfa> {
    let rs = RootSystem::new(d);
    let group = WeylGroup::enumerate(&rs, WeylGroup::DEFAULT_LIMIT)?;
    let r = d.rank();
    let trap = group.len();
    let mut transitions = Vec::with_capacity(trap + 1);
    let mut accepting = Vec::with_capacity(trap + 1);
    let mut labels = Vec::with_capacity(trap + 1);
    for (w, word) in group.iter() {
        let row = (1..=r)
            .map(|s| {
                if w.ascends_at(s) {
                    group.position(&w.mul(&rs.simple_element(s))).expect("closed under products")
                } else {
                    trap
                }
            })
            .collect();
        transitions.push(row);
        accepting.push(rs.is_min_rep(w, j)?);
        labels.push(word.to_string());
    }
    transitions.push(vec![trap; r]);
    accepting.push(false);
    labels.push("trap".into());
    Ok(Dfa {
        letters: r,
        labels,
        transitions,
        initial: 0,
        accepting,
        trap,
    })
}

/// Automaton on game configurations with sources at the vertices outside `J`.
pub fn build_config_dfa(d: &DynkinDiagram, j: &ParabolicSubset) -> Result<Dfa> {
    let r = d.rank();
    let sources = j.complement(r);
    let board = board_from_diagram(d, Mode::Modified, sources.iter())?;
    let graph = explore(&board, &Configuration::zero(r), Limits::for_board(&board))?;
    let trap = graph.len();
    let mut transitions = vec![vec![trap; r]; trap + 1];
    for e in &graph.edges {
        transitions[e.from][e.vertex - 1] = e.to;
    }
    let mut accepting = vec![true; trap];
    accepting.push(false);
    let mut labels: Vec<String> = graph.nodes.iter().map(|c| c.to_string()).collect();
    labels.push("trap".into());
    Ok(Dfa {
        letters: r,
        labels,
        transitions,
        initial: 0,
        accepting,
        trap,
    })
}

pub fn accepts(a: &Dfa, word: &WeylWord) -> Result<bool> {
    let mut q = a.initial;
    for &letter in word.letters() {
        if letter == 0 || letter > a.letters {
            return Err(Error::IndexOutOfRange {
                vertex: letter,
                rank: a.letters,
            });
        }
        q = a.step(q, letter);
    }
    Ok(a.accepting[q])
}

/// Accepted words of length at most `max_len`, shortest first then
/// lexicographic.
pub fn enumerate_language(a: &Dfa, max_len: usize) -> Vec<WeylWord> {
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(a.initial, Vec::<usize>::new())]);
    while let Some((q, word)) = queue.pop_front() {
        if a.accepting[q] {
            out.push(WeylWord(word.clone()));
        }
        if word.len() == max_len {
            continue;
        }
        for letter in 1..=a.letters {
            let t = a.step(q, letter);
            if t != a.trap {
                let mut next = word.clone();
                next.push(letter);
                queue.push_back((t, next));
            }
        }
    }
    out
}

/// Graphviz rendering, one node per state with the initial state drawn bold.
/// Accepting states are double circles and every
/// transition into the trap is dashed. Parallel transitions share one edge
/// labelled with all their letters.
pub fn export_dot(a: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n");
    for q in 0..a.state_count() {
        let shape = if a.accepting[q] {
            "doublecircle"
        } else if q == a.trap {
            "box"
        } else {
            "circle"
        };
        let bold = if q == a.initial { ", style=bold" } else { "" };
        let _ = writeln!(out, "  q{q} [label=\"{}\", shape={shape}{bold}];", a.labels[q]);
    }
    for q in 0..a.state_count() {
        let mut grouped: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for letter in 1..=a.letters {
            grouped.entry(a.step(q, letter)).or_default().push(letter.to_string());
        }
        for (t, letters) in grouped {
            let style = if t == a.trap { ", style=dashed" } else { "" };
            let _ = writeln!(
                out,
                "  q{q} -> q{t} [label=\"s{}\"{style}];",
                letters.join(",s")
            );
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct DfaJson<'a> {
    states: &'a [String],
    initial: usize,
    trap: usize,
    accepting: Vec<usize>,
    transitions: Vec<[usize; 3]>,
}

/// `{states, initial, trap, accepting, transitions: [[from, letter, to], ...]}`.
pub fn export_json(a: &Dfa) -> serde_json::Value {
    let transitions = (0..a.state_count())
        .flat_map(|q| (1..=a.letters).map(move |l| (q, l)))
        .map(|(q, l)| [q, l, a.step(q, l)])
        .collect();
    serde_json::to_value(DfaJson {
        states: &a.labels,
        initial: a.initial,
        trap: a.trap,
        accepting: a.accepting_states(),
        transitions,
    })
    .expect("plain data serializes")
}

/// Languages of the two automata agree up to reversal, for words up to
/// `max_len` letters.
pub fn languages_mirror(element: &Dfa, config: &Dfa, max_len: usize) -> bool {
    let left: BTreeSet<WeylWord> = enumerate_language(element, max_len).into_iter().collect();
    let right: BTreeSet<WeylWord> = enumerate_language(config, max_len)
        .into_iter()
        .map(|w| w.reversed())
        .collect();
    left == right
}
