//! Deterministic rendering of results as JSON, DOT or plain text.
//!
//! JSON output carries `"schema": "kostant/v1"` and a `"kind"` tag at the top
//! level, with object keys sorted at every depth.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::automaton::{export_dot, export_json, Dfa};
use crate::classification::FinitenessVerdict;
use crate::correspondence::word_of_play;
use crate::error::{Error, Result};
use crate::game::{ConfigurationGraph, GameTrace};
use crate::graph::SimpleGraph;
use crate::rootsum::{direct_root_sum, height_profile};
use crate::rootsystem::DynkinDiagram;
use crate::tableaux::Tableau;

pub const SCHEMA: &str = "kostant/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Json,
    Dot,
    Ascii,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Ascii => "ascii",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "ascii" | "text" => Ok(Format::Ascii),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    kind: String,
    body: Value,
    dot: Option<String>,
    ascii: Option<String>,
}

impl Report {
    pub fn new(kind: impl Into<String>, body: &impl Serialize) -> Result<Self> {
        let body = serde_json::to_value(body).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Report {
            kind: kind.into(),
            body,
            dot: None,
            ascii: None,
        })
    }

    pub fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    pub fn with_ascii(mut self, ascii: String) -> Self {
        self.ascii = Some(ascii);
        self
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    /// Body with the schema and kind tags, keys sorted.
    pub fn to_value(&self) -> Value {
        let mut top = match canonical(self.body.clone()) {
            Value::Object(map) => map,
            other => {
                let mut map = Map::new();
                map.insert("result".into(), other);
                map
            }
        };
        top.insert("schema".into(), Value::String(SCHEMA.into()));
        top.insert("kind".into(), Value::String(self.kind.clone()));
        canonical(Value::Object(top))
    }
}

fn canonical(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let sorted: BTreeMap<String, Value> =
                map.into_iter().map(|(k, v)| (k, canonical(v))).collect();
            Value::Object(sorted.into_iter().collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}

pub fn emit_report(report: &Report, format: Format) -> Result<String> {
    let unsupported = || Error::UnsupportedFormat {
        kind: report.kind.clone(),
        format: format.to_string(),
    };
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&report.to_value())
                .map_err(|e| Error::Parse(e.to_string()))?;
            text.push('\n');
            Ok(text)
        }
        Format::Dot => report.dot.clone().ok_or_else(unsupported),
        Format::Ascii => report.ascii.clone().ok_or_else(unsupported),
    }
}

pub fn play_report(trace: &GameTrace) -> Result<Report> {
    #[derive(Serialize)]
    struct Body<'a> {
        trace: &'a GameTrace,
        #[serde(rename = "final")]
        last: &'a crate::game::Configuration,
        terminal: bool,
        word: crate::weyl::WeylWord,
    }
    let body = Body {
        trace,
        last: trace.current(),
        terminal: trace.is_terminal(),
        word: word_of_play(&trace.moves),
    };
    let mut ascii = format!("{}\n", trace.states[0]);
    for (v, c) in trace.moves.iter().zip(&trace.states[1..]) {
        let _ = writeln!(ascii, "  fire {v} -> {c}");
    }
    let _ = writeln!(
        ascii,
        "{} after {} moves",
        if trace.is_terminal() { "terminal" } else { "stopped" },
        trace.moves.len()
    );
    Ok(Report::new("play", &body)?.with_ascii(ascii))
}

pub fn explore_report(graph: &ConfigurationGraph) -> Result<Report> {
    let sinks: Vec<String> = graph.sinks().iter().map(|c| c.to_string()).collect();
    let ascii = format!(
        "{} configurations, {} transitions, sinks: {}\n",
        graph.len(),
        graph.edges.len(),
        sinks.join(" ")
    );
    Ok(Report::new("explore", graph)?
        .with_dot(graph.to_dot())
        .with_ascii(ascii))
}

pub fn dfa_report(dfa: &Dfa) -> Result<Report> {
    let mut ascii = String::new();
    let json = export_json(dfa);
    let _ = writeln!(ascii, "{} states, initial q{}, trap q{}", dfa.state_count(), dfa.initial, dfa.trap);
    for q in 0..dfa.state_count() {
        let targets: Vec<String> = (1..=dfa.letters)
            .map(|l| format!("s{l}->q{}", dfa.step(q, l)))
            .collect();
        let mark = if dfa.accepting[q] { "*" } else { " " };
        let _ = writeln!(ascii, "{mark} q{q} {:<12} {}", dfa.labels[q], targets.join(" "));
    }
    Ok(Report::new("dfa", &json)?
        .with_dot(export_dot(dfa))
        .with_ascii(ascii))
}

pub fn rootsum_report(d: &DynkinDiagram) -> Result<Report> {
    let profile = height_profile(d)?;
    let mut sum = vec![0i64; d.rank()];
    for c in profile.per_vertex.values() {
        for (acc, x) in sum.iter_mut().zip(&c.0) {
            *acc += x;
        }
    }
    let direct = direct_root_sum(d).0;
    let per_vertex: BTreeMap<String, &Vec<i64>> = profile
        .per_vertex
        .iter()
        .map(|(j, c)| (j.to_string(), &c.0))
        .collect();
    let heights: BTreeMap<String, i64> = profile
        .heights
        .iter()
        .map(|(j, h)| (j.to_string(), *h))
        .collect();
    let matches = sum == direct;
    let body = serde_json::json!({
        "diagram": d,
        "per_vertex": per_vertex,
        "heights": heights,
        "sum": sum,
        "direct": direct,
        "match": matches,
    });
    let mut ascii = String::new();
    for (j, c) in &profile.per_vertex {
        let _ = writeln!(ascii, "h_{j} = {c}");
    }
    let _ = writeln!(ascii, "sum    = {}", crate::rootsystem::RootVector(sum.clone()));
    let _ = writeln!(ascii, "direct = {}", crate::rootsystem::RootVector(direct));
    let _ = writeln!(ascii, "match  = {matches}");
    Ok(Report::new("rootsum", &body)?.with_ascii(ascii))
}

pub fn classify_report(graph: &SimpleGraph, verdict: &FinitenessVerdict) -> Result<Report> {
    let body = serde_json::json!({ "graph": graph, "result": verdict });
    let ascii = match verdict {
        FinitenessVerdict::Finite { final_config } => format!("finite, final configuration {final_config}\n"),
        FinitenessVerdict::Infinite { certificate } => format!("infinite: {certificate}\n"),
        FinitenessVerdict::Unknown { bound } => format!("unknown: stopped by {bound}\n"),
    };
    Ok(Report::new("classify", &body)?
        .with_dot(graph.to_dot())
        .with_ascii(ascii))
}

pub fn tableaux_report(n: usize, k: usize, pairs: &[(Vec<usize>, Tableau)]) -> Result<Report> {
    let entries: Vec<Value> = pairs
        .iter()
        .map(|(moves, t)| serde_json::json!({ "moves": moves, "tableau": t }))
        .collect();
    let body = serde_json::json!({
        "n": n,
        "k": k,
        "count": pairs.len(),
        "tableaux": entries,
    });
    let mut ascii = String::new();
    for (moves, t) in pairs {
        let moves: Vec<String> = moves.iter().map(usize::to_string).collect();
        let _ = writeln!(ascii, "moves {}", moves.join(","));
        ascii.push_str(&t.to_ascii());
        ascii.push('\n');
    }
    Ok(Report::new("tableaux", &body)?.with_ascii(ascii))
}
