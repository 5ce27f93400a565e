//! Undirected simple graphs, with JSON edge-list and DOT-subset ingestion.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::DynkinDiagram;

/// Vertices are `1..=n`; edges are stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) outside 1..={n}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("repeated edge ({a},{b})")));
            }
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph::new(n, (1..n).map(|k| (k, k + 1))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::path(n);
        if n >= 3 {
            g.edges.insert((1, n));
        }
        g
    }

    /// Centre 1 with arms of the given lengths.
    pub fn star(arms: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next = 2;
        for &len in arms {
            let mut prev = 1;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        SimpleGraph::new(next - 1, edges).expect("valid star")
    }

    /// Underlying simple graph of a diagram (bond multiplicities dropped).
    pub fn from_diagram(d: &DynkinDiagram) -> Self {
        SimpleGraph::new(d.rank(), d.edges()).expect("diagram edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Add a new vertex `n + 1` joined to each listed vertex.
    pub fn with_apex(&self, attach: &[usize]) -> Self {
        let mut g = self.clone();
        g.n += 1;
        for &v in attach {
            g.edges.insert((v, g.n));
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b || a == 0 || b == 0 || a > self.n || b > self.n {
            return Err(Error::InvalidGraph(format!("bad edge ({a},{b})")));
        }
        self.edges.insert((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1usize]);
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    pub fn to_petgraph(&self) -> UnGraph<(), ()> {
        let mut g = UnGraph::with_capacity(self.n, self.edges.len());
        let idx: Vec<_> = (0..self.n).map(|_| g.add_node(())).collect();
        for &(a, b) in &self.edges {
            g.add_edge(idx[a - 1], idx[b - 1], ());
        }
        g
    }

    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && petgraph::algo::is_isomorphic(&self.to_petgraph(), &other.to_petgraph())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 1..=self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }

    /// Parse `graph [name] { a -- b -- c; d; }`. Attribute lists in `[...]`
    /// and `key=value` statements are ignored. Purely numeric names are used
    /// as vertex numbers; otherwise vertices are numbered by first appearance.
    pub fn parse_dot(text: &str) -> Result<Self> {
        let text = strip_comments(text);
        let open = text
            .find('{')
            .ok_or_else(|| Error::Parse("missing '{'".into()))?;
        let close = text
            .rfind('}')
            .ok_or_else(|| Error::Parse("missing '}'".into()))?;
        let header: Vec<&str> = text[..open].split_whitespace().collect();
        match header.as_slice() {
            ["graph"] | ["graph", _] | ["strict", "graph"] | ["strict", "graph", _] => {}
            _ => return Err(Error::Parse("expected an undirected `graph` header".into())),
        }
        let body = &text[open + 1..close];
        let mut names: Vec<String> = Vec::new();
        let mut chains: Vec<Vec<usize>> = Vec::new();
        let intern = |name: &str, names: &mut Vec<String>| -> usize {
            match names.iter().position(|n| n == name) {
                Some(k) => k,
                None => {
                    names.push(name.to_string());
                    names.len() - 1
                }
            }
        };
        for stmt in body.split([';', '\n']) {
            let stmt = strip_attrs(stmt);
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            if stmt.contains("->") {
                return Err(Error::Parse("directed edge in undirected graph".into()));
            }
            if stmt.contains('=') && !stmt.contains("--") {
                continue;
            }
            if ["graph", "node", "edge"].contains(&stmt) {
                continue;
            }
            let mut chain = Vec::new();
            for part in stmt.split("--") {
                let name = part.trim().trim_matches('"');
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(Error::Parse(format!("cannot parse statement {stmt:?}")));
                }
                chain.push(intern(name, &mut names));
            }
            chains.push(chain);
        }
        let numeric: Option<Vec<usize>> = names.iter().map(|n| n.parse::<usize>().ok()).collect();
        let (n, label): (usize, Vec<usize>) = match numeric {
            Some(nums) if nums.iter().all(|&x| x >= 1) => {
                (nums.iter().copied().max().unwrap_or(0), nums)
            }
            _ => (names.len(), (1..=names.len()).collect()),
        };
        let mut edges = BTreeSet::new();
        for chain in chains {
            for pair in chain.windows(2) {
                let (a, b) = (label[pair[0]], label[pair[1]]);
                if a == b {
                    return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
                }
                edges.insert((a.min(b), a.max(b)));
            }
        }
        SimpleGraph::new(n, edges)
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find("//") {
            Some(k) => &l[..k],
            None => l,
        })
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n")
}

fn strip_attrs(stmt: &str) -> String {
    let mut out = String::new();
    let mut depth = 0;
    for ch in stmt.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ if depth == 0 => out.push(ch),
            _ => {}
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        SimpleGraph::new(raw.vertices, raw.edges.into_iter().map(|[a, b]| (a, b)))
            .map_err(serde::de::Error::custom)
    }
}

/// Cheap isomorphism invariant: vertex count, edge count, sorted degrees, and
/// the sorted multiset of neighbour-degree lists.
pub fn invariant_key(g: &SimpleGraph) -> (usize, usize, Vec<Vec<usize>>) {
    let deg: BTreeMap<usize, usize> = (1..=g.n).map(|v| (v, g.degree(v))).collect();
    let mut profile: Vec<Vec<usize>> = (1..=g.n)
        .map(|v| {
            let mut row: Vec<usize> = g.neighbors(v).iter().map(|u| deg[u]).collect();
            row.sort_unstable();
            row.insert(0, deg[&v]);
            row
        })
        .collect();
    profile.sort();
    (g.n, g.edges.len(), profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(SimpleGraph::path(4).edge_count(), 3);
        assert_eq!(SimpleGraph::cycle(3).edge_count(), 3);
        let s = SimpleGraph::star(&[1, 2, 5]);
        assert_eq!(s.vertex_count(), 9);
        assert_eq!(s.degree(1), 3);
        assert!(s.is_connected());
        assert!(!SimpleGraph::new(3, [(1, 2)]).unwrap().is_connected());
    }

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(SimpleGraph::new(2, [(1, 1)]).is_err());
        assert!(SimpleGraph::new(2, [(1, 2), (2, 1)]).is_err());
        assert!(SimpleGraph::new(2, [(1, 3)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = SimpleGraph::cycle(5);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"vertices":5,"edges":[[1,2],[1,5],[2,3],[3,4],[4,5]]}"#);
        assert_eq!(serde_json::from_str::<SimpleGraph>(&text).unwrap(), g);
        assert!(serde_json::from_str::<SimpleGraph>(r#"{"vertices":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn dot_parsing() {
        let g = SimpleGraph::parse_dot("graph T { a -- b -- c; c -- a [color=red]; }").unwrap();
        assert!(g.is_isomorphic(&SimpleGraph::cycle(3)));
        let g = SimpleGraph::parse_dot("graph {\n 1 -- 2\n 2 -- 3\n 4\n}").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        let round = SimpleGraph::parse_dot(&SimpleGraph::star(&[1, 1, 1, 1]).to_dot()).unwrap();
        assert_eq!(round, SimpleGraph::star(&[1, 1, 1, 1]));
        assert!(SimpleGraph::parse_dot("digraph { a -> b }").is_err());
        assert!(SimpleGraph::parse_dot("graph { a -- a }").is_err());
    }

    #[test]
    fn isomorphism() {
        let a = SimpleGraph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let b = SimpleGraph::new(4, [(3, 1), (1, 4), (4, 2)]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert_eq!(invariant_key(&a), invariant_key(&b));
        assert!(!a.is_isomorphic(&SimpleGraph::star(&[1, 1, 1])));
    }
}
