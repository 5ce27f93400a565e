use std::collections::BTreeSet;

use dot_parser::{ast, canonical};
use kostant::automaton::{build_dfa, export_dot};
use kostant::game::{board_from_diagram, explore, Configuration, Limits, Mode};
use kostant::graph::SimpleGraph;
use kostant::rootsystem::{build_diagram, Family};
use kostant::weyl::ParabolicSubset;

fn parse(text: &str) -> canonical::Graph<(String, String)> {
    let tree = ast::Graph::try_from(text).expect("valid DOT");
    canonical::Graph::from(tree).filter_map(|(k, v)| Some((k.into(), v.into())))
}

fn attr<'a>(node: &'a canonical::Node<(String, String)>, key: &str) -> Option<&'a str> {
    node.attr
        .elems
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
}

#[test]
fn a2_automaton_has_seven_nodes() {
    let d = build_diagram(Family::A, 2).unwrap();
    let dfa = build_dfa(&d, &ParabolicSubset::new([1], 2).unwrap()).unwrap();
    let g = parse(&export_dot(&dfa));
    assert_eq!(g.nodes.set.len(), 7);
    let accepting = g
        .nodes
        .set
        .values()
        .filter(|n| attr(n, "shape") == Some("doublecircle"))
        .count();
    assert_eq!(accepting, 3);
    let bold: Vec<_> = g.nodes.set.values().filter(|n| attr(n, "style") == Some("bold")).collect();
    assert_eq!(bold.len(), 1);
    // every state has an outgoing edge, and every edge ends at a declared node
    let sources: BTreeSet<&str> = g.edges.set.iter().map(|e| e.from.as_str()).collect();
    assert_eq!(sources.len(), 7);
    assert!(g.edges.set.iter().all(|e| g.nodes.set.contains_key(&e.to)));
}

#[test]
fn trivial_parabolic_trims_to_two_nodes() {
    let d = build_diagram(Family::A, 2).unwrap();
    let dfa = build_dfa(&d, &ParabolicSubset::full(2)).unwrap().trimmed();
    assert_eq!(parse(&export_dot(&dfa)).nodes.set.len(), 2);
}

#[test]
fn configuration_graph_dot() {
    let d = build_diagram(Family::B, 2).unwrap();
    let board = board_from_diagram(&d, Mode::Modified, [1, 2]).unwrap();
    let graph = explore(&board, &Configuration::zero(2), Limits::for_board(&board)).unwrap();
    let g = parse(&graph.to_dot());
    assert_eq!(g.nodes.set.len(), graph.len());
    assert_eq!(g.edges.set.len(), graph.edges.len());
    let sinks: Vec<_> = g
        .nodes
        .set
        .values()
        .filter(|n| attr(n, "shape") == Some("doublecircle"))
        .collect();
    assert_eq!(sinks.len(), 1);
    assert_eq!(attr(sinks[0], "label"), Some("(4,3)"));
}

#[test]
fn simple_graph_round_trip() {
    for g in [SimpleGraph::path(4), SimpleGraph::cycle(5), SimpleGraph::star(&[1, 2, 5])] {
        let text = g.to_dot();
        let parsed = parse(&text);
        assert_eq!(parsed.edges.set.len(), g.edge_count());
        assert_eq!(SimpleGraph::parse_dot(&text).unwrap(), g);
    }
}
