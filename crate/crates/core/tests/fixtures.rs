use std::fs;
use std::path::PathBuf;

use ribbonlab::algorithms::{checkerboard_partial_petrial, inconsistent_edges, vertex_checkerboard_colouring};
use ribbonlab::operators::partial_petrial;
use ribbonlab::predicates::{is_checkerboard_colourable, is_eulerian};
use ribbonlab::text::parse;
use ribbonlab::workbench::{enumerate_graphs, is_converse_witness, search_converse_counterexample, UniverseParams};
use ribbonlab::{are_isomorphic, RibbonGraph};

fn fixture(name: &str) -> (RibbonGraph, String) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    let text = fs::read_to_string(path).unwrap();
    (parse(&text).unwrap(), text)
}

#[test]
fn torus_two_loops() {
    let (g, _) = fixture("torus2loop.rg");
    assert!(is_eulerian(&g));
    assert!(!is_checkerboard_colourable(&g));
    let vc = vertex_checkerboard_colouring(&g).unwrap();
    let i = inconsistent_edges(&g, &vc);
    assert_eq!(g.edge_labels(&i), vec!["a", "b"]);
    let twisted = partial_petrial(&g, &g.all_edges()).unwrap();
    assert!(is_checkerboard_colourable(&twisted));
    let c = checkerboard_partial_petrial(&g).unwrap();
    assert_eq!(c.result, twisted);
}

/// The witness fixture names its edge set on a comment line.
fn witness() -> (RibbonGraph, Vec<String>) {
    let (g, text) = fixture("converse_witness.rg");
    let line = text.lines().find(|l| l.contains("With A = {")).unwrap();
    let inside = &line[line.find('{').unwrap() + 1..line.find('}').unwrap()];
    (g, inside.split(',').map(|s| s.trim().to_string()).collect())
}

#[test]
fn converse_witness_reverifies() {
    let (g, labels) = witness();
    let a = g.edge_set(&labels).unwrap();
    assert!(is_converse_witness(&g, &a).unwrap());
}

#[test]
fn search_reproduces_the_fixture() {
    let (g, labels) = witness();
    let u = enumerate_graphs(UniverseParams::up_to(4)).unwrap();
    let r = search_converse_counterexample(&u).unwrap();
    let w = r.witness.expect("a witness exists within four edges");
    assert!(are_isomorphic(&w.graph, &g));
    assert_eq!(w.graph.edge_labels(&w.set), labels);
    assert!(is_converse_witness(&w.graph, &w.set).unwrap());
}

#[test]
fn no_witness_with_fewer_than_three_edges() {
    let u = enumerate_graphs(UniverseParams::up_to(2)).unwrap();
    let r = search_converse_counterexample(&u).unwrap();
    assert!(r.witness.is_none());
    assert_eq!(r.graphs_examined, u.len());
}
