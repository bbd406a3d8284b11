//! Line-oriented text format.
//!
//! ```text
//! # torus with one vertex and two loops
//! vertex v: a.1 b.1 a.2 b.2
//! edge a: +
//! edge b: +
//! ```
//!
//! Rotations are counterclockwise. `#` starts a comment. Vertex and edge
//! lines may come in any order; output always lists vertices first.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeEnd, EdgeId, End, RibbonGraph, Sign, Vertex};

pub fn to_text(g: &RibbonGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        write!(out, "vertex {}:", v.label).unwrap();
        for h in &v.rotation {
            write!(out, " {}.{}", g.edge(h.edge).label, h.end.number()).unwrap();
        }
        out.push('\n');
    }
    for e in g.edges() {
        writeln!(out, "edge {}: {}", e.label, e.sign.symbol()).unwrap();
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse(text: &str) -> Result<RibbonGraph> {
    struct PendingVertex<'a> {
        line: usize,
        label: &'a str,
        ends: Vec<(usize, &'a str, End)>,
    }
    let mut pending: Vec<PendingVertex> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut edge_index: HashMap<&str, usize> = HashMap::new();

    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap();
        let toks = tokens(line);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let Some(&(name_col, name)) = toks.get(1) else {
            return Err(parse_error(ln, col, "expected a name after the keyword"));
        };
        let Some(label) = name.strip_suffix(':') else {
            return Err(parse_error(ln, name_col, format!("expected `<name>:`, found {name:?}")));
        };
        if !crate::graph::is_valid_label(label) {
            return Err(parse_error(ln, name_col, format!("invalid name {label:?}")));
        }
        match keyword {
            "vertex" => {
                let mut ends = Vec::new();
                for &(c, t) in &toks[2..] {
                    let (edge, end) = t
                        .rsplit_once('.')
                        .ok_or_else(|| parse_error(ln, c, format!("expected `<edge>.<end>`, found {t:?}")))?;
                    let end = match end {
                        "1" => End::One,
                        "2" => End::Two,
                        _ => return Err(parse_error(ln, c, format!("edge end must be 1 or 2, found {end:?}"))),
                    };
                    ends.push((c, edge, end));
                }
                pending.push(PendingVertex { line: ln, label, ends });
            }
            "edge" => {
                let sign = match toks.get(2) {
                    Some((_, "+")) => Sign::Plus,
                    Some((_, "-")) => Sign::Minus,
                    Some(&(c, t)) => return Err(parse_error(ln, c, format!("expected + or -, found {t:?}"))),
                    None => return Err(parse_error(ln, line.len() + 1, "missing edge sign")),
                };
                if let Some(&(c, _)) = toks.get(3) {
                    return Err(parse_error(ln, c, "trailing input after edge sign"));
                }
                if edge_index.insert(label, edges.len()).is_some() {
                    return Err(parse_error(ln, name_col, format!("edge {label:?} declared twice")));
                }
                edges.push(Edge::new(label, sign));
            }
            other => return Err(parse_error(ln, col, format!("unknown keyword {other:?}"))),
        }
    }

    let mut vertices = Vec::with_capacity(pending.len());
    for v in pending {
        let mut rotation = Vec::with_capacity(v.ends.len());
        for (c, edge, end) in v.ends {
            let &e = edge_index
                .get(edge)
                .ok_or_else(|| parse_error(v.line, c, format!("undeclared edge {edge:?}")))?;
            rotation.push(EdgeEnd::new(EdgeId(e), end));
        }
        vertices.push(Vertex::new(v.label, rotation));
    }
    RibbonGraph::new(vertices, edges)
}
