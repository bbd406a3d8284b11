//! Arrow presentations: one circle per vertex, one arrow per edge end.
//!
//! An arrow's direction is recorded relative to its circle's reference sense
//! (the stored rotation order). End 1 of every edge points forward; end 2
//! points forward iff the edge is untwisted. So an edge is untwisted exactly
//! when its two arrows agree, and reversing one arrow is a half-twist.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeEnd, EdgeId, End, RibbonGraph, Sign, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub end: End,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circle {
    pub label: String,
    pub arrows: Vec<Arrow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrowPresentation {
    pub circles: Vec<Circle>,
    /// Edge labels in edge order.
    pub edges: Vec<String>,
}

pub fn to_arrow_presentation(g: &RibbonGraph) -> ArrowPresentation {
    let circles = g
        .vertices()
        .iter()
        .map(|v| Circle {
            label: v.label.clone(),
            arrows: v
                .rotation
                .iter()
                .map(|h| Arrow {
                    label: g.edge(h.edge).label.clone(),
                    end: h.end,
                    forward: h.end == End::One || g.sign(h.edge) == Sign::Plus,
                })
                .collect(),
        })
        .collect();
    ArrowPresentation {
        circles,
        edges: g.edges().iter().map(|e| e.label.clone()).collect(),
    }
}

pub fn from_arrow_presentation(a: &ArrowPresentation) -> Result<RibbonGraph> {
    let index: BTreeMap<&str, usize> = a
        .edges
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    if index.len() != a.edges.len() {
        return Err(Error::MalformedPresentation("duplicate edge label".into()));
    }
    let mut direction: Vec<[Option<bool>; 2]> = vec![[None; 2]; a.edges.len()];
    let mut vertices = Vec::with_capacity(a.circles.len());
    for c in &a.circles {
        let mut rotation = Vec::with_capacity(c.arrows.len());
        for arrow in &c.arrows {
            let &e = index.get(arrow.label.as_str()).ok_or_else(|| {
                Error::MalformedPresentation(format!("arrow label {:?} is not an edge", arrow.label))
            })?;
            let slot = &mut direction[e][arrow.end.index()];
            if slot.is_some() {
                return Err(Error::MalformedPresentation(format!(
                    "label {:?} appears more than twice or repeats an end",
                    arrow.label
                )));
            }
            *slot = Some(arrow.forward);
            rotation.push(EdgeEnd::new(EdgeId(e), arrow.end));
        }
        vertices.push(Vertex::new(c.label.clone(), rotation));
    }
    let mut edges = Vec::with_capacity(a.edges.len());
    for (label, dirs) in a.edges.iter().zip(&direction) {
        match dirs {
            [Some(x), Some(y)] => {
                let sign = if x == y { Sign::Plus } else { Sign::Minus };
                edges.push(Edge::new(label.clone(), sign));
            }
            _ => {
                return Err(Error::MalformedPresentation(format!(
                    "label {label:?} does not appear exactly twice"
                )))
            }
        }
    }
    RibbonGraph::new(vertices, edges)
}

/// An arc of the presentation drawn as an arrow: from `tail` to `head`,
/// both indices into the point list.
#[derive(Debug, Clone)]
struct ArrowArc {
    tail: usize,
    head: usize,
    edge: usize,
    end: End,
}

/// Applies the partial-dual move to every edge in `set` (edge indices).
///
/// Each arrow occupies two points on its circle; consecutive arrows are joined
/// by connector arcs. For an edge with arrows `a` and `b`, both arrows and the
/// arcs under them are removed and replaced by an arrow from the head of `a`
/// to the tail of `b` and one from the head of `b` to the tail of `a`. The new
/// circles are then read off by alternating connector and arrow arcs.
///
/// Circles that no moved edge touches keep their labels and reading start;
/// the other circles get fresh labels `v0, v1, ...` avoiding kept ones.
pub fn partial_dual_move(a: &ArrowPresentation, set: &BTreeSet<usize>) -> ArrowPresentation {
    let edge_index: BTreeMap<&str, usize> = a
        .edges
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();

    // Points 2k and 2k + 1 are the first and second ends (in circle sense)
    // of the k-th arrow overall.
    let mut connector = Vec::new();
    let mut arcs: Vec<ArrowArc> = Vec::new();
    let mut circle_points: Vec<Vec<usize>> = Vec::with_capacity(a.circles.len());
    for c in &a.circles {
        let base = arcs.len();
        let m = c.arrows.len();
        let mut points = Vec::with_capacity(2 * m);
        for (j, arrow) in c.arrows.iter().enumerate() {
            let k = base + j;
            let (first, second) = (2 * k, 2 * k + 1);
            let (tail, head) = if arrow.forward {
                (first, second)
            } else {
                (second, first)
            };
            arcs.push(ArrowArc {
                tail,
                head,
                edge: edge_index[arrow.label.as_str()],
                end: arrow.end,
            });
            points.extend([first, second]);
        }
        connector.resize(2 * arcs.len(), 0);
        for j in 0..m {
            let second = 2 * (base + j) + 1;
            let next_first = 2 * (base + (j + 1) % m);
            connector[second] = next_first;
            connector[next_first] = second;
        }
        circle_points.push(points);
    }

    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); a.edges.len()];
    for (k, arc) in arcs.iter().enumerate() {
        by_edge[arc.edge].push(k);
    }
    for &e in set {
        let [x, y] = [by_edge[e][0], by_edge[e][1]];
        let (tx, hx) = (arcs[x].tail, arcs[x].head);
        let (ty, hy) = (arcs[y].tail, arcs[y].head);
        arcs[x].tail = hx;
        arcs[x].head = ty;
        arcs[y].tail = hy;
        arcs[y].head = tx;
    }
    let mut arc_at = vec![0usize; connector.len()];
    for (k, arc) in arcs.iter().enumerate() {
        arc_at[arc.tail] = k;
        arc_at[arc.head] = k;
    }

    let mut visited = vec![false; connector.len()];
    let mut traced: Vec<(Option<usize>, Vec<Arrow>)> = Vec::new();
    for (ci, points) in circle_points.iter().enumerate() {
        if points.is_empty() {
            traced.push((Some(ci), Vec::new()));
            continue;
        }
        for &start in points {
            if visited[start] {
                continue;
            }
            let mut arrows = Vec::new();
            let mut touched = false;
            let mut p = start;
            loop {
                let arc = &arcs[arc_at[p]];
                let q = if arc.tail == p { arc.head } else { arc.tail };
                visited[p] = true;
                visited[q] = true;
                touched |= set.contains(&arc.edge);
                arrows.push(Arrow {
                    label: a.edges[arc.edge].clone(),
                    end: arc.end,
                    forward: arc.tail == p,
                });
                p = connector[q];
                if p == start {
                    break;
                }
            }
            traced.push((if touched { None } else { Some(ci) }, arrows));
        }
    }

    let kept: BTreeSet<&str> = traced
        .iter()
        .filter_map(|(orig, _)| orig.map(|ci| a.circles[ci].label.as_str()))
        .collect();
    let mut fresh = (0..).map(|i| format!("v{i}")).filter(|l| !kept.contains(l.as_str()));
    let circles = traced
        .into_iter()
        .map(|(orig, arrows)| Circle {
            label: match orig {
                Some(ci) => a.circles[ci].label.clone(),
                None => fresh.next().unwrap(),
            },
            arrows,
        })
        .collect();
    ArrowPresentation {
        circles,
        edges: a.edges.clone(),
    }
}
