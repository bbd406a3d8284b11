//! Isomorphism of small ribbon graphs.
//!
//! Two ribbon graphs are isomorphic when a bijection of vertices and edges,
//! together with some set of vertex flips, carries rotations onto rotations
//! (up to cyclic shift) and signs onto signs. Edge-end numbering is not part
//! of the structure.
//!
//! Within a connected component the choice of a root flag (vertex, position
//! in its rotation, reading direction) forces everything else: a breadth-first
//! walk discovers each new vertex through an edge, which fixes where to start
//! reading its rotation and in which direction. The serialization of that walk
//! is compared lexicographically over all root flags; the least one is the
//! component's canonical code, and sorted component codes form the graph's.

use std::collections::VecDeque;

use crate::graph::{Edge, EdgeEnd, EdgeId, End, RibbonGraph, Sign, Vertex, VertexId};

/// One component read from a root flag.
struct Reading {
    code: Vec<u32>,
    /// Vertices in discovery order with their start position and direction.
    order: Vec<(VertexId, usize, bool)>,
}

fn read_from(g: &RibbonGraph, root: VertexId, start: usize, forward: bool) -> Reading {
    let n = g.vertex_count();
    let mut vid = vec![u32::MAX; n];
    let mut frame = vec![(0usize, true); n];
    let mut eid = vec![u32::MAX; g.edge_count()];
    let mut next_e = 0u32;
    let mut order = Vec::new();
    let mut queue = VecDeque::new();

    vid[root.0] = 0;
    frame[root.0] = (start, forward);
    order.push((root, start, forward));
    queue.push_back(root);
    let mut code = Vec::new();

    let read_pos = |deg: usize, (s, fwd): (usize, bool), p: usize| -> usize {
        if fwd {
            (p + deg - s) % deg
        } else {
            (s + deg - p) % deg
        }
    };

    while let Some(v) = queue.pop_front() {
        let rot = &g.vertex(v).rotation;
        let deg = rot.len();
        let (s, fwd) = frame[v.0];
        code.push(deg as u32);
        for j in 0..deg {
            let pos = if fwd { (s + j) % deg } else { (s + deg - j) % deg };
            let h = rot[pos];
            let other = g.placement(h.opposite());
            let w = other.vertex;
            if vid[w.0] == u32::MAX {
                let fwd_w = fwd ^ g.sign(h.edge).is_twisted();
                vid[w.0] = order.len() as u32;
                frame[w.0] = (other.position, fwd_w);
                order.push((w, other.position, fwd_w));
                queue.push_back(w);
            }
            if eid[h.edge.0] == u32::MAX {
                eid[h.edge.0] = next_e;
                next_e += 1;
            }
            let twisted = g.sign(h.edge).is_twisted() ^ (fwd != frame[w.0].1);
            code.extend([
                eid[h.edge.0],
                u32::from(twisted),
                vid[w.0],
                read_pos(g.degree(w), frame[w.0], other.position) as u32,
            ]);
        }
    }
    Reading { code, order }
}

fn best_reading(g: &RibbonGraph, members: &[VertexId]) -> Reading {
    let mut best: Option<Reading> = None;
    for &v in members {
        let deg = g.degree(v).max(1);
        for start in 0..deg {
            for forward in [true, false] {
                let r = read_from(g, v, start, forward);
                if best.as_ref().is_none_or(|b| r.code < b.code) {
                    best = Some(r);
                }
            }
        }
    }
    best.expect("component has a vertex")
}

fn component_readings(g: &RibbonGraph) -> Vec<Reading> {
    let (comp, count) = g.components();
    let mut members = vec![Vec::new(); count];
    for v in g.vertex_ids() {
        members[comp[v.0]].push(v);
    }
    let mut readings: Vec<Reading> = members.iter().map(|m| best_reading(g, m)).collect();
    readings.sort_by(|a, b| a.code.cmp(&b.code));
    readings
}

/// Isomorphism-invariant code; equal codes iff isomorphic graphs.
pub fn canonical_code(g: &RibbonGraph) -> Vec<u32> {
    let mut out = Vec::new();
    for r in component_readings(g) {
        out.push(r.code.len() as u32);
        out.extend(r.code);
    }
    out
}

pub fn are_isomorphic(g: &RibbonGraph, h: &RibbonGraph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && canonical_code(g) == canonical_code(h)
}

/// The canonical representative of `g`'s isomorphism class, labelled
/// `v0, v1, ...` and `e0, e1, ...` in discovery order. The first end of each
/// edge met in reading order is end 1.
pub fn canonical_form(g: &RibbonGraph) -> RibbonGraph {
    let mut vertices = Vec::with_capacity(g.vertex_count());
    let mut edge_map = vec![u32::MAX; g.edge_count()];
    let mut edges: Vec<Edge> = Vec::with_capacity(g.edge_count());
    let mut first_end: Vec<Option<EdgeEnd>> = vec![None; g.edge_count()];

    for r in component_readings(g) {
        let frames: Vec<(VertexId, usize, bool)> = r.order;
        let fwd_of = |v: VertexId| frames.iter().find(|f| f.0 == v).unwrap().2;
        for &(v, s, fwd) in &frames {
            let rot = &g.vertex(v).rotation;
            let deg = rot.len();
            let mut rotation = Vec::with_capacity(deg);
            for j in 0..deg {
                let pos = if fwd { (s + j) % deg } else { (s + deg - j) % deg };
                let h = rot[pos];
                let e = h.edge.0;
                if edge_map[e] == u32::MAX {
                    edge_map[e] = edges.len() as u32;
                    let (a, b) = g.endpoints(h.edge);
                    let flipped = fwd_of(a) != fwd_of(b);
                    let sign = if g.sign(h.edge).is_twisted() ^ flipped {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    };
                    edges.push(Edge::new(format!("e{}", edges.len()), sign));
                    first_end[e] = Some(h);
                }
                let end = if first_end[e] == Some(h) { End::One } else { End::Two };
                rotation.push(EdgeEnd::new(EdgeId(edge_map[e] as usize), end));
            }
            vertices.push(Vertex::new(format!("v{}", vertices.len()), rotation));
        }
    }
    RibbonGraph::assemble(vertices, edges)
}
