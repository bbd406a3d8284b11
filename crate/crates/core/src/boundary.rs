//! Boundary components of the ribbon surface.
//!
//! Every edge ribbon has four half-edge line segments, two at each end. A
//! boundary component alternates between vertex line segments (corners
//! between consecutive edge ends of a rotation) and edge line segments (the
//! long sides of a ribbon). Sides are named as seen when travelling along the
//! ribbon from end 1 to end 2, so an untwisted edge keeps the side and a
//! twisted one swaps it.

use crate::graph::{EdgeEnd, EdgeId, EdgeSet, End, RibbonGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }

    fn index(self) -> usize {
        match self {
            Side::L => 0,
            Side::R => 1,
        }
    }
}

/// Which neighbour in the rotation a half-edge segment faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Role {
    Next,
    Prev,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdgeSegment {
    pub end: EdgeEnd,
    pub side: Side,
}

impl HalfEdgeSegment {
    pub fn new(end: EdgeEnd, side: Side) -> Self {
        HalfEdgeSegment { end, side }
    }

    pub fn index(self) -> usize {
        4 * self.end.edge.0 + 2 * self.end.end.index() + self.side.index()
    }

    pub fn from_index(i: usize) -> Self {
        let end = if (i / 2).is_multiple_of(2) { End::One } else { End::Two };
        let side = if i.is_multiple_of(2) { Side::L } else { Side::R };
        HalfEdgeSegment::new(EdgeEnd::new(EdgeId(i / 4), end), side)
    }

    /// Looking outward from the vertex, the left side faces the next end in
    /// the rotation. Travelling from end 1 to end 2 means looking outward at
    /// end 1 and inward at end 2.
    pub(crate) fn role(self) -> Role {
        match (self.end.end, self.side) {
            (End::One, Side::L) | (End::Two, Side::R) => Role::Next,
            _ => Role::Prev,
        }
    }

    pub(crate) fn with_role(end: EdgeEnd, role: Role) -> Self {
        let side = match (end.end, role) {
            (End::One, Role::Next) | (End::Two, Role::Prev) => Side::L,
            _ => Side::R,
        };
        HalfEdgeSegment::new(end, side)
    }
}

/// Partner across the vertex line segment next to `s`.
pub(crate) fn corner_partner(g: &RibbonGraph, s: HalfEdgeSegment) -> HalfEdgeSegment {
    let p = g.placement(s.end);
    let rot = &g.vertex(p.vertex).rotation;
    let d = rot.len();
    match s.role() {
        Role::Next => HalfEdgeSegment::with_role(rot[(p.position + 1) % d], Role::Prev),
        Role::Prev => HalfEdgeSegment::with_role(rot[(p.position + d - 1) % d], Role::Next),
    }
}

/// Partner along the edge line segment containing `s`.
pub(crate) fn edge_partner(g: &RibbonGraph, s: HalfEdgeSegment) -> HalfEdgeSegment {
    let side = if g.sign(s.end.edge).is_twisted() {
        s.side.other()
    } else {
        s.side
    };
    HalfEdgeSegment::new(s.end.opposite(), side)
}

/// Partner across the common line segment at the same end.
pub(crate) fn common_partner(s: HalfEdgeSegment) -> HalfEdgeSegment {
    HalfEdgeSegment::new(s.end, s.side.other())
}

/// Faces of an embedded graph: the boundary components of its ribbon surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDecomposition {
    /// Each component as the cyclic walk `s0, corner(s0), line(corner(s0)), ...`.
    pub components: Vec<Vec<HalfEdgeSegment>>,
    /// Isolated vertices; each is one extra component with no segments,
    /// numbered after `components`.
    pub free_vertices: Vec<VertexId>,
    segment_component: Vec<usize>,
}

impl BoundaryDecomposition {
    pub fn face_count(&self) -> usize {
        self.components.len() + self.free_vertices.len()
    }

    pub fn component_of(&self, s: HalfEdgeSegment) -> usize {
        self.segment_component[s.index()]
    }

    /// Number of edge line segments on each face, free vertices last.
    pub fn degrees(&self) -> Vec<usize> {
        self.components
            .iter()
            .map(|c| c.len() / 2)
            .chain(self.free_vertices.iter().map(|_| 0))
            .collect()
    }

    /// The faces on the two sides of an edge.
    pub fn faces_of_edge(&self, g: &RibbonGraph, e: EdgeId) -> (usize, usize) {
        let h = EdgeEnd::new(e, End::One);
        let a = HalfEdgeSegment::new(h, Side::L);
        let b = HalfEdgeSegment::new(h, Side::R);
        debug_assert!(g.edge_count() > e.0);
        (self.component_of(a), self.component_of(b))
    }
}

/// Traces the boundary of `g`.
pub fn trace_boundary(g: &RibbonGraph) -> BoundaryDecomposition {
    trace_boundary_without(g, &EdgeSet::new())
}

/// Traces the boundary of `g - deleted` while keeping the segment names of
/// `g`: across a deleted edge the walk follows its common line segment instead
/// of its edge line segments.
pub fn trace_boundary_without(g: &RibbonGraph, deleted: &EdgeSet) -> BoundaryDecomposition {
    let n = 4 * g.edge_count();
    let mut segment_component = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if segment_component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut walk = Vec::new();
        let mut s = HalfEdgeSegment::from_index(start);
        loop {
            segment_component[s.index()] = id;
            walk.push(s);
            let c = corner_partner(g, s);
            segment_component[c.index()] = id;
            walk.push(c);
            s = if deleted.contains(&c.end.edge) {
                common_partner(c)
            } else {
                edge_partner(g, c)
            };
            if s.index() == start {
                break;
            }
        }
        components.push(walk);
    }
    let free_vertices = g.vertex_ids().filter(|&v| g.is_isolated(v)).collect();
    BoundaryDecomposition {
        components,
        free_vertices,
        segment_component,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerReport {
    /// Euler characteristic of each connected component, in vertex order.
    pub per_component: Vec<i64>,
    pub total: i64,
}

/// `V - E + F`, per connected component and summed.
pub fn euler_characteristic(g: &RibbonGraph) -> EulerReport {
    let (comp, count) = g.components();
    let mut chi = vec![0i64; count];
    for v in g.vertex_ids() {
        chi[comp[v.0]] += 1;
    }
    for e in g.edge_ids() {
        chi[comp[g.endpoints(e).0 .0]] -= 1;
    }
    let b = trace_boundary(g);
    for c in &b.components {
        chi[comp[g.placement(c[0].end).vertex.0]] += 1;
    }
    for v in &b.free_vertices {
        chi[comp[v.0]] += 1;
    }
    let total = chi.iter().sum();
    EulerReport {
        per_component: chi,
        total,
    }
}
