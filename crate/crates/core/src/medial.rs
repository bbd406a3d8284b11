//! Medial graphs of orientable ribbon graphs.
//!
//! The medial graph has one 4-valent vertex on every host edge and one edge
//! along every corner (vertex line segment) of the host. Its four ports at a
//! host edge are the four half-edge line segments, in the counterclockwise
//! order
//!
//! ```text
//!   3 = end2-L   2 = end2-R
//!          \     /
//!            \ /
//!            / \
//!          /     \
//!   0 = end1-L   1 = end1-R
//! ```
//!
//! so that opposite ports (0-2, 1-3) are joined by the two straight-ahead
//! strands. The C-smoothing joins ports on the same side (the curve follows
//! the edge line segments, so the edge stays); the D-smoothing joins ports at
//! the same end (the curve follows the common line segments, so the edge is
//! deleted).

use std::fmt::Write;

use crate::boundary::{HalfEdgeSegment, Role, Side};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeEnd, EdgeId, EdgeSet, End, RibbonGraph, Sign, Vertex, VertexId};

pub const PORTS: [(End, Side); 4] = [
    (End::One, Side::L),
    (End::One, Side::R),
    (End::Two, Side::R),
    (End::Two, Side::L),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    /// The medial vertex, named by its host edge.
    pub vertex: EdgeId,
    pub index: u8,
}

impl Port {
    pub fn new(vertex: EdgeId, index: u8) -> Self {
        Port { vertex, index }
    }

    pub fn segment(self) -> HalfEdgeSegment {
        let (end, side) = PORTS[self.index as usize];
        HalfEdgeSegment::new(EdgeEnd::new(self.vertex, end), side)
    }

    pub fn from_segment(s: HalfEdgeSegment) -> Port {
        let i = PORTS
            .iter()
            .position(|&(end, side)| end == s.end.end && side == s.side)
            .unwrap();
        Port::new(s.end.edge, i as u8)
    }

    pub fn opposite(self) -> Port {
        Port::new(self.vertex, (self.index + 2) % 4)
    }

    fn slot(self) -> usize {
        4 * self.vertex.0 + self.index as usize
    }
}

/// A medial edge: the corner of a host vertex between two consecutive ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MedialEdge {
    pub corner_at: VertexId,
    pub ports: [Port; 2],
}

#[derive(Debug, Clone)]
pub struct MedialGraph {
    host: RibbonGraph,
    edges: Vec<MedialEdge>,
    edge_at: Vec<usize>,
    free_loops: Vec<VertexId>,
}

/// Builds the medial graph of an orientable host. The host is first
/// normalized by vertex flips so that every edge is untwisted; port sides and
/// segment signs refer to that normalized host.
pub fn build_medial(host: &RibbonGraph) -> Result<MedialGraph> {
    let host = host.normalized().ok_or(Error::NotOrientable)?;
    let mut edges = Vec::with_capacity(2 * host.edge_count());
    let mut edge_at = vec![usize::MAX; 4 * host.edge_count()];
    for v in host.vertex_ids() {
        let rot = &host.vertex(v).rotation;
        let d = rot.len();
        for k in 0..d {
            let a = Port::from_segment(HalfEdgeSegment::with_role(rot[k], Role::Next));
            let b = Port::from_segment(HalfEdgeSegment::with_role(rot[(k + 1) % d], Role::Prev));
            edge_at[a.slot()] = edges.len();
            edge_at[b.slot()] = edges.len();
            edges.push(MedialEdge {
                corner_at: v,
                ports: [a, b],
            });
        }
    }
    let free_loops = host.vertex_ids().filter(|&v| host.is_isolated(v)).collect();
    Ok(MedialGraph {
        host,
        edges,
        edge_at,
        free_loops,
    })
}

impl MedialGraph {
    /// The normalized host.
    pub fn host(&self) -> &RibbonGraph {
        &self.host
    }

    pub fn vertex_count(&self) -> usize {
        self.host.edge_count()
    }

    pub fn edges(&self) -> &[MedialEdge] {
        &self.edges
    }

    pub fn free_loops(&self) -> &[VertexId] {
        &self.free_loops
    }

    pub fn ports(&self) -> impl Iterator<Item = Port> + '_ {
        self.host
            .edge_ids()
            .flat_map(|e| (0..4).map(move |i| Port::new(e, i)))
    }

    /// The medial edge at a port.
    pub fn edge_at(&self, p: Port) -> &MedialEdge {
        &self.edges[self.edge_at[p.slot()]]
    }

    /// The port at the other end of the medial edge at `p`.
    pub fn across(&self, p: Port) -> Port {
        let m = self.edge_at(p);
        if m.ports[0] == p {
            m.ports[1]
        } else {
            m.ports[0]
        }
    }

    /// The medial graph as a ribbon graph in its own right, for inspection.
    /// Free loops have no vertices and are left out.
    pub fn to_ribbon_graph(&self) -> RibbonGraph {
        let mut rotations = vec![[EdgeEnd::new(EdgeId(0), End::One); 4]; self.vertex_count()];
        for (i, m) in self.edges.iter().enumerate() {
            for (k, p) in m.ports.iter().enumerate() {
                let end = if k == 0 { End::One } else { End::Two };
                rotations[p.vertex.0][p.index as usize] = EdgeEnd::new(EdgeId(i), end);
            }
        }
        let vertices = rotations
            .into_iter()
            .enumerate()
            .map(|(e, rot)| Vertex::new(self.host.edge(EdgeId(e)).label.clone(), rot.to_vec()))
            .collect();
        let edges = (0..self.edges.len())
            .map(|i| Edge::new(format!("m{i}"), Sign::Plus))
            .collect();
        RibbonGraph::assemble(vertices, edges)
    }
}

/// Which way each straight-ahead walk is directed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WalkSeed {
    /// Each walk leaves its lowest-numbered port.
    #[default]
    Forward,
    /// Every walk reversed.
    Reverse,
}

/// A direction of every medial edge, recorded per port: `true` where the
/// edge arrives (head), `false` where it leaves (tail).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllCrossingDirection {
    pub heads: Vec<[bool; 4]>,
    /// The straight-ahead walks as the sequences of ports they leave from.
    pub walks: Vec<Vec<Port>>,
}

impl AllCrossingDirection {
    pub fn is_head(&self, p: Port) -> bool {
        self.heads[p.vertex.0][p.index as usize]
    }

    /// Checks head, head, tail, tail in cyclic port order at every vertex and
    /// that each medial edge has one head and one tail.
    pub fn check(&self, m: &MedialGraph) -> Result<()> {
        for e in m.host.edge_ids() {
            let h = self.heads[e.0];
            let adjacent = (0..4).any(|i| h[i] && h[(i + 1) % 4] && !h[(i + 2) % 4] && !h[(i + 3) % 4]);
            if !adjacent {
                return Err(Error::NotAllCrossing(e));
            }
        }
        for me in &m.edges {
            if self.is_head(me.ports[0]) == self.is_head(me.ports[1]) {
                return Err(Error::NotAllCrossing(me.ports[0].vertex));
            }
        }
        Ok(())
    }
}

/// Directs the medial graph along its straight-ahead walks: enter a vertex at
/// a port, leave at the opposite port.
pub fn straight_ahead_direction(m: &MedialGraph, seed: WalkSeed) -> AllCrossingDirection {
    let n = m.vertex_count();
    let mut marked: Vec<[Option<bool>; 4]> = vec![[None; 4]; n];
    let mut walks = Vec::new();
    for start in m.ports() {
        if marked[start.vertex.0][start.index as usize].is_some() {
            continue;
        }
        let mut walk = Vec::new();
        let mut leave = start;
        loop {
            let arrive = m.across(leave);
            debug_assert!(marked[leave.vertex.0][leave.index as usize].is_none());
            marked[leave.vertex.0][leave.index as usize] = Some(false);
            marked[arrive.vertex.0][arrive.index as usize] = Some(true);
            walk.push(leave);
            leave = arrive.opposite();
            if leave == start {
                break;
            }
        }
        walks.push(walk);
    }
    let mut heads: Vec<[bool; 4]> = marked
        .into_iter()
        .map(|ps| ps.map(|p| p.expect("every port lies on a walk")))
        .collect();
    if seed == WalkSeed::Reverse {
        for h in &mut heads {
            for x in h.iter_mut() {
                *x = !*x;
            }
        }
        for w in &mut walks {
            *w = w.iter().rev().map(|&p| m.across(p)).collect();
        }
    }
    AllCrossingDirection { heads, walks }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CdLabel {
    C,
    D,
}

/// The c/d label of every host edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdClassification(pub Vec<CdLabel>);

impl CdClassification {
    pub fn d_edges(&self) -> EdgeSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == CdLabel::D)
            .map(|(i, _)| EdgeId(i))
            .collect()
    }

    pub fn label(&self, e: EdgeId) -> CdLabel {
        self.0[e.0]
    }
}

fn smoothing_partner(label: CdLabel, index: u8) -> u8 {
    match label {
        // same side: 0-3, 1-2
        CdLabel::C => 3 - index,
        // same end: 0-1, 2-3
        CdLabel::D => index ^ 1,
    }
}

/// A vertex is a d-vertex when the D-smoothing pairs each head with a tail,
/// and a c-vertex when the C-smoothing does. Under an all-crossing direction
/// exactly one of the two holds.
pub fn classify_cd(m: &MedialGraph, dir: &AllCrossingDirection) -> Result<CdClassification> {
    dir.check(m)?;
    let labels = m
        .host
        .edge_ids()
        .map(|e| {
            let h = dir.heads[e.0];
            let consistent = |l: CdLabel| (0..4u8).all(|i| h[i as usize] != h[smoothing_partner(l, i) as usize]);
            match (consistent(CdLabel::C), consistent(CdLabel::D)) {
                (true, false) => Ok(CdLabel::C),
                (false, true) => Ok(CdLabel::D),
                _ => Err(Error::NotAllCrossing(e)),
            }
        })
        .collect::<Result<_>>()?;
    Ok(CdClassification(labels))
}

/// A piece of ribbon boundary crossed by a smoothed curve or a boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineSegment {
    EdgeLine { edge: EdgeId, side: Side },
    CommonLine { edge: EdgeId, end: End },
}

/// One traversal of a line segment with its sign relative to the host
/// orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub segment: LineSegment,
    pub positive: bool,
}

impl Passage {
    /// The passage that starts at half-edge segment `from` and follows the
    /// edge line segment (or the common line segment when `deleted`). It is
    /// positive when it agrees with the counterclockwise boundary orientation,
    /// i.e. when it leaves from the side facing the previous end.
    pub(crate) fn leaving(from: HalfEdgeSegment, deleted: bool) -> Passage {
        let segment = if deleted {
            LineSegment::CommonLine {
                edge: from.end.edge,
                end: from.end.end,
            }
        } else {
            LineSegment::EdgeLine {
                edge: from.end.edge,
                side: from.side,
            }
        };
        Passage {
            segment,
            positive: from.role() == Role::Prev,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub passages: Vec<Passage>,
    /// Set for the curve coming from a free loop.
    pub free_loop: Option<VertexId>,
}

/// Smooths every medial vertex according to its label and returns the
/// resulting directed closed curves.
pub fn smooth(m: &MedialGraph, dir: &AllCrossingDirection, cls: &CdClassification) -> Result<Vec<Curve>> {
    let mut visited = vec![false; 4 * m.vertex_count()];
    let mut curves = Vec::new();
    for start in m.ports() {
        if visited[start.slot()] || dir.is_head(start) {
            continue;
        }
        let mut passages = Vec::new();
        let mut leave = start;
        loop {
            visited[leave.slot()] = true;
            let arrive = m.across(leave);
            if !dir.is_head(arrive) {
                return Err(Error::Invariant(format!("medial edge at {:?} is not directed", arrive)));
            }
            let label = cls.label(arrive.vertex);
            let next = Port::new(arrive.vertex, smoothing_partner(label, arrive.index));
            if dir.is_head(next) {
                return Err(Error::Invariant(format!(
                    "smoothing at {} joins two heads",
                    arrive.vertex
                )));
            }
            passages.push(Passage::leaving(arrive.segment(), label == CdLabel::D));
            leave = next;
            if leave == start {
                break;
            }
        }
        curves.push(Curve {
            passages,
            free_loop: None,
        });
    }
    curves.extend(m.free_loops.iter().map(|&v| Curve {
        passages: Vec::new(),
        free_loop: Some(v),
    }));
    Ok(curves)
}

/// DOT rendering of the medial graph with its direction and c/d labels.
pub fn to_dot(m: &MedialGraph, dir: &AllCrossingDirection, cls: &CdClassification) -> String {
    let host = &m.host;
    let mut out = String::from("digraph medial {\n");
    for e in host.edge_ids() {
        let l = match cls.label(e) {
            CdLabel::C => "c",
            CdLabel::D => "d",
        };
        writeln!(out, "  \"{}\" [label=\"{} ({})\"];", host.edge(e).label, host.edge(e).label, l).unwrap();
    }
    for me in &m.edges {
        let [a, b] = me.ports;
        let (tail, head) = if dir.is_head(b) { (a, b) } else { (b, a) };
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [taillabel=\"{}\", headlabel=\"{}\", label=\"{}\"];",
            host.edge(tail.vertex).label,
            host.edge(head.vertex).label,
            tail.index,
            head.index,
            host.vertex(me.corner_at).label,
        )
        .unwrap();
    }
    for v in &m.free_loops {
        let name = &host.vertex(*v).label;
        writeln!(out, "  \"free:{name}\" [label=\"free loop at {name}\", shape=circle];").unwrap();
        writeln!(out, "  \"free:{name}\" -> \"free:{name}\";").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::euler_characteristic;
    use crate::graph::Sign::*;

    /// A one-edge host whose corners agree with `h`: the sphere loop joins
    /// ports 0-3 and 1-2, the path joins 0-1 and 2-3.
    fn heads(h: [bool; 4]) -> (MedialGraph, AllCrossingDirection) {
        let g = if h[0] != h[3] {
            RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Plus]).unwrap()
        } else {
            RibbonGraph::from_rotations(&[&[(0, 1)], &[(0, 2)]], &[Plus]).unwrap()
        };
        let m = build_medial(&g).unwrap();
        (m, AllCrossingDirection { heads: vec![h], walks: vec![] })
    }

    #[test]
    fn ports_round_trip() {
        for i in 0..4 {
            let p = Port::new(EdgeId(3), i);
            assert_eq!(Port::from_segment(p.segment()), p);
        }
    }

    #[test]
    fn sizes() {
        let sphere_loop = RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Plus]).unwrap();
        let m = build_medial(&sphere_loop).unwrap();
        assert_eq!(m.vertex_count(), 1);
        assert_eq!(m.edges().len(), 2);
        assert!(m.free_loops().is_empty());

        let m = build_medial(&RibbonGraph::point()).unwrap();
        assert_eq!(m.vertex_count(), 0);
        assert_eq!(m.free_loops(), &[VertexId(0)]);

        let torus = RibbonGraph::from_rotations(&[&[(0, 1), (1, 1), (0, 2), (1, 2)]], &[Plus, Plus]).unwrap();
        let m = build_medial(&torus).unwrap();
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.edges().len(), 4);

        let twisted = RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Minus]).unwrap();
        assert!(matches!(build_medial(&twisted), Err(Error::NotOrientable)));
    }

    #[test]
    fn medial_of_plane_graph_is_plane() {
        let triangle = RibbonGraph::from_rotations(
            &[&[(0, 1), (2, 2)], &[(1, 1), (0, 2)], &[(2, 1), (1, 2)]],
            &[Plus, Plus, Plus],
        )
        .unwrap();
        let med = build_medial(&triangle).unwrap().to_ribbon_graph();
        assert_eq!(euler_characteristic(&med).total, 2);
        assert!(med.vertex_ids().all(|v| med.degree(v) == 4));
    }

    #[test]
    fn sphere_loop_walk() {
        let g = RibbonGraph::from_rotations(&[&[(0, 1), (0, 2)]], &[Plus]).unwrap();
        let m = build_medial(&g).unwrap();
        let dir = straight_ahead_direction(&m, WalkSeed::Forward);
        dir.check(&m).unwrap();
        // Corners join ports 0-3 and 2-1; from port 0 the walk runs
        // 0 -> 3, 1 -> 2 and closes: one walk, heads at 3 and 2.
        assert_eq!(dir.walks.len(), 1);
        assert_eq!(dir.heads[0], [false, false, true, true]);
        assert_eq!(classify_cd(&m, &dir).unwrap().0, vec![CdLabel::C]);
    }

    #[test]
    fn classification_cases() {
        let (m, d) = heads([true, true, false, false]);
        assert_eq!(classify_cd(&m, &d).unwrap().0, vec![CdLabel::C]);
        let (m, d) = heads([true, false, false, true]);
        assert_eq!(classify_cd(&m, &d).unwrap().0, vec![CdLabel::D]);
        let (m, d) = heads([false, true, true, false]);
        assert_eq!(classify_cd(&m, &d).unwrap().0, vec![CdLabel::D]);
        let (m, d) = heads([true, false, true, false]);
        assert!(matches!(classify_cd(&m, &d), Err(Error::NotAllCrossing(_))));
    }

    #[test]
    fn smoothing_signs_on_a_path() {
        // One edge between two vertices: each end has one corner. The walk
        // through port 0 returns via the corner at the same end.
        let g = RibbonGraph::from_rotations(&[&[(0, 1)], &[(0, 2)]], &[Plus]).unwrap();
        let m = build_medial(&g).unwrap();
        let dir = straight_ahead_direction(&m, WalkSeed::Forward);
        let cls = classify_cd(&m, &dir).unwrap();
        let curves = smooth(&m, &dir, &cls).unwrap();
        let passages: Vec<_> = curves.iter().flat_map(|c| c.passages.iter()).collect();
        assert_eq!(passages.len(), 2);
        assert_ne!(passages[0].positive, passages[1].positive);
    }

    #[test]
    fn dot_output_mentions_every_vertex() {
        let g = RibbonGraph::from_rotations(&[&[(0, 1), (1, 1), (0, 2), (1, 2)], &[]], &[Plus, Plus]).unwrap();
        let m = build_medial(&g).unwrap();
        let dir = straight_ahead_direction(&m, WalkSeed::Forward);
        let cls = classify_cd(&m, &dir).unwrap();
        let dot = to_dot(&m, &dir, &cls);
        assert!(dot.starts_with("digraph medial {"));
        assert!(dot.contains("\"e0\" [label=\"e0 ("));
        assert!(dot.contains("free loop at v1"));
        assert_eq!(dot.matches("->").count(), 5);
    }
}
