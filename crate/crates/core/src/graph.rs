//! Signed rotation systems.
//!
//! A [`RibbonGraph`] stores, for every vertex, the cyclic order of the edge
//! ends attached to it, and for every edge a [`Sign`] recording whether its
//! ribbon carries a half-twist. This is the canonical in-memory form; every
//! other representation in the crate (arrow presentations, medial graphs,
//! boundary decompositions) is derived from it.
//!
//! Graphs are validated on construction, so every `RibbonGraph` value satisfies
//! the structural invariants listed in [`Violation`].

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

/// A set of edges of one particular graph.
pub type EdgeSet = BTreeSet<EdgeId>;

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v#{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    One,
    Two,
}

impl End {
    pub fn other(self) -> End {
        match self {
            End::One => End::Two,
            End::Two => End::One,
        }
    }

    pub fn index(self) -> usize {
        match self {
            End::One => 0,
            End::Two => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }
}

/// One of the two ends of an edge, i.e. one common line segment of its ribbon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    pub end: End,
}

impl EdgeEnd {
    pub fn new(edge: EdgeId, end: End) -> Self {
        EdgeEnd { edge, end }
    }

    pub fn opposite(self) -> EdgeEnd {
        EdgeEnd::new(self.edge, self.end.other())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn toggled(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_twisted(self) -> bool {
        self == Sign::Minus
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub label: String,
    /// Edge ends in counterclockwise order around the vertex disk.
    pub rotation: Vec<EdgeEnd>,
}

impl Vertex {
    pub fn new(label: impl Into<String>, rotation: Vec<EdgeEnd>) -> Self {
        Vertex {
            label: label.into(),
            rotation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: String,
    pub sign: Sign,
}

impl Edge {
    pub fn new(label: impl Into<String>, sign: Sign) -> Self {
        Edge {
            label: label.into(),
            sign,
        }
    }
}

/// A structural problem found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A rotation refers to an edge index that does not exist.
    UnknownEdge { vertex: usize, edge: usize },
    /// The same edge end occurs more than once across all rotations.
    DuplicateEdgeEnd(EdgeEnd),
    /// An edge end occurs in no rotation.
    UnplacedEdgeEnd(EdgeEnd),
    DuplicateVertexLabel(String),
    DuplicateEdgeLabel(String),
    /// Labels must be non-empty and free of whitespace, `:`, `.`, `,` and `#`
    /// so that the text format can carry them.
    BadLabel(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownEdge { vertex, edge } => {
                write!(f, "vertex #{vertex} mentions unknown edge #{edge}")
            }
            Violation::DuplicateEdgeEnd(h) => {
                write!(f, "duplicate edge-end {}.{}", h.edge, h.end.number())
            }
            Violation::UnplacedEdgeEnd(h) => {
                write!(f, "unplaced edge-end {}.{}", h.edge, h.end.number())
            }
            Violation::DuplicateVertexLabel(l) => write!(f, "duplicate vertex label {l:?}"),
            Violation::DuplicateEdgeLabel(l) => write!(f, "duplicate edge label {l:?}"),
            Violation::BadLabel(l) => write!(f, "label {l:?} is not a valid identifier"),
        }
    }
}

pub(crate) fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ':' | '.' | ',' | '#'))
}

/// Checks the rotation-system invariants on raw parts. Returns one violation
/// per failed invariant; an empty list means the parts form a valid graph.
pub fn validate(vertices: &[Vertex], edges: &[Edge]) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut seen = vec![[0usize; 2]; edges.len()];
    for (vi, v) in vertices.iter().enumerate() {
        for h in &v.rotation {
            match seen.get_mut(h.edge.0) {
                Some(slot) => slot[h.end.index()] += 1,
                None => out.push(Violation::UnknownEdge {
                    vertex: vi,
                    edge: h.edge.0,
                }),
            }
        }
    }
    for (e, counts) in seen.iter().enumerate() {
        for end in [End::One, End::Two] {
            let h = EdgeEnd::new(EdgeId(e), end);
            match counts[end.index()] {
                0 => out.push(Violation::UnplacedEdgeEnd(h)),
                1 => {}
                _ => out.push(Violation::DuplicateEdgeEnd(h)),
            }
        }
    }
    let mut labels = BTreeSet::new();
    for v in vertices {
        if !is_valid_label(&v.label) {
            out.push(Violation::BadLabel(v.label.clone()));
        }
        if !labels.insert(v.label.as_str()) {
            out.push(Violation::DuplicateVertexLabel(v.label.clone()));
        }
    }
    labels.clear();
    for e in edges {
        if !is_valid_label(&e.label) {
            out.push(Violation::BadLabel(e.label.clone()));
        }
        if !labels.insert(e.label.as_str()) {
            out.push(Violation::DuplicateEdgeLabel(e.label.clone()));
        }
    }
    out
}

/// Where an edge end sits: its vertex and its index in that vertex's rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Placement {
    pub vertex: VertexId,
    pub position: usize,
}

/// An embedded graph as a signed rotation system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    placement: Vec<[Placement; 2]>,
}

impl RibbonGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self, Error> {
        let violations = validate(&vertices, &edges);
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }
        Ok(Self::assemble(vertices, edges))
    }

    /// Builds from parts already known to be valid.
    pub(crate) fn assemble(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        let dummy = Placement {
            vertex: VertexId(0),
            position: 0,
        };
        let mut placement = vec![[dummy; 2]; edges.len()];
        for (vi, v) in vertices.iter().enumerate() {
            for (pos, h) in v.rotation.iter().enumerate() {
                placement[h.edge.0][h.end.index()] = Placement {
                    vertex: VertexId(vi),
                    position: pos,
                };
            }
        }
        debug_assert!(validate(&vertices, &edges).is_empty());
        RibbonGraph {
            vertices,
            edges,
            placement,
        }
    }

    /// Convenience constructor used heavily in tests: vertex rotations given as
    /// `(edge index, end number)` pairs, edges as signs; labels `v0.., e0..`.
    pub fn from_rotations(rotations: &[&[(usize, u8)]], signs: &[Sign]) -> Result<Self, Error> {
        let vertices = rotations
            .iter()
            .enumerate()
            .map(|(i, rot)| {
                let rotation = rot
                    .iter()
                    .map(|&(e, end)| {
                        EdgeEnd::new(EdgeId(e), if end == 1 { End::One } else { End::Two })
                    })
                    .collect();
                Vertex::new(format!("v{i}"), rotation)
            })
            .collect();
        let edges = signs
            .iter()
            .enumerate()
            .map(|(i, &s)| Edge::new(format!("e{i}"), s))
            .collect();
        RibbonGraph::new(vertices, edges)
    }

    /// A graph with a single isolated vertex.
    pub fn point() -> Self {
        Self::assemble(vec![Vertex::new("v0", vec![])], vec![])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn all_edges(&self) -> EdgeSet {
        self.edge_ids().collect()
    }

    pub fn complement(&self, set: &EdgeSet) -> EdgeSet {
        self.edge_ids().filter(|e| !set.contains(e)).collect()
    }

    pub fn sign(&self, e: EdgeId) -> Sign {
        self.edges[e.0].sign
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v.0].rotation.len()
    }

    pub fn placement(&self, h: EdgeEnd) -> Placement {
        self.placement[h.edge.0][h.end.index()]
    }

    /// The two endpoints of an edge (equal for a loop).
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [a, b] = self.placement[e.0];
        (a.vertex, b.vertex)
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.label == label).map(VertexId)
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.label == label).map(EdgeId)
    }

    /// Resolves edge labels into an edge set.
    pub fn edge_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<EdgeSet, Error> {
        labels
            .iter()
            .map(|l| {
                self.edge_by_label(l.as_ref())
                    .ok_or_else(|| Error::UnknownEdgeLabel(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn edge_labels(&self, set: &EdgeSet) -> Vec<&str> {
        set.iter().map(|e| self.edges[e.0].label.as_str()).collect()
    }

    /// Carries an edge set of `from` over to `self` by label, dropping edges
    /// that `self` does not have.
    pub fn translate_edges(&self, from: &RibbonGraph, set: &EdgeSet) -> EdgeSet {
        set.iter()
            .filter_map(|&e| self.edge_by_label(&from.edges[e.0].label))
            .collect()
    }

    pub(crate) fn check_edges(&self, set: &EdgeSet) -> Result<(), Error> {
        match set.iter().find(|e| e.0 >= self.edges.len()) {
            Some(&e) => Err(Error::UnknownEdge(e)),
            None => Ok(()),
        }
    }

    /// Connected component index per vertex, and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(self.vertices.len());
        for e in self.edge_ids() {
            let (a, b) = self.endpoints(e);
            uf.union(a.0, b.0);
        }
        let labels = uf.into_labeling();
        let mut index = vec![usize::MAX; self.vertices.len()];
        let mut comp = Vec::with_capacity(self.vertices.len());
        let mut next = 0;
        for &root in &labels {
            if index[root] == usize::MAX {
                index[root] = next;
                next += 1;
            }
            comp.push(index[root]);
        }
        (comp, next)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Reverses the disk at `v`: its rotation is reversed and every non-loop
    /// edge with an end at `v` changes sign. The result is the same ribbon
    /// graph up to homeomorphism.
    pub fn flip_vertex(&self, v: VertexId) -> Result<RibbonGraph, Error> {
        if v.0 >= self.vertices.len() {
            return Err(Error::UnknownVertex(v));
        }
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices[v.0].rotation.reverse();
        for h in &self.vertices[v.0].rotation {
            if !self.is_loop(h.edge) {
                let e = &mut edges[h.edge.0];
                e.sign = e.sign.toggled();
            }
        }
        Ok(Self::assemble(vertices, edges))
    }

    /// Flips every vertex whose bit is set.
    pub fn flip_vertices(&self, flips: &[bool]) -> RibbonGraph {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        for (v, &flip) in flips.iter().enumerate() {
            if flip {
                vertices[v].rotation.reverse();
            }
        }
        for e in self.edge_ids() {
            let (a, b) = self.endpoints(e);
            if flips[a.0] != flips[b.0] {
                edges[e.0].sign = edges[e.0].sign.toggled();
            }
        }
        Self::assemble(vertices, edges)
    }

    /// Per-vertex flips that make every edge untwisted, if the surface is
    /// orientable. Each component's first vertex is left unflipped.
    pub fn orienting_flips(&self) -> Option<Vec<bool>> {
        let mut bit: Vec<Option<bool>> = vec![None; self.vertices.len()];
        let mut stack = Vec::new();
        for root in 0..self.vertices.len() {
            if bit[root].is_some() {
                continue;
            }
            bit[root] = Some(false);
            stack.push(root);
            while let Some(v) = stack.pop() {
                let bv = bit[v].unwrap();
                for h in &self.vertices[v].rotation {
                    let p = self.placement(h.opposite());
                    let want = bv ^ self.sign(h.edge).is_twisted();
                    match bit[p.vertex.0] {
                        None => {
                            bit[p.vertex.0] = Some(want);
                            stack.push(p.vertex.0);
                        }
                        Some(b) if b != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(bit.into_iter().map(|b| b.unwrap()).collect())
    }

    /// An equivalent graph with every edge untwisted, if one exists.
    pub fn normalized(&self) -> Option<RibbonGraph> {
        self.orienting_flips().map(|f| self.flip_vertices(&f))
    }

    /// Orientability through the side graph: two copies `(v, L)` and `(v, R)`
    /// of every vertex, joined across each edge so that an untwisted edge keeps
    /// the copy and a twisted one swaps it. The surface is orientable iff no
    /// vertex has both copies in one connected component.
    pub fn is_orientable(&self) -> bool {
        let n = self.vertices.len();
        let mut uf = petgraph::unionfind::UnionFind::<usize>::new(2 * n);
        for e in self.edge_ids() {
            let (a, b) = self.endpoints(e);
            let twist = usize::from(self.sign(e).is_twisted());
            uf.union(2 * a.0, 2 * b.0 + twist);
            uf.union(2 * a.0 + 1, 2 * b.0 + (1 - twist));
        }
        (0..n).all(|v| !uf.equiv(2 * v, 2 * v + 1))
    }

    pub fn is_isolated(&self, v: VertexId) -> bool {
        self.vertices[v.0].rotation.is_empty()
    }

    pub(crate) fn into_parts(self) -> (Vec<Vertex>, Vec<Edge>) {
        (self.vertices, self.edges)
    }
}
